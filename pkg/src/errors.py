"""
errors.py - Exception taxonomy for the filtration engine

Every error carries the exit code the CLI maps it to:
    1 = domain error      (bad input: weight, prime, type)
    2 = resource error    (caps, cache files)
    3 = consistency error (an internal check failed)
"""

from typing import Any, Dict, Optional


class EngineError(Exception):
    """Base class of every error raised by the engine."""

    exit_code = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Structured error object for the error stream."""
        payload = {
            'error': type(self).__name__,
            'exit_code': self.exit_code,
            'message': self.message,
        }
        for key, value in self.details.items():
            payload[key] = _jsonable(value)
        return payload


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (int, str, float, bool)) or value is None:
        return value
    return str(value)


# =============================================================================
# DOMAIN ERRORS (exit code 1)
# =============================================================================

class DomainError(EngineError, ValueError):
    exit_code = 1


class CartanTypeError(DomainError, TypeError):
    """Invalid (family, rank) pair."""

    def __init__(self, family: str, rank: Any):
        super().__init__(f"Invalid Cartan type: ({family!r}, {rank!r})", family=family, rank=rank)
        self.family = family
        self.rank = rank


class RootSystemMismatchError(DomainError):
    pass


# =============================================================================
# RESOURCE ERRORS (exit code 2)
# =============================================================================

class ResourceError(EngineError):
    exit_code = 2


class IntervalCapError(ResourceError):
    """Bruhat interval enumeration went past the configured cap."""

    def __init__(self, cap: int, word: Optional[tuple] = None):
        super().__init__(
            f"Bruhat interval exceeds the interval cap of {cap} elements",
            cap=cap, word=word,
        )
        self.cap = cap


class ScanRegionError(ResourceError):
    pass


class CacheError(ResourceError):
    pass


# =============================================================================
# CONSISTENCY ERRORS (exit code 3)
# =============================================================================

class ConsistencyError(EngineError):
    exit_code = 3


class NegativeMultiplicityError(ConsistencyError):
    """An LCF-assumed irreducible character came out with a negative entry."""

    def __init__(self, weight: tuple, offending: tuple, multiplicity: int):
        super().__init__(
            f"Negative multiplicity {multiplicity} at {offending} in ch L{weight} (LCF-assumed mode)",
            weight=weight, offending_weight=offending, multiplicity=multiplicity,
        )
        self.weight = weight
        self.offending = offending


class DecompositionError(ConsistencyError):
    """Greedy decomposition got stuck; the residual is attached."""

    def __init__(self, message: str, residual: Dict[tuple, int]):
        super().__init__(message, residual={','.join(map(str, k)): v for k, v in sorted(residual.items())})
        self.residual = residual
