"""
console.py - Status output for operators

Everything here goes to standard error and only when verbose mode is on;
standard output is reserved for reports.
"""

import sys
from typing import TextIO

_state = {'verbose': False, 'stream': None}


def set_verbose(enabled: bool, stream: TextIO = None) -> None:
    _state['verbose'] = bool(enabled)
    _state['stream'] = stream


def _stream() -> TextIO:
    return _state['stream'] or sys.stderr


def status(message: str) -> None:
    """One status line, e.g. '  ✅ done'."""
    if _state['verbose']:
        print(message, file=_stream())


def print_header(title: str) -> None:
    """Print a section header."""
    if not _state['verbose']:
        return
    out = _stream()
    print(file=out)
    print("=" * 70, file=out)
    print(f"  {title}", file=out)
    print("=" * 70, file=out)


def print_step(num: int, title: str) -> None:
    """Print a step header."""
    if not _state['verbose']:
        return
    out = _stream()
    print(file=out)
    print("─" * 70, file=out)
    print(f"  STEP {num}: {title}", file=out)
    print("─" * 70, file=out)
