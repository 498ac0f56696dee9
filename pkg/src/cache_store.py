"""
cache_store.py - Save and load the KL memo table as JSON

One file per affine type (kl_A2.json, ...) in the cache directory:

    {"version": 1, "coxeter_type": "A2~",
     "entries": [{"y": [...], "x": [...], "coeffs": [...]}, ...]}

Loading validates every entry before anything is merged into the table, so
a bad file is rejected as a whole. Writes go to a temp file in the same
directory and are moved into place with os.replace.
"""

import json
import os
import tempfile
from pathlib import Path
from typing import List, Tuple, Union

from alcove import bruhat_leq, from_word, length, reduced_word
from console import status
from errors import CacheError, EngineError
from klpoly import KLTable
from rootdata import CartanType

CACHE_VERSION = 1


class KLCacheHandler:
    """Handles saving and loading KL tables from the filesystem"""

    def __init__(self, cache_dir: Union[str, Path] = "data/kl_cache"):
        self.cache_dir = Path(cache_dir)

    def path_for(self, cartan_type: CartanType) -> Path:
        return self.cache_dir / f"kl_{cartan_type}.json"

    def save_table(self, table: KLTable) -> str:
        """Write the table atomically. Returns the path."""
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise CacheError(f"Cannot create cache directory {self.cache_dir}: {e}", path=str(self.cache_dir))
        return cache_store(table, self.path_for(table.cartan_type))

    def load_table(self, table: KLTable) -> int:
        """Merge the cached entries for this type; a missing file is not an error."""
        path = self.path_for(table.cartan_type)
        if not path.exists():
            status(f"  📂 No KL cache yet at: {path}")
            return 0
        return cache_load(table, path)

    def list_cache_files(self) -> List[str]:
        if not self.cache_dir.exists():
            return []
        return sorted(f.name for f in self.cache_dir.glob("kl_*.json"))


# =============================================================================
# DOCUMENT FORMAT
# =============================================================================

def table_document(table: KLTable) -> dict:
    return {
        'version': CACHE_VERSION,
        'coxeter_type': table.coxeter_type,
        'entries': [
            {'y': list(y), 'x': list(x), 'coeffs': list(coeffs)}
            for y, x, coeffs in table.entries()
        ],
    }


def _int_list(value, path: Path, what: str) -> Tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise CacheError(f"Corrupted KL cache {path}: {what} is not a list of integers", path=str(path))
    return tuple(value)


def validate_document(document, table: KLTable, path: Path) -> List[Tuple[tuple, tuple, tuple]]:
    """Check a parsed cache document against the KL invariants; returns the entries."""
    if not isinstance(document, dict):
        raise CacheError(f"Corrupted KL cache {path}: top level is not an object", path=str(path))
    if document.get('version') != CACHE_VERSION:
        raise CacheError(
            f"KL cache {path} has version {document.get('version')!r}, expected {CACHE_VERSION}",
            path=str(path), version=document.get('version'),
        )
    if document.get('coxeter_type') != table.coxeter_type:
        raise CacheError(
            f"KL cache {path} is for {document.get('coxeter_type')!r}, not {table.coxeter_type}",
            path=str(path),
        )
    raw = document.get('entries')
    if not isinstance(raw, list):
        raise CacheError(f"Corrupted KL cache {path}: 'entries' is not a list", path=str(path))

    t = table.cartan_type
    entries = []
    for number, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise CacheError(f"Corrupted KL cache {path}: entry {number} is not an object", path=str(path))
        y_word = _int_list(entry.get('y'), path, f"entry {number} 'y'")
        x_word = _int_list(entry.get('x'), path, f"entry {number} 'x'")
        coeffs = _int_list(entry.get('coeffs'), path, f"entry {number} 'coeffs'")
        try:
            y = from_word(t, y_word)
            x = from_word(t, x_word)
        except EngineError:
            raise CacheError(f"Corrupted KL cache {path}: entry {number} has a bad wall index", path=str(path))
        if reduced_word(y) != y_word or reduced_word(x) != x_word:
            raise CacheError(f"Corrupted KL cache {path}: entry {number} words are not canonical", path=str(path))
        if y == x or not bruhat_leq(y, x):
            raise CacheError(f"Corrupted KL cache {path}: entry {number} has y not below x", path=str(path))
        bound = (length(x) - length(y) - 1) // 2
        if not coeffs or coeffs[0] != 1 or coeffs[-1] == 0 or len(coeffs) - 1 > bound:
            raise CacheError(
                f"Corrupted KL cache {path}: entry {number} breaks the constant-term or degree bound",
                path=str(path),
            )
        entries.append((y_word, x_word, coeffs))
    return entries


# =============================================================================
# LOAD / STORE
# =============================================================================

def cache_store(table: KLTable, path: Union[str, Path]) -> str:
    path = Path(path)
    document = table_document(table)
    try:
        fd, tmp_name = tempfile.mkstemp(prefix=path.name + '.', suffix='.tmp', dir=str(path.parent))
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                json.dump(document, f, indent=1, sort_keys=True)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    except OSError as e:
        raise CacheError(f"Cannot write KL cache {path}: {e}", path=str(path))
    status(f"  💾 Saved {len(document['entries'])} KL entries to: {path}")
    return str(path)


def cache_load(table: KLTable, path: Union[str, Path]) -> int:
    """Validate the whole file, then merge. Returns the number of new entries."""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            document = json.load(f)
    except FileNotFoundError:
        raise CacheError(f"KL cache not found: {path}", path=str(path))
    except (OSError, ValueError) as e:
        raise CacheError(f"Cannot read KL cache {path}: {e}", path=str(path))
    entries = validate_document(document, table, path)
    added = table.load_entries(entries)
    status(f"  📂 Loaded {len(entries)} KL entries ({added} new) from: {path}")
    return added
