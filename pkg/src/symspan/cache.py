"""On-disk cache of computed D(n) values.

An exact entry is never replaced by a modular one. Reads and writes hold an
exclusive advisory lock on ``<path>.lock``.
"""

from __future__ import annotations

import contextlib
import fcntl
import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator

EXACT = "exact"
MODULAR = "modular-consensus"


@dataclass(frozen=True)
class CacheEntry:
    D: int
    method: str
    primes: tuple[int, ...] = ()
    timestamp: str = ""


@contextlib.contextmanager
def _locked(path: Path) -> Iterator[None]:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(f"{path}.lock", "w") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            yield
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


class DimensionCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def _read(self) -> dict[int, CacheEntry]:
        if not self.path.exists():
            return {}
        doc = json.loads(self.path.read_text() or "{}")
        return {
            int(n): CacheEntry(e["D"], e["method"], tuple(e.get("primes", ())), e.get("timestamp", ""))
            for n, e in doc.get("entries", {}).items()
        }

    def load(self) -> dict[int, CacheEntry]:
        with _locked(self.path):
            return self._read()

    def get(self, n: int, exact_only: bool = False) -> CacheEntry | None:
        entry = self.load().get(n)
        if entry is None or (exact_only and entry.method != EXACT):
            return None
        return entry

    def put(self, n: int, D: int, method: str, primes=()) -> CacheEntry:
        """Store D(n) unless an exact entry already holds it."""
        if method not in (EXACT, MODULAR):
            raise ValueError(f"unknown method {method!r}")
        with _locked(self.path):
            entries = self._read()
            old = entries.get(n)
            if old is not None and old.method == EXACT and method != EXACT:
                return old
            stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
            entries[n] = CacheEntry(D, method, tuple(primes), stamp)
            doc = {"entries": {str(k): {**asdict(v), "primes": list(v.primes)}
                               for k, v in sorted(entries.items())}}
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            tmp.write_text(json.dumps(doc, indent=2) + "\n")
            os.replace(tmp, self.path)
            return entries[n]
