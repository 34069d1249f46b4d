"""Append-only JSON-lines store of solved search problems."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .problem import SearchResult, as_fraction

DEFAULT_PATH = "kk_cache.jsonl"


def default_cache_path() -> Path:
    return Path(os.environ.get("KK_CACHE", DEFAULT_PATH))


class ResultCache:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_cache_path()

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open() as fh:
            for ln in fh:
                ln = ln.strip()
                if ln:
                    out.append(json.loads(ln))
        return out

    def lookup(self, n: int, t) -> dict | None:
        """Latest certified record for ``(n, t)``."""
        key = as_fraction(t)
        hit = None
        for rec in self.records():
            if rec["n"] == n and as_fraction(rec["t"]) == key and rec.get("certified"):
                hit = rec
        return hit

    def append(self, result: SearchResult) -> dict:
        rec = result.to_record()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
        return rec
