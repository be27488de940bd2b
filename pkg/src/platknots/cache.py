"""Content-addressed on-disk cache of invariant records.

Records are keyed by the sha256 of the freely reduced word and its strand
count, written atomically (temporary file then rename) and sealed with a
checksum of their canonical JSON body.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

from .braid import BraidWord
from .errors import CorruptCache

ENV_VAR = "PLATKNOTS_CACHE_DIR"


def cache_key(w: BraidWord) -> str:
    r = w.reduced()
    text = f"{r.strands}:" + ",".join(str(x) for x in r.letters)
    return hashlib.sha256(text.encode()).hexdigest()


def _canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


def _checksum(record: dict) -> str:
    return hashlib.sha256(_canonical(record)).hexdigest()


def resolve_cache_dir(flag: Optional[str]) -> Optional[Path]:
    """The flag wins over the environment; None disables caching."""
    value = flag or os.environ.get(ENV_VAR)
    return Path(value) if value else None


class Cache:
    def __init__(self, root):
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> Optional[dict]:
        """The stored record, None on a miss; CorruptCache on a bad checksum."""
        path = self._path(key)
        try:
            raw = path.read_bytes()
        except FileNotFoundError:
            return None
        try:
            sealed = json.loads(raw)
            record, checksum = sealed["record"], sealed["checksum"]
        except (ValueError, KeyError, TypeError) as exc:
            raise CorruptCache(f"unreadable cache entry {path.name}") from exc
        if _checksum(record) != checksum:
            raise CorruptCache(f"checksum mismatch in cache entry {path.name}")
        return record

    def put(self, key: str, record: dict) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        body = _canonical({"record": record, "checksum": _checksum(record)})
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(body)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise


def cache_get(cache: Cache, key: str) -> Optional[dict]:
    return cache.get(key)


def cache_put(cache: Cache, key: str, record: dict) -> dict:
    cache.put(key, record)
    return record
