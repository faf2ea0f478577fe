"""Content-addressed JSON result store.

Keys are sha256 digests of the canonical JSON encoding of a config.  Writes
go through a temporary file and ``os.replace`` so concurrent writers never
leave a half-written entry behind.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any

log = logging.getLogger(__name__)

CACHE_ENV = "SATAKE_KIT_CACHE_DIR"


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def cache_key(config: Any) -> str:
    return hashlib.sha256(canonical_json(config).encode()).hexdigest()


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "satake-kit"


class ResultCache:
    """A directory of ``<sha256>.json`` files; ``enabled=False`` turns every lookup into a miss."""

    def __init__(self, directory: str | os.PathLike | None = None, enabled: bool = True) -> None:
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def lookup(self, config: Any) -> Any | None:
        if not self.enabled:
            return None
        key = cache_key(config)
        path = self._path(key)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None
        try:
            entry = json.loads(text)
            if entry["key"] != key:
                raise ValueError("key mismatch")
            return entry["payload"]
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupt cache entry %s (%s); recomputing", path, exc)
            return None

    def store(self, config: Any, payload: Any) -> None:
        if not self.enabled:
            return
        key = cache_key(config)
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(canonical_json({"key": key, "config": config, "payload": payload}))
            os.replace(tmp, self._path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, config: Any, compute) -> Any:
        hit = self.lookup(config)
        if hit is not None:
            return hit
        payload = compute()
        self.store(config, payload)
        return payload
