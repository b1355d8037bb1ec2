"""On-disk cache of coefficient tables.

One JSON file per entry::

    {"id": ..., "params": {...}, "version": ..., "checksum": ..., "coeffs": [...]}

Coefficients are decimal strings so arbitrarily large integers survive the
round trip. ``coeffs`` is a flat list for univariate series and a list of
rows (m = 0..M) for crank tables. Writes go to a temporary file that is
renamed into place, so concurrent readers never see a partial file.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .crank_table import crank_table
from .generating import (
    gen_E2,
    gen_p_omega,
    gen_R2,
    gen_SC1_m,
    gen_SC5_m,
    gen_SD_C1,
    gen_SD_C5,
    gen_spt_omega,
)

log = logging.getLogger(__name__)

ENV_VAR = "SPTCRANK_CACHE_DIR"

FUNCTION_IDS = (
    "p_omega",
    "spt_omega",
    "SC1_m",
    "SC5_m",
    "SD_C1_m",
    "SD_C5_m",
    "E2",
    "R2",
    "crank_table_C1",
    "crank_table_C5",
)
NEEDS_M = {"SC1_m", "SC5_m", "SD_C1_m", "SD_C5_m"}
TABLES = {"crank_table_C1": "C1", "crank_table_C5": "C5"}


class InvalidParams(ValueError):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "sptcrank"


def normalize_params(function: str, order: int, m: int | None = None, mmax: int | None = None) -> dict:
    if function not in FUNCTION_IDS:
        raise InvalidParams(f"unknown function {function!r}; choose from {', '.join(FUNCTION_IDS)}")
    if order < 0:
        raise InvalidParams("order must be non-negative")
    params = {"order": int(order)}
    if function in NEEDS_M:
        if m is None:
            raise InvalidParams(f"{function} needs --m")
        if function.startswith("SD") and m < 0:
            raise InvalidParams("crank differences need m >= 0")
        params["m"] = int(m)
    elif m is not None:
        raise InvalidParams(f"{function} takes no m")
    if function in TABLES:
        params["mmax"] = int(order if mmax is None else mmax)
        if params["mmax"] < 0:
            raise InvalidParams("mmax must be non-negative")
    elif mmax is not None:
        raise InvalidParams(f"{function} takes no mmax")
    return params


def compute(function: str, params: dict) -> list:
    """Fresh coefficients as ints (a list, or a list of rows for tables)."""
    order = params["order"]
    if function in TABLES:
        t = crank_table(TABLES[function], order, params["mmax"])
        return [list(r.coeffs) for r in t.rows]
    builders = {
        "p_omega": lambda: gen_p_omega(order),
        "spt_omega": lambda: gen_spt_omega(order),
        "SC1_m": lambda: gen_SC1_m(params["m"], order),
        "SC5_m": lambda: gen_SC5_m(params["m"], order),
        "SD_C1_m": lambda: gen_SD_C1(params["m"], order),
        "SD_C5_m": lambda: gen_SD_C5(params["m"], order),
        "E2": lambda: gen_E2(order),
        "R2": lambda: gen_R2(order),
    }
    if order == 0 and function in ("p_omega", "spt_omega", "R2"):
        return [0]
    return list(builders[function]().coeffs)


def _encode(payload: list) -> list:
    if payload and isinstance(payload[0], list):
        return [[str(c) for c in row] for row in payload]
    return [str(c) for c in payload]


def _decode(payload: list) -> list:
    if payload and isinstance(payload[0], list):
        return [[int(c) for c in row] for row in payload]
    return [int(c) for c in payload]


def checksum(encoded: list) -> str:
    blob = json.dumps(encoded, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    function: str
    params: dict
    coeffs: list
    version: str = __version__

    @property
    def checksum(self) -> str:
        return checksum(_encode(self.coeffs))

    def to_json(self) -> str:
        doc = {
            "id": self.function,
            "params": self.params,
            "version": self.version,
            "checksum": self.checksum,
            "coeffs": _encode(self.coeffs),
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CacheEntry":
        doc = json.loads(text)
        if checksum(doc["coeffs"]) != doc["checksum"]:
            raise ValueError("cache entry checksum mismatch")
        return cls(doc["id"], doc["params"], _decode(doc["coeffs"]), doc["version"])


class Cache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path_for(self, function: str, params: dict) -> Path:
        tag = "_".join(f"{k}{params[k]}" for k in sorted(params))
        return self.directory / f"{function}__{tag}.json"

    def load(self, function: str, params: dict) -> CacheEntry | None:
        path = self.path_for(function, params)
        if not path.exists():
            return None
        try:
            entry = CacheEntry.from_json(path.read_text())
        except (ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if entry.version != __version__ or entry.function != function or entry.params != params:
            return None
        return entry

    def store(self, entry: CacheEntry) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(entry.function, entry.params)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(entry.to_json())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path

    def get(self, function: str, params: dict) -> tuple:
        """(entry, hit) where hit says whether the entry came from disk."""
        entry = self.load(function, params)
        if entry is not None:
            log.info("cache hit: %s %s", function, params)
            return entry, True
        entry = CacheEntry(function, params, compute(function, params))
        self.store(entry)
        log.info("computed and cached: %s %s", function, params)
        return entry, False

    def entries(self) -> list:
        if not self.directory.exists():
            return []
        return sorted(p for p in self.directory.glob("*.json") if not p.name.startswith(".tmp-"))

    def clear(self) -> int:
        paths = self.entries()
        for p in paths:
            p.unlink()
        return len(paths)
