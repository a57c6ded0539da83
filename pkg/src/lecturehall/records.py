"""Run configuration and the serialisable per-sequence scan record."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .config import resolve_budget

FORMATS = ("text", "json", "csv")

CSV_COLUMNS = ("s", "n", "hstar", "r", "palindromic", "gorenstein", "c", "d",
               "level", "witness", "runtime_ms", "error")


@dataclass(frozen=True)
class RunConfig:
    fmt: str = "text"
    budget: Optional[int] = None
    workers: int = 1
    seed: Optional[int] = None

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        object.__setattr__(self, "budget", resolve_budget(self.budget))


def _tuple_or_none(x):
    return None if x is None else tuple(x)


@dataclass(frozen=True)
class ScanRecord:
    s: tuple[int, ...]
    n: int
    hstar: Optional[tuple[int, ...]] = None
    r: Optional[int] = None
    palindromic: Optional[bool] = None
    gorenstein: Optional[bool] = None
    c: Optional[tuple[int, ...]] = None
    d: Optional[tuple[int, ...]] = None
    level: Optional[bool] = None
    witness: Optional[tuple[int, ...]] = None
    witness_stratum: Optional[int] = None
    cone_chain: Optional[bool] = None
    two_chain: Optional[bool] = None
    runtime_ms: Optional[float] = None
    error: Optional[str] = None

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("s", "hstar", "c", "d", "witness"):
            if out[key] is not None:
                out[key] = list(out[key])
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ScanRecord":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown record fields {sorted(extra)}")
        kw = dict(data)
        for key in ("s", "hstar", "c", "d", "witness"):
            kw[key] = _tuple_or_none(kw.get(key))
        return cls(**kw)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ScanRecord":
        return cls.from_dict(json.loads(text))

    def without_timing(self) -> "ScanRecord":
        return ScanRecord(**{**self.__dict__, "runtime_ms": None})

    def csv_row(self) -> list[str]:
        return [
            _join(self.s), str(self.n), _join(self.hstar), _opt(self.r),
            _bool(self.palindromic), _bool(self.gorenstein), _join(self.c), _join(self.d),
            _bool(self.level), _witness(self), _opt(self.runtime_ms), self.error or "",
        ]


def _join(xs):
    return "" if xs is None else ";".join(map(str, xs))


def _opt(x):
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.3f}"
    return str(x)


def _bool(x):
    return "" if x is None else ("true" if x else "false")


def _witness(rec: ScanRecord):
    if rec.witness is None:
        return ""
    return f"{rec.witness_stratum}:{_join(rec.witness)}"
