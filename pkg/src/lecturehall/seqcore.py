"""Positive integer sequences, their inversion sequences and ascent statistics.

An inversion sequence for ``s = (s_1, ..., s_n)`` is an integer tuple ``e``
with ``0 <= e_i < s_i``.  Position ``i`` (0-based, ``0 <= i < n``) is an
ascent of ``e`` when ``e_i / s_i < e_{i+1} / s_{i+1}``, read with the
virtual prefix ``e_0 = 0, s_0 = 1``.  All ratio comparisons are done by
integer cross-multiplication.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .config import check_budget
from .errors import SequenceError

# int64 products e_i * s_j stay exact while max(s)**2 is below this bound
_INT64_SAFE = 2**62

# rows of the index grid materialised at once by the vectorised helpers
CHUNK = 1 << 18


@dataclass(frozen=True)
class SSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if len(entries) < 1:
            raise SequenceError("a sequence needs at least one entry")
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise SequenceError(f"entries must be integers, got {x!r}")
            if x < 1:
                raise SequenceError(f"entries must be positive, got {x}")
        object.__setattr__(self, "entries", tuple(int(x) for x in entries))

    @classmethod
    def parse(cls, text: str) -> "SSequence":
        """Parse ``"2,3,5,9"`` (whitespace around commas is tolerated)."""
        parts = [p.strip() for p in text.strip().split(",")]
        if not parts or any(p == "" for p in parts):
            raise SequenceError(f"cannot parse sequence {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise SequenceError(f"non-integer entry in {text!r}") from None
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return ",".join(map(str, self.entries))

    @property
    def product(self) -> int:
        return math.prod(self.entries)

    def reversed(self) -> "SSequence":
        return SSequence(self.entries[::-1])

    def vertices(self) -> list[tuple[int, ...]]:
        """Vertices ``v_0 = 0`` and ``v_i = (0, .., 0, s_i, .., s_n)``."""
        n = self.n
        out = [(0,) * n]
        for i in range(n):
            out.append((0,) * i + self.entries[i:])
        return out


def as_sequence(s) -> SSequence:
    if isinstance(s, SSequence):
        return s
    if isinstance(s, str):
        return SSequence.parse(s)
    return SSequence(tuple(s))


@dataclass(frozen=True)
class InversionSequence:
    entries: tuple[int, ...]
    parent: SSequence
    _ascents: frozenset = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        parent = as_sequence(self.parent)
        object.__setattr__(self, "parent", parent)
        if len(entries) != parent.n:
            raise SequenceError(
                f"inversion sequence of length {len(entries)} for n={parent.n}")
        for e, s in zip(entries, parent.entries):
            if not 0 <= e < s:
                raise SequenceError(f"{entries} violates 0 <= e_i < s_i for s={parent}")
        computed = frozenset(_ascent_positions(entries, parent.entries))
        if self._ascents is not None and frozenset(self._ascents) != computed:
            raise SequenceError("cached ascent set does not match entries")
        object.__setattr__(self, "_ascents", computed)

    @classmethod
    def zero(cls, s) -> "InversionSequence":
        s = as_sequence(s)
        return cls((0,) * s.n, s)

    @property
    def ascents(self) -> frozenset:
        return self._ascents

    @property
    def asc(self) -> int:
        return len(self._ascents)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def _ascent_positions(e, s) -> list[int]:
    out = []
    prev_e, prev_s = 0, 1
    for i, (x, y) in enumerate(zip(e, s)):
        if prev_e * y < x * prev_s:
            out.append(i)
        prev_e, prev_s = x, y
    return out


def count_ascents(e, s) -> int:
    """Ascent count of the raw tuple ``e`` against raw ``s`` (no validation)."""
    c = 0
    prev_e, prev_s = 0, 1
    for x, y in zip(e, s):
        if prev_e * y < x * prev_s:
            c += 1
        prev_e, prev_s = x, y
    return c


def ascent_set(e: InversionSequence) -> frozenset:
    return frozenset(_ascent_positions(e.entries, e.parent.entries))


def enumerate_inversion_sequences(s, budget=None) -> Iterator[InversionSequence]:
    """Yield every inversion sequence of ``s`` once, in lexicographic order."""
    s = as_sequence(s)
    check_budget(s.product, budget, "inversion sequence enumeration")
    for e in itertools.product(*(range(x) for x in s.entries)):
        yield InversionSequence(e, s)


def stratify_by_ascents(s, budget=None) -> dict[int, list[InversionSequence]]:
    strata: dict[int, list[InversionSequence]] = {}
    for e in enumerate_inversion_sequences(s, budget):
        strata.setdefault(e.asc, []).append(e)
    return dict(sorted(strata.items()))


def add_mod(e: InversionSequence, f: InversionSequence) -> InversionSequence:
    """Componentwise ``(e_i + f_i) mod s_i`` with representatives in ``[0, s_i)``."""
    if e.parent != f.parent:
        raise SequenceError(f"cannot add inversion sequences of {e.parent} and {f.parent}")
    s = e.parent.entries
    return InversionSequence(tuple((a + b) % m for a, b, m in zip(e.entries, f.entries, s)),
                             e.parent)


# vectorised helpers used by the bulk paths in eulerian and level

def int64_safe(s) -> bool:
    return max(as_sequence(s).entries) ** 2 < _INT64_SAFE


def strides(s) -> np.ndarray:
    """Mixed-radix place values; the last coordinate varies fastest."""
    entries = as_sequence(s).entries
    out = [1] * len(entries)
    for i in range(len(entries) - 2, -1, -1):
        out[i] = out[i + 1] * entries[i + 1]
    return np.array(out, dtype=np.int64)


def coords_of(index: np.ndarray, s) -> np.ndarray:
    """Rows of inversion sequences at lexicographic positions ``index``."""
    sv = np.array(as_sequence(s).entries, dtype=np.int64)
    return (np.asarray(index, dtype=np.int64)[:, None] // strides(s)[None, :]) % sv[None, :]


def index_of(coords: np.ndarray, s) -> np.ndarray:
    return coords @ strides(s)


def ascent_counts_array(coords: np.ndarray, s) -> np.ndarray:
    """Ascent counts of the rows of ``coords`` (shape ``(..., n)``)."""
    s = as_sequence(s)
    if not int64_safe(s):
        raise OverflowError(f"entries of {s} too large for int64 cross-multiplication")
    sv = np.array(s.entries, dtype=np.int64)
    prev_e = np.concatenate([np.zeros_like(coords[..., :1]), coords[..., :-1]], axis=-1)
    prev_s = np.concatenate([[1], sv[:-1]])
    return np.count_nonzero(prev_e * sv < coords * prev_s, axis=-1)


def all_ascent_counts(s, budget=None) -> np.ndarray:
    """Ascent count of every inversion sequence of ``s`` in lexicographic order."""
    s = as_sequence(s)
    total = s.product
    check_budget(total, budget, "inversion sequence enumeration")
    out = np.empty(total, dtype=np.int8 if s.n < 127 else np.int32)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        out[start:start + len(idx)] = ascent_counts_array(coords_of(idx, s), s)
    return out


def iter_sequences(values: Iterable[int], min_len: int, max_len: int) -> Iterator[SSequence]:
    """All sequences with entries from ``values`` and length in ``[min_len, max_len]``."""
    values = list(values)
    for n in range(min_len, max_len + 1):
        for t in itertools.product(values, repeat=n):
            yield SSequence(t)
