"""Levelness of lecture hall simplices.

Fast path: with ``r`` the largest ascent count, the simplex is level iff
every inversion sequence ``e`` with ``1 <= asc(e) < r`` can be lifted, i.e.
some single-ascent ``f`` makes ``asc(e + f mod s) = asc(e) + 1``.

Oracle: the socle of the parallelepiped quotient consists of the points
``p`` for which ``p + m`` leaves the parallelepiped for every height-one
point ``m``; the simplex is level iff all socle points share one height.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import geometry
from .eulerian import HStarPolynomial, check_level_inequalities
from .gorenstein import solve_c_chain
from .seqcore import (
    InversionSequence, SSequence, add_mod, all_ascent_counts, as_sequence, coords_of,
    count_ascents, index_of,
)

log = logging.getLogger(__name__)

# cap on (candidates x lifts x n) cells per vectorised block
_BLOCK_CELLS = 1 << 22


@dataclass(frozen=True)
class LevelnessReport:
    s: SSequence
    verdict: bool
    r: int
    witness: Optional[tuple[int, ...]] = None
    witness_stratum: Optional[int] = None
    witnesses: tuple[tuple[int, tuple[int, ...]], ...] = ()
    socle_heights: Optional[tuple[int, ...]] = None
    socle_points: Optional[tuple[tuple[int, ...], ...]] = None
    inequality_violations: tuple[tuple[int, int], ...] = ()
    method: str = ""
    notes: tuple[str, ...] = field(default=())

    def socle_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.socle_heights or ()).items()))

    def to_dict(self):
        return {
            "s": list(self.s.entries),
            "verdict": self.verdict,
            "r": self.r,
            "witness": None if self.witness is None else list(self.witness),
            "witness_stratum": self.witness_stratum,
            "failing_count": len(self.witnesses),
            "socle_heights": (None if self.socle_heights is None
                              else {str(k): v for k, v in self.socle_histogram().items()}),
            "inequality_violations": [list(p) for p in self.inequality_violations],
            "method": self.method,
            "notes": list(self.notes),
        }


def _failing_in_stratum(cands: np.ndarray, lifts: np.ndarray, k: int, s: SSequence,
                        asc: np.ndarray) -> np.ndarray:
    """Mask of rows in ``cands`` that no row of ``lifts`` raises to ``k + 1``."""
    sv = np.array(s.entries, dtype=np.int64)
    if len(lifts) == 0:
        return np.ones(len(cands), dtype=bool)
    per = max(1, _BLOCK_CELLS // (len(lifts) * s.n))
    out = np.empty(len(cands), dtype=bool)
    for a in range(0, len(cands), per):
        block = cands[a:a + per]
        sums = (block[:, None, :] + lifts[None, :, :]) % sv
        hit = asc[index_of(sums, s)] == k + 1
        out[a:a + per] = ~hit.any(axis=1)
    return out


def level_by_inversions(s, budget=None, refute_first: bool = True) -> LevelnessReport:
    """Decide levelness by searching lifts for every mid-stratum sequence.

    Strata are scanned from ``r - 1`` down to 1, lexicographically within a
    stratum; ``witness`` is the first failure in that order and
    ``witnesses`` lists all of them.  The coefficient inequalities run
    first and are recorded; the full search always runs so that a
    negative verdict carries a concrete witness.
    """
    s = as_sequence(s)
    asc = all_ascent_counts(s, budget)
    r = int(asc.max())
    notes = []
    violations = ()
    if refute_first:
        h = HStarPolynomial(tuple(int(c) for c in np.bincount(asc, minlength=s.n + 1)))
        violations = tuple(check_level_inequalities(h))
        if violations:
            notes.append(f"coefficient inequalities fail at {list(violations)}: not level")
    lifts = coords_of(np.flatnonzero(asc == 1), s)
    failing = []
    for k in range(r - 1, 0, -1):
        cands = coords_of(np.flatnonzero(asc == k), s)
        mask = _failing_in_stratum(cands, lifts, k, s, asc)
        failing.extend((k, tuple(int(x) for x in row)) for row in cands[mask])
    verdict = not failing
    if violations and verdict:
        raise AssertionError(f"{s}: inequalities refute levelness but every sequence lifts")
    first = failing[0] if failing else (None, None)
    return LevelnessReport(
        s=s, verdict=verdict, r=r, witness=first[1], witness_stratum=first[0],
        witnesses=tuple(failing), inequality_violations=violations,
        method="inversion-sequence lifts", notes=tuple(notes))


def has_lift(e: InversionSequence) -> bool:
    """Plain-Python check that some single-ascent sequence raises ``asc(e)`` by one."""
    s = e.parent
    for f in itertools.product(*(range(x) for x in s.entries)):
        if count_ascents(f, s.entries) != 1:
            continue
        if add_mod(e, InversionSequence(f, s)).asc == e.asc + 1:
            return True
    return False


def level_by_socle(s, budget=None) -> LevelnessReport:
    """Oracle: compute the socle of the parallelepiped quotient directly."""
    s = as_sequence(s)
    pts = geometry.parallelepiped_array(s, budget)
    heights = pts[:, -1]
    r = int(heights.max())
    ones = pts[heights == 1]
    socle_mask = np.empty(len(pts), dtype=bool)
    if len(ones) == 0:
        socle_mask[:] = True
    else:
        per = max(1, _BLOCK_CELLS // (len(ones) * (s.n + 1)))
        for a in range(0, len(pts), per):
            block = pts[a:a + per]
            sums = block[:, None, :] + ones[None, :, :]
            inside = geometry.in_parallelepiped_array(sums, s)
            socle_mask[a:a + per] = ~inside.any(axis=1)
    socle = pts[socle_mask]
    socle_heights = tuple(int(x) for x in socle[:, -1])
    verdict = len(set(socle_heights)) == 1
    return LevelnessReport(
        s=s, verdict=verdict, r=r,
        socle_heights=socle_heights,
        socle_points=tuple(tuple(int(x) for x in row) for row in socle),
        method="parallelepiped socle")


def is_gorenstein_via_level(s, budget=None) -> bool:
    """Level with a single top-stratum sequence."""
    s = as_sequence(s)
    report = level_by_inversions(s, budget)
    if not report.verdict:
        return False
    asc = all_ascent_counts(s, budget)
    return int(np.count_nonzero(asc == report.r)) == 1


@lru_cache(maxsize=4096)
def _cached_level(entries: tuple[int, ...], budget) -> bool:
    return level_by_inversions(SSequence(entries), budget).verdict


def level_shortcut_prepend_one(s, budget=None) -> Optional[bool]:
    """Strip leading and trailing 1s and decide the core; ``None`` if nothing strips."""
    entries = list(as_sequence(s).entries)
    if len(entries) < 2 or (entries[0] != 1 and entries[-1] != 1):
        return None
    while len(entries) > 1 and entries[0] == 1:
        entries.pop(0)
    while len(entries) > 1 and entries[-1] == 1:
        entries.pop()
    return _cached_level(tuple(entries), budget)


def level_free_product(s, t, s_level: Optional[bool] = None, t_level: Optional[bool] = None,
                       budget=None) -> Optional[bool]:
    """``True`` for ``(s, 1, t)`` when both factors are level, otherwise abstain."""
    s, t = as_sequence(s), as_sequence(t)
    if s_level is None:
        s_level = _cached_level(s.entries, budget)
    if t_level is None:
        t_level = _cached_level(t.entries, budget)
    return True if s_level and t_level else None


def concatenate(s, t) -> SSequence:
    return SSequence(as_sequence(s).entries + (1,) + as_sequence(t).entries)


@dataclass
class CounterexampleScan:
    checked: int
    hypothesis_holds: int
    counterexamples: list

    def rows(self):
        return [{"s": list(r.s.entries), "witness": list(r.witness),
                 "stratum": r.witness_stratum, "c": list(solve_c_chain(r.s))}
                for r in self.counterexamples]


def cone_recurrence_level_scan(sequences: Iterable, budget=None) -> CounterexampleScan:
    """Sequences whose untailed chain is solvable but which are not level."""
    checked = held = 0
    bad = []
    for s in sequences:
        s = as_sequence(s)
        checked += 1
        if solve_c_chain(s) is None:
            continue
        held += 1
        report = level_by_inversions(s, budget)
        if not report.verdict:
            log.warning("cone recurrence holds but %s is not level (witness %s)", s, report.witness)
            bad.append(report)
    return CounterexampleScan(checked, held, bad)
