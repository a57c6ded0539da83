"""Exact lattice-point geometry of the lecture hall simplex.

``P(s) = {x : 0 <= x_1/s_1 <= ... <= x_n/s_n <= 1}`` with vertices
``v_0 = 0`` and ``v_i = (0, .., 0, s_i, .., s_n)``.  Everything here works
directly on lattice points and never consults inversion sequences, so it
serves as the independent oracle for the faster paths elsewhere.

The half-open fundamental parallelepiped is the set of
``sum_i eta_i (v_i, 1)`` with ``0 <= eta_i < 1``.  For an integer point
``(lam, k)`` the coordinates are

    eta_j = lam_j/s_j - lam_{j-1}/s_{j-1}    (1 <= j <= n, lam_0/s_0 = 0)
    eta_0 = k - lam_n/s_n
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .config import check_budget
from .seqcore import InversionSequence, SSequence, as_sequence, int64_safe


@dataclass(frozen=True)
class LatticePoint:
    coords: tuple[int, ...]
    ambient: SSequence

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        object.__setattr__(self, "ambient", as_sequence(self.ambient))
        if len(self.coords) != self.ambient.n:
            raise ValueError(f"point {self.coords} has wrong length for n={self.ambient.n}")


@dataclass(frozen=True)
class ParallelepipedPoint:
    coords: tuple[int, ...]
    height: int
    eta: tuple[Fraction, ...]
    ambient: SSequence

    def __post_init__(self):
        s = self.ambient.entries
        if len(self.eta) != len(s) + 1:
            raise ValueError("eta must have n+1 entries")
        if not all(0 <= x < 1 for x in self.eta):
            raise ValueError(f"eta {self.eta} outside [0, 1)")
        partial = Fraction(0)
        for j, sj in enumerate(s):
            partial += self.eta[j + 1]
            if self.coords[j] != sj * partial:
                raise ValueError(f"coordinate {j + 1} inconsistent with eta")
        if self.height != sum(self.eta):
            raise ValueError("height inconsistent with eta")

    def as_tuple(self) -> tuple[int, ...]:
        return self.coords + (self.height,)


def _coords(lam):
    return tuple(lam.coords) if isinstance(lam, LatticePoint) else tuple(lam)


def contains_dilate(s, lam, t: int) -> bool:
    """True iff ``0 <= lam_1/s_1 <= ... <= lam_n/s_n <= t``."""
    s = as_sequence(s).entries
    lam = _coords(lam)
    if len(lam) != len(s):
        raise ValueError("point and sequence lengths differ")
    prev_l, prev_s = 0, 1
    for x, y in zip(lam, s):
        if x * prev_s < prev_l * y:
            return False
        prev_l, prev_s = x, y
    return prev_l <= t * prev_s


def _ceil_div(a, b):
    return -((-a) // b)


def _box_size(s, t):
    return math.prod(t * x + 1 for x in s)


def iter_dilate_points(s, t: int, budget=None) -> Iterator[tuple[int, ...]]:
    """Lattice points of ``t P(s)`` in lexicographic order."""
    s = as_sequence(s).entries
    n = len(s)
    check_budget(_box_size(s, t), budget, "dilate enumeration")
    lam = [0] * n

    def rec(j, prev_l, prev_s):
        lo = _ceil_div(prev_l * s[j], prev_s)
        for x in range(lo, t * s[j] + 1):
            lam[j] = x
            if j == n - 1:
                yield tuple(lam)
            else:
                yield from rec(j + 1, x, s[j])

    yield from rec(0, 0, 1)


def count_dilate_points(s, t: int, budget=None) -> int:
    """``#(t P(s) cap Z^n)`` by pruned nested enumeration."""
    s = as_sequence(s).entries
    n = len(s)
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    check_budget(_box_size(s, t), budget, "dilate enumeration")

    def rec(j, prev_l, prev_s):
        lo = _ceil_div(prev_l * s[j], prev_s)
        hi = t * s[j]
        if j == n - 1:
            return max(0, hi - lo + 1)
        return sum(rec(j + 1, x, s[j]) for x in range(lo, hi + 1))

    return rec(0, 0, 1)


def count_interior_points(s, t: int, budget=None) -> int:
    """Points with ``0 < lam_1/s_1 < ... < lam_n/s_n < t``."""
    s = as_sequence(s).entries
    n = len(s)
    if t < 1:
        raise ValueError("dilation factor must be positive")
    check_budget(_box_size(s, t), budget, "interior enumeration")

    def rec(j, prev_l, prev_s):
        lo = prev_l * s[j] // prev_s + 1
        hi = t * s[j] - 1
        if j == n - 1:
            return max(0, hi - lo + 1)
        return sum(rec(j + 1, x, s[j]) for x in range(lo, hi + 1))

    return rec(0, 0, 1)


def solve_eta(s, lam, k) -> tuple[Fraction, ...]:
    """Barycentric coordinates ``(eta_0, .., eta_n)`` of ``(lam, k)``."""
    s = as_sequence(s).entries
    lam = _coords(lam)
    etas = []
    prev = Fraction(0)
    for x, y in zip(lam, s):
        cur = Fraction(x, y)
        etas.append(cur - prev)
        prev = cur
    return (Fraction(k) - prev,) + tuple(etas)


def parallelepiped_membership(s, lam, k) -> Optional[ParallelepipedPoint]:
    s = as_sequence(s)
    lam = _coords(lam)
    if len(lam) != s.n:
        raise ValueError("point and sequence lengths differ")
    eta = solve_eta(s, lam, k)
    if all(0 <= x < 1 for x in eta):
        return ParallelepipedPoint(lam, int(k), eta, s)
    return None


def in_parallelepiped(s, lam, k) -> bool:
    """Integer form of the half-open test (denominators cleared)."""
    s = as_sequence(s).entries
    prev_l, prev_s = 0, 1
    for x, y in zip(_coords(lam), s):
        d = x * prev_s - prev_l * y
        if d < 0 or d >= prev_s * y:
            return False
        prev_l, prev_s = x, y
    d = k * prev_s - prev_l
    return 0 <= d < prev_s


def in_parallelepiped_array(points: np.ndarray, s) -> np.ndarray:
    """Vectorised :func:`in_parallelepiped` over rows ``(lam_1..lam_n, k)``."""
    s = as_sequence(s)
    if not int64_safe(s):
        raise OverflowError(f"entries of {s} too large for int64 cross-multiplication")
    sv = np.array(s.entries, dtype=np.int64)
    lam = points[..., :-1]
    k = points[..., -1]
    prev_l = np.concatenate([np.zeros_like(lam[..., :1]), lam[..., :-1]], axis=-1)
    prev_s = np.concatenate([[1], sv[:-1]])
    d = lam * prev_s - prev_l * sv
    ok = np.all((d >= 0) & (d < prev_s * sv), axis=-1)
    d0 = k * sv[-1] - lam[..., -1]
    return ok & (d0 >= 0) & (d0 < sv[-1])


def parallelepiped_array(s, budget=None) -> np.ndarray:
    """All integer points of the parallelepiped as rows ``(lam, k)``.

    Rows are sorted by height, then lexicographically.  Each coordinate is
    grown from the admissible window implied by ``0 <= eta_j < 1`` and the
    full half-open test is applied to the finished rows.
    """
    s = as_sequence(s)
    check_budget(s.product, budget, "parallelepiped enumeration")
    if not int64_safe(s):
        raise OverflowError(f"entries of {s} too large for int64 cross-multiplication")
    rows = np.zeros((1, 0), dtype=np.int64)
    prev_s = 1
    for sj in s.entries:
        prev_l = rows[:, -1] if rows.shape[1] else np.zeros(len(rows), dtype=np.int64)
        lo = -((-prev_l * sj) // prev_s)
        cand = lo[:, None] + np.arange(sj + 1, dtype=np.int64)[None, :]
        d = cand * prev_s - prev_l[:, None] * sj
        keep = (d >= 0) & (d < prev_s * sj)
        parent = np.repeat(np.arange(len(rows)), keep.sum(axis=1))
        rows = np.concatenate([rows[parent], cand[keep][:, None]], axis=1)
        prev_s = sj
    k = -((-rows[:, -1]) // prev_s)
    pts = np.concatenate([rows, k[:, None]], axis=1)
    pts = pts[in_parallelepiped_array(pts, s)]
    order = np.lexsort(tuple(pts[:, j] for j in range(pts.shape[1] - 2, -1, -1)) + (pts[:, -1],))
    return pts[order]


def enumerate_parallelepiped(s, budget=None) -> Iterator[ParallelepipedPoint]:
    """Every parallelepiped point with its exact eta, by ascending height."""
    s = as_sequence(s)
    for row in parallelepiped_array(s, budget):
        p = parallelepiped_membership(s, tuple(int(x) for x in row[:-1]), int(row[-1]))
        if p is None:
            raise AssertionError(f"integer and rational membership disagree at {row}")
        yield p


def parallelepiped_heights(s, budget=None) -> list[int]:
    """Number of parallelepiped points at each height ``0..n``."""
    s = as_sequence(s)
    pts = parallelepiped_array(s, budget)
    counts = np.bincount(pts[:, -1], minlength=s.n + 1)
    return [int(c) for c in counts]


def map_point_to_inversion(p) -> InversionSequence:
    s = p.ambient
    return InversionSequence(tuple((-x) % y for x, y in zip(p.coords, s.entries)), s)


def map_inversion_to_point(e: InversionSequence) -> ParallelepipedPoint:
    """``lam_j = l * s_j - e_j`` where ``l`` counts ascents at positions ``< j``."""
    s = e.parent
    asc = e.ascents
    lam = []
    level = 0
    for j in range(s.n):
        # 0-based position j is an ascent into coordinate j+1
        if j in asc:
            level += 1
        lam.append(level * s.entries[j] - e.entries[j])
    p = parallelepiped_membership(s, lam, e.asc)
    if p is None:
        raise AssertionError(f"image of {e} is not in the parallelepiped")
    return p


def height1_bijection(s, budget=None) -> dict[tuple[int, ...], InversionSequence]:
    """``lam -> ((s_i - lam_i) mod s_i)`` on the non-vertex lattice points of P."""
    s = as_sequence(s)
    vertices = set(s.vertices())
    out = {}
    for lam in iter_dilate_points(s, 1, budget):
        if lam in vertices:
            continue
        out[lam] = InversionSequence(tuple((y - x) % y for x, y in zip(lam, s.entries)), s)
    return out


def idp_failures(s, t: int, budget=None) -> list[tuple[int, ...]]:
    """Points of ``t P`` that are not a sum of ``t`` lattice points of ``P``."""
    s = as_sequence(s)
    base = list(iter_dilate_points(s, 1, budget))
    sums = set(base)
    for _ in range(t - 1):
        check_budget(len(sums) * len(base), budget, "sumset")
        sums = {tuple(a + b for a, b in zip(x, y)) for x in sums for y in base}
    return [lam for lam in iter_dilate_points(s, t, budget) if lam not in sums]
