"""The h*-polynomial of a lecture hall simplex and tests on its coefficients.

Two independent routes compute the same vector: counting inversion
sequences by ascents, and counting parallelepiped points by height.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from . import geometry
from .seqcore import all_ascent_counts, as_sequence

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HStarPolynomial:
    """Coefficients ``h*_0 .. h*_n`` of a simplex of dimension ``n``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("need at least h*_0")
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        r = 0
        for i, c in enumerate(self.coeffs):
            if c:
                r = i
        return r

    @property
    def trimmed(self) -> tuple[int, ...]:
        return self.coeffs[: self.degree + 1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"

    def validate(self, s=None):
        """Check the structural invariants; internal zeros are only logged."""
        if self.coeffs[0] != 1:
            raise ValueError(f"h*_0 = {self.coeffs[0]}, expected 1")
        if s is not None:
            s = as_sequence(s)
            if sum(self.coeffs) != s.product:
                raise ValueError(f"coefficients sum to {sum(self.coeffs)}, expected {s.product}")
        gaps = internal_zeros(self)
        if gaps:
            log.warning("internal zeros at %s in h* = %s (s=%s)", gaps, self, s)
        return gaps


def internal_zeros(h: HStarPolynomial) -> list[int]:
    return [i for i in range(h.degree) if h.coeffs[i] == 0]


def hstar_by_ascents(s, budget=None) -> HStarPolynomial:
    """``coeffs[k]`` = number of inversion sequences with ``k`` ascents."""
    s = as_sequence(s)
    counts = np.bincount(all_ascent_counts(s, budget), minlength=s.n + 1)
    return HStarPolynomial(tuple(int(c) for c in counts))


def hstar_by_parallelepiped(s, budget=None) -> HStarPolynomial:
    """``coeffs[k]`` = number of parallelepiped lattice points at height ``k``."""
    return HStarPolynomial(tuple(geometry.parallelepiped_heights(s, budget)))


def is_palindromic(h: HStarPolynomial) -> bool:
    c = h.trimmed
    return c == c[::-1]


def is_unimodal(h: HStarPolynomial) -> bool:
    c = h.trimmed
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i == len(c) - 1


def check_level_inequalities(h: HStarPolynomial) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``h*_{i+j} > 0`` but ``h*_i > h*_j * h*_{i+j}``.

    A level simplex has none, so a nonempty result refutes levelness.
    """
    r = h.degree
    out = []
    for i in range(r + 1):
        for j in range(r + 1 - i):
            top = h[i + j]
            if top > 0 and h[i] > h[j] * top:
                out.append((i, j))
    return out


def ehrhart_series_expand(h: HStarPolynomial, t_max: int, dim: int | None = None) -> list[int]:
    """Lattice point counts ``i(P, 0..t_max)`` from ``h*(z) / (1 - z)^(dim+1)``."""
    d = h.dim if dim is None else dim
    out = []
    for t in range(t_max + 1):
        out.append(sum(c * comb(t - k + d, d) for k, c in enumerate(h.coeffs) if k <= t))
    return out
