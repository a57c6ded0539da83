"""Published reference values and the checks that recompute them."""
from __future__ import annotations

from dataclasses import dataclass

from .eulerian import check_level_inequalities, hstar_by_ascents
from .geometry import count_interior_points
from .gorenstein import is_gorenstein, solve_c_chain
from .level import level_by_inversions
from .seqcore import SSequence

# (label, s, c, d, h*) for thirteen palindromic examples
PALINDROMIC_ROWS = (
    ("i", (2, 1, 3, 2, 1), (1, 1, 4, 3, 2), (1, 3, 5, 2, 5), (1, 5, 5, 1)),
    ("ii", (3, 2, 3, 1, 2), (1, 1, 2, 1, 3), (1, 1, 4, 3, 5), (1, 9, 16, 9, 1)),
    ("iii", (1, 4, 3, 2, 3), (1, 5, 4, 3, 5), (1, 1, 2, 3, 1), (1, 16, 38, 16, 1)),
    ("iv", (3, 5, 2, 3, 1), (1, 2, 1, 2, 1), (1, 4, 3, 8, 5), (1, 20, 48, 20, 1)),
    ("v", (1, 2, 3, 4, 5), (1, 3, 5, 7, 9), (1, 1, 1, 1, 1), (1, 26, 66, 26, 1)),
    ("vi", (1, 2, 5, 8, 3), (1, 3, 8, 13, 5), (1, 3, 2, 1, 1), (1, 50, 138, 50, 1)),
    ("vii", (4, 3, 2, 5, 3), (1, 1, 1, 3, 2), (1, 2, 1, 2, 3), (1, 30, 149, 149, 30, 1)),
    ("viii", (4, 7, 3, 2, 3), (1, 2, 1, 1, 2), (1, 1, 2, 5, 3), (1, 43, 208, 208, 43, 1)),
    ("ix", (5, 9, 4, 3, 2), (1, 2, 1, 1, 1), (1, 2, 3, 7, 6), (1, 82, 457, 457, 82, 1)),
    ("x", (3, 5, 12, 7, 2), (1, 2, 5, 3, 1), (1, 4, 7, 3, 2), (1, 175, 1084, 1084, 175, 1)),
    ("xi", (3, 11, 8, 5, 2), (1, 4, 3, 2, 1), (1, 3, 5, 7, 2), (1, 180, 1139, 1139, 180, 1)),
    ("xii", (2, 7, 5, 10, 4), (1, 4, 3, 7, 3), (1, 3, 2, 3, 1), (1, 181, 1218, 1218, 181, 1)),
    ("xiii", (3, 8, 13, 5, 2), (1, 3, 5, 2, 1), (1, 3, 8, 5, 2), (1, 213, 1346, 1346, 213, 1)),
)

NON_LEVEL_EXAMPLE = (2, 3, 5, 9)
NON_LEVEL_HSTAR = (1, 48, 154, 66, 1)
NON_LEVEL_WITNESS = (1, 1, 2, 4)
NON_LEVEL_STRATUM = 3

TRUNCATION_GORENSTEIN = (8, 6, 10, 10, 5, 2, 4)
TRUNCATION_NOT_GORENSTEIN = (8, 6, 10, 10, 5)
TRUNCATION_INTERIOR = 39


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        if self.ok:
            return f"{status}  {self.name}"
        return f"{status}  {self.name}: expected {self.expected!r}, got {self.actual!r}"


def row_checks(budget=None) -> list[Check]:
    out = []
    for label, s, c, d, h in PALINDROMIC_ROWS:
        seq = SSequence(s)
        actual = (hstar_by_ascents(seq, budget).trimmed, solve_c_chain(seq),
                  solve_c_chain(seq.reversed()), is_gorenstein(seq)[0])
        out.append(Check(f"row ({label}) s={seq}", (h, c, d, True), actual))
    return out


def named_checks(budget=None) -> list[Check]:
    s = SSequence(NON_LEVEL_EXAMPLE)
    h = hstar_by_ascents(s, budget)
    report = level_by_inversions(s, budget)
    failing = set(report.witnesses)
    return [
        Check(f"h*({s})", NON_LEVEL_HSTAR, h.trimmed),
        Check(f"level({s})", False, report.verdict),
        Check(f"{NON_LEVEL_WITNESS} fails to lift at stratum {NON_LEVEL_STRATUM}", True,
              (NON_LEVEL_STRATUM, NON_LEVEL_WITNESS) in failing),
        Check(f"h*_3 > h*_1 h*_4 for {s}", True, (3, 1) in check_level_inequalities(h)),
        Check(f"interior points of {SSequence(TRUNCATION_NOT_GORENSTEIN)}",
              TRUNCATION_INTERIOR, count_interior_points(TRUNCATION_NOT_GORENSTEIN, 1, budget)),
        Check(f"gorenstein({SSequence(TRUNCATION_GORENSTEIN)})", True,
              is_gorenstein(TRUNCATION_GORENSTEIN)[0]),
        Check(f"gorenstein({SSequence(TRUNCATION_NOT_GORENSTEIN)})", False,
              is_gorenstein(TRUNCATION_NOT_GORENSTEIN)[0]),
    ]


def all_checks(budget=None) -> list[Check]:
    return row_checks(budget) + named_checks(budget)
