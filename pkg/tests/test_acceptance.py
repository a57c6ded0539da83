"""Acceptance criteria, one recorded PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the summary section at the
end lists every criterion.
"""
import subprocess
import sys
import time

import pytest

from lecturehall.eulerian import (
    check_level_inequalities, hstar_by_ascents, hstar_by_parallelepiped, is_palindromic,
)
from lecturehall.geometry import (
    count_interior_points, height1_bijection, idp_failures, map_inversion_to_point,
    map_point_to_inversion, parallelepiped_array,
)
from lecturehall.golden import PALINDROMIC_ROWS
from lecturehall.gorenstein import (
    is_gorenstein, solve_c_chain, two_chain_scan, vertex_cone_gorenstein,
)
from lecturehall.level import (
    cone_recurrence_level_scan, concatenate, is_gorenstein_via_level, level_by_inversions,
    level_by_socle,
)
from lecturehall.scan import random_sequences
from lecturehall.seqcore import (
    InversionSequence, SSequence, add_mod, enumerate_inversion_sequences,
)

from conftest import record_acceptance, small_grid

GRID_3x5 = [SSequence(s) for s in small_grid(3, 5)]
RANDOM_SEED = 20240501


@pytest.mark.parametrize("label,s,c,d,h", PALINDROMIC_ROWS, ids=[r[0] for r in PALINDROMIC_ROWS])
def test_c1_reference_rows(label, s, c, d, h):
    got = (hstar_by_ascents(s).trimmed, solve_c_chain(s), solve_c_chain(SSequence(s).reversed()))
    diffs = [name for name, a, b in zip(("h*", "c", "d"), (h, c, d), got) if a != b]
    record_acceptance(f"1 row ({label})", not diffs,
                      f"s={s}" + (f" mismatch in {diffs}: expected {(h, c, d)}, got {got}"
                                  if diffs else ""))
    assert got == (h, c, d)


def test_c2_non_level_example():
    start = time.perf_counter()
    s = (2, 3, 5, 9)
    h = hstar_by_ascents(s)
    report = level_by_inversions(s)
    elapsed = time.perf_counter() - start
    ok = (h.trimmed == (1, 48, 154, 66, 1) and report.verdict is False
          and (3, (1, 1, 2, 4)) in report.witnesses
          and (3, 1) in check_level_inequalities(h) and h[3] > h[1] * h[4]
          and elapsed < 1.0)
    record_acceptance("2 non-level example", ok,
                      f"(1,1,2,4) among {len(report.witnesses)} non-liftable at k=3, "
                      f"{elapsed:.2f}s")
    assert ok


def test_c3_interior_and_truncation():
    start = time.perf_counter()
    interior = count_interior_points((8, 6, 10, 10, 5), 1)
    long_ok = is_gorenstein((8, 6, 10, 10, 5, 2, 4))[0]
    short_ok = is_gorenstein((8, 6, 10, 10, 5))[0]
    # optional cross-check of the long verdict through h*
    pal = is_palindromic(hstar_by_ascents((8, 6, 10, 10, 5, 2, 4)))
    elapsed = time.perf_counter() - start
    ok = interior == 39 and long_ok and not short_ok and pal and elapsed < 30
    record_acceptance("3 interior points and truncation", ok,
                      f"interior={interior}, long={long_ok}, short={short_ok}, {elapsed:.2f}s")
    assert ok


def test_c4_oracle_equivalence():
    start = time.perf_counter()
    seqs = GRID_3x5 + random_sequences(100, RANDOM_SEED, max_product=10**4)
    bad = []
    for s in seqs:
        h = hstar_by_ascents(s)
        if h != hstar_by_parallelepiped(s):
            bad.append((s.entries, "h*"))
        if level_by_inversions(s).verdict != level_by_socle(s).verdict:
            bad.append((s.entries, "level"))
        g = is_gorenstein(s)[0]
        if g != is_palindromic(h):
            bad.append((s.entries, "gorenstein"))
        vc = vertex_cone_gorenstein(s)
        if vc is not None and vc[0] != g:
            bad.append((s.entries, "vertex-cone"))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record_acceptance("4 oracle equivalence", ok,
                      f"{len(seqs)} sequences, {len(bad)} disagreements, {elapsed:.1f}s")
    assert ok, bad[:10]


def _bijection_failures(s):
    fails = []
    phi = height1_bijection(s)
    images = list(phi.values())
    stratum1 = [e for e in enumerate_inversion_sequences(s) if e.asc == 1]
    if len(set(images)) != len(images) or set(images) != set(stratum1):
        fails.append("height-one map")
    pts = {tuple(int(x) for x in row) for row in parallelepiped_array(s)}
    forward = {}
    for e in enumerate_inversion_sequences(s):
        p = map_inversion_to_point(e)
        forward[e] = p
        if map_point_to_inversion(p) != e:
            fails.append(f"round trip at {e.entries}")
    if {p.as_tuple() for p in forward.values()} != pts:
        fails.append("image is not the parallelepiped")
    for f in forward:
        for g in stratum1:
            fg = add_mod(f, g)
            if fg.asc == f.asc + 1:
                lhs = tuple(a + b for a, b in zip(forward[f].as_tuple(), forward[g].as_tuple()))
                if lhs != forward[fg].as_tuple():
                    fails.append(f"additivity at {f.entries}+{g.entries}")
    return fails


def test_c5_bijections():
    bad = []
    for s in GRID_3x5:
        bad.extend((s.entries, f) for f in _bijection_failures(s))
    record_acceptance("5 bijections", not bad, f"{len(GRID_3x5)} sequences, {len(bad)} failures")
    assert not bad, bad[:10]


def test_c6_level_consequences():
    bad = []
    level = {s.entries: level_by_inversions(s).verdict for s in GRID_3x5}
    for s, v in level.items():
        if len(s) == 2 and not v:
            bad.append((s, "two-dimensional not level"))
        for padded in ((1,) + s, s + (1,)):
            if level_by_inversions(padded).verdict != v:
                bad.append((s, f"padding {padded}"))
        if is_gorenstein_via_level(s) != is_gorenstein(s)[0]:
            bad.append((s, "gorenstein via level"))
    for s, vs in level.items():
        for t, vt in level.items():
            if len(s) + len(t) > 4 or not (vs and vt):
                continue
            if not level_by_inversions(concatenate(s, t)).verdict:
                bad.append((s, f"free product with {t}"))
    record_acceptance("6 level consequences", not bad, f"{len(bad)} failures")
    assert not bad, bad[:10]


def test_c7_conjecture_scans():
    seqs = [SSequence(s) for s in small_grid(4, 4)]
    cone = cone_recurrence_level_scan(seqs)
    chains = two_chain_scan(seqs)
    std = chains["findings"]["standard"]
    shifted = chains["findings"]["shifted"]
    detail = (f"cone recurrence: {cone.hypothesis_holds} hold, {len(cone.counterexamples)} "
              f"not level; two-chain: {chains['checked']} checked, {len(std)} mismatches "
              f"(shifted gcd: {len(shifted)})")
    for f in std:
        print(f"  finding: s={f.s} h*={f.hstar} palindromic={f.palindromic} "
              f"criterion={f.criterion} c={f.c} d={f.d}")
    for r in cone.rows():
        print(f"  finding: cone recurrence but not level {r}")
    # findings are logged, not failed
    record_acceptance("7 conjecture scans (findings)", True, detail)


def test_c8_idp():
    bad = []
    checked = 0
    for s in small_grid(3, 4):
        for t in (2, 3):
            checked += 1
            fails = idp_failures(s, t)
            if fails:
                bad.append((s, t, fails[:3]))
    record_acceptance("8 IDP", not bad, f"{checked} (s, t) pairs, {len(bad)} failures")
    assert not bad


def test_c9_determinism():
    argv = [sys.executable, "-m", "lecturehall.cli", "scan", "--dim", "3", "--max", "4",
            "--seed", "7", "--workers", "4", "--sort"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    ok = a == b and a.startswith(b"s,n,hstar") and a.count(b"\n") == 1 + 64
    record_acceptance("9 determinism", ok, f"{len(a)} bytes, identical={a == b}")
    assert ok
