"""Batch evaluation of sequence grids with an optional process pool."""
from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded, ConsistencyError
from .eulerian import hstar_by_ascents, is_palindromic
from .gorenstein import has_coprime_neighbours, is_gorenstein, solve_c_chain, two_chain_criterion
from .level import level_by_inversions
from .records import CSV_COLUMNS, ScanRecord
from .seqcore import SSequence, as_sequence, iter_sequences

FILTERS = ("gorenstein", "level", "non-level", "palindromic", "conjecture51", "conjecture52")


def grid(dims: tuple[int, int], max_entry: int, min_entry: int = 1) -> list[SSequence]:
    lo, hi = dims
    return list(iter_sequences(range(min_entry, max_entry + 1), lo, hi))


def sample_grid(seqs: list, count: Optional[int], seed: Optional[int]) -> list:
    if count is None or count >= len(seqs):
        return seqs
    rng = random.Random(seed)
    picked = sorted(rng.sample(range(len(seqs)), count))
    return [seqs[i] for i in picked]


def random_sequences(count: int, seed: int, max_product: int = 10**4, max_dim: int = 6,
                     max_entry: int = 12) -> list[SSequence]:
    """``count`` distinct seeded random sequences with product at most ``max_product``."""
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        n = rng.randint(1, max_dim)
        s = tuple(rng.randint(1, max_entry) for _ in range(n))
        if math.prod(s) > max_product or s in seen:
            continue
        seen.add(s)
        out.append(SSequence(s))
    return out


def evaluate(s, budget=None) -> ScanRecord:
    """All properties of one sequence; budget overruns land in ``error``."""
    s = as_sequence(s)
    start = time.perf_counter()
    base = dict(s=s.entries, n=s.n, cone_chain=solve_c_chain(s) is not None,
                two_chain=two_chain_criterion(s))
    verdict, cert = is_gorenstein(s)
    base.update(gorenstein=verdict, c=cert.c, d=solve_c_chain(s.reversed()))
    try:
        h = hstar_by_ascents(s, budget)
        pal = is_palindromic(h)
        if pal != verdict:
            raise ConsistencyError(f"recurrence verdict {verdict} vs palindromic {pal} for {s}",
                                   {"s": s.entries, "hstar": h.coeffs, "c": cert.c})
        report = level_by_inversions(s, budget)
    except BudgetExceeded as exc:
        return ScanRecord(**base, runtime_ms=_ms(start), error=f"budget-exceeded: {exc}")
    return ScanRecord(**base, hstar=h.trimmed, r=h.degree, palindromic=pal,
                      level=report.verdict, witness=report.witness,
                      witness_stratum=report.witness_stratum, runtime_ms=_ms(start))


def _ms(start):
    return (time.perf_counter() - start) * 1000.0


def _evaluate_entries(args):
    entries, budget = args
    return evaluate(SSequence(entries), budget)


def passes(rec: ScanRecord, filters: Iterable[str]) -> bool:
    for f in filters:
        if f == "gorenstein" and not rec.gorenstein:
            return False
        if f == "palindromic" and not rec.palindromic:
            return False
        if f == "level" and rec.level is not True:
            return False
        if f == "non-level" and rec.level is not False:
            return False
        if f == "conjecture51":
            # counterexamples only: every adjacent gcd >= 2, criterion disagrees with h*
            if rec.n < 2 or has_coprime_neighbours(rec.s) or rec.palindromic is None:
                return False
            if rec.two_chain == rec.palindromic:
                return False
        if f == "conjecture52":
            if not rec.cone_chain or rec.level is not False:
                return False
        if f not in FILTERS:
            raise ValueError(f"unknown filter {f!r}")
    return True


def run_scan(seqs: list, filters=(), budget=None, workers: int = 1,
             sort: bool = False) -> Iterator[ScanRecord]:
    jobs = [(as_sequence(s).entries, budget) for s in seqs]
    if workers == 1:
        results: Iterable[ScanRecord] = map(_evaluate_entries, jobs)
        if not sort:
            yield from (r for r in results if passes(r, filters))
            return
        results = list(results)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_entries, jobs,
                                    chunksize=max(1, len(jobs) // (4 * workers))))
    rows = [r for r in results if passes(r, filters)]
    if sort:
        # canonical form: fixed order, wall-clock timing dropped
        rows = sorted((r.without_timing() for r in rows), key=lambda r: (r.n, r.s))
    yield from rows


def write_csv(records: Iterable[ScanRecord], out) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    count = 0
    for rec in records:
        w.writerow(rec.csv_row())
        count += 1
    return count


def render_csv(records: Iterable[ScanRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def render_json(records: Iterable[ScanRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> list[ScanRecord]:
    return [ScanRecord.from_dict(d) for d in json.loads(text)]
