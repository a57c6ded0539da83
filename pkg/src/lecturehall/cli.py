"""Command line entry point: ``lecturehall <subcommand> ...``.

Exit codes: 0 success (negative verdicts included), 1 reference mismatch in
``verify``, 2 usage or parse error, 3 budget exceeded, 4 internal
consistency violation.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import golden
from .config import BUDGET_ENV
from .errors import BudgetExceeded, ConsistencyError, SequenceError
from .eulerian import (
    check_level_inequalities, ehrhart_series_expand, hstar_by_ascents, hstar_by_parallelepiped,
    internal_zeros, is_palindromic, is_unimodal,
)
from .geometry import (
    count_dilate_points, height1_bijection, map_inversion_to_point, map_point_to_inversion,
)
from .gorenstein import classify
from .level import is_gorenstein_via_level, level_by_inversions, level_by_socle
from .records import FORMATS, RunConfig
from .scan import FILTERS, grid, render_csv, render_json, run_scan, sample_grid
from .seqcore import InversionSequence, SSequence, enumerate_inversion_sequences

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET, EXIT_CONSISTENCY = 0, 1, 2, 3, 4

log = logging.getLogger("lecturehall")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(f"{self.prog}: error: {message}") from None


def _sequence(text):
    try:
        return SSequence.parse(text)
    except SequenceError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dims(text):
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}")
    return lo, hi


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, dest="fmt",
                        help="text by default, csv for scan")
    common.add_argument("--budget", type=_positive, default=None,
                        help=f"enumeration cap (default 10^8, or ${BUDGET_ENV})")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="lecturehall",
                description="h*-polynomials, Gorenstein and level tests for lecture hall simplices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    h = sub.add_parser("hstar", parents=[common], help="h*-polynomial by ascent counting")
    h.add_argument("s", type=_sequence)
    h.add_argument("--oracle", action="store_true", help="also count parallelepiped points")

    g = sub.add_parser("gorenstein", parents=[common], help="Gorenstein certificate")
    g.add_argument("s", type=_sequence)
    g.add_argument("--check", action="store_true", help="cross-check against palindromicity")

    lv = sub.add_parser("level", parents=[common], help="levelness with witness")
    lv.add_argument("s", type=_sequence)
    lv.add_argument("--oracle", action="store_true", help="also compute socle heights")

    sub.add_parser("verify", parents=[common], help="recompute the published reference values")

    sc = sub.add_parser("scan", parents=[common], help="evaluate a grid of sequences")
    sc.add_argument("--dim", type=_dims, required=True, help="N or LO-HI")
    sc.add_argument("--max", type=_positive, required=True, dest="max_entry")
    sc.add_argument("--min", type=_positive, default=1, dest="min_entry")
    sc.add_argument("--filter", action="append", choices=FILTERS, default=[], dest="filters")
    sc.add_argument("--sample", type=_positive, default=None,
                    help="evaluate a seeded random subset of this size")
    sc.add_argument("--sort", action="store_true", help="canonical order, timing dropped")
    sc.add_argument("--output", "-o", default=None)

    o = sub.add_parser("oracle", parents=[common], help="all fast-vs-oracle cross-checks")
    o.add_argument("s", type=_sequence)
    return p


def _fmt_vec(v):
    return "(" + ",".join(map(str, v)) + ")" if v is not None else "-"


def _emit(cfg, payload, text_lines):
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif cfg.fmt == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(_csv_cell(payload[k]) for k in keys))
    else:
        print("\n".join(text_lines))


def _csv_cell(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return ";".join(_csv_cell(v) for v in x)
    if x is None:
        return ""
    return str(x)


def cmd_hstar(args, cfg):
    s = args.s
    h = hstar_by_ascents(s, cfg.budget)
    h.validate(s)
    payload = {
        "s": list(s.entries), "hstar": list(h.trimmed), "degree": h.degree,
        "palindromic": is_palindromic(h), "unimodal": is_unimodal(h),
        "inequality_violations": [list(p) for p in check_level_inequalities(h)],
    }
    lines = [
        f"s = {_fmt_vec(s)}",
        f"h* = {h}",
        f"coefficients: {list(h.trimmed)}",
        f"degree r: {h.degree}",
        f"palindromic: {'yes' if payload['palindromic'] else 'no'}",
        f"unimodal: {'yes' if payload['unimodal'] else 'no'}",
        f"inequality violations: {payload['inequality_violations'] or 'none'}",
    ]
    if args.oracle:
        o = hstar_by_parallelepiped(s, cfg.budget)
        payload["oracle_hstar"] = list(o.trimmed)
        payload["agreement"] = o == h
        lines.append(f"parallelepiped count: {list(o.trimmed)}")
        lines.append(f"agreement: {'yes' if o == h else 'NO'}")
    _emit(cfg, payload, lines)
    if args.oracle and not payload["agreement"]:
        raise ConsistencyError(f"h* disagreement for {s}", payload)
    return EXIT_OK


def cmd_gorenstein(args, cfg):
    s = args.s
    cert = classify(s, check=args.check, budget=cfg.budget)
    payload = cert.to_dict()
    c = cert.c
    lines = [f"s = {_fmt_vec(s)}", f"gorenstein: {'true' if cert.verdict else 'false'}"]
    if c is not None:
        lines.append(f"c = {_fmt_vec(c[:s.n])}, c_{{n+1}} = {c[s.n]}")
    if cert.vertex_cone_verdict is not None:
        lines.append(f"d = {_fmt_vec(cert.d)}")
        lines.append(f"vertex-cone criterion: {'true' if cert.vertex_cone_verdict else 'false'}")
    if cert.u is not None or cert.u_reversed is not None:
        lines.append(f"u = {_fmt_vec(cert.u)}, u(reversed) = {_fmt_vec(cert.u_reversed)}")
    if cert.palindromic is not None:
        lines.append(f"palindromic h*: {'true' if cert.palindromic else 'false'} (agrees)")
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_level(args, cfg):
    s = args.s
    report = level_by_inversions(s, cfg.budget)
    payload = report.to_dict()
    lines = [f"s = {_fmt_vec(s)}", f"level: {'true' if report.verdict else 'false'}",
             f"r = {report.r}"]
    if not report.verdict:
        lines.append(f"witness: {_fmt_vec(report.witness)} at k={report.witness_stratum}")
        lines.append(f"non-liftable sequences: {len(report.witnesses)}")
    if report.inequality_violations:
        lines.append(f"coefficient inequality violations: {list(report.inequality_violations)}")
    if args.oracle:
        oracle = level_by_socle(s, cfg.budget)
        payload["socle_heights"] = {str(k): v for k, v in oracle.socle_histogram().items()}
        payload["oracle_verdict"] = oracle.verdict
        lines.append(f"socle heights: {oracle.socle_histogram()}")
        lines.append(f"oracle agrees: {'yes' if oracle.verdict == report.verdict else 'NO'}")
        if oracle.verdict != report.verdict:
            _emit(cfg, payload, lines)
            raise ConsistencyError(f"level disagreement for {s}", payload)
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_verify(args, cfg):
    checks = golden.all_checks(cfg.budget)
    failed = [c for c in checks if not c.ok]
    if cfg.fmt == "json":
        print(json.dumps([{"name": c.name, "ok": c.ok, "expected": repr(c.expected),
                           "actual": repr(c.actual)} for c in checks], indent=2))
    else:
        for c in checks:
            print(c.line())
        rows = [c for c in checks if c.name.startswith("row")]
        print(f"{sum(c.ok for c in rows)}/{len(rows)} reference rows pass, "
              f"{len(checks) - len(failed)}/{len(checks)} checks pass")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_scan(args, cfg):
    seqs = grid(args.dim, args.max_entry, args.min_entry)
    seqs = sample_grid(seqs, args.sample, cfg.seed)
    records = list(run_scan(seqs, args.filters, cfg.budget, cfg.workers, sort=args.sort))
    if cfg.fmt == "json":
        text = render_json(records)
    elif cfg.fmt == "csv":
        text = render_csv(records)
    else:
        lines = [f"{len(records)} rows ({len(seqs)} sequences scanned)"]
        for r in records:
            extra = f"  witness {r.witness_stratum}:{_fmt_vec(r.witness)}" if r.witness else ""
            lines.append(f"{_fmt_vec(r.s):<24} h*={_fmt_vec(r.hstar)} gorenstein={r.gorenstein} "
                         f"level={r.level}{extra}{'  ' + r.error if r.error else ''}")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def oracle_checks(s, budget=None):
    """Every fast-vs-oracle comparison for one sequence as ``(name, ok, detail)``."""
    out = []
    h = hstar_by_ascents(s, budget)
    o = hstar_by_parallelepiped(s, budget)
    out.append(("h* ascents vs parallelepiped", h == o, f"{h.trimmed} / {o.trimmed}"))
    fast = level_by_inversions(s, budget)
    slow = level_by_socle(s, budget)
    out.append(("level lifts vs socle", fast.verdict == slow.verdict,
                f"{fast.verdict} / {slow.verdict}"))
    failing = {map_inversion_to_point(InversionSequence(e, s)).as_tuple() for _, e in fast.witnesses}
    low_socle = {p for p in slow.socle_points if p[-1] < slow.r}
    out.append(("non-liftable sequences map onto low socle", failing == low_socle,
                f"{len(failing)} / {len(low_socle)}"))
    cert = classify(s, check=False, budget=budget)
    out.append(("recurrence vs palindromic", cert.verdict == is_palindromic(h),
                f"{cert.verdict} / {is_palindromic(h)}"))
    if cert.vertex_cone_verdict is not None:
        out.append(("vertex-cone vs recurrence", cert.vertex_cone_verdict == cert.verdict,
                    f"{cert.vertex_cone_verdict} / {cert.verdict}"))
    via_level = is_gorenstein_via_level(s, budget)
    out.append(("gorenstein via level vs recurrence", via_level == cert.verdict,
                f"{via_level} / {cert.verdict}"))
    t_max = 4 if s.product <= 10**4 else 2
    series = ehrhart_series_expand(h, t_max)
    counts = [count_dilate_points(s, t, budget) for t in range(t_max + 1)]
    out.append((f"series vs dilate counts t<={t_max}", series == counts, f"{series} / {counts}"))
    round_trip = all(map_point_to_inversion(map_inversion_to_point(e)) == e
                     for e in enumerate_inversion_sequences(s, budget))
    out.append(("parallelepiped <-> inversion round trip", round_trip, ""))
    phi = height1_bijection(s, budget)
    images = set(phi.values())
    ok = len(images) == len(phi) == h[1] and all(e.asc == 1 for e in images)
    out.append(("height-one bijection", ok, f"{len(phi)} points, h*_1={h[1]}"))
    if internal_zeros(h):
        out.append(("no internal zeros (finding only)", True, f"zeros at {internal_zeros(h)}"))
    return out


def cmd_oracle(args, cfg):
    results = oracle_checks(args.s, cfg.budget)
    bad = [r for r in results if not r[1]]
    if cfg.fmt == "json":
        print(json.dumps([{"check": n, "ok": ok, "detail": d} for n, ok, d in results], indent=2))
    else:
        for name, ok, detail in results:
            print(f"{'ok  ' if ok else 'FAIL'}  {name}  {detail}".rstrip())
    if bad:
        raise ConsistencyError(f"{len(bad)} oracle disagreements for {args.s}",
                               {"s": args.s.entries, "failed": [b[0] for b in bad]})
    return EXIT_OK


COMMANDS = {
    "hstar": cmd_hstar, "gorenstein": cmd_gorenstein, "level": cmd_level,
    "verify": cmd_verify, "scan": cmd_scan, "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_OK
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        fmt = args.fmt or ("csv" if args.command == "scan" else "text")
        cfg = RunConfig(fmt=fmt, budget=args.budget, workers=args.workers, seed=args.seed)
        return COMMANDS[args.command](args, cfg)
    except (SequenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyError as exc:
        print(f"INTERNAL CONSISTENCY VIOLATION: {exc}", file=sys.stderr)
        print(json.dumps(exc.state, indent=2, default=str), file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
