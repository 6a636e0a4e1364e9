"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
mismatch. Data goes to stdout and diagnostics to stderr. Exact integers
are rendered as decimal strings in JSON, rationals as ``p/q``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time

import mpmath

from . import asymptotics, kernels
from .ballot import ballot_number, dyck_prefix_count
from .delannoy import ALGORITHM_ALIASES, central_sequence, central_series, delannoy_table
from .errors import LatticeCountError
from .exactnum import format_rational
from .ruin import RUIN_METHODS, RuinSpec, duration_distribution, expected_abs_lead
from .verify import IDENTITIES, TRIG_TOLERANCE, run_identity
from .walks import JumpSystem, PathClass, StripBounds, count_paths, schroeder_numbers

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3
FORMATS = ("text", "csv", "json", "bfile")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bfile(values, start=0) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, start))


def _no_bfile(args):
    if args.format == "bfile":
        raise UsageError(f"--format bfile is not available for '{args.command}'")


def cmd_table(args) -> tuple[str, int]:
    _no_bfile(args)
    if args.rows < 1 or args.cols < 1:
        raise UsageError("rows and cols must be >= 1")
    table = delannoy_table(args.cols - 1, args.rows - 1)
    if args.format == "text":
        rows = table.display_rows()
        width = len(str(max(max(r) for r in rows)))
        return "".join(" ".join(f"{v:>{width}}" for v in row) + "\n" for row in rows), EXIT_OK
    cells = [(n, k, table[n, k]) for n in range(table.n_max + 1) for k in range(table.k_max + 1)]
    if args.format == "csv":
        return _csv([("n", "k", "value")] + cells), EXIT_OK
    return _json({"rows": args.rows, "cols": args.cols,
                  "entries": [{"n": n, "k": k, "value": str(v)} for n, k, v in cells]}), EXIT_OK


def cmd_central(args) -> tuple[str, int]:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    algo = args.algorithm
    if algo != "all" and algo not in ALGORITHM_ALIASES:
        raise LatticeCountError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHM_ALIASES)}, all")
    if algo != "all":
        values = central_sequence(args.n, ALGORITHM_ALIASES[algo])
        if args.format == "text":
            return " ".join(map(str, values)) + "\n", EXIT_OK
        if args.format == "bfile":
            return _bfile(values), EXIT_OK
        if args.format == "csv":
            return _csv([("n", "value")] + list(enumerate(values))), EXIT_OK
        return _json({"algorithm": algo, "values": [str(v) for v in values]}), EXIT_OK

    results = {name: central_sequence(args.n, a) for name, a in ALGORITHM_ALIASES.items()}
    reference = results["dp"]
    verdict = "pass" if all(v == reference for v in results.values()) else "fail"
    code = EXIT_OK if verdict == "pass" else EXIT_MISMATCH
    if args.format == "text":
        lines = [f"{name}: " + " ".join(map(str, v)) for name, v in results.items()]
        return "\n".join(lines) + f"\nagreement: {verdict}\n", code
    if args.format == "bfile":
        if verdict != "pass":
            print("algorithms disagree", file=sys.stderr)
        return _bfile(reference), code
    if args.format == "csv":
        header = ("n",) + tuple(results)
        rows = [(i,) + tuple(results[name][i] for name in results) for i in range(args.n + 1)]
        return _csv([header] + rows), code
    return _json({"algorithms": {k: [str(x) for x in v] for k, v in results.items()},
                  "agreement": verdict}), code


def cmd_schroeder(args) -> tuple[str, int]:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    values = schroeder_numbers(args.n)
    if args.format == "text":
        return " ".join(map(str, values)) + "\n", EXIT_OK
    if args.format == "bfile":
        return _bfile(values), EXIT_OK
    if args.format == "csv":
        return _csv([("n", "value")] + list(enumerate(values))), EXIT_OK
    return _json({"values": [str(v) for v in values]}), EXIT_OK


def cmd_walks(args) -> tuple[str, int]:
    _no_bfile(args)
    try:
        cls = PathClass(args.path_class)
    except ValueError:
        raise LatticeCountError(f"unknown class {args.path_class!r}; choose from walk, bridge, meander, excursion") from None
    js = JumpSystem.parse(args.jumps)
    if args.length < 0:
        raise UsageError("--length must be >= 0")
    bounds = None
    if args.lower is not None or args.upper is not None:
        bounds = StripBounds(args.lower, args.upper)
    value = count_paths(js, cls, args.length, end=args.end, bounds=bounds)
    if args.format == "text":
        return f"{value}\n", EXIT_OK
    record = {"class": cls.value, "jumps": args.jumps, "length": args.length,
              "end": args.end, "lower": args.lower, "upper": args.upper, "count": str(value)}
    if args.format == "csv":
        return _csv([tuple(record), tuple("" if v is None else v for v in record.values())]), EXIT_OK
    return _json(record), EXIT_OK


def _single_value(args, name, value, **fields) -> tuple[str, int]:
    _no_bfile(args)
    if args.format == "text":
        return f"{value}\n", EXIT_OK
    if args.format == "csv":
        return _csv([tuple(fields) + (name,), tuple(fields.values()) + (value,)]), EXIT_OK
    return _json({**fields, name: str(value)}), EXIT_OK


def cmd_ballot(args) -> tuple[str, int]:
    return _single_value(args, "ballot", ballot_number(args.x, args.y), x=args.x, y=args.y)


def cmd_dyck_prefix(args) -> tuple[str, int]:
    return _single_value(args, "count", dyck_prefix_count(args.n, args.k), n=args.n, k=args.k)


def cmd_lead(args) -> tuple[str, int]:
    value = expected_abs_lead(args.n)
    return _single_value(args, "expected_abs_lead", format_rational(value), n=args.n)


def cmd_ruin(args) -> tuple[str, int]:
    method = args.method
    if method != "all" and method not in RUIN_METHODS:
        raise LatticeCountError(f"unknown method {method!r}; choose from dp, binomial, trig, all")
    dist = duration_distribution(args.n, args.horizon)
    rounds = range(1, args.horizon + 1)

    def render(value):
        return repr(value) if isinstance(value, float) else format_rational(value)

    if method != "all":
        if method == "dp":
            probs = [dist.prob(m) for m in rounds]
        else:
            probs = [RUIN_METHODS[method](RuinSpec(args.n, m)) for m in rounds]
        cells = [render(p) for p in probs]
        if args.format == "text":
            return "".join(f"{m} {c}\n" for m, c in zip(rounds, cells)), EXIT_OK
        if args.format == "bfile":
            return _bfile(cells, start=1), EXIT_OK
        if args.format == "csv":
            return _csv([("m", "prob")] + list(zip(rounds, cells))), EXIT_OK
        return _json({"n": args.n, "horizon": args.horizon, "method": method,
                      "rows": [{"m": m, "prob": c} for m, c in zip(rounds, cells)],
                      "survival": format_rational(dist.survival)}), EXIT_OK

    _no_bfile(args)
    rows = []
    worst = 0.0
    all_agree = True
    for m in rounds:
        spec = RuinSpec(args.n, m)
        exact = dist.prob(m)
        binom = RUIN_METHODS["binomial"](spec)
        trig = RUIN_METHODS["trig"](spec)
        dev = abs(trig - float(exact))
        worst = max(worst, dev)
        agree = binom == exact and dev <= TRIG_TOLERANCE
        all_agree &= agree
        rows.append((m, format_rational(exact), format_rational(binom), repr(trig), "yes" if agree else "no"))
    code = EXIT_OK if all_agree else EXIT_MISMATCH
    if args.format == "text":
        body = "".join(" ".join(map(str, r)) + "\n" for r in rows)
        return ("m dp binomial trig agree\n" + body
                + f"survival {format_rational(dist.survival)}\nmax trig deviation {worst:.3e}\n"), code
    if args.format == "csv":
        return _csv([("m", "dp", "binomial", "trig", "agree")] + rows), code
    return _json({"n": args.n, "horizon": args.horizon, "method": "all",
                  "rows": [dict(zip(("m", "dp", "binomial", "trig", "agree"), r)) for r in rows],
                  "survival": format_rational(dist.survival),
                  "max_trig_deviation": worst, "agreement": "pass" if all_agree else "fail"}), code


def cmd_asym(args) -> tuple[str, int]:
    _no_bfile(args)
    if args.constants:
        consts = {"growth_base": asymptotics.growth_base()}
        for i, term in enumerate(asymptotics.expansion_terms(), 1):
            consts[f"term{i}"] = term.coefficient
        if args.format == "text":
            return "".join(f"{k} {mpmath.nstr(v, 20)}\n" for k, v in consts.items()), EXIT_OK
        if args.format == "csv":
            return _csv([("name", "value")] + [(k, mpmath.nstr(v, 20)) for k, v in consts.items()]), EXIT_OK
        return _json({k: mpmath.nstr(v, 20) for k, v in consts.items()}), EXIT_OK
    rows = asymptotics.asymptotic_error_profile(args.n, args.terms)
    table = [(r.n, r.exact, mpmath.nstr(r.approx, 15), mpmath.nstr(r.relative_error, 6),
              mpmath.nstr(r.scaled_error, 6)) for r in rows]
    header = ("n", "exact", "approx", "rel_error", "rel_error_n3")
    if args.format == "text":
        return " ".join(header) + "\n" + "".join(" ".join(map(str, t)) + "\n" for t in table), EXIT_OK
    if args.format == "csv":
        return _csv([header] + table), EXIT_OK
    return _json({"terms": args.terms, "rows": [dict(zip(header, map(str, t))) for t in table]}), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    _no_bfile(args)
    if args.identity not in IDENTITIES:
        raise LatticeCountError(f"unknown identity {args.identity!r}; choose from {', '.join(IDENTITIES)}")
    report = run_identity(args.identity, args.order)
    code = EXIT_OK if report.passed else EXIT_MISMATCH
    if args.format == "json":
        return _json(report.as_dict()), code
    if args.format == "csv":
        d = report.as_dict()
        mm = d.get("first_mismatch", {})
        return _csv([("identity", "checked", "status", "location", "expected", "actual"),
                     (d["identity"], d["checked"], d["status"], mm.get("location", ""),
                      mm.get("expected", ""), mm.get("actual", ""))]), code
    out = f"{report.identity} [{report.checked}]: {report.status}\n"
    if report.first_mismatch is not None:
        m = report.first_mismatch
        out += f"first mismatch at {m.location}: expected {m.expected}, got {m.actual}\n"
    for line in report.details:
        out += line + "\n"
    return out, code


BENCH_TARGETS = {
    "central-dp": lambda k, n: k.central_grid(n)[n],
    "central-sum": lambda k, n: k.delannoy_binomial_sum(n, n),
    "central-rec": lambda k, n: k.central_recurrence(n)[n],
    "central-series": lambda k, n: central_series(n).coefficients[n].numerator,
}


def digest(value: int) -> str:
    """First and last 8 digits plus the digit count."""
    s = str(value)
    if len(s) <= 16:
        return s
    return f"{s[:8]}...{s[-8:]} ({len(s)} digits)"


def cmd_bench(args) -> tuple[str, int]:
    _no_bfile(args)
    if args.repetitions < 1:
        raise UsageError("--repetitions must be >= 1")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    targets = list(BENCH_TARGETS) if args.target == "all" else [args.target]
    for t in targets:
        if t not in BENCH_TARGETS:
            raise LatticeCountError(f"unknown target {t!r}; choose from {', '.join(BENCH_TARGETS)}, all")
    available = kernels.backends()
    if args.backend == "both":
        chosen = list(available)
    elif args.backend in available:
        chosen = [args.backend]
    else:
        raise LatticeCountError(f"backend {args.backend!r} is not available")
    rows = []
    for target in targets:
        # the series route never touches the kernels, so one backend is enough
        for name in (["python"] if target == "central-series" else chosen):
            fn = BENCH_TARGETS[target]
            times = []
            value = None
            for _ in range(args.repetitions):
                start = time.perf_counter()
                value = fn(available[name], args.n)
                times.append(time.perf_counter() - start)
            rows.append((target, name, args.n, statistics.median(times), digest(value)))
    digests = {r[4] for r in rows}
    code = EXIT_OK if len(digests) == 1 else EXIT_MISMATCH
    header = ("target", "backend", "n", "median_s", "digest")
    if args.format == "text":
        body = "".join(f"{t:<15} {b:<9} {n:>6} {s:>12.6f}  {d}\n" for t, b, n, s, d in rows)
        return body + ("digests agree\n" if code == EXIT_OK else "DIGEST MISMATCH\n"), code
    if args.format == "csv":
        return _csv([header] + [(t, b, n, f"{s:.6f}", d) for t, b, n, s, d in rows]), code
    return _json({"rows": [dict(zip(header, (t, b, n, s, d))) for t, b, n, s, d in rows],
                  "digests_agree": code == EXIT_OK}), code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latticecount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=FORMATS, default="text")
        p.set_defaults(func=func)
        return p

    p = add("table", cmd_table, "Delannoy array, k increasing upward")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)

    p = add("central", cmd_central, "central Delannoy numbers d_0..d_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algorithm", default="rec", help="dp, sum, rec, series, legendre or all")

    p = add("schroeder", cmd_schroeder, "large Schroeder numbers s_0..s_n")
    p.add_argument("--n", type=int, required=True)

    p = add("walks", cmd_walks, "count lattice paths for a jump system")
    p.add_argument("--class", dest="path_class", required=True, help="walk, bridge, meander or excursion")
    p.add_argument("--jumps", required=True, help='jump list "t:dh,t:dh,..."')
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--end", type=int)
    p.add_argument("--lower", type=int)
    p.add_argument("--upper", type=int)

    p = add("ballot", cmd_ballot, "ballot number T(x, y)")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = add("dyck-prefix", cmd_dyck_prefix, "nonnegative +/-1 paths of length n ending at k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = add("ruin", cmd_ruin, "ruin-time distribution in the strip [-n, n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--method", default="dp", help="dp, binomial, trig or all")

    p = add("lead", cmd_lead, "expected |won - lost| after 2n fair games")
    p.add_argument("--n", type=int, required=True)

    p = add("asym", cmd_asym, "asymptotic expansion of d_n and its relative error")
    p.add_argument("--n", type=int, nargs="+", default=[10, 20, 40, 80])
    p.add_argument("--terms", type=int, choices=(1, 2, 3), default=3)
    p.add_argument("--constants", action="store_true", help="print the expansion constants")

    p = add("verify", cmd_verify, "check a named identity")
    p.add_argument("identity", help=", ".join(IDENTITIES))
    p.add_argument("--order", type=int)

    p = add("bench", cmd_bench, "time the central-number algorithms on each kernel backend")
    p.add_argument("target", help=", ".join(BENCH_TARGETS) + " or all")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--backend", default="both", help="python, compiled or both")
    return parser


def main(argv=None) -> int:
    # exact values routinely exceed the default 4300-digit str() limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"latticecount {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LatticeCountError as exc:
        print(f"latticecount {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
