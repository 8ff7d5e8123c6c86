"""Command-line interface: ``hookdist {dist,table,verify,asym}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 resource guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from typing import Callable, Iterator, Sequence, TextIO

from . import asymptotics as asym
from .distribution import Flavor, HookDistribution
from .errors import ResourceGuardError
from .identities import han_check, nekrasov_okounkov_check, pentagonal_check
from .partitions import BRUTE_FORCE_GUARD, brute_force_distribution
from .qseries import EXACT_WORK_CEILING, evaluate_P, hook_distribution, partition_numbers
from .special import LimitModel
from .statistics import exact_moments, ks_distance, mgf, standardize, table_row

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

#: Preset tables: (n, t, flavor, x-grid).
TABLES = {
    1: (5000, 2, "equal", (-1.5, 0.0, 1.0, 2.0)),
    2: (1000, 11, "multiple", (-1.0, 0.75, 1.0, 1.25)),
}


@contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _prob(value) -> str:
    return f"{float(value):.17g}"


def dist_csv(dist: HookDistribution) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "count", "probability"])
    for m, p in dist.probabilities().items():
        count = dist.counts[m]
        w.writerow([m, count if isinstance(count, int) else repr(float(count)), _prob(p)])
    return buf.getvalue()


# -- dist ---------------------------------------------------------------------

def cmd_dist(args: argparse.Namespace) -> int:
    if args.brute_force:
        dist = brute_force_distribution(args.n, args.t, args.flavor, guard=args.guard)
    else:
        dist = hook_distribution(args.n, args.t, args.flavor, args.ring, args.work_ceiling)
    text = dist.to_json() + "\n" if args.format == "json" else dist_csv(dist)
    with _open_out(args.output) as fh:
        fh.write(text)
    return EXIT_OK


# -- table --------------------------------------------------------------------

def _parse_grid(text: str) -> tuple[float, ...]:
    return tuple(float(s) for s in text.split(",") if s.strip())


def cmd_table(args: argparse.Namespace) -> int:
    if args.table is not None:
        n, t, flavor, grid = TABLES[args.table]
    else:
        if args.n is None or args.t is None:
            raise ValueError("custom tables need --n and --t (or pick --table 1|2)")
        n, t, flavor, grid = args.n, args.t, args.flavor, ()
    if args.x is not None:
        grid = _parse_grid(args.x)
    if Flavor.parse(flavor) is Flavor.MULTIPLE and t < 4:
        raise ValueError("multiple-flavor tables need t >= 4")
    rows = []
    if grid:
        dist = hook_distribution(n, t, flavor, args.ring, args.work_ceiling)
        rows = [table_row(n, t, flavor, x, dist=dist) for x in grid]
    header = ["x", "k", "D", "limit", "ratio"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([r.x, r.k, _prob(r.D), _prob(r.limit), _prob(r.ratio)])
    print(f"n={n} t={t} flavor={Flavor.parse(flavor).value}")
    print(f"{'x':>8} {'k':>6} {'D':>10} {'limit':>10} {'ratio':>10}")
    for r in rows:
        print(f"{r.x:>8.2f} {r.k:>6d} {float(r.D):>10.4f} {r.limit:>10.4f} {r.ratio:>10.4f}")
    if args.output:
        with _open_out(args.output) as fh:
            fh.write(buf.getvalue())
    return EXIT_OK


# -- verify -------------------------------------------------------------------

Check = tuple[str, Callable[[], tuple[bool, str]]]


def _identity_checks(order: int) -> list[Check]:
    def wrap(fn: Callable):
        def run() -> tuple[bool, str]:
            report = fn()
            return report.equal, report.summary()
        return run

    return [
        ("pentagonal", wrap(lambda: pentagonal_check(max(order, 30)))),
        ("nekrasov-okounkov", wrap(lambda: nekrasov_okounkov_check(order))),
        ("han t=2", wrap(lambda: han_check(min(order, 8), 2))),
        ("han t=3", wrap(lambda: han_check(min(order, 8), 3))),
    ]


def _asymptotic_checks() -> list[Check]:
    checks: list[Check] = []
    for T in (0.5, 1.0, 2.0):
        def saddle(T=T) -> tuple[bool, str]:
            gaps = [asym.solve_saddle_G(n, 2, T).scaled_gap for n in (100, 1000, 10000)]
            ok = all(g <= 3 * gaps[0] and g >= gaps[0] / 3 for g in gaps)
            return ok, "scaled gaps " + ", ".join(f"{g:.4g}" for g in gaps)
        checks.append((f"saddle expansion T={T}", saddle))
    for T in (0.5, 2.0):
        for t in (1, 2):
            def em_check(T=T, t=t) -> tuple[bool, str]:
                sums = [asym.em_sums(a, t, T) for a in (0.1, 0.05, 0.025)]
                notes, ok = [], True
                for key in ("a0", "b", "c"):
                    errs = [s.error(key) for s in sums]
                    floor = 1e-9 * max(abs(s.main[key]) for s in sums)
                    if max(errs) <= floor:
                        notes.append(f"{key}: at rounding level")
                        continue
                    ratios = [errs[0] / errs[1], errs[1] / errs[2]]
                    good = all(1.4 <= r <= 2.6 for r in ratios)
                    ok &= good
                    notes.append(f"{key}: ratios {ratios[0]:.3f}, {ratios[1]:.3f}")
                a_errs = [s.error("a") for s in sums]
                bounded = max(a_errs) <= 2 * min(a_errs) + 1e-12
                ok &= bounded
                notes.append(f"a: errors {', '.join(f'{e:.3g}' for e in a_errs)}")
                return ok, "; ".join(notes)
            checks.append((f"EM error scaling T={T} t={t}", em_check))
    return checks


def _convergence_checks() -> list[Check]:
    ladder = (500, 1000, 2000, 4000)
    cache: dict[int, HookDistribution] = {}

    def dist_of(n: int) -> HookDistribution:
        if n not in cache:
            cache[n] = hook_distribution(n, 2, "equal")
        return cache[n]

    def ks_ladder() -> tuple[bool, str]:
        values = []
        for n in ladder:
            dist = dist_of(n)
            m = exact_moments(dist)
            std = standardize(dist, center=float(m.mean), spread=math.sqrt(m.variance))
            values.append(ks_distance(std, LimitModel.normal()))
        ok = all(a > b for a, b in zip(values, values[1:]))
        return ok, "KS " + ", ".join(f"{n}:{v:.4f}" for n, v in zip(ladder, values))

    def mgf_ladder() -> tuple[bool, str]:
        gaps = []
        for n in ladder:
            dist = dist_of(n)
            m = exact_moments(dist)
            mu, sd = float(m.mean), math.sqrt(m.variance)
            gaps.append(max(abs(mgf(dist, mu, sd, r) - math.exp(r * r / 2)) for r in (-1, 0.5, 1)))
        ok = all(a > b for a, b in zip(gaps, gaps[1:]))
        return ok, "max MGF gap " + ", ".join(f"{n}:{g:.4f}" for n, g in zip(ladder, gaps))

    return [("KS(Y_2, normal) decreasing", ks_ladder), ("MGF(Y_2) -> e^(r^2/2)", mgf_ladder)]


def cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "identities": lambda: _identity_checks(args.order),
        "asymptotics": _asymptotic_checks,
        "convergence": _convergence_checks,
    }
    failures = 0
    for name, check in suites[args.suite]():
        ok, detail = check()
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if not ok:
            failures += 1
            if failures == 1:
                print(f"first counterexample: {name}: {detail}", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


# -- asym ---------------------------------------------------------------------

DP_LIMIT = 50_000


def cmd_asym(args: argparse.Namespace) -> int:
    out: dict[str, object] = {"prop": args.prop, "n": args.n, "t": args.t}
    if args.prop == 1:
        T = 1.0 if args.T is None else args.T
        main = asym.prop1_main_term(args.n, args.t, T)
        sol = asym.solve_saddle_G(args.n, args.t, T)
        out.update(T=T, saddle=sol.alpha, expansion=sol.expansion_value)
        if args.n <= DP_LIMIT:
            out["ratio"] = evaluate_P(args.n, args.t, "equal", T).ratio(main)
        if T == 1.0:
            out["ratio_to_p(n)"] = math.exp(math.log(partition_numbers(args.n)[args.n]) - main.log_abs)
    else:
        alphaT = 0.0 if args.alphaT is None else args.alphaT
        main = asym.prop2_main_term(args.n, args.t, alphaT, args.epsT)
        sol = asym.solve_saddle_Ghat(args.n, args.t, alphaT + args.epsT)
        Tn = math.exp((alphaT + args.epsT) / math.sqrt(args.n))
        out.update(alphaT=alphaT, epsT=args.epsT, T_n=Tn, saddle=sol.alpha, expansion=sol.expansion_value)
        if args.n <= DP_LIMIT:
            out["ratio"] = evaluate_P(args.n, args.t, "multiple", Tn).ratio(main)
        if alphaT + args.epsT == 0:
            out["ratio_to_hardy_ramanujan"] = main.ratio(asym.hardy_ramanujan(args.n))
    out["log_main_term"] = main.log_abs
    out["main_term"] = str(main)
    if args.format == "json":
        print(json.dumps(out))
    else:
        for key, value in out.items():
            print(f"{key}: {value}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _pos_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--ring", choices=("exact", "float"), default="exact")
        p.add_argument("--work-ceiling", type=int, default=EXACT_WORK_CEILING,
                       help="largest n*(n/t) the exact ring accepts")

    p = sub.add_parser("dist", help="distribution of a hook statistic")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--t", type=_pos_int, required=True)
    p.add_argument("--flavor", choices=("equal", "multiple"), default="equal")
    common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o")
    p.add_argument("--brute-force", action="store_true", help="enumerate partitions instead")
    p.add_argument("--guard", type=int, default=BRUTE_FORCE_GUARD)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("table", help="cumulative distribution against its limit")
    p.add_argument("--table", type=int, choices=sorted(TABLES))
    p.add_argument("--n", type=_nonneg_int)
    p.add_argument("--t", type=_pos_int)
    p.add_argument("--flavor", choices=("equal", "multiple"), default="equal")
    p.add_argument("--x", help="comma-separated x grid (may be empty)")
    common(p)
    p.add_argument("--output", "-o", help="CSV file for the rows")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=("identities", "asymptotics", "convergence"), required=True)
    p.add_argument("--order", type=_nonneg_int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asym", help="saddle-point main terms")
    p.add_argument("--prop", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=_pos_int, required=True)
    p.add_argument("--t", type=_pos_int, required=True)
    p.add_argument("--T", type=float)
    p.add_argument("--alphaT", type=float)
    p.add_argument("--epsT", type=float, default=0.0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_asym)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"hookdist: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OverflowError) as exc:
        print(f"hookdist: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
