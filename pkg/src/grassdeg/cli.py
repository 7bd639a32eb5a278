"""Command-line interface.

Every command prints one JSON envelope with sorted keys::

    {"command": ..., "parameters": {...}, "results": {...},
     "seed": null | int, "toolVersion": "..."}

Exit codes: 0 when every internal cross-check passes, 2 when two routes
disagree, 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .closure import (
    GRMatrix,
    MatrixParseError,
    ProjPoint,
    affine_member,
    boundary_generator,
    degeneration_error,
    epsilon_family_check,
    orbit_dimension,
    parse_gaussian,
    parse_matrix,
    projective_member,
    rank_exact,
)
from .degree import closed_form_degree, degree, plucker_degree, selberg_lhs_monte_carlo, selberg_rhs
from .repdim import DEFAULT_BUDGET, NotStabilized, degree_by_differences

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2

DEFAULT_JACK_BUDGET = 6

# the ratio d/d_hat is reported as computed; for k = 1, 2 it equals 2^(n-1)
# and 2(n-1), the reciprocals of what one might expect from the informal comparison
RATIO_NOTE = (
    "ratio = degree / plucker_degree, computed exactly; for k=1 it is 2^(n-1) "
    "and for k=2 it is 2(n-1), so the involution model has the larger degree"
)

MC_SIGMAS = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def envelope(command: str, parameters: dict, results, seed: int | None = None) -> str:
    return json.dumps(
        {
            "command": command,
            "parameters": parameters,
            "results": results,
            "seed": seed,
            "toolVersion": __version__,
        },
        sort_keys=True,
        indent=2,
    )


def _jack_guard(k: int, n: int, budget: int) -> None:
    if min(k, n - k) > budget:
        raise UsageError(f"Jack expansion needs k = {min(k, n - k)} > budget {budget}; raise --jack-budget")


def cmd_degree(args) -> tuple[dict, int]:
    k, n = args.k, args.n
    if not 1 <= k <= n - 1:
        raise UsageError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    kk = min(k, n - k)
    methods = ["formula", "closed-form", "oracle"] if args.method == "all" else [args.method]
    routes: dict[str, int] = {}
    skipped: dict[str, str] = {}
    results: dict = {}
    for method in methods:
        try:
            if method == "formula":
                _jack_guard(k, n, args.jack_budget)
                report = degree(k, n)
                routes["formula"] = report.degree
                results["alpha"] = str(report.alpha_kn)
                results["terms"] = [t.to_json() for t in report.terms]
            elif method == "closed-form":
                routes["closed-form"] = closed_form_degree(kk, n)
            else:
                routes["oracle"] = degree_by_differences(kk, n, budget=args.budget)
        except (ValueError, NotStabilized, UsageError) as exc:
            if args.method != "all":
                raise UsageError(str(exc)) from None
            skipped[method] = str(exc)
    if not routes:
        raise UsageError("no route could evaluate this degree: " + "; ".join(skipped.values()))
    agree = len(set(routes.values())) == 1
    results.update(
        {
            "degree": next(iter(routes.values())) if agree else None,
            "routes": routes,
            "skipped": skipped,
            "agree": agree,
        }
    )
    return results, EXIT_OK if agree else EXIT_DISAGREE


def _human_degree(k: int, n: int, results: dict) -> str:
    lines = [f"d_{{{k},{n}}} = {results['degree']}"]
    for name, value in results["routes"].items():
        lines.append(f"  {name:<12} {value}")
    for name, why in results["skipped"].items():
        lines.append(f"  {name:<12} skipped: {why}")
    if "terms" in results:
        lines.append(f"  alpha = {results['alpha']}")
        header = ("lambda", "A", "B", "C")
        rows = []
        for t in results["terms"]:
            a = t["A_coeff"] + (f" pi^({t['A_sqrtpi']}/2)" if t["A_sqrtpi"] else "")
            b = t["B_coeff"] + (f" pi^({t['B_sqrtpi']}/2)" if t["B_sqrtpi"] else "")
            rows.append((str(tuple(t["lambda"])), a, b, t["C"]))
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(4)]
        for r in [header] + rows:
            lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def cmd_table(args) -> tuple[dict, int]:
    if args.kmax < 1 or args.nmax < 2 * args.kmax:
        raise UsageError(f"need 1 <= kmax and 2*kmax <= nmax, got kmax={args.kmax}, nmax={args.nmax}")
    if args.kmax > args.jack_budget:
        raise UsageError(f"kmax = {args.kmax} exceeds the Jack budget {args.jack_budget}")
    rows = []
    for k in range(1, args.kmax + 1):
        for n in range(2 * k, args.nmax + 1):
            d = degree(k, n).degree
            pl = plucker_degree(k, n)
            rows.append({"k": k, "n": n, "degree": d, "plucker_degree": pl, "ratio": str(Fraction(d, pl))})
    return {"rows": rows, "note": RATIO_NOTE}, EXIT_OK


def cmd_selberg(args) -> tuple[dict, int]:
    if min(args.m, args.p, args.d) < 1:
        raise UsageError("m, p, d must be positive")
    exact = selberg_rhs(args.m, args.p, args.d)
    results = {"exact": str(exact), "exact_float": float(exact)}
    code = EXIT_OK
    if args.mc is not None:
        if args.mc < 1:
            raise UsageError("--mc must be positive")
        est, err = selberg_lhs_monte_carlo(args.m, args.p, args.d, args.mc, args.seed)
        agree = bool(abs(est - float(exact)) <= MC_SIGMAS * err)
        results["monte_carlo"] = {
            "samples": args.mc,
            "estimate": float(est),
            "standard_error": float(err),
            "relative_error": float(abs(est - float(exact)) / float(exact)),
            "agree": agree,
        }
        code = EXIT_OK if agree else EXIT_DISAGREE
    return results, code


def _scalar(text: str):
    try:
        return parse_gaussian(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_closure(args) -> tuple[dict, int]:
    sub = args.sub
    if sub == "check":
        try:
            X = parse_matrix(args.matrix)
        except MatrixParseError as exc:
            raise UsageError(str(exc)) from None
        t = _scalar(args.t)
        if not X.is_symmetric():
            raise UsageError("matrix must be square and symmetric")
        n = X.rows
        if not 1 <= args.k <= n - 1:
            raise UsageError(f"need 1 <= k <= n-1, got k={args.k}, n={n}")
        pt = ProjPoint(X, t)
        member = projective_member(pt, args.k)
        tI = GRMatrix.identity(n) * t
        results = {
            "member": member,
            "at_infinity": not t,
            "rank_X_plus_tI": rank_exact(X + tI),
            "rank_X_minus_tI": rank_exact(X - tI),
            "X2_equals_t2I": X * X == GRMatrix.identity(n) * (t * t),
        }
        code = EXIT_OK
        if t:
            affine = affine_member(X * (1 / t), args.k)
            results["affine_member"] = affine
            # the closure contains the affine variety
            if affine and not member:
                code = EXIT_DISAGREE
        return results, code
    if sub == "boundary":
        X = boundary_generator(args.n, args.d)
        rank = rank_exact(X)
        ok = (X * X).is_zero() and not X.trace() and rank == args.d
        return {"matrix": X.to_strings(), "rank": rank, "square_zero_traceless": ok}, EXIT_OK if ok else EXIT_DISAGREE
    if sub == "orbit-dim":
        if not 1 <= args.d <= args.n // 2:
            raise UsageError(f"need 1 <= d <= n/2, got n={args.n}, d={args.d}")
        dim = orbit_dimension(args.n, args.d)
        expected = args.d * (args.n - args.d)
        return {"dimension": dim, "expected": expected, "agree": dim == expected}, (
            EXIT_OK if dim == expected else EXIT_DISAGREE
        )
    # epsilon
    eps = _scalar(args.eps)
    if eps.im or eps.re <= 0:
        raise UsageError("--eps must be a positive rational")
    report = epsilon_family_check(args.n, args.k, args.d, eps.re)
    results = {
        "identities": report.identities,
        "all_hold": bool(report),
        "failed": report.failed,
        "float_distance_to_boundary": degeneration_error(args.n, args.k, args.d, float(eps.re)),
    }
    return results, EXIT_OK if report else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grassdeg", description="Degree of the real Grassmannian in the involution model.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("degree", help="degree d_{k,n}")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["formula", "closed-form", "oracle", "all"], default="formula")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max k(n-k) for the oracle")
    p.add_argument("--jack-budget", type=int, default=DEFAULT_JACK_BUDGET, help="max k for the Jack expansion")
    p.add_argument("--human", action="store_true", help="print a readable per-lambda table")

    p = subs.add_parser("table", help="table of degrees")
    p.add_argument("kmax", type=int)
    p.add_argument("nmax", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--jack-budget", type=int, default=DEFAULT_JACK_BUDGET)

    p = subs.add_parser("selberg", help="the integral identity behind the formula")
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--mc", type=int, default=None, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0)

    p = subs.add_parser("closure", help="projective-closure tools")
    csubs = p.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    c = csubs.add_parser("check", help="membership of [X : t]")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--t", default="1")
    c.add_argument("--matrix", required=True, help='JSON like [["1","0"],["0","-1"]] or diag(1,-1)')
    c = csubs.add_parser("boundary", help="base point of the rank-d boundary stratum")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c = csubs.add_parser("orbit-dim", help="dimension of the rank-d boundary stratum")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c = csubs.add_parser("epsilon", help="identities of the degenerating family")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--eps", required=True)
    return parser


_PARAMS = {
    "degree": ("k", "n", "method", "budget", "jack_budget"),
    "table": ("kmax", "nmax", "format", "jack_budget"),
    "selberg": ("m", "p", "d", "mc"),
}
_CLOSURE_PARAMS = {
    "check": ("k", "t", "matrix"),
    "boundary": ("n", "d"),
    "orbit-dim": ("n", "d"),
    "epsilon": ("n", "k", "d", "eps"),
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"degree": cmd_degree, "table": cmd_table, "selberg": cmd_selberg, "closure": cmd_closure}
    if args.command == "closure":
        command = f"closure {args.sub}"
        params = {name: getattr(args, name) for name in _CLOSURE_PARAMS[args.sub]}
    else:
        command = args.command
        params = {name: getattr(args, name) for name in _PARAMS[args.command]}
    seed = args.seed if args.command == "selberg" and args.mc is not None else None
    try:
        results, code = handlers[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"grassdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if code == EXIT_DISAGREE:
        print(f"grassdeg: cross-check failed for {command}", file=sys.stderr)
    if args.command == "table" and args.format == "csv":
        print("k,n,degree,plucker_degree,ratio")
        for row in results["rows"]:
            print(",".join(str(row[c]) for c in ("k", "n", "degree", "plucker_degree", "ratio")))
        print(f"note: {RATIO_NOTE}", file=sys.stderr)
    elif args.command == "degree" and args.human:
        print(_human_degree(args.k, args.n, results))
    else:
        print(envelope(command, params, results, seed))
    return code


if __name__ == "__main__":
    sys.exit(main())
