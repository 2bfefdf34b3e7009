"""``hamrep`` command line.

Reports go to stdout as JSON, a short summary to stderr. Exit codes:
0 all checks passed, 1 a check failed, 2 usage error, 3 unreadable input.
"""
from __future__ import annotations

import argparse
import itertools
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import graded, serialize
from .catj import CatJModule, big_h, cyclicity_probe, verify_module_axioms
from .interpolation import DEFAULT_POINTS, DEFAULT_SEED, delta_correction_check, verify_polynomial_action
from .repdata import (
    IrreducibleSpec,
    RepresentationError,
    eigenvalue_bound_check,
    from_sp_rep,
    sp_defining_rep,
    sp_trivial_rep,
    validate_rep,
)
from .report import Report
from .torus import verify_jacobi

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def rational_list(text: str) -> tuple:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {text!r}")


def positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _load_rep(path: str):
    return serialize.rep_from_json(serialize.load(path))


def cmd_verify_algebra(args) -> Report:
    report = Report("verify-algebra", seed=args.seed, info={"m": args.m, "extent": args.extent})
    report.extend(verify_jacobi(args.m, args.samples, args.seed, args.extent))
    report.extend(graded.verify_grading(args.m, max_grade=2))
    report.extend(graded.verify_sp_transport(args.m))
    return report


def cmd_verify_module(args) -> Report:
    rep = _load_rep(args.rep)
    lam = args.lam or (Fraction(0),) * rep.n
    if len(lam) != rep.n:
        raise UsageError(f"--lambda needs {rep.n} entries, got {len(lam)}")
    report = Report("verify-module", seed=args.seed,
                    info={"m": rep.m, "dim": rep.dim, "lambda": [serialize.q(x) for x in lam]})
    report.extend(validate_rep(rep))
    report.extend(verify_module_axioms(CatJModule(rep, lam), args.samples, args.seed, args.extent))
    report.extend(eigenvalue_bound_check(rep), prefix="eigenvalue-bound:")
    return report


def action_table(rep, radius: int = 2) -> list[dict]:
    """H(r) for 0 < sum |r_a| <= radius, so the h(r) action can be read off."""
    rows = []
    for r in itertools.product(range(-radius, radius + 1), repeat=rep.n):
        if 0 < sum(abs(x) for x in r) <= radius:
            rows.append({"r": list(r), "H": serialize.matrix_to_json(big_h(rep, r))})
    return rows


def cmd_build_irreducible(args) -> Report:
    m = args.m
    mu = args.mu or (Fraction(0),) * (2 * m)
    if len(mu) != 2 * m:
        raise UsageError(f"--mu needs {2 * m} entries, got {len(mu)}")
    phi = sp_defining_rep(m) if args.phi == "defining" else sp_trivial_rep(m)
    spec = IrreducibleSpec(m, phi, mu)
    report = Report("build-irreducible", info={"m": m, "phi": args.phi, "mu": [serialize.q(x) for x in mu]})
    try:
        rep = from_sp_rep(spec, require_irreducible=args.require_irreducible)
    except RepresentationError as exc:
        report.add("construct", False, str(exc))
        return report
    report.add("construct", True)
    report.extend(validate_rep(rep))
    payload = serialize.rep_to_json(rep)
    if args.out:
        Path(args.out).write_text(serialize.dump(payload) + "\n")
        report.info["out"] = args.out
    else:
        report.info["rep"] = payload
    report.info["keys"] = [list(k) for k in rep.P]
    report.info["action_table"] = action_table(rep)
    return report


def cmd_interpolate(args) -> Report:
    rep = _load_rep(args.rep)
    report = Report("interpolate", seed=args.seed, info={"extent": args.extent})
    if args.extent < rep.degree_bound + 1:
        raise UsageError(f"--extent must be >= degree_bound + 1 = {rep.degree_bound + 1}")
    sub, fit = verify_polynomial_action(rep, args.extent, args.points, args.seed)
    report.info.update(sub.info)
    report.extend(sub)
    report.extend(delta_correction_check(rep))
    if fit is not None:
        payload = serialize.polyendo_to_json(fit)
        if args.out:
            Path(args.out).write_text(serialize.dump(payload) + "\n")
            report.info["out"] = args.out
        else:
            report.info["poly"] = payload
    return report


def cmd_hwv(args) -> Report:
    vectors = graded.highest_weight_vectors(args.m, args.n)
    report = Report("hwv", info={
        "m": args.m, "n": args.n,
        "vectors": [serialize.poly_field_to_json(v) for v in vectors],
    })
    report.add("unique-highest-weight", len(vectors) == 1, None if len(vectors) == 1 else len(vectors))
    return report


def cmd_irreducible_component(args) -> Report:
    try:
        return graded.verify_irreducible_component(args.m, args.n, guard=args.guard)
    except OverflowError as exc:
        raise UsageError(str(exc))


def cmd_probe(args) -> Report:
    rep = _load_rep(args.rep)
    lam = args.lam or (Fraction(0),) * rep.n
    v = args.v or tuple(Fraction(1 if i == 0 else 0) for i in range(rep.dim))
    if len(v) != rep.dim or len(lam) != rep.n:
        raise UsageError("--v must have dim V entries and --lambda N entries")
    return cyclicity_probe(CatJModule(rep, lam), args.radius, v, depth=args.depth)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hamrep", description=__doc__.splitlines()[0])
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    sub = p.add_subparsers(dest="command", required=True)

    def sampled(sp, samples):
        sp.add_argument("--samples", type=nonnegative, default=samples)
        sp.add_argument("--seed", type=nonnegative, default=0)
        sp.add_argument("--extent", type=positive, default=3)

    sp = sub.add_parser("verify-algebra", help="Jacobi, grading and sp_N transport checks")
    sp.add_argument("--m", type=positive, required=True)
    sampled(sp, 1000)
    sp.set_defaults(func=cmd_verify_algebra)

    sp = sub.add_parser("verify-module", help="validate a rep file and the module it defines")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--lambda", dest="lam", type=rational_list, default=None)
    sampled(sp, 200)
    sp.set_defaults(func=cmd_verify_module)

    sp = sub.add_parser("build-irreducible", help="rep file for an sp_N + abelian module")
    sp.add_argument("--m", type=positive, required=True)
    sp.add_argument("--phi", choices=("defining", "trivial"), required=True)
    sp.add_argument("--mu", type=rational_list, default=None)
    sp.add_argument("--out")
    sp.add_argument("--require-irreducible", action="store_true")
    sp.set_defaults(func=cmd_build_irreducible)

    sp = sub.add_parser("interpolate", help="fit H(r) on a grid and compare with P^(k)")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--extent", type=positive, required=True)
    sp.add_argument("--points", type=nonnegative, default=DEFAULT_POINTS)
    sp.add_argument("--seed", type=nonnegative, default=DEFAULT_SEED)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_interpolate)

    sp = sub.add_parser("hwv", help="highest weight vectors of L_n")
    sp.add_argument("--m", type=positive, required=True)
    sp.add_argument("--n", type=nonnegative, required=True)
    sp.set_defaults(func=cmd_hwv)

    sp = sub.add_parser("irreducible-component", help="span of ad(L_0) on X((n+2)e_1)")
    sp.add_argument("--m", type=positive, required=True)
    sp.add_argument("--n", type=nonnegative, required=True)
    sp.add_argument("--guard", type=positive, default=graded.GUARD)
    sp.set_defaults(func=cmd_irreducible_component)

    sp = sub.add_parser("probe", help="heuristic cyclicity probe of the weight space")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--lambda", dest="lam", type=rational_list, default=None)
    sp.add_argument("--v", type=rational_list, default=None)
    sp.add_argument("--radius", type=positive, default=2)
    sp.add_argument("--depth", type=positive, default=2)
    sp.set_defaults(func=cmd_probe)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    start = time.perf_counter()
    try:
        report = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, OSError) as exc:
        # ParseError, and payloads that parse as JSON but are structurally invalid
        print(f"hamrep: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.timing:
        report.timing = round(time.perf_counter() - start, 6)
    print(serialize.dump(report.to_dict()))
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
