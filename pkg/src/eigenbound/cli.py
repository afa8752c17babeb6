"""Command-line front end.

Subcommands: spectra, bound-enum, make-space, space-op, degenerate,
identities, verify-extremal, probe-maximality, run-suite.  All output is
canonical JSON written to --out (default stdout).  Exit codes: 0 pass,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from random import Random
from typing import Any

from .degeneration import (
    component_dims,
    grassmannian_limit,
    one_param_family,
    weight_decomposition,
)
from .errors import EigenboundError
from .harness import maximality_probe, run_full_suite, verify_extremal
from .identities import (
    BorderedInstance,
    DiscriminantInstance,
    bordered_matrix,
    closed_form_char_poly,
    quartic_discriminant_check,
    two_zeros_resultant_check,
)
from .polynomials import char_poly
from .sampling import distinct_nonzero_rationals, distinct_rationals, random_rational
from .serialize import (
    dumps_canonical,
    format_rational,
    load_json,
    matrix_from_obj,
    subspace_from_obj,
    subspace_to_obj,
)
from .spaces import enumerate_configs, extremal_space, max_dimension
from .spectral import spectral_profile
from .subspaces import check_unit_implications, conjugate, is_borel_invariant, sum_and_intersection


def _emit(obj: Any, out: str | None) -> None:
    text = dumps_canonical(obj)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_spectra(args: argparse.Namespace) -> int:
    m = matrix_from_obj(load_json(args.matrix))
    prof = spectral_profile(m)
    _emit(
        {
            "n": prof.n,
            "distinct_count": prof.distinct_count,
            "simple_count": prof.simple_count,
            "regular": prof.regular,
        },
        args.out,
    )
    return 0


def _cmd_bound_enum(args: argparse.Namespace) -> int:
    best, argmax = enumerate_configs(args.n, args.k)
    _emit(
        {
            "n": args.n,
            "k": args.k,
            "max": best,
            "formula": max_dimension(args.n, args.k),
            "argmax": [{"l": c.l, "parts": list(c.parts)} for c in argmax],
        },
        args.out,
    )
    return 0 if best == max_dimension(args.n, args.k) else 1


def _cmd_make_space(args: argparse.Namespace) -> int:
    _emit(subspace_to_obj(extremal_space(args.n, args.k, args.p)), args.out)
    return 0


def _cmd_space_op(args: argparse.Namespace) -> int:
    v = subspace_from_obj(load_json(args.space))
    if args.op in ("sum", "intersect"):
        if args.other is None:
            raise EigenboundError(f"--other is required for op {args.op}")
        w = subspace_from_obj(load_json(args.other))
        total, meet = sum_and_intersection(v, w)
        _emit(subspace_to_obj(total if args.op == "sum" else meet), args.out)
        return 0
    if args.op == "conjugate":
        if args.matrix is None:
            raise EigenboundError("--matrix is required for op conjugate")
        p = matrix_from_obj(load_json(args.matrix))
        _emit(subspace_to_obj(conjugate(v, p)), args.out)
        return 0
    # borel-check
    invariant = is_borel_invariant(v)
    result: dict[str, Any] = {"borel_invariant": invariant}
    if invariant:
        result["forced_unit_violations"] = [
            {"rule": x.rule, "i": x.i, "j": x.j} for x in check_unit_implications(v)
        ]
    _emit(result, args.out)
    return 0 if invariant and not result.get("forced_unit_violations") else 1


def _cmd_degenerate(args: argparse.Namespace) -> int:
    weights = tuple(int(w) for w in args.weights.split(","))
    if args.neg:
        weights = tuple(-w for w in weights)
    v = subspace_from_obj(load_json(args.space))
    limit = grassmannian_limit(one_param_family(v, weights))
    components = weight_decomposition(limit, weights)
    _emit(
        {
            "weights": list(weights),
            "limit": subspace_to_obj(limit),
            "components": [
                {
                    "weight": c.j,
                    "dimension": c.component.dim,
                    "basis": subspace_to_obj(c.component)["basis"],
                }
                for c in components
            ],
        },
        args.out,
    )
    return 0


def _identity_trial(check: str, rng: Random, index: int) -> dict[str, Any] | None:
    """One randomized identity trial; returns a witness dict on failure."""
    if check == "charpoly":
        n = rng.randint(4, 7)
        k = rng.randint(3, n - 1)
        inst = BorderedInstance(
            n,
            k,
            tuple(distinct_rationals(rng, k)),
            tuple(random_rational(rng) for _ in range(n - k + 1)),
            tuple(random_rational(rng) for _ in range(n - 1)),
        )
        mu = random_rational(rng)
        ok = closed_form_char_poly(inst, mu) == char_poly(bordered_matrix(inst, mu)) * ((-1) ** n)
        if not ok:
            return {"trial": index, "n": n, "k": k, "mu": format_rational(mu)}
        return None
    if check == "twozeros":
        gap = 1 + index % 4
        k = rng.choice((3, 4, 5))
        n = k + gap
        inst = BorderedInstance(
            n,
            k,
            tuple(distinct_rationals(rng, k)),
            tuple(random_rational(rng) for _ in range(n - k + 1)),
            tuple(random_rational(rng) for _ in range(n - 1)),
        )
        rep = two_zeros_resultant_check(inst)
        if not rep.ok:
            return {"trial": index, "n": n, "k": k}
        return None
    # discriminant
    lams = distinct_nonzero_rationals(rng, 2)
    inst = DiscriminantInstance(
        lams[0], lams[1], random_rational(rng), random_rational(rng), index % 2 == 0
    )
    rep = quartic_discriminant_check(inst)
    if not rep.ok:
        return {
            "trial": index,
            "lambda1": format_rational(inst.lambda1),
            "lambda2": format_rational(inst.lambda2),
            "x_i": format_rational(inst.x_i),
            "x_pq": format_rational(inst.x_pq),
            "with_e_block": inst.with_e_block,
        }
    return None


def _cmd_identities(args: argparse.Namespace) -> int:
    rng = Random(args.seed)
    first_failure = None
    for idx in range(args.trials):
        witness = _identity_trial(args.check, rng, idx)
        if witness is not None:
            first_failure = witness
            break
    result = {
        "check": args.check,
        "trials": args.trials,
        "seed": args.seed,
        "passed": first_failure is None,
    }
    if first_failure is not None:
        result["first_counterexample"] = first_failure
    _emit(result, args.out)
    return 0 if first_failure is None else 1


def _cmd_verify_extremal(args: argparse.Namespace) -> int:
    report = verify_extremal(args.n, args.k, args.p, samples=args.samples, seed=args.seed)
    _emit(report.to_obj(), args.out)
    return 0 if report.passed else 1


def _cmd_probe(args: argparse.Namespace) -> int:
    report = maximality_probe(args.n, args.k, args.p, trials=args.trials, seed=args.seed)
    _emit(report.to_obj(), args.out)
    return 0 if report.passed else 1


def _cmd_run_suite(args: argparse.Namespace) -> int:
    report = run_full_suite(
        args.max_n,
        seed=args.seed,
        samples=args.samples,
        trials=args.trials,
    )
    _emit(report.to_obj(), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenbound",
        description="Exact verification toolkit for matrix spaces with bounded distinct eigenvalues",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("spectra", help="spectral profile of a matrix")
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    common(p)
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("bound-enum", help="enumerate diagonal-block configurations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_bound_enum)

    p = sub.add_parser("make-space", help="write an extremal space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_make_space)

    p = sub.add_parser("space-op", help="subspace arithmetic")
    p.add_argument("--op", required=True, choices=["sum", "intersect", "conjugate", "borel-check"])
    p.add_argument("--space", required=True, help="subspace JSON file")
    p.add_argument("--other", default=None, help="second subspace (sum/intersect)")
    p.add_argument("--matrix", default=None, help="conjugating matrix (conjugate)")
    common(p)
    p.set_defaults(func=_cmd_space_op)

    p = sub.add_parser("degenerate", help="one-parameter limit and weight split")
    p.add_argument("--weights", required=True, help="comma-separated integer weights")
    p.add_argument("--space", required=True, help="subspace JSON file")
    p.add_argument("--neg", action="store_true", help="negate the weights (t -> infinity side)")
    common(p)
    p.set_defaults(func=_cmd_degenerate)

    p = sub.add_parser("identities", help="randomized closed-form identity checks")
    p.add_argument("--check", required=True, choices=["charpoly", "twozeros", "discriminant"])
    p.add_argument("--trials", type=int, default=25)
    common(p)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("verify-extremal", help="check battery for one extremal space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    common(p)
    p.set_defaults(func=_cmd_verify_extremal)

    p = sub.add_parser("probe-maximality", help="randomized maximality evidence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    common(p)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("run-suite", help="all verification sections")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--trials", type=int, default=1000)
    common(p)
    p.set_defaults(func=_cmd_run_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EigenboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
