"""Command-line interface.

Subcommands: ``kstat``, ``hstat``, ``ustat``, ``cumulant`` (generate a
formula), ``convert`` (symmetric-function basis bridges), ``eval``
(evaluate a formula on CSV data), ``verify`` (check unbiasedness against
the brute-force expectation oracle).

Exit codes: 0 success, 1 verification failure, 2 invalid request, 3 order
over cap without --force, 4 pole (sample too small), 5 unreadable data.
"""

import argparse
import csv
import sys

from . import estimators, evaluator, expansions, oracle, render
from .errors import PoleError, ResourceLimitError, ShapeError
from .sympoly import MomentPoly


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ShapeError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="kstatgen",
        description="Generate, verify and evaluate exact unbiased estimators "
                    "of cumulants and moment products as power-sum formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    generate_help = {
        "kstat": "k-statistic: unbiased estimator of a cumulant "
                 "(integer order, or comma-separated multi-index for joint cumulants)",
        "hstat": "h-statistic: unbiased estimator of a central moment",
        "ustat": "U-statistic of a product of moments "
                 "(comma-separated moment orders, e.g. 1,1 for the square of the mean)",
        "cumulant": "cumulant in raw moments (the population target)",
    }
    for kind, help_text in generate_help.items():
        p = sub.add_parser(kind, help=help_text)
        p.add_argument("order", help="integer order or comma-separated multi-index")
        _add_common(p)
        p.set_defaults(handler=_cmd_generate, kind=kind)

    p = sub.add_parser("convert", help="symmetric-function basis conversions")
    p.add_argument("direction", choices=("aug2ps", "ps2aug", "e2ps", "h2ps"),
                   help="aug2ps: augmented monomial to power sums; ps2aug: product "
                        "of power sums to augmented monomials; e2ps / h2ps: "
                        "elementary / complete symmetric polynomial to power sums")
    p.add_argument("order", help="integer order or comma-separated partition")
    _add_common(p)
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("eval", help="evaluate an estimator on CSV data")
    p.add_argument("kind", choices=("kstat", "hstat", "ustat"))
    p.add_argument("order")
    p.add_argument("--data", required=True, help="CSV file, one column per variable")
    p.add_argument("--force", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("verify", help="check unbiasedness with the expectation oracle")
    p.add_argument("kind", choices=("kstat", "hstat", "ustat"))
    p.add_argument("order")
    p.add_argument("--n", required=True, help="comma-separated sample sizes, e.g. 4,5,6")
    p.add_argument("--force", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _add_common(p):
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.add_argument("--force", action="store_true",
                   help="allow orders beyond the comfort caps (may run long)")


def _parse_order(text) -> tuple[int, ...]:
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse order {text!r}; expected e.g. '3' or '2,1'") from None
    return parts


def _over_cap(kind, order) -> bool:
    if kind in ("kstat", "cumulant") and len(order) > 1:
        return sum(order) > estimators.MULTIVARIATE_WEIGHT_CAP
    return sum(order) > estimators.UNIVARIATE_ORDER_CAP


def _cap_refusal(kind, order) -> int:
    print(f"error: {kind} order {','.join(map(str, order))} is over the cap; "
          "pass --force to run anyway", file=sys.stderr)
    return 3


def _generate(kind, order):
    univariate = len(order) == 1
    if kind == "kstat":
        if univariate:
            return estimators.k_statistic(order[0])
        return estimators.multivariate_k_statistic(order)
    if kind == "hstat":
        if not univariate:
            raise ValueError("h-statistics are univariate; give a single integer order")
        return estimators.h_statistic(order[0])
    if kind == "ustat":
        return expansions.u_statistic([(p,) for p in order], allow_large=True)
    if kind == "cumulant":
        if univariate:
            return estimators.cumulant_in_moments(order[0])
        return expansions.joint_cumulant_in_moments(
            expansions.unit_monomials(order), allow_large=True)
    raise ValueError(f"unknown kind {kind!r}")


def _render(formula, fmt) -> str:
    if fmt == "latex":
        return render.render_latex(formula)
    if fmt == "json":
        return render.to_json(formula)
    return render.render_text(formula)


def _cmd_generate(args) -> int:
    order = _parse_order(args.order)
    if not args.force and _over_cap(args.kind, order):
        return _cap_refusal(args.kind, order)
    print(_render(_generate(args.kind, order), args.format))
    return 0


def _cmd_convert(args) -> int:
    order = _parse_order(args.order)
    if not args.force and sum(order) > estimators.UNIVARIATE_ORDER_CAP:
        return _cap_refusal(args.direction, order)
    if args.direction == "aug2ps":
        formula = estimators.augmented_to_power_sums(order)
    elif args.direction == "ps2aug":
        formula = expansions.power_product_to_augmented(
            [(p,) for p in order], allow_large=True)
    elif args.direction == "e2ps":
        formula = estimators.elementary_in_power_sums(_single(order))
    else:
        formula = estimators.complete_in_power_sums(_single(order))
    print(_render(formula, args.format))
    return 0


def _single(order):
    if len(order) != 1:
        raise ValueError("this conversion takes a single integer order")
    return order[0]


def _cmd_eval(args) -> int:
    order = _parse_order(args.order)
    if not args.force and _over_cap(args.kind, order):
        return _cap_refusal(args.kind, order)
    formula = _generate(args.kind, order)
    try:
        sample = evaluator.Sample.from_csv(args.data)
    except (OSError, csv.Error, ValueError) as exc:
        print(f"error: cannot read {args.data}: {exc}", file=sys.stderr)
        return 5
    print(evaluator.evaluate(formula, sample))
    return 0


def _cmd_verify(args) -> int:
    order = _parse_order(args.order)
    if not args.force and _over_cap(args.kind, order):
        return _cap_refusal(args.kind, order)
    n_values = [int(piece) for piece in args.n.split(",")]
    estimator = _generate(args.kind, order)
    target = _verification_target(args.kind, order)
    all_pass = True
    for n in n_values:
        got = oracle.expectation(estimator, n)
        if got == target:
            print(f"n={n}: PASS")
        else:
            all_pass = False
            print(f"n={n}: FAIL")
            print(f"  expected: {render.render_text(target)}")
            print(f"  oracle:   {render.render_text(got)}")
    return 0 if all_pass else 1


def _verification_target(kind, order):
    if kind == "kstat":
        if len(order) == 1:
            return estimators.cumulant_in_moments(order[0])
        return expansions.joint_cumulant_in_moments(
            expansions.unit_monomials(order), allow_large=True)
    if kind == "hstat":
        return estimators.central_moment_in_moments(_single(order))
    # ustat: the moment product itself
    return MomentPoly(1, {tuple((p,) for p in order): 1})


if __name__ == "__main__":
    sys.exit(main())
