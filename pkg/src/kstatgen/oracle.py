"""Brute-force expectation of power-sum polynomials.

This module referees every unbiasedness claim, so it deliberately shares
no machinery with the partition expansions it checks: each power-sum
product is multiplied out over n explicit sample units, and independence
of distinct units turns every expanded monomial into a product of raw
moments.  No set partitions, no signed factorial weights, no symbolic n —
the n-dependence of an expectation emerges purely from counting units.
"""

from fractions import Fraction

from .errors import ResourceLimitError, ShapeError
from .sympoly import MomentPoly, SymPoly, canonical_monomial

EXPANSION_WEIGHT_CAP = 6
SAMPLE_SIZE_CAP = 8


def expectation(p: SymPoly, n: int) -> MomentPoly:
    """Exact E[p] at the concrete sample size n, in raw moments.

    Substitutes s_I -> sum_j x_j^I over n independent identically
    distributed units, expands the product fully (distributing one factor
    at a time over the units), and maps each unit's accumulated exponent
    vector to the matching moment symbol.
    """
    if not isinstance(p, SymPoly):
        raise ShapeError(f"expectation works on power-sum polynomials, got {type(p).__name__}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"sample size must be a positive integer, got {n!r}")
    if n > SAMPLE_SIZE_CAP:
        raise ResourceLimitError(f"sample size {n} is past the expansion cap {SAMPLE_SIZE_CAP}")
    if p.max_weight > EXPANSION_WEIGHT_CAP:
        raise ResourceLimitError(
            f"term weight {p.max_weight} is past the expansion cap {EXPANSION_WEIGHT_CAP}")
    v = p.variable_count
    zero_unit = (0,) * v
    acc: dict[tuple, Fraction] = {}
    for key, coeff in p.terms.items():
        c = coeff.substitute(n)  # a pole at this n propagates as PoleError
        if not c:
            continue
        states = {(zero_unit,) * n: 1}
        for index in key:
            nxt: dict[tuple, int] = {}
            for units, count in states.items():
                for j in range(n):
                    bumped = tuple(a + b for a, b in zip(units[j], index))
                    assigned = units[:j] + (bumped,) + units[j + 1:]
                    nxt[assigned] = nxt.get(assigned, 0) + count
            states = nxt
        for units, count in states.items():
            mkey = canonical_monomial(u for u in units if any(u))
            acc[mkey] = acc.get(mkey, Fraction(0)) + c * count
    return MomentPoly(v, acc)


def moment_value(m: MomentPoly, moment_assignment) -> Fraction:
    """Evaluate a moment polynomial at a concrete assignment index -> value."""
    if not isinstance(m, MomentPoly):
        raise ShapeError(f"expected a MomentPoly, got {type(m).__name__}")
    law = {tuple(ix): Fraction(val) for ix, val in moment_assignment.items()}
    total = Fraction(0)
    for key, coeff in m.terms.items():
        value = coeff.as_fraction()
        for index in key:
            if index not in law:
                raise ValueError(f"moment assignment is missing index {index}")
            value *= law[index]
        total += value
    return total


def numeric_check(p: SymPoly, moment_assignment, n: int) -> Fraction:
    """Expectation of p at sample size n under a concrete moment law."""
    return moment_value(expectation(p, n), moment_assignment)
