import itertools
import random
from fractions import Fraction

import pytest

from kstatgen import (CoefRat, MomentPoly, NPoly, PoleError,
                      ResourceLimitError, ShapeError, SymPoly,
                      cumulant_in_moments, expectation, k_statistic,
                      moment_value, multivariate_k_statistic, numeric_check)


def reference_expectation(p, n):
    """Plain nested-loop expansion: every factor assigned to every unit in
    turn, one full pass per term, in whatever order itertools produces."""
    v = p.variable_count
    acc = {}
    for key, coeff in p.terms.items():
        c = coeff.substitute(n)
        for assignment in itertools.product(range(n), repeat=len(key)):
            units = [[0] * v for _ in range(n)]
            for pos, j in enumerate(assignment):
                for axis, e in enumerate(key[pos]):
                    units[j][axis] += e
            mkey = tuple(sorted((tuple(u) for u in units if any(u)),
                                key=lambda ix: (-sum(ix), tuple(-e for e in ix))))
            acc[mkey] = acc.get(mkey, Fraction(0)) + c
    return MomentPoly(v, acc)


def test_square_of_the_sum_of_two_units():
    s1 = SymPoly.symbol((1,))
    a1, a2 = MomentPoly.symbol((1,)), MomentPoly.symbol((2,))
    assert expectation(s1 * s1, 2) == a2.scale(2) + (a1 * a1).scale(2)


def test_variance_estimator_unbiasedness_instance():
    assert expectation(k_statistic(2), 3) == cumulant_in_moments(2)


def test_scaled_sum_is_the_mean_at_every_size():
    mean = SymPoly.symbol((1,)).scale(CoefRat(1, NPoly.variable()))
    for n in range(1, 8):
        assert expectation(mean, n) == MomentPoly.symbol((1,))


def test_agrees_with_the_reference_expansion():
    polys = [
        k_statistic(3),  # valid from n = 3 on
        multivariate_k_statistic((1, 1)),
        SymPoly.symbol((2,)) * SymPoly.symbol((1,))
        + SymPoly.symbol((3,)).scale(Fraction(1, 2)),
        SymPoly.constant(Fraction(2, 3), 1) + SymPoly.symbol((1,)),
    ]
    for p in polys:
        for n in (3, 4, 5):
            assert expectation(p, n) == reference_expectation(p, n)


def test_linearity():
    rng = random.Random(3)

    def random_poly():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            key = tuple((rng.randint(1, 3),) for _ in range(rng.randint(1, 2)))
            terms[key] = rng.randint(-4, 4)
        return SymPoly(1, terms)

    for _ in range(15):
        p, q = random_poly(), random_poly()
        n = rng.randint(1, 4)
        assert expectation(p + q, n) == expectation(p, n) + expectation(q, n)


def test_numeric_checks():
    assert numeric_check(k_statistic(2), {(1,): 0, (2,): 1}, 4) == 1
    factorized = {(1, 0): Fraction(1, 2), (0, 1): Fraction(3),
                  (1, 1): Fraction(3, 2)}
    assert numeric_check(multivariate_k_statistic((1, 1)), factorized, 3) == 0
    silent = {(1,): 0, (2,): 0, (3,): 0}
    assert numeric_check(k_statistic(3), silent, 3) == 0


def test_missing_moment_symbol_is_a_domain_error():
    with pytest.raises(ValueError):
        numeric_check(k_statistic(2), {(1,): 1}, 4)


def test_moment_value_rejects_other_families():
    with pytest.raises(ShapeError):
        moment_value(SymPoly.symbol((1,)), {(1,): 1})


def test_caps_and_poles():
    with pytest.raises(ResourceLimitError):
        expectation(SymPoly.symbol((7,)), 2)
    with pytest.raises(ResourceLimitError):
        expectation(SymPoly.symbol((1,)), 9)
    with pytest.raises(PoleError):
        expectation(k_statistic(2), 1)
    with pytest.raises(ShapeError):
        expectation(MomentPoly.symbol((1,)), 2)
    with pytest.raises(ValueError):
        expectation(SymPoly.symbol((1,)), 0)
