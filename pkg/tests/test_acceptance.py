"""Acceptance suite: one test per criterion, every comparison exact.

Each test prints one PASS line; run ``pytest tests/test_acceptance.py -v -s``
to see them alongside the pytest verdicts.
"""

import math
import random
import time
from fractions import Fraction

from kstatgen import (AugPoly, CoefRat, MomentPoly, NPoly, Sample, SymPoly,
                      all_set_partitions, augmented_poly_to_power_sums,
                      augmented_to_power_sums, complete_in_power_sums,
                      cumulant_in_moments, elementary_in_power_sums,
                      evaluate, expand_chi_dot_product, expectation,
                      falling_factorial, h_statistic, integer_partitions,
                      joint_cumulant_in_moments, k_statistic, moment_value,
                      multivariate_k_statistic, numeric_check,
                      power_product_to_augmented, set_partitions, u_statistic,
                      unit_monomials)
from kstatgen import cli

import _brute

s = SymPoly.symbol
N = NPoly.variable()


def _report(number, description):
    print(f"ACCEPTANCE {number}: PASS - {description}")


def test_criterion_1_k21_exact_match():
    start = time.perf_counter()
    numerator = (s((2, 1)).scale(N * N)
                 - (s((1, 0)) * s((1, 1))).scale(N * 2)
                 - (s((2, 0)) * s((0, 1))).scale(N)
                 + (s((1, 0)) * s((1, 0)) * s((0, 1))).scale(2))
    expected = numerator.scale(CoefRat(1, falling_factorial(3)))
    assert multivariate_k_statistic((2, 1)) == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(1, f"k21 equals the published closed form exactly ({elapsed:.3f}s)")


def test_criterion_2_intermediate_expansions_exact():
    s21, s10, s11, s20, s01 = (s(ix) for ix in ((2, 1), (1, 0), (1, 1), (2, 0), (0, 1)))
    assert expand_chi_dot_product([(1, 0), (1, 1)]) == s10 * s11 - s21
    assert expand_chi_dot_product([(2, 0), (0, 1)]) == s20 * s01 - s21
    assert expand_chi_dot_product([(1, 0), (1, 0), (0, 1)]) == (
        s21.scale(2) - s20 * s01 - (s10 * s11).scale(2) + s10 * s10 * s01)
    _report(2, "the three two-variable expansion identities match exactly")


def test_criterion_3_u_statistic_exact():
    expected = (s((1,)) * s((1,)) - s((2,))).scale(CoefRat(1, N * (N - 1)))
    assert u_statistic([(1,), (1,)]) == expected
    _report(3, "the squared-mean U-statistic is (s1^2 - s2)/(n(n-1)) exactly")


def test_criterion_4_unbiasedness_suite():
    start = time.perf_counter()

    # k-statistics against the cumulant polynomials
    for r in range(1, 7):
        target = cumulant_in_moments(r)
        for n in (r, r + 1, r + 2):
            assert expectation(k_statistic(r), n) == target, ("kstat", r, n)

    # bivariate joint-cumulant estimators for every index of weight <= 4
    for p in range(5):
        for q in range(5 - p):
            weight = p + q
            if weight < 1 or weight > 4:
                continue
            index = (p, q)
            target = joint_cumulant_in_moments(unit_monomials(index))
            for n in (weight, weight + 1, weight + 2):
                assert expectation(multivariate_k_statistic(index), n) == target, \
                    ("multik", index, n)

    # h-statistics against the binomial central-moment polynomial, built inline
    for r in range(1, 6):
        acc = {}
        for j in range(r + 1):
            key = tuple([(1,)] * j + ([(r - j,)] if r - j >= 1 else []))
            acc[key] = acc.get(key, 0) + (-1) ** j * math.comb(r, j)
        target = MomentPoly(1, acc)
        for n in (r, r + 1, r + 2):
            assert expectation(h_statistic(r), n) == target, ("hstat", r, n)

    # U-statistics of every univariate moment multiset of weight <= 5
    for weight in range(1, 6):
        for lam in integer_partitions(weight):
            ms = [(part,) for part in lam.parts]
            target = MomentPoly(1, {tuple(ms): 1})
            for n in (weight, weight + 1):
                assert expectation(u_statistic(ms), n) == target, ("ustat", lam.parts, n)

    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report(4, f"k-, joint-k-, h- and U-statistics are unbiased on every case ({elapsed:.1f}s)")


def test_criterion_5_vanishing_joint_cumulant():
    rng = random.Random(1234)
    k11 = multivariate_k_statistic((1, 1))
    joint = joint_cumulant_in_moments([(1, 0), (0, 1)])
    for _ in range(25):
        left = {0: Fraction(1)}
        right = {0: Fraction(1)}
        for order in (1, 2):
            left[order] = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            right[order] = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        law = {(p, q): left[p] * right[q]
               for p in range(3) for q in range(3) if p or q}
        assert numeric_check(k11, law, 3) == 0
        assert moment_value(joint, law) == 0
    _report(5, "joint cumulants vanish under 25 random factorized moment laws")


def test_criterion_6_basis_bridges():
    # elementary and complete polynomials against brute force over 6 variables
    for k in range(1, 6):
        assert _brute.sympoly_to_brute(elementary_in_power_sums(k), 6) == \
            _brute.elementary(k, 6), ("e", k)
        assert _brute.sympoly_to_brute(complete_in_power_sums(k), 6) == \
            _brute.complete(k, 6), ("h", k)

    # Newton's identity with e_0 = h_0 = 1
    for k in range(1, 7):
        total = SymPoly.zero(1)
        for i in range(k + 1):
            e = SymPoly.constant(1, 1) if i == 0 else elementary_in_power_sums(i)
            h = SymPoly.constant(1, 1) if i == k else complete_in_power_sums(k - i)
            total = total + (e * h).scale((-1) ** i)
        assert total.is_zero, k

    # augmented <-> power-sum round trips for every partition of weight <= 6
    for m in range(1, 7):
        for lam in integer_partitions(m):
            pattern = tuple((part,) for part in lam.parts)
            down = augmented_to_power_sums(lam.parts)
            up = AugPoly.zero(1)
            for key, coeff in down.terms.items():
                up = up + power_product_to_augmented(key).scale(coeff)
            assert up == AugPoly(1, {pattern: 1}), lam.parts
            product = SymPoly.constant(1, 1)
            for part in lam.parts:
                product = product * s((part,))
            assert augmented_poly_to_power_sums(
                power_product_to_augmented(pattern)) == product, lam.parts
    _report(6, "basis bridges match brute force; Newton sums vanish; round trips are identities")


def test_criterion_7_numeric_end_to_end(tmp_path, capsys):
    data = tmp_path / "sample.csv"
    data.write_text("1\n2\n3\n4\n")
    code = cli.main(["eval", "kstat", "2", "--data", str(data)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip() == "5/3"

    rng = random.Random(99)
    for _ in range(100):
        r = rng.randint(2, 4)
        n = rng.randint(max(r, 2), 8)
        rows = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        shift = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        factor = Fraction(rng.choice([1, 2, 3, 5, -2, -3]), rng.choice([1, 2, 3]))
        formula = k_statistic(r)
        base = evaluate(formula, Sample.from_rows(rows))
        assert evaluate(formula, Sample.from_rows([x + shift for x in rows])) == base
        assert evaluate(formula, Sample.from_rows([x * factor for x in rows])) == \
            factor ** r * base
    _report(7, "CLI prints 5/3; shift invariance and scale equivariance hold on 100 samples")


def test_criterion_8_combinatorial_ground_truth():
    start = time.perf_counter()
    stirling = {(0, 0): 1}
    for i in range(1, 11):
        for k in range(1, i + 1):
            stirling[(i, k)] = (k * stirling.get((i - 1, k), 0)
                                + stirling.get((i - 1, k - 1), 0))
    bell = [1]
    for i in range(10):
        bell.append(sum(math.comb(i, k) * bell[k] for k in range(i + 1)))

    for i in range(1, 11):
        per_k = {}
        for part in all_set_partitions(i):
            per_k[len(part.blocks)] = per_k.get(len(part.blocks), 0) + 1
        assert per_k == {k: stirling[(i, k)] for k in range(1, i + 1)}, i
        assert sum(per_k.values()) == bell[i], i
    assert len(list(set_partitions(10, 3))) == stirling[(10, 3)]

    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report(8, f"partition counts match the Stirling and Bell recurrences to i=10 ({elapsed:.1f}s)")
