import json
from fractions import Fraction

from kstatgen import (SymPoly, augmented_to_power_sums, bell_polynomial,
                      complete_in_power_sums, cumulant_in_moments,
                      elementary_in_power_sums, h_statistic, k_statistic,
                      monomial_in_augmented, multivariate_k_statistic,
                      u_statistic)
from kstatgen.render import from_json, render_latex, render_text, to_json


def test_text_examples():
    assert render_text(k_statistic(1)) == "s1 / n"
    assert render_text(k_statistic(2)) == "(n*s2 - s1^2) / (n*(n - 1))"
    assert render_text(h_statistic(1)) == "0"
    assert render_text(elementary_in_power_sums(3)) == "(2*s3 - 3*s2*s1 + s1^3) / 6"
    assert render_text(complete_in_power_sums(2)) == "(s2 + s1^2) / 2"
    assert render_text(augmented_to_power_sums((1, 1))) == "-s2 + s1^2"


def test_text_multivariate():
    assert render_text(multivariate_k_statistic((1, 1))) == (
        "(n*s[1,1] - s[1,0]*s[0,1]) / (n*(n - 1))")


def test_latex_k21_matches_the_published_form_up_to_term_order():
    assert render_latex(multivariate_k_statistic((2, 1))) == (
        r"\frac{n^{2} s_{2,1} - n s_{2,0} s_{0,1} - 2 n s_{1,1} s_{1,0} "
        r"+ 2 s_{1,0}^{2} s_{0,1}}{(n)_{3}}")


def test_latex_moment_polynomial():
    assert render_latex(cumulant_in_moments(2)) == "a_{2} - a_{1}^{2}"


def test_latex_falling_factorial_denominator():
    assert render_latex(k_statistic(2)).endswith("{(n)_{2}}")
    assert render_latex(elementary_in_power_sums(3)).endswith("{6}")


def test_augmented_symbol_rendering():
    m = monomial_in_augmented((2, 1))
    assert render_text(m) == "m~(2,1)"
    assert render_latex(m) == r"\tilde{m}_{(2,1)}"
    assert render_text(monomial_in_augmented((1, 1))).endswith("m~(1,1) / 2")


def test_rendering_is_deterministic():
    for poly in (k_statistic(4), multivariate_k_statistic((2, 1))):
        assert render_text(poly) == render_text(poly)
        assert render_latex(poly) == render_latex(poly)


def test_json_round_trip_is_bit_exact():
    polys = [k_statistic(r) for r in range(1, 7)]
    polys += [
        multivariate_k_statistic((2, 1)),
        multivariate_k_statistic((1, 1)),
        h_statistic(4),
        u_statistic([(2,), (1,)]),
        cumulant_in_moments(5),
        bell_polynomial(4, 2),
        monomial_in_augmented((2, 1, 1)),
        augmented_to_power_sums((2, 2)),
        SymPoly.zero(2),
        SymPoly.constant(Fraction(-3, 7), 1),
    ]
    for p in polys:
        again = from_json(to_json(p))
        assert type(again) is type(p)
        assert again == p


def test_json_integers_travel_as_decimal_strings():
    doc = json.loads(to_json(k_statistic(2)))
    assert doc["family"] == "s" and doc["variables"] == 1
    for term in doc["terms"]:
        assert all(isinstance(x, str) for x in term["coeff"]["num"])
        assert all(isinstance(x, str) for x in term["coeff"]["den"])


def test_json_monomials_group_repeated_indices():
    doc = json.loads(to_json(SymPoly.symbol((1, 0)) ** 2))
    assert doc["terms"][0]["monomial"] == [{"index": [1, 0], "power": 2}]
