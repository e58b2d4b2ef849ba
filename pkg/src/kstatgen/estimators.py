"""User-facing formula generators.

Estimators come back as SymPoly values in power sums with coefficients
rational in the sample size n; population targets (cumulants, central
moments, Bell polynomials) come back as MomentPoly values in raw moments.
Results are memoized per order, so callers must treat them as immutable.
"""

import math
import warnings
from fractions import Fraction
from functools import lru_cache

from .combinatorics import IntPartition, all_set_partitions, integer_partitions, set_partitions
from .coefficients import CoefRat, chi_falling_moment, falling_factorial
from .errors import CostWarning
from .expansions import (expand_chi_dot_product, subordinated_moment,
                         u_statistic, unit_monomials)
from .sympoly import AugPoly, MomentPoly, SymPoly, canonical_monomial

UNIVARIATE_ORDER_CAP = 10    # partition sums stay comfortable up to here
MULTIVARIATE_WEIGHT_CAP = 6  # Bell(6) = 203 outer partitions


@lru_cache(maxsize=None)
def k_statistic(r: int) -> SymPoly:
    """Unbiased estimator of the r-th cumulant, in power sums s_1..s_r.

    Double partition sum: integer partitions of r act as block-size
    signatures (counted with their multinomial multiplicities), each
    weighted by (-1)**(k-1) * (k-1)! / (n)_k for k parts, and the
    correlated power-sum product of each signature is expanded into
    uncorrelated power sums.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"order must be a positive integer, got {r!r}")
    _warn_if_large("k_statistic", r, UNIVARIATE_ORDER_CAP)
    total = SymPoly.zero(1)
    for lam in integer_partitions(r):
        k = len(lam.parts)
        lead = CoefRat(chi_falling_moment(k) * _partitions_of_type(r, lam),
                       falling_factorial(k))
        expanded = expand_chi_dot_product([(p,) for p in lam.parts], allow_large=True)
        total = total + expanded.scale(lead)
    return total


def multivariate_k_statistic(index) -> SymPoly:
    """Unbiased estimator of the joint cumulant with exponent vector index.

    The factor positions (p copies of variable 1, q of variable 2, ...)
    are summed over set partitions with weight (-1)**(k-1)*(k-1)!/(n)_k,
    and each partition's correlated block product is expanded into
    uncorrelated power sums.  A length-1 index reduces to k_statistic.
    """
    return _multivariate_k_cached(tuple(index))


@lru_cache(maxsize=None)
def _multivariate_k_cached(index):
    ms = unit_monomials(index)  # validates the index
    _warn_if_large("multivariate_k_statistic", sum(index), MULTIVARIATE_WEIGHT_CAP)
    v = len(index)
    total = SymPoly.zero(v)
    for part in all_set_partitions(len(ms), allow_large=True):
        merged = []
        for block in part.blocks:
            vec = [0] * v
            for pos in block:
                for axis, e in enumerate(ms[pos - 1]):
                    vec[axis] += e
            merged.append(tuple(vec))
        k = len(part.blocks)
        lead = CoefRat(chi_falling_moment(k), falling_factorial(k))
        total = total + expand_chi_dot_product(merged, allow_large=True).scale(lead)
    return total


@lru_cache(maxsize=None)
def h_statistic(r: int) -> SymPoly:
    """Unbiased estimator of the r-th central moment.

    Expands the centered power binomially and replaces each moment product
    a_1^j * a_{r-j} by its U-statistic; this sidesteps the degenerate
    zeroth-power factor of the direct route and agrees with it in
    expectation.  The r = 1 terms cancel to the zero polynomial.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"order must be a positive integer, got {r!r}")
    _warn_if_large("h_statistic", r, UNIVARIATE_ORDER_CAP)
    total = SymPoly.zero(1)
    for j in range(r + 1):
        factors = [(1,)] * j
        if r - j >= 1:
            factors.append((r - j,))
        term = u_statistic(factors, allow_large=True)
        total = total + term.scale((-1) ** j * math.comb(r, j))
    return total


@lru_cache(maxsize=None)
def cumulant_in_moments(r: int) -> MomentPoly:
    """The r-th cumulant as a polynomial in raw moments a_1..a_r: the
    population target the k-statistic estimates."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"order must be a positive integer, got {r!r}")
    g = [chi_falling_moment(k) for k in range(1, r + 1)]
    return subordinated_moment(g, None, r, allow_large=True)


@lru_cache(maxsize=None)
def central_moment_in_moments(r: int) -> MomentPoly:
    """The r-th central moment in raw moments, by the binomial expansion:
    the population target the h-statistic estimates."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"order must be a positive integer, got {r!r}")
    acc: dict[tuple, int] = {}
    for j in range(r + 1):
        key = [(1,)] * j
        if r - j >= 1:
            key.append((r - j,))
        key = canonical_monomial(key)
        acc[key] = acc.get(key, 0) + (-1) ** j * math.comb(r, j)
    return MomentPoly(1, acc)


@lru_cache(maxsize=None)
def bell_polynomial(i: int, k: int) -> MomentPoly:
    """Incomplete exponential Bell polynomial B_{i,k} in moment symbols:
    sum over partitions of {1..i} into k blocks of the product a_{|B|}."""
    if not isinstance(i, int) or not isinstance(k, int) or i < 1 or k < 1 or k > i:
        raise ValueError(f"need 1 <= k <= i, got i={i!r}, k={k!r}")
    acc: dict[tuple, int] = {}
    for part in set_partitions(i, k, allow_large=True):
        key = canonical_monomial((len(b),) for b in part.blocks)
        acc[key] = acc.get(key, 0) + 1
    return MomentPoly(1, acc)


def augmented_to_power_sums(partition) -> SymPoly:
    """Augmented monomial symbol with exponent pattern lambda, written as an
    integer polynomial in power sums (the downward conversion table)."""
    parts = _partition_parts(partition)
    return expand_chi_dot_product([(p,) for p in parts], allow_large=True)


def augmented_poly_to_power_sums(p: AugPoly) -> SymPoly:
    """Substitute every augmented symbol by its power-sum expansion."""
    if not isinstance(p, AugPoly):
        raise TypeError(f"expected an AugPoly, got {type(p).__name__}")
    total = SymPoly.zero(p.variable_count)
    for key, c in p.terms.items():
        if not key:
            total = total + SymPoly.constant(c, p.variable_count)
        else:
            total = total + expand_chi_dot_product(key, allow_large=True).scale(c)
    return total


@lru_cache(maxsize=None)
def elementary_in_power_sums(k: int) -> SymPoly:
    """The k-th elementary symmetric polynomial e_k in power sums."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"order must be a positive integer, got {k!r}")
    _warn_if_large("elementary_in_power_sums", k, UNIVARIATE_ORDER_CAP)
    numer = expand_chi_dot_product([(1,)] * k, allow_large=True)
    return numer.scale(Fraction(1, math.factorial(k)))


@lru_cache(maxsize=None)
def complete_in_power_sums(m: int) -> SymPoly:
    """The m-th complete homogeneous symmetric polynomial h_m in power sums."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"order must be a positive integer, got {m!r}")
    _warn_if_large("complete_in_power_sums", m, UNIVARIATE_ORDER_CAP)
    acc: dict[tuple, int] = {}
    for part in all_set_partitions(m, allow_large=True):
        key = canonical_monomial((len(b),) for b in part.blocks)
        w = math.prod(math.factorial(len(b) - 1) for b in part.blocks)
        acc[key] = acc.get(key, 0) + w
    return SymPoly(1, acc).scale(Fraction(1, math.factorial(m)))


def monomial_in_augmented(partition) -> AugPoly:
    """Monomial symmetric polynomial m_lambda as a scaled augmented symbol:
    m = m~ / prod r_j! over the part multiplicities."""
    parts = _partition_parts(partition)
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    scale = Fraction(1, math.prod(math.factorial(c) for c in mult.values()))
    return AugPoly(1, {tuple((p,) for p in parts): scale})


def _partition_parts(partition) -> tuple[int, ...]:
    parts = tuple(partition.parts) if isinstance(partition, IntPartition) else tuple(partition)
    if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValueError(f"need a non-empty partition with positive parts, got {partition!r}")
    return tuple(sorted(parts, reverse=True))


def _partitions_of_type(r: int, lam: IntPartition) -> int:
    """Number of set partitions of {1..r} whose block sizes form lam."""
    count = math.factorial(r)
    for part, mult in lam.multiplicities.items():
        count //= math.factorial(part) ** mult * math.factorial(mult)
    return count


def _warn_if_large(kind, order, cap):
    if order > cap:
        warnings.warn(f"{kind} of order {order} is past the comfort cap {cap}; "
                      "the nested partition sums may take a long time",
                      CostWarning, stacklevel=3)
