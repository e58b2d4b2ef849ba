"""Partition expansions of products of sample power sums.

The four expansions here share one mechanism: sum over the set partitions
of the factor positions, merge the exponent vectors inside each block, and
weight the partition by a product determined by its block sizes.  They
differ only in the weight and in the symbol family of the result.
"""

from fractions import Fraction
from functools import lru_cache

from .combinatorics import all_set_partitions, block_size_signature
from .coefficients import CoefRat, chi_falling_moment, falling_factorial
from .errors import ShapeError
from .sympoly import AugPoly, MomentPoly, SymPoly, as_coefficient, canonical_monomial


def expand_chi_dot_product(monomials, *, allow_large: bool = False) -> SymPoly:
    """Product of correlated terms n.(chi p_t) as a power-sum polynomial.

    Position t carries the exponent vector monomials[t].  Each set
    partition of the positions contributes the product of power sums of
    its blockwise-merged exponents, weighted by the signed factorial
    product (-1)**(size-1) * (size-1)! over its blocks.  Coefficients are
    plain integers, and a single monomial embeds as its own power sum.
    """
    ms, v = _checked(monomials)
    return _expand_cached(canonical_monomial(ms), v, allow_large)


@lru_cache(maxsize=None)
def _expand_cached(ms, v, allow_large):
    acc: dict[tuple, int] = {}
    for part in all_set_partitions(len(ms), allow_large=allow_large):
        key = canonical_monomial(_merge(ms, b, v) for b in part.blocks)
        w = _signature_weight(block_size_signature(part))
        acc[key] = acc.get(key, 0) + w
    return SymPoly(v, acc)


def power_product_to_augmented(monomials, *, allow_large: bool = False) -> AugPoly:
    """Product of power sums s_{I_1} ... s_{I_i} in the augmented basis.

    Summing over set partitions of the factor positions and merging
    exponents blockwise gives, for each exponent pattern, the count of
    partitions inducing it; e.g. two equal factors split as the diagonal
    plus the off-diagonal part, s_1^2 = m~(2) + m~(1,1).
    """
    ms, v = _checked(monomials)
    acc: dict[tuple, int] = {}
    for part in all_set_partitions(len(ms), allow_large=allow_large):
        key = canonical_monomial(_merge(ms, b, v) for b in part.blocks)
        acc[key] = acc.get(key, 0) + 1
    return AugPoly(v, acc)


def u_statistic(moment_product, *, allow_large: bool = False) -> SymPoly:
    """Unbiased estimator of a product of raw moments prod_I a_I.

    Averages the matching monomial product over injective index tuples:
    in power sums this is expand_chi_dot_product(...) / (n)_k with one
    falling-factorial factor per moment in the product.
    """
    ms, v = _checked(moment_product)
    k = len(ms)
    return expand_chi_dot_product(ms, allow_large=allow_large).scale(
        CoefRat(1, falling_factorial(k)))


def joint_cumulant_in_moments(monomials, *, allow_large: bool = False) -> MomentPoly:
    """Joint cumulant of the monomials p_1 ... p_i, in raw moments.

    Classical partition sum: a partition into k blocks contributes
    (-1)**(k-1) * (k-1)! times the product of blockwise-merged moments.
    """
    ms, v = _checked(monomials)
    acc: dict[tuple, int] = {}
    for part in all_set_partitions(len(ms), allow_large=allow_large):
        key = canonical_monomial(_merge(ms, b, v) for b in part.blocks)
        acc[key] = acc.get(key, 0) + chi_falling_moment(len(part.blocks))
    return MomentPoly(v, acc)


def subordinated_moment(g, a, i: int, *, allow_large: bool = False):
    """Moment of order i of a randomly-stopped sum: sum_k g[k-1] * B_{i,k}
    over the incomplete exponential Bell polynomials of the moment
    sequence.

    g[k-1] is the k-th factorial moment of the subordinating variable
    (ints, Fractions, NPoly or CoefRat values all work).  With a=None the
    Bell polynomials stay symbolic and a MomentPoly in a_1..a_i is
    returned; with a numeric sequence a the exact scalar value comes back
    as a CoefRat (constant unless some g involves n).
    """
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"order must be a positive integer, got {i!r}")
    g = list(g)
    if len(g) < i:
        raise ValueError(f"need factorial moments up to order {i}, got {len(g)}")
    if a is not None:
        a = [Fraction(x) for x in a]
        if len(a) < i:
            raise ValueError(f"need moments up to order {i}, got {len(a)}")
    counts: dict[tuple, int] = {}
    for part in all_set_partitions(i, allow_large=allow_large):
        key = canonical_monomial((len(b),) for b in part.blocks)
        counts[key] = counts.get(key, 0) + 1
    if a is None:
        return MomentPoly(1, {key: as_coefficient(g[len(key) - 1]) * cnt
                              for key, cnt in counts.items()})
    total = CoefRat(0)
    for key, cnt in counts.items():
        value = Fraction(cnt)
        for (size,) in key:
            value *= a[size - 1]
        total = total + as_coefficient(g[len(key) - 1]) * value
    return total


def unit_monomials(index) -> tuple:
    """Exponent vector (p, q, ...) unrolled into p copies of e_1, q copies
    of e_2, ...: the factor list whose joint cumulant has that index."""
    idx = tuple(index)
    v = len(idx)
    if v < 1 or any(not isinstance(e, int) or e < 0 for e in idx) or not any(idx):
        raise ValueError(f"invalid index {index!r}: need non-negative entries, not all zero")
    out = []
    for axis, e in enumerate(idx):
        unit = tuple(1 if t == axis else 0 for t in range(v))
        out.extend([unit] * e)
    return tuple(out)


def _checked(monomials):
    ms = [tuple(m) for m in monomials]
    if not ms:
        raise ValueError("at least one monomial is required")
    v = len(ms[0])
    for m in ms:
        if len(m) != v:
            raise ShapeError(f"monomials mix variable counts: {m} vs length {v}")
        if v < 1 or any(not isinstance(e, int) or e < 0 for e in m) or not any(m):
            raise ValueError(f"invalid monomial {m!r}: exponents must be "
                             "non-negative and not all zero")
    return tuple(ms), v


def _merge(ms, block, v):
    out = [0] * v
    for pos in block:
        for axis, e in enumerate(ms[pos - 1]):
            out[axis] += e
    return tuple(out)


@lru_cache(maxsize=None)
def _signature_weight(signature):
    w = 1
    for size in signature:
        w *= chi_falling_moment(size)
    return w
