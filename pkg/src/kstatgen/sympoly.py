"""Sparse polynomials in indexed symbol families.

Every generated formula lives here: a polynomial whose indeterminates are
power sums s_I, raw moments a_I, or augmented monomial symbols, indexed by
exponent vectors over v base variables.  A term is a multiset of
multi-indices (the product of the corresponding symbols) with an exact
rational-function coefficient; storage is a sparse map keyed by the sorted
multiset, so different constructions of the same polynomial collapse into
one canonical form and equality is structural.
"""

from fractions import Fraction

from .coefficients import CoefRat, NPoly
from .errors import ShapeError

MultiIndex = tuple[int, ...]


def index_sort_key(index: MultiIndex):
    """Ascending sort under this key is graded-lex descending."""
    return (-sum(index), tuple(-e for e in index))


def canonical_monomial(indices) -> tuple[MultiIndex, ...]:
    """Canonical key form of a multiset of multi-indices."""
    return tuple(sorted(indices, key=index_sort_key))


def monomial_weight(key) -> int:
    return sum(sum(index) for index in key)


def as_coefficient(x) -> CoefRat:
    if isinstance(x, CoefRat):
        return x
    if isinstance(x, (int, Fraction, NPoly)):
        return CoefRat(x)
    raise TypeError(f"cannot use {x!r} as a coefficient")


def _check_index(index, v) -> MultiIndex:
    try:
        out = tuple(index)
    except TypeError:
        raise ValueError(f"multi-index must be a tuple of exponents, got {index!r}") from None
    if len(out) != v:
        raise ShapeError(f"multi-index {out} has length {len(out)}, expected {v}")
    if any(not isinstance(e, int) or e < 0 for e in out) or not any(out):
        raise ValueError(f"invalid multi-index {out}: need non-negative entries, not all zero")
    return out


class IndexedPoly:
    """Shared implementation; use SymPoly / MomentPoly / AugPoly."""

    family = ""  # one-letter symbol family tag, set on subclasses
    product_of_symbols = True  # augmented symbols name whole patterns instead

    __slots__ = ("variable_count", "terms")

    def __init__(self, variable_count: int, terms=None):
        if not isinstance(variable_count, int) or variable_count < 1:
            raise ValueError(f"variable count must be a positive integer, got {variable_count!r}")
        self.variable_count = variable_count
        acc: dict[tuple, CoefRat] = {}
        for raw_key, raw_coeff in (terms or {}).items():
            key = canonical_monomial(_check_index(ix, variable_count) for ix in raw_key)
            c = as_coefficient(raw_coeff)
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def zero(cls, variable_count: int):
        return cls(variable_count, {})

    @classmethod
    def constant(cls, value, variable_count: int):
        return cls(variable_count, {(): value})

    @classmethod
    def symbol(cls, index, coeff=1):
        """Single symbol with the given exponent vector (variable count inferred)."""
        index = tuple(index)
        return cls(len(index), {(index,): coeff})

    def _from_canonical(self, terms: dict):
        p = object.__new__(type(self))
        p.variable_count = self.variable_count
        p.terms = terms
        return p

    def _compatible(self, other):
        if type(other) is not type(self):
            raise ShapeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.variable_count != self.variable_count:
            raise ShapeError(
                f"variable counts differ: {self.variable_count} vs {other.variable_count}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CoefRat, NPoly)):
            other = type(self).constant(other, self.variable_count)
        if not isinstance(other, IndexedPoly):
            return NotImplemented
        self._compatible(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return self._from_canonical(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, IndexedPoly) else -as_coefficient(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._from_canonical({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CoefRat, NPoly)):
            return self.scale(other)
        if not isinstance(other, IndexedPoly):
            return NotImplemented
        self._compatible(other)
        if not self.product_of_symbols:
            raise ShapeError("augmented symbols name whole exponent patterns; "
                             "expand to power sums before multiplying")
        acc: dict[tuple, CoefRat] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = canonical_monomial(k1 + k2)
                c = c1 * c2
                prev = acc.get(key)
                acc[key] = c if prev is None else prev + c
        return self._from_canonical({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        out = type(self).constant(1, self.variable_count)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        """Every coefficient multiplied by c; a zero c gives the zero polynomial."""
        c = as_coefficient(c)
        if not c:
            return self._from_canonical({})
        return self._from_canonical({k: v * c for k, v in self.terms.items()})

    def weight_classes(self) -> dict:
        """Split into weight-homogeneous parts: total weight -> sub-polynomial."""
        split: dict[int, dict] = {}
        for key, c in self.terms.items():
            split.setdefault(monomial_weight(key), {})[key] = c
        return {w: self._from_canonical(t) for w, t in sorted(split.items())}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_weight(self) -> int:
        return max((monomial_weight(k) for k in self.terms), default=0)

    def indices(self) -> set:
        """All multi-indices appearing in any term."""
        return {ix for key in self.terms for ix in key}

    def sorted_terms(self):
        """Terms in display order: heaviest weight first, graded-lex inside."""
        def term_key(key):
            return (-monomial_weight(key), tuple(index_sort_key(ix) for ix in key))
        return [(k, self.terms[k]) for k in sorted(self.terms, key=term_key)]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.variable_count == other.variable_count
                and self.terms == other.terms)

    def __hash__(self):
        return hash((type(self).__name__, self.variable_count,
                     frozenset(self.terms.items())))

    def __str__(self):
        from .render import render_text
        return render_text(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.variable_count}, {self.terms!r})"


class SymPoly(IndexedPoly):
    """Polynomial in power-sum symbols s_I."""

    family = "s"


class MomentPoly(IndexedPoly):
    """Polynomial in raw-moment symbols a_I."""

    family = "a"


class AugPoly(IndexedPoly):
    """Combination of augmented monomial symbols.

    Each term's whole multiset of indices names one symbol (the exponent
    pattern summed over injective index tuples), so symbol products are
    deliberately unsupported.
    """

    family = "m"
    product_of_symbols = False
