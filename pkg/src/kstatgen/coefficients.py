"""Exact coefficient arithmetic.

Estimator coefficients are rational functions of the symbolic sample size
n whose integer parts contain factorials and products over partitions, so
everything here is built on Python's unbounded integers and
``fractions.Fraction``.  ``NPoly`` is an integer-coefficient polynomial in
n; ``CoefRat`` is a reduced ratio of two of them kept in a canonical form,
so equality of coefficients is plain structural equality.
"""

import math
from fractions import Fraction

from .errors import PoleError


class NPoly:
    """Polynomial in n with integer coefficients.

    Stored little-endian (index = power of n) with no trailing zeros; the
    zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "NPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "NPoly":
        """The polynomial n itself."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __add__(self, other):
        other = _npoly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return NPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _npoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _npoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return NPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        other = _npoly(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return NPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return NPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        out = NPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Evaluate at x by Horner's rule; exact for int/Fraction input."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = _npoly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"NPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                var = "n" if k == 1 else f"n^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not pieces:
                pieces.append(body if a > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if a > 0 else f"- {body}")
        return " ".join(pieces)


def _npoly(x):
    if isinstance(x, NPoly):
        return x
    if isinstance(x, int):
        return NPoly(x)
    return None


def _divmod_frac(a: NPoly, b: NPoly):
    """Quotient and remainder of a by b over the rationals, as Fraction lists."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db, lead = b.degree, Fraction(b.leading)
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            quot[i - db] = c
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] -= c * bc
    return quot, rem


def exact_div(a: NPoly, b: NPoly) -> NPoly:
    """a / b when b divides a exactly over the integers."""
    quot, rem = _divmod_frac(a, b)
    if any(rem) or any(q.denominator != 1 for q in quot):
        raise ArithmeticError(f"{b} does not divide {a} exactly")
    return NPoly([int(q) for q in quot])


def poly_gcd(a: NPoly, b: NPoly) -> NPoly:
    """Greatest common divisor in Z[n], with positive leading coefficient.

    Combines the gcd of the integer contents with the primitive gcd found
    by the Euclidean algorithm over the rationals; degrees here are small,
    so no subresultant tricks are needed.
    """
    if a.is_zero and b.is_zero:
        return NPoly()
    if a.is_zero:
        return _positive(b)
    if b.is_zero:
        return _positive(a)
    c = math.gcd(a.content, b.content)
    fa = [Fraction(x) for x in a.coeffs]
    fb = [Fraction(x) for x in b.coeffs]
    while fb:
        fa, fb = fb, _rem_frac(fa, fb)
    den_lcm = math.lcm(*(f.denominator for f in fa))
    ints = [int(f * den_lcm) for f in fa]
    prim = NPoly(ints)
    prim = NPoly([x // prim.content for x in prim.coeffs])
    if prim.leading < 0:
        prim = -prim
    return NPoly.constant(c) * prim


def _rem_frac(fa, fb):
    # both lists trailing-stripped and fb non-empty
    rem = list(fa)
    db, lead = len(fb) - 1, fb[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            for j, bc in enumerate(fb):
                rem[i - db + j] -= c * bc
    while rem and not rem[-1]:
        rem.pop()
    return rem


def _positive(p: NPoly) -> NPoly:
    return -p if p.leading < 0 else p


def falling_factorial(k: int) -> NPoly:
    """The polynomial n(n-1)...(n-k+1); the empty product 1 for k = 0."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"falling factorial needs k >= 0, got {k!r}")
    out = NPoly(1)
    for j in range(k):
        out = out * NPoly((-j, 1))
    return out


def chi_falling_moment(k: int) -> int:
    """(-1)**(k-1) * (k-1)!, the k-th falling-factorial moment of the
    singleton umbra; the partition weight behind every cumulant expansion."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"falling-factorial moments start at k = 1, got {k!r}")
    return (-1) ** (k - 1) * math.factorial(k - 1)


class CoefRat:
    """Reduced ratio of two integer polynomials in n.

    Canonical form: numerator and denominator share no polynomial factor
    and no integer content, and the denominator has positive leading
    coefficient.  Equal values therefore compare equal structurally, which
    is what every exact-match test in this package relies on.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        np, ns = _as_poly_pair(num)
        dp, ds = _as_poly_pair(den)
        numerator = np * NPoly.constant(ds)
        denominator = dp * NPoly.constant(ns)
        if denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        if numerator.is_zero:
            self.num, self.den = NPoly(), NPoly(1)
            return
        g = poly_gcd(numerator, denominator)
        if g.degree > 0 or g.leading != 1:
            numerator = exact_div(numerator, g)
            denominator = exact_div(denominator, g)
        if denominator.leading < 0:
            numerator, denominator = -numerator, -denominator
        self.num, self.den = numerator, denominator

    @classmethod
    def _raw(cls, num: NPoly, den: NPoly) -> "CoefRat":
        # trusted constructor for data already in canonical form
        self = object.__new__(cls)
        self.num, self.den = num, den
        return self

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    @property
    def degree_bound(self) -> int:
        """Max of numerator/denominator degree; a rational function of this
        degree is pinned down by degree_bound + 1 sample points."""
        return max(self.num.degree, self.den.degree, 0)

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} still depends on n")
        return Fraction(self.num.leading if self.num.coeffs else 0, self.den.leading)

    def substitute(self, n_value) -> Fraction:
        """Evaluate at a concrete sample size; exact rational result."""
        x = Fraction(n_value)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"coefficient denominator vanishes at n = {n_value}")
        return Fraction(self.num(x)) / d

    def __bool__(self):
        return not self.num.is_zero

    def __add__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        return CoefRat(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CoefRat._raw(-self.num, self.den)

    def __mul__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        return CoefRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero coefficient")
        return CoefRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _coef(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"CoefRat({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == NPoly(1):
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_poly_pair(x):
    """Normalize an input to (integer polynomial, positive integer scale)."""
    if isinstance(x, NPoly):
        return x, 1
    if isinstance(x, int):
        return NPoly(x), 1
    if isinstance(x, Fraction):
        return NPoly.constant(x.numerator), x.denominator
    raise TypeError(f"cannot build a coefficient from {x!r}")


def _coef(x):
    if isinstance(x, CoefRat):
        return x
    if isinstance(x, (int, Fraction, NPoly)):
        return CoefRat(x)
    return None
