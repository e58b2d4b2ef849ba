"""Samples, their power sums, and numeric evaluation of formulas.

Data stays exact whenever it can: if every cell parses as a rational, the
whole pipeline runs on Fractions and results are exact; a single
non-rational value switches the sample to floats.
"""

import csv
from fractions import Fraction

from .errors import PoleError, ShapeError
from .sympoly import SymPoly


class Sample:
    """Rectangular data: one row per observation, one column per variable."""

    __slots__ = ("rows", "exact")

    def __init__(self, rows):
        rows = [tuple(row) for row in rows]
        if not rows:
            raise ValueError("sample is empty")
        width = len(rows[0])
        if width < 1:
            raise ValueError("sample has no columns")
        if any(len(r) != width for r in rows):
            raise ValueError("sample is ragged: rows differ in length")
        exact = all(isinstance(x, (int, Fraction)) for row in rows for x in row)
        if exact:
            self.rows = [tuple(Fraction(x) for x in row) for row in rows]
        else:
            self.rows = [tuple(float(x) for x in row) for row in rows]
        self.exact = exact

    @classmethod
    def from_rows(cls, data) -> "Sample":
        """Build from an iterable of rows; a flat list of scalars becomes a
        single column."""
        data = list(data)
        if data and not isinstance(data[0], (list, tuple)):
            data = [(x,) for x in data]
        return cls([[_parse_value(x) for x in row] for row in data])

    @classmethod
    def from_csv(cls, path) -> "Sample":
        """Read comma-separated data, one column per variable.  A first row
        with any non-numeric cell is treated as a header and skipped."""
        with open(path, newline="") as fh:
            raw = [row for row in csv.reader(fh) if any(cell.strip() for cell in row)]
        if not raw:
            raise ValueError(f"no data in {path}")
        try:
            for cell in raw[0]:
                _parse_value(cell)
        except ValueError:
            raw = raw[1:]
        if not raw:
            raise ValueError(f"no data rows in {path}")
        return cls([[_parse_value(cell) for cell in row] for row in raw])

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def variable_count(self) -> int:
        return len(self.rows[0])


def power_sums(sample: Sample, max_weight: int) -> dict:
    """All power sums s_I with 1 <= |I| <= max_weight, as index -> value."""
    if not isinstance(max_weight, int) or max_weight < 1:
        raise ValueError(f"max weight must be a positive integer, got {max_weight!r}")
    if sample.size < 1:
        raise ValueError("sample is empty")
    v = sample.variable_count
    out = {}
    for total in range(1, max_weight + 1):
        for index in _compositions(total, v):
            out[index] = _power_sum(sample, index)
    return out


def evaluate(formula: SymPoly, sample: Sample):
    """Value of a generated formula on a sample: substitute n = row count
    into every coefficient and every power sum; exact on exact data."""
    if not isinstance(formula, SymPoly):
        raise ShapeError(f"only power-sum polynomials evaluate on data, got {type(formula).__name__}")
    if formula.variable_count != sample.variable_count:
        raise ShapeError(f"formula expects {formula.variable_count} column(s), "
                         f"sample has {sample.variable_count}")
    n = sample.size
    coeffs = {}
    for key, coeff in formula.terms.items():
        try:
            coeffs[key] = coeff.substitute(n)
        except PoleError:
            need = minimum_sample_size(formula)
            raise PoleError(f"sample of size {n} is too small for this formula; "
                            f"need at least {need} rows", min_valid_n=need) from None
    sums = {ix: _power_sum(sample, ix) for ix in formula.indices()}
    total = Fraction(0) if sample.exact else 0.0
    for key, c in coeffs.items():
        value = c if sample.exact else float(c)
        for ix in key:
            value = value * sums[ix]
        total += value
    return total


def minimum_sample_size(formula: SymPoly) -> int:
    """Smallest sample size at which no coefficient denominator vanishes."""
    dens = [c.den for c in formula.terms.values() if c.den.degree > 0]
    if not dens:
        return 1
    # the poles form a set of at most sum(deg) integers, so a pole-free n
    # exists within the first sum(deg) + 1 candidates
    bound = sum(d.degree for d in dens) + 1
    for n in range(1, bound + 1):
        if all(d(n) != 0 for d in dens):
            return n
    return bound + 1


def _parse_value(x):
    if isinstance(x, (int, Fraction, float)):
        return x
    text = str(x).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    return float(text)  # a ValueError here means genuinely unparseable data


def _compositions(total, v):
    if v == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, v - 1):
            yield (first,) + rest


def _power_sum(sample, index):
    total = 0
    for row in sample.rows:
        term = 1
        for x, e in zip(row, index):
            if e:
                term *= x ** e
        total += term
    return total
