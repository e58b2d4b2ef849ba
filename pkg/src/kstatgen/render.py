"""Text, LaTeX and JSON renderings of generated polynomials.

Rendering never touches the canonical form: all three formats list terms
in the same graded order (heaviest power sums first), and the JSON form
parses back bit-exactly, with integers carried as decimal strings so no
consumer ever rounds them.
"""

import json

from .coefficients import CoefRat, NPoly, exact_div, falling_factorial, poly_gcd
from .sympoly import AugPoly, IndexedPoly, MomentPoly, SymPoly

_FAMILIES = {"s": SymPoly, "a": MomentPoly, "m": AugPoly}


def render_text(p: IndexedPoly) -> str:
    """Plain-text form, e.g. ``(n*s2 - s1^2) / (n*(n - 1))``."""
    if p.is_zero:
        return "0"
    numerators, den = _over_common_denominator(p)
    body = _join_terms(numerators, p.family, latex=False)
    if den == NPoly(1):
        return body
    if len(numerators) > 1:
        body = f"({body})"
    return f"{body} / {_den_text(den)}"


def render_latex(p: IndexedPoly) -> str:
    """LaTeX form; falling-factorial denominators print as (n)_k."""
    if p.is_zero:
        return "0"
    numerators, den = _over_common_denominator(p)
    body = _join_terms(numerators, p.family, latex=True)
    if den == NPoly(1):
        return body
    return rf"\frac{{{body}}}{{{_den_latex(den)}}}"


def to_json(p: IndexedPoly) -> str:
    """JSON form: family, variable count, and terms with little-endian
    coefficient arrays in powers of n, integers as decimal strings."""
    terms = []
    for key, c in p.sorted_terms():
        terms.append({
            "coeff": {"num": [str(x) for x in c.num.coeffs],
                      "den": [str(x) for x in c.den.coeffs]},
            "monomial": [{"index": list(ix), "power": power}
                         for ix, power in _grouped(key)],
        })
    doc = {"family": p.family, "variables": p.variable_count, "terms": terms}
    return json.dumps(doc)


def from_json(text: str) -> IndexedPoly:
    """Parse the JSON form back into the identical canonical polynomial."""
    doc = json.loads(text)
    cls = _FAMILIES[doc["family"]]
    terms = {}
    for t in doc["terms"]:
        key = []
        for m in t["monomial"]:
            key.extend([tuple(m["index"])] * m["power"])
        coeff = CoefRat(NPoly([int(x) for x in t["coeff"]["num"]]),
                        NPoly([int(x) for x in t["coeff"]["den"]]))
        terms[tuple(key)] = coeff
    return cls(doc["variables"], terms)


def _over_common_denominator(p):
    """Terms as integer-polynomial numerators over one common denominator."""
    den = NPoly(1)
    ordered = p.sorted_terms()
    for _, c in ordered:
        den = exact_div(den * c.den, poly_gcd(den, c.den))
    return [(key, c.num * exact_div(den, c.den)) for key, c in ordered], den


def _grouped(key):
    out = []
    for ix in key:
        if out and out[-1][0] == ix:
            out[-1][1] += 1
        else:
            out.append([ix, 1])
    return [(ix, power) for ix, power in out]


def _join_terms(numerators, family, latex):
    pieces = []
    for key, c in numerators:
        negative, body = _term(key, c, family, latex)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def _term(key, c: NPoly, family, latex):
    symbols = _symbols(key, family, latex)
    sep = " " if latex else "*"
    monomials = sum(1 for x in c.coeffs if x)
    if monomials <= 1:
        a, k = c.leading, c.degree
        negative, mag = a < 0, abs(a)
        coeff_pieces = []
        if mag != 1 or (k <= 0 and not symbols):
            coeff_pieces.append(str(mag))
        if k == 1:
            coeff_pieces.append("n")
        elif k >= 2:
            coeff_pieces.append(f"n^{{{k}}}" if latex else f"n^{k}")
    else:
        negative = c.leading < 0
        mag_poly = -c if negative else c
        inner = _npoly_latex(mag_poly) if latex else str(mag_poly)
        coeff_pieces = [f"({inner})"]
    return negative, sep.join(coeff_pieces + symbols)


def _symbols(key, family, latex):
    if not key:
        return []
    if family == "m":
        # the whole multiset is one augmented symbol naming a pattern
        if all(len(ix) == 1 for ix in key):
            pattern = ",".join(str(ix[0]) for ix in key)
        else:
            pattern = ",".join("(" + ",".join(map(str, ix)) + ")" for ix in key)
        return [rf"\tilde{{m}}_{{({pattern})}}" if latex else f"m~({pattern})"]
    out = []
    for ix, power in _grouped(key):
        if latex:
            sym = f"{family}_{{{','.join(map(str, ix))}}}"
            if power > 1:
                sym += f"^{{{power}}}"
        else:
            sym = f"{family}{ix[0]}" if len(ix) == 1 else f"{family}[{','.join(map(str, ix))}]"
            if power > 1:
                sym += f"^{power}"
        out.append(sym)
    return out


def _falling_form(den: NPoly):
    """(scale, k) when den = scale * n(n-1)...(n-k+1), else None."""
    c = den.content
    prim = NPoly([x // c for x in den.coeffs])
    k = prim.degree
    if k >= 1 and prim == falling_factorial(k):
        return c, k
    return None


def _den_text(den: NPoly) -> str:
    # bare atoms (an integer, n, n^k) stand alone; anything else gets parens
    if den.degree == 0:
        return str(den.leading)
    ff = _falling_form(den)
    if ff is not None:
        scale, k = ff
        if k == 1 and scale == 1:
            return "n"
        factors = ["n"] + [f"(n - {j})" for j in range(1, k)]
        prefix = "" if scale == 1 else f"{scale}*"
        return f"({prefix}{'*'.join(factors)})"
    if sum(1 for x in den.coeffs if x) == 1:
        body = str(den)  # single monomial like 2*n^3
        return body if den.leading == 1 else f"({body})"
    return f"({den})"


def _den_latex(den: NPoly) -> str:
    if den.degree == 0:
        return str(den.leading)
    ff = _falling_form(den)
    if ff is not None:
        scale, k = ff
        prefix = "" if scale == 1 else f"{scale} "
        return f"{prefix}(n)_{{{k}}}"
    if sum(1 for x in den.coeffs if x) == 1:
        return _npoly_latex(den)
    return f"({_npoly_latex(den)})"


def _npoly_latex(p: NPoly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for k in range(p.degree, -1, -1):
        a = p.coeffs[k]
        if not a:
            continue
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            var = "n" if k == 1 else f"n^{{{k}}}"
            body = var if mag == 1 else f"{mag} {var}"
        if not pieces:
            pieces.append(body if a > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if a > 0 else f"- {body}")
    return " ".join(pieces)
