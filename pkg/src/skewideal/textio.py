"""Text forms for field elements, polynomials, algebra elements, Ore
polynomials and polynomial matrices.

Nonzero non-unit field elements are written as powers of the primitive
element, ``a`` or ``a^k``.  Ore polynomials are written with descending
powers of z and parenthesized right coefficients::

    z^2 (a^2 x^4 + a x^3) + z (x + 1) + (a^2 x^4 + 1)

Every ``format_*`` function has a matching ``parse_*`` inverse.
"""

from __future__ import annotations

import re

from .field import FieldElement, FiniteField


def format_scalar(F, v) -> str:
    if isinstance(F, FiniteField):
        if v == 0 or v == 1:
            return str(v)
        e = F.log(v)
        return "a" if e == 1 else f"a^{e}"
    # QuotientField value: a polynomial in x over the base field
    from .poly import Poly

    return format_poly(Poly(F.base, v, "x"))


def parse_scalar(F: FiniteField, text: str) -> int:
    s = text.strip()
    if s == "a":
        return F.from_power(1)
    m = re.fullmatch(r"a\^\(?(-?\d+)\)?", s)
    if m:
        if F.order == 2:
            raise ValueError(f"GF(2) has no element {s!r}")
        return F.from_power(int(m.group(1)))
    if re.fullmatch(r"\d+", s):
        return F.from_int(int(s))
    raise ValueError(f"malformed field element {text!r}")


def normalize_scalar(F: FiniteField, text: str) -> str:
    """Canonical spelling of a field-element string, e.g. a^7 -> a in GF(4)."""
    return format_scalar(F, parse_scalar(F, text))


def _power(var: str, d: int) -> str:
    return "" if d == 0 else var if d == 1 else f"{var}^{d}"


def _term(coef: str, mono: str) -> str:
    if not mono:
        return coef
    if coef == "1":
        return mono
    return f"{coef} {mono}"


def format_poly(f) -> str:
    F = f.field
    terms = [
        _term(format_scalar(F, c), _power(f.var, d))
        for d, c in reversed(list(enumerate(f.coeffs)))
        if c != F.zero
    ]
    return " + ".join(terms) if terms else "0"


def _split_top(text: str, sep: str = "+") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _parse_mono(token: str, var: str) -> int | None:
    if token == var:
        return 1
    m = re.fullmatch(re.escape(var) + r"\^(\d+)", token)
    return int(m.group(1)) if m else None


def parse_poly(F: FiniteField, text: str, var: str = "z"):
    from .poly import Poly

    s = text.strip()
    acc = Poly.zero(F, var)
    if s == "0":
        return acc
    for term in _split_top(s):
        if not term:
            raise ValueError(f"malformed polynomial {text!r}")
        tokens = term.split()
        coef, deg = F.one, 0
        if len(tokens) == 1:
            d = _parse_mono(tokens[0], var)
            if d is None:
                coef = parse_scalar(F, tokens[0])
            else:
                deg = d
        elif len(tokens) == 2:
            coef = parse_scalar(F, tokens[0])
            d = _parse_mono(tokens[1], var)
            if d is None:
                raise ValueError(f"malformed term {term!r}")
            deg = d
        else:
            raise ValueError(f"malformed term {term!r}")
        acc = acc + Poly.monomial(F, deg, coef, var)
    return acc


def format_algebra_element(a) -> str:
    A = a.algebra
    F = A.field
    order = range(A.dim - 1, -1, -1) if A.kind == "quotient" else range(A.dim)
    terms = []
    for i in order:
        c = a.coords[i]
        if c == F.zero:
            continue
        label = A.labels[i]
        terms.append(_term(format_scalar(F, c), "" if label == "1" else label))
    return " + ".join(terms) if terms else "0"


def parse_algebra_element(A, text: str):
    F = A.field
    s = text.strip()
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1].strip()
    if s == "0":
        return A.zero()
    index = {lab: i for i, lab in enumerate(A.labels)}
    acc = A.zero()
    for term in _split_top(s):
        tokens = term.split()
        if len(tokens) == 1 and tokens[0] in index and tokens[0] != "1":
            acc = acc + A.basis(index[tokens[0]])
        elif len(tokens) == 1:
            acc = acc + A.one() * parse_scalar(F, tokens[0])
        elif len(tokens) == 2 and tokens[1] in index:
            acc = acc + A.basis(index[tokens[1]]) * parse_scalar(F, tokens[0])
        else:
            raise ValueError(f"malformed algebra term {term!r}")
    return acc


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def format_ore(f) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for d in range(f.degree, -1, -1):
        c = f.coeffs[d]
        if c.is_zero():
            continue
        body = f"({format_algebra_element(c)})"
        terms.append(f"{_power('z', d)} {body}" if d else body)
    return " + ".join(terms)


def parse_ore(R, text: str):
    from .ore import OrePolynomial

    A = R.algebra
    s = text.strip()
    if s == "0":
        return R.zero()
    coeffs: dict[int, object] = {}
    for term in _split_top(s):
        m = re.fullmatch(r"(z(?:\^(\d+))?)?\s*(\((.*)\))?", term, flags=re.S)
        if m and (m.group(1) or m.group(3)):
            deg = 0 if not m.group(1) else int(m.group(2) or 1)
            coef = parse_algebra_element(A, m.group(4)) if m.group(3) else A.one()
        else:
            deg, coef = 0, parse_algebra_element(A, term)
        coeffs[deg] = coeffs.get(deg, A.zero()) + coef
    top = max(coeffs)
    return OrePolynomial(R, [coeffs.get(i, A.zero()) for i in range(top + 1)])


def format_polymatrix(M) -> str:
    return "\n".join("[" + ", ".join(format_poly(e) for e in row) + "]" for row in M.rows)


def parse_polymatrix(F: FiniteField, text: str, var: str = "z"):
    from .polymatrix import PolyMatrix

    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not (line.startswith("[") and line.endswith("]")):
            raise ValueError(f"malformed matrix row {line!r}")
        rows.append([parse_poly(F, e, var) for e in line[1:-1].split(",")])
    return PolyMatrix(F, rows)


def format_element(x) -> str:
    """Text form of a field element, algebra element, Ore polynomial or matrix."""
    from .algebra import AlgebraElement
    from .ore import OrePolynomial
    from .poly import Poly, QuotientElement
    from .polymatrix import PolyMatrix

    if isinstance(x, FieldElement):
        return format_scalar(x.field, x.value)
    if isinstance(x, QuotientElement):
        return format_scalar(x.field, x.value)
    if isinstance(x, Poly):
        return format_poly(x)
    if isinstance(x, AlgebraElement):
        return format_algebra_element(x)
    if isinstance(x, OrePolynomial):
        return format_ore(x)
    if isinstance(x, PolyMatrix):
        return format_polymatrix(x)
    raise TypeError(f"cannot format {type(x).__name__}")
