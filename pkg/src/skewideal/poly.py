"""Univariate polynomials over a finite field.

:class:`Poly` is an immutable value holding ascending native coefficients
with no trailing zeros (the zero polynomial has no coefficients).  The
module also provides Berlekamp factorization, CRT idempotents of
F[x]/(f), and :class:`QuotientField`, the presentation F[x]/(f) of a
finite field given by an irreducible f over a (non-prime) base field.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from . import linalg
from .field import FiniteField, prime_power


class Poly:
    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: FiniteField, coeffs: Sequence[int] = (), var: str = "z"):
        c = list(coeffs)
        while c and c[-1] == field.zero:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)
        self.var = var

    # -- constructors --

    @classmethod
    def zero(cls, field: FiniteField, var: str = "z") -> Poly:
        return cls(field, (), var)

    @classmethod
    def one(cls, field: FiniteField, var: str = "z") -> Poly:
        return cls(field, (field.one,), var)

    @classmethod
    def constant(cls, field: FiniteField, c: int, var: str = "z") -> Poly:
        return cls(field, (c,), var)

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, c: int | None = None, var: str = "z") -> Poly:
        return cls(field, [field.zero] * degree + [field.one if c is None else c], var)

    def _new(self, coeffs) -> Poly:
        return Poly(self.field, coeffs, self.var)

    # -- basic properties --

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __len__(self) -> int:
        return len(self.coeffs)

    # -- arithmetic --

    def _check(self, other: Poly) -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = F.add(out[i], y)
        return self._new(out)

    def __neg__(self) -> Poly:
        return self._new([self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c: int) -> Poly:
        F = self.field
        if c == F.zero:
            return self._new(())
        return self._new([F.mul(c, x) for x in self.coeffs])

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == F.zero:
                continue
            for j, y in enumerate(b):
                if y != F.zero:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self._new(out)

    def __pow__(self, e: int) -> Poly:
        result = Poly.one(self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return euclidean_divide(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return euclidean_divide(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return euclidean_divide(self, other)[1]

    def shift(self, k: int) -> Poly:
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return self._new([self.field.zero] * k + list(self.coeffs))

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> Poly:
        F = self.field
        return self._new([F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, mod: Poly) -> Poly:
        result = Poly.one(self.field, self.var) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def with_var(self, var: str) -> Poly:
        return Poly(self.field, self.coeffs, var)

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    # -- comparison / display --

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        from .textio import format_poly

        return format_poly(self)


def euclidean_divide(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with a = q b + r, deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = a.field
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return Poly.zero(F, a.var), a
    inv_lc = F.inv(b.lc)
    q = [F.zero] * (len(r) - db)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db]
        if c == F.zero:
            continue
        c = F.mul(c, inv_lc)
        q[shift] = c
        for i, bc in enumerate(b.coeffs):
            if bc != F.zero:
                r[shift + i] = F.sub(r[shift + i], F.mul(c, bc))
    return Poly(F, q, a.var), Poly(F, r[:db], a.var)


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with u a + v b = g and g the monic gcd."""
    a._check(b)
    F = a.field
    if a.is_zero() and b.is_zero():
        raise ValueError("xgcd of two zero polynomials")
    one, zero = Poly.one(F, a.var), Poly.zero(F, a.var)
    if b.is_zero() or (not a.is_zero() and (b % a).is_zero()):
        c = Poly.constant(F, F.inv(a.lc), a.var)
        return a.monic(), c, zero
    if a.is_zero():
        return b.monic(), zero, Poly.constant(F, F.inv(b.lc), a.var)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = euclidean_divide(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = Poly.constant(F, F.inv(r0.lc), a.var)
    return r0 * c, s0 * c, t0 * c


def gcd(a: Poly, b: Poly) -> Poly:
    return xgcd(a, b)[0]


def _pth_root(f: Poly) -> Poly:
    F = f.field
    p = F.p
    e = F.order // p
    return Poly(F, [F.pow(f.coeffs[i], e) for i in range(0, len(f.coeffs), p)], f.var)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Pairs (s_i, i) of squarefree, pairwise coprime s_i with f = prod s_i**i (monic)."""
    F = f.field
    f = f.monic()
    out: list[tuple[Poly, int]] = []
    c = gcd(f, f.derivative()) if not f.derivative().is_zero() else f
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        fac = w // y
        if not fac.is_one():
            out.append((fac, i))
        w, c, i = y, c // y, i + 1
    if not c.is_one():
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * F.p))
    return out


def _berlekamp_split(g: Poly) -> list[Poly]:
    """Irreducible factors of a monic squarefree g."""
    F = g.field
    d = g.degree
    if d <= 1:
        return [g]
    q = F.order
    xq = Poly.monomial(F, 1, var=g.var).powmod(q, g)
    rows = []
    cur = Poly.one(F, g.var)
    for i in range(d):
        rows.append([cur[j] for j in range(d)])
        cur = (cur * xq) % g
    # v with sum_i v_i (x^{iq} mod g) = v  <=>  (B - I)^T v = 0
    bt = [[F.sub(rows[i][j], F.one if i == j else F.zero) for i in range(d)] for j in range(d)]
    kernel = linalg.nullspace(F, bt)
    r = len(kernel)
    factors = [g]
    if r == 1:
        return factors
    for vec in kernel:
        v = Poly(F, vec, g.var)
        if v.is_constant():
            continue
        nxt = []
        for h in factors:
            if h.degree <= 1:
                nxt.append(h)
                continue
            for s in F.elements():
                if h.degree <= 1:
                    break
                w = gcd(h, v - Poly.constant(F, s, g.var))
                if 0 < w.degree < h.degree:
                    nxt.append(w)
                    h = h // w
            nxt.append(h.monic())
        factors = nxt
        if len(factors) == r:
            break
    return factors


def berlekamp_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factorization, sorted by (degree, coefficients)."""
    if f.degree < 1:
        raise ValueError("factorization needs a polynomial of degree >= 1")
    out = []
    for s, m in squarefree_decomposition(f):
        for g in _berlekamp_split(s):
            out.append((g.monic(), m))
    out.sort(key=lambda pm: pm[0].sort_key())
    return out


def is_irreducible(f: Poly) -> bool:
    fac = berlekamp_factor(f)
    return len(fac) == 1 and fac[0][1] == 1


def quotient_idempotents(f: Poly) -> list[Poly]:
    """CRT idempotents of F[x]/(f), one per irreducible factor in factor order."""
    factors = berlekamp_factor(f)
    if any(m > 1 for _, m in factors):
        raise ValueError("modulus is not squarefree; F[x]/(f) is not semisimple")
    f = f.monic()
    out = []
    for fi, _ in factors:
        g = f // fi
        d, u, _v = xgcd(g, fi)
        assert d.is_one()
        out.append((u * g) % f)
    return out


class QuotientField:
    """The field K = F[x]/(f) for f irreducible over the finite field F.

    Native values are coordinate tuples of length deg f over F (ascending
    powers of x).  Enumeration order reads a value as the base-|F| integer
    sum(code(c_i) * |F|**i), so constants come first and then x.
    """

    def __init__(self, base: FiniteField, modulus: Poly):
        if modulus.field != base:
            raise ValueError("modulus is not over the base field")
        if not is_irreducible(modulus):
            raise ValueError(f"{modulus} is not irreducible over {base!r}")
        self.base = base
        self.modulus = modulus.monic().with_var("x")
        self.d = modulus.degree
        self.order = base.order**self.d
        self.p = base.p
        self.zero = (base.zero,) * self.d
        self.one = (base.one,) + (base.zero,) * (self.d - 1)

    def to_poly(self, v) -> Poly:
        return Poly(self.base, v, "x")

    def from_poly(self, f: Poly) -> tuple:
        r = f % self.modulus
        return tuple(r[i] for i in range(self.d))

    def add(self, a, b):
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self.from_poly(self.to_poly(a) * self.to_poly(b))

    def pow(self, a, e: int):
        if a == self.zero:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return self.one if e == 0 else self.zero
        e %= self.order - 1
        return self.from_poly(self.to_poly(a).powmod(e, self.modulus))

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        _g, u, _v = xgcd(self.to_poly(a), self.modulus)
        return self.from_poly(u)

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.d - 1)

    def embed(self, c: int):
        """Image of a base-field value."""
        return (c,) + (self.base.zero,) * (self.d - 1)

    def elements(self) -> Iterator[tuple]:
        q = self.base.order
        for n in range(self.order):
            yield tuple((n // q**i) % q for i in range(self.d))

    def degree_over(self, subfield_order: int) -> int:
        pp = prime_power(subfield_order)
        if pp is None or pp[0] != self.p or (self.base.k * self.d) % pp[1] != 0:
            raise ValueError(f"GF({subfield_order}) is not a subfield of {self!r}")
        if self.base.k % pp[1] != 0:
            raise ValueError(f"GF({subfield_order}) is not a subfield of the base field")
        return self.base.k * self.d // pp[1]

    def wrap(self, v) -> QuotientElement:
        return QuotientElement(self, tuple(v))

    def gen(self) -> QuotientElement:
        return self.wrap(self.from_poly(Poly.monomial(self.base, 1, var="x")))

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientField) and (self.base, self.modulus) == (other.base, other.modulus)

    def __hash__(self) -> int:
        return hash(("QuotientField", self.base, self.modulus))

    def __repr__(self) -> str:
        return f"{self.base!r}[x]/({self.modulus})"


class QuotientElement:
    __slots__ = ("field", "value")

    def __init__(self, field: QuotientField, value: tuple):
        self.field = field
        self.value = value

    def _v(self, other):
        if isinstance(other, QuotientElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return QuotientElement(self.field, self.field.add(self.value, self._v(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return QuotientElement(self.field, self.field.sub(self.value, self._v(other)))

    def __neg__(self):
        return QuotientElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return QuotientElement(self.field, self.field.mul(self.value, self._v(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return QuotientElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return QuotientElement(self.field, self.field.inv(self.value))

    def to_poly(self) -> Poly:
        return self.field.to_poly(self.value)

    def __bool__(self) -> bool:
        return self.value != self.field.zero

    def __eq__(self, other) -> bool:
        if isinstance(other, QuotientElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return repr(self.to_poly())
