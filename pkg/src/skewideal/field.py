"""Finite fields F_{p^k} with log/exp tables.

Elements are stored as integers: the coefficient vector (c_0, ..., c_{k-1})
of c_0 + c_1 a + ... + c_{k-1} a^{k-1} is encoded as sum(c_i * p**i), where
``a`` is the class of the indeterminate modulo the defining polynomial.
Multiplication goes through discrete-log tables with respect to a primitive
element, which is also the base of the ``a^k`` text notation.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import linalg

MAX_FIELD_ORDER = 1 << 16


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, s) with q = p**s, or None if q is not a prime power."""
    if q < 2:
        return None
    ps = prime_factors(q)
    if len(ps) != 1:
        return None
    p, s = ps[0], 0
    while q > 1:
        q //= p
        s += 1
    return p, s


# -- polynomials over Z/p as ascending int lists (construction-time only) --


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    df = len(f) - 1
    inv_lc = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return _pmod(result, f, p)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    h = x
    powers = {}
    for i in range(1, k + 1):
        h = _ppowmod(h, p, f, p)
        powers[i] = h
    if _psub(powers[k], x, p):
        return False
    for r in prime_factors(k):
        g = _pgcd(f, _psub(powers[k // r], x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p with the smallest integer encoding.

    Candidates are ordered by sum(c_i * p**i), i.e. lexicographically on the
    coefficient sequence read from the leading term down.
    """
    for low in range(p**k):
        coeffs = [(low // p**i) % p for i in range(k)] + [1]
        if k > 1 and coeffs[0] == 0:
            continue
        if is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """The field F_p[a]/(modulus) with ``p**k`` elements.

    Native element values are ints in ``range(order)``.  The instance is
    immutable after construction.
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = tuple(int(c) % p for c in modulus)
        self.zero = 0
        self.one = 1
        self._pw = [p**i for i in range(k)]
        self._build_tables()

    # -- construction helpers --

    def _digits(self, v: int) -> list[int]:
        return [(v // w) % self.p for w in self._pw]

    def _encode(self, digits: Iterable[int]) -> int:
        return sum((d % self.p) * w for d, w in zip(digits, self._pw))

    def _raw_mul(self, a: int, b: int) -> int:
        r = _pmulmod(_trim(self._digits(a)), _trim(self._digits(b)), self.modulus, self.p)
        return self._encode(r)

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        n = self.order - 1
        factors = prime_factors(n) if n > 1 else []
        gen = next(
            g for g in range(1, self.order)
            if all(self._raw_pow(g, n // r) != 1 for r in factors)
        )
        exp = [0] * (2 * n)
        log = [-1] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        exp[n:] = exp[:n]
        self.generator = gen
        self._exp = exp
        self._log = log
        if self.p != 2:
            self._neg = [self._encode(-d for d in self._digits(v)) for v in range(self.order)]

    # -- native arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._encode(x + y for x, y in zip(self._digits(a), self._digits(b)))

    def neg(self, a: int) -> int:
        return a if self.p == 2 else self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log of a nonzero element with respect to the generator."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def from_power(self, e: int) -> int:
        return self._exp[e % (self.order - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F (i.e. n mod p)."""
        return n % self.p

    def coords(self, a: int) -> tuple[int, ...]:
        return tuple(self._digits(a))

    def from_coords(self, coords: Sequence[int]) -> int:
        if len(coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(coords)}")
        return self._encode(coords)

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def in_subfield(self, a: int, subfield_order: int) -> bool:
        return self.pow(a, subfield_order) == a

    def degree_over(self, subfield_order: int) -> int:
        pp = prime_power(subfield_order)
        if pp is None or pp[0] != self.p or self.k % pp[1] != 0:
            raise ValueError(f"GF({subfield_order}) is not a subfield of {self!r}")
        return self.k // pp[1]

    # -- element wrappers --

    def __call__(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element encoding of {self!r}")
        return FieldElement(self, value)

    def wrap(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    @cached_property
    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self.generator)

    # -- identity --

    def _key(self):
        return (self.p, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(("FiniteField",) + self._key())

    def __repr__(self) -> str:
        return f"GF({self.order})"


class FieldElement:
    """A value of a :class:`FiniteField` with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(o)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.value)

    def log(self) -> int:
        return self.field.log(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        if self.value in (0, 1):
            return str(self.value)
        e = self.field.log(self.value)
        return "a" if e == 1 else f"a^{e}"


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Build F_{p^k}, defaulting to the smallest irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if k < 1:
        raise ValueError("degree must be at least 1")
    if p**k > MAX_FIELD_ORDER:
        raise ValueError(f"field order {p}^{k} exceeds the cap of {MAX_FIELD_ORDER}")
    if modulus is None:
        modulus = smallest_irreducible(p, k)
    else:
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not is_irreducible_mod_p(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
    return FiniteField(p, k, modulus)


# -- Frobenius, trace, normal bases; these work for any field object that
#    exposes the native-value protocol (add/mul/pow/inv/elements/wrap) --


def _unwrap(a):
    return a.field, a.value


def frobenius_power(a, base_q: int, h: int = 1):
    """Return a ** (base_q ** h), where GF(base_q) is a subfield of a's field."""
    F, v = _unwrap(a)
    t = F.degree_over(base_q)
    return F.wrap(F.pow(v, base_q ** (h % t)))


def _trace_native(F, v, q: int, t: int):
    acc = F.zero
    x = v
    for _ in range(t):
        acc = F.add(acc, x)
        x = F.pow(x, q)
    return acc


def trace(a, subfield_order: int):
    """Trace of a down to GF(subfield_order): sum of its conjugates."""
    F, v = _unwrap(a)
    t = F.degree_over(subfield_order)
    return F.wrap(_trace_native(F, v, subfield_order, t))


def normal_dual_bases(field, subfield_order: int) -> tuple[list, list]:
    """First normal element in enumeration order, its conjugates, and their dual basis.

    The dual basis is obtained by inverting the trace Gram matrix
    [Tr(a_i a_j)], so Tr(a_i b_j) is the Kronecker delta.
    """
    F = field
    q = subfield_order
    t = F.degree_over(q)
    for v in F.elements():
        if v == F.zero:
            continue
        conj = [v]
        for _ in range(t - 1):
            conj.append(F.pow(conj[-1], q))
        gram = [[_trace_native(F, F.mul(x, y), q, t) for y in conj] for x in conj]
        try:
            ginv = linalg.inverse(F, gram)
        except ValueError:
            continue
        dual = linalg.matmul(F, ginv, [[c] for c in conj])
        dual = [row[0] for row in dual]
        return [F.wrap(c) for c in conj], [F.wrap(d) for d in dual]
    raise AssertionError("no normal element found")  # pragma: no cover
