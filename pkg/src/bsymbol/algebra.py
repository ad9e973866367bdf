"""Arithmetic in GF(p^m) and polynomials over it.

Elements are encoded as integers ``0..q-1``: the base-p digits of an element
are its coordinates in the polynomial basis ``1, y, y^2, ...`` of
``GF(p)[y] / (modulus)``.  Polynomials over a field store their coefficients
ascending by degree.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

MAX_FIELD_SIZE = 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
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


def multiplicative_order(q: int, n: int) -> int:
    """Least ``m >= 1`` with ``q^m = 1 (mod n)``; requires gcd(q, n) = 1."""
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, acc = 1, q % n
    while acc != 1:
        acc = acc * q % n
        m += 1
    return m


def _digits(value: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, d = divmod(value, base)
        out.append(d)
    return out


def _undigits(digits, base: int) -> int:
    return sum(int(d) * base**i for i, d in enumerate(digits))


def _prime_poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def prime_field_irreducibles(p: int, m: int) -> list[tuple[int, ...]]:
    """Monic irreducibles of degree ``m`` over GF(p), sieved, smallest first.

    Each polynomial is a coefficient tuple ascending by degree.  Ordering is
    by the integer whose base-p digits are the coefficients.
    """
    def monics(d):
        for low in itertools.product(range(p), repeat=d):
            yield list(low) + [1]

    reducible = set()
    for d in range(1, m // 2 + 1):
        for a in monics(d):
            for b in monics(m - d):
                reducible.add(tuple(_prime_poly_mul(a, b, p)))
    cands = [tuple(c) for c in monics(m) if tuple(c) not in reducible]
    return sorted(cands, key=lambda c: _undigits(c, p))


class FieldSpec:
    """The finite field GF(p^m) with full lookup tables.

    Instances are immutable and cached per ``(p, m)``; use :func:`field_new`.
    Scalar methods work on Python ints, the ``*_table`` attributes are numpy
    arrays meant for fancy indexing over whole arrays of elements.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = q = p**m
        self.modulus = modulus
        digits = [_digits(a, p, m) for a in range(q)]

        add = [[_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                for b in range(q)] for a in range(q)]
        mul = [[self._mul_poly(digits[a], digits[b]) for b in range(q)] for a in range(q)]
        neg = [add[a].index(0) for a in range(q)]
        inv = [0] + [mul[a].index(1) for a in range(1, q)]

        self._add, self._mul, self._neg, self._inv = add, mul, neg, inv
        self.add_table = _frozen(np.array(add, dtype=np.int64))
        self.mul_table = _frozen(np.array(mul, dtype=np.int64))
        self.neg_table = _frozen(np.array(neg, dtype=np.int64))
        self.inv_table = _frozen(np.array(inv, dtype=np.int64))
        self.sub_table = _frozen(self.add_table[:, self.neg_table])
        self.primitive = self._find_primitive()
        self._verify()

    def _mul_poly(self, a, b):
        p, m = self.p, self.m
        prod = _prime_poly_mul(a, b, p)
        if m > 1:
            mod = self.modulus
            for deg in range(len(prod) - 1, m - 1, -1):
                c = prod[deg]
                if c:
                    for i in range(m + 1):
                        prod[deg - m + i] = (prod[deg - m + i] - c * mod[i]) % p
        return _undigits(prod[:m], p)

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        primes = prime_factors(order)
        for a in range(2, self.q):
            if all(self.pow(a, order // r) != 1 for r in primes):
                return a
        raise AssertionError("no primitive element")  # pragma: no cover

    def _verify(self):
        q = self.q
        for a in range(q):
            assert self._add[a][0] == a and self._mul[a][1] == a
            assert self._add[a][self._neg[a]] == 0
            if a:
                assert self._mul[a][self._inv[a]] == 1

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def __reduce__(self):
        return field_new, (self.p, self.m)

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            e >>= 1
        return result


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@functools.lru_cache(maxsize=None)
def field_new(p: int, m: int = 1) -> FieldSpec:
    """Build GF(p^m) using the smallest monic irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p}^{m} = {p**m} exceeds {MAX_FIELD_SIZE}")
    modulus = prime_field_irreducibles(p, m)[0] if m > 1 else (0, 1)
    return FieldSpec(p, m, modulus)


def field_of_size(q: int) -> FieldSpec:
    """GF(q) for a prime power ``q <= 16``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return field_new(p, m)


@dataclass(frozen=True)
class Poly:
    """Polynomial over a :class:`FieldSpec`; coefficients ascending by degree."""

    field: FieldSpec
    coeffs: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        for v in c:
            if not 0 <= v < self.field.q:
                raise ValueError(f"coefficient {v} not in GF({self.field.q})")
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field: FieldSpec, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def xn_minus_1(cls, field: FieldSpec, n: int) -> Poly:
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_key(cls, field: FieldSpec, key: int) -> Poly:
        digits = []
        while key:
            key, d = divmod(key, field.q)
            digits.append(d)
        return cls(field, tuple(digits))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> Poly:
        return cls(field, parse_elements(field, text))

    def __str__(self):
        return format_elements(self.field, self.coeffs) if self.coeffs else "0"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = "" if (c == 1 and i) else str(c)
            terms.append(coef + mono)
        return " + ".join(terms)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def key(self) -> int:
        """Integer with the coefficients as base-q digits; orders monics by degree first."""
        return _undigits(self.coeffs, self.field.q)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        s = self.field.inv(self.lead)
        return self.scale(s)

    def scale(self, s: int) -> Poly:
        f = self.field
        return Poly(f, tuple(f.mul(s, c) for c in self.coeffs))

    def __call__(self, a: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, a), c)
        return acc

    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other: Poly) -> Poly:
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Poly(f, tuple(f.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-self._check(other))

    def __mul__(self, other: Poly) -> Poly:
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, tuple(out))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dg = other.degree
        inv_lead = f.inv(other.lead)
        quot = [0] * max(len(rem) - dg, 0)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if not c:
                continue
            t = f.mul(c, inv_lead)
            quot[i - dg] = t
            for j, g in enumerate(other.coeffs):
                rem[i - dg + j] = f.sub(rem[i - dg + j], f.mul(t, g))
        return Poly(f, tuple(quot)), Poly(f, tuple(rem[:dg]))

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def powmod(self, e: int, mod: Poly) -> Poly:
        result = Poly.const(self.field, 1) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def gcd(self, other: Poly) -> Poly:
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def vector(self, n: int) -> np.ndarray:
        """Coefficient vector of length ``n`` (degree must be below ``n``)."""
        if self.degree >= n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        out = np.zeros(n, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out


def parse_elements(field: FieldSpec, text: str) -> tuple[int, ...]:
    """Parse element codes: base-q digits for q <= 10, comma separated above."""
    text = text.strip()
    if not text:
        return ()
    if field.q <= 10 and "," not in text:
        try:
            vals = tuple(int(ch) for ch in text)
        except ValueError:
            raise ValueError(f"bad element string {text!r}") from None
    else:
        try:
            vals = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"bad element string {text!r}") from None
    for v in vals:
        if not 0 <= v < field.q:
            raise ValueError(f"element code {v} out of range for GF({field.q})")
    return vals


def format_elements(field: FieldSpec, values) -> str:
    values = [int(v) for v in values]
    if field.q <= 10:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def poly_period(h: Poly) -> int:
    """Least ``e >= 1`` with ``h | x^e - 1``."""
    if h.degree < 1:
        raise ValueError("period undefined for constant polynomials")
    if h.coeffs[0] == 0:
        raise ValueError("period undefined when h(0) = 0")
    h = h.monic()
    f = h.field
    one = Poly.const(f, 1)
    x = Poly.x(f)
    bound = f.q**h.degree - 1
    r = x % h
    for e in range(1, bound + 1):
        if r == one:
            return e
        r = (r * x) % h
    raise AssertionError("period search exceeded q^deg - 1")  # pragma: no cover


def is_irreducible(h: Poly) -> bool:
    """Rabin's test for a polynomial of positive degree."""
    d = h.degree
    if d < 1:
        return False
    if d == 1:
        return True
    h = h.monic()
    f = h.field
    x = Poly.x(f)

    def frob(k):
        return x.powmod(f.q**k, h)

    if frob(d) != x % h:
        return False
    for r in prime_factors(d):
        if (frob(d // r) - x).gcd(h).degree > 0:
            return False
    return True


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """q-cyclotomic cosets modulo ``n``, each listed as ``i, iq, iq^2, ...``."""
    if n < 1 or math.gcd(n, q) != 1:
        raise ValueError(f"cyclotomic cosets need gcd(n, q) = 1 (n={n}, q={q})")
    seen = set()
    out = []
    for i in range(n):
        if i in seen:
            continue
        coset = []
        j = i
        while j not in coset:
            coset.append(j)
            j = j * q % n
        seen.update(coset)
        out.append(coset)
    return out


class _Extension:
    """GF(q^m) as GF(q)[y]/(f), elements stored as Polys over GF(q)."""

    def __init__(self, base: FieldSpec, m: int):
        self.base = base
        self.m = m
        self.size = base.q**m
        if m == 1:
            self.modulus = Poly(base, (0, 1))
        else:
            key = base.q**m
            while True:
                cand = Poly.from_key(base, key)
                if cand.is_monic() and cand.degree == m and is_irreducible(cand):
                    break
                key += 1
            self.modulus = cand
        self.one = Poly.const(base, 1)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return (a * b) % self.modulus

    def pow(self, a: Poly, e: int) -> Poly:
        return a.powmod(e, self.modulus)

    def root_of_unity(self, n: int) -> Poly:
        """An element of multiplicative order exactly ``n``."""
        cofactor, rem = divmod(self.size - 1, n)
        if rem:
            raise ArithmeticError(f"{n} does not divide |GF({self.size})*|")
        primes = prime_factors(n)
        for key in range(1, self.size):
            beta = Poly.from_key(self.base, key)
            gamma = self.pow(beta, cofactor)
            if all(self.pow(gamma, n // r) != self.one for r in primes):
                return gamma
        raise ArithmeticError(f"no element of order {n} in GF({self.size})")


def _product_of_linear(ext: _Extension, roots: list[Poly]) -> Poly:
    """Expand prod (x - r) over the extension and map back to the base field."""
    base = ext.base
    coeffs = [ext.one]
    zero = Poly(base)
    for r in roots:
        neg_r = -r
        nxt = [zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] + ext.mul(c, neg_r)
        coeffs = nxt
    out = []
    for c in coeffs:
        if c.degree > 0:
            raise ArithmeticError("minimal polynomial has coefficients outside the base field")
        out.append(c.coeffs[0] if c.coeffs else 0)
    return Poly(base, tuple(out))


@functools.lru_cache(maxsize=None)
def factor_xn_minus_1(n: int, field: FieldSpec) -> tuple[tuple[Poly, int], ...]:
    """Monic irreducible factorisation of ``x^n - 1`` as ``(factor, multiplicity)`` pairs.

    Factors are sorted by :meth:`Poly.key`.  The ``p``-power part of ``n`` is
    split off first; the squarefree part is factored through cyclotomic cosets
    and minimal polynomials of a primitive root of unity in an extension.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = field.p
    n_prime, ps = n, 1
    while n_prime % p == 0:
        n_prime //= p
        ps *= p
    m = multiplicative_order(field.q, n_prime)
    ext = _Extension(field, m)
    alpha = ext.root_of_unity(n_prime)
    powers = [ext.one]
    for _ in range(n_prime - 1):
        powers.append(ext.mul(powers[-1], alpha))
    factors = []
    for coset in cyclotomic_cosets(n_prime, field.q):
        factors.append(_product_of_linear(ext, [powers[j] for j in coset]))
    factors.sort(key=Poly.key)
    return tuple((fac, ps) for fac in factors)


def expand_factors(factors) -> Poly:
    """Multiply out ``(factor, multiplicity)`` pairs."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    out = Poly.const(factors[0][0].field, 1)
    for fac, mult in factors:
        for _ in range(mult):
            out = out * fac
    return out
