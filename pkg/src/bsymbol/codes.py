"""Linear and cyclic codes, named constructions and codeword enumeration."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import (
    FieldSpec,
    Poly,
    factor_xn_minus_1,
    field_of_size,
    format_elements,
    poly_period,
)
from .linalg import rank, span_elements

MAX_CODEWORDS = 2**24
MAX_SUBSPACES = 2**27


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(f"{what}: {needed} exceeds cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class LinearCode:
    """An ``[n, k]_q`` linear code given by a full-rank generator matrix."""

    def __init__(self, field: FieldSpec, G):
        G = np.array(G, dtype=np.int64)
        if G.ndim != 2 or G.shape[0] < 1:
            raise ValueError("generator matrix must be 2-d with at least one row")
        if G.min() < 0 or G.max() >= field.q:
            raise ValueError("generator entries out of field range")
        k, n = G.shape
        if rank(G, field) != k:
            raise ValueError("generator matrix is not of full row rank")
        G.setflags(write=False)
        self.field = field
        self.G = G
        self.n = n
        self.k = k

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.field.q**self.k

    @property
    def is_cyclic(self) -> bool:
        return False

    @property
    def descriptor(self) -> str:
        sep = "|" if self.field.q > 10 else ","
        rows = sep.join(format_elements(self.field, row) for row in self.G)
        return f"q={self.q};n={self.n};G={rows}"

    def __repr__(self):
        return f"{type(self).__name__}([{self.n},{self.k}]_{self.q})"

    def encode(self, message) -> np.ndarray:
        m = np.asarray(message, dtype=np.int64)
        if m.shape != (self.k,):
            raise ValueError(f"message must have length {self.k}")
        return span_elements_single(self.G, m, self.field)

    def codewords(self, max_codewords: int = MAX_CODEWORDS) -> np.ndarray:
        """All ``q^k`` codewords, message index ``sum(m_i q^i)`` ascending."""
        check_codeword_budget(self, max_codewords)
        return self._all_codewords

    @cached_property
    def _all_codewords(self) -> np.ndarray:
        words = span_elements(self.G, self.field)
        words.setflags(write=False)
        return words

    def codeword_range(self, start: int, stop: int) -> np.ndarray:
        """Codewords for message indices ``start <= idx < stop``."""
        start, stop = max(start, 0), min(stop, self.size)
        if stop <= start:
            return np.zeros((0, self.n), dtype=np.int64)
        idx = np.arange(start, stop, dtype=np.int64)
        add, mul = self.field.add_table, self.field.mul_table
        out = np.zeros((stop - start, self.n), dtype=np.int64)
        for i in range(self.k):
            digit = (idx // self.q**i) % self.q
            out = add[out, mul[digit[:, None], self.G[i][None, :]]]
        return out

    def iter_codeword_chunks(self, chunk: int = 1 << 16):
        for start in range(0, self.size, chunk):
            yield self.codeword_range(start, start + chunk)

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64)
        return rank(np.vstack([self.G, w]), self.field) == self.k


def span_elements_single(G: np.ndarray, message: np.ndarray, field: FieldSpec) -> np.ndarray:
    out = np.zeros(G.shape[1], dtype=np.int64)
    for c, row in zip(message, G):
        out = field.add_table[out, field.mul_table[c, row]]
    return out


def check_codeword_budget(code: LinearCode, cap: int = MAX_CODEWORDS) -> None:
    if code.size > cap:
        raise BudgetExceeded(f"codeword enumeration of {code!r}", code.size, cap)


class CyclicCode(LinearCode):
    """Cyclic code of length ``n`` generated by a monic divisor ``g`` of ``x^n - 1``."""

    def __init__(self, n: int, g: Poly):
        field = g.field
        if g.is_zero():
            raise ValueError("generator polynomial is zero")
        g = g.monic()
        xn1 = Poly.xn_minus_1(field, n)
        h, rem = divmod(xn1, g)
        if not rem.is_zero():
            raise ValueError(f"g = {g} does not divide x^{n} - 1")
        k = n - g.degree
        if k < 1:
            raise ValueError("generator x^n - 1 gives the zero code")
        x = Poly.x(field)
        rows = []
        shifted = g
        for _ in range(k):
            rows.append(shifted.vector(n))
            shifted = shifted * x
        super().__init__(field, np.array(rows))
        self.g = g
        self.h = h

    @property
    def is_cyclic(self) -> bool:
        return True

    @property
    def descriptor(self) -> str:
        return f"q={self.q};n={self.n};g={self.g}"

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64)
        if w.shape != (self.n,):
            return False
        return (Poly(self.field, tuple(w)) % self.g).is_zero()


def cyclic_from_gen(n: int, g: Poly) -> CyclicCode:
    return CyclicCode(n, g)


def parse_descriptor(text: str) -> LinearCode:
    """Parse ``q=<int>;n=<int>;g=<poly>`` (or ``G=<row>,<row>,...`` for a linear code)."""
    parts = {}
    for item in text.strip().split(";"):
        if not item:
            continue
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"bad descriptor field {item!r}")
        parts[key.strip()] = val.strip()
    try:
        q = int(parts["q"])
        n = int(parts["n"])
    except KeyError as exc:
        raise ValueError(f"descriptor missing {exc.args[0]!r}") from None
    field = field_of_size(q)
    if "g" in parts:
        return CyclicCode(n, Poly.parse(field, parts["g"]))
    if "G" in parts:
        if q > 10:
            rows = [[int(v) for v in r.split(",")] for r in parts["G"].split("|")]
        else:
            rows = [[int(ch) for ch in r] for r in parts["G"].split(",")]
        if any(len(r) != n for r in rows):
            raise ValueError("generator rows must have length n")
        return LinearCode(field, rows)
    raise ValueError("descriptor needs g= or G=")


@dataclass(frozen=True)
class IrreducibleCyclic:
    """An irreducible cyclic code together with the hypotheses it satisfies."""

    code: CyclicCode
    q: int
    k: int
    delta: int
    delta_divides_q_minus_1: bool
    gcd_n_delta_is_1: bool
    gcd_period_delta_is_1: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.delta_divides_q_minus_1 and self.gcd_n_delta_is_1 and self.gcd_period_delta_is_1


def irreducible_cyclic(q: int, k: int, delta: int) -> IrreducibleCyclic:
    """The ``[n, k]`` irreducible cyclic code with ``n = (q^k - 1) / delta``.

    The parity-check polynomial is the smallest degree-``k`` irreducible factor
    of ``x^n - 1`` whose period is exactly ``n``.
    """
    field = field_of_size(q)
    total = q**k - 1
    if delta < 1 or total % delta:
        raise ValueError(f"delta={delta} does not divide q^k - 1 = {total}")
    n = total // delta
    if n < 2:
        raise ValueError(f"length n={n} is degenerate")
    cands = [f for f, _ in factor_xn_minus_1(n, field) if f.degree == k and poly_period(f) == n]
    if not cands:
        raise ValueError(f"x^{n} - 1 has no degree-{k} irreducible factor of period {n}")
    h = min(cands, key=Poly.key)
    g = Poly.xn_minus_1(field, n) // h
    code = CyclicCode(n, g)
    per = poly_period(h)
    return IrreducibleCyclic(
        code=code,
        q=q,
        k=k,
        delta=delta,
        delta_divides_q_minus_1=(q - 1) % delta == 0,
        gcd_n_delta_is_1=math.gcd(n, delta) == 1,
        gcd_period_delta_is_1=math.gcd(per, delta) == 1,
    )


def simplex(q: int, k: int, max_codewords: int = MAX_CODEWORDS) -> LinearCode:
    """The ``[(q^k-1)/(q-1), k]_q`` simplex code.

    When ``gcd(n, q-1) = 1`` this is the irreducible cyclic code with
    ``delta = q - 1``.  Otherwise no cyclic simplex code of that length exists
    and the generator matrix lists one representative of every projective
    point of GF(q)^k (first nonzero coordinate equal to 1).
    """
    if k < 2:
        raise ValueError("simplex codes need k >= 2")
    if q**k > max_codewords:
        raise BudgetExceeded(f"simplex({q},{k})", q**k, max_codewords)
    field = field_of_size(q)
    n = (q**k - 1) // (q - 1)
    if math.gcd(n, q - 1) == 1:
        return irreducible_cyclic(q, k, q - 1).code
    cols = []
    for vec in itertools.product(range(q), repeat=k):
        nz = [v for v in vec if v]
        if nz and nz[0] == 1:
            cols.append(vec)
    return LinearCode(field, np.array(cols).T)


def cyclic_divisors(n: int, field: FieldSpec):
    """Monic divisors of ``x^n - 1`` in a fixed order (last factor exponent fastest)."""
    factors = factor_xn_minus_1(n, field)
    one = Poly.const(field, 1)
    for exps in itertools.product(*(range(m + 1) for _, m in factors)):
        g = one
        for (f, _), e in zip(factors, exps):
            for _ in range(e):
                g = g * f
        yield g


def enumerate_cyclic_codes(n: int, field: FieldSpec, include_trivial: bool = False):
    """Yield every cyclic code of length ``n`` over ``field`` with ``1 <= k < n``.

    ``include_trivial`` adds the full space ``k = n``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    for g in cyclic_divisors(n, field):
        k = n - g.degree
        if k == 0 or (k == n and not include_trivial):
            continue
        yield CyclicCode(n, g)


@dataclass(frozen=True)
class Independence:
    """Outcome of the b-consecutive independence test."""

    holds: bool
    reason: str | None = None

    def __bool__(self):
        return self.holds


def b_consecutive_independent(code: LinearCode, b: int) -> Independence:
    """Whether every cyclic window of ``b`` coordinates carries rank-``b`` columns of G."""
    if b < 1:
        raise ValueError("b must be >= 1")
    if b > code.k:
        return Independence(False, f"b={b} exceeds k={code.k}")
    n = code.n
    for i in range(n):
        cols = code.G[:, [(i + j) % n for j in range(b)]]
        if rank(cols, code.field) < b:
            return Independence(False, f"window at position {i} is dependent")
    return Independence(True)


def transform_code(code: LinearCode, diag, shift: int) -> LinearCode:
    """The code ``C D P^shift``: scale coordinate ``i`` by ``diag[i]``, then apply ``P^shift``.

    ``P`` has ones at ``(i+1, i)`` and ``(0, n-1)``, so ``cP`` is ``c`` cyclically
    shifted one place to the left.
    """
    d = np.asarray(diag, dtype=np.int64)
    if d.shape != (code.n,) or np.any(d == 0):
        raise ValueError("diagonal must be a length-n vector of nonzero elements")
    G = code.field.mul_table[code.G, d[None, :]]
    G = np.roll(G, -shift, axis=1)
    return LinearCode(code.field, G)

