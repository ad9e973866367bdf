"""Bound and classification checkers.

Every checker takes precomputed distances and returns :class:`BoundReport`
objects; arithmetic is exact integer (or :class:`fractions.Fraction`) only.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import ceil, floor

from .codes import Independence, LinearCode

_RELATIONS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    params: dict
    lhs: int | None
    relation: str
    rhs: int | None
    applicable: bool = True
    reason: str | None = None
    certificate: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    @property
    def tight(self) -> bool | None:
        if not self.applicable:
            return None
        return self.lhs == self.rhs

    @property
    def violated(self) -> bool:
        return self.holds is False

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "params": self.params,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "holds": self.holds,
            "tight": self.tight,
            "applicable": self.applicable,
            "reason": self.reason,
            "certificate": self.certificate,
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _params(code: LinearCode, **extra) -> dict:
    return {"q": code.q, "n": code.n, "k": code.k, **extra}


def _cert(code: LinearCode, **extra) -> dict:
    return {"code": code.descriptor, **extra}


def check_generalized_singleton(code: LinearCode, r: int, ghw_r: int) -> list[BoundReport]:
    """``∂_r <= n - k + r``; equality means r-rank MDS.  Cyclic codes at ``r = k`` also get ``∂_k = n``."""
    n, k = code.n, code.k
    out = [BoundReport("generalized_singleton", _params(code, r=r), ghw_r, "<=", n - k + r,
                       certificate=_cert(code))]
    if code.is_cyclic and r == k:
        out.append(BoundReport("cyclic_rank_k_mds", _params(code, r=r), ghw_r, "==", n,
                               certificate=_cert(code)))
    return out


def check_bsymbol_singleton(n: int, M: int, d_b: int, b: int, q: int,
                            certificate: dict | None = None) -> BoundReport:
    """``M <= q^(n - d_b + b)``; equality means b-symbol MDS."""
    if d_b > n:
        raise ValueError("d_b cannot exceed n")
    return BoundReport("bsymbol_singleton", {"q": q, "n": n, "M": M, "b": b, "d_b": d_b},
                       M, "<=", q ** (n - d_b + b), certificate=certificate or {})


def check_bsymbol_singleton_code(code: LinearCode, b: int, d_b: int) -> BoundReport:
    return check_bsymbol_singleton(code.n, code.size, d_b, b, code.q, _cert(code))


def check_cyclic_full_length(code: LinearCode, b: int, d_b: int) -> BoundReport:
    """For cyclic codes and ``b >= k``: ``d_b = n``."""
    applicable = code.is_cyclic and b >= code.k
    reason = None if applicable else "needs a cyclic code and b >= k"
    return BoundReport("cyclic_db_equals_n", _params(code, b=b), d_b, "==", code.n,
                       applicable, reason, _cert(code))


def check_mds_relations(code: LinearCode, d_values, ghw_values) -> list[BoundReport]:
    """Consequences of the classical MDS property ``d_1 = n - k + 1``.

    ``d_values`` is ``(d_1, ..., d_k, ...)`` and ``ghw_values`` ``(∂_1, ..., ∂_k)``
    (may be ``None``).  Reports are inapplicable unless the code is MDS.
    """
    n, k = code.n, code.k
    d1 = d_values[0]
    is_mds = d1 == n - k + 1
    reason = None if is_mds else f"d_1={d1} != n-k+1={n - k + 1}"
    out = []
    for b in range(1, k + 1):
        out.append(BoundReport("mds_bsymbol_distance", _params(code, b=b), d_values[b - 1], "==",
                               d1 + b - 1, is_mds, reason, _cert(code)))
    if ghw_values is not None:
        for r in range(1, k + 1):
            out.append(BoundReport("mds_ghw", _params(code, r=r), ghw_values[r - 1], "==",
                                   d1 + r - 1, is_mds, reason, _cert(code)))
    return out


def check_generalized_griesmer(code: LinearCode, r: int, ghw) -> list[BoundReport]:
    """Both generalized Griesmer inequalities at ``r`` (``ghw`` is ``(∂_1, ..., ∂_k)``)."""
    q, n, k = code.q, code.n, code.k
    dr = ghw[r - 1]
    terms = [_ceil_div((q - 1) * dr, q**i * (q**r - 1)) for i in range(1, k - r + 1)]
    out = [BoundReport("generalized_griesmer", _params(code, r=r), n, ">=", dr + sum(terms),
                       certificate=_cert(code, ghw_r=dr, terms=terms))]
    if r >= 2:
        out.append(BoundReport("generalized_griesmer_ratio", _params(code, r=r),
                               (q**r - 1) * ghw[r - 2], "<=", (q**r - q) * dr,
                               certificate=_cert(code)))
    return out


def check_shu(code: LinearCode, b: int, d_b: int, weight_sum: int,
              independence: Independence) -> list[BoundReport]:
    """Weight-sum identity and the three bounds that follow from it.

    All four need every window of ``b`` consecutive positions to be
    independent; without that they are reported as inapplicable.
    """
    q, n, k = code.q, code.n, code.k
    if b > k:
        raise ValueError("needs b <= k")
    ok = bool(independence)
    reason = None if ok else f"b-consecutive independence fails: {independence.reason}"
    t, s = divmod(k, b)
    p = _params(code, b=b, t=t, s=s)
    cert = _cert(code, d_b=d_b)

    eq9 = BoundReport("weight_sum_identity", p, weight_sum, "==", n * q ** (k - b) * (q**b - 1),
                      ok, reason, cert)
    eq10_rhs = floor(Fraction((q**k - q ** (k - b)) * n, q**k - 1))
    eq10 = BoundReport("db_upper_average", p, d_b, "<=", eq10_rhs, ok, reason, cert)
    val = sum(Fraction(d_b, q ** (b * i)) for i in range(t))
    val += Fraction(d_b, q ** ((t - 1) * b)) * Fraction(q**s - 1, q**s) * Fraction(1, q**b - 1)
    eq11_rhs = ceil(val)
    closed = ceil(Fraction(d_b * (q**k - 1), q ** (k - b) * (q**b - 1)))
    if eq11_rhs != closed:
        raise AssertionError("length bound expansions disagree")
    eq11 = BoundReport("length_lower_tb_plus_s", p, n, ">=", eq11_rhs, ok, reason, cert)
    divides = s == 0
    eq12_rhs = ceil(sum(Fraction(d_b, q ** (b * i)) for i in range(t)))
    eq12 = BoundReport("length_lower_b_divides_k", p, n, ">=", eq12_rhs, ok and divides,
                       reason if not ok else (None if divides else f"b={b} does not divide k={k}"),
                       cert)
    return [eq9, eq10, eq11, eq12]


def lower_bounds_db(code: LinearCode, b: int, d_values) -> list[BoundReport]:
    """Lower bounds on ``d_b`` from ``d_{b-1}`` and from ``d_1``.

    ``d_values`` is ``(d_1, d_2, ...)`` reaching at least index ``b``.
    """
    q = code.q
    d_b = d_values[b - 1]
    d1 = d_values[0]
    p = _params(code, b=b)
    cert = _cert(code, d_b=d_b)
    out = []
    if b >= 2:
        prev = d_values[b - 2]
        out.append(BoundReport("db_ratio", p, (q**b - q) * d_b, ">=", (q**b - 1) * prev,
                               certificate=cert))
        out.append(BoundReport("db_ratio_ceil", p, d_b, ">=",
                               _ceil_div((q**b - 1) * prev, q**b - q), certificate=cert))
    ceil_of_sum = ceil(sum(Fraction(d1, q**i) for i in range(b)))
    sum_of_ceil = sum(_ceil_div(d1, q**i) for i in range(b))
    out.append(BoundReport("db_ceil_of_sum", p, d_b, ">=", ceil_of_sum, certificate=cert))
    out.append(BoundReport("db_sum_of_ceil", p, d_b, ">=", sum_of_ceil, certificate=cert))
    out.append(BoundReport("sum_of_ceil_dominates", p, sum_of_ceil, ">=", ceil_of_sum,
                           certificate=cert))
    return out


def check_upper_vs_lower(code: LinearCode, b: int, d1: int) -> BoundReport:
    """The averaging upper bound never falls below the per-term ceiling lower bound."""
    q, n, k = code.q, code.n, code.k
    upper = floor(Fraction((q**k - q ** (k - b)) * n, q**k - 1))
    lower = sum(_ceil_div(d1, q**i) for i in range(b))
    return BoundReport("upper_not_below_lower", _params(code, b=b), upper, ">=", lower,
                       certificate=_cert(code, d_1=d1))


def check_conjecture(code: LinearCode, b: int, d_b: int) -> BoundReport:
    """Conjectured b-symbol Griesmer bound ``n >= sum_{i<t} ceil(d_b / q^(b i))``, ``k = t b``."""
    q, n, k = code.q, code.n, code.k
    if b < 1:
        raise ValueError("b must be >= 1")
    if k % b:
        return BoundReport("bsymbol_griesmer_conjecture", _params(code, b=b), None, ">=", None,
                           False, f"b={b} does not divide k={k}", _cert(code, d_b=d_b))
    t = k // b
    terms = [_ceil_div(d_b, q ** (b * i)) for i in range(t)]
    cert = {"code": code.descriptor, "q": q, "n": n,
            "g": str(code.g) if code.is_cyclic else None,
            "k": k, "b": b, "t": t, "d_b": d_b, "terms": terms, "sum": sum(terms)}
    return BoundReport("bsymbol_griesmer_conjecture", _params(code, b=b, t=t), n, ">=",
                       sum(terms), certificate=cert)
