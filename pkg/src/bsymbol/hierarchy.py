"""Code-level minima: b-symbol distances and generalized Hamming weights."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import MAX_CODEWORDS, MAX_SUBSPACES, BudgetExceeded, LinearCode
from .linalg import gaussian_binomial, rref_row_index_sets, span_elements
from .metrics import run_census_batch, support_masks, w_b_batch, weight_profile


def _cache(code: LinearCode) -> dict:
    return code.__dict__.setdefault("_derived", {})


def orbit_representatives(words: np.ndarray, q: int, scale: bool = False) -> np.ndarray:
    """Indices of one word per cyclic-shift orbit (optionally also per scalar multiple).

    The representative is the word whose base-q integer value is smallest in
    its orbit.  Requires ``q^n < 2^62``.
    """
    words = np.asarray(words, dtype=np.int64)
    N, n = words.shape
    if q**n >= 2**62:
        raise ValueError("orbit keys overflow for this (q, n)")
    weights = q ** np.arange(n, dtype=np.int64)
    own = words @ weights
    best = own.copy()
    rotated = words
    for _ in range(1, n):
        rotated = np.roll(rotated, 1, axis=1)
        np.minimum(best, rotated @ weights, out=best)
    if scale:
        from .algebra import field_of_size

        mul = field_of_size(q).mul_table
        for s in range(2, q):
            scaled = mul[s, words]
            rotated = scaled
            np.minimum(best, rotated @ weights, out=best)
            for _ in range(1, n):
                rotated = np.roll(rotated, 1, axis=1)
                np.minimum(best, rotated @ weights, out=best)
    return np.flatnonzero(own == best)


def b_symbol_profile(code: LinearCode, max_codewords: int = MAX_CODEWORDS) -> tuple[int, ...]:
    """``(d_1, ..., d_n)`` by exhaustive enumeration of nonzero codewords."""
    cache = _cache(code)
    if "profile" not in cache:
        words = code.codewords(max_codewords)[1:]
        cache["profile"] = tuple(int(v) for v in weight_profile(words).min(axis=0))
    return cache["profile"]


def min_b_symbol_distance(
    code: LinearCode,
    b: int,
    orbit_reduce: bool = False,
    max_codewords: int = MAX_CODEWORDS,
) -> int:
    """Minimum ``w_b`` over nonzero codewords.

    With ``orbit_reduce`` (cyclic codes only) one codeword per cyclic-shift
    orbit is examined.
    """
    if not 1 <= b <= code.n:
        raise ValueError(f"b={b} outside 1..{code.n}")
    words = code.codewords(max_codewords)[1:]
    if orbit_reduce:
        if not code.is_cyclic:
            raise ValueError("orbit reduction needs a cyclic code")
        words = words[orbit_representatives(words, code.q)]
    return int(w_b_batch(words, b).min())


def code_theta(code: LinearCode, max_codewords: int = MAX_CODEWORDS) -> int:
    """Longest circular zero run over nonzero codewords."""
    cache = _cache(code)
    if "theta" not in cache:
        words = code.codewords(max_codewords)[1:]
        census = run_census_batch(words)
        present = np.flatnonzero(census.sum(axis=0))
        cache["theta"] = int(present.max()) if present.size else 0
    return cache["theta"]


@dataclass(frozen=True)
class Hierarchy:
    kind: str
    n: int
    k: int
    theta: int | None
    values: tuple[int, ...]
    notes: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "k": self.k, "theta": self.theta,
               "values": list(self.values)}
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def check_bsymbol_shape(values, n: int, theta: int) -> bool:
    """``0 < d_1 < ... < d_theta < d_{theta+1} = ... = d_n = n`` on ``values = (d_1, ..., d_n)``."""
    v = list(values)
    if len(v) != n or v[0] <= 0:
        return False
    head = v[: theta + 1]
    if any(a >= b for a, b in zip(head, head[1:])):
        return False
    return all(x == n for x in v[theta:])


def b_symbol_hierarchy(code: LinearCode, full: bool = False,
                       max_codewords: int = MAX_CODEWORDS) -> Hierarchy:
    """The b-symbol weight hierarchy.

    Cyclic codes report ``b = 1..k`` unless ``full``; values for ``b > k``
    are always ``n`` for them.  Other codes report ``b = 1..n``.
    """
    profile = b_symbol_profile(code, max_codewords)
    theta = code_theta(code, max_codewords)
    if not check_bsymbol_shape(profile, code.n, theta):
        raise AssertionError(f"hierarchy {profile} has the wrong shape for theta={theta}")
    notes = {}
    if code.is_cyclic and not full:
        values = profile[: code.k]
    else:
        values = profile
        if code.is_cyclic and code.k < code.n:
            notes["forced_to_n_from_b"] = code.k + 1
    return Hierarchy("b-symbol", code.n, code.k, theta, tuple(values), notes)


# ----------------------------------------------------------------------------
# Generalized Hamming weights


def _check_r(code: LinearCode, r: int) -> None:
    if not 1 <= r <= code.k:
        raise ValueError(f"r={r} outside 1..{code.k}")


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a.astype(np.uint64)).astype(np.int64)


def subcode_budget(code: LinearCode, r: int, cap: int) -> int:
    """Number of ``r``-dimensional subcodes; raises if it exceeds ``cap``."""
    count = gaussian_binomial(code.k, r, code.q)
    if count > cap:
        raise BudgetExceeded(f"{r}-dim subspaces of {code!r}", count, cap)
    return count


def ghw_subcode(code: LinearCode, r: int, max_subspaces: int = MAX_SUBSPACES,
                max_codewords: int = MAX_CODEWORDS) -> int:
    """Smallest support of an ``r``-dimensional subcode.

    Subcodes are enumerated as RREF ``r x k`` message matrices, one pivot
    pattern at a time.  The support of a subcode is the union of the supports
    of its basis rows, so for a fixed pivot pattern only the distinct support
    masks of each row's candidates matter; unions already as large as the best
    subcode found so far are discarded.
    """
    _check_r(code, r)
    subcode_budget(code, r, max_subspaces)
    k, q = code.k, code.q
    masks = support_masks(code.codewords(max_codewords))
    # upper bound from subcodes spanned by r rows of G
    best = code.n + 1
    for rows in itertools.combinations(range(k), r):
        u = np.bitwise_or.reduce(masks[[q**i for i in rows]])
        best = min(best, int(_popcount(np.array([u]))[0]))
    for pivots in itertools.combinations(range(k), r):
        row_sets = []
        for idx in rref_row_index_sets(k, pivots, q):
            u = np.unique(masks[idx])
            row_sets.append(u[_popcount(u) < best])
        row_sets.sort(key=len)
        partial = np.zeros(1, dtype=np.int64)
        for u in row_sets:
            if partial.size == 0 or u.size == 0:
                partial = partial[:0]
                break
            partial = np.unique((partial[:, None] | u[None, :]).ravel())
            partial = partial[_popcount(partial) < best]
        if partial.size:
            best = int(_popcount(partial).min())
    return best


def _flat_maxima(code: LinearCode) -> list[int]:
    """``out[l]``: most columns of G lying in one subspace of dimension ``<= l``.

    A subspace holding ``m`` columns contains the span of those columns, so
    the maximum is reached on column-spanned subspaces (flats).  Flats are
    grown one rank at a time: reducing every column against the flat's RREF
    basis, columns whose residuals are proportional extend it to the same
    child flat.
    """
    cache = _cache(code)
    if "flats" in cache:
        return cache["flats"]
    field = code.field
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    q = field.q
    cols = code.G.T.copy()  # n x k
    n, k = cols.shape
    weights = q ** np.arange(k, dtype=np.int64)

    def residuals(basis, pivots):
        res = cols
        for row, c in zip(basis, pivots):
            res = add[res, mul[neg[res[:, c]][:, None], row[None, :]]]
        return res

    zero = frozenset(np.flatnonzero(~cols.any(axis=1)).tolist())
    level = {zero: (np.zeros((0, k), dtype=np.int64), ())}
    out = [len(zero)]
    for _ in range(k):
        nxt: dict = {}
        for flat, (basis, pivots) in level.items():
            res = residuals(basis, pivots)
            live = np.flatnonzero(res.any(axis=1))
            if live.size == 0:
                continue
            R = res[live]
            lead_col = np.argmax(R != 0, axis=1)
            lead = R[np.arange(live.size), lead_col]
            normed = mul[inv[lead][:, None], R]
            keys = normed @ weights
            for key in np.unique(keys):
                members = live[keys == key]
                child = flat | frozenset(members.tolist())
                if child in nxt:
                    continue
                r = normed[np.flatnonzero(keys == key)[0]]
                c = int(np.argmax(r != 0))
                B = add[basis, mul[neg[basis[:, c]][:, None], r[None, :]]] if len(basis) else basis
                nxt[child] = (np.vstack([B, r]), pivots + (c,))
        level = nxt
        out.append(max(out[-1], max((len(f) for f in level), default=0)))
    cache["flats"] = out
    return out


def ghw_column(code: LinearCode, r: int, max_subspaces: int = MAX_SUBSPACES) -> int:
    """``n - max m(U)`` over ``(k - r)``-dimensional subspaces ``U`` of the message space.

    ``m(U)`` counts the generator-matrix columns lying in ``U``.
    """
    _check_r(code, r)
    count = gaussian_binomial(code.k, code.k - r, code.q)
    if count > max_subspaces:
        raise BudgetExceeded(f"{code.k - r}-dim message subspaces of {code!r}", count, max_subspaces)
    return code.n - _flat_maxima(code)[code.k - r]


def generalized_hierarchy(code: LinearCode, method: str = "subcode",
                          max_subspaces: int = MAX_SUBSPACES) -> Hierarchy:
    """``(∂_1, ..., ∂_k)`` by ``method`` in {"subcode", "column", "both"}.

    "both" runs the two algorithms and raises if they disagree.
    """
    if method not in ("subcode", "column", "both"):
        raise ValueError(f"unknown method {method!r}")
    for r in range(1, code.k + 1):
        subcode_budget(code, r, max_subspaces)
    cache = _cache(code)
    values = []
    for r in range(1, code.k + 1):
        key = ("ghw", r, method)
        if key not in cache:
            if method == "subcode":
                cache[key] = ghw_subcode(code, r, max_subspaces)
            elif method == "column":
                cache[key] = ghw_column(code, r, max_subspaces)
            else:
                a = ghw_subcode(code, r, max_subspaces)
                b = ghw_column(code, r, max_subspaces)
                if a != b:
                    raise AssertionError(f"GHW disagreement at r={r}: subcode {a}, column {b}")
                cache[key] = a
        values.append(cache[key])
    if any(a >= b for a, b in zip(values, values[1:])):
        raise AssertionError(f"generalized hierarchy {values} is not strictly increasing")
    return Hierarchy("generalized", code.n, code.k, None, tuple(values))


def subcode_support(code: LinearCode, basis) -> int:
    """Support size of the subcode spanned by ``basis`` (rows are message vectors)."""
    rows = np.asarray(basis, dtype=np.int64)
    gens = np.stack([code.encode(m) for m in rows])
    return int(np.count_nonzero(gens.any(axis=0)))


def averaged_support(code: LinearCode, basis) -> int:
    """Support size computed as the scaled total weight over every element of the subcode."""
    rows = np.asarray(basis, dtype=np.int64)
    r = rows.shape[0]
    gens = np.stack([code.encode(m) for m in rows])
    total = int(np.count_nonzero(span_elements(gens, code.field)))
    q = code.q
    value, rem = divmod(total, q ** (r - 1) * (q - 1))
    if rem:
        raise ArithmeticError("subcode weight total is not a multiple of q^(r-1)(q-1)")
    return value

