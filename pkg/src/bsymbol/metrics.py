"""Vector-level b-symbol machinery.

Words are length-``n`` sequences of field element codes, read cyclically.
Three routes to the b-symbol weight are provided (window count, zero-run
census, span average) plus the b-symbol support; they are kept independent
so each can check the others.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import FieldSpec
from .linalg import rank, span_elements


def _as_word(x) -> np.ndarray:
    w = np.asarray(x, dtype=np.int64)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("a word must be a non-empty 1-d sequence")
    return w


def _check_b(b: int, n: int) -> None:
    if not 1 <= b <= n:
        raise ValueError(f"b={b} outside 1..{n}")


def pi_b(x, b: int) -> list[tuple[int, ...]]:
    """The ``n`` cyclic b-tuples ``(x_i, ..., x_{i+b-1})``."""
    w = _as_word(x)
    n = w.size
    _check_b(b, n)
    return [tuple(int(w[(i + j) % n]) for j in range(b)) for i in range(n)]


def w_b_direct(x, b: int) -> int:
    """Number of nonzero b-tuples in ``pi_b(x)``."""
    return sum(1 for t in pi_b(x, b) if any(t))


def hamming_weight(x) -> int:
    return int(np.count_nonzero(_as_word(x)))


@dataclass(frozen=True)
class RunDistribution:
    """Census of maximal circular zero runs: ``counts[i]`` runs of length ``i``."""

    n: int
    counts: dict[int, int] = dc_field(default_factory=dict)
    all_zero: bool = False

    def __getitem__(self, i: int) -> int:
        return self.counts.get(i, 0)

    def as_list(self) -> list[int]:
        """``[Psi(0_1), ..., Psi(0_n)]``."""
        return [self[i] for i in range(1, self.n + 1)]


def run_distribution(x) -> RunDistribution:
    w = _as_word(x)
    n = w.size
    nz = np.flatnonzero(w)
    if nz.size == 0:
        return RunDistribution(n, {}, all_zero=True)
    counts: dict[int, int] = {}
    # gaps between cyclically consecutive nonzero positions
    nxt = np.roll(nz, -1)
    gaps = (nxt - nz - 1) % n
    if nz.size == 1:
        gaps = np.array([n - 1])
    for g in gaps:
        if g > 0:
            counts[int(g)] = counts.get(int(g), 0) + 1
    return RunDistribution(n, dict(sorted(counts.items())))


def w_b_from_runs(d: RunDistribution, b: int) -> int:
    """``n - sum_{i=b}^{n-1} (i - b + 1) Psi(0_i)``; zero for the zero word."""
    _check_b(b, d.n)
    if d.all_zero:
        return 0
    return d.n - sum((i - b + 1) * c for i, c in d.counts.items() if b <= i <= d.n - 1)


def b_support(x, b: int) -> frozenset[int]:
    """Union of the supports of ``x`` and its first ``b - 1`` left shifts."""
    w = _as_word(x)
    n = w.size
    _check_b(b, n)
    supp = np.flatnonzero(w)
    shifted = (supp[:, None] - np.arange(b)[None, :]) % n
    return frozenset(np.unique(shifted).tolist())


@dataclass(frozen=True)
class ShiftMatrix:
    b: int
    rows: np.ndarray
    rank: int


def shift_matrix(c, b: int, field: FieldSpec) -> ShiftMatrix:
    """``G_b(c)``: the word and its first ``b - 1`` left shifts, with rank over ``field``."""
    w = _as_word(c)
    _check_b(b, w.size)
    rows = np.stack([np.roll(w, -j) for j in range(b)])
    return ShiftMatrix(b, rows, rank(rows, field))


def w_b_via_span(c, b: int, field: FieldSpec) -> int:
    """Average Hamming weight over all ``q^b`` combinations of the rows of ``G_b(c)``.

    The combinations form a multiset (repeats when the shifts are dependent);
    every one of them is enumerated.
    """
    sm = shift_matrix(c, b, field)
    combos = span_elements(sm.rows, field)
    total = int(np.count_nonzero(combos))
    q = field.q
    denom = q ** (b - 1) * (q - 1)
    value, rem = divmod(total, denom)
    if rem:
        raise ArithmeticError(f"span weight sum {total} not divisible by {denom}")
    return value


def span_multiset(c, b: int, field: FieldSpec) -> list[tuple[int, ...]]:
    """``V_b(c)`` as a list of tuples (multiset, coefficient order)."""
    sm = shift_matrix(c, b, field)
    return [tuple(int(v) for v in row) for row in span_elements(sm.rows, field)]


def max_zero_run(x) -> int:
    d = run_distribution(x)
    if d.all_zero:
        return d.n
    return max(d.counts, default=0)


# ----------------------------------------------------------------------------
# Batched versions over an (N, n) array of words.


def window_zero_masks(words: np.ndarray):
    """Yield, for ``b = 1..n``, the (N, n) mask of all-zero b-windows."""
    Z = np.asarray(words) == 0
    acc = Z.copy()
    n = Z.shape[1]
    yield acc
    for j in range(1, n):
        acc = acc & np.roll(Z, -j, axis=1)
        yield acc


def weight_profile(words: np.ndarray) -> np.ndarray:
    """(N, n) array whose column ``b - 1`` holds ``w_b`` of each word."""
    words = np.asarray(words)
    N, n = words.shape
    out = np.empty((N, n), dtype=np.int64)
    for b, mask in enumerate(window_zero_masks(words), start=1):
        out[:, b - 1] = n - mask.sum(axis=1)
    return out


def w_b_batch(words: np.ndarray, b: int) -> np.ndarray:
    words = np.asarray(words)
    n = words.shape[1]
    _check_b(b, n)
    Z = words == 0
    acc = Z.copy()
    for j in range(1, b):
        acc &= np.roll(Z, -j, axis=1)
    return n - acc.sum(axis=1)


def run_census_batch(words: np.ndarray) -> np.ndarray:
    """(N, n+1) array; entry ``[w, i]`` is the number of maximal zero runs of length ``i``.

    Rows of all-zero words are left empty; see :func:`all_zero_rows`.
    """
    words = np.asarray(words)
    N, n = words.shape
    out = np.zeros((N, n + 1), dtype=np.int64)
    rows, cols = np.nonzero(words)
    if rows.size == 0:
        return out
    nxt = np.empty_like(cols)
    nxt[:-1] = cols[1:]
    last_in_row = np.ones(rows.size, dtype=bool)
    last_in_row[:-1] = rows[1:] != rows[:-1]
    first_in_row = np.ones(rows.size, dtype=bool)
    first_in_row[1:] = rows[1:] != rows[:-1]
    # wrap: the last nonzero of a row is followed by the row's first nonzero
    nxt[last_in_row] = cols[first_in_row] + n
    gaps = nxt - cols - 1
    keep = gaps > 0
    np.add.at(out, (rows[keep], gaps[keep]), 1)
    return out


def b_support_sizes(words: np.ndarray, b: int) -> np.ndarray:
    """``|I_b|`` of each word: size of the union of its support and ``b - 1`` shifted supports."""
    words = np.asarray(words)
    n = words.shape[1]
    _check_b(b, n)
    supp = words != 0
    union = supp.copy()
    for j in range(1, b):
        union |= np.roll(supp, -j, axis=1)
    return union.sum(axis=1)


def all_zero_rows(words: np.ndarray) -> np.ndarray:
    return ~np.any(np.asarray(words) != 0, axis=1)


def w_b_from_census(census: np.ndarray, b: int, zero_rows: np.ndarray) -> np.ndarray:
    N, n1 = census.shape
    n = n1 - 1
    i = np.arange(n + 1)
    weights = np.where((i >= b) & (i <= n - 1), i - b + 1, 0)
    out = n - census @ weights
    return np.where(zero_rows, 0, out)


def support_masks(words: np.ndarray) -> np.ndarray:
    """Bit ``i`` set iff coordinate ``i`` is nonzero; requires ``n <= 62``."""
    words = np.asarray(words)
    n = words.shape[1]
    if n > 62:
        raise ValueError("support masks need n <= 62")
    bits = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    return ((words != 0).astype(np.int64) * bits).sum(axis=1)


def span_weight_sums(words: np.ndarray, b: int, field: FieldSpec) -> np.ndarray:
    """Per word, the total Hamming weight of all ``q^b`` combinations of its shifts.

    Evaluates every coefficient tuple at every coordinate.  Coordinates are
    grouped by their window ``(x_i, ..., x_{i+b-1})`` so each distinct window
    is evaluated against the ``q^b`` tuples once.
    """
    words = np.asarray(words, dtype=np.int64)
    N, n = words.shape
    _check_b(b, n)
    q = field.q
    codes = np.zeros((N, n), dtype=np.int64)
    for j in range(b):
        codes += np.roll(words, -j, axis=1) * q**j
    uniq, inverse = np.unique(codes, return_inverse=True)
    U = np.stack([(uniq // q**j) % q for j in range(b)], axis=1)
    tuples = np.array(list(itertools.product(range(q), repeat=b)), dtype=np.int64)
    nonzero_count = np.zeros(uniq.size, dtype=np.int64)
    add, mul = field.add_table, field.mul_table
    step = max(1, (1 << 22) // max(uniq.size, 1))
    for s in range(0, tuples.shape[0], step):
        A = tuples[s : s + step]
        acc = np.zeros((A.shape[0], uniq.size), dtype=np.int64)
        for j in range(b):
            acc = add[acc, mul[A[:, j, None], U[None, :, j]]]
        nonzero_count += np.count_nonzero(acc, axis=0)
    return nonzero_count[inverse.reshape(N, n)].sum(axis=1)


def span_work(words: np.ndarray, b: int, q: int) -> int:
    """Upper estimate of table lookups :func:`span_weight_sums` performs."""
    N, n = np.asarray(words).shape
    return q**b * min(q**b, N * n) * b


def span_weight_profile(words: np.ndarray, field: FieldSpec, b_max: int | None = None) -> np.ndarray:
    """Column ``b - 1``: same totals as :func:`span_weight_sums`, for ``b = 1..b_max``.

    The ``q^b`` coefficient tuples are not listed.  For every coordinate the
    number of tuples ``a`` with ``sum_j a_j x_{i+j} = 0`` is counted by
    convolving the value distribution one window position at a time; the
    window for ``b + 1`` extends the one for ``b``, so a single pass serves
    every ``b``.
    """
    words = np.asarray(words, dtype=np.int64)
    N, n = words.shape
    b_max = n if b_max is None else b_max
    _check_b(b_max, n)
    q = field.q
    if q**b_max >= 2**62:
        raise ValueError("tuple counts overflow for this (q, b)")
    sub, mul = field.sub_table, field.mul_table
    rows = np.arange(N * n)[:, None]
    targets = np.arange(q)[None, :]
    dist = np.zeros((N * n, q), dtype=np.int64)
    dist[:, 0] = 1
    out = np.empty((N, b_max), dtype=np.int64)
    for j in range(b_max):
        u = np.roll(words, -j, axis=1).ravel()
        nxt = np.zeros_like(dist)
        for a in range(q):
            # value t is reached from t - a*u
            nxt += dist[rows, sub[targets, mul[a, u][:, None]]]
        dist = nxt
        out[:, j] = (q ** (j + 1) - dist[:, 0]).reshape(N, n).sum(axis=1)
    return out
