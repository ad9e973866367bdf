"""Row reduction and subspace enumeration over GF(q)."""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import FieldSpec


def rref(matrix, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over ``field``; returns ``(R, pivot_columns)``.

    Zero rows are dropped from ``R``.
    """
    M = np.array(matrix, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = M.shape
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = mul[inv[M[r, c]], M[r]]
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = add[M[i], mul[neg[M[i, c]], M[r]]]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(matrix, field: FieldSpec) -> int:
    M = np.asarray(matrix)
    if M.size == 0:
        return 0
    return len(rref(M, field)[1])


def prefix_ranks(rows, field: FieldSpec) -> list[int]:
    """Rank of ``rows[:j]`` for ``j = 1..len(rows)``, by incremental insertion."""
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    basis: list[tuple[int, np.ndarray]] = []
    out = []
    for row in rows:
        v = np.array(row, dtype=np.int64)
        for c, b in basis:
            if v[c]:
                v = add[v, mul[neg[v[c]], b]]
        nz = np.nonzero(v)[0]
        if nz.size:
            c = int(nz[0])
            v = mul[inv[v[c]], v]
            basis.append((c, v))
        out.append(len(basis))
    return out


def in_span(vector, basis_rref: np.ndarray, pivots: list[int], field: FieldSpec) -> bool:
    v = np.asarray(vector, dtype=np.int64)
    acc = np.zeros_like(v)
    for row, c in zip(basis_rref, pivots):
        if v[c]:
            acc = field.add_table[acc, field.mul_table[v[c], row]]
    return bool(np.array_equal(acc, v))


def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of ``r``-dimensional subspaces of GF(q)^k."""
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rref_row_index_sets(k: int, pivots: tuple[int, ...], q: int) -> list[np.ndarray]:
    """For an RREF pivot pattern, the message indices each basis row can take.

    A vector ``v`` in GF(q)^k is indexed by ``sum(v[i] * q**i)``.  Row ``j`` has
    a 1 at ``pivots[j]``, zeros left of it and at the other pivots, and free
    entries elsewhere.  Every RREF matrix with these pivots is one choice of an
    index from each returned array.
    """
    pset = set(pivots)
    out = []
    for p in pivots:
        free = [c for c in range(p + 1, k) if c not in pset]
        idx = np.array([q**p], dtype=np.int64)
        for c in free:
            idx = (idx[None, :] + np.arange(q, dtype=np.int64)[:, None] * q**c).ravel()
        out.append(np.sort(idx))
    return out


def iter_subspace_bases(k: int, r: int, field: FieldSpec):
    """Yield every ``r``-dimensional subspace of GF(q)^k once, as its RREF basis."""
    q = field.q
    for pivots in itertools.combinations(range(k), r):
        pset = set(pivots)
        slots = [(j, c) for j, p in enumerate(pivots) for c in range(p + 1, k) if c not in pset]
        for vals in itertools.product(range(q), repeat=len(slots)):
            B = np.zeros((r, k), dtype=np.int64)
            for j, p in enumerate(pivots):
                B[j, p] = 1
            for (j, c), v in zip(slots, vals):
                B[j, c] = v
            yield B


def span_elements(basis, field: FieldSpec) -> np.ndarray:
    """All ``q^r`` linear combinations of the rows of ``basis`` (with repeats if dependent)."""
    B = np.asarray(basis, dtype=np.int64)
    r, n = B.shape
    out = np.zeros((1, n), dtype=np.int64)
    for j in range(r):
        scaled = field.mul_table[np.arange(field.q)[:, None], B[j][None, :]]
        out = field.add_table[out[None, :, :], scaled[:, None, :]].reshape(-1, n)
    return out
