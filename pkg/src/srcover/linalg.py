"""Linear algebra over finite fields and breadth-first search on Cayley graphs.

Vectors over GF(p^k) are packed into integers, one base-p digit per GF(p)
coordinate, so vector addition is carry-free digitwise addition (XOR for p = 2).
"""

from __future__ import annotations

import numpy as np

from .galois import FieldSpec, digit_add

__all__ = [
    "GuardError",
    "rref",
    "rank",
    "nullspace",
    "pack",
    "unpack",
    "cayley_bfs",
]


class GuardError(RuntimeError):
    """A desk-scale size guard refused the computation."""


def rref(M, field: FieldSpec):
    """Reduced row echelon form over ``field``; returns (matrix, pivot columns)."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    add, mul, inv, neg = field.add_table, field.mul_table, field.inv_table, field.neg_table
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, c]], A[r]]
        for i in range(nrows):
            if i != r and A[i, c]:
                A[i] = add[A[i], mul[neg[A[i, c]], A[r]]]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, field: FieldSpec) -> int:
    return len(rref(M, field)[1])


def nullspace(M, field: FieldSpec) -> np.ndarray:
    """Rows spanning {x : M x = 0}; i.e. a parity-check matrix for the row space of M."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(M, field)
    free = [c for c in range(ncols) if c not in pivots]
    neg = field.neg_table
    H = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        H[i, f] = 1
        for row, pc in enumerate(pivots):
            H[i, pc] = neg[R[row, f]]
    return H


def pack(vectors, q: int) -> np.ndarray:
    """Pack rows of GF(q) element codes into integers (entry j has weight q^j)."""
    V = np.asarray(vectors, dtype=np.int64)
    if V.ndim == 1:
        V = V[None, :]
    weights = q ** np.arange(V.shape[1], dtype=np.int64)
    return V @ weights


def unpack(codes, q: int, length: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty(codes.shape + (length,), dtype=np.int64)
    rest = codes.copy()
    for j in range(length):
        out[..., j] = rest % q
        rest //= q
    return out


def cayley_bfs(size: int, p: int, ndigits: int, sources, gens, track: bool = False, chunk: int = 1 << 20):
    """Distances from ``sources`` in the Cayley graph on packed GF(p)-vectors.

    Vertices are the integers ``0..size-1`` (``size = p**ndigits``); ``x`` is adjacent to
    ``x + g`` for every ``g`` in ``gens``.  Returns the int16 distance array and, with
    ``track``, the generator index used to reach each vertex (-1 at sources).
    """
    if size > 1 << 28:
        raise GuardError(f"Cayley graph with {size} vertices exceeds 2^28")
    dist = np.full(size, -1, dtype=np.int16)
    via = np.full(size, -1, dtype=np.int32) if track else None
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    gens = np.asarray(gens, dtype=np.int64)
    dist[frontier] = 0
    level = 0
    step = max(1, chunk // max(1, len(gens)))
    while frontier.size:
        level += 1
        nxt = []
        for start in range(0, frontier.size, step):
            f = frontier[start : start + step]
            nb = digit_add(f[:, None], gens[None, :], p, ndigits)
            fresh = dist[nb] < 0
            if not fresh.any():
                continue
            idx = nb[fresh]
            if track:
                gidx = np.broadcast_to(np.arange(len(gens), dtype=np.int32), nb.shape)[fresh]
                idx, first = np.unique(idx, return_index=True)
                via[idx] = gidx[first]
            else:
                idx = np.unique(idx)
            dist[idx] = level
            nxt.append(idx)
        frontier = np.unique(np.concatenate(nxt)) if nxt else np.empty(0, dtype=np.int64)
    return (dist, via) if track else dist
