"""Row reduction and related linear algebra over GF(q) symbol matrices.

Matrices hold code symbols (see ``Subfield``); all arithmetic is table lookup.
"""

from __future__ import annotations

import numpy as np

from .algebra import Subfield


def rref(A, sub: Subfield) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = np.array(A, dtype=np.int64, copy=True)
    if M.ndim != 2 or M.shape[0] == 0:
        return M.reshape(0, M.shape[-1] if M.ndim == 2 else 0), []
    add, mul, neg, inv = sub.add, sub.mul, sub.neg, sub.inv
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mul[inv[M[r, c]], M[r]]
        others = np.nonzero(M[:, c])[0]
        others = others[others != r]
        if others.size:
            f = neg[M[others, c]]
            M[others] = add[M[others], mul[f[:, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A, sub: Subfield) -> int:
    return len(rref(A, sub)[1])


def nullspace(A, sub: Subfield) -> np.ndarray:
    """Basis (rows) of {x : A x^T = 0}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, pivots = rref(A, sub)
    free = [j for j in range(n) if j not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, j in enumerate(free):
        out[t, j] = 1
        for i, pc in enumerate(pivots):
            out[t, pc] = sub.neg[R[i, j]]
    return out


def matmul(A, B, sub: Subfield) -> np.ndarray:
    """A @ B over GF(q)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = sub.add[out, sub.mul[A[:, t][:, None], B[t][None, :]]]
    return out


def vecmat(v, G, sub: Subfield) -> np.ndarray:
    return matmul(np.asarray(v, dtype=np.int64)[None, :], G, sub)[0]


def row_space_equal(A, B, sub: Subfield) -> bool:
    Ra, _ = rref(A, sub)
    Rb, _ = rref(B, sub)
    return Ra.shape == Rb.shape and bool(np.array_equal(Ra, Rb))


def in_row_space(R: np.ndarray, pivots: list[int], v, sub: Subfield) -> bool:
    """Membership of v in the row space of the RREF matrix R."""
    v = np.array(v, dtype=np.int64, copy=True)
    for i, c in enumerate(pivots):
        if v[c]:
            v = sub.add[v, sub.mul[sub.neg[v[c]], R[i]]]
    return not v.any()
