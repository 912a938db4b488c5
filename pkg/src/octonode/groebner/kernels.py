"""Compiled mod-p linear algebra for the F4 backend and exact rank computations."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def inv_mod(a, p):
    t, newt = 0, 1
    r, newr = p, a % p
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    if t < 0:
        t += p
    return t


@njit(cache=True)
def reduce_rows(ncols, piv_of_col, pptr, pcols, pvals, sptr, scols, svals, compact, ncompact, p):
    """Reduce sparse rows by monic pivot rows; keep only non-pivot columns.

    Pivot rows are monic with their pivot at their smallest column.  Columns
    are processed left to right, so a pivot row may itself contain other
    pivot columns further right.
    """
    ns = len(sptr) - 1
    out = np.zeros((ns, ncompact), dtype=np.int64)
    dense = np.zeros(ncols, dtype=np.int64)
    for r in range(ns):
        lo = ncols
        for k in range(sptr[r], sptr[r + 1]):
            c = scols[k]
            dense[c] = svals[k]
            if c < lo:
                lo = c
        for c in range(lo, ncols):
            v = dense[c]
            if v != 0:
                dense[c] = 0
                pr = piv_of_col[c]
                if pr >= 0:
                    f = p - v
                    for k in range(pptr[pr] + 1, pptr[pr + 1]):
                        cc = pcols[k]
                        dense[cc] = (dense[cc] + f * pvals[k]) % p
                else:
                    out[r, compact[c]] = v
    return out


@njit(cache=True)
def rref(M, p):
    """Reduced row echelon form in place; returns (rank, pivot columns)."""
    rows, cols = M.shape
    pivcols = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        inv = inv_mod(M[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                M[r, j] = M[r, j] * inv % p
        for i in range(rows):
            if i != r:
                v = M[i, c]
                if v != 0:
                    f = p - v
                    for j in range(c, cols):
                        M[i, j] = (M[i, j] + f * M[r, j]) % p
        pivcols[r] = c
        r += 1
    return r, pivcols[:r]


def rank_mod_p(M: np.ndarray, p: int) -> int:
    A = np.ascontiguousarray(np.asarray(M, dtype=np.int64) % p)
    if A.size == 0:
        return 0
    r, _ = rref(A, p)
    return int(r)
