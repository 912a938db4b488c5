"""F4-style Groebner bases over prime fields.

Polynomials are packed into int64 monomial codes (exponent fields of
``63 // n`` bits, so monomial multiplication is integer addition) plus an
int64 coefficient vector sorted by the monomial order.  Each round takes all
critical pairs of minimal sugar degree, closes the rows under symbolic
preprocessing and reduces them with the compiled kernels in
:mod:`octonode.groebner.kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.monomial import MonomialOrder
from ..core.polynomial import Polynomial, Ring
from ..errors import ResourceLimitExceeded
from .kernels import reduce_rows, rref
from .pairs import PairSet

_CHUNK = 2048


@dataclass
class Packing:
    n: int

    def __post_init__(self):
        self.bits = max(1, 63 // max(self.n, 1))
        self.limit = (1 << self.bits) - 1
        self.shifts = np.array([self.bits * (self.n - 1 - i) for i in range(self.n)], dtype=np.int64)
        self.mask = np.int64(self.limit)

    def pack(self, exps: np.ndarray) -> np.ndarray:
        exps = np.asarray(exps, dtype=np.int64)
        if exps.ndim == 1:
            return np.int64((exps << self.shifts).sum()) if self.n else np.int64(0)
        if self.n == 0:
            return np.zeros(len(exps), dtype=np.int64)
        return (exps << self.shifts).sum(axis=1)

    def unpack(self, packed: np.ndarray) -> np.ndarray:
        packed = np.asarray(packed, dtype=np.int64)
        return (packed[:, None] >> self.shifts) & self.mask


def order_permutation(exps: np.ndarray, omat: np.ndarray) -> np.ndarray:
    """Indices sorting the rows of ``exps`` from largest to smallest monomial."""
    if len(exps) == 0:
        return np.zeros(0, dtype=np.int64)
    keys = exps @ omat.T
    asc = np.lexsort(keys.T[::-1])
    return asc[::-1]


class F4Basis:
    """Growing list of monic polynomials in packed form."""

    def __init__(self, n: int, p: int, order: MonomialOrder, weights=None):
        self.n = n
        self.p = p
        self.order = order
        self.omat = order.matrix(n)
        self.pk = Packing(n)
        self.w = np.asarray(weights if weights is not None else [1] * n, dtype=np.int64)
        self.mons: list[np.ndarray] = []
        self.coefs: list[np.ndarray] = []
        self.lms = np.zeros((0, n), dtype=np.int64)
        self.maxexp = np.zeros((0, n), dtype=np.int64)
        self.nterms = np.zeros(0, dtype=np.int64)
        self.sugar = np.zeros(0, dtype=np.int64)
        self.active = np.zeros(0, dtype=bool)

    def __len__(self) -> int:
        return len(self.mons)

    def append(self, mons: np.ndarray, coefs: np.ndarray, sugar: int) -> int:
        exps = self.pk.unpack(mons)
        self.mons.append(mons)
        self.coefs.append(coefs)
        self.lms = np.vstack([self.lms, exps[:1]])
        self.maxexp = np.vstack([self.maxexp, exps.max(axis=0)[None, :]])
        self.nterms = np.append(self.nterms, len(mons))
        self.sugar = np.append(self.sugar, sugar)
        self.active = np.append(self.active, False)
        return len(self.mons) - 1

    # conversion ---------------------------------------------------------------
    def from_polynomial(self, f: Polynomial) -> tuple[np.ndarray, np.ndarray]:
        exps = np.array(list(f.terms.keys()), dtype=np.int64).reshape(len(f.terms), self.n)
        coefs = np.array([int(c) for c in f.terms.values()], dtype=np.int64)
        perm = order_permutation(exps, self.omat)
        return self.pk.pack(exps[perm]), coefs[perm]

    def to_polynomial(self, ring: Ring, mons: np.ndarray, coefs: np.ndarray) -> Polynomial:
        exps = self.pk.unpack(mons)
        terms = {tuple(int(x) for x in e): int(c) for e, c in zip(exps, coefs)}
        return Polynomial(ring, terms, _clean=True)

    # core linear algebra ----------------------------------------------------
    def _find_reducers(self, exps: np.ndarray, cand: np.ndarray) -> np.ndarray:
        """For each monomial, index of an active basis element dividing it, or -1."""
        out = np.full(len(exps), -1, dtype=np.int64)
        if len(cand) == 0:
            return out
        L = self.lms[cand]
        score_base = self.nterms[cand]
        big = np.iinfo(np.int64).max
        for s in range(0, len(exps), _CHUNK):
            e = exps[s:s + _CHUNK]
            D = np.all(e[:, None, :] >= L[None, :, :], axis=2)
            has = D.any(axis=1)
            score = np.where(D, score_base[None, :], big)
            best = np.argmin(score, axis=1)
            out[s:s + _CHUNK] = np.where(has, cand[best], -1)
        return out

    def _row_monos(self, g: int, mult: np.ndarray) -> np.ndarray:
        return self.mons[g] + self.pk.pack(mult)

    def reduce(self, rows: list[tuple[int, np.ndarray]], extra: list[tuple[np.ndarray, np.ndarray]],
               done_init: np.ndarray | None = None, echelon: bool = True):
        """Symbolic preprocessing, reduction by pivots, then echelon form of the rest.

        ``rows`` are products ``mult * basis[g]``; ``extra`` are raw rows
        (packed monomials, coefficients).  Returns ``(mons, coefs)`` pairs for
        the nonzero reduced non-pivot rows (echelonized when ``echelon``, else
        one output per input S-row in the same order, possibly empty).
        """
        p = self.p
        cand = np.nonzero(self.active)[0]
        row_g: list[int] = []
        row_mult: list[np.ndarray] = []
        row_mons: list[np.ndarray] = []
        row_coefs: list[np.ndarray] = []
        for g, m in rows:
            if np.any(self.maxexp[g] + m > self.pk.limit):
                raise ResourceLimitExceeded("exponent overflow in packed monomials")
            row_g.append(g)
            row_mult.append(m)
            row_mons.append(self._row_monos(g, m))
            row_coefs.append(self.coefs[g])
        n_prod = len(row_mons)
        for mons, coefs in extra:
            row_g.append(-1)
            row_mult.append(None)
            row_mons.append(mons)
            row_coefs.append(coefs)
        n_input = len(row_mons)
        if n_input == 0:
            return []
        # leading monomials of product rows are covered by the rows themselves
        leads = np.array([m[0] for m in row_mons[:n_prod] if len(m)], dtype=np.int64)
        done = np.unique(leads) if done_init is None else np.union1d(np.unique(leads), done_init)
        frontier = np.unique(np.concatenate(row_mons)) if row_mons else np.zeros(0, np.int64)
        while True:
            new = np.setdiff1d(frontier, done, assume_unique=True)
            if len(new) == 0:
                break
            done = np.union1d(done, new)
            exps = self.pk.unpack(new)
            red = self._find_reducers(exps, cand)
            hit = np.nonzero(red >= 0)[0]
            if len(hit) == 0:
                break
            fresh = []
            for k in hit:
                g = int(red[k])
                m = exps[k] - self.lms[g]
                if np.any(self.maxexp[g] + m > self.pk.limit):
                    raise ResourceLimitExceeded("exponent overflow in packed monomials")
                row_g.append(g)
                row_mult.append(m)
                mons = self._row_monos(g, m)
                row_mons.append(mons)
                row_coefs.append(self.coefs[g])
                fresh.append(mons)
            frontier = np.unique(np.concatenate(fresh))
        # columns sorted by the order, largest first
        allmon = np.concatenate(row_mons)
        uniq, inv = np.unique(allmon, return_inverse=True)
        perm = order_permutation(self.pk.unpack(uniq), self.omat)
        colpos = np.empty(len(uniq), dtype=np.int64)
        colpos[perm] = np.arange(len(uniq))
        col_mon = uniq[perm]
        cols = colpos[inv]
        ptr = np.zeros(len(row_mons) + 1, dtype=np.int64)
        ptr[1:] = np.cumsum([len(m) for m in row_mons])
        vals = np.concatenate(row_coefs).astype(np.int64)
        ncols = len(uniq)
        # pivot choice: reducer rows (index >= n_input) first, then shortest
        piv_of_col = np.full(ncols, -1, dtype=np.int64)
        lengths = np.diff(ptr)
        lead_col = np.where(lengths > 0, cols[np.minimum(ptr[:-1], len(cols) - 1)], -1)
        candidates = sorted(
            (r for r in range(len(row_mons)) if lengths[r] > 0 and (r >= n_input or r < n_prod)),
            key=lambda r: (r < n_input, lengths[r]),
        )
        is_pivot = np.zeros(len(row_mons), dtype=bool)
        for r in candidates:
            c = lead_col[r]
            if piv_of_col[c] < 0:
                piv_of_col[c] = r
                is_pivot[r] = True
        srows = [r for r in range(n_input) if not is_pivot[r]]
        if not srows:
            return []
        pivot_rows = np.nonzero(is_pivot)[0]
        # CSR of pivot rows, indexed by position in pivot_rows
        remap = np.full(len(row_mons), -1, dtype=np.int64)
        remap[pivot_rows] = np.arange(len(pivot_rows))
        pptr, pcols, pvals = _csr(ptr, cols, vals, pivot_rows)
        piv_local = np.where(piv_of_col >= 0, remap[np.maximum(piv_of_col, 0)], -1)
        sptr, scols, svals = _csr(ptr, cols, vals, np.array(srows, dtype=np.int64))
        noncols = np.nonzero(piv_of_col < 0)[0]
        compact = np.full(ncols, -1, dtype=np.int64)
        compact[noncols] = np.arange(len(noncols))
        D = reduce_rows(ncols, piv_local, pptr, pcols, pvals, sptr, scols, svals,
                        compact, len(noncols), p)
        mon_of_compact = col_mon[noncols]
        out = []
        if echelon:
            if D.shape[1] == 0:
                return []
            rank, _ = rref(D, p)
            for r in range(rank):
                nz = np.nonzero(D[r])[0]
                out.append((mon_of_compact[nz], D[r, nz].copy()))
        else:
            for r in range(D.shape[0]):
                nz = np.nonzero(D[r])[0]
                out.append((mon_of_compact[nz], D[r, nz].copy()))
        return out


def _csr(ptr, cols, vals, which):
    lens = ptr[which + 1] - ptr[which]
    optr = np.zeros(len(which) + 1, dtype=np.int64)
    optr[1:] = np.cumsum(lens)
    idx = np.concatenate([np.arange(ptr[r], ptr[r + 1]) for r in which]) if len(which) else np.zeros(0, np.int64)
    return optr, cols[idx].astype(np.int64), vals[idx].astype(np.int64)


def _monic(coefs: np.ndarray, p: int) -> np.ndarray:
    c = int(coefs[0])
    if c == 1:
        return coefs
    return coefs * pow(c, -1, p) % p


def f4(gens: Sequence[Polynomial], order: MonomialOrder, *, spair_budget: int | None = None,
       degree_budget: int | None = None, weights: Sequence[int] | None = None,
       stats: dict | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of ``gens`` over a prime field (monic, largest lead first)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    p = ring.field.p
    if p is None:
        raise ValueError("f4 needs a prime field")
    n = ring.nvars
    B = F4Basis(n, p, order, weights)
    w = B.w
    pending = []
    for g in gens:
        mons, coefs = B.from_polynomial(g)
        deg = int((B.pk.unpack(mons) @ w).max())
        pending.append((deg, mons, coefs))
    pending.sort(key=lambda t: t[0])
    pairs = PairSet(n, w)
    processed = 0
    rounds = 0
    while len(pairs) or pending:
        d_pairs = int(pairs.sugar.min()) if len(pairs) else None
        d_gens = pending[0][0] if pending else None
        d = min(x for x in (d_pairs, d_gens) if x is not None)
        if degree_budget is not None and d > degree_budget:
            raise ResourceLimitExceeded(f"degree budget of {degree_budget} exceeded (sugar {d})")
        rows: list[tuple[int, np.ndarray]] = []
        if d_pairs == d:
            _, pi, pj, plcm = pairs.pop_min_sugar()
            processed += len(pi)
            if spair_budget is not None and processed > spair_budget:
                raise ResourceLimitExceeded(f"S-pair budget of {spair_budget} exceeded")
            seen = set()
            for i, j, l in zip(pi, pj, plcm):
                for g in (int(i), int(j)):
                    m = l - B.lms[g]
                    k = (g, m.tobytes())
                    if k not in seen:
                        seen.add(k)
                        rows.append((g, m))
        extra = []
        while pending and pending[0][0] == d:
            _, mons, coefs = pending.pop(0)
            extra.append((mons, _monic(coefs, p)))
        new = B.reduce(rows, extra)
        rounds += 1
        new.sort(key=lambda mc: len(mc[0]))
        for mons, coefs in new:
            if len(mons) == 0:
                continue
            h = B.append(mons, _monic(coefs, p), d)
            if not np.any(B.lms[h]):
                if stats is not None:
                    stats.update(pairs=processed, rounds=rounds)
                return [ring.one()]
            B.active = pairs.update(B.lms, B.sugar, B.active, h)
    if stats is not None:
        stats.update(pairs=processed, rounds=rounds, size=int(B.active.sum()))
    return _reduced(B, ring)


def _reduced(B: F4Basis, ring: Ring) -> list[Polynomial]:
    act = np.nonzero(B.active)[0]
    tails = [(B.mons[g][1:], B.coefs[g][1:]) for g in act]
    red = B.reduce([], tails, echelon=False) if any(len(t[0]) for t in tails) else []
    out = []
    for idx, g in enumerate(act):
        lead_m = B.mons[g][:1]
        if red:
            mons, coefs = red[idx]
        else:
            mons, coefs = np.zeros(0, np.int64), np.zeros(0, np.int64)
        out.append(B.to_polynomial(ring, np.concatenate([lead_m, mons]),
                                   np.concatenate([np.array([1], np.int64), coefs])))
    key = B.order.key(B.n)
    out.sort(key=lambda f: key(f.leading_monomial(B.order)), reverse=True)
    return out


def f4_normal_forms(basis: Sequence[Polynomial], polys: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Remainders of ``polys`` modulo a monic Groebner ``basis`` over F_p."""
    if not polys:
        return []
    ring = polys[0].ring
    B = F4Basis(ring.nvars, ring.field.p, order)
    for g in basis:
        mons, coefs = B.from_polynomial(g)
        h = B.append(mons, coefs, 0)
        B.active[h] = True
    extra = []
    slots = []
    for f in polys:
        if f:
            slots.append(len(extra))
            extra.append(B.from_polynomial(f))
        else:
            slots.append(None)
    red = B.reduce([], extra, done_init=np.zeros(0, np.int64), echelon=False) if extra else []
    out = []
    for s in slots:
        if s is None:
            out.append(ring.zero())
        else:
            mons, coefs = red[s]
            out.append(B.to_polynomial(ring, mons, coefs))
    return out
