"""Critical-pair bookkeeping with the Gebauer-Moeller criteria.

Leading monomials live in one int64 matrix so the product criterion, the
chain criterion and the removal of redundant old pairs are all vectorized.
"""

from __future__ import annotations

import numpy as np


class PairSet:
    """Pending S-pairs ``(i, j)`` with their lcm and sugar degree."""

    def __init__(self, nvars: int, weights=None):
        self.n = nvars
        self.w = np.asarray(weights if weights is not None else [1] * nvars, dtype=np.int64)
        self.i = np.zeros(0, dtype=np.int64)
        self.j = np.zeros(0, dtype=np.int64)
        self.lcm = np.zeros((0, nvars), dtype=np.int64)
        self.sugar = np.zeros(0, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.i)

    def update(self, lms: np.ndarray, sugars: np.ndarray, active: np.ndarray, h: int) -> np.ndarray:
        """Insert element ``h``; returns the new ``active`` mask.

        ``lms`` holds the leading exponents of every basis element so far,
        ``active`` flags the ones whose leading monomial is still minimal.
        """
        lm_h = lms[h]
        # drop old pairs whose lcm is a multiple of lm_h with both new lcms different
        if len(self.i):
            div = np.all(self.lcm >= lm_h, axis=1)
            if div.any():
                l1 = np.maximum(lms[self.i], lm_h)
                l2 = np.maximum(lms[self.j], lm_h)
                ne1 = np.any(l1 != self.lcm, axis=1)
                ne2 = np.any(l2 != self.lcm, axis=1)
                keep = ~(div & ne1 & ne2)
                self._filter(keep)

        act = np.nonzero(active[:h])[0]
        if len(act):
            other = lms[act]
            lcms = np.maximum(other, lm_h)
            coprime = ~np.any(np.minimum(other, lm_h) > 0, axis=1)
            # chain criterion among the new pairs: D[a, b] <=> lcm_b | lcm_a
            divides = np.all(lcms[None, :, :] <= lcms[:, None, :], axis=2)
            equal = np.all(lcms[None, :, :] == lcms[:, None, :], axis=2)
            strict = divides & ~equal
            keep = ~strict.any(axis=1)
            # among equal lcms keep one representative, none if any is coprime
            idx = np.nonzero(keep)[0]
            groups: dict[bytes, list[int]] = {}
            for a in idx:
                groups.setdefault(lcms[a].tobytes(), []).append(a)
            keep[:] = False
            for members in groups.values():
                if any(coprime[a] for a in members):
                    continue
                keep[members[0]] = True
            sel = np.nonzero(keep)[0]
            if len(sel):
                g = act[sel]
                l = lcms[sel]
                s_h = sugars[h] + (l - lm_h) @ self.w
                s_g = sugars[g] + (l - lms[g]) @ self.w
                self.i = np.concatenate([self.i, g])
                self.j = np.concatenate([self.j, np.full(len(g), h, dtype=np.int64)])
                self.lcm = np.concatenate([self.lcm, l])
                self.sugar = np.concatenate([self.sugar, np.maximum(s_h, s_g)])

        # elements whose leading monomial is a multiple of lm_h become redundant
        new_active = active.copy()
        if len(act):
            red = np.all(lms[act] >= lm_h, axis=1)
            new_active[act[red]] = False
        new_active[h] = True
        return new_active

    def _filter(self, keep: np.ndarray):
        self.i = self.i[keep]
        self.j = self.j[keep]
        self.lcm = self.lcm[keep]
        self.sugar = self.sugar[keep]

    def pop_min_sugar(self) -> tuple[int, np.ndarray, np.ndarray, np.ndarray]:
        """Remove and return every pair of minimal sugar: (degree, i, j, lcm)."""
        d = int(self.sugar.min())
        sel = self.sugar == d
        out = (d, self.i[sel], self.j[sel], self.lcm[sel])
        self._filter(~sel)
        return out

    def pop_one(self, order_matrix: np.ndarray, by_sugar: bool = True) -> tuple[int, int, int, np.ndarray]:
        """Remove and return one pair as (degree, i, j, lcm).

        With ``by_sugar`` the pair of minimal sugar is taken, ties broken by
        the smallest lcm, and the degree reported is the sugar.  Otherwise the
        pair with the smallest lcm in the monomial order is taken and the
        degree reported is that of its lcm.
        """
        if by_sugar:
            d = int(self.sugar.min())
            cand = np.nonzero(self.sugar == d)[0]
        else:
            cand = np.arange(len(self.i))
        if len(cand) > 1:
            keys = self.lcm[cand] @ order_matrix.T
            # lexsort sorts by the last key first
            k = cand[np.lexsort(keys.T[::-1])[0]]
        else:
            k = cand[0]
        if not by_sugar:
            d = int(self.lcm[k] @ self.w)
        out = (d, int(self.i[k]), int(self.j[k]), self.lcm[k])
        keep = np.ones(len(self.i), dtype=bool)
        keep[k] = False
        self._filter(keep)
        return out
