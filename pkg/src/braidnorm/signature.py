"""
Exact signatures of symmetric integer matrices and of braid closures.

matrix_signature runs a fraction-free (Bareiss) symmetric elimination.  After
k pivots the active block equals p_k times the Schur complement, where p_k is
the k-th leading principal minor of the congruence-transformed matrix, so the
k-th pivot of the LDL^T factorization has the sign of p_k * p_{k-1}.  When the
active block has a zero diagonal but a nonzero entry a_ij, adding row/column j
to row/column i is a unimodular congruence that creates the diagonal entry
2 a_ij; it commutes with the Bareiss scaling, so the exact divisions stay
exact.  Nothing here touches floating point.

Seifert forms are sparse with many unit entries, so a sparse phase runs first:
it eliminates +-1 diagonal pivots and hyperbolic pairs [[0, c], [c, d]] with
c = +-1 (both have integral inverses, and the pair contributes 0), choosing the
pivot of smallest degree.  Whatever is left goes to the dense routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .braid import BraidError, WordLike, as_word
from .closure import seifert_matrix


@dataclass(frozen=True)
class SignatureValue:
    sigma: int
    nullity: int

    def __int__(self):
        return self.sigma


def _as_symmetric(S) -> list[list[int]]:
    rows = [list(r) for r in S]
    m = len(rows)
    for r in rows:
        if len(r) != m:
            raise BraidError("matrix is not square")
        for v in r:
            if int(v) != v:
                raise BraidError("matrix entries must be integers")
    A = [[int(v) for v in r] for r in rows]
    if any(A[i][j] != A[j][i] for i in range(m) for j in range(i)):
        raise BraidError("matrix is not symmetric")
    return A


def _sparse_phase(A: list[list[int]]) -> tuple[int, int, np.ndarray]:
    rows: dict[int, dict[int, int]] = {
        i: {j: v for j, v in enumerate(r) if v} for i, r in enumerate(A)
    }
    sigma = nullity = 0

    def add(j, k, v):
        if v:
            r = rows[j]
            nv = r.get(k, 0) + v
            if nv:
                r[k] = nv
            else:
                del r[k]

    def drop(i):
        for j in rows.pop(i):
            if j != i:
                rows[j].pop(i, None)

    while rows:
        best = None
        for i, r in rows.items():
            if not r:
                best = ("null", i, None, -1)
                break
            d = r.get(i, 0)
            if d in (1, -1):
                if best is None or len(r) < best[3]:
                    best = ("unit", i, None, len(r))
            elif d == 0:
                for j, c in r.items():
                    if c in (1, -1):
                        cost = len(r) + len(rows[j])
                        if best is None or cost < best[3]:
                            best = ("pair", i, j, cost)
                        break
        if best is None:
            break
        kind, i, j, _ = best
        if kind == "null":
            nullity += 1
            del rows[i]
        elif kind == "unit":
            a = rows[i][i]
            sigma += a
            nb = [(k, v) for k, v in rows[i].items() if k != i]
            drop(i)
            for k, vk in nb:
                for l, vl in nb:
                    add(k, l, -vk * vl * a)
        else:
            c = rows[i][j]
            d = rows[j].get(j, 0)
            bi = {k: v for k, v in rows[i].items() if k not in (i, j)}
            bj = {k: v for k, v in rows[j].items() if k not in (i, j)}
            drop(i)
            drop(j)
            keys = set(bi) | set(bj)
            # M^{-1} = [[-d, c], [c, 0]]
            for k in keys:
                ki, kj = bi.get(k, 0), bj.get(k, 0)
                for l in keys:
                    li, lj = bi.get(l, 0), bj.get(l, 0)
                    add(k, l, -(ki * (-d * li + c * lj) + kj * c * li))
    idx = sorted(rows)
    pos = {k: t for t, k in enumerate(idx)}
    R = np.zeros((len(idx), len(idx)), dtype=object)
    for k in idx:
        for l, v in rows[k].items():
            R[pos[k], pos[l]] = v
    return sigma, nullity, R


def matrix_signature(S: Sequence[Sequence[int]]) -> SignatureValue:
    sigma, nullity, A = _sparse_phase(_as_symmetric(S))
    dense = _dense_signature(A)
    return SignatureValue(sigma + dense.sigma, nullity + dense.nullity)


def _dense_signature(A: np.ndarray) -> SignatureValue:
    sigma = 0
    nullity = 0
    prev = 1
    while A.shape[0]:
        diag = A.diagonal()
        nz = np.flatnonzero(diag != 0)
        if nz.size:
            k = int(nz[np.argmin([abs(diag[i]) for i in nz])])
        else:
            off = np.argwhere(A != 0)
            if off.size == 0:
                nullity += A.shape[0]
                break
            i, j = (int(v) for v in off[0])
            A[i, :] += A[j, :]
            A[:, i] += A[:, j]
            k = i
        if k:
            perm = [k] + [r for r in range(A.shape[0]) if r != k]
            A = A[np.ix_(perm, perm)]
        p = A[0, 0]
        sigma += 1 if (p > 0) == (prev > 0) else -1
        b = A[0, 1:]
        A = (p * A[1:, 1:] - np.outer(b, b)) // prev
        prev = p
    return SignatureValue(sigma, nullity)


def link_signature(w: WordLike, n: int | None = None) -> int:
    """Signature of the closure of w, read in B_n (default: its width)."""
    return link_signature_value(w, n).sigma


def link_signature_value(w: WordLike, n: int | None = None) -> SignatureValue:
    V = seifert_matrix(as_word(w), n)
    return matrix_signature(V.symmetrized())
