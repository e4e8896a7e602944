"""Vectorized scan kernel for degree-9 hyperelliptic models in characteristic 3.

Batches of curves are processed with numpy over F_3, F_9 = F_3[t]/(t^2+1) and
F_27 = F_3[t]/(t^3+2t+1) (the canonical tower moduli).  Field elements are
split into base-3 digit planes, so all arithmetic is exact integer work:

  * squarefreeness of f is full rank of the 9x9 matrix whose rows are
    x^j f' mod f (the multiplication-by-f' matrix on k[x]/(f), whose
    determinant is the resultant of f and f');
  * the Cartier-Manin rank comes from minors of the 4x4 coefficient matrix
    (p-th roots are a field automorphism and do not change ranks);
  * the p-rank is the rank of the g-fold twisted product
    H * s^-1(H) * s^-2(H) * s^-3(H) with s the Frobenius.

Only rank data is produced here; curves whose Ekedahl-Oort index is not
pinned by (a-number, p-rank) are handed back for the exact pure-Python path.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .gf import Field

_CANONICAL_MODULI = {1: (0, 1), 2: (1, 0, 1), 3: (1, 2, 0, 1)}


def supported(field: Field) -> bool:
    return field.p == 3 and field.k in _CANONICAL_MODULI and \
        field.modulus == _CANONICAL_MODULI[field.k]


def to_planes(enc: np.ndarray, k: int) -> np.ndarray:
    """(...,) encodings -> (k, ...) base-3 digit planes (uint8)."""
    enc = np.asarray(enc, dtype=np.int64)
    return np.stack([((enc // 3 ** i) % 3).astype(np.uint8) for i in range(k)])


def from_planes(planes: np.ndarray) -> np.ndarray:
    k = planes.shape[0]
    out = np.zeros(planes.shape[1:], dtype=np.int64)
    for i in range(k - 1, -1, -1):
        out = out * 3 + planes[i]
    return out


def _reduce_planes(acc: list[np.ndarray], k: int) -> np.ndarray:
    """Reduce a degree-(2k-2) t-polynomial (list of int planes) mod the tower
    modulus and return (k, ...) uint8."""
    if k == 1:
        return (acc[0] % 3).astype(np.uint8)[None]
    if k == 2:
        # t^2 = -1
        r0 = acc[0] + 2 * acc[2]
        r1 = acc[1]
        return np.stack([(r0 % 3).astype(np.uint8), (r1 % 3).astype(np.uint8)])
    # k == 3: t^3 = t + 2, t^4 = t^2 + 2t
    r0 = acc[0] + 2 * acc[3]
    r1 = acc[1] + acc[3] + 2 * acc[4]
    r2 = acc[2] + acc[4]
    return np.stack([(r % 3).astype(np.uint8) for r in (r0, r1, r2)])


def gf_add(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return ((x.astype(np.int16) + y) % 3).astype(np.uint8)


def gf_sub(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return ((x.astype(np.int16) - y) % 3).astype(np.uint8)


def gf_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Elementwise product of plane arrays; broadcasts over trailing axes."""
    k = x.shape[0]
    acc = [None] * (2 * k - 1)
    xi = x.astype(np.int16)
    for i in range(k):
        for j in range(k):
            term = xi[i] * y[j]
            s = i + j
            acc[s] = term if acc[s] is None else acc[s] + term
    return _reduce_planes(acc, k)


def gf_smul(s: int, x: np.ndarray) -> np.ndarray:
    return ((x.astype(np.int16) * (s % 3)) % 3).astype(np.uint8)


def gf_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Batched matrix product: x (k,B,n,m) @ y (k,B,m,r)."""
    k = x.shape[0]
    acc = [None] * (2 * k - 1)
    xi = x.astype(np.int32)
    yi = y.astype(np.int32)
    for i in range(k):
        for j in range(k):
            term = np.matmul(xi[i], yi[j])
            s = i + j
            acc[s] = term if acc[s] is None else acc[s] + term
    return _reduce_planes(acc, k)


def gf_frob(x: np.ndarray) -> np.ndarray:
    """Coefficientwise cube in the tower representation."""
    k = x.shape[0]
    if k == 1:
        return x
    if k == 2:
        # (u + vt)^3 = u - vt
        return np.stack([x[0], ((3 - x[1].astype(np.int16)) % 3).astype(np.uint8)])
    # (u + vt + wt^2)^3 = (u + 2v + w) + (v + w) t + w t^2
    u, v, w = x[0].astype(np.int16), x[1].astype(np.int16), x[2].astype(np.int16)
    return np.stack([((u + 2 * v + w) % 3).astype(np.uint8),
                     ((v + w) % 3).astype(np.uint8),
                     x[2]])


def gf_frob_power(x: np.ndarray, j: int) -> np.ndarray:
    for _ in range(j % x.shape[0] if x.shape[0] > 1 else 0):
        x = gf_frob(x)
    return x


def gf_nonzero(x: np.ndarray) -> np.ndarray:
    return (x != 0).any(axis=0)


# ---------------------------------------------------------------------------
# batched linear algebra
# ---------------------------------------------------------------------------

def nonsingular9(M: np.ndarray) -> np.ndarray:
    """Mask of batch entries whose 9x9 matrix is invertible.  Destroys M.

    Elimination uses cross-multiplication (no inverses); a column with no
    pivot among the remaining rows kills the determinant.
    """
    B = M.shape[1]
    alive = np.ones(B, dtype=bool)
    bidx = np.arange(B)
    n = M.shape[2]
    for c in range(n):
        nz = (M[:, :, c:, c] != 0).any(axis=0)
        alive &= nz.any(axis=1)
        off = nz.argmax(axis=1)
        rows = c + off
        tmp = M[:, bidx, rows, :].copy()
        M[:, bidx, rows, :] = M[:, bidx, c, :]
        M[:, bidx, c, :] = tmp
        if c == n - 1:
            break
        piv = M[:, :, c:c + 1, c:c + 1]
        lead = M[:, :, c + 1:, c:c + 1]
        block = M[:, :, c + 1:, c:]
        pivrow = M[:, :, c:c + 1, c:]
        M[:, :, c + 1:, c:] = gf_sub(gf_mul(block, piv), gf_mul(lead, pivrow))
    return alive


def rank4(H: np.ndarray) -> np.ndarray:
    """Ranks of batched 4x4 matrices (k,B,4,4), via minors."""
    B = H.shape[1]
    ent = {(r, c): H[:, :, r, c] for r in range(4) for c in range(4)}
    d2 = {}
    for rows in combinations(range(4), 2):
        for cols in combinations(range(4), 2):
            r0, r1 = rows
            c0, c1 = cols
            d2[rows, cols] = gf_sub(gf_mul(ent[r0, c0], ent[r1, c1]),
                                    gf_mul(ent[r0, c1], ent[r1, c0]))
    d3 = {}
    for rows in combinations(range(4), 3):
        for cols in combinations(range(4), 3):
            r0 = rows[0]
            acc = None
            for s, c in enumerate(cols):
                rest = tuple(v for v in cols if v != c)
                term = gf_mul(ent[r0, c], d2[rows[1:], rest])
                if acc is None:
                    acc = term
                else:
                    acc = gf_add(acc, term) if s % 2 == 0 else gf_sub(acc, term)
            d3[rows, cols] = acc
    det4 = None
    for s, c in enumerate(range(4)):
        rest = tuple(v for v in range(4) if v != c)
        term = gf_mul(ent[0, c], d3[(1, 2, 3), rest])
        if det4 is None:
            det4 = term
        else:
            det4 = gf_add(det4, term) if s % 2 == 0 else gf_sub(det4, term)
    nz4 = gf_nonzero(det4)
    nz3 = np.zeros(B, dtype=bool)
    for v in d3.values():
        nz3 |= gf_nonzero(v)
    nz2 = np.zeros(B, dtype=bool)
    for v in d2.values():
        nz2 |= gf_nonzero(v)
    nz1 = (H != 0).any(axis=(0, 2, 3))
    rank = np.zeros(B, dtype=np.uint8)
    rank[nz1] = 1
    rank[nz2] = 2
    rank[nz3] = 3
    rank[nz4] = 4
    return rank


# ---------------------------------------------------------------------------
# the scan pipeline
# ---------------------------------------------------------------------------

def _derivative_planes(fpl: np.ndarray) -> np.ndarray:
    """Planes of f' for f given by (k,B,10) coefficient planes, char 3."""
    k, B = fpl.shape[0], fpl.shape[1]
    out = np.zeros((k, B, 9), dtype=np.uint8)
    for i in range(9):
        s = (i + 1) % 3
        if s:
            out[:, :, i] = gf_smul(s, fpl[:, :, i + 1])
    return out


def squarefree_mask(fpl: np.ndarray) -> np.ndarray:
    """f squarefree <=> multiplication-by-f' on k[x]/(f) is invertible."""
    k, B = fpl.shape[0], fpl.shape[1]
    fp = _derivative_planes(fpl)
    flow = fpl[:, :, :9]
    rows = [fp]
    cur = fp
    for _ in range(8):
        top = cur[:, :, 8:9]
        nxt = np.zeros_like(cur)
        nxt[:, :, 1:] = cur[:, :, :8]
        nxt = gf_sub(nxt, gf_mul(top, flow))
        rows.append(nxt)
        cur = nxt
    M = np.stack(rows, axis=2)  # (k, B, 9 rows, 9 cols)
    return nonsingular9(M)


def cm_matrix_planes(fpl: np.ndarray) -> np.ndarray:
    """Raw 4x4 Cartier-Manin coefficient matrix H[i][j] = f_(3i+2-j)."""
    k, B = fpl.shape[0], fpl.shape[1]
    H = np.zeros((k, B, 4, 4), dtype=np.uint8)
    for i in range(4):
        for j in range(4):
            e = 3 * i + 2 - j
            if 0 <= e <= 9:
                H[:, :, i, j] = fpl[:, :, e]
    return H


def p_rank4(H: np.ndarray) -> np.ndarray:
    """p-rank as the rank of H s^-1(H) s^-2(H) s^-3(H)."""
    k = H.shape[0]
    P = H
    for j in (1, 2, 3):
        P = gf_matmul(P, gf_frob_power(H, (-j) % k if k > 1 else 0))
    return rank4(P)


def scan_batch(field: Field, coeffs: np.ndarray):
    """coeffs: (B, 10) int64 encodings of monic degree-9 f.

    Returns (valid, rank, prank) uint8/bool arrays; rank and prank are only
    meaningful where valid (and prank only where rank < 4; it is set to 4 on
    the full-rank part).
    """
    if not supported(field):
        raise ValueError("kernel supports only the canonical fields of characteristic 3")
    k = field.k
    fpl = to_planes(coeffs.T, k)  # (k, 10, B) -> transpose to (k, B, 10)
    fpl = np.swapaxes(fpl, 1, 2).copy()
    valid = squarefree_mask(fpl)
    H = cm_matrix_planes(fpl)
    rank = rank4(H)
    B = coeffs.shape[0]
    prank = np.full(B, 4, dtype=np.uint8)
    low = valid & (rank < 4)
    if low.any():
        sub = H[:, low]
        prank[low] = p_rank4(sub)
    return valid, rank, prank


class PlaneOps:
    """Encoding-level vectorized field ops for one supported field."""

    def __init__(self, field: Field):
        if not supported(field):
            raise ValueError("unsupported field")
        self.field = field
        self.k = field.k

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return from_planes(gf_mul(to_planes(a, self.k), to_planes(b, self.k)))

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return from_planes(gf_add(to_planes(a, self.k), to_planes(b, self.k)))

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return from_planes(gf_sub(to_planes(a, self.k), to_planes(b, self.k)))

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.ones_like(np.asarray(a, dtype=np.int64))
        base = np.asarray(a, dtype=np.int64)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result
