"""The Cartier operator on differential forms, the Cartier-Manin matrix,
a-number and p-rank.

Matrix convention: column j holds the coordinates of C(omega_j) in the
holomorphic basis, with the p-th roots already applied to the entries.  The
operator is then 1/p-semilinear: C(sum c_j omega_j) = sum pth_root(c_j) *
column_j.
"""

from __future__ import annotations

from . import poly
from .curve import (CurveModel, CyclicCoverModel, DifferentialForm,
                    HyperellipticModel, cover_degree, eigenspace_dims,
                    f_poly, holomorphic_basis, s_poly)
from .errors import InternalInvariantError
from .gf import Field
from .poly import Laurent


def cartier_poly(F: Field, u: Laurent) -> Laurent:
    """C(u dx) for a Laurent polynomial u: keep exponents j = -1 mod p,
    send x^j to x^((j+1)/p - 1), and take p-th roots of the coefficients."""
    p = F.p
    if u.is_zero():
        return u
    terms = [(e, c) for e, c in u.terms() if (e + 1) % p == 0]
    if not terms:
        return Laurent(0, ())
    lo = (terms[0][0] + 1) // p - 1
    hi = (terms[-1][0] + 1) // p - 1
    out = [0] * (hi - lo + 1)
    for e, c in terms:
        out[(e + 1) // p - 1 - lo] = F.pth_root(c)
    return poly.laurent(lo, out)


def cartier_form(model: CurveModel, form: DifferentialForm) -> DifferentialForm:
    """C(u * y^(-n) dx) = cartier_poly(u * f^t) * y^(-n') dx, with t >= 0
    minimal such that p | n + m*t and n' = (n + m*t)/p.

    The grading law n' * p = n (mod m) holds for the result.
    """
    F = model.field
    p = F.p
    m = cover_degree(model)
    n = form.n
    if not 0 <= n <= m - 1:
        raise ValueError(f"y-exponent {n} out of range for m = {m}")
    t = 0
    while (n + m * t) % p != 0:
        t += 1  # t < p always exists since gcd(m, p) = 1
    n_new = (n + m * t) // p
    u = form.u
    if t:
        u = poly.laurent_mul_poly(F, u, poly.pow_poly(F, f_poly(model), t))
    out = cartier_poly(F, u)
    assert (n_new * p - n) % m == 0
    return DifferentialForm(n_new, out)


def express_holomorphic(model: CurveModel, form: DifferentialForm) -> list[int]:
    """Coordinates of a form in the holomorphic basis order.

    Raises InternalInvariantError if the form is not in the span; for the
    forms produced here that would signal an implementation bug.
    """
    F = model.field
    g = model.genus
    if isinstance(model, HyperellipticModel):
        dims = {1: g}
        offsets = {1: 0}
    else:
        ds = eigenspace_dims(model)
        dims, offsets = {}, {}
        pos = 0
        for n in range(1, model.m):
            d = ds[n - 1]
            if d > 0:
                dims[n] = d
                offsets[n] = pos
                pos += d
    coords = [0] * g
    if form.is_zero():
        return coords
    n = form.n
    if n not in dims:
        raise InternalInvariantError(
            f"Cartier image lands in an empty eigenspace (n = {n})")
    try:
        upoly = poly.laurent_to_poly(form.u)
    except ValueError as exc:
        raise InternalInvariantError(f"Cartier image has a pole: {exc}") from exc
    s_n = s_poly(model, n)
    quot, rem = poly.quotient_remainder(F, upoly, s_n)
    if rem:
        raise InternalInvariantError("Cartier image is not a multiple of the basis factor")
    if poly.degree(quot) >= dims[n]:
        raise InternalInvariantError("Cartier image exceeds the basis degree bound")
    for l, c in enumerate(quot):
        coords[offsets[n] + l] = c
    return coords


def cartier_manin(model: CurveModel, generic: bool = False) -> tuple[tuple[int, ...], ...]:
    """g x g Cartier-Manin matrix, column j = coordinates of C(omega_j).

    Hyperelliptic models use the closed form from the coefficients of
    f^((p-1)/2) unless generic=True forces the column-by-column operator
    path (used as a cross-check).
    """
    F = model.field
    g = model.genus
    if isinstance(model, HyperellipticModel) and not generic:
        c = poly.pow_poly(F, list(model.f), (F.p - 1) // 2)
        p = F.p

        def coef(e: int) -> int:
            return c[e] if 0 <= e < len(c) else 0

        return tuple(tuple(F.pth_root(coef((i + 1) * p - 1 - j)) for j in range(g))
                     for i in range(g))
    basis = holomorphic_basis(model)
    cols = [express_holomorphic(model, cartier_form(model, w)) for w in basis]
    return tuple(tuple(cols[j][i] for j in range(g)) for i in range(g))


def matrix_rank(F: Field, rows) -> int:
    """Rank of a matrix given as an iterable of row iterables of encodings."""
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = F.inv(mat[rank][col])
        row = [F.mul(inv, v) for v in mat[rank]]
        mat[rank] = row
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [F.sub(v, F.mul(c, w)) for v, w in zip(mat[r], row)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def a_number(model: CurveModel) -> int:
    return model.genus - matrix_rank(model.field, cartier_manin(model))


def p_rank_from_matrix(F: Field, cm, g: int) -> int:
    """Stable dimension of iterated Cartier images, by semilinear subspace
    iteration: W_0 = full space, W_(i+1) = C(W_i)."""
    from .eo import rref, v_image  # local import to avoid a cycle

    rows = tuple(tuple(1 if i == j else 0 for j in range(g)) for i in range(g))
    w = rref(F, rows, g)
    for _ in range(g + 1):
        nxt = v_image(F, cm, w)
        if len(nxt) == len(w):
            return len(nxt)
        w = nxt
    raise InternalInvariantError("p-rank iteration failed to stabilize")


def p_rank(model: CurveModel) -> int:
    g = model.genus
    f = p_rank_from_matrix(model.field, cartier_manin(model), g)
    a = a_number(model)
    assert 0 <= f <= g - a
    return f
