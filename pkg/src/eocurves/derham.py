"""Explicit de Rham cohomology basis, duality pairing, and the Verschiebung
matrix on H^1_dR for hyperelliptic curves and cyclic covers of the line.

H^1_dR is presented by Cech cocycles (t, w1, w2) for the two-set cover
U1 = (x != 0), U2 = (x != infinity), with dt = w1 - w2.  The basis is the
H^0 part (the holomorphic forms) followed by H^1(O) classes glued from the
functions y^n / (x^(l+1) s_n(x)); the pairing puts those two blocks in
perfect duality.

For the gluing class of t = y^n / (x^(l+1) s(x)) one has

    dt = h(x) t_n(x) / (x^(l+2) y^(m-n)) dx,
    h = ((n/m) x s f' - ((l+1) s + x s') f) / (s^2 t_n),

an exact division.  Splitting h = psi + phi at degree l+1 gives the U1/U2
representatives.  At m = 2 this is the classical x f' - 2 i f recipe with
its 1/2 factor, which is kept as is (p odd makes it invertible; dropping it
would rescale the glued classes nonuniformly across p).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .cartier import cartier_form, express_holomorphic
from .curve import (CurveModel, CyclicCoverModel, DifferentialForm,
                    HyperellipticModel, cover_degree, eigenspace_dims,
                    f_poly, holomorphic_basis, s_poly, t_poly)
from .errors import InternalInvariantError, InvalidModelError
from .gf import Field


@dataclass(frozen=True)
class GluedClass:
    """An H^1(O) basis class with its two local representatives."""
    label: str
    n: int
    l: int
    func_label: str
    u1: DifferentialForm
    u2: DifferentialForm


@dataclass(frozen=True)
class DeRhamBasis:
    model: CurveModel
    h0: tuple[DifferentialForm, ...]
    h1: tuple[GluedClass, ...]

    @property
    def g(self) -> int:
        return len(self.h0)

    @property
    def labels(self) -> list[str]:
        return [f.label for f in self.h0] + [c.label for c in self.h1]


def _index_pairs(model: CurveModel) -> list[tuple[int, int]]:
    if isinstance(model, HyperellipticModel):
        return [(1, l) for l in range(model.genus)]
    dims = eigenspace_dims(model)
    return [(n, l) for n in range(1, model.m) for l in range(dims[n - 1])]


def build_basis(model: CurveModel) -> DeRhamBasis:
    """Basis of H^1_dR: holomorphic forms, then glued classes in paired order."""
    F = model.field
    m = cover_degree(model)
    if isinstance(model, HyperellipticModel) and not model.has_zero_branch:
        raise InvalidModelError("de Rham basis needs a branch point at 0 (x | f)")
    fa = f_poly(model)
    fprime = poly.derivative(F, fa)
    inv_m = F.inv(m % F.p)
    h0 = tuple(holomorphic_basis(model))
    h1 = []
    for n, l in _index_pairs(model):
        s = s_poly(model, n)
        t = t_poly(model, n)
        sprime = poly.derivative(F, s)
        # numerator of dt over the common denominator x^(l+2) s^2 y^(m-n)
        term1 = poly.scalar_mul(F, F.smul(inv_m, n), poly.mul(F, poly.x_power(1), poly.mul(F, s, fprime)))
        term2 = poly.mul(F, poly.add(F, poly.scalar_mul(F, (l + 1) % F.p, s),
                                     poly.mul(F, poly.x_power(1), sprime)), fa)
        numer = poly.sub(F, term1, term2)
        den = poly.mul(F, poly.mul(F, s, s), t)
        h, rem = poly.quotient_remainder(F, numer, den)
        if rem:
            raise InternalInvariantError("gluing numerator is not divisible by s^2 t")
        psi = poly.normalize(h[:l + 2])
        phi = poly.normalize([0] * (l + 2) + h[l + 2:])
        u1 = poly.laurent_shift(poly.laurent_from_poly(poly.mul(F, psi, t)), -(l + 2))
        u2 = poly.laurent_shift(poly.laurent_from_poly(
            poly.neg(F, poly.mul(F, phi, t))), -(l + 2))
        if isinstance(model, HyperellipticModel):
            label = f"gamma_{l + 1}"
            func = f"y/x^{l + 1}"
        else:
            label = f"beta_{n}_{l}"
            func = f"y^{n}/(x^{l + 1}*s_{n})"
        h1.append(GluedClass(label=label, n=n, l=l, func_label=func,
                             u1=DifferentialForm(m - n, u1),
                             u2=DifferentialForm(m - n, u2)))
    if isinstance(model, HyperellipticModel):
        h0 = tuple(DifferentialForm(w.n, w.u, label=f"lambda_{l}")
                   for l, w in enumerate(h0))
    else:
        h0 = tuple(DifferentialForm(w.n, w.u, label="alpha" + w.label[5:])
                   for w in h0)
    return DeRhamBasis(model=model, h0=h0, h1=tuple(h1))


def verschiebung(model: CurveModel, basis: DeRhamBasis) -> tuple[tuple[int, ...], ...]:
    """2g x 2g matrix of V in basis order; column = coordinates of the image.

    Every column lands in the H^0 block.  For glued classes the U1 and U2
    representatives must give the same Cartier image (C kills the exact form
    joining them); disagreement is an implementation bug.
    """
    g = basis.g
    cols = []
    for w in basis.h0:
        cols.append(express_holomorphic(model, cartier_form(model, w)))
    for cls in basis.h1:
        img1 = cartier_form(model, cls.u1)
        img2 = cartier_form(model, cls.u2)
        if img1.n != img2.n or img1.u != img2.u:
            raise InternalInvariantError(
                f"U1/U2 Cartier images disagree for {cls.label}")
        cols.append(express_holomorphic(model, img1))
    dim = 2 * g
    rows = []
    for i in range(dim):
        rows.append(tuple(cols[j][i] if i < g else 0 for j in range(dim)))
    return tuple(rows)


def pairing_matrix(basis: DeRhamBasis) -> tuple[tuple[int, ...], ...]:
    """The duality pairing in basis order, normalized.

    The H^0 block is isotropic and each glued class pairs to 1 with the
    holomorphic form of the same index (residue evaluation at the branch
    point over 0 gives one uniform nonzero constant, so normalizing it to 1
    changes no orthogonal complement).  The H^1(O) x H^1(O) block is never
    consulted by the filtration, which only takes complements of subspaces
    comparable with H^0; it is stored as zero.
    """
    F = basis.model.field
    g = basis.g
    dim = 2 * g
    neg_one = F.neg(1)
    rows = [[0] * dim for _ in range(dim)]
    for r in range(g):
        rows[r][g + r] = neg_one
        rows[g + r][r] = 1
    return tuple(tuple(row) for row in rows)
