"""Semilinear subspace algebra, canonical filtration, final type and the
Ekedahl-Oort index.

Subspaces of H^1_dR are kept as reduced row-echelon bases (tuples of row
tuples), making subspace equality syntactic and fixed points of the closure
detectable without hashing pitfalls.  The Verschiebung matrix acts
1/p-semilinearly: the image of a coordinate vector c is M @ pth_root(c),
and since the root is a bijection of the field the span of row images is
the image of the span.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartier import cartier_manin, matrix_rank, p_rank_from_matrix
from .curve import CurveModel, genus
from .derham import build_basis, pairing_matrix, verschiebung
from .errors import InternalInvariantError, InvalidModelError, PairingSupportError
from .gf import Field

Subspace = tuple[tuple[int, ...], ...]


def rref(F: Field, rows, width: int) -> Subspace:
    """Canonical reduced row echelon form; zero rows dropped."""
    mat = [list(r) for r in rows]
    rank = 0
    for col in range(width):
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
    return tuple(tuple(r) for r in mat[:rank])


def subspace_le(F: Field, a: Subspace, b: Subspace) -> bool:
    """a <= b for echelon bases, by reducing each row of a against b."""
    if len(a) > len(b):
        return False
    pivots = {}
    for i, row in enumerate(b):
        for j, v in enumerate(row):
            if v:
                pivots[j] = i
                break
    for row in a:
        cur = list(row)
        for j in range(len(cur)):
            if cur[j]:
                i = pivots.get(j)
                if i is None:
                    return False
                c = cur[j]
                cur = [F.sub(v, F.mul(c, w)) for v, w in zip(cur, b[i])]
        if any(cur):
            return False
    return True


def v_image(F: Field, v_matrix, w: Subspace) -> Subspace:
    """Span of V(w) for the semilinear V given by its matrix."""
    if not w:
        return ()
    dim = len(v_matrix)
    root = F.pth_root
    fmul, fadd = F.mul, F.add
    images = []
    for row in w:
        twisted = [root(c) for c in row]
        img = [0] * dim
        for j, c in enumerate(twisted):
            if c:
                for i in range(dim):
                    mij = v_matrix[i][j]
                    if mij:
                        img[i] = fadd(img[i], fmul(mij, c))
        images.append(img)
    return rref(F, images, dim)


def full_space(dim: int) -> Subspace:
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


def h0_space(g: int) -> Subspace:
    return tuple(tuple(1 if i == j else 0 for j in range(2 * g)) for i in range(g))


def _comparable_with_h0(F: Field, w: Subspace, g: int) -> bool:
    if all(all(v == 0 for v in row[g:]) for row in w):
        return True  # w inside H^0
    return subspace_le(F, h0_space(g), w)


def perp(F: Field, pairing, w: Subspace, g: int) -> Subspace:
    """Orthogonal complement of w, for w comparable with H^0.

    Incomparable inputs would need the unused H^1(O) x H^1(O) pairing block
    and are rejected.
    """
    dim = 2 * g
    if not _comparable_with_h0(F, w, g):
        raise PairingSupportError(
            "orthogonal complement supported only for subspaces comparable with H^0")
    if not w:
        return full_space(dim)
    rows = []
    for row in w:
        rows.append([_dot(F, row, pairing, j) for j in range(dim)])
    return _nullspace(F, rows, dim)


def _dot(F: Field, row, pairing, j: int) -> int:
    acc = 0
    for k, c in enumerate(row):
        if c:
            pkj = pairing[k][j]
            if pkj:
                acc = F.add(acc, F.mul(c, pkj))
    return acc


def _nullspace(F: Field, rows, width: int) -> Subspace:
    ech = rref(F, rows, width)
    pivots = []
    for row in ech:
        for j, v in enumerate(row):
            if v:
                pivots.append(j)
                break
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for j in free:
        vec = [0] * width
        vec[j] = 1
        for i, pj in enumerate(pivots):
            vec[pj] = F.neg(ech[i][j])
        basis.append(vec)
    return rref(F, basis, width)


def canonical_filtration(F: Field, v_matrix, pairing, g: int) -> list[Subspace]:
    """Smallest set of subspaces containing {0, H^1_dR} and closed under the
    Verschiebung image and orthogonal complement, sorted by dimension.

    The closure is guaranteed to be a chain; a non-chain result signals a
    bug, as does failure to stabilize within 8g rounds.
    """
    dim = 2 * g
    spaces = {(): None, full_space(dim): None}  # dict keeps insertion order deterministic
    for _ in range(8 * g):
        new = []
        for w in list(spaces):
            img = v_image(F, v_matrix, w)
            if img not in spaces:
                new.append(img)
            pp = perp(F, pairing, w, g)
            if pp not in spaces:
                new.append(pp)
        if not new:
            break
        for w in new:
            spaces[w] = None
    else:
        raise InternalInvariantError("canonical filtration did not stabilize in 8g rounds")
    chain = sorted(spaces, key=len)
    for a, b in zip(chain, chain[1:]):
        if len(a) == len(b) or not subspace_le(F, a, b):
            raise InternalInvariantError("canonical filtration is not a chain")
    return chain


@dataclass(frozen=True)
class FinalType:
    """The function v on {0..2g} recording dim V(W) along the final filtration."""
    g: int
    v: tuple[int, ...]

    def __post_init__(self):
        g, v = self.g, self.v
        if len(v) != 2 * g + 1:
            raise ValueError("final type must have 2g+1 values")
        if v[0] != 0 or v[2 * g] != g:
            raise ValueError("final type endpoints must be v(0)=0, v(2g)=g")
        for i in range(2 * g):
            if not 0 <= v[i + 1] - v[i] <= 1:
                raise ValueError("final type increments must be 0 or 1")
        for i, vi in enumerate(v):
            if vi > i:
                raise ValueError("final type must satisfy v(i) <= i")
        for i in range(2 * g + 1):
            if v[2 * g - i] != v[i] + g - i:
                raise ValueError("final type fails duality v(2g-i) = v(i)+g-i")


@dataclass(frozen=True)
class EOType:
    """Strictly decreasing index [mu_1 > ... > mu_n]; () is ordinary."""
    mu: tuple[int, ...]

    def __post_init__(self):
        mu = self.mu
        if any(m <= 0 for m in mu):
            raise ValueError("entries must be positive")
        if any(a <= b for a, b in zip(mu, mu[1:])):
            raise ValueError("entries must be strictly decreasing")

    @property
    def a_number(self) -> int:
        return len(self.mu)

    def p_rank(self, g: int) -> int:
        return g if not self.mu else g - self.mu[0]

    @property
    def codim(self) -> int:
        return sum(self.mu)

    def __str__(self):
        return "[" + ",".join(str(m) for m in self.mu) + "]"


def final_type(F: Field, filtration: list[Subspace], v_matrix, g: int) -> FinalType:
    """v at the canonical dimensions is dim V(W); in between, each graded
    piece carries V either injectively (linear fill) or trivially (constant
    fill); above g duality takes over."""
    known: dict[int, int] = {}
    for w in filtration:
        if len(w) <= g:
            known[len(w)] = len(v_image(F, v_matrix, w))
    if 0 not in known or g not in known:
        raise InternalInvariantError("canonical filtration is missing 0 or H^0")
    dims = sorted(known)
    v = [0] * (2 * g + 1)
    for d1, d2 in zip(dims, dims[1:]):
        v1, v2 = known[d1], known[d2]
        if v2 - v1 == d2 - d1:
            for i in range(d1, d2 + 1):
                v[i] = v1 + (i - d1)
        elif v2 == v1:
            for i in range(d1, d2 + 1):
                v[i] = v1
        else:
            raise InternalInvariantError(
                "graded piece of the canonical filtration is neither zero nor injective")
    for i in range(g + 1, 2 * g + 1):
        v[i] = v[2 * g - i] + i - g
    vt = FinalType(g, tuple(v))
    # members above the middle must agree with the duality extension
    for w in filtration:
        if len(w) > g:
            if len(v_image(F, v_matrix, w)) != vt.v[len(w)]:
                raise InternalInvariantError("duality extension disagrees with V images")
    return vt


def eo_from_final(vt: FinalType) -> EOType:
    """mu collects g-i+1 at each flat step of v on {1..g}."""
    g, v = vt.g, vt.v
    return EOType(tuple(g - i + 1 for i in range(1, g + 1) if v[i] == v[i - 1]))


def final_from_eo(eo: EOType, g: int) -> FinalType:
    if eo.mu and eo.mu[0] > g:
        raise ValueError("mu_1 exceeds g")
    if len(eo.mu) > g:
        raise ValueError("index longer than g")
    v = [0] * (2 * g + 1)
    for i in range(g + 1):
        v[i] = i - sum(1 for m in eo.mu if m > g - i)
    for i in range(g + 1, 2 * g + 1):
        v[i] = v[2 * g - i] + i - g
    return FinalType(g, tuple(v))


def eo_leq(mu, nu) -> bool:
    """Partial order: mu <= nu iff len(mu) <= len(nu) and mu_i <= nu_i."""
    mu = tuple(mu.mu if isinstance(mu, EOType) else mu)
    nu = tuple(nu.mu if isinstance(nu, EOType) else nu)
    if len(mu) > len(nu):
        return False
    return all(a <= b for a, b in zip(mu, nu))


@dataclass(frozen=True)
class Report:
    model: CurveModel
    genus: int
    cm_matrix: tuple[tuple[int, ...], ...]
    a_number: int
    p_rank: int
    final_type: tuple[int, ...]
    eo_type: tuple[int, ...]
    superspecial: bool
    meets_ss_criterion: bool

    def to_json(self) -> dict:
        F = self.model.field
        return {
            "p": F.p,
            "k": F.k,
            "modulus": list(F.modulus),
            "model": self.model.to_json(),
            "genus": self.genus,
            "cm_matrix": [list(r) for r in self.cm_matrix],
            "a_number": self.a_number,
            "p_rank": self.p_rank,
            "final_type": list(self.final_type),
            "eo_type": list(self.eo_type),
            "superspecial": self.superspecial,
            "meets_ss_criterion": self.meets_ss_criterion,
        }


_GENUS_GUARD = 8


def classify(model: CurveModel) -> Report:
    """Full invariants of one curve; all derived quantities are cross-checked."""
    F = model.field
    g = genus(model)
    if g > _GENUS_GUARD:
        raise InvalidModelError(f"genus {g} exceeds the classification guard {_GENUS_GUARD}")
    F.ensure_tables()  # small fields get O(1) ops for the filtration loops
    cm = cartier_manin(model)
    rank = matrix_rank(F, cm)
    a = g - rank
    f_iter = p_rank_from_matrix(F, cm, g)
    basis = build_basis(model)
    v_mat = verschiebung(model, basis)
    pairing = pairing_matrix(basis)
    chain = canonical_filtration(F, v_mat, pairing, g)
    vt = final_type(F, chain, v_mat, g)
    eo = eo_from_final(vt)
    if eo.a_number != a:
        raise InternalInvariantError("a-number from mu disagrees with matrix rank")
    if eo.p_rank(g) != f_iter:
        raise InternalInvariantError("p-rank from mu disagrees with subspace iteration")
    return Report(
        model=model,
        genus=g,
        cm_matrix=cm,
        a_number=a,
        p_rank=f_iter,
        final_type=vt.v,
        eo_type=eo.mu,
        superspecial=(a == g),
        meets_ss_criterion=(g == 4 and vt.v[2] == 0),
    )


def mu_key(mu) -> str:
    """Canonical string for an EO index, e.g. "[4,2]" or "[]"."""
    mu = tuple(mu.mu if isinstance(mu, EOType) else mu)
    return "[" + ",".join(str(m) for m in mu) + "]"
