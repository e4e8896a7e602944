"""Regression rows pinning the library against known closed-form values.

Each row recomputes a published-style fact from scratch: discriminants of
specific genus-4 models, the coefficient closed form of the Cartier-Manin
matrix in characteristic 3, the eight Verschiebung images on the a-number-2
family, the classified Ekedahl-Oort indices of the witness curves, and the
quick cyclic-cover facts.  Rows that depend on an unspecified primitive field
element are checked against every primitive candidate and pass if any
Galois-consistent choice matches (the matching choice is reported).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import poly
from .cartier import cartier_manin, matrix_rank
from .curve import cyclic_cover, f_poly, hyperelliptic
from .derham import build_basis, verschiebung
from .eo import classify
from .errors import InvalidModelError
from .gf import make_field
from .survey import FAMILIES

DEFAULT_SEED = 20250809


@dataclass
class RowResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _hyper_a2(F, a3, a4, a6, a7):
    return hyperelliptic(F, [0, 1, 0, a3, a4, 0, a6, a7, 0, 1])


def _row(name):
    def wrap(fn):
        fn._row_name = name
        _ROWS.append(fn)
        return fn
    return wrap


_ROWS: list = []


@_row("cm-matrix-closed-form-100")
def _cm_closed_form(rng) -> tuple[bool, str]:
    """Generic Cartier path equals H[i][j] = f_(3i+2-j)^(1/3) on random
    degree-9 normal forms over F_27."""
    F = make_field(3, 3)
    checked = 0
    while checked < 100:
        coeffs = [0, 1] + [rng.randrange(27) for _ in range(7)] + [1]
        try:
            model = hyperelliptic(F, coeffs)
        except InvalidModelError:
            continue
        closed = tuple(tuple(F.pth_root(coeffs[3 * i + 2 - j] if 0 <= 3 * i + 2 - j <= 9 else 0)
                             for j in range(4)) for i in range(4))
        if cartier_manin(model, generic=True) != closed:
            return False, f"mismatch at {coeffs}"
        checked += 1
    return True, "100 random curves, exact equality"


@_row("disc-ordinary-witness")
def _disc_ordinary(rng) -> tuple[bool, str]:
    """disc(x^9 + t x^5 + x) = 2 over F_9 for a primitive t."""
    F = make_field(3, 2)
    hits = [t for t in F.primitive_elements()
            if poly.discriminant(F, [0, 1, 0, 0, 0, t, 0, 0, 0, 1]) == 2]
    return bool(hits), f"matching primitive elements: {hits}"


@_row("disc-rank3-witness")
def _disc_rank3(rng) -> tuple[bool, str]:
    """disc = 2 at a2 = a7 = a8 = 1 (rank-3 witness)."""
    F = make_field(3, 1)
    d = poly.discriminant(F, [0, 1, 1, 0, 0, 0, 0, 1, 1, 1])
    return d == 2, f"disc = {d}"


@_row("disc-rank2-witness")
def _disc_rank2(rng) -> tuple[bool, str]:
    """disc = 1 at a3 = 1, a7 = 2 (rank-2 witness)."""
    F = make_field(3, 1)
    d = poly.discriminant(F, [0, 1, 0, 1, 0, 0, 0, 2, 0, 1])
    return d == 1, f"disc = {d}"


@_row("disc-x9-x7-x")
def _disc_x9x7x(rng) -> tuple[bool, str]:
    F = make_field(3, 1)
    d = poly.discriminant(F, [0, 1, 0, 0, 0, 0, 0, 1, 0, 1])
    return d == 1, f"disc = {d}"


@_row("disc-identity-32-family-50")
def _disc_identity_e8(rng) -> tuple[bool, str]:
    """disc = (a4 alpha + a7 alpha^2 + 1)^9 on the [3,2]-locus shape."""
    F = make_field(3, 3)
    fam = FAMILIES["H4E8"]
    for _ in range(50):
        a7, al, a4 = (rng.randrange(27) for _ in range(3))
        model, _ = fam.builder(F, (a7, al, a4))
        base = F.add(F.add(F.mul(a4, al), F.mul(a7, F.mul(al, al))), 1)
        expect = F.pow(base, 9)
        got = poly.discriminant(F, [0, 1, 0, F.mul(F.pow(al, 3), a4), a4, 0,
                                    F.mul(F.pow(al, 3), a7), a7, 0, 1])
        if got != expect:
            return False, f"mismatch at (a7, alpha, a4) = {(a7, al, a4)}"
    return True, "50 random tuples, exact equality"


@_row("disc-identity-41-family-50")
def _disc_identity_e10(rng) -> tuple[bool, str]:
    """disc = (2 alpha^10 a7 + alpha^2 a7 + 1)^9 on the [4,1]-locus shape.

    The ninth power makes this consistent with the v^21 witness value and
    with the sibling identity on the [3,2] shape.
    """
    F = make_field(3, 3)
    for _ in range(50):
        a7, al = rng.randrange(27), rng.randrange(27)
        a6 = F.mul(F.pow(al, 3), a7)
        a4 = F.neg(F.mul(F.pow(al, 9), a7))
        a3 = F.neg(F.mul(F.pow(al, 12), a7))
        base = F.add(F.add(F.smul(F.mul(F.pow(al, 10), a7), 2),
                           F.mul(F.mul(al, al), a7)), 1)
        expect = F.pow(base, 9)
        got = poly.discriminant(F, [0, 1, 0, a3, a4, 0, a6, a7, 0, 1])
        if got != expect:
            return False, f"mismatch at (a7, alpha) = {(a7, al)}"
    return True, "50 random tuples, exact equality"


@_row("v-images-closed-form-200")
def _v_images(rng) -> tuple[bool, str]:
    """All eight Verschiebung images on the a-number-2 family match their
    closed forms, on random (a3, a4, a6, a7) over F_27."""
    F = make_field(3, 3)
    r = F.pth_root
    checked = 0
    while checked < 200:
        a3, a4, a6, a7 = (rng.randrange(27) for _ in range(4))
        try:
            model = _hyper_a2(F, a3, a4, a6, a7)
        except InvalidModelError:
            continue
        V = verschiebung(model, build_basis(model))
        col = lambda j: tuple(V[i][j] for i in range(8))
        zero = (0,) * 8
        mid = F.add(F.sub(1, r(F.mul(a3, a7))), r(F.mul(a4, a6)))
        expected = {
            0: zero,                                     # lambda_0
            1: (1, r(a4), r(a7), 0) + (0,) * 4,          # lambda_1
            2: (0, r(a3), r(a6), 1) + (0,) * 4,          # lambda_2
            3: zero,                                     # lambda_3
            4: (r(a3), r(a6), 1, 0) + (0,) * 4,          # gamma_1
            5: zero,                                     # gamma_2
            6: zero,                                     # gamma_3
            7: (r(a6), mid, r(a4), 0) + (0,) * 4,        # gamma_4
        }
        for j, want in expected.items():
            if col(j) != want:
                return False, f"column {j} mismatch at {(a3, a4, a6, a7)}"
        checked += 1
    return True, "200 random curves, eight images each, exact"


def _eo_pin(F, coeffs, mu):
    rep = classify(hyperelliptic(F, coeffs))
    return rep.eo_type == mu, f"eo_type = {list(rep.eo_type)}"


@_row("eo-[2,1]-witness")
def _eo_21(rng):
    return _eo_pin(make_field(3, 1), [0, 1, 0, 1, 0, 0, 0, 2, 0, 1], (2, 1))


@_row("eo-[3,1]-witness")
def _eo_31(rng):
    return _eo_pin(make_field(3, 1), [0, 1, 0, 0, 1, 0, 0, 0, 0, 1], (3, 1))


@_row("eo-[3,2]-witness")
def _eo_32(rng):
    # (a7, alpha, a4) = (2, 2, 1) on the [3,2]-locus shape
    F = make_field(3, 1)
    model, _ = FAMILIES["H4E8"].builder(F, (2, 2, 1))
    rep = classify(model)
    return rep.eo_type == (3, 2), f"eo_type = {list(rep.eo_type)}"


@_row("eo-[4,1]-witness-galois")
def _eo_41(rng):
    """(a7, alpha) = (v^10, v^9) gives [4,1] with disc = v^21, for some
    primitive v of F_27 (the Galois-orbit rule)."""
    F = make_field(3, 3)
    hits = []
    for v in F.primitive_elements():
        a7 = F.pow(v, 10)
        al = F.pow(v, 9)
        model, _ = FAMILIES["H4E10"].builder(F, (a7, al))
        if model is None:
            continue
        d = poly.discriminant(F, list(model.f))
        if d == F.pow(v, 21) and classify(model).eo_type == (4, 1):
            hits.append(v)
    return bool(hits), f"matching primitive elements: {hits}"


@_row("eo-[4,2]-witness")
def _eo_42(rng):
    return _eo_pin(make_field(3, 1), [0, 1, 0, 0, 0, 0, 0, 1, 0, 1], (4, 2))


@_row("eo-[4,3]-witness")
def _eo_43(rng):
    return _eo_pin(make_field(3, 1), [0, 1, 0, 0, 0, 0, 0, 0, 0, 1], (4, 3))


@_row("eo-ordinary-witness")
def _eo_ordinary(rng):
    F = make_field(3, 2)
    t = F.primitive_element()
    return _eo_pin(F, [0, 1, 0, 0, 0, t, 0, 0, 0, 1], ())


@_row("cyclic-[4,2]-p7")
def _cyclic_42(rng):
    F = make_field(7, 2)
    xi = next(x for x in F.elements() if x not in (0, 1) and not F.in_prime_field(x))
    rep = classify(cyclic_cover(F, 5, (1, 1, 1, 2), (0, 1, xi)))
    return rep.eo_type == (4, 2), f"eo_type = {list(rep.eo_type)}"


@_row("cyclic-[4,3]-p13")
def _cyclic_43(rng):
    F = make_field(13, 1)
    rep = classify(cyclic_cover(F, 5, (1, 1, 1, 2), (0, 1, 12)))
    ok = rep.eo_type == (4, 3) and rep.meets_ss_criterion
    return ok, f"eo_type = {list(rep.eo_type)}, v(2) = {rep.final_type[2]}"


@_row("cyclic-superspecial-p19")
def _cyclic_ss(rng):
    F = make_field(19, 1)
    rep = classify(cyclic_cover(F, 5, (1, 1, 1, 2), (0, 1, 18)))
    return rep.superspecial, f"a = {rep.a_number}"


@_row("triple-cover-superspecial-p5")
def _kudo_p5(rng):
    F = make_field(5, 2)
    xi = next(x for x in F.elements() if x and F.element_order(x) == 8)
    model, _ = FAMILIES["KUDO"].builder(F, (xi,))
    rep = classify(model)
    ok = rep.superspecial and f_poly(model) == [0, 1, 0, 0, 0, 1]
    return ok, f"a = {rep.a_number}, branch product x^5+x: {f_poly(model) == [0, 1, 0, 0, 0, 1]}"


def run_all(seed: int = DEFAULT_SEED) -> list[RowResult]:
    rng = random.Random(seed)
    results = []
    for fn in _ROWS:
        passed, detail = fn(rng)
        results.append(RowResult(fn._row_name, bool(passed), detail))
    return results
