"""Curve models, validity checks, genus, and holomorphic differential bases.

Two model kinds are supported: hyperelliptic y^2 = f(x) with p odd, and
cyclic covers y^m = f_a(x) = prod (x - xi_i)^(a_i) of the projective line
with p not dividing m.  Differential forms are stored as u(x) * y^(-n) dx
with u a Laurent polynomial in x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from . import poly
from .errors import InvalidModelError, ParseError
from .gf import Field, make_field
from .poly import Laurent


@dataclass(frozen=True)
class HyperellipticModel:
    """y^2 = f(x), f monic of odd degree 2g+1, squarefree."""
    field: Field
    f: tuple[int, ...]

    @property
    def genus(self) -> int:
        return (len(self.f) - 2) // 2

    @property
    def has_zero_branch(self) -> bool:
        return self.f[0] == 0

    @property
    def is_normal_form(self) -> bool:
        # Degree 9 with a branch point at 0 and both end coefficients scaled to 1.
        return (len(self.f) == 10 and self.f[0] == 0
                and self.f[1] == 1 and self.f[9] == 1)

    def to_json(self) -> dict:
        return {"type": "hyperelliptic", "f": list(self.f)}


@dataclass(frozen=True)
class CyclicCoverModel:
    """y^m = prod_(i<N) (x - xi_i)^(a_i), branch points xi plus infinity."""
    field: Field
    m: int
    a: tuple[int, ...]
    xi: tuple[int, ...]

    @property
    def n_branch(self) -> int:
        return len(self.a)

    @property
    def genus(self) -> int:
        n = self.n_branch
        return 1 + ((n - 2) * self.m - n) // 2

    def to_json(self) -> dict:
        return {"type": "cyclic", "m": self.m, "a": list(self.a), "xi": list(self.xi)}


CurveModel = HyperellipticModel | CyclicCoverModel


@dataclass(frozen=True)
class DifferentialForm:
    """The form u(x) * y^(-n) dx."""
    n: int
    u: Laurent
    label: str = dc_field(default="", compare=False)

    def is_zero(self) -> bool:
        return self.u.is_zero()


def hyperelliptic(field: Field, coeffs) -> HyperellipticModel:
    f = poly.normalize(list(coeffs))
    if field.p == 2:
        raise InvalidModelError("hyperelliptic models need odd characteristic")
    d = poly.degree(f)
    if d < 3 or d % 2 == 0:
        raise InvalidModelError(f"f must have odd degree >= 3, got degree {d}")
    if f[-1] != 1:
        raise InvalidModelError("f must be monic")
    if any(c < 0 or c >= field.q for c in f):
        raise InvalidModelError("coefficient encoding out of range")
    if not poly.squarefree(field, f):
        raise InvalidModelError("f is not squarefree (discriminant is zero)")
    return HyperellipticModel(field, tuple(f + [0] * (d + 1 - len(f))))


def cyclic_cover(field: Field, m: int, a, xi) -> CyclicCoverModel:
    a = tuple(int(v) for v in a)
    xi = tuple(int(v) for v in xi)
    if m < 2:
        raise InvalidModelError("m must be >= 2")
    if field.p == 2 or m % field.p == 0:
        raise InvalidModelError(f"p = {field.p} must be odd and prime to m = {m}")
    n = len(a)
    if n < 3:
        raise InvalidModelError("need at least 3 branch points")
    if len(xi) != n - 1:
        raise InvalidModelError(f"expected {n - 1} finite branch points, got {len(xi)}")
    if any(v < 1 for v in a):
        raise InvalidModelError("monodromy entries must be positive")
    if sum(a) % m != 0:
        raise InvalidModelError("monodromy entries must sum to 0 mod m")
    for v in a:
        if math.gcd(v, m) != 1:
            raise InvalidModelError(f"gcd({v}, {m}) != 1 in monodromy vector")
    if any(v < 0 or v >= field.q for v in xi):
        raise InvalidModelError("branch point encoding out of range")
    if len(set(xi)) != len(xi):
        raise InvalidModelError("branch points must be pairwise distinct")
    if xi[0] != 0:
        raise InvalidModelError("the first branch point must be 0")
    return CyclicCoverModel(field, m, a, xi)


def genus(model: CurveModel) -> int:
    return model.genus


def cover_degree(model: CurveModel) -> int:
    return 2 if isinstance(model, HyperellipticModel) else model.m


def b_exponent(m: int, a_i: int, n: int) -> int:
    return (n * a_i) // m


def f_poly(model: CurveModel) -> list[int]:
    """The right-hand side f(x) (for cyclic models, expanded from the roots)."""
    if isinstance(model, HyperellipticModel):
        return list(model.f)
    F = model.field
    out = [1]
    for a_i, xi_i in zip(model.a, model.xi):
        lin = [F.neg(xi_i), 1]
        for _ in range(a_i):
            out = poly.mul(F, out, lin)
    return out


def s_poly(model: CurveModel, n: int) -> list[int]:
    """prod (x - xi_i)^(b(i,n)); identically 1 for hyperelliptic models."""
    if isinstance(model, HyperellipticModel):
        return [1]
    F = model.field
    out = [1]
    for a_i, xi_i in zip(model.a, model.xi):
        e = b_exponent(model.m, a_i, n)
        if e:
            out = poly.mul(F, out, poly.pow_poly(F, [F.neg(xi_i), 1], e))
    return out


def t_poly(model: CurveModel, n: int) -> list[int]:
    """prod (x - xi_i)^(a_i - b(i,n) - 1); identically 1 for hyperelliptic models."""
    if isinstance(model, HyperellipticModel):
        return [1]
    F = model.field
    out = [1]
    for a_i, xi_i in zip(model.a, model.xi):
        e = a_i - b_exponent(model.m, a_i, n) - 1
        if e:
            out = poly.mul(F, out, poly.pow_poly(F, [F.neg(xi_i), 1], e))
    return out


def eigenspace_dims(model: CurveModel) -> list[int]:
    """dim of the zeta^n-eigenspace of holomorphic differentials, n = 1..m-1.

    Computed from d_n = -1 + sum_i frac(n*a_i/m) over all N branch points.
    Hyperelliptic models count as m = 2 with all monodromy entries 1.
    """
    if isinstance(model, HyperellipticModel):
        return [model.genus]
    m = model.m
    dims = []
    for n in range(1, m):
        total = sum((n * a_i) % m for a_i in model.a)
        assert total % m == 0
        dims.append(total // m - 1)
    return dims


def holomorphic_basis(model: CurveModel) -> list[DifferentialForm]:
    """Ordered basis of holomorphic differentials.

    Hyperelliptic: x^l / y dx for l = 0..g-1.  Cyclic: for each n ascending,
    x^l * s_n(x) / y^n dx for l = 0..d_n - 1.  This ordering is the contract
    for every matrix downstream.
    """
    F = model.field
    if isinstance(model, HyperellipticModel):
        g = model.genus
        return [DifferentialForm(1, poly.laurent(l, [1]), label=f"omega_{l}")
                for l in range(g)]
    dims = eigenspace_dims(model)
    out = []
    for n in range(1, model.m):
        d_n = dims[n - 1]
        if d_n <= 0:
            continue
        s_n = poly.laurent_from_poly(s_poly(model, n))
        for l in range(d_n):
            u = poly.laurent_shift(s_n, l)
            out.append(DifferentialForm(n, u, label=f"omega_{n}_{l}"))
    assert len(out) == model.genus
    return out


def branch_order_bound(model: CyclicCoverModel, n: int) -> list[int]:
    """Vanishing order m*frac(n*a_i/m) - 1 of t(x)/y^(m-n) dx at each finite
    branch point; nonnegative for every basis index n by gcd(a_i, m) = 1."""
    return [(n * a_i) % model.m - 1 for a_i in model.a[:-1]]


def splitting_degree(F: Field, f: list[int]) -> int:
    """Least d with f splitting into linear factors over F_{q^d} (f squarefree).

    f splits over F_{q^d} iff x^(q^d) = x mod every irreducible factor, i.e.
    for squarefree f iff x^(q^d) = x mod f.
    """
    xq = _powmod_x(F, f, F.q)
    cur = xq
    for d in range(1, 129):
        if cur == [0, 1]:
            return d
        cur = _compose_mod(F, cur, xq, f)
    raise AssertionError("splitting degree search ran away")


def _powmod_x(F: Field, f: list[int], e: int) -> list[int]:
    """x^e mod f."""
    result = poly.quotient_remainder(F, [1], f)[1]
    base = poly.quotient_remainder(F, [0, 1], f)[1]
    while e:
        if e & 1:
            result = poly.quotient_remainder(F, poly.mul(F, result, base), f)[1]
        e >>= 1
        if e:
            base = poly.quotient_remainder(F, poly.mul(F, base, base), f)[1]
    return result


def _compose_mod(F: Field, g: list[int], h: list[int], f: list[int]) -> list[int]:
    """g(h(x)) mod f by Horner."""
    acc: list[int] = []
    for c in reversed(g):
        acc = poly.quotient_remainder(F, poly.mul(F, acc, h), f)[1]
        acc = poly.add(F, acc, [c])
    return acc


def hyper_to_cyclic(model: HyperellipticModel) -> CyclicCoverModel:
    """Rewrite y^2 = f as a cyclic cover using the roots of f.

    Requires f to split into distinct linear factors over the model's field
    with f(0) = 0; otherwise reports the extension degree that would be
    needed.
    """
    F = model.field
    f = list(model.f)
    if f[0] != 0:
        raise InvalidModelError("hyper_to_cyclic needs a branch point at 0")
    rts = poly.roots(F, f)
    if len(rts) != poly.degree(f):
        d = splitting_degree(F, f)
        raise InvalidModelError(
            f"f does not split over F_{F.q}; needs extension degree {F.k * d} over F_{F.p}")
    xi = [0] + sorted(r for r in rts if r != 0)
    n = len(xi) + 1
    return cyclic_cover(F, 2, (1,) * n, tuple(xi))


# ---------------------------------------------------------------------------
# Text grammar for the CLI:
#   hyper p=3 k=2 f=[0,1,1,0,0,0,0,0,0,1]
#   cyclic p=7 k=2 m=5 a=[1,1,1,2] xi=[0,1,9]
# Values are integer encodings; lists are ascending coefficients.
# ---------------------------------------------------------------------------

def _parse_value(text: str):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated list: {text}")
        body = text[1:-1].strip()
        if not body:
            return []
        try:
            return [int(v) for v in body.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad list entry in {text}") from exc
    try:
        return int(text)
    except ValueError as exc:
        raise ParseError(f"expected an integer, got {text!r}") from exc


def parse_curve_spec(tokens: list[str]) -> CurveModel:
    if not tokens:
        raise ParseError("empty curve description")
    kind = tokens[0]
    if kind not in ("hyper", "cyclic"):
        raise ParseError(f"unknown curve kind {kind!r} (expected hyper or cyclic)")
    kv = {}
    for tok in tokens[1:]:
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}")
        key, _, val = tok.partition("=")
        if key in kv:
            raise ParseError(f"duplicate key {key!r}")
        kv[key] = _parse_value(val)
    required = {"hyper": {"p", "k", "f"}, "cyclic": {"p", "k", "m", "a", "xi"}}[kind]
    missing = required - kv.keys()
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    extra = kv.keys() - required
    if extra:
        raise ParseError(f"unknown keys: {sorted(extra)}")
    try:
        field = make_field(int(kv["p"]), int(kv["k"]))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if kind == "hyper":
        if not isinstance(kv["f"], list):
            raise ParseError("f must be a coefficient list")
        return hyperelliptic(field, kv["f"])
    if not isinstance(kv["a"], list) or not isinstance(kv["xi"], list):
        raise ParseError("a and xi must be lists")
    return cyclic_cover(field, int(kv["m"]), kv["a"], kv["xi"])
