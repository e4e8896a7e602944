"""Dense univariate and Laurent polynomial arithmetic over a Field.

Polynomials are ascending-degree lists of element encodings with no trailing
zeros ([] is the zero polynomial).  All functions take the field first; the
degrees handled here stay small (<= 45), so everything is plain dense
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field


def normalize(coeffs) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(f: list[int]) -> int:
    """Degree, with deg 0 = -1."""
    return len(f) - 1


def is_zero(f: list[int]) -> bool:
    return not f


def constant(c: int) -> list[int]:
    return [c] if c else []


def x_power(j: int, c: int = 1) -> list[int]:
    return [0] * j + [c] if c else []


def add(F: Field, f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return normalize(out)


def neg(F: Field, f: list[int]) -> list[int]:
    return [F.neg(c) for c in f]


def sub(F: Field, f: list[int], g: list[int]) -> list[int]:
    return add(F, f, neg(F, g))


def scalar_mul(F: Field, c: int, f: list[int]) -> list[int]:
    if c == 0:
        return []
    return normalize(F.mul(c, a) for a in f)


def mul(F: Field, f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    fmul, fadd = F.mul, F.add
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = fadd(out[i + j], fmul(a, b))
    return normalize(out)


def pow_poly(F: Field, f: list[int], n: int) -> list[int]:
    result = [1]
    base = f
    while n:
        if n & 1:
            result = mul(F, result, base)
        n >>= 1
        if n:
            base = mul(F, base, base)
    return result


def quotient_remainder(F: Field, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f)
    dg = degree(g)
    lg_inv = F.inv(g[-1])
    q = [0] * max(0, len(f) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = F.mul(c, lg_inv)
            q[i - dg] = c
            for j, b in enumerate(g):
                if b:
                    r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, b))
    return normalize(q), normalize(r)


def gcd(F: Field, f: list[int], g: list[int]) -> list[int]:
    """Monic gcd."""
    a, b = normalize(f), normalize(g)
    while b:
        a, b = b, quotient_remainder(F, a, b)[1]
    if a:
        a = scalar_mul(F, F.inv(a[-1]), a)
    return a


def derivative(F: Field, f: list[int]) -> list[int]:
    return normalize(F.smul(c, i) for i, c in enumerate(f) if i)  # drops the constant


def evaluate(F: Field, f: list[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def roots(F: Field, f: list[int]) -> list[int]:
    """Roots in F by brute scan, ascending encoding, without multiplicity."""
    return [x for x in F.elements() if evaluate(F, f, x) == 0]


def resultant(F: Field, f: list[int], g: list[int]) -> int:
    """Res(f, g) at the actual degrees, by the Euclidean recursion.

    For monic f this coincides with the Sylvester determinant at any formal
    degree of g, since the padding correction is a power of lc(f) = 1.
    """
    a, b = normalize(f), normalize(g)
    if not a or not b:
        return 0
    acc = 1
    if degree(a) < degree(b):
        if (degree(a) * degree(b)) % 2:
            acc = F.neg(acc)
        a, b = b, a
    while degree(b) > 0:
        r = quotient_remainder(F, a, b)[1]
        if not r:
            return 0
        if (degree(a) * degree(b)) % 2:
            acc = F.neg(acc)
        acc = F.mul(acc, F.pow(b[-1], degree(a) - degree(r)))
        a, b = b, r
    return F.mul(acc, F.pow(b[0], degree(a)))


def discriminant(F: Field, f: list[int]) -> int:
    """disc(f) = (-1)^(d(d-1)/2) * Res(f, f') for monic f, f' at formal degree d-1."""
    f = normalize(f)
    d = degree(f)
    if d < 2:
        raise ValueError("discriminant needs deg f >= 2")
    if f[-1] != 1:
        raise ValueError("discriminant requires monic input")
    res = resultant(F, f, derivative(F, f))
    if (d * (d - 1) // 2) % 2:
        res = F.neg(res)
    return res


def squarefree(F: Field, f: list[int]) -> bool:
    """True iff f has no repeated roots; a vanishing derivative (p-th power)
    counts as not squarefree."""
    f = normalize(f)
    if not f:
        raise ValueError("squarefree is undefined for the zero polynomial")
    fp = derivative(F, f)
    if not fp:
        return False
    return gcd(F, f, fp) == [1]


# ---------------------------------------------------------------------------
# Laurent polynomials: a dense polynomial shifted by a (possibly negative)
# lowest exponent.  Normalized so coeffs[0] != 0 unless zero.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Laurent:
    offset: int
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    def min_exp(self) -> int:
        return self.offset

    def max_exp(self) -> int:
        return self.offset + len(self.coeffs) - 1


def laurent(offset: int, coeffs) -> Laurent:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    lead = 0
    while lead < len(cs) and cs[lead] == 0:
        lead += 1
    if lead == len(cs):
        return Laurent(0, ())
    return Laurent(offset + lead, tuple(cs[lead:]))


def laurent_from_poly(f: list[int]) -> Laurent:
    return laurent(0, f)


def laurent_to_poly(u: Laurent) -> list[int]:
    if u.is_zero():
        return []
    if u.offset < 0:
        raise ValueError("Laurent polynomial has a pole; not a polynomial")
    return [0] * u.offset + list(u.coeffs)


def laurent_shift(u: Laurent, j: int) -> Laurent:
    if u.is_zero():
        return u
    return Laurent(u.offset + j, u.coeffs)


def laurent_scale(F: Field, c: int, u: Laurent) -> Laurent:
    if c == 0 or u.is_zero():
        return Laurent(0, ())
    return laurent(u.offset, (F.mul(c, a) for a in u.coeffs))


def laurent_neg(F: Field, u: Laurent) -> Laurent:
    return Laurent(u.offset, tuple(F.neg(c) for c in u.coeffs))


def laurent_add(F: Field, u: Laurent, v: Laurent) -> Laurent:
    if u.is_zero():
        return v
    if v.is_zero():
        return u
    lo = min(u.offset, v.offset)
    hi = max(u.max_exp(), v.max_exp())
    out = [0] * (hi - lo + 1)
    for e, c in u.terms():
        out[e - lo] = c
    for e, c in v.terms():
        out[e - lo] = F.add(out[e - lo], c)
    return laurent(lo, out)


def laurent_mul(F: Field, u: Laurent, v: Laurent) -> Laurent:
    if u.is_zero() or v.is_zero():
        return Laurent(0, ())
    prod = mul(F, list(u.coeffs), list(v.coeffs))
    return laurent(u.offset + v.offset, prod)


def laurent_mul_poly(F: Field, u: Laurent, f: list[int]) -> Laurent:
    return laurent_mul(F, u, laurent_from_poly(f))
