"""Exact arithmetic in F_p and F_{p^k} for small odd characteristic.

A field is fixed by the pair (p, k).  The modulus of F_{p^k} is chosen
canonically as the lexicographically least monic irreducible polynomial of
degree k under the integer encoding sum(c_i * p^i), so results are
bit-reproducible across runs and machines without external polynomial tables.

Elements travel as plain integer encodings 0 <= e < p**k; all Field methods
take and return ints.  decode()/encode() translate between encodings and
coefficient vectors when a caller needs the digits themselves.
"""

from __future__ import annotations

import functools

# Full operation tables are built lazily for fields up to this size; larger
# fields fall back to per-operation coefficient arithmetic.
_TABLE_MAX_Q = 1024

_MAX_P = 64
_MAX_K = 12
_WORD_MAX = 1 << 63


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# F_p[x] helpers used only for modulus selection.  Coefficient lists are
# ascending-degree lists of ints in [0, p).
# ---------------------------------------------------------------------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    k = len(mod) - 1
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        prod[i] = 0
    del prod[k:]
    return _fp_trim(prod)


def _fp_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    b = list(base)
    while e:
        if e & 1:
            result = _fp_mulmod(result, b, mod, p)
        e >>= 1
        if e:
            b = _fp_mulmod(b, b, mod, p)
    return result


def _fp_is_irreducible(mod: list[int], p: int, k: int) -> bool:
    """Monic degree-k modulus is irreducible iff x^(p^k) = x and
    x^(p^(k/l)) != x mod modulus for every prime l | k."""
    x = [0, 1]
    frob_iterates = {}
    r = x
    for j in range(1, k + 1):
        r = _fp_powmod(r, p, mod, p)
        frob_iterates[j] = r
    if frob_iterates[k] != x:
        return False
    for ell in prime_factors(k):
        if frob_iterates[k // ell] == x:
            return False
    return True


class Field:
    """F_{p^k} with elements handled as integer encodings.

    Immutable after construction; operation tables are cached lazily and do
    not affect observable behaviour, so instances are safe to share across
    threads.  Pickling round-trips through make_field, keeping the canonical
    singleton per (p, k).
    """

    __slots__ = ("p", "k", "q", "modulus", "_mul_t", "_add_t", "_sub_t",
                 "_inv_t", "_root_t", "_frob_t", "_neg_t", "_prim")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus
        self._mul_t = None
        self._add_t = None
        self._sub_t = None
        self._inv_t = None
        self._root_t = None
        self._frob_t = None
        self._neg_t = None
        self._prim = None

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k})"

    # -- encodings ---------------------------------------------------------

    def decode(self, e: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            e, r = divmod(e, p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs) -> int:
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + c % self.p
        return e

    def elements(self):
        return range(self.q)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        t = self._add_t
        if t is not None:
            return t[a * self.q + b]
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self.decode(a), self.decode(b)
        return self.encode((x + y) % p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        t = self._neg_t
        if t is not None:
            return t[a]
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return self.encode((-x) % p for x in self.decode(a))

    def sub(self, a: int, b: int) -> int:
        t = self._sub_t
        if t is not None:
            return t[a * self.q + b]
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        t = self._mul_t
        if t is not None:
            return t[a * self.q + b]
        return self._mul_generic(a, b)

    def _mul_generic(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        if a == 0 or b == 0:
            return 0
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * mod[j]
        return self.encode(c % p for c in prod[:k])

    def smul(self, a: int, n: int) -> int:
        """Multiply by the prime-field scalar n (an ordinary integer)."""
        return self.mul(a, n % self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv() explicitly")
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.q}")
        t = self._inv_t
        if t is not None:
            return t[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- Frobenius and p-th roots -------------------------------------------

    def frobenius(self, a: int) -> int:
        if self.k == 1:
            return a
        t = self._frob_t
        if t is not None:
            return t[a]
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        """The unique y with y^p = a, i.e. a^(p^(k-1))."""
        if self.k == 1:
            return a
        t = self._root_t
        if t is not None:
            return t[a]
        return self.pow(a, self.p ** (self.k - 1))

    # -- multiplicative structure -------------------------------------------

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        order = n
        for ell in prime_factors(n):
            while order % ell == 0 and self.pow(a, order // ell) == 1:
                order //= ell
        return order

    def primitive_element(self) -> int:
        """Least encoding with multiplicative order q-1."""
        if self._prim is not None:
            return self._prim
        n = self.q - 1
        ells = prime_factors(n)
        for a in range(1, self.q):
            if all(self.pow(a, n // ell) != 1 for ell in ells):
                self._prim = a
                return a
        raise AssertionError("no primitive element found")

    def primitive_elements(self) -> list[int]:
        n = self.q - 1
        ells = prime_factors(n)
        return [a for a in range(1, self.q)
                if all(self.pow(a, n // ell) != 1 for ell in ells)]

    # -- subfields ------------------------------------------------------------

    def in_prime_field(self, a: int) -> bool:
        return self.frobenius(a) == a

    def in_subfield(self, a: int, d: int) -> bool:
        """Membership in the subfield F_{p^d}; requires d | k."""
        if self.k % d != 0:
            raise ValueError(f"{d} does not divide {self.k}")
        return self.pow(a, self.p ** d) == a

    # -- tables ---------------------------------------------------------------

    def ensure_tables(self) -> bool:
        """Build O(q^2) op tables for small fields; returns True if present."""
        if self._mul_t is not None:
            return True
        if self.q > _TABLE_MAX_Q:
            return False
        q, p = self.q, self.p
        dec = [self.decode(e) for e in range(q)]
        neg_t = [self.encode((-x) % p for x in dec[a]) for a in range(q)]
        add_t = [0] * (q * q)
        for a in range(q):
            da = dec[a]
            row = a * q
            for b in range(a, q):
                s = self.encode((x + y) % p for x, y in zip(da, dec[b]))
                add_t[row + b] = s
                add_t[b * q + a] = s
        sub_t = [0] * (q * q)
        for a in range(q):
            row = a * q
            for b in range(q):
                sub_t[row + b] = add_t[row + neg_t[b]]
        mul_t = [0] * (q * q)
        inv_t = [0] * q
        for a in range(1, q):
            row = a * q
            for b in range(a, q):
                m = self._mul_generic(a, b)
                mul_t[row + b] = m
                mul_t[b * q + a] = m
                if m == 1:
                    inv_t[a] = b
                    inv_t[b] = a
        self._neg_t = neg_t
        self._add_t = add_t
        self._sub_t = sub_t
        self._mul_t = mul_t
        self._inv_t = inv_t
        self._frob_t = [self.pow(a, p) for a in range(q)]
        self._root_t = [self.pow(a, p ** (self.k - 1)) for a in range(q)]
        return True

    def tables(self):
        """(mul, add, inv, pth_root) flat tables, or None if the field is too big."""
        if not self.ensure_tables():
            return None
        return self._mul_t, self._add_t, self._inv_t, self._root_t

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> Field:
    """Canonical F_{p^k}; deterministic in (p, k) across runs and platforms."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p < 3 or p > _MAX_P:
        raise ValueError(f"p must satisfy 3 <= p <= {_MAX_P}, got {p}")
    if not isinstance(k, int) or k < 1 or k > _MAX_K:
        raise ValueError(f"k must satisfy 1 <= k <= {_MAX_K}, got {k}")
    if p ** k >= _WORD_MAX:
        raise ValueError(f"p**k does not fit a native word: {p}**{k}")
    if k == 1:
        # Degenerate modulus x; unused by prime-field arithmetic.
        return Field(p, 1, (0, 1))
    for e in range(p ** k):
        low = []
        t = e
        for _ in range(k):
            t, r = divmod(t, p)
            low.append(r)
        mod = low + [1]
        if _fp_is_irreducible(mod, p, k):
            return Field(p, k, tuple(mod))
    raise AssertionError("no irreducible modulus found")


def embed_map(src: Field, dst: Field) -> list[int]:
    """Encoding table for the canonical embedding F_{p^k} -> F_{p^K}, k | K.

    The image of the generator is the least root of src.modulus in dst, so
    the embedding is deterministic.
    """
    if src.p != dst.p:
        raise ValueError("characteristic mismatch")
    if dst.k % src.k != 0:
        raise ValueError(f"no embedding: {src.k} does not divide {dst.k}")
    if src.k == 1:
        return list(range(src.p))
    mod = src.modulus
    root = None
    for e in range(dst.q):
        acc = 0
        power = 1
        for c in mod:
            if c:
                acc = dst.add(acc, dst.smul(power, c))
            power = dst.mul(power, e)
        if acc == 0:
            root = e
            break
    if root is None:
        raise AssertionError("modulus has no root in the larger field")
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], root))
    table = []
    for e in range(src.q):
        acc = 0
        for digit, rp in zip(src.decode(e), powers):
            if digit:
                acc = dst.add(acc, dst.smul(rp, digit))
        table.append(acc)
    return table
