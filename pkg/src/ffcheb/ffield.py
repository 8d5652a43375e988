"""Exact arithmetic in F_p and F_{p^k}.

A field context encodes elements as integers in [0, q): the element with
residue-polynomial coefficients (c_0, ..., c_{k-1}) over F_p is stored as
sum c_i * p^i.  Multiplication runs through exp/log tables built from the
canonical primitive root, so every operation after construction is table
lookups and integer adds.

Canonical choices (they make contexts reproducible bit for bit):
  * modulus: the smallest monic irreducible of degree k, comparing coefficient
    sequences lexicographically from the top coefficient down to the constant
    term (equivalently, numeric order of the base-p encoding);
  * primitive root: the smallest encoded nonzero element of order q - 1.
"""

from __future__ import annotations

import functools
import math
from typing import Iterator

from .errors import (
    ContextMismatch,
    DegreeTooLarge,
    DivisionByZero,
    DNotDividingQMinus1,
    NotPrime,
    ZeroElement,
)

#: Largest permitted field size; interval enumeration dominates cost long
#: before this bound matters.  Mutable on purpose.
MAX_Q = 2**20

#: Add/negate lookup tables are built only below this size (q^2 entries).
_ADD_TABLE_MAX_Q = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- bootstrap polynomial arithmetic over F_p (only for modulus search) ------

def _fp_polymulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce by monic mod
    dm = len(mod) - 1
    for i in range(len(res) - 1, dm - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(dm):
                res[i - dm + j] = (res[i - dm + j] - c * mod[j]) % p
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


def _fp_pow_frobenius(poly, times, mod, p):
    """poly^(p^times) reduced mod `mod` over F_p."""
    out = poly
    for _ in range(times):
        acc, base, e = [1], out, p
        while e:
            if e & 1:
                acc = _fp_polymulmod(acc, base, mod, p)
            base = _fp_polymulmod(base, base, mod, p)
            e >>= 1
        out = acc
    return out


def _fp_sub_t(poly, p):
    """poly - T as a low-first list."""
    out = list(poly) + [0] * max(0, 2 - len(poly))
    out[1] = (out[1] - 1) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _fp_is_irreducible(mod, p):
    """Rabin test for a monic polynomial over F_p given as a low-first list."""
    k = len(mod) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    t = [0, 1]
    if _fp_sub_t(_fp_pow_frobenius(t, k, mod, p), p) != [0]:
        return False
    for ell in prime_factors(k):
        h = _fp_pow_frobenius(t, k // ell, mod, p)
        g = _fp_polygcd(_fp_sub_t(h, p), mod, p)
        if len(g) - 1 > 0:
            return False
    return True


def _fp_polygcd(a, b, p):
    a = list(a)
    b = list(b)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    while not (len(b) == 1 and b[0] == 0):
        a = _fp_polymod(a, b, p)
        a, b = b, a
    return a


def _fp_polymod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and not (len(a) == 1 and a[0] == 0):
        c = a[-1] * inv_lead % p
        sh = len(a) - 1 - db
        for j in range(db + 1):
            a[sh + j] = (a[sh + j] - c * b[j]) % p
        while len(a) > 1 and a[-1] == 0:
            a.pop()
    return a


def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over F_p (low-first tuple)."""
    for m in range(p**k):
        coeffs = [(m // p**i) % p for i in range(k)] + [1]
        if _fp_is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """Immutable context for F_{p^k}; safe to share across workers.

    Elements are plain ints in [0, q).  The wrapper class FieldElement rides
    on top for user-facing arithmetic; internal hot paths use the int methods
    directly.
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise DegreeTooLarge("extension degree must be >= 1")
        q = p**k
        if q > MAX_Q:
            raise DegreeTooLarge(f"q = {q} exceeds the configured bound {MAX_Q}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus: tuple[int, ...] | None = _canonical_modulus(p, k) if k > 1 else None
        self._build_tables()

    # -- construction helpers -------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Table-free product, used only while building the exp table."""
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        ac = [(a // p**i) % p for i in range(k)]
        bc = [(b // p**i) % p for i in range(k)]
        prod = _fp_polymulmod(ac, bc, list(self.modulus), p)
        return sum(c * p**i for i, c in enumerate(prod))

    def _raw_pow(self, a: int, e: int) -> int:
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return acc

    def _build_tables(self) -> None:
        q = self.q
        ells = prime_factors(q - 1)
        gen = None
        for a in range(2, q) if q > 2 else range(1, q):
            if all(self._raw_pow(a, (q - 1) // ell) != 1 for ell in ells):
                gen = a
                break
        if gen is None:  # q == 2
            gen = 1
        self.generator = gen
        exp = [1] * (2 * (q - 1) + 1)
        log = [0] * q
        cur = 1
        for i in range(1, q - 1):
            cur = self._raw_mul(cur, gen)
            exp[i] = cur
            log[cur] = i
        for i in range(q - 1, 2 * (q - 1) + 1):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log
        if self.k > 1 and q <= _ADD_TABLE_MAX_Q:
            self._add_tab = [
                [self._digit_add(a, b) for b in range(q)] for a in range(q)
            ]
            self._neg_tab = [self._digit_neg(a) for a in range(q)]
        else:
            self._add_tab = None
            self._neg_tab = None

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    # -- int-level arithmetic --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._digit_add(a, b)

    def _digit_neg(self, a: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += (-(a % p)) % p * mult
            a //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self._neg_tab is not None:
            return self._neg_tab[a]
        return self._digit_neg(a)

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        if self._add_tab is not None:
            return self._add_tab[a][self._neg_tab[b]]
        return self._digit_add(a, self._digit_neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("order of zero is undefined")
        return (self.q - 1) // math.gcd(self.q - 1, self._log[a])

    def frob(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        """Unique b with b^p = a (Frobenius is bijective)."""
        return self.pow(a, self.p ** (self.k - 1))

    # -- encoding ----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.k))

    def from_coeffs(self, cs) -> int:
        p = self.p
        if len(cs) > self.k:
            raise ContextMismatch("too many coefficients for this field")
        return sum((c % p) * p**i for i, c in enumerate(cs))

    def scalar(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_{p^k}."""
        return n % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def elem(self, v) -> "FieldElement":
        """Wrap an element: an encoded int (reduced mod p when k == 1), or a
        coefficient sequence."""
        if isinstance(v, FieldElement):
            if v.ctx is not self:
                raise ContextMismatch("element from a different field")
            return v
        if isinstance(v, int):
            if self.k == 1:
                return FieldElement(self, v % self.p)
            if not 0 <= v < self.q:
                raise ContextMismatch(f"encoded value {v} out of range for {self!r}")
            return FieldElement(self, v)
        return FieldElement(self, self.from_coeffs(v))

    def serialize_elem(self, a: int) -> str:
        return ",".join(str(c) for c in self.coeffs(a))

    def parse_elem(self, text: str) -> int:
        return self.from_coeffs([int(t) for t in text.split(",")])

    # -- misc ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"F_{self.q}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))


class FieldElement:
    """Element wrapper with operator overloading; `val` is the int encoding."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: Field, val: int):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("elements from different fields")
            return other.val
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.div(self.val, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.div(v, self.val))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.val, e))

    def order(self) -> int:
        return self.ctx.order(self.val)

    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.val)

    def serialize(self) -> str:
        return self.ctx.serialize_elem(self.val)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.val == other.val
        if isinstance(other, int):
            return self.val == self.ctx.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"{self.ctx!r}({self.serialize()})"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, k: int) -> Field:
    return Field(p, k)


def make_field(p: int, k: int = 1) -> Field:
    """Canonical field context for F_{p^k}; repeated calls share the object."""
    return _make_field(p, k)


def arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    """Dispatch form of +,-,*,/ used by the CLI layer."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def root_of_unity(ctx: Field, d: int) -> FieldElement:
    """zeta = g^((q-1)/d) for the canonical primitive root g; order exactly d."""
    if d < 1 or (ctx.q - 1) % d != 0:
        raise DNotDividingQMinus1(f"{d} does not divide q-1 = {ctx.q - 1}")
    return FieldElement(ctx, ctx._exp[(ctx.q - 1) // d])
