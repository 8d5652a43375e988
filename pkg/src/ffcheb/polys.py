"""Polynomials over F_q: arithmetic, factorization, and residue fields.

Coefficient sequences are tuples of int-encoded field elements, lowest degree
first, with no trailing zeros; the empty tuple is the zero polynomial.  The
module-level functions work on bare tuples (the hot path for interval
enumeration); the Poly class wraps them for the public API.

Factorization is squarefree decomposition (with p-th-power detection when the
derivative vanishes), then distinct-degree splitting, then randomized
equal-degree splitting; characteristic 2 uses the trace-map splitter.  The
randomized stage is seeded from (run seed, polynomial), so factoring is a pure
function and parallel sweeps are partition-independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    ConstantPolynomial,
    ContextMismatch,
    DivisionByZero,
    PoleAtPrime,
    ZeroPolynomial,
)
from .ffield import Field, FieldElement, make_field, prime_factors

Coeffs = tuple[int, ...]

# ---------------------------------------------------------------------------
# raw coefficient-tuple arithmetic


def pnorm(cs) -> Coeffs:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def pdeg(a: Coeffs) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(a) - 1


def padd(F: Field, a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    add = F.add
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return pnorm(out)


def pneg(F: Field, a: Coeffs) -> Coeffs:
    neg = F.neg
    return tuple(neg(c) for c in a)


def psub(F: Field, a: Coeffs, b: Coeffs) -> Coeffs:
    return padd(F, a, pneg(F, b))


def pmul(F: Field, a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    mul, add = F.mul, F.add
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return tuple(out)


def pscale(F: Field, a: Coeffs, c: int) -> Coeffs:
    if c == 0:
        return ()
    mul = F.mul
    return tuple(mul(x, c) for x in a)


def pdivmod(F: Field, a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), pnorm(a)
    rem = list(a)
    quo = [0] * (len(a) - db)
    inv_lead = F.inv(b[-1])
    mul, sub = F.mul, F.sub
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            c = mul(c, inv_lead)
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = sub(rem[i - db + j], mul(c, b[j]))
    return pnorm(quo), pnorm(rem)


def pmod(F: Field, a: Coeffs, b: Coeffs) -> Coeffs:
    return pdivmod(F, a, b)[1]


def pdiv(F: Field, a: Coeffs, b: Coeffs) -> Coeffs:
    return pdivmod(F, a, b)[0]


def pgcd(F: Field, a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, pmod(F, a, b)
    if a and a[-1] != 1:
        a = pscale(F, a, F.inv(a[-1]))
    return a


def pmonic(F: Field, a: Coeffs) -> tuple[int, Coeffs]:
    """(leading unit, monic part)."""
    if not a:
        raise ZeroPolynomial("the zero polynomial has no monic part")
    u = a[-1]
    if u == 1:
        return 1, a
    return u, pscale(F, a, F.inv(u))


def ppowmod(F: Field, base: Coeffs, e: int, mod: Coeffs) -> Coeffs:
    """base^e mod `mod`, with a table-local kernel for the inner squarings."""
    d = pdeg(mod)
    if d < 0:
        raise DivisionByZero("power modulo the zero polynomial")
    if d == 0:
        return ()
    base = pmod(F, base, mod)
    if e == 0:
        return (1,)
    if not base:
        return ()
    if d == 1 or e == 1:
        if d == 1:
            return (F.pow(base[0], e),)
        return base
    # reduction rows: T^(d+i) mod `mod`, i = 0..d-2, padded to length d
    r0 = list(pmod(F, (0,) * d + (1,), mod))
    r0 += [0] * (d - len(r0))
    rows = [r0]
    for _ in range(d - 2):
        prev = rows[-1]
        top = prev[d - 1]
        sh = [0] + prev[: d - 1]
        if top:
            sh = [F.add(sh[j], F.mul(top, r0[j])) for j in range(d)]
        rows.append(sh)
    a = list(base) + [0] * (d - len(base))
    if F.k == 1:
        out = _powmod_prime(F.p, a, e, rows, d)
    elif F._add_tab is not None:
        out = _powmod_tables(F, a, e, rows, d)
    else:
        out = _powmod_generic(F, a, e, rows, d)
    return pnorm(out)


def _powmod_prime(p: int, a: list[int], e: int, rows, d: int):
    w = 2 * d - 1

    def mulmod(x, y):
        prod = [0] * w
        for i in range(d):
            xi = x[i]
            if xi:
                for j in range(d):
                    yj = y[j]
                    if yj:
                        prod[i + j] += xi * yj
        out = prod[:d]
        for i in range(d - 1):
            c = prod[d + i] % p
            if c:
                ri = rows[i]
                for j in range(d):
                    rij = ri[j]
                    if rij:
                        out[j] += c * rij
        return [v % p for v in out]

    acc = None
    base = a
    while e:
        if e & 1:
            acc = base if acc is None else mulmod(acc, base)
        e >>= 1
        if e:
            base = mulmod(base, base)
    return acc


def _powmod_tables(F: Field, a: list[int], e: int, rows, d: int):
    exp, log, addt = F._exp, F._log, F._add_tab
    w = 2 * d - 1

    def mulmod(x, y):
        prod = [0] * w
        for i in range(d):
            xi = x[i]
            if xi:
                lxi = log[xi]
                for j in range(d):
                    yj = y[j]
                    if yj:
                        prod[i + j] = addt[prod[i + j]][exp[lxi + log[yj]]]
        out = prod[:d]
        for i in range(d - 1):
            c = prod[d + i]
            if c:
                lc = log[c]
                ri = rows[i]
                for j in range(d):
                    rij = ri[j]
                    if rij:
                        out[j] = addt[out[j]][exp[lc + log[rij]]]
        return out

    acc = None
    base = a
    while e:
        if e & 1:
            acc = base if acc is None else mulmod(acc, base)
        e >>= 1
        if e:
            base = mulmod(base, base)
    return acc


def _powmod_generic(F: Field, a: list[int], e: int, rows, d: int):
    add, mul = F.add, F.mul
    w = 2 * d - 1

    def mulmod(x, y):
        prod = [0] * w
        for i in range(d):
            xi = x[i]
            if xi:
                for j in range(d):
                    yj = y[j]
                    if yj:
                        prod[i + j] = add(prod[i + j], mul(xi, yj))
        out = prod[:d]
        for i in range(d - 1):
            c = prod[d + i]
            if c:
                ri = rows[i]
                for j in range(d):
                    rij = ri[j]
                    if rij:
                        out[j] = add(out[j], mul(c, rij))
        return out

    acc = None
    base = a
    while e:
        if e & 1:
            acc = base if acc is None else mulmod(acc, base)
        e >>= 1
        if e:
            base = mulmod(base, base)
    return acc


def pderiv(F: Field, a: Coeffs) -> Coeffs:
    mul = F.mul
    return pnorm(mul(c, F.scalar(i)) for i, c in enumerate(a) if i)


def peval(F: Field, a: Coeffs, x: int) -> int:
    acc = 0
    mul, add = F.mul, F.add
    for c in reversed(a):
        acc = add(mul(acc, x), c)
    return acc


def pth_root_poly(F: Field, a: Coeffs) -> Coeffs:
    """Inverse of m -> m^p for polynomials whose derivative vanishes."""
    p = F.p
    out = [0] * ((len(a) - 1) // p + 1)
    for i, c in enumerate(a):
        if c:
            assert i % p == 0, "polynomial is not a p-th power"
            out[i // p] = F.pth_root(c)
    return pnorm(out)


def canonical_key(a: Coeffs) -> tuple:
    """Sort key: degree, then coefficients from the top down."""
    return (len(a) - 1, tuple(reversed(a)))


# ---------------------------------------------------------------------------
# factorization


def _rand_poly(F: Field, max_deg: int, rng: random.Random) -> Coeffs:
    n = rng.randrange(F.q ** (max_deg + 1))
    cs = []
    for _ in range(max_deg + 1):
        cs.append(n % F.q)
        n //= F.q
    return pnorm(cs)


def _edf(F: Field, g: Coeffs, d: int, rng: random.Random) -> list[Coeffs]:
    """Split a squarefree product of degree-d primes into its primes."""
    if pdeg(g) == d:
        return [g]
    q = F.q
    one: Coeffs = (1,)
    while True:
        a = _rand_poly(F, pdeg(g) - 1, rng)
        if pdeg(a) < 1:
            continue
        if F.p == 2:
            # trace map to F_2 over the degree-(k*d) residue fields
            t = pmod(F, a, g)
            c = t
            for _ in range(F.k * d - 1):
                c = pmod(F, pmul(F, c, c), g)
                t = padd(F, t, c)
            h = pgcd(F, t, g)
        else:
            t = ppowmod(F, a, (q**d - 1) // 2, g)
            h = pgcd(F, psub(F, t, one), g)
        if 0 < pdeg(h) < pdeg(g):
            rest = pdiv(F, g, h)
            return _edf(F, h, d, rng) + _edf(F, rest, d, rng)


def _split_squarefree(F: Field, m: Coeffs, rng: random.Random) -> list[Coeffs]:
    """Distinct-degree then equal-degree splitting of a squarefree monic m."""
    out: list[Coeffs] = []
    if pdeg(m) <= 0:
        return out
    t: Coeffs = (0, 1)
    h = pmod(F, t, m)
    d = 0
    while pdeg(m) >= 2 * (d + 1):
        d += 1
        h = ppowmod(F, h, F.q, m)
        g = pgcd(F, psub(F, h, pmod(F, t, m)), m)
        if pdeg(g) > 0:
            out.extend(_edf(F, g, d, rng))
            m = pdiv(F, m, g)
            h = pmod(F, h, m)
    if pdeg(m) > 0:
        out.append(m)
    return out


def _factor_seed(F: Field, cs: Coeffs, seed: int) -> random.Random:
    fold = F.p * 31 + F.k
    for c in cs:
        fold = fold * F.q + c + 1
    return random.Random(fold ^ (seed * 0x9E3779B97F4A7C15))


def _factor_monic(F: Field, m: Coeffs, rng: random.Random) -> dict[Coeffs, int]:
    if pdeg(m) <= 0:
        return {}
    md = pderiv(F, m)
    if not md:
        root = pth_root_poly(F, m)
        return {P: e * F.p for P, e in _factor_monic(F, root, rng).items()}
    g = pgcd(F, m, md)
    if pdeg(g) == 0:
        return {P: 1 for P in _split_squarefree(F, m, rng)}
    out: dict[Coeffs, int] = {}
    rem = m
    s = pdiv(F, m, g)  # primes whose multiplicity is not divisible by p, once each
    for P in _split_squarefree(F, s, rng):
        e = 0
        while True:
            quo, r = pdivmod(F, rem, P)
            if r:
                break
            rem = quo
            e += 1
        out[P] = e
    if pdeg(rem) > 0:
        for P, e in _factor_monic(F, rem, rng).items():
            out[P] = e  # disjoint from `out` by construction
    return out


def factor_raw(F: Field, cs: Coeffs, seed: int = 0) -> tuple[int, tuple[tuple[Coeffs, int], ...]]:
    """(unit, sorted ((prime, multiplicity), ...)) for a nonzero polynomial."""
    if not cs:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit, m = pmonic(F, cs)
    rng = _factor_seed(F, cs, seed)
    fac = _factor_monic(F, m, rng)
    parts = tuple(sorted(fac.items(), key=lambda kv: canonical_key(kv[0])))
    return unit, parts


def is_irreducible_raw(F: Field, cs: Coeffs) -> bool:
    """True iff cs has no prime factor of degree <= deg/2 (distinct-degree
    prefix test; early-exits on the common case of a small factor)."""
    n = pdeg(cs)
    if n < 1:
        raise ConstantPolynomial("irreducibility is undefined for constants")
    if n == 1:
        return True
    tm = pmod(F, (0, 1), cs)
    h = tm
    for _ in range(n // 2):
        h = ppowmod(F, h, F.q, cs)
        if pdeg(pgcd(F, psub(F, h, tm), cs)) > 0:
            return False
    return True


def mobius(n: int) -> int:
    m = 1
    for f in prime_factors(n):
        if n % (f * f) == 0:
            return 0
        m = -m
    return m


def count_primes(ctx: Field, n: int) -> int:
    """pi_q(n): number of monic irreducibles of degree n (finite primes only)."""
    if n < 1:
        raise ConstantPolynomial("prime counting needs degree >= 1")
    q = ctx.q
    total = sum(mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def primes_of_degree(ctx: Field, n: int) -> list[Coeffs]:
    """All monic irreducibles of degree n, ascending in enumeration order.

    Cached on the field context; this is the backbone of the exact prime
    tallies, so the cache is shared by every cover over the same field.
    """
    cache = getattr(ctx, "_prime_cache", None)
    if cache is None:
        cache = ctx._prime_cache = {}
    if n in cache:
        return cache[n]
    q = ctx.q
    out = []
    if n == 1:
        out = [(ctx.neg(a), 1) for a in range(q)]
    else:
        for lower in range(q**n):
            cs = []
            m = lower
            for _ in range(n):
                cs.append(m % q)
                m //= q
            cs.append(1)
            f = tuple(cs)
            if is_irreducible_raw(ctx, f):
                out.append(f)
    cache[n] = out
    return out


# ---------------------------------------------------------------------------
# resultant and discriminant


def resultant_raw(F: Field, f: Coeffs, g: Coeffs) -> int:
    if not f or not g:
        return 0
    if pdeg(f) == 0 and pdeg(g) == 0:
        return 1
    res = 1
    while pdeg(g) > 0:
        r = pmod(F, f, g)
        if not r:
            return 0
        res = F.mul(res, F.pow(g[-1], pdeg(f) - pdeg(r)))
        if (pdeg(f) * pdeg(g)) % 2 == 1:
            res = F.neg(res)
        f, g = g, r
    return F.mul(res, F.pow(g[0], pdeg(f)))


def discriminant_raw(F: Field, f: Coeffs) -> int:
    n = pdeg(f)
    if n < 1:
        raise ConstantPolynomial("discriminant needs degree >= 1")
    r = resultant_raw(F, f, pderiv(F, f))
    if r == 0:
        return 0
    if (n * (n - 1) // 2) % 2 == 1:
        r = F.neg(r)
    return F.div(r, f[-1])


# ---------------------------------------------------------------------------
# Poly / Factorization / RationalFn


class Poly:
    """Dense polynomial over a field context; immutable and hashable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: Field, coeffs: Sequence = ()):
        self.ctx = ctx
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.ctx is not ctx:
                    raise ContextMismatch("coefficient from a different field")
                out.append(c.val)
            elif isinstance(c, int):
                out.append(c % ctx.p if ctx.k == 1 else c)
            else:
                out.append(ctx.from_coeffs(c))
        self.coeffs = pnorm(out)

    # ---- constructors

    @classmethod
    def from_int_coeffs(cls, ctx: Field, ints: Sequence[int]) -> "Poly":
        """Integer coefficients mapped through Z -> F_p (prime subfield)."""
        return cls(ctx, [ctx.scalar(c) for c in ints])

    @classmethod
    def x(cls, ctx: Field) -> "Poly":
        return cls(ctx, (0, 1))

    @classmethod
    def one(cls, ctx: Field) -> "Poly":
        return cls(ctx, (1,))

    @classmethod
    def zero(cls, ctx: Field) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def _raw(cls, ctx: Field, cs: Coeffs) -> "Poly":
        p = object.__new__(cls)
        p.ctx = ctx
        p.coeffs = cs
        return p

    # ---- basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElement(self.ctx, self.coeffs[-1])

    def monic(self) -> "Poly":
        _, m = pmonic(self.ctx, self.coeffs)
        return Poly._raw(self.ctx, m)

    # ---- arithmetic

    def _other(self, other) -> Coeffs:
        if isinstance(other, Poly):
            if other.ctx is not self.ctx:
                raise ContextMismatch("polynomials over different fields")
            return other.coeffs
        if isinstance(other, int):
            v = self.ctx.scalar(other)
            return (v,) if v else ()
        if isinstance(other, FieldElement):
            return (other.val,) if other.val else ()
        return NotImplemented

    def __add__(self, other):
        return Poly._raw(self.ctx, padd(self.ctx, self.coeffs, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Poly._raw(self.ctx, psub(self.ctx, self.coeffs, self._other(other)))

    def __rsub__(self, other):
        return Poly._raw(self.ctx, psub(self.ctx, self._other(other), self.coeffs))

    def __neg__(self):
        return Poly._raw(self.ctx, pneg(self.ctx, self.coeffs))

    def __mul__(self, other):
        return Poly._raw(self.ctx, pmul(self.ctx, self.coeffs, self._other(other)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = pdivmod(self.ctx, self.coeffs, self._other(other))
        return Poly._raw(self.ctx, q), Poly._raw(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        acc = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def gcd(self, other) -> "Poly":
        return Poly._raw(self.ctx, pgcd(self.ctx, self.coeffs, self._other(other)))

    def derivative(self) -> "Poly":
        return Poly._raw(self.ctx, pderiv(self.ctx, self.coeffs))

    def __call__(self, x) -> FieldElement:
        xv = x.val if isinstance(x, FieldElement) else self.ctx.elem(x).val
        return FieldElement(self.ctx, peval(self.ctx, self.coeffs, xv))

    # ---- factorization layer

    def factor(self, seed: int = 0) -> "Factorization":
        unit, parts = factor_raw(self.ctx, self.coeffs, seed)
        return Factorization(
            FieldElement(self.ctx, unit),
            tuple((Poly._raw(self.ctx, P), e) for P, e in parts),
        )

    def is_irreducible(self) -> bool:
        return is_irreducible_raw(self.ctx, self.coeffs)

    def is_squarefree(self) -> bool:
        d = pderiv(self.ctx, self.coeffs)
        return bool(d) and pdeg(pgcd(self.ctx, self.coeffs, d)) == 0

    def discriminant(self) -> FieldElement:
        return FieldElement(self.ctx, discriminant_raw(self.ctx, self.coeffs))

    def resultant(self, other) -> FieldElement:
        return FieldElement(self.ctx, resultant_raw(self.ctx, self.coeffs, self._other(other)))

    # ---- text formats

    def serialize(self) -> str:
        """Compact form [c0,c1,...]; extension-field coefficients in parens."""
        if self.ctx.k == 1:
            inner = ",".join(str(c) for c in self.coeffs)
        else:
            inner = ",".join(
                "(" + self.ctx.serialize_elem(c) + ")" for c in self.coeffs
            )
        return "[" + inner + "]"

    def text(self) -> str:
        """Readable form c0 + c1*T + ... + cn*T^n."""
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c) if self.ctx.k == 1 else "(" + self.ctx.serialize_elem(c) + ")"
            if i == 0:
                terms.append(cs)
            else:
                t = "T" if i == 1 else f"T^{i}"
                terms.append(t if c == 1 else f"{cs}*{t}")
        return " + ".join(terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Factorization:
    """unit * prod(prime^multiplicity), primes monic irreducible, sorted."""

    unit: FieldElement
    parts: tuple[tuple[Poly, int], ...]

    def product(self) -> Poly:
        ctx = self.unit.ctx
        acc = Poly(ctx, (self.unit.val,))
        for P, e in self.parts:
            acc = acc * P**e
        return acc

    def __str__(self) -> str:
        bits = []
        if self.unit.val != 1 or not self.parts:
            bits.append(
                str(self.unit.val)
                if self.unit.ctx.k == 1
                else "(" + self.unit.serialize() + ")"
            )
        for P, e in self.parts:
            s = f"({P.text()})"
            bits.append(s if e == 1 else f"{s}^{e}")
        return "".join(bits)


def factor(f: Poly, seed: int = 0) -> Factorization:
    return f.factor(seed)


def is_irreducible(f: Poly) -> bool:
    return f.is_irreducible()


def enumerate_monic(ctx: Field, n: int) -> Iterator[Poly]:
    """All monic polynomials of degree n, lowest coefficients varying fastest."""
    q = ctx.q
    for lower in range(q**n):
        cs = []
        m = lower
        for _ in range(n):
            cs.append(m % q)
            m //= q
        cs.append(1)
        yield Poly._raw(ctx, tuple(cs))


class RationalFn:
    """Reduced fraction of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        ctx = num.ctx
        if den is None:
            den = Poly.one(ctx)
        if den.ctx is not ctx:
            raise ContextMismatch("numerator and denominator over different fields")
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lc = den.leading()
        if lc.val != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self.num = num
        self.den = den

    @property
    def ctx(self) -> Field:
        return self.num.ctx

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFn)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return self.num.text()
        return f"({self.num.text()}) / ({self.den.text()})"


# ---------------------------------------------------------------------------
# residue fields


class ResidueField:
    """F_q[T]/(P) realized inside the canonical field with q^deg(P) elements.

    `t_image` is the chosen image of T (the smallest root of P in encoding
    order), and `embed` maps base-field elements in.  All choices are
    deterministic, so residue data is reproducible across runs.
    """

    __slots__ = ("base", "prime", "field", "t_image", "_beta_pows")

    def __init__(self, base: Field, prime: Coeffs):
        self.base = base
        self.prime = prime
        dd = pdeg(prime)
        big = make_field(base.p, base.k * dd)
        self.field = big
        if base.k == 1:
            self._beta_pows = None
        else:
            # embed the base field: send its generator-image alpha to the
            # smallest root of the base modulus inside `big`
            lifted = tuple(c for c in base.modulus)  # F_p coefficients embed as-is
            beta = min(_roots_in(big, lifted))
            pows = [1]
            for _ in range(base.k - 1):
                pows.append(big.mul(pows[-1], beta))
            self._beta_pows = pows
        embedded = tuple(self.embed(c) for c in prime)
        self.t_image = min(_roots_in(big, embedded))

    def embed(self, a: int) -> int:
        if self._beta_pows is None:
            return a
        big = self.field
        out = 0
        for c, bp in zip(self.base.coeffs(a), self._beta_pows):
            if c:
                out = big.add(out, big.mul(c, bp))
        return out

    def eval_poly(self, cs: Coeffs) -> int:
        big = self.field
        acc = 0
        t = self.t_image
        for c in reversed(cs):
            acc = big.add(big.mul(acc, t), self.embed(c))
        return acc


def _roots_in(F: Field, cs: Coeffs) -> list[int]:
    """Roots in F of a polynomial that splits completely over F."""
    unit, parts = factor_raw(F, cs, seed=0)
    roots = []
    for P, e in parts:
        assert pdeg(P) == 1, "polynomial does not split in the residue field"
        roots.append(F.neg(P[0]))
    return sorted(roots)


def residue_field(P: Poly) -> ResidueField:
    """Canonical residue field at a monic irreducible P, cached per context."""
    cache = getattr(P.ctx, "_residue_cache", None)
    if cache is None:
        cache = P.ctx._residue_cache = {}
    rf = cache.get(P.coeffs)
    if rf is None:
        rf = cache[P.coeffs] = ResidueField(P.ctx, P.coeffs)
    return rf


def eval_mod(D, P: Poly) -> FieldElement:
    """Image of a rational function (or Poly) in the residue field at P."""
    if isinstance(D, Poly):
        D = RationalFn(D)
    rf = residue_field(P)
    den = rf.eval_poly(D.den.coeffs)
    if den == 0:
        raise PoleAtPrime(f"{P!r} divides the denominator of {D!r}")
    num = rf.eval_poly(D.num.coeffs)
    return FieldElement(rf.field, rf.field.div(num, den))


# ---------------------------------------------------------------------------
# text parsing


def parse_poly(ctx: Field, text: str) -> Poly:
    """Parse either the compact [c0,c1,...] form or c0 + c1*T + ... terms.

    Integer coefficients are mapped through the prime subfield, so patterns
    like "T^3-3*T^2+2*T" stay meaningful over every field.
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unbalanced brackets in {text!r}")
        inner = s[1:-1].strip()
        if not inner:
            return Poly.zero(ctx)
        coeffs = [_parse_coeff(ctx, tok) for tok in _split_coeffs(inner)]
        return Poly(ctx, coeffs)
    # term form
    s = s.replace("-", "+-").replace(" ", "")
    if s.startswith("+-"):
        s = s[1:]
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if "T" in term:
            head, _, tail = term.partition("T")
            head = head.rstrip("*")
            power = int(tail[1:]) if tail.startswith("^") else 1
            cv = _parse_coeff(ctx, head) if head else 1
        else:
            power = 0
            cv = _parse_coeff(ctx, term)
        if neg:
            cv = ctx.neg(cv)
        coeffs[power] = ctx.add(coeffs.get(power, 0), cv)
    out = [0] * (max(coeffs) + 1 if coeffs else 0)
    for i, c in coeffs.items():
        out[i] = c
    return Poly(ctx, out)


def _split_coeffs(inner: str) -> list[str]:
    toks, depth, cur = [], 0, ""
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            toks.append(cur)
            cur = ""
        else:
            cur += ch
    toks.append(cur)
    return toks


def _parse_coeff(ctx: Field, tok: str) -> int:
    tok = tok.strip()
    if tok.startswith("("):
        if not tok.endswith(")"):
            raise ValueError(f"unbalanced parens in coefficient {tok!r}")
        return ctx.from_coeffs([int(t) for t in tok[1:-1].split(",")])
    return ctx.scalar(int(tok))
