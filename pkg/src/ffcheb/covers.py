"""Concrete models of geometric G-Galois covers of the projective line.

Four kinds:

  * Kummer: y^d = D(T) with d | q-1; the group is Z/d identified through the
    canonical d-th root of unity, and Frobenius at P is the d-th power residue
    symbol of D mod P.
  * ArtinSchreier: y^p - y = D(T) with D a rational function in reduced form
    (no positive-degree monomial with exponent divisible by p, no pole order
    divisible by p); Frobenius is the absolute trace of D mod P.
  * Product: several cyclic covers over the same field, Frobenius taken
    componentwise into the direct product group.
  * Splitting: the splitting field of a monic-in-Y bivariate F(T, Y), with a
    user-asserted permutation group and a cycle-type -> class table; Frobenius
    is read off the factorization type of F mod P.

Everything a prime can ask for flows through the coset-class catalog of the
group: `coset_class` returns a catalog index even at ramified primes (cyclic
and product covers), which is what the norm-counting functions consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AmbiguousCycleType,
    ContextMismatch,
    DomainError,
    NotDividing,
    NotGeometric,
    RamifiedPrime,
    RamifiedSplittingCover,
    UserGenusRequired,
    WildAtInfinity,
    ZeroPolynomial,
)
from .ffield import Field, FieldElement, prime_factors, root_of_unity
from .groups import GroupTable, cycles_text, parse_cycles
from .polys import (
    Coeffs,
    Poly,
    RationalFn,
    canonical_key,
    factor_raw,
    parse_poly,
    pdeg,
    pdiv,
    pmod,
    pmul,
    pnorm,
    ppowmod,
    primes_of_degree,
    residue_field,
)


@dataclass(frozen=True)
class SplittingData:
    """(ramification index, inertia degree, number of primes above)."""

    e: int
    f: int
    g: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.e, self.f, self.g)


class Cover:
    """Shared plumbing for all cover kinds."""

    kind = "abstract"

    def __init__(self, ctx: Field):
        self.ctx = ctx
        self.validated = False
        self._omega_cache: dict[Coeffs, int] = {}

    # -- subclass hooks

    def _validate(self, force_wild: bool) -> None:
        raise NotImplementedError

    def _coset_raw(self, P: Coeffs) -> int:
        raise NotImplementedError

    def group_size(self) -> int:
        return self.group.n

    # -- shared API

    def require_validated(self) -> None:
        if not self.validated:
            raise DomainError("cover has not been validated; call validate_cover")

    def _prime_coeffs(self, P) -> Coeffs:
        cs = P.coeffs if isinstance(P, Poly) else pnorm(P)
        if not cs or cs[-1] != 1 or pdeg(cs) < 1:
            raise DomainError("expected a monic polynomial of degree >= 1")
        return cs

    def coset_class(self, P) -> int:
        """Catalog index in Omega_G of the Frobenius coset at P."""
        self.require_validated()
        cs = self._prime_coeffs(P)
        cached = self._omega_cache.get(cs)
        if cached is None:
            cached = self._omega_cache[cs] = self._coset_raw(cs)
        return cached

    def frobenius_class(self, P) -> int:
        """Conjugacy-class index of Frobenius at an unramified prime."""
        self.require_validated()
        cs = self._prime_coeffs(P)
        if cs in self._ramified_set():
            raise RamifiedPrime(f"{Poly._raw(self.ctx, cs)!r} ramifies in the cover")
        omega = self.coset_class(cs)
        try:
            return self.group.class_to_omega.index(omega)
        except ValueError:  # pragma: no cover - coset of nontrivial subgroup
            raise RamifiedPrime("Frobenius at this prime is not a conjugacy class")

    def splitting_data(self, P) -> SplittingData:
        self.require_validated()
        oc = self.group.omega[self.coset_class(P)]
        return SplittingData(oc.e, oc.f, oc.g)

    def ramified_primes(self) -> list[Poly]:
        self.require_validated()
        return [
            Poly._raw(self.ctx, cs)
            for cs in sorted(self._ramified_set(), key=canonical_key)
        ]

    def _ramified_set(self) -> frozenset[Coeffs]:
        raise NotImplementedError

    def is_abelian(self) -> bool:
        G = self.group
        return all(
            G.mul(a, b) == G.mul(b, a) for a in range(G.n) for b in range(G.n)
        )

    def summary(self) -> dict:
        self.require_validated()
        try:
            g = self.genus()
        except UserGenusRequired:
            g = None
        return {
            "kind": self.kind,
            "q": self.ctx.q,
            "group_order": self.group.n,
            "genus": g,
            "tame_at_infinity": self.tame_at_infinity(),
            "group_provenance": getattr(self, "group_provenance", "computed"),
        }


class TrivialCover(Cover):
    """E = F_q(T) itself: one-element group, everything splits."""

    kind = "trivial"

    def __init__(self, ctx: Field):
        super().__init__(ctx)
        self.group = GroupTable.cyclic(1)
        self.group_provenance = "computed"

    def _validate(self, force_wild: bool) -> None:
        self.validated = True

    def _ramified_set(self) -> frozenset[Coeffs]:
        return frozenset()

    def _coset_raw(self, P: Coeffs) -> int:
        return self.group.class_to_omega[0]

    def tame_at_infinity(self) -> bool:
        return True

    def _infinity_omega(self) -> int:
        return self.group.class_to_omega[0]

    def infinity_data(self) -> SplittingData:
        return SplittingData(1, 1, 1)

    def genus(self) -> int:
        return 0


def trivial(ctx: Field) -> TrivialCover:
    return validate_cover(TrivialCover(ctx))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Kummer covers


class KummerCover(Cover):
    """y^d = D(T), d | q-1.  D is stored with multiplicities reduced mod d."""

    kind = "kummer"

    def __init__(self, ctx: Field, d: int, D: Poly):
        super().__init__(ctx)
        if D.ctx is not ctx:
            raise ContextMismatch("D over the wrong field")
        if D.is_zero():
            raise ZeroPolynomial("Kummer datum D must be nonzero")
        if d < 2:
            raise DomainError("Kummer degree must be >= 2")
        self.d = d
        unit, parts = factor_raw(ctx, D.coeffs, seed=0)
        reduced = [(P, m % d) for P, m in parts if m % d != 0]
        self.parts = tuple(reduced)
        self.unit = unit
        cs: Coeffs = (unit,)
        for P, m in reduced:
            for _ in range(m):
                cs = pmul(ctx, cs, P)
        self.D = Poly._raw(ctx, cs)
        self.group = GroupTable.cyclic(d)
        self.group_provenance = "computed"
        self.zeta: FieldElement | None = None
        self._dlog: dict[int, int] = {}
        self._lin_symbols: list[int] | None = None

    def _validate(self, force_wild: bool) -> None:
        q = self.ctx.q
        if (q - 1) % self.d != 0:
            raise NotDividing(f"d = {self.d} does not divide q - 1 = {q - 1}")
        for dp in prime_factors(self.d):
            if all(m % dp == 0 for _, m in self.parts):
                raise NotGeometric(
                    f"D is a constant times a {dp}-th power; the cover is not a "
                    f"geometric Z/{self.d} extension"
                )
        self.zeta = root_of_unity(self.ctx, self.d)
        val, F = 1, self.ctx
        self._dlog = {}
        for j in range(self.d):
            self._dlog[val] = j
            val = F.mul(val, self.zeta.val)
        self.validated = True

    def _ramified_set(self) -> frozenset[Coeffs]:
        return frozenset(P for P, _ in self.parts)

    def _symbol_of_value(self, v: int) -> int:
        """dlog of the residue symbol of a nonzero base-field value."""
        return self._dlog[self.ctx.pow(v, (self.ctx.q - 1) // self.d)]

    def _symbol(self, numer: Coeffs, P: Coeffs) -> int:
        """dlog of (numer mod P)^((|P|-1)/d); numer must be coprime to P."""
        F = self.ctx
        dd = pdeg(P)
        if dd == 1:
            if self._lin_symbols is None:
                self._lin_symbols = [0] * F.q
                for a in range(F.q):
                    v = F.pow(a, (F.q - 1) // self.d) if a else 0
                    self._lin_symbols[a] = v
            root = F.neg(P[0])
            acc = 0
            for c in reversed(numer):
                acc = F.add(F.mul(acc, root), c)
            return self._dlog[self._lin_symbols[acc]]
        c = ppowmod(F, pmod(F, numer, P), (F.q**dd - 1) // self.d, P)
        assert pdeg(c) <= 0
        return self._dlog[c[0]]

    def _coset_raw(self, P: Coeffs) -> int:
        d, F = self.d, self.ctx
        v = 0
        for Q, m in self.parts:
            if Q == P:
                v = m
                break
        if v == 0:
            k = self._symbol(self.D.coeffs, P)
            return self.group.class_to_omega[k]
        e = d // math.gcd(d, v)
        step = d // e
        # unit part with uniformizer pi = P
        u = self.D.coeffs
        for _ in range(v):
            u = pdiv(F, u, P)
        ku = self._symbol(u, P)
        coset = frozenset((ku + j * step) % d for j in range(e))
        return self.group.omega_of_coset(coset)

    def tame_at_infinity(self) -> bool:
        return True  # d | q-1 forces d coprime to p

    def infinity_data(self) -> SplittingData:
        self.require_validated()
        oc = self.group.omega[self._infinity_omega()]
        return SplittingData(oc.e, oc.f, oc.g)

    def _infinity_omega(self) -> int:
        d = self.d
        degD = self.D.degree
        e = d // math.gcd(d, degD)
        step = d // e
        kc = self._symbol_of_value(self.D.coeffs[-1])
        coset = frozenset((kc + j * step) % d for j in range(e))
        return self.group.omega_of_coset(coset)

    def genus(self) -> int:
        self.require_validated()
        d = self.d
        total = -2 * d
        for P, m in self.parts:
            e = d // math.gcd(d, m)
            total += (e - 1) * (d // e) * pdeg(P)
        e_inf = d // math.gcd(d, self.D.degree)
        total += (e_inf - 1) * (d // e_inf)
        assert total % 2 == 0
        g = (total + 2) // 2
        assert g >= 0
        return g


# ---------------------------------------------------------------------------
# Artin-Schreier covers


def as_reduce(D: RationalFn) -> RationalFn:
    """Reduce D modulo p-th powers of the Weierstrass operator g^p - g.

    The result has no positive-degree monomial with exponent divisible by p
    in its polynomial part, and every finite pole order is indivisible by p.
    Each elimination strictly lowers a degree, so this terminates.
    """
    F = D.ctx
    p = F.p
    quo, rem = divmod(D.num, D.den)
    poly = list(quo.coeffs)
    j = len(poly) - 1
    while j >= 1:
        if j % p == 0 and poly[j]:
            c = poly[j]
            poly[j] = 0
            r = F.pth_root(c)
            poly[j // p] = F.add(poly[j // p], r)
            while poly and poly[-1] == 0:
                poly.pop()
            j = min(j, len(poly) - 1)
        else:
            j -= 1
    frac = RationalFn(rem, D.den)
    while True:
        if frac.num.is_zero():
            break
        _, parts = factor_raw(F, frac.den.coeffs, seed=0)
        target = next(((P, m) for P, m in parts if m % p == 0), None)
        if target is None:
            break
        P, m = target
        s = m // p
        denb = frac.den.coeffs
        for _ in range(m):
            denb = pdiv(F, denb, P)
        num_mod = pmod(F, frac.num.coeffs, P)
        denb_mod = pmod(F, denb, P)
        inv_denb = ppowmod(F, denb_mod, F.q ** pdeg(P) - 2, P)
        a = pmod(F, pmul(F, num_mod, inv_denb), P)
        # p-th root inside the residue field F_{q^deg P}
        h = ppowmod(F, a, F.p ** (F.k * pdeg(P) - 1), P)
        Ppoly = Poly._raw(F, P)
        hpoly = Poly._raw(F, h)
        wp = RationalFn(hpoly**p, Ppoly**m) - RationalFn(hpoly, Ppoly**s)
        frac = frac - wp
    return RationalFn(Poly(F, poly) * frac.den + frac.num, frac.den)


class ArtinSchreierCover(Cover):
    """y^p - y = D(T) in characteristic p; stores the reduced datum."""

    kind = "artin_schreier"

    def __init__(self, ctx: Field, D: RationalFn | Poly):
        super().__init__(ctx)
        if isinstance(D, Poly):
            D = RationalFn(D)
        if D.ctx is not ctx:
            raise ContextMismatch("D over the wrong field")
        self.raw = D
        self.D = as_reduce(D)
        self.group = GroupTable.cyclic(ctx.p)
        self.group_provenance = "computed"
        self.wild_override = False
        quo, rem = divmod(self.D.num, self.D.den)
        self._poly_part = quo
        self._frac = RationalFn(rem, self.D.den)
        _, parts = factor_raw(ctx, self.D.den.coeffs, seed=0) if self.D.den.degree > 0 else (1, ())
        self._poles = tuple(parts)  # (prime, pole multiplicity), all mult coprime to p

    def _validate(self, force_wild: bool) -> None:
        if self._poly_part.degree >= 1:
            if not force_wild:
                raise WildAtInfinity(
                    "reduced datum has a pole at infinity; the cover is wildly "
                    "ramified there"
                )
            self.wild_override = True
        elif self.D.den.degree == 0:
            raise NotGeometric(
                "reduced datum is constant: the cover is a constant-field "
                "extension or splits completely"
            )
        self.validated = True

    def _ramified_set(self) -> frozenset[Coeffs]:
        return frozenset(P for P, _ in self._poles)

    def _trace(self, P: Coeffs) -> int:
        """Absolute trace of D mod P as an element of Z/p (P not a pole)."""
        from .polys import padd

        F = self.ctx
        num_mod = pmod(F, self.D.num.coeffs, P)
        den_mod = pmod(F, self.D.den.coeffs, P)
        inv_den = ppowmod(F, den_mod, F.q ** pdeg(P) - 2, P)
        x = pmod(F, pmul(F, num_mod, inv_den), P)
        acc = x
        cur = x
        for _ in range(F.k * pdeg(P) - 1):
            cur = ppowmod(F, cur, F.p, P)
            acc = padd(F, acc, cur)
        assert pdeg(acc) <= 0
        t = acc[0] if acc else 0
        assert t < F.p
        return t

    def _coset_raw(self, P: Coeffs) -> int:
        if P in self._ramified_set():
            coset = frozenset(range(self.ctx.p))
            return self.group.omega_of_coset(coset)
        t = self._trace(P)
        return self.group.class_to_omega[t]

    def tame_at_infinity(self) -> bool:
        return not self.wild_override

    def _infinity_omega(self) -> int:
        p = self.ctx.p
        if self.wild_override:
            return self.group.omega_of_coset(frozenset(range(p)))
        num, den = self.D.num, self.D.den
        if num.degree < den.degree:
            t = 0
        else:  # equal degrees after reduction
            F = self.ctx
            c = F.div(num.coeffs[-1], den.coeffs[-1])
            acc = 0
            for i in range(F.k):
                acc = F.add(acc, F.pow(c, F.p**i))
            t = acc
        return self.group.class_to_omega[t]

    def infinity_data(self) -> SplittingData:
        self.require_validated()
        oc = self.group.omega[self._infinity_omega()]
        return SplittingData(oc.e, oc.f, oc.g)

    def genus(self) -> int:
        self.require_validated()
        p = self.ctx.p
        total = -2 * p
        for P, m in self._poles:
            total += (p - 1) * (m + 1) * pdeg(P)
        if self.wild_override:
            total += (p - 1) * (self._poly_part.degree + 1)
        assert total % 2 == 0
        g = (total + 2) // 2
        assert g >= 0
        return g


# ---------------------------------------------------------------------------
# Product covers


class ProductCover(Cover):
    """Direct product of cyclic covers over the same field.

    Linear disjointness of the components is asserted by the user, not
    verified; the equidistribution census is the detector.  At ramified
    primes the inertia/Frobenius coset is taken componentwise.
    """

    kind = "product"

    def __init__(self, components: list[Cover]):
        if not components:
            raise DomainError("product needs at least one component")
        ctx = components[0].ctx
        if any(c.ctx is not ctx for c in components):
            raise ContextMismatch("components over different fields")
        if any(not isinstance(c, (KummerCover, ArtinSchreierCover)) for c in components):
            raise DomainError("product components must be cyclic covers")
        super().__init__(ctx)
        self.components = tuple(components)
        self.group = GroupTable.direct_product([c.group for c in components])
        self.group_provenance = "computed"
        self.declared_genus: int | None = None

    def _validate(self, force_wild: bool) -> None:
        for c in self.components:
            if not c.validated:
                c._validate(force_wild)
        self.validated = True

    def _ramified_set(self) -> frozenset[Coeffs]:
        out: set[Coeffs] = set()
        for c in self.components:
            out |= c._ramified_set()
        return frozenset(out)

    def _component_cosets(self, P: Coeffs) -> list[frozenset[int]]:
        cosets = []
        for c in self.components:
            oc = c.group.omega[c._coset_raw(P)]
            cosets.append(frozenset(oc.rep))
        return cosets

    def _coset_raw(self, P: Coeffs) -> int:
        import itertools as _it

        cosets = self._component_cosets(P)
        members = frozenset(
            self.group.encode_product(tup) for tup in _it.product(*cosets)
        )
        return self.group.omega_of_coset(members)

    def tame_at_infinity(self) -> bool:
        return all(c.tame_at_infinity() for c in self.components)

    def infinity_data(self) -> SplittingData:
        import itertools as _it

        self.require_validated()
        cosets = [frozenset(c.group.omega[c._infinity_omega()].rep) for c in self.components]
        members = frozenset(
            self.group.encode_product(tup) for tup in _it.product(*cosets)
        )
        oc = self.group.omega[self.group.omega_of_coset(members)]
        return SplittingData(oc.e, oc.f, oc.g)

    def genus(self) -> int:
        """Conductor-discriminant genus, available when components ramify at
        pairwise disjoint places (including infinity); otherwise the genus
        must be declared."""
        self.require_validated()
        if self.declared_genus is not None:
            return self.declared_genus
        places: list[set] = []
        for c in self.components:
            pl: set = set(c._ramified_set())
            if isinstance(c, KummerCover):
                if c.d // math.gcd(c.d, c.D.degree) > 1:
                    pl.add("infinity")
            else:
                if c.wild_override:
                    pl.add("infinity")
            places.append(pl)
        for i in range(len(places)):
            for j in range(i + 1, len(places)):
                if places[i] & places[j]:
                    raise UserGenusRequired(
                        "components share a ramified place; declare the genus"
                    )
        n = self.group.n
        total = -2 * n
        # sum of conductor degrees over nontrivial characters
        sizes = self.group.factor_sizes
        import itertools as _it

        for chi in _it.product(*(range(s) for s in sizes)):
            if all(a == 0 for a in chi):
                continue
            total += self._conductor_degree(chi)
        assert total % 2 == 0
        g = (total + 2) // 2
        assert g >= 0
        return g

    def _conductor_degree(self, chi: tuple[int, ...]) -> int:
        deg = 0
        for a, c in zip(chi, self.components):
            if isinstance(c, KummerCover):
                d = c.d
                for P, m in c.parts:
                    e = d // math.gcd(d, m)
                    if (a * (d // e)) % d != 0:
                        deg += pdeg(P)
                e_inf = d // math.gcd(d, c.D.degree)
                if e_inf > 1 and (a * (d // e_inf)) % d != 0:
                    deg += 1
            else:
                if a != 0:
                    for P, m in c._poles:
                        deg += (m + 1) * pdeg(P)
                    if c.wild_override:
                        deg += c._poly_part.degree + 1
        return deg


# ---------------------------------------------------------------------------
# Splitting covers


class SplittingCover(Cover):
    """Splitting field of F(T, Y), monic of degree k in Y, with a
    user-asserted Galois group given as a permutation group on the roots."""

    kind = "splitting"

    def __init__(
        self,
        ctx: Field,
        y_coeffs: list[Poly],
        generators: list[tuple[int, ...]],
        cycle_table: dict[tuple[int, ...], int],
        declared_genus: int | None = None,
        declared_tame_at_infinity: bool = True,
    ):
        super().__init__(ctx)
        if not y_coeffs or y_coeffs[-1] != Poly.one(ctx):
            raise DomainError("F must be monic in Y (last coefficient 1)")
        self.y_coeffs = tuple(y_coeffs)
        self.y_degree = len(y_coeffs) - 1
        self.group = GroupTable.from_perms(generators)
        self.generators = tuple(generators)
        self.group_provenance = "user-asserted"
        self.cycle_table = {
            tuple(sorted(part, reverse=True)): ci for part, ci in cycle_table.items()
        }
        self.declared_genus = declared_genus
        self.declared_tame_at_infinity = declared_tame_at_infinity
        self._disc: Poly | None = None

    def _y_discriminant(self) -> Poly:
        """disc_Y(F) as an element of F_q[T], via Euclid over F_q(T)."""
        if self._disc is not None:
            return self._disc
        ctx = self.ctx
        f = [RationalFn(c) for c in self.y_coeffs]
        fp = [RationalFn(c * i) for i, c in enumerate(self.y_coeffs) if i >= 1]
        res = _rf_resultant(f, fp)
        n = self.y_degree
        if (n * (n - 1) // 2) % 2 == 1:
            res = RationalFn(-res.num, res.den)
        assert res.den.degree == 0
        self._disc = res.num
        return self._disc

    def _validate(self, force_wild: bool) -> None:
        disc = self._y_discriminant()
        if disc.is_zero():
            raise NotGeometric("F is not squarefree in Y over F_q(T)")
        # injectivity and consistency of the cycle-type table
        seen_classes: dict[int, tuple[int, ...]] = {}
        for part, ci in self.cycle_table.items():
            if sum(part) != self.y_degree:
                raise AmbiguousCycleType(f"partition {part} does not sum to {self.y_degree}")
            if not 0 <= ci < len(self.group.classes):
                raise AmbiguousCycleType(f"class index {ci} out of range")
            if ci in seen_classes and seen_classes[ci] != part:
                raise AmbiguousCycleType("cycle-type table is not injective")
            seen_classes[ci] = part
            for x in self.group.classes[ci]:
                if self.group.cycle_type(x) != part:
                    raise AmbiguousCycleType(
                        f"class {ci} has cycle type {self.group.cycle_type(x)}, "
                        f"table says {part}"
                    )
        unit, parts = factor_raw(self.ctx, disc.coeffs, seed=0)
        self._ram = frozenset(P for P, _ in parts)
        self.validated = True
        self._sampling_check()

    def _sampling_check(self) -> None:
        """Necessary-condition census: observed cycle types must be in the
        table, with frequencies within 5 sigma of the class proportions."""
        counts: dict[int, int] = {}
        total = 0
        for deg in (1, 2, 3):
            if total >= 200:
                break
            for P in primes_of_degree(self.ctx, deg):
                if P in self._ram:
                    continue
                ci = self._coset_to_class(self._coset_raw(P))
                counts[ci] = counts.get(ci, 0) + 1
                total += 1
        if total == 0:
            return
        G = self.group
        for ci, cls in enumerate(G.classes):
            frac = len(cls) / G.n
            exp = total * frac
            sigma = math.sqrt(total * frac * (1 - frac)) or 1.0
            if abs(counts.get(ci, 0) - exp) > 5 * sigma:
                raise AmbiguousCycleType(
                    f"observed Frobenius frequencies are inconsistent with the "
                    f"asserted group (class {ci}: saw {counts.get(ci, 0)}, "
                    f"expected {exp:.1f} of {total})"
                )

    def _coset_to_class(self, omega: int) -> int:
        return self.group.class_to_omega.index(omega)

    def _ramified_set(self) -> frozenset[Coeffs]:
        return self._ram

    def _coset_raw(self, P: Coeffs) -> int:
        if P in self._ram:
            raise RamifiedSplittingCover(
                f"{Poly._raw(self.ctx, P)!r} divides the Y-discriminant"
            )
        rf = residue_field(Poly._raw(self.ctx, P))
        big = rf.field
        ycs = pnorm(tuple(rf.eval_poly(c.coeffs) for c in self.y_coeffs))
        assert pdeg(ycs) == self.y_degree
        _, parts = factor_raw(big, ycs, seed=0)
        degs = []
        for Q, m in parts:
            if m > 1:
                raise RamifiedSplittingCover(
                    "F mod P is not squarefree despite P avoiding the Y-discriminant"
                )
            degs.append(pdeg(Q))
        part = tuple(sorted(degs, reverse=True))
        if part not in self.cycle_table:
            raise AmbiguousCycleType(f"cycle type {part} absent from the table")
        return self.group.class_to_omega[self.cycle_table[part]]

    def tame_at_infinity(self) -> bool:
        return self.declared_tame_at_infinity

    def infinity_data(self) -> SplittingData:
        raise UserGenusRequired(
            "splitting covers carry no computed data at infinity"
        )

    def genus(self) -> int:
        self.require_validated()
        if self.declared_genus is None:
            raise UserGenusRequired("declare the genus for splitting covers")
        return self.declared_genus


def _rf_resultant(f: list[RationalFn], g: list[RationalFn]) -> RationalFn:
    """Resultant of polynomials in Y with F_q(T)-coefficients (low first)."""
    ctx = f[0].ctx

    def norm(h):
        while h and h[-1].num.is_zero():
            h.pop()
        return h

    def divmod_(a, b):
        a = list(a)
        db = len(b) - 1
        inv_lead = RationalFn(b[-1].den, b[-1].num)
        while a and len(a) - 1 >= db:
            c = a[-1] * inv_lead
            sh = len(a) - 1 - db
            for j in range(db + 1):
                a[sh + j] = a[sh + j] - c * b[j]
            a.pop()  # the top coefficient cancels exactly
            a = norm(a)
        return a

    f = norm(list(f))
    g = norm(list(g))
    one = RationalFn(Poly.one(ctx))
    zero = RationalFn(Poly.zero(ctx))
    if not f or not g:
        return zero
    if len(f) == 1 and len(g) == 1:
        return one
    res = one
    while len(g) - 1 > 0:
        r = divmod_(f, g)
        if not r:
            return zero
        power = (len(f) - 1) - (len(r) - 1)
        lead_pow = g[-1]
        acc = one
        for _ in range(power):
            acc = acc * lead_pow
        res = res * acc
        if ((len(f) - 1) * (len(g) - 1)) % 2 == 1:
            res = RationalFn(-res.num, res.den)
        f, g = g, r
    acc = one
    for _ in range(len(f) - 1):
        acc = acc * g[0]
    return res * acc


# ---------------------------------------------------------------------------
# validation entry point


def validate_cover(spec: Cover, force_wild: bool = False) -> Cover:
    """Run the kind-specific checks; idempotent, returns the spec."""
    if not spec.validated:
        spec._validate(force_wild)
    return spec


def kummer(ctx: Field, d: int, D: Poly | str) -> KummerCover:
    if isinstance(D, str):
        D = parse_poly(ctx, D)
    return validate_cover(KummerCover(ctx, d, D))  # type: ignore[return-value]


def artin_schreier(ctx: Field, D, force_wild: bool = False) -> ArtinSchreierCover:
    if isinstance(D, str):
        D = parse_poly(ctx, D)
    return validate_cover(ArtinSchreierCover(ctx, D), force_wild)  # type: ignore[return-value]


def product(components: list[Cover]) -> ProductCover:
    return validate_cover(ProductCover(components))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# cover description files


def dumps_cover(spec: Cover) -> str:
    """Canonical key-value serialization; round-trips bit-exactly."""
    ctx = spec.ctx
    lines = [f"kind = {spec.kind}", f"p = {ctx.p}", f"k = {ctx.k}"]
    if isinstance(spec, TrivialCover):
        pass
    elif isinstance(spec, KummerCover):
        lines.append(f"d = {spec.d}")
        lines.append(f"D = {spec.D.serialize()}")
    elif isinstance(spec, ArtinSchreierCover):
        lines.append(f"D_num = {spec.D.num.serialize()}")
        lines.append(f"D_den = {spec.D.den.serialize()}")
    elif isinstance(spec, ProductCover):
        lines.append(f"components = {len(spec.components)}")
        for i, c in enumerate(spec.components, 1):
            if isinstance(c, KummerCover):
                lines.append(f"component.{i}.kind = kummer")
                lines.append(f"component.{i}.d = {c.d}")
                lines.append(f"component.{i}.D = {c.D.serialize()}")
            else:
                lines.append(f"component.{i}.kind = artin_schreier")
                lines.append(f"component.{i}.D_num = {c.D.num.serialize()}")
                lines.append(f"component.{i}.D_den = {c.D.den.serialize()}")
    elif isinstance(spec, SplittingCover):
        lines.append(f"y_degree = {spec.y_degree}")
        for j, c in enumerate(spec.y_coeffs):
            lines.append(f"F.{j} = {c.serialize()}")
        for i, gen in enumerate(spec.generators, 1):
            lines.append(f"generator.{i} = {cycles_text(gen)}")
        for part in sorted(spec.cycle_table):
            key = "+".join(map(str, part))
            lines.append(f"cycle_type.{key} = {spec.cycle_table[part]}")
        if spec.declared_genus is not None:
            lines.append(f"genus = {spec.declared_genus}")
        lines.append(
            f"tame_at_infinity = {'true' if spec.declared_tame_at_infinity else 'false'}"
        )
    return "\n".join(lines) + "\n"


def parse_cover(text: str, force_wild: bool = False) -> Cover:
    from .errors import CoverFileError
    from .ffield import make_field

    kv: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CoverFileError(f"bad line in cover file: {raw!r}")
        key, _, val = line.partition("=")
        kv[key.strip()] = val.strip()
    try:
        kind = kv["kind"]
        p = int(kv["p"])
        k = int(kv.get("k", "1"))
    except KeyError as e:
        raise CoverFileError(f"cover file is missing {e}") from None
    ctx = make_field(p, k)

    def build(prefix: str, kd: str) -> Cover:
        if kd == "kummer":
            d = int(kv[prefix + "d"])
            D = parse_poly(ctx, kv[prefix + "D"])
            return KummerCover(ctx, d, D)
        if kd == "artin_schreier":
            num = parse_poly(ctx, kv[prefix + "D_num"])
            den = parse_poly(ctx, kv.get(prefix + "D_den", "[1]"))
            return ArtinSchreierCover(ctx, RationalFn(num, den))
        raise CoverFileError(f"unknown cover kind {kd!r}")

    if kind == "trivial":
        spec = TrivialCover(ctx)
    elif kind in ("kummer", "artin_schreier"):
        spec = build("", kind)
    elif kind == "product":
        ncomp = int(kv["components"])
        comps = [
            build(f"component.{i}.", kv[f"component.{i}.kind"])
            for i in range(1, ncomp + 1)
        ]
        spec = ProductCover(comps)
    elif kind == "splitting":
        ydeg = int(kv["y_degree"])
        ycs = [parse_poly(ctx, kv[f"F.{j}"]) for j in range(ydeg + 1)]
        gens = []
        i = 1
        while f"generator.{i}" in kv:
            gens.append(parse_cycles(kv[f"generator.{i}"], ydeg))
            i += 1
        table = {}
        for key, val in kv.items():
            if key.startswith("cycle_type."):
                part = tuple(int(t) for t in key[len("cycle_type."):].split("+"))
                table[part] = int(val)
        genus = int(kv["genus"]) if "genus" in kv else None
        tame = kv.get("tame_at_infinity", "true").lower() == "true"
        spec = SplittingCover(ctx, ycs, gens, table, genus, tame)
    else:
        raise CoverFileError(f"unknown cover kind {kind!r}")
    return validate_cover(spec, force_wild)


def load_cover(path: str, force_wild: bool = False) -> Cover:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cover(fh.read(), force_wild)
