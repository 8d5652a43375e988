#!/usr/bin/env python3
"""Tour of the exact-arithmetic substrate: finite fields and F_q[T].

Everything downstream (Frobenius symbols, interval censuses, zeta
numerators) reduces to the operations shown here, so the canonical choices
matter: the same (p, k) always produces the same modulus, generator, and
factor ordering, which keeps every report reproducible byte for byte.
"""

from ffcheb import count_primes, enumerate_monic, make_field, parse_poly, root_of_unity

print("== canonical field contexts ==")
for p, k in ((5, 1), (3, 2), (2, 3), (7, 2)):
    F = make_field(p, k)
    print(f"F_{F.q}: modulus={F.modulus}, canonical generator={F.generator}")

F5 = make_field(5)
print("\nmultiplicative orders in F_5:", {a: F5.order(a) for a in range(1, 5)})
print("canonical square root of unity (d=2):", root_of_unity(F5, 2).val)
print("canonical 4th root of unity (d=4):", root_of_unity(F5, 4).val)

print("\n== factorization over F_5 ==")
for text in ("T^2+1", "T^2-1", "T^4+4", "T^5-T"):
    f = parse_poly(F5, text)
    print(f"{text:10s} = {f.factor()}")

print("\n== prime counting: necklace formula vs enumeration ==")
for n in range(1, 5):
    brute = sum(1 for f in enumerate_monic(F5, n) if f.is_irreducible())
    print(f"degree {n}: pi_5({n}) = {count_primes(F5, n)} (enumerated: {brute})")

print("\n== residue fields ==")
from ffcheb import RationalFn, Poly, eval_mod

T = Poly.x(F5)
print("T mod (T-2)      ->", eval_mod(T, T - 2).val)
print("1/T mod (T-2)    ->", eval_mod(RationalFn(Poly.one(F5), T), T - 2).val)
P = parse_poly(F5, "T^2+2")
img = eval_mod(T, P)
print(f"T mod ({P}) lives in F_{img.ctx.q}; its square is", (img * img).val,
      "= image of -2:", img.ctx.elem(3).val)
