#!/usr/bin/env python3
"""Three ways to the same number.

Walks one seed triple through the three independent evaluators: plain
iteration of the recurrence, the Binet form over the cube roots of unity,
and the period-3 decomposition.  Exact rational arithmetic means agreement
is literal equality, not closeness.
"""

from fractions import Fraction

from jacobsthal3 import (
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    SequenceParams,
    binet_coefficients,
    binet_term,
    companions,
    decomposed_term,
    term,
    term_range,
)

print("=" * 66)
print("Sequences from the recurrence X(n+3) = X(n+2) + X(n+1) + 2*X(n)")
print("=" * 66)

for label, params in [
    ("Jacobsthal (0, 1, 1)", JACOBSTHAL),
    ("Jacobsthal-Lucas (2, 1, 5)", JACOBSTHAL_LUCAS),
    ("free seeds (1, 2, 3)", SequenceParams(1, 2, 3)),
    ("fractional seeds (1/2, -3, 7/5)", SequenceParams(Fraction(1, 2), -3, Fraction(7, 5))),
]:
    values = ", ".join(str(v) for v in term_range(params, 0, 8))
    print(f"{label:32} {values}")

params = SequenceParams(1, 2, 3)
coeffs = binet_coefficients(params)

print()
print("Binet form for seeds (1, 2, 3):  X(n) = A*2^n - B*w1^n + C*w2^n")
print(f"  A = {coeffs.A}    (always (a+b+c)/7)")
print(f"  B = {coeffs.B}")
print(f"  C = {coeffs.C}")
print("  w1, w2 are the primitive cube roots of unity; the w-parts of the")
print("  three summands cancel exactly at every n, leaving a rational.")

print()
print("Decomposition:  X(n) = (rho*2^n - V(n)) / 7, V periodic with period 3")
comp = companions(params)
print(f"  rho = {params.rho},  V = {tuple(str(x) for x in comp.v_gen)} by n mod 3")

print()
print(f"{'n':>4} {'iterate':>12} {'binet':>12} {'decompose':>12}")
for n in [0, 1, 2, 5, 10, 20, 40]:
    a, b, c = term(params, n), binet_term(params, n), decomposed_term(params, n)
    assert a == b == c
    print(f"{n:>4} {str(a):>12} {str(b):>12} {str(c):>12}")

print()
print("All three evaluators agree exactly (asserted above).")
