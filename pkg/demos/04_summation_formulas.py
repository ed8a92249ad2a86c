#!/usr/bin/env python3
"""Summation closed forms against the brute-force oracle.

Covers the prefix sums of the Jacobsthal numbers, the weighted sums
sum(X(k)/x^k), and the strided sums sum(X(mk+r)), including the two edge
cases worth knowing about: the sign of the weighted denominator and the
degenerate stride 3 | m.
"""

from fractions import Fraction

from jacobsthal3 import (
    DegenerateStrideError,
    JACOBSTHAL,
    SequenceParams,
    StridedSumContext,
    prefix_sum_closed,
    strided_sum_closed,
    sum_oracle,
    weighted_sum_charpoly_form,
    weighted_sum_closed,
)

print("prefix sums of the Jacobsthal numbers")
print(f"{'n':>3} {'closed':>8} {'oracle':>8}")
for n in range(9):
    closed = prefix_sum_closed(n)
    oracle = sum_oracle(JACOBSTHAL, range(n + 1))
    assert closed == oracle
    print(f"{n:>3} {str(closed):>8} {str(oracle):>8}")
print("(the -1 correction applies exactly when 3 divides n)")
print()

print("weighted sums sum(X(k)/x^k) for seeds (1, 2, 3)")
params = SequenceParams(1, 2, 3)
for x in (Fraction(3), Fraction(-1), Fraction(1, 2)):
    for n in (0, 4, 12):
        weights = [x ** (-k) for k in range(n + 1)]
        closed = weighted_sum_closed(params, x, n)
        oracle = sum_oracle(params, range(n + 1), weights)
        assert closed == oracle
        print(f"  x = {str(x):>4}, n = {n:>2}:  {closed}")
print()
print("the sign pitfall: the denominator is the root product")
print("(2-x)(w1-x)(w2-x) = 2 + x + x^2 - x^3, i.e. MINUS the characteristic")
print("polynomial x^3 - x^2 - x - 2.  Dividing by the characteristic")
print("polynomial itself negates every value:")
good = weighted_sum_closed(JACOBSTHAL, 1, 3)
bad = weighted_sum_charpoly_form(JACOBSTHAL, 1, 3)
print(f"  seeds (0,1,1), x=1, n=3:  correct {good}, charpoly variant {bad}")
print()

print("strided sums sum(X(mk+r), k=0..n)")
params = SequenceParams(2, 1, 5)
for m, r, n in [(1, 1, 2), (2, 2, 1), (4, 6, 5), (5, 5, 3)]:
    ctx = StridedSumContext.of(m, r)
    closed = strided_sum_closed(params, m, r, n)
    oracle = sum_oracle(params, [m * k + r for k in range(n + 1)])
    assert closed == oracle
    print(f"  m={m}, r={r}, n={n}:  sigma={ctx.sigma}, value {closed}")
print()
print("degenerate stride: sigma(m) = 0 whenever 3 divides m, so no closed")
print("form exists there and the library refuses rather than divides:")
for m in (3, 6):
    print(f"  sigma({m}) = {StridedSumContext.of(m, m).sigma}")
try:
    strided_sum_closed(JACOBSTHAL, 3, 3, 5)
except DegenerateStrideError as exc:
    print(f"  strided_sum_closed(m=3): {exc}")
oracle = sum_oracle(JACOBSTHAL, [3 * k + 3 for k in range(6)])
print(f"  the oracle still answers: {oracle}")
