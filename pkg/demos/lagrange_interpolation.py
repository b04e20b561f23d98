"""Fitting a polynomial of degree d exactly through d+1 points.

The fit is built from the explicit basis-sum formula: for each node a
polynomial that hits its value there and vanishes at every other node,
then add them up.  Everything is exact, over the rationals or a prime
field, so "the curve passes through the point" means equality, not a
small residual.
"""

from fractions import Fraction

from interpoly import PrimeField, QQ, SeededRng, lagrange_fit

print("=== Three points, one parabola ===")
pairs = [(0, 1), (1, 2), (2, 5)]
f = lagrange_fit(pairs)
print(f"points: {pairs}")
print(f"fit:    f(x) = {f}")
for x, y in pairs:
    print(f"        f({x}) = {f.evaluate((x,))}  (wanted {y})")

print()
print("=== Rational nodes stay exact ===")
pairs = [(Fraction(1, 3), Fraction(1, 2)), (Fraction(-2, 7), 3), (5, Fraction(22, 9))]
g = lagrange_fit(pairs)
print(f"fit through {pairs}:")
print(f"        g(x) = {g}")
print(f"        g(1/3) = {g.evaluate((Fraction(1, 3),))}")

print()
print("=== d+2 points overdetermine, any d+1 of them agree ===")
F = PrimeField(101)
rng = SeededRng(7)
truth = lagrange_fit([(x, F.sample(rng)) for x in range(4)], F)  # a random cubic
samples = [(x, truth.evaluate((x,))) for x in range(5)]  # five consistent pairs
print(f"hidden cubic over F_101: {truth}")
for omit in range(5):
    subset = samples[:omit] + samples[omit + 1 :]
    refit = lagrange_fit(subset, F)
    print(f"fit without node x={samples[omit][0]}: {refit}  (same: {refit == truth})")

print()
print("=== But random d+2 points do NOT lie on a degree-d curve ===")
bad = samples[:4] + [(5, F.add(truth.evaluate((5,)), 1))]  # nudge one value
refit = lagrange_fit(bad[:4], F)
x, y = bad[4]
print(f"degree-3 fit through the first 4 says f({x}) = {refit.evaluate((x,))}, data says {y}")
