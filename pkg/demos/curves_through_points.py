"""Passing algebraic curves through point sets with a design-matrix kernel.

Asking a curve a*x^2 + b*xy + ... + f = 0 to contain a point is one
homogeneous linear condition on its coefficients, so the curves through
a point set form the kernel of the points-by-monomials evaluation
matrix.  Five general points leave a one-dimensional kernel (a unique
conic up to scale); six leave nothing.
"""

from interpoly import (
    BasisSpec,
    PointSet,
    PrimeField,
    QQ,
    SeededRng,
    check_uniqueness,
    design_matrix,
    expected_interpolation_count,
    fit_curves,
)

print("=== The unique conic through five points ===")
points = PointSet(QQ, [(1, 0), (2, 0), (3, 0), (0, 1), (0, 2)])
conic = BasisSpec.conic()
dm = design_matrix(points, conic)
print("design matrix rows (x^2, xy, y^2, x, y, 1):")
for row in dm.rows:
    print("   ", [str(v) for v in row])
result = fit_curves(points, conic)
print(f"rank {result.design_rank}, kernel dimension {result.kernel_dim}")
print(f"the conic through three points on one axis and two on the other: {result.curves[0]} = 0")

print()
print("=== Counts for other families (size of basis minus one) ===")
for basis in [BasisSpec.line(), BasisSpec.circle(), conic, BasisSpec.full(2, 3, name="cubic"),
              BasisSpec.quadric_surface()]:
    print(f"  {basis.name:16s} interpolates {expected_interpolation_count(basis)} general points")

print()
print("=== Five random points: always one conic; six: none ===")
F = PrimeField(2**31 - 1)
rng = SeededRng(2024)
pts5 = [tuple(F.sample(rng) for _ in range(2)) for _ in range(5)]
pts6 = pts5 + [tuple(F.sample(rng) for _ in range(2))]
r5 = fit_curves(PointSet(F, pts5), conic)
r6 = fit_curves(PointSet(F, pts6), conic)
print(f"5 points over F_{F.p}: kernel dimension {r5.kernel_dim} (unique curve up to scale)")
print(f"6 points over F_{F.p}: kernel dimension {r6.kernel_dim} (no conic at all)")

print()
print("=== Special position breaks uniqueness ===")
# four collinear points force the conic to contain that whole line
collinear = PointSet(QQ, [(1, 0), (2, 0), (3, 0), (4, 0), (0, 1)])
res = fit_curves(collinear, conic)
print(f"four points on the x-axis plus one more: kernel dimension {res.kernel_dim}")
for curve in res.curves:
    print(f"   candidate: {curve} = 0")
print(f"check_uniqueness says: {check_uniqueness(collinear, conic)}")

print()
print("=== One equation in three variables: quadric surfaces ===")
rng = SeededRng(99)
pts9 = [tuple(F.sample(rng) for _ in range(3)) for _ in range(9)]
quadric = BasisSpec.quadric_surface()
r9 = fit_curves(PointSet(F, pts9), quadric)
r10 = fit_curves(PointSet(F, pts9 + [tuple(F.sample(rng) for _ in range(3))]), quadric)
print(f"9 random points in 3-space: kernel dimension {r9.kernel_dim}")
print(f"10 random points in 3-space: kernel dimension {r10.kernel_dim}")
