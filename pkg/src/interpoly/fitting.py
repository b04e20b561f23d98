"""Curve fitting through point sets by design-matrix kernels.

The basic move: pick an ordered basis of polynomials (the "type" of
curve), evaluate every basis element at every point to get the design
matrix, and read interpolating curves off its kernel.  A univariate
Lagrange fit is provided separately, built from the explicit basis-sum
formula rather than a linear solve, so the two routes can cross-check
each other.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass

from .errors import DimensionMismatchError, DuplicateNodeError, MixedFieldsError
from .fields import QQ, FpElement, PrimeField
from .linalg import Matrix, _kernel_from_rref, rref
from .polynomials import Polynomial, grlex_key, monomial_basis


class PointSet:
    """Points with a fixed coordinate count over one field."""

    __slots__ = ("field", "dim", "points")

    def __init__(self, field, points, dim: int | None = None):
        pts = [tuple(field.coerce(x) for x in p) for p in points]
        if pts:
            dims = {len(p) for p in pts}
            if len(dims) != 1:
                raise DimensionMismatchError("points have unequal coordinate counts")
            width = dims.pop()
            if dim is not None and dim != width:
                raise DimensionMismatchError(f"expected dimension {dim}, points have {width}")
            dim = width
        elif dim is None:
            raise DimensionMismatchError("empty point set needs an explicit dimension")
        self.field = field
        self.dim = dim
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_csv_text(self) -> str:
        header = (
            f"# field=prime:{self.field.p}" if self.field.is_prime_field else "# field=rational"
        )
        buf = io.StringIO()
        buf.write(header + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        for p in self.points:
            writer.writerow([self.field.format(x) for x in p])
        return buf.getvalue()

    @classmethod
    def from_csv_text(cls, text: str, dim: int | None = None) -> "PointSet":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("#"):
            raise ValueError("point file must start with a '# field=...' header")
        header = lines[0].lstrip("#").strip()
        m = re.fullmatch(r"field=prime:(\d+)", header)
        if m:
            field = PrimeField(int(m.group(1)))
        elif header == "field=rational":
            field = QQ
        else:
            raise ValueError(f"unrecognized point file header: {lines[0]!r}")
        rows = list(csv.reader(lines[1:]))
        points = [tuple(field.parse(cell.strip()) for cell in row) for row in rows if row]
        return cls(field, points, dim=dim)

    def __repr__(self):
        return f"PointSet({self.field!r}, {len(self.points)} points in dim {self.dim})"


class BasisSpec:
    """An ordered, linearly independent list of basis polynomials.

    Standard families are defined over the rationals and specialize into
    any prime field at fitting time; custom bases may live over any field.
    """

    __slots__ = ("name", "num_vars", "field", "polys")

    def __init__(self, name: str, polys, field=None):
        polys = list(polys)
        if not polys:
            raise ValueError("basis needs at least one polynomial")
        if field is None:
            field = polys[0].field
        nv = polys[0].num_vars
        for p in polys:
            if p.num_vars != nv:
                raise DimensionMismatchError("basis polynomials disagree on variable count")
            if p.field != field:
                raise MixedFieldsError("basis polynomials live over different fields")
            if p.is_zero():
                raise ValueError("zero polynomial in basis")
        self.name = name
        self.num_vars = nv
        self.field = field
        self.polys = polys
        self._check_independent()

    def _check_independent(self):
        # Single distinct monomials are independent by inspection; anything
        # else gets a rank check on the coefficient matrix.
        if all(len(p.terms) == 1 for p in self.polys):
            monos = [next(iter(p.terms)) for p in self.polys]
            if len(set(monos)) == len(monos):
                return
        support = sorted({e for p in self.polys for e in p.terms}, key=grlex_key)
        col = {e: j for j, e in enumerate(support)}
        zero = self.field.zero
        rows = []
        for p in self.polys:
            row = [zero] * len(support)
            for e, c in p.terms.items():
                row[col[e]] = c
            rows.append(row)
        _, rank, _ = rref(Matrix(self.field, rows, len(support)))
        if rank != len(self.polys):
            raise ValueError("basis polynomials are linearly dependent")

    def __len__(self):
        return len(self.polys)

    @classmethod
    def full(cls, num_vars: int, degree: int, name: str | None = None) -> "BasisSpec":
        """Every monomial of total degree <= degree, graded-lex ordered."""
        polys = [Polynomial.monomial(num_vars, e, QQ) for e in monomial_basis(num_vars, degree)]
        return cls(name or f"full({degree})", polys)

    @classmethod
    def line(cls) -> "BasisSpec":
        return cls.full(2, 1, name="line")

    @classmethod
    def conic(cls) -> "BasisSpec":
        return cls.full(2, 2, name="conic")

    @classmethod
    def circle(cls) -> "BasisSpec":
        x2_plus_y2 = Polynomial(2, {(2, 0): 1, (0, 2): 1}, QQ)
        x = Polynomial.variable(2, 0, QQ)
        y = Polynomial.variable(2, 1, QQ)
        one = Polynomial.constant(2, 1, QQ)
        return cls("circle", [x2_plus_y2, x, y, one])

    @classmethod
    def graph(cls, degree: int) -> "BasisSpec":
        """Basis {x^d, ..., x, 1, y} whose curves are graphs y = f(x)."""
        if degree < 0:
            raise ValueError("degree must be non-negative")
        polys = [Polynomial.monomial(2, (e, 0), QQ) for e in range(degree, 0, -1)]
        polys.append(Polynomial.constant(2, 1, QQ))
        polys.append(Polynomial.variable(2, 1, QQ))
        return cls(f"graph({degree})", polys)

    @classmethod
    def quadric_surface(cls, num_vars: int = 3) -> "BasisSpec":
        return cls.full(num_vars, 2, name="quadric_surface")

    @classmethod
    def custom(cls, polys, name: str = "custom") -> "BasisSpec":
        return cls(name, polys)

    @classmethod
    def from_name(cls, name: str, degree: int | None = None) -> "BasisSpec":
        """Resolve a basis from a textual name such as 'conic' or 'plane(4)'."""
        name = name.strip()
        fixed = {
            "line": cls.line,
            "circle": cls.circle,
            "conic": cls.conic,
            "cubic": lambda: cls.full(2, 3, name="cubic"),
            "quadric_surface": cls.quadric_surface,
        }
        if name in fixed:
            return fixed[name]()
        m = re.fullmatch(r"(plane|graph|full)(?:\((\d+)\))?", name)
        if not m:
            raise ValueError(f"unknown basis name: {name!r}")
        kind, d = m.group(1), m.group(2)
        if d is not None:
            degree = int(d)
        if degree is None:
            raise ValueError(f"basis {kind!r} needs a degree")
        if kind == "graph":
            return cls.graph(degree)
        return cls.full(2, degree, name=f"{kind}({degree})")

    def __repr__(self):
        return f"BasisSpec({self.name!r}, {len(self.polys)} polynomials in {self.num_vars} vars)"


def expected_interpolation_count(basis: BasisSpec) -> int:
    """Number of general points the family interpolates: basis size minus one."""
    return len(basis.polys) - 1


def _specialize(basis: BasisSpec, field):
    if basis.field == field:
        return basis.polys
    if basis.field == QQ:
        return [p.map_into(field) for p in basis.polys]
    raise MixedFieldsError(
        f"basis over {basis.field!r} cannot be used with points over {field!r}"
    )


def design_matrix(points: PointSet, basis: BasisSpec) -> Matrix:
    """Points-by-basis evaluation matrix: entry (i, j) = basis_j(point_i)."""
    if basis.num_vars != points.dim:
        raise DimensionMismatchError(
            f"basis in {basis.num_vars} variables, points in dimension {points.dim}"
        )
    field = points.field
    polys = _specialize(basis, field)
    term_lists = [list(p.terms.items()) for p in polys]
    max_exp = [0] * points.dim
    for terms in term_lists:
        for exps, _ in terms:
            for v, e in enumerate(exps):
                if e > max_exp[v]:
                    max_exp[v] = e
    one = field.one
    mul = field.mul
    add = field.add
    rows = []
    for point in points.points:
        # Power tables per coordinate avoid re-exponentiating per monomial.
        powers = []
        for x, top in zip(point, max_exp):
            col = [one]
            acc = one
            for _ in range(top):
                acc = mul(acc, x)
                col.append(acc)
            powers.append(col)
        row = []
        for terms in term_lists:
            total = field.zero
            for exps, coeff in terms:
                v = coeff
                for var, e in enumerate(exps):
                    if e:
                        v = mul(v, powers[var][e])
                total = add(total, v)
            row.append(total)
        rows.append(row)
    return Matrix(field, rows, len(polys))


@dataclass
class FitResult:
    """Kernel of a design matrix, with each kernel vector as a curve."""

    kernel_dim: int
    design_rank: int
    curves: list


def fit_curves(points: PointSet, basis: BasisSpec) -> FitResult:
    """All curves in the family through every point, as a canonical kernel basis."""
    dm = design_matrix(points, basis)
    reduced, rank, pivots = rref(dm)
    vectors = _kernel_from_rref(dm.field, reduced.rows, dm.ncols, pivots)
    field = points.field
    polys = _specialize(basis, field)
    curves = []
    zero = field.zero
    for vec in vectors:
        acc: dict = {}
        for coeff, poly in zip(vec, polys):
            if coeff == zero:
                continue
            for e, c in poly.terms.items():
                v = field.mul(coeff, c)
                acc[e] = field.add(acc[e], v) if e in acc else v
        terms = {e: c for e, c in acc.items() if c != zero}
        curves.append(Polynomial._trusted(basis.num_vars, terms, field))
    return FitResult(kernel_dim=len(vectors), design_rank=rank, curves=curves)


def _infer_field(pairs, field):
    if field is not None:
        return field
    for x, y in pairs:
        for v in (x, y):
            if isinstance(v, FpElement):
                return v.field
    return QQ


def _lagrange_coeffs_mod_p(xs, ys, p: int) -> list[int]:
    # Same computation as the generic path, inlined on raw residues.
    n = len(xs)
    master = [1]
    for x in xs:
        master = [(a - x * b) % p for a, b in zip(master + [0], [0] + master)]
    coeffs = [0] * n
    for i in range(n):
        yi = ys[i]
        if yi == 0:
            continue
        xi = xs[i]
        acc = master[0]
        num = [acc]
        for k in range(1, n):
            acc = (master[k] + xi * acc) % p
            num.append(acc)
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                den = den * (xi - xj) % p
        s = yi * pow(den, -1, p) % p
        coeffs = [(a + s * b) % p for a, b in zip(coeffs, num)]
    return coeffs


def _lagrange_coeffs_generic(xs, ys, field) -> list:
    n = len(xs)
    zero = field.zero
    add, sub, mul = field.add, field.sub, field.mul
    master = [field.one]
    for x in xs:
        shifted = master + [zero]
        prev = [zero] + master
        master = field.row_sub_scaled(shifted, x, prev)
    coeffs = [zero] * n
    for i in range(n):
        yi = ys[i]
        if yi == zero:
            continue
        xi = xs[i]
        acc = master[0]
        num = [acc]
        for k in range(1, n):
            acc = add(master[k], mul(xi, acc))
            num.append(acc)
        den = field.one
        for j in range(n):
            if j != i:
                den = mul(den, sub(xi, xs[j]))
        scale = mul(yi, field.inv(den))
        coeffs = field.row_sub_scaled(coeffs, field.neg(scale), num)
    return coeffs


def lagrange_fit(pairs, field=None) -> Polynomial:
    """The unique polynomial of degree <= n-1 through n pairs with distinct x.

    Computed as the sum f_1 + ... + f_n where f_i takes the value y_i at
    x_i and vanishes at every other node: f_i is y_i times the product of
    (x - x_j) over j != i, divided by the product of (x_i - x_j).  The
    master product (x - x_1)...(x - x_n) is formed once and each numerator
    is one exact synthetic division away, keeping the fit quadratic in n.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one pair")
    field = _infer_field(pairs, field)
    xs = [field.coerce(x) for x, _ in pairs]
    ys = [field.coerce(y) for _, y in pairs]
    if len(set(xs)) != len(xs):
        raise DuplicateNodeError("interpolation nodes must be distinct")
    n = len(pairs)
    if field.is_prime_field:
        coeffs = _lagrange_coeffs_mod_p(xs, ys, field.p)
    else:
        coeffs = _lagrange_coeffs_generic(xs, ys, field)
    zero = field.zero
    terms = {(n - 1 - k,): c for k, c in enumerate(coeffs) if c != zero}
    return Polynomial._trusted(1, terms, field)
