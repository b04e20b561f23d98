"""Closed-form Brill-Noether arithmetic for curves of genus g and degree d in P^r.

Everything here is exact integer arithmetic: the deficiency
rho(g, r, d) = g - (r+1)(g - d + r), the dimension (r+1)d - (r-3)(g-1)
of the Brill-Noether component when it exists, the expected number of
general points such curves interpolate (that dimension divided by r-1,
floored), the known exceptional classes where the expectation fails,
and the classical plane-curve counts the formulas degenerate to at r=2.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb

from .errors import InvalidGenusError
from .fields import is_prime

YES = "yes"
NO_EXCEPTION = "no-exception"
NOT_APPLICABLE = "not-applicable"

#: Classes where the expected point count fails, with the obstructing
#: surface and the number of general points that surface interpolates.
POINT_EXCEPTIONS: dict[tuple[int, int, int], tuple[str, int]] = {
    (2, 3, 5): ("quadric surface (a hyperelliptic scroll)", 9),
    (4, 3, 6): ("quadric surface", 9),
    (2, 5, 7): ("hyperelliptic scroll of degree 4", 9),
    (6, 5, 10): ("del Pezzo surface of degree 5", 11),
}

#: Classes whose normal bundle fails interpolation in any characteristic.
NORMAL_BUNDLE_EXCEPTIONS = frozenset(POINT_EXCEPTIONS) | {(2, 4, 6)}


@dataclass(frozen=True)
class CurveClass:
    """Genus, ambient projective dimension, and degree of a curve family."""

    g: int
    r: int
    d: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        if self.r < 2:
            raise ValueError("ambient dimension must be at least 2")
        if self.d < 1:
            raise ValueError("degree must be at least 1")

    def key(self) -> tuple[int, int, int]:
        return (self.g, self.r, self.d)


def rho(c: CurveClass) -> int:
    """Brill-Noether number g - (r+1)(g - d + r)."""
    return c.g - (c.r + 1) * (c.g - c.d + c.r)


def _dimension_formula(c: CurveClass) -> int:
    return (c.r + 1) * c.d - (c.r - 3) * (c.g - 1)


def bn_dimension(c: CurveClass) -> int | None:
    """Dimension (r+1)d - (r-3)(g-1) of the component; None when it is empty.

    For r = 2 the formula equals the classical 3d + g - 1 for plane
    curves, a family that exists for every admissible genus, so no
    rho gate applies there.
    """
    if c.r >= 3 and rho(c) < 0:
        return None
    return _dimension_formula(c)


def expected_points(c: CurveClass) -> int | None:
    """Floor of the component dimension over the r-1 conditions per point."""
    dim = bn_dimension(c)
    if dim is None:
        return None
    return dim // (c.r - 1)


def section_space_dim(c: CurveClass, n: int) -> int:
    """Expected dimension of normal-bundle sections vanishing at n points."""
    if n < 0:
        raise ValueError("point count must be non-negative")
    return max(0, _dimension_formula(c) - (c.r - 1) * n)


def _char2_violated(c: CurveClass, characteristic: int) -> bool:
    if characteristic != 2 or c.g != 0 or c.r == 2:
        return False
    return c.d % (c.r - 1) != 1


def _check_characteristic(characteristic: int):
    if characteristic != 0 and not is_prime(characteristic):
        raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")


def normal_bundle_verdict(c: CurveClass, characteristic: int) -> bool:
    """Whether the general such curve's normal bundle satisfies interpolation.

    Fails when the component is empty, on the five exceptional classes,
    and additionally in characteristic 2 for genus 0 unless
    d = 1 (mod r-1).
    """
    _check_characteristic(characteristic)
    if rho(c) < 0:
        return False
    if c.key() in NORMAL_BUNDLE_EXCEPTIONS:
        return False
    return not _char2_violated(c, characteristic)


@dataclass(frozen=True)
class BNReport:
    """All counts and verdicts for one (g, r, d) class."""

    curve: CurveClass
    rho: int
    bn_exists: bool
    bn_dim: int | None
    expected_points: int | None
    interpolates: str
    exception_note: str | None
    obstruction_bound: int | None
    characteristic: int
    nb_interpolation: bool
    char2_constraint_violated: bool

    def to_json_obj(self) -> dict:
        return {
            "g": self.curve.g,
            "r": self.curve.r,
            "d": self.curve.d,
            "rho": self.rho,
            "bn_exists": self.bn_exists,
            "bn_dim": self.bn_dim,
            "expected_points": self.expected_points,
            "interpolates": self.interpolates,
            "exception_note": self.exception_note,
            "obstruction_bound": self.obstruction_bound,
            "characteristic": self.characteristic,
            "nb_interpolation": self.nb_interpolation,
            "char2_constraint_violated": self.char2_constraint_violated,
        }


def interpolation_verdict(c: CurveClass, characteristic: int = 0) -> BNReport:
    """Full report: counts, point-interpolation verdict, normal-bundle verdict."""
    _check_characteristic(characteristic)
    rho_value = rho(c)
    exists = rho_value >= 0
    dim = _dimension_formula(c) if exists else None
    expected = None
    if (exists and c.r >= 3) or c.r == 2:
        expected = _dimension_formula(c) // (c.r - 1)
    if not exists:
        verdict = NOT_APPLICABLE
        note = None
        bound = None
    elif c.key() in POINT_EXCEPTIONS:
        surface, bound = POINT_EXCEPTIONS[c.key()]
        verdict = NO_EXCEPTION
        note = (
            f"every such curve lies on a {surface}, "
            f"which interpolates only {bound} general points"
        )
    else:
        verdict = YES
        note = None
        bound = None
    return BNReport(
        curve=c,
        rho=rho_value,
        bn_exists=exists,
        bn_dim=dim,
        expected_points=expected,
        interpolates=verdict,
        exception_note=note,
        obstruction_bound=bound,
        characteristic=characteristic,
        nb_interpolation=normal_bundle_verdict(c, characteristic),
        char2_constraint_violated=_char2_violated(c, characteristic),
    )


def max_plane_genus(d: int) -> int:
    """Largest genus of a degree-d plane curve: (d-1)(d-2)/2."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    return (d - 1) * (d - 2) // 2


def plane_interpolation_count(d: int, g: int) -> int:
    """Plane curves of degree d and genus g interpolate 3d + g - 1 points."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    if not 0 <= g <= max_plane_genus(d):
        raise InvalidGenusError(
            f"genus {g} outside [0, {max_plane_genus(d)}] for degree {d}"
        )
    return 3 * d + g - 1


def hypersurface_count(num_vars: int, degree: int) -> int:
    """Degree-d hypersurfaces in n variables interpolate C(n+d, d) - 1 points."""
    if num_vars < 1 or degree < 1:
        raise ValueError("need num_vars >= 1 and degree >= 1")
    return comb(num_vars + degree, degree) - 1


def genus_moduli_dimension(g: int) -> int:
    """Dimension 3g - 3 of the space of genus-g curves, for g >= 2."""
    if g < 2:
        raise ValueError("formula 3g - 3 applies for genus at least 2")
    return 3 * g - 3


def bn_table(g_max: int, r_max: int, d_max: int) -> list[BNReport]:
    """Reports for every class in the box, ordered by (g, r, d)."""
    if g_max < 0 or r_max < 2 or d_max < 1:
        raise ValueError("bounds must admit at least one class (g>=0, r>=2, d>=1)")
    return [
        interpolation_verdict(CurveClass(g, r, d))
        for g in range(g_max + 1)
        for r in range(2, r_max + 1)
        for d in range(1, d_max + 1)
    ]


_CSV_COLUMNS = [
    "g", "r", "d", "rho", "bn_exists", "bn_dim", "expected_points",
    "interpolates", "exception_note", "nb_char0", "nb_char2",
]


def bn_table_csv(reports) -> str:
    """CSV rendering of reports, with empty cells for non-applicable fields."""

    def cell(v):
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for rep in reports:
        c = rep.curve
        writer.writerow(
            [
                cell(c.g),
                cell(c.r),
                cell(c.d),
                cell(rep.rho),
                cell(rep.bn_exists),
                cell(rep.bn_dim),
                cell(rep.expected_points),
                cell(rep.interpolates),
                cell(rep.exception_note),
                cell(normal_bundle_verdict(c, 0)),
                cell(normal_bundle_verdict(c, 2)),
            ]
        )
    return buf.getvalue()
