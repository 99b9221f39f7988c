"""Rulings of smooth quadric surfaces and exact real points on their lines.

A quadric presented as ab = cd for four linear forms carries two rulings:
family A is {t*a - s*c, s*b - t*d}, family B is {t*a - s*d, s*b - t*c}, for
projective parameters (s : t).  A line is tested for a real point by
splitting its two complex forms into four real linear forms and computing
the exact kernel of the resulting rational 4x4 system: the kernel dimension
is the certificate, and a kernel vector is the real point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .certificates import FAIL, PASS, Certificate, Check
from .errors import (
    InternalInconsistencyError,
    LineNotOnQuadricError,
    ValidationError,
)
from .gaussian import GaussianRational, I, ONE, ZERO
from .multipoly import MultiPoly

_VARS = ("z0", "z1", "z2", "z3")


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^3 with exact homogeneous coordinates, not all zero."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(GaussianRational.coerce(c) for c in self.coords)
        if not any(coords):
            raise ValidationError("projective points need a nonzero coordinate")
        object.__setattr__(self, "coords", coords)

    def canonical(self) -> "ProjPoint":
        lead = next(c for c in self.coords if c)
        return ProjPoint(tuple(c / lead for c in self.coords))

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coords)

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ProjLine:
    """Intersection of two independent linear forms, stored as coefficient rows."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(GaussianRational.coerce(c) for c in row) for row in self.rows)
        if len(rows) != 2 or any(len(r) != 4 for r in rows):
            raise ValidationError("a line is cut out by exactly two forms on P^3")
        if linalg.matrix_rank([list(r) for r in rows]) != 2:
            raise ValidationError("the two line forms must be linearly independent")
        object.__setattr__(self, "rows", rows)

    def form_polys(self) -> tuple:
        return tuple(
            MultiPoly(_VARS, {tuple(1 if i == j else 0 for i in range(4)): c
                              for j, c in enumerate(row) if c})
            for row in self.rows
        )

    def spanning_points(self) -> tuple:
        """Two independent points spanning the line (exact kernel basis)."""
        rank, basis = linalg.nullspace([list(r) for r in self.rows], 4)
        if len(basis) != 2:
            raise InternalInconsistencyError("a line must have a 2-dimensional span")
        return tuple(ProjPoint(tuple(v)) for v in basis)

    def contains(self, point: ProjPoint) -> bool:
        return all(
            not sum((c * x for c, x in zip(row, point.coords)), ZERO)
            for row in self.rows
        )


@dataclass(frozen=True)
class RulingParam:
    """Projective parameter (s : t) in ruling family "A" or "B"."""

    family: str
    s: GaussianRational
    t: GaussianRational

    def __post_init__(self):
        if self.family not in ("A", "B"):
            raise ValidationError(f"ruling family must be A or B, got {self.family!r}")
        s = GaussianRational.coerce(self.s)
        t = GaussianRational.coerce(self.t)
        if not s and not t:
            raise ValidationError("the ruling parameter (s : t) cannot be (0 : 0)")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class QuadricSplit:
    """A quadric written as ab = cd with four linear forms over (z0..z3)."""

    name: str
    a: tuple
    b: tuple
    c: tuple
    d: tuple
    homogenizer: int  # index of the coordinate that is 1 on the affine slice

    def form(self, row) -> MultiPoly:
        return MultiPoly(
            _VARS,
            {tuple(1 if i == j else 0 for i in range(4)): GaussianRational.coerce(coeff)
             for j, coeff in enumerate(row) if GaussianRational.coerce(coeff)},
        )

    @property
    def quadric_poly(self) -> MultiPoly:
        return self.form(self.a) * self.form(self.b) - self.form(self.c) * self.form(self.d)

    def evaluate_quadric(self, point: ProjPoint) -> GaussianRational:
        values = dict(zip(_VARS, point.coords))
        return self.quadric_poly.evaluate(values)


def _row(*entries):
    return tuple(GaussianRational.coerce(e) for e in entries)


# Signature (3,1) quadric z0^2 + z1^2 + z2^2 - z3^2 = 0: its real locus is
# the unit sphere in the chart z3 = 1, which carries no real line
SPHERE_QUADRIC = QuadricSplit(
    name="z0^2+z1^2+z2^2-z3^2",
    a=_row(1, I, 0, 0),
    b=_row(1, -I, 0, 0),
    c=_row(0, 0, 1, 1),
    d=_row(0, 0, -1, 1),
    homogenizer=3,
)

# The boundary sphere {x1^2+x2^2+x3^2 = 1, x4 = 0} homogenized by z0:
# z1^2 + z2^2 + z3^2 - z0^2 = 0
BOUNDARY_QUADRIC = QuadricSplit(
    name="z1^2+z2^2+z3^2-z0^2",
    a=_row(0, 1, I, 0),
    b=_row(0, 1, -I, 0),
    c=_row(1, 0, 0, 1),
    d=_row(1, 0, 0, -1),
    homogenizer=0,
)

# Control with empty real locus: z0^2 + z1^2 + z2^2 + z3^2 = 0
CONTROL_QUADRIC = QuadricSplit(
    name="z0^2+z1^2+z2^2+z3^2",
    a=_row(1, I, 0, 0),
    b=_row(1, -I, 0, 0),
    c=_row(0, 0, I, -1),
    d=_row(0, 0, I, 1),
    homogenizer=0,
)


def ruling_line(param: RulingParam, split: QuadricSplit = SPHERE_QUADRIC) -> ProjLine:
    """The line of the chosen ruling at parameter (s : t), certified on the quadric."""
    s, t = param.s, param.t
    if param.family == "A":
        rows = (
            tuple(t * ai - s * ci for ai, ci in zip(split.a, split.c)),
            tuple(s * bi - t * di for bi, di in zip(split.b, split.d)),
        )
    else:
        rows = (
            tuple(t * ai - s * di for ai, di in zip(split.a, split.d)),
            tuple(s * bi - t * ci for bi, ci in zip(split.b, split.c)),
        )
    line = ProjLine(rows)
    if not line_on_quadric(line, split):
        raise InternalInconsistencyError("a ruling line left its quadric")
    return line


def line_on_quadric(line: ProjLine, split: QuadricSplit) -> bool:
    """Exact containment: the quadric vanishes on a spanning pair and their sum."""
    u, w = line.spanning_points()
    mixed = ProjPoint(tuple(a + b for a, b in zip(u.coords, w.coords)))
    return all(not split.evaluate_quadric(p) for p in (u, w, mixed))


def real_point(line: ProjLine, split: QuadricSplit = SPHERE_QUADRIC):
    """Exact real point of a line on the quadric, with the kernel dimension.

    The two complex forms become four rational real forms; the returned
    nullity is the dimension of their real kernel, and for nullity >= 1 the
    canonical kernel vector is a real point on the line (and hence on the
    quadric).  Raises LINE_NOT_ON_QUADRIC for lines off the quadric.
    """
    if not line_on_quadric(line, split):
        raise LineNotOnQuadricError(f"line is not contained in {split.name}")
    real_rows = []
    for row in line.rows:
        real_rows.append([GaussianRational(c.re) for c in row])
        real_rows.append([GaussianRational(c.im) for c in row])
    rank, basis = linalg.nullspace(real_rows, 4)
    nullity = 4 - rank
    if nullity == 0:
        return None, 0
    point = ProjPoint(tuple(basis[0])).canonical()
    if not point.is_real():
        raise InternalInconsistencyError("kernel of a real system must be real")
    if not line.contains(point) or split.evaluate_quadric(point):
        raise InternalInconsistencyError("computed real point fails an exact check")
    return point, nullity


def lines_disjoint(l1: ProjLine, l2: ProjLine) -> bool:
    """Exact rank-4 check: the four forms have no common projective zero."""
    rows = [list(r) for r in l1.rows] + [list(r) for r in l2.rows]
    return linalg.matrix_rank(rows) == 4


def sample_param(rng: random.Random, family: str) -> RulingParam:
    """Seeded Gaussian-rational parameter with numerators/denominators in [-20, 20]."""
    def coord():
        return GaussianRational(
            Fraction(rng.randint(-20, 20), rng.randint(1, 20)),
            Fraction(rng.randint(-20, 20), rng.randint(1, 20)),
        )

    while True:
        s, t = coord(), coord()
        if s or t:
            return RulingParam(family=family, s=s, t=t)


def verify_boundary_cover(tower, trials: int, seed: int) -> Certificate:
    """Boundary-cover ingredient: every sampled ruling line meets the real sphere.

    Checks (a) the tower's exceptional-divisor slice is the unit-sphere
    equation, and (b) for ``trials`` sampled parameters per ruling family the
    line has an exact real point whose affine representative lies on
    {x1^2+x2^2+x3^2 = 1, x4 = 0}.
    """
    if trials < 1:
        raise ValidationError("need at least one trial")
    checks = []
    level0 = tower.level(0)
    chart = level0.chart
    sphere = (
        chart.var(chart.variables[0]) ** 2
        + chart.var(chart.variables[1]) ** 2
        + chart.var(chart.variables[2]) ** 2
        - MultiPoly.constant(chart.variables, ONE)
    )
    slice_ok = (
        level0.hypersurface.equation == sphere
        and chart.variables[3] not in level0.hypersurface.equation.variables_used()
    )
    checks.append(
        Check(
            name="exceptional-slice-equation",
            status=PASS if slice_ok else FAIL,
            witness=str(level0.hypersurface.equation),
        )
    )

    rng = random.Random(seed)
    samples = []
    all_ok = True
    for family in ("A", "B"):
        for index in range(trials):
            param = sample_param(rng, family)
            line = ruling_line(param, BOUNDARY_QUADRIC)
            point, nullity = real_point(line, BOUNDARY_QUADRIC)
            entry = {
                "family": family,
                "index": index,
                "s": str(param.s),
                "t": str(param.t),
                "nullity": nullity,
            }
            ok = nullity == 1 and point is not None
            if ok:
                h = point.coords[BOUNDARY_QUADRIC.homogenizer]
                if not h:
                    ok = False
                    entry["reason"] = "real point at infinity"
                else:
                    affine = [point.coords[i] / h for i in (1, 2, 3)]
                    on_sphere = sum(
                        (x * x for x in affine), ZERO
                    ) == GaussianRational(1)
                    entry["point"] = str(point.canonical())
                    entry["on_sphere"] = on_sphere
                    ok = ok and on_sphere
            else:
                entry["reason"] = f"nullity {nullity}"
            entry["ok"] = ok
            all_ok = all_ok and ok
            samples.append(entry)
    checks.append(
        Check(
            name="ruling-real-points",
            status=PASS if all_ok else FAIL,
            witness=f"{2 * trials} sampled lines, families A and B",
        )
    )
    status = PASS if (slice_ok and all_ok) else FAIL
    return Certificate(
        command="quadric-boundary-cover",
        status=status,
        params={"trials": trials, "k": tower.k},
        checks=checks,
        branches=samples,
        seed=seed,
        justification=(
            "each fiber line of the exceptional quadric carries an exact real "
            "point, which lies on the boundary sphere of the real slice"
        ),
    )


def control_cover_certificate(trials: int, seed: int) -> Certificate:
    """Same sampling against the definite quadric: must FAIL with nullity 0."""
    rng = random.Random(seed)
    samples = []
    any_real = False
    for family in ("A", "B"):
        for index in range(trials):
            param = sample_param(rng, family)
            line = ruling_line(param, CONTROL_QUADRIC)
            point, nullity = real_point(line, CONTROL_QUADRIC)
            samples.append(
                {"family": family, "index": index, "nullity": nullity}
            )
            if nullity:
                any_real = True
    status = FAIL if not any_real else PASS
    return Certificate(
        command="quadric-control",
        status=status,
        params={"trials": trials},
        checks=[
            Check(
                name="control-lines-have-no-real-points",
                status=status,
                witness="nullity 0 on every sampled line" if not any_real else "unexpected real point",
            )
        ],
        branches=samples,
        seed=seed,
        justification="the control quadric has empty real locus, so no line has a real point",
    )
