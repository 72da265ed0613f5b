"""Seeded generation of fully rational scenes.

A scene is a triangle ABC with a circle cutting each sideline in two
rational points.  The rationality backbone is the tangent half-angle
parametrization of a circle with rational center and rational radius:
every parameter value yields a rational point, so every object derived
downstream stays rational and every theorem becomes an exact identity.

Degeneracy policy is reject-and-resample: a candidate scene is accepted
only if the whole construction pipeline completes on it, so accepted
scenes never produce degenerate verification results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import List, Optional, Sequence, Tuple

from .geom import (
    Degenerate,
    GeometryError,
    Point,
    Circle,
    Line,
    dot,
    foot_perpendicular,
    intersect_lines,
    isogonal_conjugate,
    line_through,
    on_circle,
    on_line,
    orientation,
    perpendicular_bisector,
    rat,
    RationalLike,
)


class GenerationExhausted(GeometryError):
    """Resampling gave up; the parameter bounds admit no valid scene."""


@dataclass(frozen=True)
class Scene:
    """Triangle with an inscribed-chord circle and its six incidence points.

    a1, a2 lie on sideline BC; b1, b2 on CA; c1, c2 on AB; all six on gamma,
    whose center is o.  Classical scenes alias the incidence points to the
    vertices (a1=b, b1=c, c1=a, a2=c, b2=a, c2=b) and gamma is then the
    circumcircle.
    """

    a: Point
    b: Point
    c: Point
    gamma: Circle
    o: Point
    a1: Point
    a2: Point
    b1: Point
    b2: Point
    c1: Point
    c2: Point
    classical: bool = False
    strict_segments: bool = False

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    @property
    def incidence_points(self) -> Tuple[Point, ...]:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    def sidelines(self) -> Tuple[Line, Line, Line]:
        """(BC, CA, AB)."""
        return (
            line_through(self.b, self.c),
            line_through(self.c, self.a),
            line_through(self.a, self.b),
        )


@dataclass(frozen=True)
class SceneParams:
    """Generation parameters.  Caps bound |numerator| and denominator of the
    six chord parameters; small caps keep big-integer growth through the
    pipeline manageable."""

    seed: int
    center: Point = field(default_factory=lambda: Point(0, 0))
    radius: Fraction = Fraction(1)
    numerator_cap: int = 50
    denominator_cap: int = 50
    strict_segments: bool = False
    max_attempts: int = 500

    def __post_init__(self):
        if not isinstance(self.radius, Fraction):
            object.__setattr__(self, "radius", rat(self.radius))
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.numerator_cap < 1 or self.denominator_cap < 1:
            raise ValueError("parameter caps must be positive")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")


@dataclass(frozen=True)
class KwonScene:
    """Two inscribed triangles DEF, XYZ whose chord perpendicular bisectors
    concur at t (the third bisector is forced by reflecting f across the
    foot of t on AB)."""

    a: Point
    b: Point
    c: Point
    d: Point
    e: Point
    f: Point
    x: Point
    y: Point
    z: Point
    t: Point


def circle_point_from_parameter(t: RationalLike, center: Point, radius: RationalLike) -> Point:
    """Rational point of the circle at tangent half-angle parameter t:
    center + radius * ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))."""
    t = rat(t)
    radius = rat(radius)
    if radius <= 0:
        raise Degenerate("circle parametrization", "radius must be positive")
    den = 1 + t * t
    return Point(
        center.x + radius * (1 - t * t) / den,
        center.y + radius * 2 * t / den,
    )


def _between(p: Point, end1: Point, end2: Point) -> bool:
    """p on segment [end1, end2], assuming p on the line; exact comparison of
    the affine coordinate."""
    d = end2 - end1
    t = dot(p - end1, d)
    return 0 <= t <= dot(d, d)


def scene_from_parameters(
    ts: Sequence[RationalLike],
    center: Point,
    radius: RationalLike,
    strict_segments: bool = False,
) -> Scene:
    """Build a scene from six explicit chord parameters (a1, a2, b1, b2, c1, c2).

    The chord a1-a2 becomes sideline BC, b1-b2 becomes CA, c1-c2 becomes AB;
    vertices are the pairwise chord intersections.  Raises on any local
    degeneracy (repeated parameters, parallel chords, collinear vertices,
    incidence point coinciding with a vertex); orientation is fixed by one
    label swap.
    """
    values = [rat(t) for t in ts]
    if len(values) != 6:
        raise ValueError("exactly six chord parameters are required")
    if len(set(values)) != 6:
        raise Degenerate("scene", "repeated chord parameter")
    radius = rat(radius)
    a1, a2, b1, b2, c1, c2 = (circle_point_from_parameter(t, center, radius) for t in values)

    chord_bc = line_through(a1, a2)
    chord_ca = line_through(b1, b2)
    chord_ab = line_through(c1, c2)
    a = intersect_lines(chord_ca, chord_ab)
    b = intersect_lines(chord_ab, chord_bc)
    c = intersect_lines(chord_bc, chord_ca)

    if a == b or b == c or a == c or orientation(a, b, c) == 0:
        raise Degenerate("scene", "degenerate triangle")
    if orientation(a, b, c) < 0:
        # Swapping B and C keeps sideline BC fixed and exchanges CA with AB,
        # so the chord pairs on those sides swap labels with it.
        b, c = c, b
        b1, b2, c1, c2 = c1, c2, b1, b2

    incidences = (a1, a2, b1, b2, c1, c2)
    if any(p in (a, b, c) for p in incidences):
        raise Degenerate("scene", "incidence point coincides with a vertex")
    if strict_segments:
        for p, e1, e2 in ((a1, b, c), (a2, b, c), (b1, c, a), (b2, c, a), (c1, a, b), (c2, a, b)):
            if not _between(p, e1, e2):
                raise Degenerate("scene", "incidence point outside the closed segment")

    gamma = Circle.from_center_radius2(center, radius * radius)
    return Scene(
        a=a, b=b, c=c, gamma=gamma, o=center,
        a1=a1, a2=a2, b1=b1, b2=b2, c1=c1, c2=c2,
        strict_segments=strict_segments,
    )


def _draw_parameter(rng: Random, params: SceneParams) -> Fraction:
    return Fraction(
        rng.randint(-params.numerator_cap, params.numerator_cap),
        rng.randint(1, params.denominator_cap),
    )


def generate_scene(params: SceneParams) -> Scene:
    """Draw chord parameters until the full construction pipeline accepts.

    Rejected and resampled: repeated parameters, parallel chords, degenerate
    triangles, incidence points falling on vertices, and any downstream
    degeneracy reported by the configuration pipeline (including the
    collapsed case where the two Miquel points coincide).  Deterministic for
    a fixed seed.
    """
    from .pipeline import compute_configuration  # deferred: pipeline builds on scenes

    rng = Random(params.seed)
    for _ in range(params.max_attempts):
        ts = [_draw_parameter(rng, params) for _ in range(6)]
        try:
            scene = scene_from_parameters(
                ts, params.center, params.radius, params.strict_segments
            )
            cfg = compute_configuration(scene)
            if not cfg.complete:
                continue
            # The verification suite additionally needs the isogonal image
            # of P; probe it so accepted scenes never degenerate there.
            isogonal_conjugate(cfg.p, scene.a, scene.b, scene.c)
        except GeometryError:
            continue
        return scene
    raise GenerationExhausted(
        f"no valid scene within {params.max_attempts} attempts (seed {params.seed})"
    )


def classical_brocard_scene(
    t1: RationalLike,
    t2: RationalLike,
    t3: RationalLike,
    center: Optional[Point] = None,
    radius: RationalLike = 1,
) -> Scene:
    """Scene whose circle is the circumcircle itself: the incidence points
    alias to the vertices (a1=b, b1=c, c1=a, a2=c, b2=a, c2=b), which turns
    the two Miquel points into the classical Brocard points."""
    center = center if center is not None else Point(0, 0)
    values = [rat(t) for t in (t1, t2, t3)]
    if len(set(values)) != 3:
        raise GenerationExhausted("classical scene needs three distinct parameters")
    radius = rat(radius)
    a, b, c = (circle_point_from_parameter(t, center, radius) for t in values)
    if orientation(a, b, c) == 0:
        raise GenerationExhausted("classical scene parameters give collinear points")
    if orientation(a, b, c) < 0:
        b, c = c, b
    gamma = Circle.from_center_radius2(center, radius * radius)
    return Scene(
        a=a, b=b, c=c, gamma=gamma, o=center,
        a1=b, a2=c, b1=c, b2=a, c1=a, c2=b,
        classical=True,
    )


def kwon_scene(seed: int, max_attempts: int = 200) -> KwonScene:
    """Two inscribed triangles with concurrent chord perpendicular bisectors.

    d, x on BC and e, y on CA are drawn freely; t is the meet of the first
    two bisectors; z is then the reflection of a free f across the foot of t
    on AB, which forces the third bisector through t exactly.
    """
    from .pipeline import miquel_point  # deferred: probe Miquel constructibility

    rng = Random(seed)

    def draw_rat(lo: int, hi: int) -> Fraction:
        return Fraction(rng.randint(lo, hi), rng.randint(1, 6))

    for _ in range(max_attempts):
        a = Point(draw_rat(-12, 12), draw_rat(-12, 12))
        b = Point(draw_rat(-12, 12), draw_rat(-12, 12))
        c = Point(draw_rat(-12, 12), draw_rat(-12, 12))
        if orientation(a, b, c) == 0:
            continue
        if orientation(a, b, c) < 0:
            b, c = c, b

        def on_side(p1: Point, p2: Point) -> Point:
            t = draw_rat(-2, 8) / 6  # mostly inside the segment, sometimes beyond
            return p1 + t * (p2 - p1)

        d, x = on_side(b, c), on_side(b, c)
        e, y = on_side(c, a), on_side(c, a)
        f = on_side(a, b)
        try:
            if d == x or e == y:
                continue
            t = intersect_lines(perpendicular_bisector(d, x), perpendicular_bisector(e, y))
            z = 2 * foot_perpendicular(t, line_through(a, b)) - f
            kw = KwonScene(a=a, b=b, c=c, d=d, e=e, f=f, x=x, y=y, z=z, t=t)
            # Both Miquel points must be constructible for the check to run.
            miquel_point(kw.d, kw.e, kw.f, a, b, c)
            miquel_point(kw.x, kw.y, kw.z, a, b, c)
        except GeometryError:
            continue
        return kw
    raise GenerationExhausted(f"no valid Kwon scene within {max_attempts} attempts (seed {seed})")


def validate_scene(s: Scene) -> List[str]:
    """Re-check every scene invariant with exact predicates; empty iff valid."""
    violations: List[str] = []
    try:
        bc, ca, ab = s.sidelines()
    except GeometryError:
        return ["triangle vertices are not pairwise distinct"]

    for name, p, l, side in (
        ("a1", s.a1, bc, "BC"), ("a2", s.a2, bc, "BC"),
        ("b1", s.b1, ca, "CA"), ("b2", s.b2, ca, "CA"),
        ("c1", s.c1, ab, "AB"), ("c2", s.c2, ab, "AB"),
    ):
        if not on_line(p, l):
            violations.append(f"{name} not on {side}")
    for name, p in zip(("a1", "a2", "b1", "b2", "c1", "c2"), s.incidence_points):
        if not on_circle(p, s.gamma):
            violations.append(f"{name} not on gamma")
    if s.o != s.gamma.center:
        violations.append("o is not the center of gamma")
    if s.gamma.radius2 <= 0:
        violations.append("gamma has non-positive squared radius")
    if orientation(s.a, s.b, s.c) <= 0:
        violations.append("orientation: triangle is not anticlockwise")

    if s.classical:
        aliases = (
            ("a1", s.a1, s.b), ("a2", s.a2, s.c), ("b1", s.b1, s.c),
            ("b2", s.b2, s.a), ("c1", s.c1, s.a), ("c2", s.c2, s.b),
        )
        for name, p, v in aliases:
            if p != v:
                violations.append(f"classical aliasing broken for {name}")
    else:
        pts = s.incidence_points
        if len(set(pts)) != 6:
            violations.append("incidence points are not pairwise distinct")
        if any(p in s.vertices for p in pts):
            violations.append("incidence point coincides with a vertex")

    if s.strict_segments:
        for name, p, e1, e2 in (
            ("a1", s.a1, s.b, s.c), ("a2", s.a2, s.b, s.c),
            ("b1", s.b1, s.c, s.a), ("b2", s.b2, s.c, s.a),
            ("c1", s.c1, s.a, s.b), ("c2", s.c2, s.a, s.b),
        ):
            if not _between(p, e1, e2):
                violations.append(f"{name} outside the closed segment")
    return violations
