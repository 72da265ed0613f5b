"""Exact rational plane-geometry kernel.

Every coordinate and every derived quantity is an exact rational
(``fractions.Fraction``).  There is no epsilon and no floating point
anywhere in this module: a point lies on a circle iff the defining
polynomial vanishes identically, so every predicate is a decision, not an
approximation.

Conventions:

* ``Line(a, b, c)`` is the locus a*x + b*y + c = 0.  Coefficients are
  canonicalized to a coprime integer triple whose first nonzero entry is
  positive, so structural equality coincides with geometric equality and
  lines hash deterministically.
* ``Circle(d, e, f)`` is the monic quadratic x^2 + y^2 + d*x + e*y + f = 0.
  Monic storage makes the radical axis of two circles a plain coefficient
  difference, and "second intersection through a known common point"
  reduces to Vieta's formulas.  No square root is ever taken; the general
  two-circle intersection (which would need one) is deliberately absent.
* Angles between lines are projective classes (cross : dot) modulo pi,
  compared by cross-multiplication.  Arc measures and inverse
  trigonometric functions are never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Optional, Tuple, Union

RationalLike = Union[int, str, Fraction]


# ---------------------------------------------------------------------------
# Errors


class GeometryError(Exception):
    """Base class for every degeneracy the kernel can report."""


class CoincidentPoints(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class PointNotOnCircle(GeometryError):
    pass


class PointNotOnLine(GeometryError):
    pass


class CirclesIdentical(GeometryError):
    pass


class CenterDegenerate(GeometryError):
    """Pole or polar would lie at infinity."""


class ParallelLines(GeometryError):
    def __init__(self, message: str = "lines are parallel", identical: bool = False):
        super().__init__(message)
        self.identical = identical


class Degenerate(GeometryError):
    """A named construction failed; ``name`` identifies what broke."""

    def __init__(self, name: str, message: str = ""):
        super().__init__(f"{name}: {message}" if message else name)
        self.name = name


# ---------------------------------------------------------------------------
# Scalars


def rat(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/7"`` to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None if it is not a perfect square."""
    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _det3(
    a: Fraction, b: Fraction, c: Fraction,
    d: Fraction, e: Fraction, f: Fraction,
    g: Fraction, h: Fraction, i: Fraction,
) -> Fraction:
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


# ---------------------------------------------------------------------------
# Points (also used as displacement vectors)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", rat(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", rat(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __rmul__(self, k: RationalLike) -> "Point":
        k = rat(k)
        return Point(k * self.x, k * self.y)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def cross(u: Point, v: Point) -> Fraction:
    """2D cross product of two displacement vectors."""
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def dist2(p: Point, q: Point) -> Fraction:
    """Squared distance.  Plain distance would need a square root."""
    d = q - p
    return d.x * d.x + d.y * d.y


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the signed area of p-q-r: +1 anticlockwise, -1 clockwise, 0 collinear."""
    return sign(cross(q - p, r - p))


# ---------------------------------------------------------------------------
# Exact complex numbers (spiral-similarity data)


@dataclass(frozen=True)
class ComplexScalar:
    """Complex number with exact rational real and imaginary parts.

    Spiral similarities are stored as these ratios; the rotation angle is
    the argument and the scale factor the modulus, but neither is ever
    materialized as a real number.
    """

    re: Fraction
    im: Fraction

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", rat(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", rat(self.im))

    @classmethod
    def from_vector(cls, v: Point) -> "ComplexScalar":
        return cls(v.x, v.y)

    def conj(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def __mul__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "ComplexScalar") -> "ComplexScalar":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise Degenerate("complex division", "divisor is zero")
        return ComplexScalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def apply_to(self, v: Point) -> Point:
        """Multiply the displacement vector v by this complex number."""
        return Point(self.re * v.x - self.im * v.y, self.re * v.y + self.im * v.x)


def complex_ratio(u: Point, v: Point) -> ComplexScalar:
    """The complex number u / v, reading displacement vectors as complex."""
    return ComplexScalar.from_vector(u) / ComplexScalar.from_vector(v)


# ---------------------------------------------------------------------------
# Lines


def _canonical_int_tuple(*values: Fraction) -> Tuple[int, ...]:
    """Scale a rational tuple to coprime integers, first nonzero positive."""
    den = lcm(*(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = gcd(*ints)
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Line:
    """Oriented locus a*x + b*y + c = 0, canonicalized on construction."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = rat(self.a), rat(self.b), rat(self.c)
        if a == 0 and b == 0:
            raise Degenerate("line", "normal vector (a, b) is zero")
        ia, ib, ic = _canonical_int_tuple(a, b, c)
        object.__setattr__(self, "a", ia)
        object.__setattr__(self, "b", ib)
        object.__setattr__(self, "c", ic)

    def eval(self, p: Point) -> Fraction:
        """Signed residual of p in the line equation; zero iff p is on the line."""
        return self.a * p.x + self.b * p.y + self.c

    @property
    def direction(self) -> Point:
        return Point(self.b, -self.a)

    def __repr__(self) -> str:
        return f"Line({self.a}, {self.b}, {self.c})"


# ---------------------------------------------------------------------------
# Circles


@dataclass(frozen=True)
class Circle:
    """Monic circle x^2 + y^2 + d*x + e*y + f = 0."""

    d: Fraction
    e: Fraction
    f: Fraction

    def __post_init__(self):
        for name in ("d", "e", "f"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, rat(v))

    @classmethod
    def from_center_radius2(cls, center: Point, radius2: RationalLike) -> "Circle":
        r2 = rat(radius2)
        if r2 <= 0:
            raise Degenerate("circle", "radius squared must be positive")
        return cls(-2 * center.x, -2 * center.y, center.x * center.x + center.y * center.y - r2)

    @property
    def center(self) -> Point:
        return Point(-self.d / 2, -self.e / 2)

    @property
    def radius2(self) -> Fraction:
        return self.d * self.d / 4 + self.e * self.e / 4 - self.f

    def eval(self, p: Point) -> Fraction:
        """Power of the point p; zero iff p is on the circle."""
        return p.x * p.x + p.y * p.y + self.d * p.x + self.e * p.y + self.f

    def __repr__(self) -> str:
        return f"Circle({self.d}, {self.e}, {self.f})"


# ---------------------------------------------------------------------------
# Directed angles modulo pi


@dataclass(frozen=True)
class DirectedAngleClass:
    """Angle between two lines modulo pi, as the projective pair (cross : dot).

    Classes (u, v) and (k*u, k*v) are equal for any k != 0; canonicalization
    to a coprime integer pair makes that structural.
    """

    cross: int
    dot: int

    def __post_init__(self):
        u, v = rat(self.cross), rat(self.dot)
        if u == 0 and v == 0:
            raise Degenerate("angle class", "(cross, dot) is zero")
        iu, iv = _canonical_int_tuple(u, v)
        object.__setattr__(self, "cross", iu)
        object.__setattr__(self, "dot", iv)

    def __neg__(self) -> "DirectedAngleClass":
        return DirectedAngleClass(-self.cross, self.dot)


def directed_angle(l1: Line, l2: Line) -> DirectedAngleClass:
    """Directed angle from l1 to l2 modulo pi."""
    return DirectedAngleClass(
        l1.a * l2.b - l2.a * l1.b,
        l1.a * l2.a + l1.b * l2.b,
    )


def directed_angle_equal(pair1: Tuple[Line, Line], pair2: Tuple[Line, Line]) -> bool:
    """Exact mod-pi equality of two angles, without any trigonometry."""
    return directed_angle(*pair1) == directed_angle(*pair2)


def angle_at(vertex: Point, p: Point, q: Point) -> DirectedAngleClass:
    """Directed angle (mod pi) at ``vertex`` from line vertex-p to line vertex-q."""
    return directed_angle(line_through(vertex, p), line_through(vertex, q))


# ---------------------------------------------------------------------------
# Constructions


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise CoincidentPoints(f"no unique line through {p} twice")
    return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def intersect_lines(l1: Line, l2: Line) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        raise ParallelLines(identical=(l1 == l2))
    return Point(
        Fraction(l1.b * l2.c - l2.b * l1.c, det),
        Fraction(l2.a * l1.c - l1.a * l2.c, det),
    )


def parallel_through(p: Point, l: Line) -> Line:
    return Line(l.a, l.b, -(l.a * p.x + l.b * p.y))


def perpendicular_through(p: Point, l: Line) -> Line:
    return Line(l.b, -l.a, -(l.b * p.x - l.a * p.y))


def perpendicular_bisector(p: Point, q: Point) -> Line:
    if p == q:
        raise CoincidentPoints("perpendicular bisector of a point with itself")
    return Line(
        2 * (q.x - p.x),
        2 * (q.y - p.y),
        p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y,
    )


def foot_perpendicular(p: Point, l: Line) -> Point:
    t = l.eval(p) / (l.a * l.a + l.b * l.b)
    return Point(p.x - t * l.a, p.y - t * l.b)


def circumcircle(p: Point, q: Point, r: Point) -> Circle:
    det = _det3(p.x, p.y, rat(1), q.x, q.y, rat(1), r.x, r.y, rat(1))
    if det == 0:
        raise CollinearPoints("no circle through collinear points")
    sp = -(p.x * p.x + p.y * p.y)
    sq = -(q.x * q.x + q.y * q.y)
    sr = -(r.x * r.x + r.y * r.y)
    d = _det3(sp, p.y, rat(1), sq, q.y, rat(1), sr, r.y, rat(1)) / det
    e = _det3(p.x, sp, rat(1), q.x, sq, rat(1), r.x, sr, rat(1)) / det
    f = _det3(p.x, p.y, sp, q.x, q.y, sq, r.x, r.y, sr) / det
    return Circle(d, e, f)


def circle_through_tangent(t: Point, l: Line, p: Point) -> Circle:
    """Circle through p tangent to l at t (the degenerate limit of a circumcircle
    as one defining point slides into t along l)."""
    if not on_line(t, l):
        raise Degenerate("tangent circle", "tangency point is not on the line")
    if p == t:
        raise Degenerate("tangent circle", "third point coincides with tangency point")
    if on_line(p, l):
        raise Degenerate("tangent circle", "third point lies on the tangent line")
    center = intersect_lines(perpendicular_through(t, l), perpendicular_bisector(t, p))
    return Circle.from_center_radius2(center, dist2(center, t))


def tangent_line(c: Circle, p: Point) -> Line:
    """Tangent to c at a point of c (the polar of a point on the circle)."""
    if not on_circle(p, c):
        raise PointNotOnCircle(f"{p} is not on {c}")
    return polar_of_point(p, c)


def antipode(p: Point, c: Circle) -> Point:
    if not on_circle(p, c):
        raise PointNotOnCircle(f"{p} is not on {c}")
    return 2 * c.center - p


def second_intersection_circle_line(c: Circle, l: Line, x: Point) -> Tuple[Point, bool]:
    """Other intersection of c and l given the known common point x.

    Parametrizes l as x + t*(b, -a); the quadratic in t has the known root
    t = 0, so Vieta gives the second root directly.  Returns (point, tangent)
    where tangent is True iff l touches c at x (double root).
    """
    if not on_line(x, l):
        raise PointNotOnLine(f"{x} is not on {l}")
    if not on_circle(x, c):
        raise PointNotOnCircle(f"{x} is not on {c}")
    a, b = l.a, l.b
    t = -(2 * x.x * b - 2 * x.y * a + c.d * b - c.e * a) / Fraction(a * a + b * b)
    if t == 0:
        return x, True
    return Point(x.x + t * b, x.y - t * a), False


def second_intersection_circles(c1: Circle, c2: Circle, x: Point) -> Tuple[Point, bool]:
    """Other common point of c1 and c2 given the known common point x.

    Square-root-free: the radical axis is the coefficient difference of the
    monic equations, a line through x; Vieta against the known root does the
    rest.  Returns (point, tangent).
    """
    if c1 == c2:
        raise CirclesIdentical("second intersection of a circle with itself")
    if not on_circle(x, c1):
        raise PointNotOnCircle(f"{x} is not on {c1}")
    if not on_circle(x, c2):
        raise PointNotOnCircle(f"{x} is not on {c2}")
    radical_axis = Line(c1.d - c2.d, c1.e - c2.e, c1.f - c2.f)
    return second_intersection_circle_line(c1, radical_axis, x)


def polar_of_point(p: Point, c: Circle) -> Line:
    if p == c.center:
        raise CenterDegenerate("polar of the center is the line at infinity")
    return Line(
        p.x + c.d / 2,
        p.y + c.e / 2,
        (c.d * p.x + c.e * p.y) / 2 + c.f,
    )


def pole_of_line(l: Line, c: Circle) -> Point:
    denom = Fraction(c.d * l.a + c.e * l.b, 2) - l.c
    if denom == 0:
        raise CenterDegenerate("pole of a line through the center is at infinity")
    lam = c.radius2 / denom
    return Point(lam * l.a - c.d / 2, lam * l.b - c.e / 2)


def isogonal_conjugate(p: Point, a: Point, b: Point, c: Point) -> Point:
    """Isogonal conjugate of p in triangle abc.

    Exact barycentric map (x : y : z) -> (la/x : lb/y : lc/z) with la, lb, lc
    the squared side lengths.  Undefined on the sidelines (a coordinate
    vanishes) and on the circumcircle (the image is at infinity).
    """
    total = cross(b - a, c - a)
    if total == 0:
        raise CollinearPoints("degenerate reference triangle")
    u = cross(b - p, c - p)
    v = cross(p - a, c - a)
    w = cross(b - a, p - a)
    if u == 0 or v == 0 or w == 0:
        raise Degenerate("isogonal conjugate", "point lies on a sideline")
    la, lb, lc = dist2(b, c), dist2(c, a), dist2(a, b)
    u2, v2, w2 = la / u, lb / v, lc / w
    s = u2 + v2 + w2
    if s == 0:
        raise Degenerate("isogonal conjugate", "point lies on the circumcircle")
    return Point(
        (u2 * a.x + v2 * b.x + w2 * c.x) / s,
        (u2 * a.y + v2 * b.y + w2 * c.y) / s,
    )


def simson_line(p: Point, a: Point, b: Point, c: Point) -> Line:
    """Line through the three pedal feet of p, defined only for p on the
    circumcircle of abc."""
    circ = circumcircle(a, b, c)
    if not on_circle(p, circ):
        raise PointNotOnCircle(f"{p} is not on the circumcircle")
    feet = [
        foot_perpendicular(p, line_through(b, c)),
        foot_perpendicular(p, line_through(c, a)),
        foot_perpendicular(p, line_through(a, b)),
    ]
    first = feet[0]
    other = next((f for f in feet[1:] if f != first), None)
    if other is None:
        raise Degenerate("simson line", "all pedal feet coincide")
    l = line_through(first, other)
    if any(not on_line(f, l) for f in feet):
        raise Degenerate("simson line", "pedal feet are not collinear")
    return l


# ---------------------------------------------------------------------------
# Predicates (exact determinant / dot / cross sign tests; no tolerances)


def on_line(p: Point, l: Line) -> bool:
    return l.eval(p) == 0


def on_circle(p: Point, c: Circle) -> bool:
    return c.eval(p) == 0


def collinear_det(p: Point, q: Point, r: Point) -> Fraction:
    return cross(q - p, r - p)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return collinear_det(p, q, r) == 0


def concyclic_det(p: Point, q: Point, r: Point, s: Point) -> Fraction:
    """Determinant vanishing iff the four points lie on a common circle or line."""
    rows = []
    for v in (p, q, r):
        u1, u2 = v.x - s.x, v.y - s.y
        rows.extend([u1, u2, u1 * u1 + u2 * u2])
    return _det3(*rows)


def concyclic(p: Point, q: Point, r: Point, s: Point) -> bool:
    return concyclic_det(p, q, r, s) == 0


def parallel(l1: Line, l2: Line) -> bool:
    return l1.a * l2.b - l2.a * l1.b == 0


def perpendicular(l1: Line, l2: Line) -> bool:
    return l1.a * l2.a + l1.b * l2.b == 0


def concurrent(l1: Line, l2: Line, l3: Line) -> bool:
    """True iff the three lines share a common (finite) point."""
    for m, n, k in ((l1, l2, l3), (l1, l3, l2), (l2, l3, l1)):
        if not parallel(m, n):
            return on_line(intersect_lines(m, n), k)
    return l1 == l2 == l3


# ---------------------------------------------------------------------------
# Orientation-reversing similarities


@dataclass(frozen=True)
class InverseSimilarity:
    """The map z -> alpha * conj(z) + beta on points read as complex numbers.

    Orientation-reversing: it sends anticlockwise triangles to clockwise ones.
    """

    alpha: ComplexScalar
    beta: ComplexScalar

    def apply(self, p: Point) -> Point:
        z = ComplexScalar(p.x, -p.y)  # conj(p)
        w = self.alpha * z + self.beta
        return Point(w.re, w.im)

    def verify(self, src: Point, dst: Point) -> bool:
        return self.apply(src) == dst


def inverse_similarity_map(src1: Point, dst1: Point, src2: Point, dst2: Point) -> InverseSimilarity:
    """The unique orientation-reversing similarity sending src1 -> dst1 and
    src2 -> dst2."""
    if src1 == src2:
        raise CoincidentPoints("similarity needs two distinct source points")
    zs1 = ComplexScalar(src1.x, -src1.y)
    zs2 = ComplexScalar(src2.x, -src2.y)
    zd1 = ComplexScalar(dst1.x, dst1.y)
    zd2 = ComplexScalar(dst2.x, dst2.y)
    alpha = (zd1 - zd2) / (zs1 - zs2)
    beta = zd1 - alpha * zs1
    return InverseSimilarity(alpha, beta)
