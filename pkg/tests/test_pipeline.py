"""Pipeline constructions: Miquel points, the full configuration, the
classical overlay, and the collapse path."""

from fractions import Fraction as F
from random import Random

import pytest

from brocard.geom import (
    Circle,
    Degenerate,
    Point,
    circumcircle,
    collinear,
    dist2,
    intersect_lines,
    isogonal_conjugate,
    line_through,
    midpoint,
    on_circle,
    on_line,
    orientation,
    parallel,
    perpendicular,
    simson_line,
)
from brocard.pipeline import (
    classical_overlay,
    compute_configuration,
    miquel_point,
    miquel_point_quadrangle,
    spiral_ratio,
    tangent_of_angle,
)
from brocard.scene import (
    Scene,
    SceneParams,
    circle_point_from_parameter,
    classical_brocard_scene,
    generate_scene,
    scene_from_parameters,
)


def random_triangle(rng: Random):
    while True:
        pts = [Point(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(3)]
        if orientation(*pts) > 0:
            return pts
        if orientation(*pts) < 0:
            pts[1], pts[2] = pts[2], pts[1]
            return pts


class TestMiquelPoint:
    def test_medial_triangle_gives_circumcenter(self):
        a, b, c = Point(0, 0), Point(4, 0), Point(1, 3)
        m = miquel_point(midpoint(b, c), midpoint(c, a), midpoint(a, b), a, b, c)
        assert m == circumcircle(a, b, c).center == Point(2, 1)

    def test_medial_triangle_random(self):
        rng = Random(4242)
        for _ in range(5):
            a, b, c = random_triangle(rng)
            m = miquel_point(midpoint(b, c), midpoint(c, a), midpoint(a, b), a, b, c)
            assert m == circumcircle(a, b, c).center

    def test_classical_aliasing_gives_brocard_point(self):
        s = classical_brocard_scene(0, 1, -1)
        omega = miquel_point(s.b, s.c, s.a, s.a, s.b, s.c)
        # the first Brocard point satisfies the equal-angle condition
        t1 = tangent_of_angle(s.a, s.b, omega)
        t2 = tangent_of_angle(s.b, s.c, omega)
        t3 = tangent_of_angle(s.c, s.a, omega)
        assert t1 == t2 == t3

    def test_misplaced_point_rejected(self):
        a, b, c = Point(0, 0), Point(4, 0), Point(1, 3)
        with pytest.raises(Degenerate):
            miquel_point(midpoint(c, a), midpoint(b, c), midpoint(a, b), a, b, c)


class TestMiquelQuadrangle:
    def test_square_degenerate(self):
        with pytest.raises(Degenerate) as err:
            miquel_point_quadrangle(Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1))
        assert err.value.name == "P"

    def test_memberships_on_random_quadrangle(self):
        pts = [circle_point_from_parameter(t, Point(0, 0), 1) for t in (F(0), F(1), F(-1), F(3))]
        m = miquel_point_quadrangle(*pts)
        pa, pb, pc, pd = pts
        p = intersect_lines(line_through(pa, pb), line_through(pc, pd))
        q = intersect_lines(line_through(pa, pd), line_through(pb, pc))
        for circle in (
            circumcircle(p, pa, pd),
            circumcircle(p, pb, pc),
            circumcircle(q, pa, pb),
            circumcircle(q, pc, pd),
        ):
            assert on_circle(m, circle)

    def test_cyclic_quadrangle_point_on_pq(self):
        pts = [circle_point_from_parameter(t, Point(2, -1), F(5, 2)) for t in (F(1, 2), F(2), F(-3), F(5))]
        m = miquel_point_quadrangle(*pts)
        p = intersect_lines(line_through(pts[0], pts[1]), line_through(pts[2], pts[3]))
        q = intersect_lines(line_through(pts[0], pts[3]), line_through(pts[1], pts[2]))
        assert on_line(m, line_through(p, q))


class TestSpiralRatio:
    def test_foot_maps_to_one(self):
        from brocard.geom import foot_perpendicular

        side = line_through(Point(0, 0), Point(4, 0))
        m = Point(1, 2)
        ft = foot_perpendicular(m, side)
        r = spiral_ratio(m, ft, side)
        assert (r.re, r.im) == (1, 0)

    def test_center_on_side_rejected(self):
        side = line_through(Point(0, 0), Point(4, 0))
        with pytest.raises(Degenerate):
            spiral_ratio(Point(2, 0), Point(1, 0), side)


class TestConfiguration:
    def test_worked_scene_memberships(self):
        s = scene_from_parameters([F(0), F(1), F(-1), F(3), F(1, 2), F(-2)], Point(0, 0), 1)
        cfg = compute_configuration(s)
        assert cfg.complete
        for pt in (cfg.p, cfg.q, cfg.o, cfg.r, cfg.a_prime, cfg.b_prime,
                   cfg.c_prime, cfg.t_a, cfg.t_b, cfg.t_c):
            assert on_circle(pt, cfg.brocard_circle)
        assert midpoint(cfg.o, cfg.r) == cfg.brocard_circle.center

    def test_isogonal_pair(self):
        s = generate_scene(SceneParams(seed=13))
        cfg = compute_configuration(s)
        assert isogonal_conjugate(cfg.p, s.a, s.b, s.c) == cfg.q

    def test_spiral_ratios_cancel(self):
        s = generate_scene(SceneParams(seed=17))
        cfg = compute_configuration(s)
        assert (cfg.r_p * cfg.r_q).im == 0

    def test_classical_r_equals_symmedian(self):
        cfg = compute_configuration(classical_brocard_scene(0, 1, -1))
        assert cfg.r == Point(F(1, 2), 0)

    def test_pascal_line_contains_finite_meets(self):
        s = generate_scene(SceneParams(seed=19))
        cfg = compute_configuration(s)
        assert collinear(cfg.a0, cfg.b0, cfg.c0)
        for pt in (cfg.a0, cfg.b0, cfg.c0):
            assert on_line(pt, cfg.pascal_line)

    def test_steiner_tarry_on_circumcircle(self):
        s = generate_scene(SceneParams(seed=23))
        cfg = compute_configuration(s)
        assert on_circle(cfg.steiner, cfg.circ)
        assert cfg.tarry == 2 * cfg.circ.center - cfg.steiner

    def test_simson_directions(self):
        s = generate_scene(SceneParams(seed=29))
        cfg = compute_configuration(s)
        or_line = line_through(cfg.o, cfg.r)
        assert parallel(simson_line(cfg.steiner, s.a, s.b, s.c), or_line)
        assert perpendicular(simson_line(cfg.tarry, s.a, s.b, s.c), or_line)


COLLAPSE_SCENE = Scene(
    a=Point(0, 9), b=Point(0, 0), c=Point(12, 0),
    gamma=Circle.from_center_radius2(Point(3, 3), 25), o=Point(3, 3),
    a1=Point(7, 0), a2=Point(-1, 0),
    b1=Point(F(8, 5), F(39, 5)), b2=Point(8, 3),
    c1=Point(0, -1), c2=Point(0, 7),
)


class TestCollapse:
    """A circle centered at the incenter cuts the sides in spiral-symmetric
    pairs, pulling both Miquel points into the incenter: the rational
    analogue of the equilateral classical collapse."""

    def test_scene_is_valid(self):
        from brocard.scene import validate_scene

        assert validate_scene(COLLAPSE_SCENE) == []

    def test_detected(self):
        cfg = compute_configuration(COLLAPSE_SCENE)
        assert cfg.collapsed
        assert cfg.p == cfg.q == Point(3, 3)
        assert not cfg.complete
        assert cfg.brocard_circle is None


class TestClassicalOverlay:
    def test_brocard_points_meet_tangent_circles(self):
        s = classical_brocard_scene(0, 1, 3)
        ov = classical_overlay(s)
        for circle in (ov.w_a, ov.w_b, ov.w_c):
            assert on_circle(ov.omega, circle)
        for circle in (ov.w_a_prime, ov.w_b_prime, ov.w_c_prime):
            assert on_circle(ov.omega_prime, circle)

    def test_r_equals_k_and_tangent_oracle(self):
        s = classical_brocard_scene(0, 1, 3)
        cfg = compute_configuration(s)
        ov = classical_overlay(s)
        assert ov.k == cfg.r
        area2 = F(2) * (s.b - s.a).x * (s.c - s.a).y - F(2) * (s.b - s.a).y * (s.c - s.a).x
        total = dist2(s.b, s.c) + dist2(s.c, s.a) + dist2(s.a, s.b)
        assert ov.tan_brocard == area2 / total

    def test_isoceles_mirror_symmetry(self):
        ov = classical_overlay(classical_brocard_scene(0, 1, -1))
        assert ov.omega.x == ov.omega_prime.x
        assert ov.omega.y == -ov.omega_prime.y

    def test_requires_classical_scene(self):
        s = generate_scene(SceneParams(seed=7))
        with pytest.raises(ValueError):
            classical_overlay(s)
