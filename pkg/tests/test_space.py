"""Core representation tests: norms, enumeration, duality, invariants."""

import random
from fractions import Fraction

import pytest

from polysphere import (
    AsymmetricInputError,
    DegenerateInputError,
    DimensionMismatchError,
    EnumerationCapError,
    GeometryError,
    PolyhedralSpace,
    functional,
    hexagon_space,
    l1_space,
    linf_space,
    vector,
)
from polysphere.linalg import solve
from polysphere.sampling import random_direction
from polysphere.space import as_fraction

F = Fraction


def hull_2d(points):
    """Independent exact convex hull oracle (monotone chain on Fractions)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


class TestScalars:
    def test_accepts_exact_tokens(self):
        assert as_fraction("3/4") == F(3, 4)
        assert as_fraction("-2") == F(-2)
        assert as_fraction(5) == F(5)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            as_fraction(0.5)

    def test_rejects_decimal_strings(self):
        with pytest.raises(ValueError):
            as_fraction("0.5")

    def test_rejects_zero_denominator(self):
        with pytest.raises(ValueError):
            as_fraction("1/0")


class TestNorm:
    def test_hexagon_sphere_point(self, hexagon):
        assert hexagon.norm(vector("3/4", "1/2")) == 1

    def test_origin(self, hexagon, cube3):
        assert hexagon.norm(vector(0, 0)) == 0
        assert cube3.norm(vector(0, 0, 0)) == 0

    def test_cube_corner(self, cube3):
        assert cube3.norm(vector(1, 1, 1)) == 1

    def test_dimension_mismatch(self, hexagon):
        with pytest.raises(DimensionMismatchError):
            hexagon.norm(vector(1, 0, 0))

    def test_positive_definite(self, small_catalog):
        rng = random.Random(5)
        for space in small_catalog:
            for _ in range(20):
                x = random_direction(rng, space.dim)
                assert space.norm(x) > 0

    def test_triangle_and_homogeneity(self, small_catalog):
        rng = random.Random(7)
        for space in small_catalog:
            for _ in range(30):
                x = random_direction(rng, space.dim)
                y = random_direction(rng, space.dim)
                assert space.norm(x + y) <= space.norm(x) + space.norm(y)
                s = F(rng.randint(-9, 9), rng.randint(1, 5))
                assert space.norm(x.scale(s)) == abs(s) * space.norm(x)

    def test_hrep_norm_equals_vrep_gauge(self, small_catalog):
        """Dual route: the facet maximum equals the vertex-gauge LP exactly."""
        rng = random.Random(11)
        for space in small_catalog:
            for _ in range(10):
                x = random_direction(rng, space.dim)
                assert space.norm(x) == space.gauge_norm(x)


class TestFromFunctionals:
    def test_hexagon_vertices_match_line_intersections(self, hexagon):
        """Oracle: adjacent facet lines intersect in the six sphere vertices."""
        fs = [f.coeffs for f in hexagon.hrep]
        expected = set()
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                point = solve([fs[i], fs[j]], (F(1), F(1)))
                if point is None:
                    continue
                if max(sum(c * x for c, x in zip(f, point)) for f in fs) == 1:
                    expected.add(point)
        built = PolyhedralSpace.from_functionals([functional(*f) for f in fs])
        assert {v.coords for v in built.vrep} == expected
        assert vector("1/2", 1) in built.vrep
        assert vector(1, 0) in built.vrep

    def test_cross_polytope_from_vertices(self):
        built = PolyhedralSpace.from_vertices(
            [vector(1, 0), vector(0, 1), vector(-1, 0), vector(0, -1)]
        )
        assert {f.coeffs for f in built.hrep} == {
            (F(1), F(1)),
            (F(1), F(-1)),
            (F(-1), F(1)),
            (F(-1), F(-1)),
        }

    def test_degenerate_functionals(self):
        with pytest.raises(DegenerateInputError) as err:
            PolyhedralSpace.from_functionals([functional(1, 0), functional(-1, 0)])
        direction = err.value.direction
        assert direction is not None
        assert any(c != 0 for c in direction)
        # the witness really is a recession direction
        assert sum(c * d for c, d in zip((F(1), F(0)), direction)) == 0

    def test_degenerate_vertices(self):
        with pytest.raises(DegenerateInputError):
            PolyhedralSpace.from_vertices([vector(1, 1), vector(-1, -1)])

    def test_asymmetric_rejected(self):
        with pytest.raises(AsymmetricInputError):
            PolyhedralSpace.from_functionals(
                [functional(0, 1), functional(0, -1), functional(1, 0)]
            )

    def test_symmetrize_flag(self):
        space = PolyhedralSpace.from_functionals(
            [functional(0, 1), functional(1, "1/2"), functional(1, "-1/2")],
            symmetrize=True,
        )
        assert space == hexagon_space()

    def test_redundant_functional_removed(self):
        space = PolyhedralSpace.from_functionals(
            [
                functional(1, 0),
                functional(-1, 0),
                functional(0, 1),
                functional(0, -1),
                functional("1/2", "1/2"),
                functional("-1/2", "-1/2"),
            ]
        )
        assert space == linf_space(2)

    def test_dimension_cap(self):
        with pytest.raises(EnumerationCapError):
            PolyhedralSpace.from_functionals(
                [functional(*row) for row in ([1] + [0] * 6, [-1] + [0] * 6)]
            )

    def test_facet_cap(self):
        fs = [functional(1, k) for k in range(101)]
        fs += [-f for f in fs]
        with pytest.raises(EnumerationCapError):
            PolyhedralSpace.from_functionals(fs)


class TestDuality:
    def test_cross_polytope_dual_is_cube(self):
        assert l1_space(2).dual() == linf_space(2)

    def test_hexagon_dual_vertices(self, hexagon):
        dual = hexagon.dual()
        expected = {
            (F(0), F(1)),
            (F(0), F(-1)),
            (F(1), F(1, 2)),
            (F(-1), F(-1, 2)),
            (F(-1), F(1, 2)),
            (F(1), F(-1, 2)),
        }
        assert {v.coords for v in dual.vrep} == expected
        # oracle: the dual ball is the hull of the primal functionals
        assert set(hull_2d(expected)) == expected

    def test_involution(self, small_catalog):
        for space in small_catalog:
            assert space.dual().dual() == space

    def test_cube_double_dual(self, cube3):
        assert cube3.dual().dual() == cube3


class TestInvariants:
    def test_facet_has_enough_vertices(self, small_catalog):
        for space in small_catalog:
            for fid, ids in enumerate(space.facet_index):
                assert len(ids) >= space.dim

    def test_mutual_polarity_verified(self, small_catalog):
        for space in small_catalog:
            if space.dim <= 3:
                space.verify_mutual_polarity()

    def test_incomplete_vertex_set_caught_by_polarity_check(self):
        """A cube missing one corner pair passes the cheap checks but not re-enumeration."""
        cube = linf_space(3)
        vrep = [v for v in cube.vrep if abs(v.coords[0] + v.coords[1] + v.coords[2]) != 3]
        crippled = PolyhedralSpace(cube.hrep, vrep)
        with pytest.raises(GeometryError):
            crippled.verify_mutual_polarity()

    def test_symmetric_representations(self, small_catalog):
        for space in small_catalog:
            assert {-f for f in space.hrep} == set(space.hrep)
            assert {-v for v in space.vrep} == set(space.vrep)

    def test_canonical_ordering_deterministic(self, hexagon):
        again = hexagon_space()
        assert tuple(f.coeffs for f in again.hrep) == tuple(f.coeffs for f in hexagon.hrep)
        assert tuple(v.coords for v in again.vrep) == tuple(v.coords for v in hexagon.vrep)
