"""CL checks, two-sided distance values, T-property reports, decompositions."""

import itertools
import random
from fractions import Fraction

import pytest

from polysphere import (
    Face,
    NotAlmostClError,
    NotOnSphereError,
    admits_smooth_points,
    check_cl,
    check_t_property,
    cl_decomposition,
    condition_iii_value,
    facets,
    functional,
    l1_space,
    linf_space,
    vector,
)
from polysphere.sampling import sphere_points

F = Fraction


def face_by_functional(space, coeffs):
    return Face(space, space.functional_id(functional(*coeffs)))


def polygon_contains(vertices, p):
    """Exact point-in-convex-polygon oracle via cross products (2D only)."""
    hull = sorted(set(vertices))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    # order the hull points by angle around their centroid using cross signs
    import math

    cx = sum(v[0] for v in hull) / len(hull)
    cy = sum(v[1] for v in hull) / len(hull)
    ordered = sorted(hull, key=lambda v: math.atan2(float(v[1] - cy), float(v[0] - cx)))
    for i in range(len(ordered)):
        a = ordered[i]
        b = ordered[(i + 1) % len(ordered)]
        if cross(a, b, p) < 0:
            return False
    return True


class TestCheckCl:
    def test_square_is_cl(self, square):
        report = check_cl(square)
        assert report.is_cl and report.is_almost_cl
        assert report.counterexample is None
        # oracle: every vertex sits in the two-sided hull of every edge
        for face in facets(square):
            gens = [v.coords for v in face.vertices] + [(-v).coords for v in face.vertices]
            for v in square.vrep:
                assert polygon_contains(gens, v.coords)

    def test_hexagon_is_not_cl(self, hexagon):
        report = check_cl(hexagon)
        assert not report.is_cl and not report.is_almost_cl
        fid, v = report.counterexample
        face = Face(hexagon, fid)
        gens = [w.coords for w in face.vertices] + [(-w).coords for w in face.vertices]
        assert not polygon_contains(gens, v.coords)

    def test_cross_polytope_3d_is_cl(self):
        space = l1_space(3)
        report = check_cl(space)
        assert report.is_cl
        # oracle: each signed basis vector lies in the facet with matching sign
        for face in facets(space):
            s = face.functional.coeffs
            for v in space.vrep:
                j = next(i for i, c in enumerate(v.coords) if c != 0)
                assert (v in face.vertices) == (s[j] == v.coords[j])

    def test_agrees_with_dense_2d_oracle(self, hexagon, square, cross2):
        """Brute force: sample the ball densely, test polygon membership exactly."""
        for space in (hexagon, square, cross2):
            grid = [F(k, 4) for k in range(-4, 5)]
            ball = [
                (x, y)
                for x in grid
                for y in grid
                if space.norm(vector(x, y)) <= 1
            ]
            report = check_cl(space)
            for fv in report.facet_verdicts:
                face = Face(space, fv.facet_id)
                gens = [v.coords for v in face.vertices] + [
                    (-v).coords for v in face.vertices
                ]
                dense_ok = all(polygon_contains(gens, p) for p in ball)
                vertex_ok = all(
                    polygon_contains(gens, v.coords) for v in space.vrep
                )
                assert fv.ok == dense_ok == vertex_ok


class TestSmoothPoints:
    def test_cube_witness(self, cube3):
        report = admits_smooth_points(cube3)
        assert report.admits
        top = cube3.functional_id(functional(0, 0, 1))
        witness = next(w for w in report.witnesses if w.facet_id == top)
        assert witness.point == vector(0, 0, 1)
        assert witness.active_count == 1

    def test_hexagon_witness(self, hexagon):
        report = admits_smooth_points(hexagon)
        top = hexagon.functional_id(functional(0, 1))
        witness = next(w for w in report.witnesses if w.facet_id == top)
        assert witness.point == vector(0, 1)

    def test_cross_polytope_edge_witness(self, cross2):
        report = admits_smooth_points(cross2)
        fid = cross2.functional_id(functional(1, 1))
        witness = next(w for w in report.witnesses if w.facet_id == fid)
        assert witness.point == vector("1/2", "1/2")

    def test_always_admits_for_polytopes(self, small_catalog):
        for space in small_catalog:
            assert admits_smooth_points(space)


class TestConditionThree:
    def test_hexagon_case_one(self, hexagon):
        """From the top edge against the star of (3/4, 1/2): value exactly two."""
        face = face_by_functional(hexagon, (1, "1/2"))
        x = vector(0, 1)
        value, w_plus, w_minus = condition_iii_value(hexagon, x, face)
        assert value == 2
        assert hexagon.norm(x - w_plus) + hexagon.norm(x - w_minus) == 2
        # the published witness pair achieves the same value
        assert hexagon.norm(x - vector("1/2", 1)) + hexagon.norm(x - vector(-1, 0)) == 2

    def test_hexagon_case_two(self, hexagon):
        face = face_by_functional(hexagon, (0, 1))
        x = vector("3/4", "1/2")
        value, w_plus, w_minus = condition_iii_value(hexagon, x, face)
        assert value == 2
        assert hexagon.norm(x - vector("1/2", 1)) + hexagon.norm(x - vector("1/2", -1)) == 2

    def test_point_on_face_itself(self, hexagon):
        face = face_by_functional(hexagon, (0, 1))
        x = vector(0, 1)
        value, w_plus, w_minus = condition_iii_value(hexagon, x, face)
        assert value == 2
        assert w_plus == x
        assert face.opposite.contains(w_minus)

    def test_lower_bound_everywhere(self, small_catalog):
        for space in small_catalog[:5]:
            for x in sphere_points(space, 5, seed=41):
                for face in facets(space):
                    value, _, _ = condition_iii_value(space, x, face)
                    assert value >= 2

    def test_value_not_beaten_by_grid_search(self, hexagon):
        """Brute-force oracle: a barycentric grid over both faces never does better."""
        face = face_by_functional(hexagon, (1, "1/2"))
        x = vector(-1, 0)
        value, _, _ = condition_iii_value(hexagon, x, face)
        grid = [F(k, 8) for k in range(9)]
        plus = face.vertices
        minus = [-v for v in plus]
        best = None
        for a in grid:
            yp = plus[0].scale(a) + plus[1].scale(1 - a)
            for b in grid:
                ym = minus[0].scale(b) + minus[1].scale(1 - b)
                total = hexagon.norm(x - yp) + hexagon.norm(x - ym)
                best = total if best is None else min(best, total)
        assert value <= best

    def test_rejects_off_sphere_point(self, hexagon):
        face = face_by_functional(hexagon, (0, 1))
        with pytest.raises(NotOnSphereError):
            condition_iii_value(hexagon, vector(0, "1/2"), face)

    def test_vertex_sufficiency_sampled(self, hexagon, cube3):
        """Sampled sphere values never exceed the vertex maximum."""
        for space in (hexagon, cube3):
            for face in facets(space):
                vertex_max = max(
                    condition_iii_value(space, v, face)[0] for v in space.vrep
                )
                for x in sphere_points(space, 10, seed=43):
                    value, _, _ = condition_iii_value(space, x, face)
                    assert value <= vertex_max


class TestTProperty:
    def test_hexagon_with_published_candidates(self, hexagon):
        candidates = [
            vector(0, 1),
            vector(0, -1),
            vector("3/4", "1/2"),
            vector("-3/4", "-1/2"),
            vector("-3/4", "1/2"),
            vector("3/4", "-1/2"),
        ]
        report = check_t_property(hexagon, candidates)
        assert report.holds
        assert all(report.condition_i)
        assert report.uncovered_facet is None
        assert len(report.condition_iii) == 36
        assert all(rec.value == 2 for rec in report.condition_iii)

    def test_hexagon_default_candidates_are_the_barycenters(self, hexagon):
        report = check_t_property(hexagon)
        assert report.holds
        assert set(report.candidates) == {
            vector(0, 1),
            vector(0, -1),
            vector("3/4", "1/2"),
            vector("-3/4", "-1/2"),
            vector("-3/4", "1/2"),
            vector("3/4", "-1/2"),
        }

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_cube_family_holds(self, n):
        space = linf_space(n)
        report = check_t_property(space)
        assert report.holds
        # oracle: in the max norm the two distances are |v_k - 1| and |v_k + 1|
        for rec in report.condition_iii:
            fid = next(
                p.facet_id for p in report.coverage if p.candidate_index == rec.candidate_index
            )
            coeffs = space.hrep[fid].coeffs
            k = next(i for i, c in enumerate(coeffs) if c != 0)
            sign = coeffs[k]
            v = rec.vertex.coords[k] * sign
            assert rec.value == abs(v - 1) + abs(v + 1) == 2

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_cross_polytope_family_holds(self, n):
        assert check_t_property(l1_space(n)).holds

    def test_nonsmooth_candidate_fails_condition_one(self, cross2):
        report = check_t_property(cross2, [vector(1, 0), vector(-1, 0)])
        assert not report.holds
        assert report.condition_i == (False, False)

    def test_partial_family_fails_covering(self, hexagon):
        report = check_t_property(hexagon, [vector(0, 1), vector(0, -1)])
        assert not report.holds
        assert report.uncovered_facet is not None

    def test_candidate_off_sphere_rejected(self, hexagon):
        with pytest.raises(NotOnSphereError):
            check_t_property(hexagon, [vector(0, "1/2")])

    def test_report_symmetric_under_negation(self, hexagon):
        report = check_t_property(hexagon)
        table = {
            (rec.vertex.coords, report.candidates[rec.candidate_index].coords): rec.value
            for rec in report.condition_iii
        }
        for (v, c), value in table.items():
            neg = (tuple(-x for x in v), tuple(-x for x in c))
            assert table[neg] == value

    def test_cl_plus_smooth_implies_t_at_desk_scale(self, small_catalog):
        for space in small_catalog:
            if space.dim > 3:
                continue
            if check_cl(space).is_cl and admits_smooth_points(space).admits:
                assert check_t_property(space).holds


class TestClDecomposition:
    def test_square_midpoint(self, square):
        top = face_by_functional(square, (0, 1))
        lam, y1, y2 = cl_decomposition(square, vector(1, 0), top)
        assert lam == F(1, 2)
        assert y1 == vector(1, 1)
        assert y2 == vector(1, -1)

    def test_point_on_face(self, square):
        top = face_by_functional(square, (0, 1))
        x = vector("1/2", 1)
        lam, y1, y2 = cl_decomposition(square, x, top)
        assert lam == 1
        assert y1 == x
        assert top.opposite.contains(y2)

    def test_cross_polytope_vertex_on_face(self, cross2):
        face = face_by_functional(cross2, (1, 1))
        lam, y1, _ = cl_decomposition(cross2, vector(1, 0), face)
        assert lam == 1
        assert y1 == vector(1, 0)

    def test_weight_forced_by_functional(self, square):
        rng = random.Random(47)
        for face in facets(square):
            for x in sphere_points(square, 5, seed=rng.randint(0, 999)):
                lam, y1, y2 = cl_decomposition(square, x, face)
                assert lam == (face.functional(x) + 1) / 2
                assert face.contains(y1) or lam == 0
                assert face.opposite.contains(y2) or lam == 1
                assert y1.scale(lam) + y2.scale(1 - lam) == x

    def test_hexagon_has_no_decomposition(self, hexagon):
        top = face_by_functional(hexagon, (0, 1))
        with pytest.raises(NotAlmostClError):
            cl_decomposition(hexagon, vector(1, 0), top)

    def test_negative_eps_rejected(self, square):
        top = face_by_functional(square, (0, 1))
        with pytest.raises(ValueError):
            cl_decomposition(square, vector(1, 0), top, eps=F(-1, 2))
