"""Space-level sphere properties: CL, smooth-point admission, T-property.

A space is CL when for every maximal convex set C of the sphere the ball
is the convex hull of C and -C. The T-property asks for a family of
sphere points whose stars are maximal convex sets covering the sphere,
such that every sphere point is within total distance two of each star
and its opposite. Everything here is decided exactly: faces are compact
polytopes, so the distance minima are attained and checked as equalities
or rational inequalities, never with tolerances.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import GeometryError, NotAlmostClError, NotOnSphereError
from .faces import Face, facets, star
from .linalg import ONE, ZERO, dot
from .lp import LpConstraint, LpProblem, solve_lp
from .space import PolyhedralSpace, Vector


@dataclass(frozen=True)
class FacetClVerdict:
    facet_id: int
    ok: bool
    failing_vertex: Vector | None


@dataclass(frozen=True)
class ClReport:
    """Verdict of the CL check with a counterexample vertex when it fails.

    For polytopes the closed and plain convex hulls coincide, so the CL
    and almost-CL verdicts are always equal.
    """

    is_cl: bool
    is_almost_cl: bool
    facet_verdicts: tuple[FacetClVerdict, ...]
    counterexample: tuple[int, Vector] | None

    def __bool__(self):
        return self.is_cl


@dataclass(frozen=True)
class SmoothWitness:
    facet_id: int
    point: Vector
    active_count: int


@dataclass(frozen=True)
class SmoothPointReport:
    admits: bool
    witnesses: tuple[SmoothWitness, ...]

    def __bool__(self):
        return self.admits


@dataclass(frozen=True)
class ConditionThreeRecord:
    vertex: Vector
    candidate_index: int
    value: Fraction
    witness_plus: Vector
    witness_minus: Vector


@dataclass(frozen=True)
class CoveragePair:
    facet_id: int
    candidate_index: int


@dataclass(frozen=True)
class TPropertyReport:
    """Certificate search outcome for the T-property.

    ``holds`` means the given candidate family establishes the property.
    A False verdict only means this family failed; the property is
    existential, so no family can refute it.
    """

    holds: bool
    candidates: tuple[Vector, ...]
    condition_i: tuple[bool, ...]
    coverage: tuple[CoveragePair, ...]
    uncovered_facet: int | None
    condition_iii: tuple[ConditionThreeRecord, ...]
    violation: ConditionThreeRecord | None

    def __bool__(self):
        return self.holds


def in_convex_hull(x: Vector, points: list[Vector]) -> tuple[Fraction, ...] | None:
    """Exact hull membership; returns convex weights or None."""
    k = len(points)
    cons = [
        LpConstraint(tuple(p.coords[i] for p in points), "==", x.coords[i])
        for i in range(x.dim)
    ]
    cons.append(LpConstraint((ONE,) * k, "==", ONE))
    sol = solve_lp(
        LpProblem(num_vars=k, objective=(ZERO,) * k, constraints=tuple(cons), nonneg=(True,) * k)
    )
    if sol.status != "optimal":
        return None
    return sol.point


def distance_to_hull(space: PolyhedralSpace, x: Vector, points: list[Vector]) -> tuple[Fraction, Vector]:
    """Exact minimum of norm(x - y) over the hull of ``points``, with a minimiser.

    Solved as one LP in the space's own norm: variables are the convex
    weights and the distance bound t, constrained by every facet functional.
    """
    k = len(points)
    nvars = k + 1
    cons = []
    for f in space.hrep:
        row = tuple(-f(p) for p in points) + (-ONE,)
        cons.append(LpConstraint(row, "<=", -f(x)))
    cons.append(LpConstraint((ONE,) * k + (ZERO,), "==", ONE))
    objective = (ZERO,) * k + (-ONE,)
    sol = solve_lp(
        LpProblem(num_vars=nvars, objective=objective, constraints=tuple(cons), nonneg=(True,) * nvars)
    )
    if sol.status != "optimal":
        raise GeometryError("distance LP failed unexpectedly")
    weights = sol.point[:k]
    coords = [ZERO] * space.dim
    for w, p in zip(weights, points):
        for t, c in enumerate(p.coords):
            coords[t] += w * c
    return sol.point[k], Vector(coords)


def check_cl(space: PolyhedralSpace) -> ClReport:
    """Decide whether every ball vertex lies in conv(C u -C) for each facet C."""
    verdicts = []
    counterexample = None
    for face in facets(space):
        gens = list(face.vertices) + [-v for v in face.vertices]
        gen_set = {g.coords for g in gens}
        failing = None
        for v in space.vrep:
            if v.coords in gen_set:
                continue
            if in_convex_hull(v, gens) is None:
                failing = v
                break
        verdicts.append(FacetClVerdict(face.functional_id, failing is None, failing))
        if failing is not None and counterexample is None:
            counterexample = (face.functional_id, failing)
    ok = counterexample is None
    return ClReport(ok, ok, tuple(verdicts), counterexample)


def admits_smooth_points(space: PolyhedralSpace) -> SmoothPointReport:
    """Every facet of a polytope ball has a smooth point: its barycenter."""
    witnesses = []
    for fid in range(len(space.hrep)):
        b = space.facet_barycenter(fid)
        count = len(space.active_functional_ids(b))
        witnesses.append(SmoothWitness(fid, b, count))
    return SmoothPointReport(all(w.active_count == 1 for w in witnesses), tuple(witnesses))


def condition_iii_value(
    space: PolyhedralSpace, x: Vector, face: Face
) -> tuple[Fraction, Vector, Vector]:
    """Exact minimum of norm(x - y+) + norm(x - y-) over y+ in the face, y- in its opposite.

    The minimum is always at least two: the face functional separates the
    face from its opposite by exactly two.
    """
    if space.norm(x) != 1:
        raise NotOnSphereError(f"{x} is not on the sphere")
    if face.space != space:
        raise GeometryError("face does not belong to the given space")
    d_plus, w_plus = _distance_to_face(space, x, face.functional_id)
    d_minus, w_minus = _distance_to_face(space, x, face.opposite.functional_id)
    value = d_plus + d_minus
    if value < 2:
        raise GeometryError("two-sided distance fell below two; this is a bug")
    return value, w_plus, w_minus


def _distance_to_face(space: PolyhedralSpace, x: Vector, fid: int) -> tuple[Fraction, Vector]:
    if space.hrep[fid](x) == 1:
        return ZERO, x
    pts = [space.vrep[j] for j in space.facet_index[fid]]
    return distance_to_hull(space, x, pts)


def default_candidates(space: PolyhedralSpace) -> tuple[Vector, ...]:
    """One barycenter per facet; closed under negation since facets are."""
    return tuple(space.facet_barycenter(fid) for fid in range(len(space.hrep)))


def check_t_property(
    space: PolyhedralSpace, candidates: list[Vector] | None = None
) -> TPropertyReport:
    """Test a candidate family against the three T-property conditions.

    (i) each candidate's star is a maximal convex set, i.e. the candidate
    is smooth; (ii) every facet is the star of some candidate; (iii) for
    every ball vertex and every candidate the two-sided distance value is
    at most two. Condition (iii) is evaluated on vertices only: the
    quantity is convex in the sphere point, so its maximum over the ball
    is attained at a vertex.
    """
    cands = tuple(candidates) if candidates is not None else default_candidates(space)
    for c in cands:
        if space.norm(c) != 1:
            raise NotOnSphereError(f"candidate {c} is not on the sphere")

    cond_i = []
    star_facet: list[int | None] = []
    for c in cands:
        active = space.active_functional_ids(c)
        cond_i.append(len(active) == 1)
        star_facet.append(active[0] if len(active) == 1 else None)

    coverage = []
    uncovered = None
    for fid in range(len(space.hrep)):
        owner = next((k for k, sf in enumerate(star_facet) if sf == fid), None)
        if owner is None:
            if uncovered is None:
                uncovered = fid
        else:
            coverage.append(CoveragePair(fid, owner))

    records = []
    violation = None
    memo: dict[tuple[tuple[Fraction, ...], int], tuple[Fraction, Vector]] = {}

    def dist(point: Vector, fid: int) -> tuple[Fraction, Vector]:
        key = (point.coords, fid)
        if key not in memo:
            memo[key] = _distance_to_face(space, point, fid)
        return memo[key]

    for v in space.vrep:
        for k, fid in enumerate(star_facet):
            if fid is None:
                continue
            d_plus, w_plus = dist(v, fid)
            d_minus, w_neg = dist(-v, fid)
            rec = ConditionThreeRecord(v, k, d_plus + d_minus, w_plus, -w_neg)
            if rec.value < 2:
                raise GeometryError("two-sided distance fell below two; this is a bug")
            records.append(rec)
            if rec.value > 2 and violation is None:
                violation = rec

    holds = all(cond_i) and uncovered is None and violation is None and bool(cands)
    return TPropertyReport(
        holds=holds,
        candidates=cands,
        condition_i=tuple(cond_i),
        coverage=tuple(coverage),
        uncovered_facet=uncovered,
        condition_iii=tuple(records),
        violation=violation,
    )


def cl_decomposition(
    space: PolyhedralSpace, x: Vector, face: Face, eps=Fraction(0)
) -> tuple[Fraction, Vector, Vector]:
    """Write a sphere point as lam*y1 + (1-lam)*y2 with y1 in the face, y2 in its opposite.

    For polytopes the representation is exact, so ``eps`` (accepted for
    interface symmetry, must be nonnegative) never loosens anything.
    The weight lam is forced to (f(x)+1)/2 by the face functional; only
    the witnesses involve a choice, resolved deterministically by the LP.
    Raises NotAlmostClError when no representation exists.
    """
    if Fraction(eps) < 0:
        raise ValueError("eps must be nonnegative")
    if space.norm(x) != 1:
        raise NotOnSphereError(f"{x} is not on the sphere")
    plus = list(face.vertices)
    minus = [-v for v in face.vertices]
    weights = in_convex_hull(x, plus + minus)
    if weights is None:
        raise NotAlmostClError(
            "point has no two-sided facet decomposition; the space is not almost-CL"
        )
    lam = sum(weights[: len(plus)], start=ZERO)
    if lam == 0:
        y1 = face.vertices[0]
    else:
        coords = [ZERO] * space.dim
        for w, p in zip(weights[: len(plus)], plus):
            for t, c in enumerate(p.coords):
                coords[t] += (w / lam) * c
        y1 = Vector(coords)
    if lam == 1:
        y2 = minus[0]
    else:
        rest = 1 - lam
        coords = [ZERO] * space.dim
        for w, p in zip(weights[len(plus):], minus):
            for t, c in enumerate(p.coords):
                coords[t] += (w / rest) * c
        y2 = Vector(coords)
    combo = y1.scale(lam) + y2.scale(1 - lam)
    if combo != x:
        raise GeometryError("decomposition arithmetic failed; this is a bug")
    return lam, y1, y2
