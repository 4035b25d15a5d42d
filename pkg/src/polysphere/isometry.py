"""Sphere-to-sphere maps between polyhedral spaces and their linear extensions.

A candidate isometry is encoded combinatorially: a vertex bijection plus a
facet bijection, evaluated piecewise by barycentric coordinates. Between
polytope spheres every surjective isometry carries facets to facets, so
this class covers all of them. Verification checks antipodality, exact
distance preservation on vertices and on deterministic interior samples,
and the structural facet consistency that makes the evaluation rule
well defined.

The linear extension is built from exact linear algebra on the vertex
images, then certified independently: agreement on every vertex, the
norm formula through the transported functional pairs, and a vertex
bijection between the two balls.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    CertificationError,
    ExtensionInconsistencyError,
    GeometryError,
    NotOnSphereError,
)
from .linalg import ONE, ZERO, Matrix
from .lp import LpConstraint, LpProblem, solve_lp
from .sampling import (
    DEFAULT_SEED,
    facet_sample_points,
    random_facet_point,
    random_fraction,
    rng_from,
)
from .space import Functional, PolyhedralSpace, Vector


@dataclass(frozen=True)
class SphereMap:
    """Piecewise-linear sphere map given by vertex and facet bijections.

    ``vertex_map[i]`` is the codomain vertex id of domain vertex i, and
    ``facet_map[g]`` the codomain facet id of domain facet g. A point on a
    domain facet with barycentric weights over that facet's vertices goes
    to the same weights over the image vertices. The constructor validates
    only that both maps are bijections of the right size; the geometric
    invariants are the business of :func:`verify_isometry`.
    """

    domain: PolyhedralSpace
    codomain: PolyhedralSpace
    vertex_map: tuple[int, ...]
    facet_map: tuple[int, ...]

    def __post_init__(self):
        nv, mv = len(self.domain.vrep), len(self.codomain.vrep)
        nf, mf = len(self.domain.hrep), len(self.codomain.hrep)
        if nv != mv or sorted(self.vertex_map) != list(range(mv)):
            raise ValueError("vertex_map is not a bijection onto the codomain vertices")
        if nf != mf or sorted(self.facet_map) != list(range(mf)):
            raise ValueError("facet_map is not a bijection onto the codomain facets")

    def vertex_image(self, i: int) -> Vector:
        return self.codomain.vrep[self.vertex_map[i]]

    def apply(self, x: Vector) -> Vector:
        """Evaluate the map at a sphere point via barycentric weights.

        Deterministic: the first containing facet in canonical order is
        used, and the weights come from the exact LP solver's canonical
        basic solution. For facet-consistent maps the result does not
        depend on either choice.
        """
        active = self.domain.active_functional_ids(x)
        if not active or self.domain.norm(x) != 1:
            raise NotOnSphereError(f"{x} is not on the domain sphere")
        fid = active[0]
        ids = self.domain.facet_index[fid]
        weights = _barycentric_weights([self.domain.vrep[j] for j in ids], x)
        coords = [ZERO] * self.codomain.dim
        for w, j in zip(weights, ids):
            img = self.vertex_image(j)
            for t, c in enumerate(img.coords):
                coords[t] += w * c
        return Vector(coords)

    @classmethod
    def from_linear(cls, domain: PolyhedralSpace, codomain: PolyhedralSpace, matrix: Matrix) -> "SphereMap":
        """Encode the sphere restriction of a linear map that carries ball to ball."""
        vmap = []
        for v in domain.vrep:
            image = Vector(linalg.mat_vec(matrix, v.coords))
            vmap.append(codomain.vertex_id(image))
        fmap = []
        for fid in range(len(domain.hrep)):
            target = {vmap[j] for j in domain.facet_index[fid]}
            gid = next(
                (
                    g
                    for g in range(len(codomain.hrep))
                    if set(codomain.facet_index[g]) == target
                ),
                None,
            )
            if gid is None:
                raise GeometryError("matrix does not carry facets onto codomain facets")
            fmap.append(gid)
        return cls(domain, codomain, tuple(vmap), tuple(fmap))


@dataclass(frozen=True)
class IsometryReport:
    """Outcome of :func:`verify_isometry`.

    ``malformed`` marks structural invariant violations (facet
    inconsistency, ill-defined evaluation), as opposed to an honest
    isometry failure with a distance or antipodality counterexample.
    """

    passed: bool
    malformed: bool = False
    reason: str = ""
    counterexample: tuple | None = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class ExtensionCertificate:
    matrix: Matrix
    functional_pairs: tuple[tuple[Functional, Functional], ...]
    vertex_agreement: bool
    norm_formula: bool
    vertex_bijection: bool


@dataclass(frozen=True)
class NormFormulaVerdict:
    ok: bool
    samples_checked: int
    counterexample: Vector | None

    def __bool__(self):
        return self.ok


def _barycentric_weights(points: list[Vector], x: Vector) -> tuple[Fraction, ...]:
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
        raise GeometryError("point is not in the facet it claims to be on")
    return sol.point


def verify_isometry(m: SphereMap, seed=DEFAULT_SEED) -> IsometryReport:
    """Check that a sphere map is a well-formed surjective isometry.

    Order of checks: antipodality on vertices, exact pairwise vertex
    distances, facet consistency (structural), then exact distances on the
    deterministic facet samples (barycenters, midpoints, and a few seeded
    rational facet points). The first failure is reported with its
    counterexample.
    """
    dom, cod = m.domain, m.codomain

    for i in range(len(dom.vrep)):
        if m.vertex_map[dom.neg_vertex_id(i)] != cod.neg_vertex_id(m.vertex_map[i]):
            return IsometryReport(
                False,
                reason="antipodality fails on vertices",
                counterexample=(dom.vrep[i], -dom.vrep[i]),
            )

    for i in range(len(dom.vrep)):
        for j in range(i + 1, len(dom.vrep)):
            lhs = dom.norm(dom.vrep[i] - dom.vrep[j])
            rhs = cod.norm(m.vertex_image(i) - m.vertex_image(j))
            if lhs != rhs:
                return IsometryReport(
                    False,
                    reason="vertex pair distance not preserved",
                    counterexample=(dom.vrep[i], dom.vrep[j], lhs, rhs),
                )

    for fid in range(len(dom.hrep)):
        target = {m.vertex_map[j] for j in dom.facet_index[fid]}
        if target != set(cod.facet_index[m.facet_map[fid]]):
            return IsometryReport(
                False,
                malformed=True,
                reason="facet-consistency invariant: vertex images do not form the image facet",
                counterexample=(fid, m.facet_map[fid]),
            )
        # The facet rule must extend affinely, otherwise evaluation at
        # ridge points would depend on the chosen facet.
        ids = dom.facet_index[fid]
        hom = [dom.vrep[j].coords + (ONE,) for j in ids]
        images = [m.vertex_image(j).coords for j in ids]
        if linalg.rank(hom) != linalg.rank([h + w for h, w in zip(hom, images)]):
            return IsometryReport(
                False,
                malformed=True,
                reason="evaluation not well defined: no affine map matches the facet data",
                counterexample=(fid,),
            )

    samples = facet_sample_points(dom)
    rng = rng_from(seed)
    for fid in range(len(dom.hrep)):
        samples.append(random_facet_point(dom, fid, rng))
    pool = list(dom.vrep) + samples
    images = [m.apply(p) for p in pool]
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            lhs = dom.norm(pool[i] - pool[j])
            rhs = cod.norm(images[i] - images[j])
            if lhs != rhs:
                return IsometryReport(
                    False,
                    reason="sampled distance not preserved",
                    counterexample=(pool[i], pool[j], lhs, rhs),
                )
    return IsometryReport(True)


def transported_functionals(m: SphereMap) -> tuple[tuple[Functional, Functional], ...]:
    """Pair each domain facet functional with its image facet's functional.

    Certifies the transport relation exactly on the generating set: for
    every domain vertex v and every pair (f, g), g at the image of v must
    equal f at v. Raises CertificationError with the offending facet and
    vertex otherwise. Intended to run after :func:`verify_isometry`.
    """
    pairs = []
    for fid in range(len(m.domain.hrep)):
        f = m.domain.hrep[fid]
        g = m.codomain.hrep[m.facet_map[fid]]
        for i, v in enumerate(m.domain.vrep):
            if g(m.vertex_image(i)) != f(v):
                raise CertificationError(
                    f"functional transport fails at facet {fid}, vertex {v}",
                    detail=(fid, v),
                )
        pairs.append((f, g))
    return tuple(pairs)


def extend(m: SphereMap, seed=DEFAULT_SEED) -> ExtensionCertificate:
    """Construct and certify the linear extension of a verified sphere map.

    The matrix is determined by the images of one maximal independent set
    of domain vertices. Certification then checks agreement with every
    vertex image (raising ExtensionInconsistencyError with a dependence
    witness when impossible), the norm formula on a deterministic sample,
    and that the matrix maps ball vertices bijectively onto ball vertices.
    """
    dom, cod = m.domain, m.codomain
    rows = [v.coords for v in dom.vrep]
    base_ids = linalg.independent_row_indices(rows, limit=dom.dim)
    if len(base_ids) != dom.dim:
        raise GeometryError("domain vertices do not span the space")
    vcols = linalg.transpose(tuple(dom.vrep[i].coords for i in base_ids))
    wcols = linalg.transpose(tuple(m.vertex_image(i).coords for i in base_ids))
    vinv = linalg.invert(vcols)
    assert vinv is not None
    matrix = linalg.mat_mul(wcols, vinv)

    for i, v in enumerate(dom.vrep):
        got = Vector(linalg.mat_vec(matrix, v.coords))
        want = m.vertex_image(i)
        if got != want:
            alpha = linalg.solve(vcols, v.coords)
            raise ExtensionInconsistencyError(
                "vertex images admit no linear map",
                detail={
                    "vertex": v,
                    "basis_ids": tuple(base_ids),
                    "coefficients": alpha,
                    "expected": want,
                    "forced": got,
                },
            )

    pairs = transported_functionals(m)

    samples: list[Vector] = list(dom.vrep)
    for i in range(len(dom.vrep)):
        for j in range(i + 1, len(dom.vrep)):
            samples.append(dom.vrep[i] - dom.vrep[j])
    rng = rng_from(seed)
    for _ in range(25):
        coords = tuple(random_fraction(rng) for _ in range(dom.dim))
        samples.append(Vector(coords))

    for z in samples:
        if all(c == 0 for c in z.coords):
            continue
        mz = Vector(linalg.mat_vec(matrix, z.coords))
        lhs = dom.norm(z)
        via_f = max(abs(f(z)) for f, _ in pairs)
        via_g = max(abs(g(mz)) for _, g in pairs)
        rhs = cod.norm(mz)
        if not (lhs == via_f == via_g == rhs):
            raise CertificationError(
                f"norm formula fails at {z}: {lhs} vs {via_f} vs {via_g} vs {rhs}",
                detail=(z, lhs, via_f, via_g, rhs),
            )

    image_ids = set()
    for v in dom.vrep:
        image = Vector(linalg.mat_vec(matrix, v.coords))
        image_ids.add(cod.vertex_id(image))
    bijective = len(image_ids) == len(cod.vrep)
    if not bijective:
        raise CertificationError("matrix does not map ball vertices bijectively")

    return ExtensionCertificate(
        matrix=matrix,
        functional_pairs=pairs,
        vertex_agreement=True,
        norm_formula=True,
        vertex_bijection=True,
    )


def norm_formula_check(space: PolyhedralSpace, seed=DEFAULT_SEED, combos: int = 25) -> NormFormulaVerdict:
    """Cross-check the facet-maximum norm against the vertex-gauge LP.

    Samples every vertex, every pairwise vertex difference, and seeded
    rational combinations; requires exact equality throughout.
    """
    samples: list[Vector] = list(space.vrep)
    for i in range(len(space.vrep)):
        for j in range(i + 1, len(space.vrep)):
            samples.append(space.vrep[i] - space.vrep[j])
    rng = rng_from(seed)
    for _ in range(combos):
        samples.append(Vector(tuple(random_fraction(rng) for _ in range(space.dim))))

    checked = 0
    for z in samples:
        if all(c == 0 for c in z.coords):
            continue
        checked += 1
        if space.norm(z) != space.gauge_norm(z):
            return NormFormulaVerdict(False, checked, z)
    return NormFormulaVerdict(True, checked, None)
