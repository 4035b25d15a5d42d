"""Polyhedral normed spaces in exact rational arithmetic.

A space is a symmetric convex polytope unit ball carried in both standard
descriptions at once: facet functionals (H-form) and vertices (V-form),
kept mutually polar. The norm is the gauge of the ball, evaluated as the
maximum of the facet functionals. Every coordinate is a Fraction; floats
are rejected outright so that downstream verdicts stay exact.

Construction goes through :meth:`PolyhedralSpace.from_functionals`,
:meth:`PolyhedralSpace.from_vertices`, or the catalog builders, all of
which guarantee the two descriptions are polar to each other. The raw
constructor validates the structural invariants it can check cheaply
(symmetry, unit norms, facet and vertex ranks); full re-enumeration is
available as :meth:`verify_mutual_polarity`.
"""

import itertools
import re
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    AsymmetricInputError,
    DegenerateInputError,
    DimensionMismatchError,
    EnumerationCapError,
    GeometryError,
)
from .linalg import ONE, ZERO
from .lp import LpProblem, equal, solve_lp

MAX_ENUM_DIM = 6
MAX_FACETS = 200

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions, and 'p/q' strings; reject floats and decimals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floats are rejected; pass Fraction, int, or a 'p/q' string")
    if isinstance(value, str):
        token = value.strip()
        if not _RATIONAL_RE.match(token):
            raise ValueError(f"not an exact rational token: {value!r}")
        num, _, den = token.partition("/")
        if den:
            if int(den) == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


class Vector:
    """A point of the ambient space, held as a tuple of Fractions."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        self.coords = tuple(as_fraction(c) for c in coords)
        if not self.coords:
            raise ValueError("empty coordinate list")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self):
        return hash(("Vector", self.coords))

    def __neg__(self):
        return Vector(-c for c in self.coords)

    def __add__(self, other):
        self._check(other)
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def scale(self, s) -> "Vector":
        s = as_fraction(s)
        return Vector(s * c for c in self.coords)

    def _check(self, other):
        if not isinstance(other, Vector):
            raise TypeError("expected a Vector")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dim {other.dim} vs {self.dim}")

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Vector{self}"


class Functional:
    """A linear form; application is the dot pairing with a Vector."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(as_fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("empty coefficient list")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: Vector) -> Fraction:
        if x.dim != self.dim:
            raise DimensionMismatchError(f"dim {x.dim} vs {self.dim}")
        return linalg.dot(self.coeffs, x.coords)

    def __eq__(self, other):
        return isinstance(other, Functional) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Functional", self.coeffs))

    def __neg__(self):
        return Functional(-c for c in self.coeffs)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"Functional{self}"


def vector(*coords) -> Vector:
    return Vector(coords)


def functional(*coeffs) -> Functional:
    return Functional(coeffs)


def _normalize_ray(ray: Sequence[Fraction]) -> tuple[Fraction, ...]:
    s = sum(abs(c) for c in ray)
    if s == 0:
        raise ValueError("zero ray")
    return tuple(c / s for c in ray)


def _adjacent(p, q, processed, homdim) -> bool:
    tight = [row for row in processed if linalg.dot(row, p) == 0 and linalg.dot(row, q) == 0]
    return linalg.rank(tight) == homdim - 2


def enumerate_ball_vertices(functionals: Sequence, dim: int) -> tuple[tuple[Fraction, ...], ...]:
    """All vertices of {x : f(x) <= 1 for every f}, by double description.

    The functional set must be symmetric (closed under negation) and span
    the dual space, so the ball is bounded with the origin interior.
    Raises DegenerateInputError otherwise, carrying a recession direction.
    Zero functionals are vacuous and ignored.
    """
    rows = sorted(
        {
            tuple(f.coeffs) if isinstance(f, Functional) else tuple(as_fraction(c) for c in f)
            for f in functionals
        }
    )
    rows = [r for r in rows if any(c != 0 for c in r)]
    if not rows:
        raise DegenerateInputError("no nonzero functionals", direction=None)
    if any(len(r) != dim for r in rows):
        raise DimensionMismatchError("functional length does not match the dimension")
    row_set = set(rows)
    for r in rows:
        if tuple(-c for c in r) not in row_set:
            raise AsymmetricInputError(
                f"functional {r} appears without its negation", offender=r
            )
    if len(rows) > MAX_FACETS:
        raise EnumerationCapError(f"{len(rows)} functionals exceed the cap of {MAX_FACETS}")

    direction = linalg.null_space_vector(rows, dim)
    if direction is not None:
        raise DegenerateInputError(
            "ball is unbounded: functionals do not span the dual space",
            direction=direction,
        )

    homdim = dim + 1
    base_idx = linalg.independent_row_indices(rows, limit=dim)
    base = [rows[i] for i in base_idx]
    base_inv = linalg.invert(tuple(tuple(r) for r in base))
    assert base_inv is not None

    processed: list[tuple[Fraction, ...]] = []
    consumed: set[tuple[Fraction, ...]] = set()
    for r in base:
        for signed in (r, tuple(-c for c in r)):
            processed.append(signed + (-ONE,))
            consumed.add(signed)

    # Initial cone: |f(x)| <= t over the basis rows, a combinatorial box
    # whose extreme rays are the solutions of (basis) x = signs at t = 1.
    rays: set[tuple[Fraction, ...]] = set()
    for signs in itertools.product((ONE, -ONE), repeat=dim):
        x = linalg.mat_vec(base_inv, signs)
        rays.add(_normalize_ray(x + (ONE,)))

    remaining = [r for r in rows if r not in consumed]
    for f in remaining:
        a = f + (-ONE,)
        ordered = sorted(rays)
        vals = {r: linalg.dot(a, r) for r in ordered}
        positive = [r for r in ordered if vals[r] > 0]
        if positive:
            negative = [r for r in ordered if vals[r] < 0]
            survivors = {r for r in ordered if vals[r] <= 0}
            for p in positive:
                for q in negative:
                    if _adjacent(p, q, processed, homdim):
                        combo = tuple(vals[p] * qc - vals[q] * pc for pc, qc in zip(p, q))
                        survivors.add(_normalize_ray(combo))
            rays = survivors
        processed.append(a)

    vertices = []
    for ray in sorted(rays):
        t = ray[-1]
        if t <= 0:
            raise GeometryError("internal: unbounded ray survived enumeration")
        vertices.append(tuple(c / t for c in ray[:-1]))
    return tuple(sorted(set(vertices)))


def _coerce_functionals(fs) -> list[Functional]:
    out = []
    for f in fs:
        out.append(f if isinstance(f, Functional) else Functional(f))
    return out


def _coerce_vectors(vs) -> list[Vector]:
    out = []
    for v in vs:
        out.append(v if isinstance(v, Vector) else Vector(v))
    return out


class PolyhedralSpace:
    """A finite-dimensional normed space whose unit ball is a symmetric polytope.

    Attributes:
        dim: ambient dimension.
        hrep: facet functionals, canonically sorted, closed under negation.
        vrep: ball vertices, canonically sorted, closed under negation.
        facet_index: per functional, the ids of the vertices lying on it.
        name: optional label used in reports; ignored by equality.
    """

    __slots__ = ("dim", "hrep", "vrep", "facet_index", "name", "_neg_f", "_neg_v", "_v_pos", "_f_pos")

    def __init__(self, hrep: Sequence, vrep: Sequence, name: str | None = None):
        fs = sorted({f for f in _coerce_functionals(hrep)}, key=lambda f: f.coeffs)
        vs = sorted({v for v in _coerce_vectors(vrep)}, key=lambda v: v.coords)
        if not fs or not vs:
            raise GeometryError("need at least one functional and one vertex")
        dim = fs[0].dim
        if any(f.dim != dim for f in fs) or any(v.dim != dim for v in vs):
            raise DimensionMismatchError("mixed dimensions in the descriptions")
        self.dim = dim
        self.hrep = tuple(fs)
        self.vrep = tuple(vs)
        self.name = name
        self._f_pos = {f: i for i, f in enumerate(self.hrep)}
        self._v_pos = {v: i for i, v in enumerate(self.vrep)}
        self._validate_symmetry()
        self._validate_norms()
        self.facet_index = tuple(
            tuple(j for j, v in enumerate(self.vrep) if f(v) == 1) for f in self.hrep
        )
        self._validate_ranks()
        self._neg_f = tuple(self._f_pos[-f] for f in self.hrep)
        self._neg_v = tuple(self._v_pos[-v] for v in self.vrep)

    def _validate_symmetry(self):
        for f in self.hrep:
            if -f not in self._f_pos:
                raise AsymmetricInputError(f"functional {f} lacks its negation", offender=f)
        for v in self.vrep:
            if -v not in self._v_pos:
                raise AsymmetricInputError(f"vertex {v} lacks its negation", offender=v)

    def _validate_norms(self):
        for v in self.vrep:
            values = [f(v) for f in self.hrep]
            if max(values) != 1:
                raise GeometryError(f"listed vertex {v} does not have norm one")
        for f in self.hrep:
            if max(f(v) for v in self.vrep) != 1:
                raise GeometryError(f"functional {f} does not have dual norm one")

    def _validate_ranks(self):
        for f, ids in zip(self.hrep, self.facet_index):
            pts = [self.vrep[j].coords for j in ids]
            if linalg.affine_rank(pts) != self.dim:
                raise GeometryError(f"functional {f} does not support a facet")
        for j, v in enumerate(self.vrep):
            active = [f.coeffs for f in self.hrep if f(v) == 1]
            if linalg.rank(active) != self.dim:
                raise GeometryError(f"listed point {v} is not a vertex of the ball")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_functionals(
        cls,
        fs: Sequence,
        name: str | None = None,
        symmetrize: bool = False,
        max_dim: int = MAX_ENUM_DIM,
    ) -> "PolyhedralSpace":
        """Build the space whose ball is {x : f(x) <= 1 for every f}.

        Redundant functionals (those not supporting a facet) are removed.
        Asymmetric input is rejected unless ``symmetrize`` asks for closure
        under negation explicitly.
        """
        fs = _coerce_functionals(fs)
        if not fs:
            raise GeometryError("no functionals given")
        dim = fs[0].dim
        _check_enum_caps(dim, len(fs), max_dim)
        items = {f for f in fs if any(c != 0 for c in f.coeffs)}
        if symmetrize:
            items |= {-f for f in items}
        verts = enumerate_ball_vertices(sorted(items, key=lambda f: f.coeffs), dim)
        vectors = [Vector(v) for v in verts]
        kept = []
        for f in sorted(items, key=lambda f: f.coeffs):
            incident = [v.coords for v in vectors if f(v) == 1]
            if linalg.affine_rank(incident) == dim:
                kept.append(f)
        return cls(kept, vectors, name=name)

    @classmethod
    def from_vertices(
        cls,
        vs: Sequence,
        name: str | None = None,
        symmetrize: bool = False,
        max_dim: int = MAX_ENUM_DIM,
    ) -> "PolyhedralSpace":
        """Build the space whose ball is the convex hull of the given points.

        Non-extreme points are removed. The facets come from the polar body,
        enumerated with the same double-description routine.
        """
        vs = _coerce_vectors(vs)
        if not vs:
            raise GeometryError("no vertices given")
        dim = vs[0].dim
        _check_enum_caps(dim, len(vs), max_dim)
        items = {v for v in vs if any(c != 0 for c in v.coords)}
        if symmetrize:
            items |= {-v for v in items}
        ordered = sorted(items, key=lambda v: v.coords)
        polar_rows = [v.coords for v in ordered]
        try:
            facet_rows = enumerate_ball_vertices(polar_rows, dim)
        except DegenerateInputError as err:
            raise DegenerateInputError(
                "vertices do not span the space: hull is lower-dimensional",
                direction=err.direction,
            ) from err
        functionals = [Functional(r) for r in facet_rows]
        kept = []
        for v in ordered:
            active = [f.coeffs for f in functionals if f(v) == 1]
            if linalg.rank(active) == dim:
                kept.append(v)
        return cls(functionals, kept, name=name)

    # -- basic queries ---------------------------------------------------

    def norm(self, x: Vector) -> Fraction:
        """Gauge of the unit ball: the maximum of the facet functionals at x."""
        if x.dim != self.dim:
            raise DimensionMismatchError(f"point has dim {x.dim}, space has {self.dim}")
        return max(f(x) for f in self.hrep)

    def gauge_norm(self, x: Vector) -> Fraction:
        """The norm computed from the vertex description via an exact LP.

        Minimises the total weight of a nonnegative vertex combination equal
        to x. Used as the independent cross-check of :meth:`norm`.
        """
        if x.dim != self.dim:
            raise DimensionMismatchError(f"point has dim {x.dim}, space has {self.dim}")
        k = len(self.vrep)
        cons = [
            equal([v.coords[i] for v in self.vrep], x.coords[i]) for i in range(self.dim)
        ]
        problem = LpProblem(
            num_vars=k,
            objective=tuple(-ONE for _ in range(k)),
            constraints=tuple(cons),
            nonneg=(True,) * k,
        )
        sol = solve_lp(problem)
        if sol.status != "optimal":
            raise GeometryError("gauge LP failed; vertex set cannot be polar to the facets")
        return -sol.value

    def on_sphere(self, x: Vector) -> bool:
        return self.norm(x) == 1

    def active_functional_ids(self, x: Vector) -> tuple[int, ...]:
        """Ids of facet functionals attaining one at x (x need not be normalised)."""
        return tuple(i for i, f in enumerate(self.hrep) if f(x) == 1)

    def vertex_id(self, v: Vector) -> int:
        try:
            return self._v_pos[v]
        except KeyError:
            raise GeometryError(f"{v} is not a vertex of the ball") from None

    def functional_id(self, f: Functional) -> int:
        try:
            return self._f_pos[f]
        except KeyError:
            raise GeometryError(f"{f} is not a facet functional") from None

    def neg_vertex_id(self, i: int) -> int:
        return self._neg_v[i]

    def neg_functional_id(self, i: int) -> int:
        return self._neg_f[i]

    def facet_barycenter(self, fid: int) -> Vector:
        ids = self.facet_index[fid]
        k = Fraction(len(ids))
        coords = [ZERO] * self.dim
        for j in ids:
            for t, c in enumerate(self.vrep[j].coords):
                coords[t] += c
        return Vector(c / k for c in coords)

    def dual(self, name: str | None = None) -> "PolyhedralSpace":
        """The polar space: vertices become functionals and vice versa."""
        hrep = [Functional(v.coords) for v in self.vrep]
        vrep = [Vector(f.coeffs) for f in self.hrep]
        return PolyhedralSpace(hrep, vrep, name=name)

    def verify_mutual_polarity(self):
        """Re-enumerate both descriptions and compare; raises on mismatch."""
        verts = enumerate_ball_vertices([f.coeffs for f in self.hrep], self.dim)
        if set(verts) != {v.coords for v in self.vrep}:
            raise GeometryError("vertex description is not polar to the facets")
        facets = enumerate_ball_vertices([v.coords for v in self.vrep], self.dim)
        if set(facets) != {f.coeffs for f in self.hrep}:
            raise GeometryError("facet description is not polar to the vertices")

    def summary(self) -> str:
        label = self.name or "space"
        return f"{label}: dim {self.dim}, {len(self.hrep)} facets, {len(self.vrep)} vertices"

    def __eq__(self, other):
        return (
            isinstance(other, PolyhedralSpace)
            and self.dim == other.dim
            and self.hrep == other.hrep
            and self.vrep == other.vrep
        )

    def __hash__(self):
        return hash((self.dim, self.hrep, self.vrep))

    def __repr__(self):
        return f"<PolyhedralSpace {self.summary()}>"


def _check_enum_caps(dim: int, count: int, max_dim: int):
    cap = min(max_dim, MAX_ENUM_DIM)
    if dim > cap:
        raise EnumerationCapError(
            f"dimension {dim} exceeds the enumeration cap of {cap}"
        )
    if count > MAX_FACETS:
        raise EnumerationCapError(f"{count} rows exceed the cap of {MAX_FACETS}")


# Spec-level conveniences mirroring the functional style of the operations.

def norm(space: PolyhedralSpace, x: Vector) -> Fraction:
    return space.norm(x)


def dual_space(space: PolyhedralSpace, name: str | None = None) -> PolyhedralSpace:
    return space.dual(name=name)


def from_functionals(fs, **kwargs) -> PolyhedralSpace:
    return PolyhedralSpace.from_functionals(fs, **kwargs)


def from_vertices(vs, **kwargs) -> PolyhedralSpace:
    return PolyhedralSpace.from_vertices(vs, **kwargs)
