"""Built-in catalog: classical sequence-space balls, the hexagon, and sums.

Catalog names follow a small grammar, also accepted by the command line:

    hex                     the hexagonal norm max(|y|, |x| + |y|/2)
    l1:N                    cross-polytope ball, 1 <= N <= 6
    linf:N                  cube ball, 1 <= N <= 6
    l1sum(A,B)              norm |a| + |b| on the product of two spaces
    linfsum(A,B)            norm max(|a|, |b|) on the product

Sums are binary and nest, so longer sums are written by composition.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import EnumerationCapError, GeometryError
from .faces import Face, face_section, section_coordinates, subspace_section
from .space import MAX_ENUM_DIM, Functional, PolyhedralSpace, Vector

_ZERO = Fraction(0)
_ONE = Fraction(1)


def l1_space(n: int) -> PolyhedralSpace:
    """Ball = cross-polytope: vertices are the signed basis vectors."""
    _check_range(n)
    vrep = []
    for i in range(n):
        e = [_ZERO] * n
        e[i] = _ONE
        vrep.append(Vector(e))
        vrep.append(Vector([-c for c in e]))
    hrep = [Functional(signs) for signs in itertools.product((_ONE, -_ONE), repeat=n)]
    return PolyhedralSpace(hrep, vrep, name=f"l1:{n}")


def linf_space(n: int) -> PolyhedralSpace:
    """Ball = cube: facets are the signed coordinate functionals."""
    _check_range(n)
    hrep = []
    for i in range(n):
        e = [_ZERO] * n
        e[i] = _ONE
        hrep.append(Functional(e))
        hrep.append(Functional([-c for c in e]))
    vrep = [Vector(signs) for signs in itertools.product((_ONE, -_ONE), repeat=n)]
    return PolyhedralSpace(hrep, vrep, name=f"linf:{n}")


def hexagon_space() -> PolyhedralSpace:
    """The plane with norm max(|y|, |x| + |y|/2); the sphere is a hexagon."""
    half = Fraction(1, 2)
    hrep = [
        Functional((_ZERO, _ONE)),
        Functional((_ZERO, -_ONE)),
        Functional((_ONE, half)),
        Functional((-_ONE, -half)),
        Functional((_ONE, -half)),
        Functional((-_ONE, half)),
    ]
    vrep = [
        Vector((half, _ONE)),
        Vector((-half, -_ONE)),
        Vector((_ONE, _ZERO)),
        Vector((-_ONE, _ZERO)),
        Vector((half, -_ONE)),
        Vector((-half, _ONE)),
    ]
    return PolyhedralSpace(hrep, vrep, name="hex")


def _padded(f: Functional, before: int, after: int) -> Functional:
    return Functional((_ZERO,) * before + f.coeffs + (_ZERO,) * after)


def linf_sum(a: PolyhedralSpace, b: PolyhedralSpace, name: str | None = None) -> PolyhedralSpace:
    """Product space with norm max(|x_a|, |x_b|)."""
    _check_sum_dim(a, b)
    fs = [_padded(f, 0, b.dim) for f in a.hrep] + [_padded(g, a.dim, 0) for g in b.hrep]
    return PolyhedralSpace.from_functionals(
        fs, name=name or f"linfsum({a.name or '?'},{b.name or '?'})"
    )


def l1_sum(a: PolyhedralSpace, b: PolyhedralSpace, name: str | None = None) -> PolyhedralSpace:
    """Product space with norm |x_a| + |x_b|; facets are all pairwise sums."""
    _check_sum_dim(a, b)
    fs = [
        Functional(f.coeffs + g.coeffs)
        for f in a.hrep
        for g in b.hrep
    ]
    # from_functionals deduplicates and drops anything redundant.
    return PolyhedralSpace.from_functionals(
        fs, name=name or f"l1sum({a.name or '?'},{b.name or '?'})"
    )


@dataclass(frozen=True)
class SectionFixture:
    """The cube section showing a maximal face can shrink to a point.

    In the 3-cube ball, the top facet meets the plane spanned by the two
    basis vectors in exactly one point, and that point is not a maximal
    convex subset of the section sphere: the segment joining the two basis
    vectors lies on the section sphere and properly contains it.
    """

    ambient: PolyhedralSpace
    basis: tuple[Vector, Vector]
    section: PolyhedralSpace
    face: Face
    face_points: tuple[Vector, ...]
    face_points_in_basis: tuple[Vector, ...]
    sphere_segment_in_basis: tuple[Vector, Vector]


def remark_section() -> SectionFixture:
    """Canonical regression fixture for the cube-section phenomenon."""
    cube = linf_space(3)
    basis = (Vector((1, 1, 1)), Vector((1, -1, 0)))
    section = subspace_section(cube, list(basis), name="cube-section")
    top = Face(cube, cube.functional_id(Functional((0, 0, 1))))
    pts = face_section(cube, top, list(basis))
    coords = tuple(section_coordinates(list(basis), p) for p in pts)
    segment = (
        section_coordinates(list(basis), basis[0]),
        section_coordinates(list(basis), basis[1]),
    )
    return SectionFixture(
        ambient=cube,
        basis=basis,
        section=section,
        face=top,
        face_points=pts,
        face_points_in_basis=coords,
        sphere_segment_in_basis=segment,
    )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    build: Callable[[], PolyhedralSpace]
    expected_cl: bool | None
    expected_t: bool | None
    exploratory: bool = False


def catalog_entries() -> tuple[CatalogEntry, ...]:
    entries = [
        CatalogEntry(
            "hex",
            "hexagonal norm max(|y|, |x| + |y|/2)",
            hexagon_space,
            expected_cl=False,
            expected_t=True,
        )
    ]
    for n in range(1, 5):
        entries.append(
            CatalogEntry(
                f"l1:{n}",
                f"cross-polytope ball in dimension {n}",
                (lambda k=n: l1_space(k)),
                expected_cl=True,
                expected_t=True,
            )
        )
        entries.append(
            CatalogEntry(
                f"linf:{n}",
                f"cube ball in dimension {n}",
                (lambda k=n: linf_space(k)),
                expected_cl=True,
                expected_t=True,
            )
        )
    # Sums involving the hexagon sit outside the two-sided hull theory;
    # their T verdicts are observations, not declared expectations.
    entries.append(
        CatalogEntry(
            "linfsum(hex,linf:1)",
            "hexagon times a segment under the max norm",
            lambda: resolve("linfsum(hex,linf:1)"),
            expected_cl=False,
            expected_t=None,
            exploratory=True,
        )
    )
    entries.append(
        CatalogEntry(
            "l1sum(hex,l1:1)",
            "hexagon times a segment under the sum norm",
            lambda: resolve("l1sum(hex,l1:1)"),
            expected_cl=False,
            expected_t=None,
            exploratory=True,
        )
    )
    return tuple(entries)


def _check_range(n: int):
    if not 1 <= n <= MAX_ENUM_DIM:
        raise EnumerationCapError(f"dimension {n} outside the supported range 1..{MAX_ENUM_DIM}")


def _check_sum_dim(a: PolyhedralSpace, b: PolyhedralSpace):
    if a.dim + b.dim > MAX_ENUM_DIM:
        raise EnumerationCapError(
            f"combined dimension {a.dim + b.dim} exceeds the cap of {MAX_ENUM_DIM}"
        )


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise GeometryError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def parse(self) -> PolyhedralSpace:
        space = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise GeometryError(f"trailing input at position {self.pos} in {self.text!r}")
        return space

    def parse_expr(self) -> PolyhedralSpace:
        self.skip_ws()
        rest = self.text[self.pos:]
        for head, builder in (("linfsum", linf_sum), ("l1sum", l1_sum)):
            if rest.startswith(head):
                self.pos += len(head)
                self.expect("(")
                a = self.parse_expr()
                self.expect(",")
                b = self.parse_expr()
                self.expect(")")
                return builder(a, b)
        if rest.startswith("hex"):
            self.pos += 3
            return hexagon_space()
        for head, builder in (("linf:", linf_space), ("l1:", l1_space)):
            if rest.startswith(head):
                self.pos += len(head)
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                if self.pos == start:
                    raise GeometryError(f"expected a dimension after {head!r}")
                return builder(int(self.text[start:self.pos]))
        raise GeometryError(f"unknown catalog name at position {self.pos} in {self.text!r}")


def resolve(name: str) -> PolyhedralSpace:
    """Build a space from a catalog expression such as ``linfsum(hex,linf:1)``."""
    return _Parser(name).parse()
