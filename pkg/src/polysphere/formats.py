"""Textual file formats for spaces, sphere maps, and candidate lists.

Rationals are written as ``p/q`` or integer tokens; decimals are rejected
so files stay exact. Parse errors carry a structured kind plus line and
column, both one-based.

Space files::

    # optional comments
    version 1
    name hexagon
    dim 2
    kind H            # H: rows are functionals, V: rows are vertices
    symmetric true    # optional: close the rows under negation
    0 1
    1 1/2
    1 -1/2

Map files::

    version 1
    domain hex        # catalog expression or space-file path
    codomain hex
    map
    v0 -> w3          # domain vertex 0 to codomain vertex 3
    (1/2, 1) -> (1, 0)   # or by exact coordinates

The facet correspondence of a map file is derived from the vertex pairs;
if the vertex assignment does not send facets onto facets, the file is
rejected with a ``facet-structure`` error.
"""

import re
from fractions import Fraction
from typing import Callable

from .errors import GeometryError
from .isometry import SphereMap
from .space import PolyhedralSpace, Vector, as_fraction

_TOKEN_RE = re.compile(r"\S+")
_INDEX_RE = re.compile(r"^[vw]?(\d+)$")


class SpaceParseError(GeometryError):
    def __init__(self, kind: str, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.kind = kind
        self.line = line
        self.col = col


class MapParseError(GeometryError):
    def __init__(self, kind: str, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.kind = kind
        self.line = line
        self.col = col


def _strip_comment(raw: str) -> str:
    cut = raw.find("#")
    return raw if cut < 0 else raw[:cut]


def _parse_rational(token: str, line: int, col: int, error_cls) -> Fraction:
    try:
        return as_fraction(token)
    except (ValueError, TypeError):
        hint = "decimal tokens are not accepted" if "." in token else f"bad rational {token!r}"
        raise error_cls("malformed-rational", line, col, hint) from None


def _iter_rows(text: str):
    """Yield (line_number, stripped_line) for content lines."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).strip()
        if body:
            yield ln, _strip_comment(raw)


_HEADER_KEYS = {"version", "name", "dim", "kind", "symmetric"}


def parse_space_text(text: str, name: str | None = None, max_dim: int = 6) -> PolyhedralSpace:
    header: dict[str, str] = {}
    rows: list[tuple[int, tuple[Fraction, ...]]] = []
    header_done = False
    for ln, line in _iter_rows(text):
        tokens = list(_TOKEN_RE.finditer(line))
        first = tokens[0].group()
        if not header_done and first in _HEADER_KEYS:
            if len(tokens) != 2:
                raise SpaceParseError("header", ln, tokens[0].start() + 1, f"{first} needs one value")
            header[first] = tokens[1].group()
            continue
        if not header_done and first[0].isalpha():
            raise SpaceParseError("header", ln, tokens[0].start() + 1, f"unknown header key {first!r}")
        header_done = True
        row = tuple(
            _parse_rational(t.group(), ln, t.start() + 1, SpaceParseError) for t in tokens
        )
        rows.append((ln, row))

    if header.get("version") != "1":
        raise SpaceParseError("header", 1, 1, "missing or unsupported 'version' (expected 1)")
    kind = header.get("kind")
    if kind not in ("H", "V"):
        raise SpaceParseError("header", 1, 1, "missing or bad 'kind' (expected H or V)")
    try:
        dim = int(header.get("dim", ""))
    except ValueError:
        raise SpaceParseError("header", 1, 1, "missing or bad 'dim'") from None
    symmetric = header.get("symmetric", "false").lower() == "true"
    if not rows:
        raise SpaceParseError("header", 1, 1, "no data rows")
    for ln, row in rows:
        if len(row) != dim:
            raise SpaceParseError(
                "dimension-mismatch", ln, 1, f"row has {len(row)} entries, expected {dim}"
            )
    if not symmetric:
        row_set = {row for _, row in rows}
        for ln, row in rows:
            if tuple(-c for c in row) not in row_set:
                raise SpaceParseError(
                    "asymmetric-input",
                    ln,
                    1,
                    "row lacks its negation and 'symmetric true' is not set",
                )

    label = header.get("name", name)
    data = [row for _, row in rows]
    if kind == "H":
        return PolyhedralSpace.from_functionals(
            data, name=label, symmetrize=symmetric, max_dim=max_dim
        )
    return PolyhedralSpace.from_vertices(data, name=label, symmetrize=symmetric, max_dim=max_dim)


def parse_space_file(path, max_dim: int = 6) -> PolyhedralSpace:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_space_text(fh.read(), name=str(path), max_dim=max_dim)


def serialize_space(space: PolyhedralSpace, kind: str = "V") -> str:
    """Round-trippable text form; parsing it rebuilds an equal space."""
    if kind not in ("H", "V"):
        raise ValueError("kind must be 'H' or 'V'")
    lines = ["version 1"]
    if space.name:
        lines.append(f"name {space.name}")
    lines.append(f"dim {space.dim}")
    lines.append(f"kind {kind}")
    source = space.vrep if kind == "V" else space.hrep
    for item in source:
        coords = item.coords if kind == "V" else item.coeffs
        lines.append(" ".join(str(c) for c in coords))
    return "\n".join(lines) + "\n"


def _parse_point_side(side: str, ln: int, col: int) -> tuple[str, object]:
    """A mapping side: ('index', i) or ('coords', tuple of Fraction)."""
    side = side.strip()
    if side.startswith("("):
        if not side.endswith(")"):
            raise MapParseError("mapping", ln, col, "unclosed coordinate tuple")
        parts = side[1:-1].split(",")
        coords = tuple(
            _parse_rational(p.strip(), ln, col, MapParseError) for p in parts
        )
        return "coords", coords
    m = _INDEX_RE.match(side)
    if not m:
        raise MapParseError("mapping", ln, col, f"bad vertex reference {side!r}")
    return "index", int(m.group(1))


def parse_map_text(
    text: str, resolver: Callable[[str], PolyhedralSpace]
) -> SphereMap:
    header: dict[str, str] = {}
    pairs: list[tuple[int, tuple, tuple]] = []
    in_map = False
    for ln, line in _iter_rows(text):
        body = line.strip()
        if not in_map:
            if body == "map":
                in_map = True
                continue
            key, _, value = body.partition(" ")
            if key not in ("version", "domain", "codomain") or not value.strip():
                raise MapParseError("header", ln, 1, f"unexpected header line {body!r}")
            header[key] = value.strip()
            continue
        lhs, arrow, rhs = body.partition("->")
        if not arrow:
            raise MapParseError("mapping", ln, 1, "mapping lines look like 'v0 -> w1'")
        pairs.append(
            (ln, _parse_point_side(lhs, ln, 1), _parse_point_side(rhs, ln, body.find("->") + 3))
        )

    if header.get("version") != "1":
        raise MapParseError("header", 1, 1, "missing or unsupported 'version' (expected 1)")
    for key in ("domain", "codomain"):
        if key not in header:
            raise MapParseError("header", 1, 1, f"missing '{key}'")
    domain = resolver(header["domain"])
    codomain = resolver(header["codomain"])

    def vertex_index(space: PolyhedralSpace, side, ln: int) -> int:
        tag, value = side
        if tag == "index":
            if not 0 <= value < len(space.vrep):
                raise MapParseError("vertex", ln, 1, f"vertex index {value} out of range")
            return value
        if len(value) != space.dim:
            raise MapParseError("dimension-mismatch", ln, 1, "coordinate tuple has wrong length")
        try:
            return space.vertex_id(Vector(value))
        except GeometryError:
            raise MapParseError(
                "vertex", ln, 1, f"{value} is not a vertex of the space"
            ) from None

    assignment: dict[int, int] = {}
    for ln, lhs, rhs in pairs:
        i = vertex_index(domain, lhs, ln)
        j = vertex_index(codomain, rhs, ln)
        if i in assignment:
            raise MapParseError("coverage", ln, 1, f"domain vertex {i} mapped twice")
        assignment[i] = j
    missing = [i for i in range(len(domain.vrep)) if i not in assignment]
    if missing:
        raise MapParseError(
            "coverage", 1, 1, f"domain vertices without an image: {missing}"
        )
    vertex_map = tuple(assignment[i] for i in range(len(domain.vrep)))
    if len(set(vertex_map)) != len(vertex_map):
        raise MapParseError("coverage", 1, 1, "two domain vertices share an image")

    facet_map = []
    for fid in range(len(domain.hrep)):
        target = {vertex_map[j] for j in domain.facet_index[fid]}
        gid = next(
            (
                g
                for g in range(len(codomain.hrep))
                if set(codomain.facet_index[g]) == target
            ),
            None,
        )
        if gid is None:
            raise MapParseError(
                "facet-structure",
                1,
                1,
                f"vertex images of facet {fid} do not form a codomain facet",
            )
        facet_map.append(gid)
    return SphereMap(domain, codomain, vertex_map, tuple(facet_map))


def parse_map_file(path, resolver: Callable[[str], PolyhedralSpace]) -> SphereMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map_text(fh.read(), resolver)


def serialize_map(m: SphereMap, domain_ref: str, codomain_ref: str) -> str:
    lines = ["version 1", f"domain {domain_ref}", f"codomain {codomain_ref}", "map"]
    for i, j in enumerate(m.vertex_map):
        lines.append(f"v{i} -> w{j}")
    return "\n".join(lines) + "\n"


def parse_candidates_text(text: str, dim: int) -> tuple[Vector, ...]:
    """Candidate sphere points, one per row of exact rationals."""
    out = []
    for ln, line in _iter_rows(text):
        tokens = list(_TOKEN_RE.finditer(line))
        row = tuple(
            _parse_rational(t.group(), ln, t.start() + 1, SpaceParseError) for t in tokens
        )
        if len(row) != dim:
            raise SpaceParseError(
                "dimension-mismatch", ln, 1, f"candidate has {len(row)} entries, expected {dim}"
            )
        out.append(Vector(row))
    return tuple(out)


def parse_candidates_file(path, dim: int) -> tuple[Vector, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_candidates_text(fh.read(), dim)
