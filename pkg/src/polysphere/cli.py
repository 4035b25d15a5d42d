"""Command-line interface.

Subcommands: facets, star, check-cl, check-t, verify-iso, extend, sum,
render, catalog. Exit codes partition the outcomes:

    0   the property holds / the verification passed
    1   the property fails / a counterexample was found
    2   not established (the T-property certificate search was exhausted;
        the property is existential, so this is not a refutation)
    64  usage or parse error

Space arguments are file paths when such a file exists, catalog
expressions otherwise (see ``polysphere catalog``). Reports are plain
deterministic text; rerunning a command reproduces its bytes.
"""

import argparse
import os
import sys

from . import catalog as cat
from .errors import GeometryError
from .faces import facets, star
from .formats import (
    MapParseError,
    SpaceParseError,
    parse_candidates_file,
    parse_map_file,
    parse_space_file,
    serialize_space,
)
from .isometry import extend as extend_map
from .isometry import verify_isometry
from .properties import check_cl, check_t_property, cl_decomposition
from .render import render_space_svg
from .space import PolyhedralSpace, Vector, as_fraction

OK = 0
FAIL = 1
NOT_ESTABLISHED = 2
USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_space(ref: str, max_dim: int) -> PolyhedralSpace:
    if os.path.exists(ref):
        return parse_space_file(ref, max_dim=max_dim)
    try:
        return cat.resolve(ref)
    except GeometryError as err:
        raise _UsageError(f"{ref!r} is neither a file nor a catalog expression ({err})") from err


def _parse_point(text: str, dim: int) -> Vector:
    parts = text.replace(",", " ").split()
    if len(parts) != dim:
        raise _UsageError(f"point needs {dim} coordinates, got {len(parts)}")
    try:
        return Vector(as_fraction(p) for p in parts)
    except (ValueError, TypeError) as err:
        raise _UsageError(str(err)) from err


def _cmd_facets(args, out) -> int:
    space = _load_space(args.space, args.max_dim)
    print(space.summary(), file=out)
    for face in facets(space):
        verts = ", ".join(f"v{j} {space.vrep[j]}" for j in face.vertex_ids)
        print(f"facet f{face.functional_id}: functional {face.functional}; vertices {verts}", file=out)
    return OK


def _cmd_star(args, out) -> int:
    space = _load_space(args.space, args.max_dim)
    x = _parse_point(args.point, space.dim)
    st = star(space, x)
    print(f"star of {x} in {space.summary()}", file=out)
    for face in st.faces:
        print(f"  f{face.functional_id} {face.functional}", file=out)
    kind = "maximal convex (smooth point)" if len(st.faces) == 1 else "union of several facets"
    print(f"faces: {len(st.faces)} ({kind})", file=out)
    return OK


def _cmd_check_cl(args, out) -> int:
    space = _load_space(args.space, args.max_dim)
    report = check_cl(space)
    print(space.summary(), file=out)
    for fv in report.facet_verdicts:
        if fv.ok:
            print(f"facet f{fv.facet_id}: ball = hull of facet and its negation over all vertices", file=out)
        else:
            print(f"facet f{fv.facet_id}: vertex {fv.failing_vertex} escapes the two-sided hull", file=out)
    if report.is_cl:
        print("VERDICT: CL holds (and almost-CL, which coincides for polytopes)", file=out)
        if args.decompose:
            x = _parse_point(args.decompose, space.dim)
            eps = as_fraction(args.eps)
            for face in facets(space):
                lam, y1, y2 = cl_decomposition(space, x, face, eps=eps)
                print(
                    f"decomposition over f{face.functional_id}: {x} = {lam}*{y1} + {1 - lam}*{y2}",
                    file=out,
                )
        return OK
    fid, v = report.counterexample
    print(f"VERDICT: not almost-CL; counterexample vertex {v} for facet f{fid}", file=out)
    return FAIL


def _cmd_check_t(args, out) -> int:
    space = _load_space(args.space, args.max_dim)
    candidates = None
    if args.candidates:
        candidates = list(parse_candidates_file(args.candidates, space.dim))
    report = check_t_property(space, candidates)
    print(space.summary(), file=out)
    print(f"candidates ({len(report.candidates)}):", file=out)
    for k, c in enumerate(report.candidates):
        smooth = "maximal-convex star" if report.condition_i[k] else "star is not maximal convex"
        print(f"  x{k} = {c}  [{smooth}]", file=out)
    if report.uncovered_facet is None:
        pairs = ", ".join(f"f{p.facet_id}<-x{p.candidate_index}" for p in report.coverage)
        print(f"covering: {pairs}", file=out)
    else:
        print(f"covering FAILS: facet f{report.uncovered_facet} is nobody's star", file=out)

    if report.condition_iii:
        print("two-sided distance values (rows: ball vertices, columns: candidates):", file=out)
        cols = sorted({rec.candidate_index for rec in report.condition_iii})
        by_key = {(rec.vertex.coords, rec.candidate_index): rec for rec in report.condition_iii}
        header = "vertex".ljust(18) + " ".join(f"x{k}".rjust(6) for k in cols)
        print(header, file=out)
        for v in space.vrep:
            cells = []
            for k in cols:
                rec = by_key.get((v.coords, k))
                cells.append(str(rec.value).rjust(6) if rec else "-".rjust(6))
            print(str(v).ljust(18) + " ".join(cells), file=out)
        sample = report.condition_iii[0]
        print(
            f"witness example: vertex {sample.vertex}, candidate x{sample.candidate_index}: "
            f"y+ = {sample.witness_plus}, y- = {sample.witness_minus}, value {sample.value}",
            file=out,
        )
    if report.holds:
        print("VERDICT: T-property established by this candidate family", file=out)
        return OK
    print("VERDICT: not established (this family fails; the property is existential)", file=out)
    return NOT_ESTABLISHED


def _resolver(max_dim: int):
    def resolve_ref(ref: str) -> PolyhedralSpace:
        return _load_space(ref, max_dim)

    return resolve_ref


def _cmd_verify_iso(args, out) -> int:
    m = parse_map_file(args.map, _resolver(args.max_dim))
    report = verify_isometry(m, seed=args.seed)
    print(f"domain:   {m.domain.summary()}", file=out)
    print(f"codomain: {m.codomain.summary()}", file=out)
    if report.passed:
        print("VERDICT: surjective isometry verified", file=out)
        return OK
    kind = "malformed map (invariant violation)" if report.malformed else "isometry failure"
    print(f"VERDICT: rejected: {kind}: {report.reason}", file=out)
    if report.counterexample is not None:
        parts = ", ".join(str(c) for c in report.counterexample)
        print(f"counterexample: {parts}", file=out)
    return FAIL


def _cmd_extend(args, out) -> int:
    m = parse_map_file(args.map, _resolver(args.max_dim))
    report = verify_isometry(m, seed=args.seed)
    if not report.passed:
        print(f"VERDICT: not an isometry: {report.reason}", file=out)
        if report.counterexample is not None:
            print(f"counterexample: {', '.join(str(c) for c in report.counterexample)}", file=out)
        return FAIL
    try:
        cert = extend_map(m, seed=args.seed)
    except GeometryError as err:
        print(f"VERDICT: extension failed: {err}", file=out)
        return FAIL
    print("linear extension matrix (rows):", file=out)
    for row in cert.matrix:
        print("  [" + ", ".join(str(c) for c in row) + "]", file=out)
    print("transported functional pairs:", file=out)
    for f, g in cert.functional_pairs:
        print(f"  {f} -> {g}", file=out)
    print(
        "checks: vertex agreement ok; norm formula ok; ball vertices map bijectively",
        file=out,
    )
    print("VERDICT: extension certified", file=out)
    return OK


def _cmd_sum(args, out) -> int:
    a = _load_space(args.a, args.max_dim)
    b = _load_space(args.b, args.max_dim)
    builder = cat.l1_sum if args.kind == "l1" else cat.linf_sum
    space = builder(a, b, name=args.name)
    text = serialize_space(space, kind="V")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {space.summary()} to {args.out}", file=out)
    else:
        out.write(text)
    return OK


def _cmd_render(args, out) -> int:
    space = _load_space(args.space, args.max_dim)
    candidates = None
    report = None
    if space.dim == 2:
        if args.candidates:
            candidates = list(parse_candidates_file(args.candidates, space.dim))
        report = check_t_property(space, candidates)
        candidates = report.candidates
    svg = render_space_svg(space, candidates=candidates, report=report)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.svg}", file=out)
    else:
        out.write(svg)
    return OK


def _cmd_catalog(args, out) -> int:
    print("catalog expressions: hex | l1:N | linf:N | l1sum(A,B) | linfsum(A,B)", file=out)
    for entry in cat.catalog_entries():
        cl = "-" if entry.expected_cl is None else ("yes" if entry.expected_cl else "no")
        tp = "-" if entry.expected_t is None else ("yes" if entry.expected_t else "no")
        tag = "  [exploratory]" if entry.exploratory else ""
        print(f"{entry.name:22} CL={cl:3} T={tp:3} {entry.description}{tag}", file=out)
    return OK


def build_parser() -> _Parser:
    parser = _Parser(prog="polysphere", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--max-dim", type=int, default=6, help="enumeration cap (at most 6)")
        return p

    p = add("facets", _cmd_facets, help="list the maximal convex subsets of the sphere")
    p.add_argument("space")

    p = add("star", _cmd_star, help="facets containing a sphere point")
    p.add_argument("space")
    p.add_argument("point", help="comma or space separated rationals, e.g. '3/4,1/2'")

    p = add("check-cl", _cmd_check_cl, help="is the ball the two-sided hull of every facet")
    p.add_argument("space")
    p.add_argument("--decompose", metavar="POINT", help="also decompose POINT over every facet")
    p.add_argument("--eps", default="0", help="decomposition tolerance (exact 0 is achieved)")

    p = add("check-t", _cmd_check_t, help="certificate search for the T-property")
    p.add_argument("space")
    p.add_argument("--candidates", metavar="FILE", help="candidate points, one row each")

    p = add("verify-iso", _cmd_verify_iso, help="verify a sphere map is a surjective isometry")
    p.add_argument("map")
    p.add_argument("--seed", type=int, default=0, help="seed for the rational sampler")

    p = add("extend", _cmd_extend, help="build and certify the linear extension of a sphere map")
    p.add_argument("map")
    p.add_argument("--seed", type=int, default=0)

    p = add("sum", _cmd_sum, help="direct sum of two spaces")
    p.add_argument("kind", choices=["l1", "linf"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--name")
    p.add_argument("--out", metavar="FILE", help="write the space file here instead of stdout")

    p = add("render", _cmd_render, help="SVG of a 2D sphere, or a facet incidence graph")
    p.add_argument("space")
    p.add_argument("--candidates", metavar="FILE")
    p.add_argument("--svg", metavar="FILE", help="output path (default: stdout)")
    p.add_argument("--seed", type=int, default=0)

    add("catalog", _cmd_catalog, help="list built-in spaces and the name grammar")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_dim", 6) > 6:
            raise _UsageError("--max-dim cannot exceed 6")
        return args.func(args, sys.stdout)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return USAGE
    except (SpaceParseError, MapParseError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return USAGE
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    except GeometryError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
