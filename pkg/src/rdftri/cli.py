"""Command-line front end.

Constructors (``staircase``, ``product``, ``cube``) print a triangulation
file; verifiers print a JSON verdict. Exit status is 0 when the input is
verified, 1 when it is valid but the property fails, 2 on bad input.
Factor arguments of ``product`` are file names, ``-`` for standard input, or
a built-in name such as ``@c4`` (see ``rdftri product --help``).
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .complex import bipartition, f_vector, fold, signature
from .cube import c3_min, c4_table, certify_rdf, rdf_cube, sample_template_s
from .errors import (
    DegenerateLifting,
    DisconnectedDualGraph,
    NotBipartite,
    NotFoldable,
    NotLocallyConvex,
    TriangulationError,
)
from .product import bipyramid, make_ordering, simplicial_product, square_bipyramid
from .regularity import induces_triangulation
from .shapes import dense_segment, unit_segment
from .staircase import staircase
from .wronski import cox_oriented, emit_system, wronski_polynomial, wronski_system

OK, FALSE, BAD_INPUT = 0, 1, 2

BUILTINS = {
    "I": unit_segment,
    "square": square_bipyramid,
    "c3": c3_min,
    "c4": c4_table,
    "c4-corrected": lambda: c4_table("corrected"),
    "segment": dense_segment,
    "bipyramid": bipyramid,
    "staircase": staircase,
    "cube": lambda d: rdf_cube(d, sample_template_s() if d % 4 == 2 and d > 2 else None).triangulation,
    "template-s": sample_template_s,
}


class InputError(Exception):
    pass


def load(arg: str):
    """A triangulation from a file, ``-`` or ``@name[:param...]``."""
    if not arg.startswith("@"):
        return io.read(arg)
    name, *params = arg[1:].split(":")
    if name not in BUILTINS:
        raise InputError(f"unknown built-in {name!r}; choose from {', '.join(sorted(BUILTINS))}")
    try:
        return BUILTINS[name](*(int(p) for p in params))
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad parameters for @{name}: {exc}") from None


def emit(obj) -> None:
    sys.stdout.write(io.canonical_json(obj))


def _int_list(text: str | None):
    if text is None:
        return None
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_staircase(args):
    sys.stdout.write(io.dumps(staircase(args.m, args.n)))
    return OK


def cmd_product(args):
    if args.a == "-" and args.b == "-":
        raise InputError("only one factor can come from standard input")
    K, L = load(args.a), load(args.b)
    ok = make_ordering(K, args.order_a, split=_int_list(args.split_a), perm=_int_list(args.perm_a))
    ol = make_ordering(L, args.order_b, split=_int_list(args.split_b), perm=_int_list(args.perm_b))
    lift = None if args.lift == "none" else args.lift
    if lift is not None and (K.lifting is None or L.lifting is None):
        lift = None
    sys.stdout.write(io.dumps(simplicial_product(K, ok, L, ol, lifting=lift)))
    return OK


def cmd_fold(args):
    K = load(args.file)
    try:
        coloring = fold(K)
    except NotFoldable as exc:
        emit({"foldable": False, "witness": {"dual_edge": list(exc.witness), "vertex": exc.vertex,
                                              "colors": list(exc.colors)}})
        return FALSE
    emit({"foldable": True, "coloring": list(coloring)})
    return OK


def cmd_signature(args):
    K = load(args.file)
    try:
        bipartition(K)
        value = signature(K)
    except NotBipartite as exc:
        emit({"bipartite": False, "odd_cycle": list(exc.cycle)})
        return FALSE
    except DisconnectedDualGraph as exc:
        emit({"signature": None, "reason": str(exc)})
        return FALSE
    emit({"signature": value})
    return OK


def cmd_regular(args):
    K = load(args.file)
    if K.lifting is None:
        raise InputError("lifting: the file has no lifting")
    try:
        cert = induces_triangulation(K)
    except (NotLocallyConvex, DegenerateLifting) as exc:
        kind = "flat" if isinstance(exc, DegenerateLifting) else "not_convex"
        emit({"regular": False, "failure": kind, "ridge": list(exc.ridge), "facets": list(exc.facets)})
        return FALSE
    out = {"regular": True, "ridges_checked": len(cert), "unused_points": cert.unused_points}
    if args.certificate:
        out["certificate"] = list(cert.rows())
    emit(out)
    return OK


def cmd_cube(args):
    template = load(args.template_s) if args.template_s else None
    construction = rdf_cube(args.d, template)
    K = construction.triangulation
    if not args.report:
        sys.stdout.write(io.dumps(K))
        return OK
    report = certify_rdf(K)
    good = report.ok and report.signature == construction.claimed_signature
    emit({
        "d": args.d,
        "recipe": construction.recipe,
        "facets": len(K),
        "claimed_signature": construction.claimed_signature,
        "signature": report.signature,
        "dense": report.dense,
        "volume": report.volume,
        "foldable": report.foldable,
        "bipartite": report.bipartite,
        "regular": report.regular,
    })
    return OK if good else FALSE


def cmd_wronski(args):
    K = load(args.file)
    weights = None
    if args.weights:
        from fractions import Fraction

        weights = [Fraction(x) for x in args.weights.split(",")]
    system = wronski_system(K, normalize=args.normalize, weights=weights, check_orthant=not args.allow_negative)
    text = emit_system(system, args.format, variable=args.variable)
    if weights is not None and args.format == "txt":
        text += f"W = {wronski_polynomial(system).to_text(args.variable)}\n"
    sys.stdout.write(text)
    return OK


def cmd_cox(args):
    K = load(args.file)
    report = cox_oriented(K.config)
    emit({
        "cox_oriented": report.oriented,
        "lattice_index_odd": report.lattice_index_odd,
        "saturation_index_odd": report.saturation_index_odd,
        "odd_vector_in_span": report.odd_vector_in_span,
        "elementary_divisors": list(report.elementary_divisors),
    })
    return OK if report.oriented else FALSE


def cmd_fvector(args):
    emit({"f_vector": list(f_vector(load(args.file)))})
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdftri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("staircase", help="staircase triangulation of simplex(m) x simplex(n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_staircase)

    kinds = ["color_consecutive", "symmetric", "almost_color_consecutive", "explicit"]
    p = sub.add_parser(
        "product",
        help="simplicial product of two triangulations",
        description="Factors are files, '-' or built-ins: "
        "@I @square @c3 @c4 @c4-corrected @segment:K:L @bipyramid:N @staircase:M:N @cube:D @template-s.",
    )
    p.add_argument("a")
    p.add_argument("b")
    for side in ("a", "b"):
        p.add_argument(f"--order-{side}", choices=kinds, default="color_consecutive")
        p.add_argument(f"--split-{side}", help="vertices of colour 0 placed first (comma separated)")
        p.add_argument(f"--perm-{side}", help="explicit vertex order (comma separated)")
    p.add_argument("--lift", choices=["lexrev", "color", "none"], default="lexrev",
                   help="product lifting to attach when both factors have one")
    p.set_defaults(func=cmd_product)

    for name, func, helptext in [
        ("fold", cmd_fold, "colour vertices with dim + 1 colours"),
        ("signature", cmd_signature, "odd black minus odd white facets"),
        ("fvector", cmd_fvector, "face numbers by dimension"),
        ("cox", cmd_cox, "Cox orientation parity checks"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("regular", help="certify that the lifting induces the triangulation")
    p.add_argument("file")
    p.add_argument("--certificate", action="store_true", help="include every ridge check")
    p.set_defaults(func=cmd_regular)

    p = sub.add_parser("cube", help="rdf-triangulation of the d-cube")
    p.add_argument("d", type=int)
    p.add_argument("--template-s", help="triangulation of simplex(4) x square for d = 2 mod 4 (file or @template-s)")
    p.add_argument("--report", action="store_true", help="print certification instead of the triangulation")
    p.set_defaults(func=cmd_cube)

    p = sub.add_parser("wronski", help="coefficient polynomials of a coloured, lifted triangulation")
    p.add_argument("file")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--format", choices=["txt", "json"], default="txt")
    p.add_argument("--variable", default="t")
    p.add_argument("--weights", help="comma separated a_0,...,a_m for the Wronski polynomial")
    p.add_argument("--allow-negative", action="store_true", help="skip the nonnegative orthant check")
    p.set_defaults(func=cmd_wronski)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (InputError, TriangulationError) as exc:
        print(f"rdftri {args.command}: {exc}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    sys.exit(run())
