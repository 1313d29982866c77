"""Command-line surface.

Reads polytopes in the block format (header "dim nverts", one vertex per
row, `#` comments, blank-line separated; --transpose accepts files in the
column convention), emits newline-delimited JSON reports, and exits with
0 on success, 1 when a proved bound is violated, 2 on parse/usage errors.
Set EHRHART_SEED to fix the generator behind the seeded subcommands.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .checks import (
    certify_equality,
    ehrhart_check,
    grunbaum_check,
    milman_pajor_check,
    minkowski_combined_check,
    proof_trace,
    r_invariant,
    shrink_to_barycenter,
)
from .corpus import (
    SCAN_CHECKS,
    PolytopeRecord,
    emit_report,
    enumerate_fano_2d,
    format_records,
    parse_polytopes,
    records_from_polytopes,
    scan,
)
from .errors import CertificationContradiction, KernelError, ParseError
from .kernel import HalfSpace, barycenter, v_to_h, volume
from .lattice import (
    are_equivalent,
    is_reflexive,
    lattice_points,
    normal_form,
)
from .randgen import seed_from_env
from .report import VIOLATION

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _read_records(path: str, transpose: bool) -> list[PolytopeRecord]:
    if path == "-":
        return parse_polytopes(sys.stdin, transpose=transpose)
    with open(path, encoding="utf-8") as fh:
        return parse_polytopes(fh, transpose=transpose)


def _parse_halfspace(spec: str, dim: int) -> HalfSpace:
    try:
        coeffs, offset = spec.split(";")
        normal = tuple(Fraction(t) for t in coeffs.split(","))
        if len(normal) != dim:
            raise ValueError(f"normal has {len(normal)} entries, expected {dim}")
        return HalfSpace(normal, Fraction(offset))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(0, f"bad halfspace spec {spec!r}: {exc}")


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _frac(x) -> str:
    return str(x)


def _point(v) -> list[str]:
    return [str(c) for c in v]


def _per_record(args, fn) -> int:
    """Run fn(record, polytope) per record; collect the worst exit code."""
    records = _read_records(args.file, args.transpose)
    code = EXIT_OK
    for rec in records:
        code = max(code, fn(rec, rec.to_polytope()) or EXIT_OK)
    return code


def _cmd_dual(args) -> int:
    from .lattice import dual_polytope

    records = _read_records(args.file, args.transpose)
    duals = []
    for rec in records:
        duals.append(dual_polytope(rec.to_polytope()))
    out = records_from_polytopes(duals, prefix="dual")
    sys.stdout.write(format_records(out))
    return EXIT_OK


def _cmd_volume(args) -> int:
    def run(rec, poly):
        _emit({"id": rec.id, "volume": _frac(volume(poly))})
    return _per_record(args, run)


def _cmd_barycenter(args) -> int:
    def run(rec, poly):
        _emit({"id": rec.id, "barycenter": _point(barycenter(poly))})
    return _per_record(args, run)


def _cmd_lattice_points(args) -> int:
    def run(rec, poly):
        pts = lattice_points(v_to_h(poly), strict=args.strict)
        _emit({"id": rec.id, "strict": args.strict,
               "count": len(pts), "points": [_point(p) for p in pts]})
    return _per_record(args, run)


def _cmd_r_invariant(args) -> int:
    def run(rec, poly):
        res = r_invariant(poly)
        _emit({
            "id": rec.id,
            "r_invariant": _frac(res.value),
            "barycenter": _point(res.barycenter),
            "boundary_point": _point(res.boundary_point) if res.boundary_point else None,
        })
    return _per_record(args, run)


def _cmd_shrink(args) -> int:
    records = _read_records(args.file, args.transpose)
    shrunk = [shrink_to_barycenter(rec.to_polytope()) for rec in records]
    sys.stdout.write(format_records(records_from_polytopes(shrunk, prefix="shrunk")))
    return EXIT_OK


def _cmd_normal_form(args) -> int:
    def run(rec, poly):
        nf = normal_form(poly)
        _emit({"id": rec.id,
               "normal_form": [[str(x) for x in row] for row in nf.matrix]})
    return _per_record(args, run)


def _cmd_equiv(args) -> int:
    recs_a = _read_records(args.a, args.transpose)
    recs_b = _read_records(args.b, args.transpose)
    if len(recs_a) != 1 or len(recs_b) != 1:
        raise ParseError(0, "equiv expects exactly one polytope per file")
    f = are_equivalent(recs_a[0].to_polytope(), recs_b[0].to_polytope())
    if f is None:
        _emit({"equivalent": False})
    else:
        _emit({"equivalent": True,
               "map": {"matrix": [[str(x) for x in r] for r in f.matrix],
                       "translation": [str(x) for x in f.translation]}})
    return EXIT_OK


_CHECKS = {
    "ehrhart": ehrhart_check,
    "milman-pajor": milman_pajor_check,
    "minkowski": minkowski_combined_check,
}


def _cmd_check(args) -> int:
    records = _read_records(args.file, args.transpose)
    results = []
    for rec in records:
        poly = rec.to_polytope()
        if args.which == "grunbaum":
            h = _parse_halfspace(args.halfspace, poly.dim)
            rep = grunbaum_check(poly, h)
        else:
            rep = _CHECKS[args.which](poly)
        results.append((rec.id, rep))
    sys.stdout.write(emit_report(results))
    bad = any(rep.status == VIOLATION for _, rep in results)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_grunbaum(args) -> int:
    args.which = "grunbaum"
    return _cmd_check(args)


def _cmd_proof_trace(args) -> int:
    recs_q = _read_records(args.q, args.transpose)
    recs_k = _read_records(args.k, args.transpose)
    if len(recs_q) != 1 or len(recs_k) != 1:
        raise ParseError(0, "proof-trace expects exactly one polytope per file")
    trace = proof_trace(recs_k[0].to_polytope(), recs_q[0].to_polytope())
    for chain in trace.chains:
        _emit({
            "vertex": _point(chain.vertex),
            "values": [_frac(x) for x in chain.chain_values()],
            "steps": list(chain.step_status),
            "all_equalities": chain.all_equalities,
        })
    _emit({"bound": _frac(trace.bound), "all_equalities": trace.all_equalities})
    return EXIT_OK


def _cmd_certify(args) -> int:
    records = _read_records(args.file, args.transpose)
    code = EXIT_OK
    for rec in records:
        poly = rec.to_polytope()
        try:
            witness = certify_equality(poly)
        except CertificationContradiction as exc:
            _emit({"id": rec.id, "certified": False, "error": str(exc)})
            code = EXIT_VIOLATION
            continue
        if witness is None:
            _emit({"id": rec.id, "certified": False})
        else:
            _emit({"id": rec.id, "certified": True,
                   "map": {"matrix": [[str(x) for x in r] for r in witness.matrix],
                           "translation": [str(x) for x in witness.translation]}})
    return code


def _cmd_toric(args) -> int:
    from .toric import toric_report

    records = _read_records(args.file, args.transpose)
    results = [(rec.id, toric_report(rec.to_polytope())) for rec in records]
    sys.stdout.write(emit_report(results))
    bad = any(rep.weighted_status == VIOLATION for _, rep in results)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_enum_fano(args) -> int:
    if args.dim != 2:
        raise ParseError(0, "enumeration is implemented for dimension 2 only")
    polys = enumerate_fano_2d(args.bound)
    if args.reflexive:
        polys = [p for p in polys if is_reflexive(p)]
    sys.stdout.write(format_records(records_from_polytopes(polys, prefix="fano2d")))
    return EXIT_OK


def _cmd_scan(args) -> int:
    records = _read_records(args.file, args.transpose)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    summary, results = scan(records, checks, seed=seed_from_env(),
                            grunbaum_cuts=args.grunbaum_cuts)
    sys.stdout.write(emit_report(results))
    for line in summary.lines():
        print(line, file=sys.stderr)
    if args.figures:
        from .figures import render_scan_figures

        written = render_scan_figures(summary, results, records, args.figures)
        for path in written:
            print(f"figure: {path}", file=sys.stderr)
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrkit",
        description="Exact rational lattice-polytope toolkit: duality, "
                    "volume bounds, normal forms, toric Fano invariants.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", nargs="?", default="-",
                        help="polytope file in block format ('-' for stdin)")
    common.add_argument("--transpose", action="store_true",
                        help="rows are coordinates instead of vertices")

    p = sub.add_parser("dual", parents=[common], help="polar dual polytopes")
    p.set_defaults(fn=_cmd_dual)
    p = sub.add_parser("volume", parents=[common], help="exact volumes")
    p.set_defaults(fn=_cmd_volume)
    p = sub.add_parser("barycenter", parents=[common], help="exact barycenters")
    p.set_defaults(fn=_cmd_barycenter)
    p = sub.add_parser("lattice-points", parents=[common], help="integer points")
    p.add_argument("--strict", action="store_true", help="interior points only")
    p.set_defaults(fn=_cmd_lattice_points)
    p = sub.add_parser("r-invariant", parents=[common],
                       help="barycenter ray invariant")
    p.set_defaults(fn=_cmd_r_invariant)
    p = sub.add_parser("shrink", parents=[common],
                       help="shrink to barycenter at the origin")
    p.set_defaults(fn=_cmd_shrink)
    p = sub.add_parser("normal-form", parents=[common],
                       help="unimodular normal form")
    p.set_defaults(fn=_cmd_normal_form)

    p = sub.add_parser("equiv", help="unimodular equivalence witness")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--transpose", action="store_true")
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("check", help="run one theorem check")
    csub = p.add_subparsers(dest="which", required=True)
    for name in ("ehrhart", "milman-pajor", "minkowski"):
        cp = csub.add_parser(name, parents=[common])
        cp.set_defaults(fn=_cmd_check, halfspace=None)
    cp = csub.add_parser("grunbaum", parents=[common])
    cp.add_argument("--halfspace", metavar="a1,...,an;c", required=True,
                    help="halfspace <a,x> <= c; use --halfspace=SPEC when "
                         "the first coefficient is negative")
    cp.set_defaults(fn=_cmd_check)

    p = sub.add_parser("grunbaum", parents=[common],
                       help="halfspace cut bound at a given cut")
    p.add_argument("--halfspace", metavar="a1,...,an;c", required=True)
    p.set_defaults(fn=_cmd_grunbaum)

    p = sub.add_parser("proof-trace", help="exact bound chain at every dual vertex")
    p.add_argument("--q", required=True, help="lattice polytope file")
    p.add_argument("--k", required=True, help="body file (inside dual of Q)")
    p.add_argument("--transpose", action="store_true")
    p.set_defaults(fn=_cmd_proof_trace)

    p = sub.add_parser("certify-equality", parents=[common],
                       help="certify the extremal volume case")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("toric-report", parents=[common],
                       help="toric Fano invariants of a Fano polytope")
    p.set_defaults(fn=_cmd_toric)

    p = sub.add_parser("enum-fano", help="enumerate unique-interior-point polygons")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--reflexive", action="store_true",
                   help="keep only reflexive classes")
    p.set_defaults(fn=_cmd_enum_fano)

    p = sub.add_parser("scan", parents=[common], help="run checks over a corpus")
    p.add_argument("--checks", default="ehrhart",
                   help=f"comma list from {', '.join(SCAN_CHECKS)}")
    p.add_argument("--grunbaum-cuts", type=int, default=3,
                   help="seeded halfspaces per record for the grunbaum check")
    p.add_argument("--figures", metavar="DIR",
                   help="also render figures into DIR")
    p.set_defaults(fn=_cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"ehrkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationContradiction as exc:
        print(f"ehrkit: contradiction: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except KernelError as exc:
        print(f"ehrkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ehrkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
