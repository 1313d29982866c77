"""Corpus ingestion, generation, report serialization, and the scan driver.

Input block format: a header line "dim nverts" followed by nverts rows of
dim rational entries ("p/q" or integers), blocks separated by blank lines,
`#` starts a comment. Reports are emitted as newline-delimited JSON objects
with every rational rendered exactly as "p/q".
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, TextIO

from .checks import (
    ehrhart_check,
    grunbaum_check,
    milman_pajor_check,
    minkowski_combined_check,
)
from .errors import KernelError, NotFano, ParseError
from .kernel import (
    HalfSpace,
    UnimodularAffineMap,
    VPolytope,
    barycenter,
    hull,
    volume,
)
from .lattice import NormalForm, normal_form, root_symmetry_check
from .linalg import Vec, vec
from .randgen import random_halfspace_through, seed_from_env
from .report import EQUALITY, NOT_APPLICABLE, STRICT, VIOLATION, CheckReport
from .toric import ToricFanoReport, toric_report


@dataclass(frozen=True)
class PolytopeRecord:
    """One parsed polytope: id, ambient dimension, vertex rows, tags."""

    id: str
    dim: int
    vertices: tuple[Vec, ...]
    tags: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(vec(v) for v in self.vertices))

    def to_polytope(self) -> VPolytope:
        return hull(self.vertices)


def _parse_entry(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"bad rational entry {token!r}")


def parse_polytopes(stream: Iterable[str] | TextIO,
                    transpose: bool = False) -> list[PolytopeRecord]:
    """Parse the block format; raises ParseError with a line number."""
    records: list[PolytopeRecord] = []
    header: tuple[int, int] | None = None
    rows: list[tuple[Fraction, ...]] = []
    header_line = 0

    def flush(lineno: int):
        nonlocal header, rows
        if header is None:
            return
        dim, nverts = header
        want_rows = dim if transpose else nverts
        if len(rows) != want_rows:
            raise ParseError(lineno, f"expected {want_rows} rows, got {len(rows)}")
        matrix = list(map(tuple, zip(*rows))) if transpose else rows
        rec_id = f"rec-{len(records) + 1:04d}"
        records.append(PolytopeRecord(rec_id, dim, tuple(matrix)))
        header = None
        rows = []

    lineno = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush(lineno)
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise ParseError(lineno, "header must be 'dim nverts'")
            try:
                dim, nverts = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(lineno, "header must be two integers")
            if dim < 1 or nverts < 1:
                raise ParseError(lineno, "header entries must be positive")
            header = (dim, nverts)
            header_line = lineno
            continue
        dim, nverts = header
        want_cols = nverts if transpose else dim
        if len(tokens) != want_cols:
            raise ParseError(lineno, f"expected {want_cols} entries, got {len(tokens)}")
        rows.append(tuple(_parse_entry(t, lineno) for t in tokens))
        if len(rows) == (dim if transpose else nverts):
            flush(lineno)
    flush(lineno + 1)
    if header is not None:
        raise ParseError(header_line, "unterminated block")
    return records


def _format_fraction(x: Fraction) -> str:
    return str(x)


def format_records(records: Sequence[PolytopeRecord]) -> str:
    """Inverse of parse_polytopes up to ids: block format text."""
    blocks = []
    for rec in records:
        lines = [f"# {rec.id}" + (f" tags: {','.join(rec.tags)}" if rec.tags else ""),
                 f"{rec.dim} {len(rec.vertices)}"]
        for v in rec.vertices:
            lines.append(" ".join(_format_fraction(c) for c in v))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def records_from_polytopes(polys: Sequence[VPolytope],
                           prefix: str = "rec") -> list[PolytopeRecord]:
    return [
        PolytopeRecord(f"{prefix}-{i + 1:04d}", p.dim, p.vertices)
        for i, p in enumerate(polys)
    ]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _jsonable(value):
    if isinstance(value, Fraction):
        return _format_fraction(value)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, UnimodularAffineMap):
        return {
            "kind": "unimodular-map",
            "matrix": [[str(x) for x in row] for row in value.matrix],
            "translation": [str(x) for x in value.translation],
        }
    if isinstance(value, HalfSpace):
        return {
            "kind": "halfspace",
            "normal": [_format_fraction(x) for x in value.normal],
            "offset": _format_fraction(value.offset),
        }
    if isinstance(value, NormalForm):
        return {
            "kind": "normal-form",
            "matrix": [[str(x) for x in row] for row in value.matrix],
        }
    if isinstance(value, tuple) and all(isinstance(x, (Fraction, int)) for x in value):
        return [_jsonable(x) for x in value]
    if isinstance(value, (tuple, list)):
        return [_jsonable(x) for x in value]
    if value is None:
        return None
    return str(value)


def _report_object(rec_id: str, rep: CheckReport | ToricFanoReport) -> dict:
    if isinstance(rep, ToricFanoReport):
        return {
            "id": rec_id,
            "check": "toric-report",
            "status": rep.weighted_status,
            "values": {
                "degree": _jsonable(rep.degree),
                "r_invariant": _jsonable(rep.r_value),
                "ke_exists": rep.ke_exists,
                "weighted_bound": _jsonable(rep.weighted_bound),
                "plain_bound": _jsonable(rep.plain_bound),
                "plain_status": rep.plain_status,
                "is_projective_space": rep.is_projective_space,
                "smooth": rep.smooth,
            },
            "bound": _jsonable(rep.weighted_bound),
            "witness": _jsonable(rep.witness),
        }
    return {
        "id": rec_id,
        "check": rep.check,
        "status": rep.status,
        "values": {name: _jsonable(v) for name, v in rep.values},
        "bound": _jsonable(rep.bound),
        "witness": _jsonable(rep.witness),
        **({"detail": rep.detail} if rep.detail else {}),
    }


Reportish = CheckReport | ToricFanoReport


def emit_report(reports: Sequence[Reportish | tuple[str, Reportish]]) -> str:
    """Newline-delimited JSON, one object per report, re-sorted by id.

    Accepts bare reports (ids are assigned by position) or (id, report)
    pairs; rationals are emitted exactly as "p/q".
    """
    pairs = []
    for i, item in enumerate(reports):
        if isinstance(item, tuple):
            pairs.append(item)
        else:
            pairs.append((f"rec-{i + 1:04d}", item))
    pairs.sort(key=lambda p: p[0])
    lines = [json.dumps(_report_object(rid, rep), separators=(",", ":"))
             for rid, rep in pairs]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# generation: lattice polygons with a unique interior lattice point
# ---------------------------------------------------------------------------


_D4 = ((1, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 0, -1), (0, 1, -1, 0),
       (1, 0, 0, -1), (-1, 0, 0, 1), (0, 1, 1, 0), (0, -1, -1, 0))


def _hull2d(points) -> tuple[tuple[int, int], ...]:
    pts = sorted(set(points))
    if len(pts) < 3:
        return tuple(pts)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                (x1, y1), (x2, y2) = out[-2], out[-1]
                if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(list(reversed(pts)))
    return tuple(lower[:-1] + upper[:-1])


def _polygon_valid(h: tuple[tuple[int, int], ...]) -> bool:
    """Interior lattice points exactly {0}: Pick's count == 1 plus a strict
    origin membership test (ccw hull)."""
    if len(h) < 3:
        return False
    area2 = 0
    bpts = 0
    for i in range(len(h)):
        x1, y1 = h[i]
        x2, y2 = h[(i + 1) % len(h)]
        area2 += x1 * y2 - x2 * y1
        bpts += math.gcd(abs(x2 - x1), abs(y2 - y1))
        if (x2 - x1) * (-y1) - (y2 - y1) * (-x1) <= 0:
            return False
    return (area2 - bpts + 2) // 2 == 1


def _d4_key(h) -> tuple:
    return min(
        tuple(sorted((a * x + b * y, c * x + d * y) for x, y in h))
        for a, b, c, d in _D4
    )


def enumerate_fano_2d(bound: int) -> list[VPolytope]:
    """All lattice polygons with vertices in [-bound, bound]^2 whose unique
    interior lattice point is the origin, deduplicated by normal form, in a
    deterministic order.

    Seeds are the minimal such polygons (triangles with the origin strictly
    inside, plus quadrilaterals whose diagonals cross at the origin); every
    larger polygon arises by repeatedly adjoining one more vertex.
    """
    if bound < 3:
        raise ValueError("bound must be at least 3")
    pts = [(x, y) for x in range(-bound, bound + 1)
           for y in range(-bound, bound + 1) if (x, y) != (0, 0)]

    seeds = []
    for tri in combinations(pts, 3):
        h = _hull2d(tri)
        if len(h) == 3 and _polygon_valid(h):
            seeds.append(h)
    anti = [
        (p, q) for p, q in combinations(pts, 2)
        if p[0] * q[1] - p[1] * q[0] == 0 and (p[0] * q[0] < 0 or p[1] * q[1] < 0)
    ]
    for (p1, q1), (p2, q2) in combinations(anti, 2):
        if p1[0] * p2[1] - p1[1] * p2[0] == 0:
            continue
        h = _hull2d([p1, q1, p2, q2])
        if len(h) == 4 and _polygon_valid(h):
            seeds.append(h)

    seen: dict[tuple, tuple] = {}
    frontier = []
    for s in seeds:
        key = _d4_key(s)
        if key not in seen:
            seen[key] = s
            frontier.append(s)
    states = list(frontier)
    while frontier:
        nxt = []
        for h in frontier:
            have = set(h)
            for p in pts:
                if p in have:
                    continue
                h2 = _hull2d(list(h) + [p])
                if p not in h2 or not _polygon_valid(h2):
                    continue
                key = _d4_key(h2)
                if key not in seen:
                    seen[key] = h2
                    nxt.append(h2)
                    states.append(h2)
        frontier = nxt

    states.sort(key=lambda h: (len(h), sorted(h)))
    out: list[VPolytope] = []
    classes: set[NormalForm] = set()
    for h in states:
        poly = VPolytope(2, tuple((Fraction(x), Fraction(y)) for x, y in h))
        nf = normal_form(poly)
        if nf not in classes:
            classes.add(nf)
            out.append(poly)
    return out


# ---------------------------------------------------------------------------
# scan driver
# ---------------------------------------------------------------------------

SCAN_CHECKS = ("ehrhart", "milman-pajor", "minkowski", "grunbaum",
               "root-symmetry", "toric")


@dataclass
class ScanSummary:
    """Aggregate over a corpus: per-check status counts, extremal entries,
    and the (hopefully empty) violation list."""

    total: int = 0
    counts: dict = field(default_factory=dict)
    max_volume: tuple[str, Fraction] | None = None
    max_degree: tuple[str, Fraction] | None = None
    min_r: tuple[str, Fraction] | None = None
    violations: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def record_status(self, check: str, status: str):
        self.counts.setdefault(check, {})
        self.counts[check][status] = self.counts[check].get(status, 0) + 1

    @property
    def exit_code(self) -> int:
        return 1 if (self.violations or self.errors) else 0

    def lines(self) -> list[str]:
        out = [f"records: {self.total}"]
        for check in sorted(self.counts):
            parts = ", ".join(f"{s}: {c}" for s, c in sorted(self.counts[check].items()))
            out.append(f"{check}: {parts}")
        if self.max_volume:
            out.append(f"max volume: {self.max_volume[1]} ({self.max_volume[0]})")
        if self.max_degree:
            out.append(f"max degree: {self.max_degree[1]} ({self.max_degree[0]})")
        if self.min_r:
            out.append(f"min R: {self.min_r[1]} ({self.min_r[0]})")
        out.append(f"violations: {len(self.violations)}")
        if self.errors:
            out.append(f"errors: {len(self.errors)}")
        return out


def _grunbaum_scan_check(k: VPolytope, rng: random.Random, cuts: int) -> CheckReport:
    """Aggregate verdict over seeded halfspaces through the barycenter."""
    b = barycenter(k)
    statuses = []
    witness = None
    worst = None
    for _ in range(cuts):
        h = random_halfspace_through(rng, b)
        rep = grunbaum_check(k, h)
        statuses.append(rep.status)
        if rep.status == VIOLATION:
            return CheckReport("grunbaum", VIOLATION, rep.values, rep.bound, h)
        if rep.status == EQUALITY and witness is None:
            witness = h
        margin = rep.value("cut_volume") - rep.bound if rep.bound is not None else None
        if margin is not None and (worst is None or margin < worst):
            worst = margin
    status = EQUALITY if EQUALITY in statuses else STRICT
    return CheckReport(
        "grunbaum", status,
        (("cuts", Fraction(cuts)), ("min_margin", worst if worst is not None else Fraction(0))),
        witness=witness,
    )


def _toric_scan_check(k: VPolytope):
    try:
        return toric_report(k)
    except NotFano as exc:
        return CheckReport("toric-report", NOT_APPLICABLE, detail=str(exc))


def scan(records: Sequence[PolytopeRecord], checks: Sequence[str],
         seed: int | None = None, grunbaum_cuts: int = 3,
         ) -> tuple[ScanSummary, list[tuple[str, Reportish]]]:
    """Run the selected checks on every record; per-record failures land in
    the summary instead of aborting the scan."""
    for c in checks:
        if c not in SCAN_CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {SCAN_CHECKS}")
    if seed is None:
        seed = seed_from_env()
    summary = ScanSummary(total=len(records))
    results: list[tuple[str, Reportish]] = []
    for rec in records:
        # string seeding is deterministic across processes (unlike hash())
        rng = random.Random(f"{seed}:{rec.id}")
        try:
            k = rec.to_polytope()
            vol = volume(k)
        except KernelError as exc:
            summary.errors.append((rec.id, str(exc)))
            continue
        if summary.max_volume is None or vol > summary.max_volume[1]:
            summary.max_volume = (rec.id, vol)
        for check in checks:
            try:
                if check == "ehrhart":
                    rep = ehrhart_check(k)
                    if rep.status not in (NOT_APPLICABLE,):
                        r = rep.value("r_invariant")
                        if summary.min_r is None or r < summary.min_r[1]:
                            summary.min_r = (rec.id, r)
                elif check == "milman-pajor":
                    rep = milman_pajor_check(k)
                elif check == "minkowski":
                    rep = minkowski_combined_check(k)
                elif check == "grunbaum":
                    rep = _grunbaum_scan_check(k, rng, grunbaum_cuts)
                elif check == "root-symmetry":
                    rep = root_symmetry_check(k)
                else:
                    rep = _toric_scan_check(k)
                    if isinstance(rep, ToricFanoReport):
                        if summary.max_degree is None or rep.degree > summary.max_degree[1]:
                            summary.max_degree = (rec.id, rep.degree)
                        if summary.min_r is None or rep.r_value < summary.min_r[1]:
                            summary.min_r = (rec.id, rep.r_value)
            except KernelError as exc:
                summary.errors.append((rec.id, f"{check}: {exc}"))
                continue
            status = rep.status if isinstance(rep, CheckReport) else rep.weighted_status
            summary.record_status(
                rep.check if isinstance(rep, CheckReport) else "toric-report", status)
            if status == VIOLATION:
                summary.violations.append((rec.id, check))
            results.append((rec.id, rep))
    return summary, results
