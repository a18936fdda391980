"""Exhaustive scan of conjugated zonotopes ``[I | A ; 0 | 1]`` over 0/1 blocks ``A``.

Matrix index encoding: row-major bits, bit ``r*m + c`` is ``A[r][c]`` where
``m = d - 1``; bit 0 is entry (0, 0).
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Iterable, Sequence

from .belts import belt_diameter, belt_distance
from .conjugate import assemble, is_conjugated, pair_facets
from .errors import BoundViolation
from .venkov import is_parallelohedron
from .zonotope import GeneratorSet

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1
REPORT_VERSION = 1


def bound_log2(d: int) -> int:
    """``ceil(log2 d)`` for ``d >= 1``."""
    k = 0
    while (1 << k) < d:
        k += 1
    return k


def bound_45(d: int) -> int:
    """``ceil(log2(4d/5))`` clamped at 0, in integer arithmetic."""
    k = 0
    while 5 * (1 << k) < 4 * d:
        k += 1
    return k


@dataclass(frozen=True)
class BoundCheck:
    d: int
    diameter: int
    bound: int
    log2_bound: int

    @property
    def passed(self) -> bool:
        return self.diameter <= self.bound and self.diameter <= self.log2_bound

    @property
    def attained(self) -> bool:
        return self.diameter == self.bound

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = " (bound attained)" if self.attained else ""
        return (
            f"bound check: diameter {self.diameter} <= ceil(log2(4d/5)) = {self.bound}, "
            f"ceil(log2 d) = {self.log2_bound}: {status}{extra}"
        )


def bound_check(V: GeneratorSet) -> BoundCheck:
    """Compare the belt diameter of a space-filling zonotope with both bounds."""
    return BoundCheck(V.dim, belt_diameter(V), bound_45(V.dim), bound_log2(V.dim))


def decode(index: int, m: int) -> list[list[int]]:
    return [[(index >> (r * m + c)) & 1 for c in range(m)] for r in range(m)]


def encode(A: Sequence[Sequence[int]]) -> int:
    m = len(A)
    return sum(int(A[r][c]) << (r * m + c) for r in range(m) for c in range(m))


def parse_bits(bits: str, m: int) -> list[list[int]]:
    """Row-major 0/1 string (first char is entry (0, 0)); separators
    ``, ; / |`` and whitespace are ignored."""
    clean = [ch for ch in bits if ch not in " ,;/|\n\t"]
    if len(clean) != m * m or any(ch not in "01" for ch in clean):
        raise ValueError(f"expected {m * m} bits of 0/1, got {bits!r}")
    return [[int(clean[r * m + c]) for c in range(m)] for r in range(m)]


def rows_ok(index: int, m: int) -> bool:
    """Every row of A has at least ceil(m/2) zeros."""
    limit = m // 2
    mask = (1 << m) - 1
    for r in range(m):
        if bin((index >> (r * m)) & mask).count("1") > limit:
            return False
    return True


class OrbitCanon:
    """Smallest index in the orbit of ``A`` under row and column permutations."""

    def __init__(self, m: int):
        self.m = m
        size = 1 << m
        self.tables = []
        for perm in permutations(range(m)):
            table = []
            for v in range(size):
                w = 0
                for c in range(m):
                    if v >> c & 1:
                        w |= 1 << perm[c]
                table.append(w)
            self.tables.append(table)

    def canonical(self, index: int) -> int:
        m = self.m
        mask = (1 << m) - 1
        rows = [(index >> (r * m)) & mask for r in range(m)]
        best = None
        for table in self.tables:
            # rows sorted descending put the smallest row in the most significant slot
            prow = sorted((table[v] for v in rows), reverse=True)
            code = 0
            for r, v in enumerate(prow):
                code |= v << (r * m)
            if best is None or code < best:
                best = code
        return best

    def is_representative(self, index: int) -> bool:
        return self.canonical(index) == index


@dataclass(frozen=True)
class Outcome:
    index: int
    conjugated: bool
    parallelohedron: bool = False
    pair_distance: int | None = None
    diameter: int | None = None


def evaluate(d: int, index: int) -> Outcome:
    """Assemble, test conjugacy and tiling, then measure distances."""
    m = d - 1
    A = decode(index, m)
    E = [tuple(int(r == i) for r in range(d)) for i in range(m)]
    F = [tuple(A[r][j] for r in range(m)) + (1,) for j in range(m)]
    if not is_conjugated(E, F):
        return Outcome(index, False)
    V = assemble(A)
    if not is_parallelohedron(V):
        return Outcome(index, True, False)
    P, Q = pair_facets(V, m)
    return Outcome(index, True, True, belt_distance(V, P, Q), belt_diameter(V))


@dataclass
class SearchReport:
    d: int
    total_matrices: int = 0
    scanned: int = 0
    skipped_row_filter: int = 0
    skipped_symmetry: int = 0
    conjugated_count: int = 0
    parallelohedra_count: int = 0
    max_pair_distance: int = -1
    max_diameter: int = -1
    argmax_pair: list[int] = field(default_factory=list)
    argmax_diameter: list[int] = field(default_factory=list)
    argmax_pair_count: int = 0
    argmax_diameter_count: int = 0
    pair_distance_histogram: dict[int, int] = field(default_factory=dict)
    diameter_histogram: dict[int, int] = field(default_factory=dict)
    next_index: int = 0
    complete: bool = False
    elapsed: float = 0.0
    argmax_limit: int = 32

    def comparable(self) -> dict:
        """Everything except wall time."""
        out = asdict(self)
        out.pop("elapsed")
        return out

    def add(self, o: Outcome) -> None:
        self.scanned += 1
        if not o.conjugated:
            return
        self.conjugated_count += 1
        if not o.parallelohedron:
            return
        self.parallelohedra_count += 1
        h = self.pair_distance_histogram
        h[o.pair_distance] = h.get(o.pair_distance, 0) + 1
        h = self.diameter_histogram
        h[o.diameter] = h.get(o.diameter, 0) + 1
        self._record("pair", o.pair_distance, o.index)
        self._record("diameter", o.diameter, o.index)

    _BEST = {"pair": "max_pair_distance", "diameter": "max_diameter"}

    def _record(self, which: str, value: int, index: int) -> None:
        best_attr, arg_attr, count_attr = self._BEST[which], f"argmax_{which}", f"argmax_{which}_count"
        best = getattr(self, best_attr)
        if value > best:
            setattr(self, best_attr, value)
            setattr(self, arg_attr, [index])
            setattr(self, count_attr, 1)
        elif value == best:
            setattr(self, count_attr, getattr(self, count_attr) + 1)
            arg = getattr(self, arg_attr)
            if len(arg) < self.argmax_limit:
                arg.append(index)

    def merge(self, later: "SearchReport") -> None:
        """Fold in a report covering a later index range."""
        for name in ("scanned", "skipped_row_filter", "skipped_symmetry",
                     "conjugated_count", "parallelohedra_count"):
            setattr(self, name, getattr(self, name) + getattr(later, name))
        for hist in ("pair_distance_histogram", "diameter_histogram"):
            mine = getattr(self, hist)
            for k, v in getattr(later, hist).items():
                mine[k] = mine.get(k, 0) + v
        for which, best_attr in self._BEST.items():
            a, b = getattr(self, best_attr), getattr(later, best_attr)
            arg_a, arg_b = getattr(self, f"argmax_{which}"), getattr(later, f"argmax_{which}")
            cnt = f"argmax_{which}_count"
            if b > a:
                setattr(self, best_attr, b)
                setattr(self, f"argmax_{which}", list(arg_b))
                setattr(self, cnt, getattr(later, cnt))
            elif b == a and b >= 0:
                merged = sorted(arg_a + arg_b)[: self.argmax_limit]
                setattr(self, f"argmax_{which}", merged)
                setattr(self, cnt, getattr(self, cnt) + getattr(later, cnt))
        self.elapsed += later.elapsed

    def to_json(self) -> dict:
        m = self.d - 1
        return {
            "version": REPORT_VERSION,
            "d": self.d,
            "totalMatrices": self.total_matrices,
            "scanned": self.scanned,
            "skippedRowFilter": self.skipped_row_filter,
            "skippedSymmetry": self.skipped_symmetry,
            "conjugatedCount": self.conjugated_count,
            "parallelohedraCount": self.parallelohedra_count,
            "maxPairDistance": self.max_pair_distance,
            "maxDiameter": self.max_diameter,
            "argmax": {
                "pairDistance": [{"index": i, "A": decode(i, m)} for i in self.argmax_pair],
                "pairDistanceCount": self.argmax_pair_count,
                "diameter": [{"index": i, "A": decode(i, m)} for i in self.argmax_diameter],
                "diameterCount": self.argmax_diameter_count,
            },
            "pairDistanceHistogram": {str(k): v for k, v in sorted(self.pair_distance_histogram.items())},
            "diameterHistogram": {str(k): v for k, v in sorted(self.diameter_histogram.items())},
            "nextIndex": self.next_index,
            "complete": self.complete,
            "elapsed": round(self.elapsed, 3),
            "bounds": {"log2_4d_over_5": bound_45(self.d), "log2_d": bound_log2(self.d)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SearchReport":
        rep = cls(data["d"])
        rep.total_matrices = data["totalMatrices"]
        rep.scanned = data["scanned"]
        rep.skipped_row_filter = data["skippedRowFilter"]
        rep.skipped_symmetry = data["skippedSymmetry"]
        rep.conjugated_count = data["conjugatedCount"]
        rep.parallelohedra_count = data["parallelohedraCount"]
        rep.max_pair_distance = data["maxPairDistance"]
        rep.max_diameter = data["maxDiameter"]
        rep.argmax_pair = [a["index"] for a in data["argmax"]["pairDistance"]]
        rep.argmax_pair_count = data["argmax"]["pairDistanceCount"]
        rep.argmax_diameter = [a["index"] for a in data["argmax"]["diameter"]]
        rep.argmax_diameter_count = data["argmax"]["diameterCount"]
        rep.pair_distance_histogram = {int(k): v for k, v in data["pairDistanceHistogram"].items()}
        rep.diameter_histogram = {int(k): v for k, v in data["diameterHistogram"].items()}
        rep.next_index = data["nextIndex"]
        rep.complete = data["complete"]
        rep.elapsed = data["elapsed"]
        return rep


@dataclass
class SearchOptions:
    row_filter: bool = False
    symmetry_reduction: bool = False
    checkpoint_path: str | os.PathLike | None = None
    workers: int = 1
    chunk_size: int = 4096
    stop_after: int | None = None  # process at most this many indices, then checkpoint and return
    argmax_limit: int = 32
    reproducer_path: str | os.PathLike | None = None


def _check_bounds(d: int, o: Outcome, reproducer_path) -> None:
    if not o.parallelohedron:
        return
    limit = min(bound_45(d), bound_log2(d))
    if o.diameter > limit or o.pair_distance > limit:
        A = decode(o.index, d - 1)
        if reproducer_path is not None:
            _atomic_write(reproducer_path, {"d": d, "index": o.index, "A": A,
                                            "pairDistance": o.pair_distance, "diameter": o.diameter})
        raise BoundViolation(
            f"d={d} index={o.index}: diameter {o.diameter}, pair distance {o.pair_distance} "
            f"exceed bound {limit}; A={A}", A,
        )


def scan_range(d: int, start: int, stop: int, row_filter: bool = False,
               symmetry_reduction: bool = False, argmax_limit: int = 32,
               reproducer_path=None) -> SearchReport:
    """Scan ``[start, stop)``; pure, so ranges can run in any process."""
    m = d - 1
    rep = SearchReport(d, argmax_limit=argmax_limit)
    canon = OrbitCanon(m) if symmetry_reduction else None
    t0 = time.perf_counter()
    for index in range(start, stop):
        if row_filter and not rows_ok(index, m):
            rep.skipped_row_filter += 1
            continue
        if canon is not None and not canon.is_representative(index):
            rep.skipped_symmetry += 1
            continue
        o = evaluate(d, index)
        _check_bounds(d, o, reproducer_path)
        rep.add(o)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _scan_job(args) -> SearchReport:
    return scan_range(*args)


def _atomic_write(path, payload: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
    os.replace(tmp, path)


def _options_key(opts: SearchOptions) -> dict:
    return {"rowFilter": opts.row_filter, "symmetryReduction": opts.symmetry_reduction}


def write_checkpoint(path, d: int, opts: SearchOptions, report: SearchReport) -> None:
    _atomic_write(path, {
        "version": CHECKPOINT_VERSION,
        "d": d,
        "nextIndex": report.next_index,
        "options": _options_key(opts),
        "report": report.to_json(),
    })


def load_checkpoint(path, d: int, opts: SearchOptions) -> SearchReport | None:
    path = Path(path)
    if not path.exists():
        return None
    data = json.loads(path.read_text())
    if data.get("version") != CHECKPOINT_VERSION or data.get("d") != d:
        raise ValueError(f"checkpoint {path} belongs to a different search (d={data.get('d')})")
    if data.get("options") != _options_key(opts):
        raise ValueError(f"checkpoint {path} was written with options {data.get('options')}")
    rep = SearchReport.from_json(data["report"])
    rep.next_index = data["nextIndex"]
    rep.argmax_limit = opts.argmax_limit
    return rep


def search_xi(d: int, options: SearchOptions | None = None) -> SearchReport:
    """Scan every 0/1 block ``A`` of size ``(d-1) x (d-1)``.

    Resumes from ``options.checkpoint_path`` if it exists.  With
    ``stop_after`` the call returns early with ``complete=False``.
    """
    opts = options or SearchOptions()
    if not 3 <= d <= 7:
        raise ValueError("search supports 3 <= d <= 7")
    m = d - 1
    total = 1 << (m * m)
    report = None
    if opts.checkpoint_path is not None:
        report = load_checkpoint(opts.checkpoint_path, d, opts)
        if report is not None:
            log.info("resuming d=%d at index %d", d, report.next_index)
    if report is None:
        report = SearchReport(d, argmax_limit=opts.argmax_limit)
    report.total_matrices = total
    if report.complete:
        return report

    budget = opts.stop_after
    workers = max(1, opts.workers)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while report.next_index < total and (budget is None or budget > 0):
            batch_end = min(total, report.next_index + opts.chunk_size * workers)
            if budget is not None:
                batch_end = min(batch_end, report.next_index + budget)
            jobs = []
            step = -(-(batch_end - report.next_index) // workers)
            for lo in range(report.next_index, batch_end, step):
                jobs.append((d, lo, min(batch_end, lo + step), opts.row_filter,
                             opts.symmetry_reduction, opts.argmax_limit, opts.reproducer_path))
            parts = list(pool.map(_scan_job, jobs)) if pool else [_scan_job(j) for j in jobs]
            for part in parts:
                report.merge(part)
            if budget is not None:
                budget -= batch_end - report.next_index
            report.next_index = batch_end
            report.complete = report.next_index >= total
            if opts.checkpoint_path is not None:
                write_checkpoint(opts.checkpoint_path, d, opts, report)
            log.debug("d=%d scanned up to %d/%d", d, report.next_index, total)
    finally:
        if pool is not None:
            pool.shutdown()
    report.complete = report.next_index >= total
    return report


def spot_check(d: int, A: Sequence[Sequence[int]]) -> SearchReport:
    """Report for a single matrix (no enumeration)."""
    index = encode(A)
    report = SearchReport(d, total_matrices=1)
    t0 = time.perf_counter()
    o = evaluate(d, index)
    _check_bounds(d, o, None)
    report.add(o)
    report.elapsed = time.perf_counter() - t0
    report.next_index = 1
    report.complete = True
    return report


def orbit_representatives(m: int) -> Iterable[int]:
    canon = OrbitCanon(m)
    return (i for i in range(1 << (m * m)) if canon.is_representative(i))
