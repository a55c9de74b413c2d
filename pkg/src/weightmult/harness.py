"""Cross-method verification, diagram serialization and benchmarks."""
from __future__ import annotations

import csv
import io
import json
import logging
import statistics
import threading
import time
from dataclasses import asdict, dataclass, field
from itertools import product

from .diagram import WeightDiagram
from .errors import MethodUnavailable, ValidationError
from .freudenthal import freudenthal_diagram
from .kostant import kostant_diagram
from .polytope import diagram_from_polytope
from .rootsys import AlgebraType, RootSystem, Weight, build_root_system, weyl_dimension
from .weyl import generate_weyl_group, offset_to_dynkin

log = logging.getLogger(__name__)

METHODS = ("kostant", "freudenthal", "polytope")
FORMATS = ("compat-text", "structured", "tabular")


def compute_diagram(rs: RootSystem, lam: Weight, method: str, wg=None) -> WeightDiagram:
    if method == "freudenthal":
        return freudenthal_diagram(rs, lam)
    if method == "kostant":
        return kostant_diagram(rs, wg, lam)
    if method == "polytope":
        return diagram_from_polytope(rs, wg, lam)
    raise ValidationError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


@dataclass
class VerificationReport:
    algebra: str
    highest: tuple[int, ...]
    expected_dimension: int
    dimensions: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)
    divergences: list[dict] = field(default_factory=list)

    @property
    def compared(self) -> list[str]:
        return list(self.dimensions)

    @property
    def ok(self) -> bool:
        return not self.divergences and all(
            d == self.expected_dimension for d in self.dimensions.values())

    def summary(self) -> str:
        lines = [f"{self.algebra} {self.highest}: weyl_dimension={self.expected_dimension}"]
        for m, d in self.dimensions.items():
            flag = "" if d == self.expected_dimension else "  <-- dimension mismatch"
            lines.append(f"  {m:<12} total={d}{flag}")
        for m, why in self.skipped.items():
            lines.append(f"  {m:<12} skipped: {why}")
        for div in self.divergences:
            lines.append("  divergence {a} vs {b} at offset {offset}: {ma} != {mb}".format(**div))
        lines.append("  OK" if self.ok else "  FAILED")
        return "\n".join(lines)


def verify_methods(rs: RootSystem, lam: Weight, methods=METHODS, wg=None,
                   cap: int | None = None) -> VerificationReport:
    """Compute the diagram by each method and compare them entry by entry.

    Methods that cannot handle the case are recorded as skipped. The first
    available method is the reference the others are compared to.
    """
    methods = list(methods)
    for m in methods:
        if m not in METHODS:
            raise ValidationError(f"unknown method {m!r}")
    report = VerificationReport(str(rs.algebra), tuple(int(x) for x in lam.coords),
                                weyl_dimension(rs, lam))
    diagrams: dict[str, WeightDiagram] = {}
    for m in methods:
        try:
            if m == "kostant" and wg is None:
                wg = generate_weyl_group(rs, cap)
            diagrams[m] = compute_diagram(rs, lam, m, wg)
        except MethodUnavailable as exc:
            report.skipped[m] = str(exc)
            continue
        report.dimensions[m] = diagrams[m].dimension
    names = list(diagrams)
    for other in names[1:]:
        diff = diagrams[names[0]].first_difference(diagrams[other])
        if diff is not None:
            offset, ma, mb = diff
            report.divergences.append(dict(a=names[0], b=other, offset=offset, ma=ma, mb=mb))
    return report


# --- serialization ----------------------------------------------------------

def _offsets(d: WeightDiagram, include_zeros: bool):
    if not include_zeros:
        return [k for k, _ in d.sorted_items()]
    box = set(product(*(range(x + 1) for x in d.delta)))
    return sorted(box | set(d.entries))


def serialize_diagram(d: WeightDiagram, fmt: str = "compat-text", include_zeros: bool = False,
                      dynkin_out: bool = False) -> bytes:
    """Render a diagram as bytes.

    compat-text
        one ``m(j1,...,jn)=M`` line per entry in lexicographic offset order
        (with ``dynkin_out`` a ``  dynkin=(..)`` suffix is appended).
    structured
        JSON with algebra, highest weight, delta, dimension and entries;
        :func:`parse_structured` inverts it.
    tabular
        CSV with columns ``j1..jn`` (optionally ``d1..dn``) and ``multiplicity``.
    """
    if fmt not in FORMATS:
        raise ValidationError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    rs = build_root_system(d.algebra) if dynkin_out else None
    lam = Weight.dynkin(d.highest)

    def labels(j):
        return tuple(int(x) if x.denominator == 1 else str(x) for x in offset_to_dynkin(rs, lam, j))

    keys = _offsets(d, include_zeros)
    if fmt == "compat-text":
        out = io.StringIO()
        for j in keys:
            line = f"m({','.join(str(x) for x in j)})={d[j]}"
            if dynkin_out:
                line += f"  dynkin=({','.join(str(x) for x in labels(j))})"
            out.write(line + "\n")
        return out.getvalue().encode()
    if fmt == "structured":
        doc = {
            "algebra": str(d.algebra),
            "highest": list(d.highest),
            "delta": list(d.delta),
            "method": d.method,
            "dimension": d.dimension,
            "entries": [[list(j), d[j]] for j in keys],
        }
        if dynkin_out:
            doc["dynkin"] = [list(labels(j)) for j in keys]
        return (json.dumps(doc, indent=1) + "\n").encode()
    n = len(d.delta)
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    header = [f"j{i + 1}" for i in range(n)]
    if dynkin_out:
        header += [f"d{i + 1}" for i in range(n)]
    w.writerow(header + ["multiplicity"])
    for j in keys:
        w.writerow(list(j) + (list(labels(j)) if dynkin_out else []) + [d[j]])
    return out.getvalue().encode()


def parse_structured(data: bytes | str) -> WeightDiagram:
    doc = json.loads(data)
    entries = {tuple(j): int(m) for j, m in doc["entries"] if m}
    return WeightDiagram(AlgebraType.parse(doc["algebra"]), tuple(doc["highest"]),
                         tuple(doc["delta"]), entries, method=doc.get("method", ""))


# --- benchmarks -------------------------------------------------------------

@dataclass
class BenchRecord:
    algebra: str
    highest: tuple[int, ...]
    method: str
    wall_ms: float | None
    dimension: int | None
    status: str

    COLUMNS = ("algebra", "highest", "method", "wall_ms", "dimension", "status")


DEFAULT_SUITE = (
    ("A2", (5, 3)), ("B2", (10, 12)),
    ("G2", (5, 5)), ("G2", (7, 7)), ("G2", (9, 9)),
    ("A4", (1, 1, 1, 1)), ("A4", (2, 2, 2, 2)),
)
SLOW_SUITE = DEFAULT_SUITE + (("F4", (1, 1, 1, 1)),)
SUITES = {"default": DEFAULT_SUITE, "slow": SLOW_SUITE}


def run_benchmark(suite=DEFAULT_SUITE, repetitions: int = 3, methods=METHODS) -> list[BenchRecord]:
    """Median wall time per (case, method). Failures are recorded, not raised."""
    if not isinstance(repetitions, int) or repetitions < 1:
        raise ValidationError("repetitions must be a positive integer")
    records = []
    for algebra, labels in suite:
        rs = build_root_system(algebra)
        lam = Weight.dynkin(labels)
        for m in methods:
            times = []
            dim = None
            status = "ok"
            try:
                wg = generate_weyl_group(rs) if m == "kostant" else None
                for _ in range(repetitions):
                    t0 = time.perf_counter()
                    d = compute_diagram(rs, lam, m, wg)
                    times.append((time.perf_counter() - t0) * 1000)
                dim = d.dimension
                if dim != weyl_dimension(rs, lam):
                    status = "dimension-mismatch"
            except MethodUnavailable as exc:
                status = f"unavailable: {exc}"
            except Exception as exc:  # noqa: BLE001 - a failing case must not stop the run
                log.exception("benchmark case %s %s %s failed", algebra, labels, m)
                status = f"error: {type(exc).__name__}: {exc}"
            wall = round(statistics.median(times), 3) if times else None
            records.append(BenchRecord(algebra, tuple(labels), m, wall, dim, status))
    return records


def format_bench_table(records: list[BenchRecord]) -> str:
    out = io.StringIO()
    out.write(f"# threads: {threading.active_count()} (single-threaded computation)\n")
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    w.writerow(BenchRecord.COLUMNS)
    for r in records:
        row = asdict(r)
        row["highest"] = ",".join(str(x) for x in r.highest)
        w.writerow(["" if row[c] is None else row[c] for c in BenchRecord.COLUMNS])
    return out.getvalue()
