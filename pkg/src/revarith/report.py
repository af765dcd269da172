"""Comparison of generated circuits against the published metric tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from . import paper_data
from .designs import DesignId, build_full, build_half, ripple_metrics_paper
from .designs import ripple_metrics_as_built
from .netlist import Metrics, compute_metrics

FIELDS = ("gate_count", "garbage_inputs", "garbage_outputs", "quantum_cost")
PUBLISHED_WIDTH = 8
SHORT = {"gate_count": "gates", "garbage_inputs": "g-in",
         "garbage_outputs": "g-out", "quantum_cost": "QC"}


def improvement(old_value: float, new_value: float) -> float:
    """Relative improvement ``100 * (old - new) / new``, rounded to 2 places."""
    if new_value <= 0:
        raise ValueError("new_value must be positive")
    raw = Decimal(100) * (Decimal(str(old_value)) - Decimal(str(new_value))) \
        / Decimal(str(new_value))
    return float(raw.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class MetricRow:
    scope: str
    design: int
    computed: Metrics
    paper: Metrics
    as_built: Metrics | None = None

    @property
    def deltas(self) -> tuple[int, ...]:
        return tuple(c - p for c, p in
                     zip(self.computed.as_tuple(), self.paper.as_tuple()))

    @property
    def ok(self) -> bool:
        return not any(self.deltas)


@dataclass(frozen=True)
class ImprovementRow:
    scope: str
    metric: str
    old_design: int
    new_design: int
    old_value: int
    new_value: int
    computed: float
    stated: float

    @property
    def gap(self) -> float:
        return round(self.computed - self.stated, 2)

    @property
    def ok(self) -> bool:
        return abs(self.computed - self.stated) <= paper_data.PERCENT_TOLERANCE


@dataclass(frozen=True)
class ComparisonReport:
    metrics: list[MetricRow] = field(default_factory=list)
    improvements: list[ImprovementRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.metrics) and \
            all(r.ok for r in self.improvements)

    def format(self, tsv: bool = False) -> str:
        return _format_tsv(self) if tsv else _format_text(self)


def paper_compare() -> ComparisonReport:
    width = PUBLISHED_WIDTH
    rows = []
    for d in DesignId:
        unit = compute_metrics(build_half(d))
        rows.append(MetricRow("half", d.value, unit,
                              Metrics(*paper_data.HALF_UNIT[d.value]), unit))
    for d in DesignId:
        unit = compute_metrics(build_full(d))
        rows.append(MetricRow("full", d.value, unit,
                              Metrics(*paper_data.FULL_UNIT[d.value]), unit))
    for d in DesignId:
        rows.append(MetricRow(
            f"{width}-bit", d.value, ripple_metrics_paper(d, width),
            Metrics(*paper_data.EIGHT_BIT[d.value]),
            ripple_metrics_as_built(d, width)))

    by_key = {(r.scope, r.design): r.computed for r in rows}
    imps = []
    for scope, metric, old, new, stated in paper_data.IMPROVEMENTS:
        key = "full" if scope == "unit" else f"{width}-bit"
        ov = getattr(by_key[(key, old)], metric)
        nv = getattr(by_key[(key, new)], metric)
        imps.append(ImprovementRow(scope, metric, old, new, ov, nv,
                                   improvement(ov, nv), stated))
    return ComparisonReport(rows, imps)


def _metric_cells(m: Metrics | None) -> list[str]:
    if m is None:
        return ["-"] * 4
    return [str(v) for v in m.as_tuple()]


def _format_text(rep: ComparisonReport) -> str:
    out = ["Metrics (gates, garbage inputs, garbage outputs, quantum cost)", ""]
    head = f"{'scope':<7} {'design':<6} {'computed':<18} {'published':<18} " \
           f"{'delta':<14} {'as-built':<18} status"
    out.append(head)
    for r in rep.metrics:
        comp = "/".join(_metric_cells(r.computed))
        pub = "/".join(_metric_cells(r.paper))
        delta = "/".join(str(x) for x in r.deltas)
        built = "/".join(_metric_cells(r.as_built))
        out.append(f"{r.scope:<7} {'D' + str(r.design):<6} {comp:<18} "
                   f"{pub:<18} {delta:<14} {built:<18} "
                   f"{'ok' if r.ok else 'MISMATCH'}")
    out += ["", "Improvements (percent, 100*(old-new)/new)", ""]
    out.append(f"{'scope':<7} {'metric':<6} {'from->to':<9} {'values':<10} "
               f"{'computed':>9} {'stated':>9} {'gap':>7} status")
    for r in rep.improvements:
        vals = f"{r.old_value}->{r.new_value}"
        out.append(f"{r.scope:<7} {SHORT[r.metric]:<6} "
                   f"{'D%d->D%d' % (r.old_design, r.new_design):<9} "
                   f"{vals:<10} {r.computed:>9.2f} {r.stated:>9.2f} "
                   f"{r.gap:>7.2f} {'ok' if r.ok else 'MISMATCH'}")
    out += ["", "result: " + ("all values reproduced" if rep.ok
                              else "MISMATCH")]
    return "\n".join(out) + "\n"


def _format_tsv(rep: ComparisonReport) -> str:
    out = ["\t".join(["kind", "scope", "design", "field", "computed",
                      "published", "delta", "as_built", "status"])]
    for r in rep.metrics:
        for name, c, p, dlt, b in zip(FIELDS, r.computed.as_tuple(),
                                      r.paper.as_tuple(), r.deltas,
                                      _metric_cells(r.as_built)):
            out.append("\t".join(["metric", r.scope, str(r.design), name,
                                  str(c), str(p), str(dlt), b,
                                  "ok" if dlt == 0 else "mismatch"]))
    for r in rep.improvements:
        out.append("\t".join([
            "improvement", r.scope, f"{r.old_design}->{r.new_design}",
            r.metric, f"{r.computed:.2f}", f"{r.stated:.2f}",
            f"{r.gap:.2f}", "-", "ok" if r.ok else "mismatch"]))
    return "\n".join(out) + "\n"
