"""Precision/recall scoring of predictions against annotated ground truth.

Counts are exact; precision and recall are ``Fraction`` values, reported
as "N/A" whenever the denominator is zero.  Overall scores micro-average:
counts are summed across labels before dividing.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Set
from dataclasses import dataclass
from fractions import Fraction

from .model import Diagnostic, GroundTruthEntry, RIMAY_PATTERN_IDS, SmellKind


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


@dataclass(frozen=True)
class LabelMetrics:
    counts: ConfusionCounts
    precision: Fraction | None
    recall: Fraction | None


@dataclass(frozen=True)
class MetricsReport:
    per_label: dict[str, LabelMetrics]
    overall_precision: Fraction | None
    overall_recall: Fraction | None


def confusion(
    gold: Mapping[str, Set[str]],
    pred: Mapping[str, Set[str]],
    labels: Iterable[str],
) -> dict[str, ConfusionCounts]:
    """Per-label TP/FP/FN over requirements keyed by id.

    A requirement missing from ``pred`` counts as an empty prediction, so
    partial runs can still be scored; a prediction for an unknown id is an
    error.
    """
    labels = list(labels)
    unknown = set(pred) - set(gold)
    if unknown:
        raise EvaluationError(f"predictions for ids not in gold: {sorted(unknown)}")
    counts = {label: ConfusionCounts() for label in labels}
    for req_id, gold_labels in gold.items():
        pred_labels = pred.get(req_id, frozenset())
        for label in labels:
            in_gold = label in gold_labels
            in_pred = label in pred_labels
            if in_gold and in_pred:
                counts[label] += ConfusionCounts(tp=1)
            elif in_gold:
                counts[label] += ConfusionCounts(fn=1)
            elif in_pred:
                counts[label] += ConfusionCounts(fp=1)
    return counts


def precision_recall(c: ConfusionCounts) -> tuple[Fraction | None, Fraction | None]:
    precision = Fraction(c.tp, c.tp + c.fp) if c.tp + c.fp else None
    recall = Fraction(c.tp, c.tp + c.fn) if c.tp + c.fn else None
    return precision, recall


def overall(per_label: Mapping[str, ConfusionCounts]) -> tuple[Fraction | None, Fraction | None]:
    total = sum(per_label.values(), ConfusionCounts())
    if total.tp + total.fp == 0 and total.tp + total.fn == 0:
        raise EvaluationError("overall scores undefined: no predictions and no annotations")
    return precision_recall(total)


def build_report(per_label: Mapping[str, ConfusionCounts]) -> MetricsReport:
    metrics = {}
    for label, counts in per_label.items():
        precision, recall = precision_recall(counts)
        metrics[label] = LabelMetrics(counts, precision, recall)
    overall_p, overall_r = overall(per_label)
    return MetricsReport(metrics, overall_p, overall_r)


# ---------------------------------------------------------------------------
# Adapters from domain objects

def gold_smell_sets(entries: list[GroundTruthEntry]) -> dict[str, frozenset[str]]:
    return {e.id: frozenset(s.value for s in e.smells) for e in entries}


def pred_smell_sets(diags: list[Diagnostic]) -> dict[str, frozenset[str]]:
    return {d.id: frozenset(k.value for k in d.smell_kinds()) for d in diags}


def gold_pattern_sets(entries: list[GroundTruthEntry]) -> dict[str, frozenset[str]]:
    return {e.id: frozenset([e.pattern] if e.pattern else []) for e in entries}


def pred_pattern_sets(diags: list[Diagnostic]) -> dict[str, frozenset[str]]:
    out = {}
    for d in diags:
        rec = d.recommendation
        pattern = rec.pattern if rec is not None else None
        out[d.id] = frozenset([pattern] if pattern else [])
    return out


def evaluate_smells(gold: list[GroundTruthEntry], pred: list[Diagnostic]) -> MetricsReport:
    labels = [kind.value for kind in SmellKind]
    return build_report(confusion(gold_smell_sets(gold), pred_smell_sets(pred), labels))


def evaluate_patterns(gold: list[GroundTruthEntry], pred: list[Diagnostic]) -> MetricsReport:
    return build_report(
        confusion(gold_pattern_sets(gold), pred_pattern_sets(pred), RIMAY_PATTERN_IDS)
    )


# ---------------------------------------------------------------------------
# Rendering

def _fmt(value: Fraction | None) -> str:
    return "N/A" if value is None else f"{float(value):.2f}"


def render_text(report: MetricsReport, title: str, display_names: Mapping[str, str] | None = None) -> str:
    display_names = display_names or {}
    rows = [(display_names.get(label, label), m) for label, m in report.per_label.items()]
    width = max([len(name) for name, _ in rows] + [len("Overall"), len(title)])
    lines = [title, "-" * (width + 30)]
    header = f"{'':{width}}  {'TP':>4} {'FP':>4} {'FN':>4}  {'P':>5} {'R':>5}"
    lines.append(header)
    for name, metric in rows:
        c = metric.counts
        lines.append(
            f"{name:{width}}  {c.tp:>4} {c.fp:>4} {c.fn:>4}  "
            f"{_fmt(metric.precision):>5} {_fmt(metric.recall):>5}"
        )
    lines.append("-" * (width + 30))
    lines.append(
        f"{'Overall':{width}}  {'':>4} {'':>4} {'':>4}  "
        f"{_fmt(report.overall_precision):>5} {_fmt(report.overall_recall):>5}"
    )
    return "\n".join(lines)


def report_to_dict(report: MetricsReport) -> dict:
    def num(value: Fraction | None):
        return None if value is None else float(value)

    return {
        "per_label": {
            label: {
                "tp": m.counts.tp,
                "fp": m.counts.fp,
                "fn": m.counts.fn,
                "precision": num(m.precision),
                "recall": num(m.recall),
            }
            for label, m in report.per_label.items()
        },
        "overall": {
            "precision": num(report.overall_precision),
            "recall": num(report.overall_recall),
        },
    }
