"""Confusion matrices, per-class precision/recall/F1, and table rendering."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .corpus import BODY_SYSTEMS
from .errors import InputError


@dataclass(frozen=True)
class ConfusionMatrix:
    counts: np.ndarray  # rows = true class, columns = predicted
    class_order: tuple[str, ...]

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    per_class: dict[str, dict[str, float]]
    macro_f1: float
    confusion: ConfusionMatrix

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "macro_f1": self.macro_f1,
            "per_class": {name: dict(values) for name, values in self.per_class.items()},
            "class_order": list(self.confusion.class_order),
            "confusion": self.confusion.counts.tolist(),
        }


def confusion_matrix(
    true_labels, predicted_labels, class_order: tuple[str, ...] = BODY_SYSTEMS
) -> ConfusionMatrix:
    true_labels = list(true_labels)
    predicted_labels = list(predicted_labels)
    if len(true_labels) != len(predicted_labels):
        raise InputError(
            f"{len(true_labels)} true labels but {len(predicted_labels)} predictions"
        )
    if not true_labels:
        raise InputError("cannot build a confusion matrix from empty label lists")
    position = {name: i for i, name in enumerate(class_order)}
    counts = np.zeros((len(class_order), len(class_order)), dtype=np.int64)
    for truth, predicted in zip(true_labels, predicted_labels):
        if truth not in position:
            raise InputError(f"unknown true label {truth!r}")
        if predicted not in position:
            raise InputError(f"unknown predicted label {predicted!r}")
        counts[position[truth], position[predicted]] += 1
    return ConfusionMatrix(counts=counts, class_order=tuple(class_order))


def compute_metrics(confusion: ConfusionMatrix) -> EvalReport:
    """Per-class precision/recall/F1 (0/0 defined as 0), accuracy, and the
    unweighted mean F1."""
    counts = confusion.counts
    total = confusion.total
    if total == 0:
        raise InputError("confusion matrix is empty")
    per_class = {}
    f1_values = []
    for index, name in enumerate(confusion.class_order):
        tp = int(counts[index, index])
        fp = int(counts[:, index].sum()) - tp
        fn = int(counts[index, :].sum()) - tp
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class[name] = {"precision": precision, "recall": recall, "f1": f1}
        f1_values.append(f1)
    return EvalReport(
        accuracy=float(np.trace(counts)) / total,
        per_class=per_class,
        macro_f1=sum(f1_values) / len(f1_values),
        confusion=confusion,
    )


def _round2(value: float) -> str:
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def render_table(report: EvalReport) -> str:
    """Aligned plain-text table: one row per class, columns Precision /
    Recall / F1-score, values rounded half-up to two decimals."""
    header = ("", "Precision", "Recall", "F1-score")
    rows = [header]
    for name in report.confusion.class_order:
        values = report.per_class[name]
        rows.append(
            (name, _round2(values["precision"]), _round2(values["recall"]), _round2(values["f1"]))
        )
    widths = [max(len(row[col]) for row in rows) for col in range(4)]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [
            row[col].rjust(widths[col]) for col in range(1, 4)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)
