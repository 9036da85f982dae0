#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Confusion matrices, classification metrics and ROC analysis."""

import math
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from sklearn.metrics import auc

from .exceptions import EvaluationError
from .manifest import CLASS_LABELS
from .utils import format_float

#: Labels counted as the positive (abnormal) class.
POSITIVE_LABELS = frozenset(("abnormal", "benign", "malign"))

#: Margin of the threshold above the largest score in a ROC sweep.
ROC_EPSILON = 1e-9

Label = Union[str, bool]


def is_positive(label: Label) -> bool:
    """Whether a label belongs to the positive (abnormal) class.

    Args:
        label: Boolean, binary label (``abnormal``/``normal``) or class label.

    Returns:
        True for abnormal labels.
    """
    if isinstance(label, bool):
        return label
    return label in POSITIVE_LABELS


@dataclass(frozen=True)
class ConfusionMatrix:
    """Outcomes of a binary classifier, abnormal being positive.

    Attributes:
        tp: Abnormal cases classified abnormal.
        fp: Normal cases classified abnormal.
        fn: Abnormal cases classified normal.
        tn: Normal cases classified normal.
    """

    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise EvaluationError("negative count in confusion matrix")

    @property
    def total(self) -> int:
        """Number of cases."""
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class Metrics:
    """Classification metrics; ``None`` marks an undefined metric."""

    precision: Optional[float]
    recall: Optional[float]
    accuracy: Optional[float]
    sensitivity: Optional[float]
    specificity: Optional[float]

    def items(self) -> List[Tuple[str, Optional[float]]]:
        """Metric names and values, in field order."""
        return list(asdict(self).items())


def _ratio(numerator: int, denominator: int) -> Optional[float]:
    return numerator / denominator if denominator else None


def metrics(matrix: ConfusionMatrix) -> Metrics:
    """Compute precision, recall, accuracy, sensitivity and specificity.

    Args:
        matrix: Binary confusion matrix.

    Returns:
        Metrics, each ``None`` when its denominator is zero.
    """
    recall = _ratio(matrix.tp, matrix.tp + matrix.fn)
    return Metrics(
        precision=_ratio(matrix.tp, matrix.tp + matrix.fp),
        recall=recall,
        accuracy=_ratio(matrix.tp + matrix.tn, matrix.total),
        sensitivity=recall,
        specificity=_ratio(matrix.tn, matrix.tn + matrix.fp),
    )


def confusion_from_predictions(
    pairs: Iterable[Tuple[Label, Label]],
) -> ConfusionMatrix:
    """Build a binary confusion matrix from predictions.

    Args:
        pairs: Sequence of ``(actual, predicted)`` labels. Benign and
            malign labels both count as abnormal.

    Returns:
        Confusion matrix.
    """
    counts = {"tp": 0, "fp": 0, "fn": 0, "tn": 0}
    for actual, predicted in pairs:
        key = (
            ("tp" if is_positive(predicted) else "fn")
            if is_positive(actual)
            else ("fp" if is_positive(predicted) else "tn")
        )
        counts[key] += 1
    if sum(counts.values()) == 0:
        raise EvaluationError("no predictions to evaluate")
    return ConfusionMatrix(**counts)


@dataclass(frozen=True, eq=False)
class ClassConfusion:
    """Counts of actual versus predicted class labels.

    Attributes:
        labels: Class labels indexing rows and columns.
        counts: Array whose entry ``[a, p]`` counts images of actual label
            ``labels[a]`` predicted as ``labels[p]``.
    """

    labels: Tuple[str, ...]
    counts: np.ndarray

    @staticmethod
    def from_predictions(
        pairs: Iterable[Tuple[str, str]],
        labels: Tuple[str, ...] = CLASS_LABELS,
    ) -> "ClassConfusion":
        """Tabulate ``(actual, predicted)`` class labels."""
        index = {label: position for position, label in enumerate(labels)}
        counts = np.zeros((len(labels), len(labels)), dtype=np.int64)
        for actual, predicted in pairs:
            counts[index[actual], index[predicted]] += 1
        return ClassConfusion(tuple(labels), counts)

    @property
    def accuracy(self) -> Optional[float]:
        """Fraction of images predicted with their actual label."""
        return _ratio(int(np.trace(self.counts)), int(self.counts.sum()))

    def frame(self) -> pd.DataFrame:
        """Table with actual labels as rows and predictions as columns."""
        return pd.DataFrame(
            self.counts,
            index=[f"actual_{label}" for label in self.labels],
            columns=[f"predicted_{label}" for label in self.labels],
        )


@dataclass(frozen=True)
class RocPoint:
    """Operating point of a threshold on abnormality scores."""

    threshold: float
    tpr: float
    fpr: float


@dataclass(frozen=True)
class RocSummary:
    """ROC curve with the area under it and its standard error.

    Attributes:
        points: Operating points sorted by increasing threshold.
        auc: Area under the curve A_z.
        se: Standard error of A_z.
    """

    points: Tuple[RocPoint, ...]
    auc: float
    se: float

    def frame(self) -> pd.DataFrame:
        """Table with columns ``threshold,tpr,fpr``."""
        return pd.DataFrame(
            [(p.threshold, p.tpr, p.fpr) for p in self.points],
            columns=["threshold", "tpr", "fpr"],
        )


def hanley_mcneil_se(area: float, positives: int, negatives: int) -> float:
    """Standard error of the area under a ROC curve.

    Args:
        area: Area under the curve.
        positives: Number of positive cases.
        negatives: Number of negative cases.

    Returns:
        Standard error estimated from the area and the class sizes.
    """
    q1 = area / (2.0 - area)
    q2 = 2.0 * area**2 / (1.0 + area)
    variance = (
        area * (1.0 - area)
        + (positives - 1) * (q1 - area**2)
        + (negatives - 1) * (q2 - area**2)
    ) / (positives * negatives)
    return math.sqrt(max(variance, 0.0))


def roc(scores: Sequence[Tuple[float, Label]]) -> RocSummary:
    """Sweep a threshold over abnormality scores.

    Every distinct score is used as a threshold, plus two sentinels below
    and above all scores. A case is predicted abnormal when its score is at
    least the threshold.

    Args:
        scores: Sequence of ``(score, actual label)`` pairs.

    Returns:
        ROC summary with trapezoidal area and Hanley-McNeil standard error.

    Raises:
        EvaluationError: If the scores do not cover both classes.
    """
    values = np.array([score for score, _ in scores], dtype=np.float64)
    actual = np.array([is_positive(label) for _, label in scores], bool)
    positives = int(actual.sum())
    negatives = int(actual.size - positives)
    if positives == 0 or negatives == 0:
        raise EvaluationError(
            "ROC needs both classes, got "
            f"{positives} abnormal and {negatives} normal cases"
        )
    thresholds = np.unique(
        np.concatenate(
            [
                values,
                [min(0.0, values.min())],
                [max(1.0, values.max()) + ROC_EPSILON],
            ]
        )
    )
    points: List[RocPoint] = []
    for threshold in thresholds[::-1]:  # decreasing: rates grow
        predicted = values >= threshold
        point = RocPoint(
            threshold=float(threshold),
            tpr=int((predicted & actual).sum()) / positives,
            fpr=int((predicted & ~actual).sum()) / negatives,
        )
        if points and (points[-1].tpr, points[-1].fpr) == (
            point.tpr,
            point.fpr,
        ):
            continue  # same operating point, keep the highest threshold
        points.append(point)
    area = float(auc([p.fpr for p in points], [p.tpr for p in points]))
    return RocSummary(
        points=tuple(reversed(points)),
        auc=area,
        se=hanley_mcneil_se(area, positives, negatives),
    )


def format_metric(value: Optional[float]) -> str:
    """Format a metric, writing ``undefined`` for missing values."""
    return "undefined" if value is None else format_float(value)


def format_report(
    matrix: ConfusionMatrix,
    class_confusion: Optional[ClassConfusion] = None,
    summary: Optional[RocSummary] = None,
    roc_notice: str = "",
) -> str:
    """Render an evaluation report as text.

    Args:
        matrix: Binary confusion matrix.
        class_confusion: Optional three-class confusion.
        summary: Optional ROC summary.
        roc_notice: Message printed instead of the ROC summary.

    Returns:
        Report text.
    """
    lines = [
        "confusion matrix (abnormal = positive)",
        f"  TP={matrix.tp} FN={matrix.fn}",
        f"  FP={matrix.fp} TN={matrix.tn}",
        "metrics",
    ]
    lines += [
        f"  {name}={format_metric(value)}"
        for name, value in metrics(matrix).items()
    ]
    if class_confusion is not None:
        lines.append("class confusion")
        table = class_confusion.frame().to_string()
        lines += [f"  {line}" for line in table.splitlines()]
        lines.append(
            f"  accuracy={format_metric(class_confusion.accuracy)}"
        )
    lines.append("roc")
    if summary is not None:
        lines.append(f"  points={len(summary.points)}")
        lines.append(f"  A_z={format_float(summary.auc)}")
        lines.append(f"  SE={format_float(summary.se)}")
    else:
        lines.append(f"  skipped: {roc_notice}")
    return "\n".join(lines) + "\n"
