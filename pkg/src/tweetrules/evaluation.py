"""Positive-class scoring, stratified k-fold cross-validation and error analysis."""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .corpus import Dataset, Example, Label, split_sentences
from .errors import CoverageError
from .learned import PredictionSet

Predictor = Callable[[Example], Label]
# Builds a predictor from a training split.
System = Callable[[Dataset], Predictor]


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn_: int = 0
    tn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn_ + self.tn


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class CVReport:
    fold_metrics: list[Metrics]
    mean_f1: float
    std_f1: float
    k: int = 0
    seed: int | None = None
    predictions: dict[str, Label] = field(default_factory=dict, repr=False)


def confusion(gold: Sequence[Label], pred: Sequence[Label]) -> ConfusionCounts:
    if len(gold) != len(pred):
        raise ValueError(f"length mismatch: {len(gold)} gold vs {len(pred)} predicted")
    tp = fp = fn = tn = 0
    for g, p in zip(gold, pred):
        if p is Label.INFORMATIVE:
            if g is Label.INFORMATIVE:
                tp += 1
            else:
                fp += 1
        elif g is Label.INFORMATIVE:
            fn += 1
        else:
            tn += 1
    return ConfusionCounts(tp, fp, fn, tn)


def f1_score(precision: float, recall: float) -> float:
    denom = precision + recall
    return 2 * precision * recall / denom if denom else 0.0


def metrics_positive(counts: ConfusionCounts) -> Metrics:
    """Precision, recall and F1 of the Informative class; empty denominators give 0."""
    pp = counts.tp + counts.fp
    ap = counts.tp + counts.fn_
    precision = counts.tp / pp if pp else 0.0
    recall = counts.tp / ap if ap else 0.0
    return Metrics(precision, recall, f1_score(precision, recall))


def score_predictions(data: Dataset, preds: PredictionSet) -> tuple[ConfusionCounts, Metrics]:
    gold = [ex.gold for ex in data]
    if any(g is None for g in gold):
        raise ValueError("dataset has unlabelled examples")
    counts = confusion(gold, preds.labels(data.ids))
    return counts, metrics_positive(counts)


def kfold_split(data: Dataset, k: int, seed: int) -> list[tuple[list[str], list[str]]]:
    """Stratified folds as ``(train_ids, test_ids)`` pairs.

    Ids of each label are shuffled with ``random.Random(seed)`` and dealt
    round-robin, Informative first; the Uninformative deal continues from the
    fold where the Informative deal stopped so fold sizes stay balanced too.
    A label with fewer than ``k`` examples is allowed; some folds then lack it.
    Ids within each list keep dataset order.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if k > len(data):
        raise ValueError(f"k={k} exceeds the number of examples ({len(data)})")
    if any(ex.gold is None for ex in data):
        raise ValueError("kfold_split needs gold labels on every example")
    by_label = {label: [ex.id for ex in data if ex.gold is label] for label in Label}

    rng = random.Random(seed)
    fold_of: dict[str, int] = {}
    cursor = 0
    for label in (Label.INFORMATIVE, Label.UNINFORMATIVE):
        ids = list(by_label[label])
        rng.shuffle(ids)
        for ex_id in ids:
            fold_of[ex_id] = cursor
            cursor = (cursor + 1) % k

    order = data.ids
    folds = []
    for i in range(k):
        test = [ex_id for ex_id in order if fold_of[ex_id] == i]
        train = [ex_id for ex_id in order if fold_of[ex_id] != i]
        folds.append((train, test))
    return folds


def summarize_folds(fold_metrics: Sequence[Metrics]) -> tuple[float, float]:
    """Mean and sample (n-1) standard deviation of fold F1 scores."""
    f1s = [m.f1 for m in fold_metrics]
    mean = statistics.fmean(f1s)
    std = statistics.stdev(f1s) if len(f1s) > 1 else 0.0
    return mean, std


def cross_validate(data: Dataset, k: int, seed: int, system: System) -> CVReport:
    """Build ``system`` on each training split and score it on the held-out fold."""
    fold_metrics = []
    predictions: dict[str, Label] = {}
    for train_ids, test_ids in kfold_split(data, k, seed):
        predict = system(data.subset(train_ids))
        test = data.subset(test_ids)
        preds = [predict(ex) for ex in test]
        for ex, p in zip(test, preds):
            predictions[ex.id] = p
        fold_metrics.append(metrics_positive(confusion([ex.gold for ex in test], preds)))
    mean, std = summarize_folds(fold_metrics)
    ordered = {ex_id: predictions[ex_id] for ex_id in data.ids}
    return CVReport(fold_metrics, mean, std, k=k, seed=seed, predictions=ordered)


def error_sentence_stats(data: Dataset, preds: PredictionSet) -> tuple[float | None, float | None]:
    """Mean sentence count of misclassified and of correctly classified examples.

    A group with no members is reported as ``None``.
    """
    missing = [ex.id for ex in data if ex.id not in preds]
    if missing:
        raise CoverageError(f"no prediction for {len(missing)} id(s), e.g. {missing[0]!r}")
    wrong, right = [], []
    for ex in data:
        if ex.gold is None:
            raise ValueError(f"example {ex.id!r} has no gold label")
        n = len(split_sentences(ex.text))
        (right if preds.label(ex.id) is ex.gold else wrong).append(n)
    mean_wrong = statistics.fmean(wrong) if wrong else None
    mean_right = statistics.fmean(right) if right else None
    return mean_wrong, mean_right


def format_metrics(counts: ConfusionCounts, metrics: Metrics) -> str:
    return (
        f"tp={counts.tp} fp={counts.fp} fn={counts.fn_} tn={counts.tn}\n"
        f"P={metrics.precision:.4f} R={metrics.recall:.4f} F1={metrics.f1:.4f}\n"
    )


def format_cv_report(report: CVReport, system_name: str = "", style: str = "text") -> str:
    """Render a CV report as an aligned table (``text``) or ``key=value`` lines (``kv``)."""
    if style == "kv":
        lines = [
            f"system={system_name}",
            f"k={report.k}",
            f"seed={report.seed}",
        ]
        for i, m in enumerate(report.fold_metrics, start=1):
            lines += [
                f"fold.{i}.precision={m.precision:.4f}",
                f"fold.{i}.recall={m.recall:.4f}",
                f"fold.{i}.f1={m.f1:.4f}",
            ]
        lines += [f"mean_f1={report.mean_f1:.4f}", f"std_f1={report.std_f1:.4f}", "std_kind=sample"]
        return "\n".join(lines) + "\n"
    if style != "text":
        raise ValueError(f"unknown report style {style!r}")
    lines = [f"system: {system_name}  k={report.k}  seed={report.seed}", "fold  precision  recall  f1"]
    for i, m in enumerate(report.fold_metrics, start=1):
        lines.append(f"{i:>4}  {m.precision:9.4f}  {m.recall:6.4f}  {m.f1:.4f}")
    lines.append(f"mean F1 {report.mean_f1:.4f}  std {report.std_f1:.4f} (sample, n-1)")
    return "\n".join(lines) + "\n"
