"""Learned-model predictions: a multinomial naive Bayes stand-in and prediction files.

The deep models are not part of this package. Their outputs can be brought in
with :func:`load_predictions`; for desk-scale experiments :func:`train_nb`
gives a fast model that can be run on whole tweets or sentence by sentence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .corpus import Dataset, Example, Label, SentenceSpan, iter_data_lines, split_sentences, tokenize
from .errors import CoverageError, FormatError

LABELS = (Label.INFORMATIVE, Label.UNINFORMATIVE)


@dataclass(frozen=True)
class NBModel:
    class_log_prior: dict[Label, float]
    token_counts: dict[Label, dict[str, int]]
    total_tokens: dict[Label, int]
    vocabulary: frozenset[str]

    def token_log_likelihood(self, label: Label, token: str) -> float:
        """Add-one smoothed log P(token | label); unseen tokens share one extra slot."""
        denom = self.total_tokens[label] + len(self.vocabulary) + 1
        return math.log((self.token_counts[label].get(token, 0) + 1) / denom)

    def unseen_log_likelihood(self, label: Label) -> float:
        return -math.log(self.total_tokens[label] + len(self.vocabulary) + 1)

    def joint_log(self, text: str) -> dict[Label, float]:
        tokens = [t.normalized for t in tokenize(text)]
        return {
            label: self.class_log_prior[label]
            + sum(self.token_log_likelihood(label, tok) for tok in tokens)
            for label in LABELS
        }


def train_nb(data: Dataset) -> NBModel:
    """Fit a multinomial unigram model with Laplace smoothing on gold-labelled data."""
    if len(data) == 0:
        raise ValueError("cannot train on an empty dataset")
    docs = Counter()
    counts = {label: Counter() for label in LABELS}
    for ex in data:
        if ex.gold is None:
            raise ValueError(f"example {ex.id!r} has no gold label")
        docs[ex.gold] += 1
        counts[ex.gold].update(t.normalized for t in tokenize(ex.text))
    missing = [label.value for label in LABELS if docs[label] == 0]
    if missing:
        raise ValueError(f"no training examples for label(s): {', '.join(missing)}")
    n = sum(docs.values())
    return NBModel(
        class_log_prior={label: math.log(docs[label] / n) for label in LABELS},
        token_counts={label: dict(c) for label, c in counts.items()},
        total_tokens={label: sum(c.values()) for label, c in counts.items()},
        vocabulary=frozenset(tok for c in counts.values() for tok in c),
    )


def predict_full(model: NBModel, text: str) -> tuple[Label, float]:
    """Return the MAP label and the posterior of Informative. Ties go to Uninformative."""
    joint = model.joint_log(text)
    li, lu = joint[Label.INFORMATIVE], joint[Label.UNINFORMATIVE]
    top = max(li, lu)
    score = math.exp(li - top) / (math.exp(li - top) + math.exp(lu - top))
    return (Label.INFORMATIVE if li > lu else Label.UNINFORMATIVE), score


def predict_per_sentence(model: NBModel, text: str) -> tuple[Label, list[tuple[SentenceSpan, Label]]]:
    """Label each sentence separately; the tweet is Informative if any sentence is.

    A text with no sentences (empty or whitespace only) is Uninformative.
    """
    per_sentence = [(span, predict_full(model, span.slice(text))[0]) for span in split_sentences(text)]
    overall = Label.INFORMATIVE if any(lab is Label.INFORMATIVE for _, lab in per_sentence) else Label.UNINFORMATIVE
    return overall, per_sentence


class NBClassifier:
    """Per-example predictor over a trained model, in ``full`` or ``sentence`` mode."""

    def __init__(self, model: NBModel, mode: str = "full"):
        if mode not in ("full", "sentence"):
            raise ValueError(f"unknown mode {mode!r}")
        self.model = model
        self.mode = mode

    @classmethod
    def trainer(cls, mode: str):
        return lambda train: cls(train_nb(train), mode)

    def __call__(self, example: Example) -> Label:
        if self.mode == "full":
            return predict_full(self.model, example.text)[0]
        return predict_per_sentence(self.model, example.text)[0]


@dataclass(frozen=True)
class PredictionSet:
    by_id: dict[str, tuple[Label, float | None]] = field(default_factory=dict)

    @classmethod
    def from_labels(cls, pairs: Iterable[tuple[str, Label]]) -> "PredictionSet":
        by_id = {}
        for ex_id, label in pairs:
            if ex_id in by_id:
                raise ValueError(f"duplicate id {ex_id!r}")
            by_id[ex_id] = (label, None)
        return cls(by_id)

    def __len__(self) -> int:
        return len(self.by_id)

    def __contains__(self, ex_id: str) -> bool:
        return ex_id in self.by_id

    def label(self, ex_id: str) -> Label:
        return self.by_id[ex_id][0]

    def labels(self, ids: Iterable[str]) -> list[Label]:
        ids = list(ids)
        missing = [i for i in ids if i not in self.by_id]
        if missing:
            raise CoverageError(f"no prediction for {len(missing)} id(s), e.g. {missing[0]!r}")
        return [self.by_id[i][0] for i in ids]

    def items(self, ids: Iterable[str]) -> list[tuple[str, Label]]:
        ids = list(ids)
        return list(zip(ids, self.labels(ids)))

    def scores(self) -> Mapping[str, float]:
        return {i: s for i, (_, s) in self.by_id.items() if s is not None}


def load_predictions(path: str | Path, expected_ids: Iterable[str] | None = None) -> PredictionSet:
    """Read ``id<TAB>LABEL[<TAB>score]`` lines.

    With ``expected_ids`` the file must cover exactly that set of ids.
    """
    path = str(path)
    by_id: dict[str, tuple[Label, float | None]] = {}
    for lineno, line in iter_data_lines(path):
        fields = line.split("\t")
        if len(fields) not in (2, 3):
            raise FormatError(f"expected 2 or 3 tab-separated fields, got {len(fields)}", path, lineno)
        ex_id = fields[0]
        if not ex_id.strip():
            raise FormatError("empty id", path, lineno)
        if ex_id in by_id:
            raise FormatError(f"duplicate id {ex_id!r}", path, lineno)
        try:
            label = Label.parse(fields[1])
        except ValueError as err:
            raise FormatError(str(err), path, lineno) from None
        score = None
        if len(fields) == 3:
            try:
                score = float(fields[2])
            except ValueError:
                raise FormatError(f"bad score {fields[2]!r}", path, lineno) from None
            if not 0.0 <= score <= 1.0:
                raise FormatError(f"score {fields[2]} outside [0, 1]", path, lineno)
        by_id[ex_id] = (label, score)

    if expected_ids is not None:
        expected = set(expected_ids)
        missing = sorted(expected - by_id.keys())
        extra = sorted(by_id.keys() - expected)
        if missing:
            raise CoverageError(f"{path}: missing prediction for {len(missing)} id(s), e.g. {missing[0]!r}")
        if extra:
            raise CoverageError(f"{path}: {len(extra)} unexpected id(s), e.g. {extra[0]!r}")
    return PredictionSet(by_id)
