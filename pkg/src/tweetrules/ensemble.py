"""Combining the labels of several systems: vote, AND, OR and rule precedence."""

from __future__ import annotations

import enum
from typing import Sequence

from .corpus import Label
from .errors import StreamCountError
from .learned import PredictionSet

INF = Label.INFORMATIVE
UNINF = Label.UNINFORMATIVE


class IntegrationStrategy(enum.Enum):
    VOTE = "vote"
    AND = "and"
    OR = "or"
    PRECEDENCE = "precedence"


def _check_k(preds: Sequence[Label]) -> None:
    if len(preds) < 2:
        raise StreamCountError(f"need at least 2 predictions, got {len(preds)}")


def integrate_vote(preds: Sequence[Label]) -> Label:
    """Strict majority; a tie is Uninformative."""
    _check_k(preds)
    yes = sum(1 for p in preds if p is INF)
    return INF if 2 * yes > len(preds) else UNINF


def integrate_and(preds: Sequence[Label]) -> Label:
    _check_k(preds)
    return INF if all(p is INF for p in preds) else UNINF


def integrate_or(preds: Sequence[Label]) -> Label:
    _check_k(preds)
    return INF if any(p is INF for p in preds) else UNINF


def integrate_precedence(full: Label, per_sentence: Label, rule: Label) -> Label:
    """Resolve a disagreement between the full-text and per-sentence outputs.

    When the two learned outputs agree their label stands. When they conflict
    the rule-based system can only veto: an Uninformative rule verdict wins,
    otherwise the full-text output is used.
    """
    if full is per_sentence:
        return full
    if rule is UNINF:
        return UNINF
    return full


def integrate_labels(strategy: IntegrationStrategy, preds: Sequence[Label]) -> Label:
    if strategy is IntegrationStrategy.PRECEDENCE:
        if len(preds) != 3:
            raise StreamCountError(f"precedence needs exactly 3 inputs (full, per-sentence, rules), got {len(preds)}")
        return integrate_precedence(*preds)
    return _OPS[strategy](preds)


_OPS = {
    IntegrationStrategy.VOTE: integrate_vote,
    IntegrationStrategy.AND: integrate_and,
    IntegrationStrategy.OR: integrate_or,
}


def integrate_dataset(
    strategy: IntegrationStrategy,
    streams: Sequence[PredictionSet],
    ids: Sequence[str],
) -> PredictionSet:
    """Apply ``strategy`` id by id. Precedence streams are (full, per-sentence, rules)."""
    if strategy is IntegrationStrategy.PRECEDENCE:
        if len(streams) != 3:
            raise StreamCountError(f"precedence needs exactly 3 streams (full, per-sentence, rules), got {len(streams)}")
    elif len(streams) < 2:
        raise StreamCountError(f"{strategy.value} needs at least 2 streams, got {len(streams)}")
    columns = [stream.labels(ids) for stream in streams]
    return PredictionSet.from_labels(
        (ex_id, integrate_labels(strategy, row)) for ex_id, *row in zip(ids, *columns)
    )
