"""Lexicon and rule driven tweet informativeness classifier with ensemble integration."""

from .corpus import Dataset, Example, Label, SentenceSpan, Token, load_dataset, split_sentences, tokenize, write_predictions
from .ensemble import (
    IntegrationStrategy,
    integrate_and,
    integrate_dataset,
    integrate_or,
    integrate_precedence,
    integrate_vote,
)
from .evaluation import (
    ConfusionCounts,
    CVReport,
    Metrics,
    confusion,
    cross_validate,
    error_sentence_stats,
    kfold_split,
    metrics_positive,
)
from .learned import NBModel, PredictionSet, load_predictions, predict_full, predict_per_sentence, train_nb
from .lexicon import Lexicon, LexiconEntry, LexMatch, parse_lexicon, tag
from .rules import (
    RuleClassifier,
    RuleClassifierConfig,
    RulePattern,
    RuleSet,
    SpanMatch,
    classify_rule_based,
    match_rules,
    parse_rules,
)

__version__ = "0.1.0"
