"""Word-class sequence rules and the rule-based tweet classifier.

A rule is a line of 2 to 7 word-class names, exactly one of them starred::

    NUMord ADJ *N
    ADJ Ncorona *N -> informative

The starred element is the head: a fired span takes the label of the lexicon
entry matched there, unless the rule ends with ``-> label``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

from .corpus import Example, Label, Token, tokenize
from .errors import FormatError
from .lexicon import Lexicon, LexMatch, tag

MIN_RULE_LEN = 2
MAX_RULE_LEN = 7
DEFAULT_TARGET = "informative"

_ELEMENT_RE = re.compile(r"(\*?)([A-Za-z0-9_]+)")
_LABEL_RE = re.compile(r"[^\s]+")


@dataclass(frozen=True)
class RulePattern:
    elements: tuple[str, ...]
    head: int
    label_override: str | None = None

    def __post_init__(self):
        if not MIN_RULE_LEN <= len(self.elements) <= MAX_RULE_LEN:
            raise ValueError(
                f"rule length {len(self.elements)} outside {MIN_RULE_LEN}..{MAX_RULE_LEN}"
            )
        if not 0 <= self.head < len(self.elements):
            raise ValueError(f"head index {self.head} out of range")

    def __str__(self) -> str:
        parts = [("*" + c if i == self.head else c) for i, c in enumerate(self.elements)]
        if self.label_override is not None:
            parts += ["->", self.label_override]
        return " ".join(parts)


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[RulePattern, ...]

    def __post_init__(self):
        if len(set(self.rules)) != len(self.rules):
            raise ValueError("duplicate rule")

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def classes(self) -> set[str]:
        return {c for r in self.rules for c in r.elements}


@dataclass(frozen=True)
class SpanMatch:
    rule: RulePattern
    char_start: int
    char_end: int
    token_start: int
    token_end: int
    label: str | None


@dataclass(frozen=True)
class RuleClassifierConfig:
    threshold: int = 1
    target_label: str = DEFAULT_TARGET

    def __post_init__(self):
        if self.threshold < 1:
            raise ValueError(f"threshold must be >= 1, got {self.threshold}")


class RuleVerdict(NamedTuple):
    label: Label
    span_count: int
    spans: list[SpanMatch]


def parse_rule(line: str) -> RulePattern:
    parts = line.split()
    override = None
    if "->" in parts:
        pos = parts.index("->")
        tail = parts[pos + 1:]
        if len(tail) != 1 or not _LABEL_RE.fullmatch(tail[0]) or tail[0] == "->":
            raise ValueError("'->' must be followed by exactly one label")
        override = tail[0]
        parts = parts[:pos]
    elements = []
    heads = []
    for i, part in enumerate(parts):
        m = _ELEMENT_RE.fullmatch(part)
        if m is None:
            raise ValueError(f"unexpected element {part!r}")
        if m.group(1):
            heads.append(i)
        elements.append(m.group(2))
    if len(heads) != 1:
        raise ValueError(f"expected exactly one '*' head marker, found {len(heads)}")
    return RulePattern(tuple(elements), heads[0], override)


def parse_rules(path: str | Path) -> RuleSet:
    path = str(path)
    rules = []
    seen = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rule = parse_rule(line)
            except ValueError as err:
                raise FormatError(str(err), path, lineno) from None
            if rule in seen:
                raise FormatError(f"duplicate rule (first on line {seen[rule]})", path, lineno)
            seen[rule] = lineno
            rules.append(rule)
    return RuleSet(tuple(rules))


def _span_label(rule: RulePattern, chain: Sequence[LexMatch]) -> str | None:
    if rule.label_override is not None:
        return rule.label_override
    return chain[rule.head].entry.label


def match_rules(ruleset: RuleSet, tokens: Sequence[Token], matches: Sequence[LexMatch]) -> list[SpanMatch]:
    """Fire every rule over chains of token-adjacent lexicon matches.

    Spans are deduplicated on (char_start, char_end, label); the surviving
    SpanMatch names the earliest rule in the set that produced it.
    """
    by_start: dict[int, dict[str, list[LexMatch]]] = defaultdict(lambda: defaultdict(list))
    for m in matches:
        by_start[m.token_start][m.word_class].append(m)

    found: dict[tuple, SpanMatch] = {}
    for rule in ruleset.rules:
        k = len(rule.elements)
        for start in sorted(by_start):
            # depth-first over chains; stack holds (next element, chain so far)
            stack = [(0, ())]
            while stack:
                j, chain = stack.pop()
                if j == k:
                    label = _span_label(rule, chain)
                    key = (chain[0].char_start, chain[-1].char_end, label)
                    if key not in found:
                        found[key] = SpanMatch(
                            rule, key[0], key[1], chain[0].token_start, chain[-1].token_end, label
                        )
                    continue
                pos = start if j == 0 else chain[-1].token_end
                cands = by_start.get(pos)
                if not cands:
                    continue
                for m in reversed(cands.get(rule.elements[j], ())):
                    stack.append((j + 1, chain + (m,)))
    return sorted(found.values(), key=lambda s: (s.char_start, s.char_end, s.label or ""))


def classify_rule_based(
    ruleset: RuleSet,
    lexicon: Lexicon,
    text: str,
    config: RuleClassifierConfig = RuleClassifierConfig(),
) -> RuleVerdict:
    tokens = tokenize(text)
    spans = match_rules(ruleset, tokens, tag(lexicon, tokens))
    count = sum(1 for s in spans if s.label == config.target_label)
    label = Label.INFORMATIVE if count >= config.threshold else Label.UNINFORMATIVE
    return RuleVerdict(label, count, spans)


class RuleClassifier:
    """Bundles a lexicon, rule set and config into a per-example predictor."""

    def __init__(self, lexicon: Lexicon, ruleset: RuleSet, config: RuleClassifierConfig | None = None):
        self.lexicon = lexicon
        self.ruleset = ruleset
        self.config = config or RuleClassifierConfig()

    def classify(self, text: str) -> RuleVerdict:
        return classify_rule_based(self.ruleset, self.lexicon, text, self.config)

    def __call__(self, example: Example) -> Label:
        return self.classify(example.text).label
