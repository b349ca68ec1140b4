"""Tweets, labels, dataset TSV I/O, tokenization and sentence splitting."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import FormatError


class Label(enum.Enum):
    INFORMATIVE = "INFORMATIVE"
    UNINFORMATIVE = "UNINFORMATIVE"

    @classmethod
    def parse(cls, value: str) -> "Label":
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise ValueError(f"unknown label {value!r}") from None

    @property
    def positive(self) -> bool:
        return self is Label.INFORMATIVE

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Example:
    id: str
    text: str
    gold: Label | None = None


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int

    @property
    def normalized(self) -> str:
        return self.surface.lower()


@dataclass(frozen=True, order=True)
class SentenceSpan:
    start: int
    end: int

    def slice(self, text: str) -> str:
        return text[self.start:self.end]


@dataclass(frozen=True)
class Dataset:
    examples: tuple[Example, ...]

    def __post_init__(self):
        seen = set()
        for ex in self.examples:
            if ex.id in seen:
                raise ValueError(f"duplicate id {ex.id!r}")
            seen.add(ex.id)

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[Example]:
        return iter(self.examples)

    @property
    def ids(self) -> list[str]:
        return [ex.id for ex in self.examples]

    def subset(self, ids: Iterable[str]) -> "Dataset":
        wanted = set(ids)
        return Dataset(tuple(ex for ex in self.examples if ex.id in wanted))


# A word run with an optional glued '#'/'@', or any single non-space symbol.
_TOKEN_RE = re.compile(r"[#@]?\w+|[^\w\s]")
_TERMINATORS = frozenset(".!?")


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into word tokens and single-character symbol tokens.

    Whitespace is skipped. A ``#`` or ``@`` directly followed by word characters
    stays attached, so ``#stopcovid19`` is one token.

    >>> [t.surface for t in tokenize("New #covid19 cases!")]
    ['New', '#covid19', 'cases', '!']
    """
    return [Token(m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def split_sentences(text: str) -> list[SentenceSpan]:
    """Split after every run of ``.!?`` and at newlines; trim whitespace.

    >>> [s.slice("Wow!!! 3 new cases") for s in split_sentences("Wow!!! 3 new cases")]
    ['Wow!!!', '3 new cases']
    """
    cuts = []
    n = len(text)
    i = 0
    seg_start = 0
    while i < n:
        ch = text[i]
        if ch == "\n":
            cuts.append((seg_start, i))
            seg_start = i + 1
            i += 1
        elif ch in _TERMINATORS:
            while i < n and text[i] in _TERMINATORS:
                i += 1
            cuts.append((seg_start, i))
            seg_start = i
        else:
            i += 1
    cuts.append((seg_start, n))

    spans = []
    for start, end in cuts:
        while start < end and text[start].isspace():
            start += 1
        while end > start and text[end - 1].isspace():
            end -= 1
        if start < end:
            spans.append(SentenceSpan(start, end))
    return spans


def iter_data_lines(path: str | Path) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if line.endswith("\r"):
                line = line[:-1]
            if line.strip():
                yield lineno, line


def load_dataset(path: str | Path, has_labels: bool = True) -> Dataset:
    """Read an ``id<TAB>text[<TAB>LABEL]`` file.

    Labels are validated whenever the column is present, but ``gold`` is only
    populated when ``has_labels`` is set (in which case the column is required).
    """
    path = str(path)
    examples = []
    seen: set[str] = set()
    for lineno, line in iter_data_lines(path):
        fields = line.split("\t")
        if len(fields) not in (2, 3):
            raise FormatError(f"expected 2 or 3 tab-separated fields, got {len(fields)}", path, lineno)
        ex_id, text = fields[0], fields[1]
        if not ex_id.strip():
            raise FormatError("empty id", path, lineno)
        if ex_id in seen:
            raise FormatError(f"duplicate id {ex_id!r}", path, lineno)
        seen.add(ex_id)
        gold = None
        if len(fields) == 3:
            try:
                label = Label.parse(fields[2])
            except ValueError as err:
                raise FormatError(str(err), path, lineno) from None
            if has_labels:
                gold = label
        elif has_labels:
            raise FormatError("missing label column", path, lineno)
        examples.append(Example(ex_id, text, gold))
    return Dataset(tuple(examples))


def load_ids(path: str | Path) -> list[str]:
    """First column of every non-empty line; accepts a bare id list or a dataset TSV."""
    path = str(path)
    ids = []
    seen = set()
    for lineno, line in iter_data_lines(path):
        ex_id = line.split("\t", 1)[0]
        if not ex_id.strip():
            raise FormatError("empty id", path, lineno)
        if ex_id in seen:
            raise FormatError(f"duplicate id {ex_id!r}", path, lineno)
        seen.add(ex_id)
        ids.append(ex_id)
    return ids


def write_predictions(
    path: str | Path,
    preds: Sequence[tuple[str, Label]],
    scores: dict[str, float] | None = None,
) -> None:
    """Write ``id<TAB>LABEL[<TAB>score]`` lines in input order."""
    seen = set()
    for ex_id, _ in preds:
        if ex_id in seen:
            raise ValueError(f"duplicate id {ex_id!r}")
        seen.add(ex_id)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for ex_id, label in preds:
            if scores is not None and ex_id in scores:
                fh.write(f"{ex_id}\t{label.value}\t{scores[ex_id]:.6f}\n")
            else:
                fh.write(f"{ex_id}\t{label.value}\n")
