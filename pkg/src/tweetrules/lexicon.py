"""Task lexicon: parsing and word-class tagging of token sequences.

Lexicon files hold one entry per line::

    form<TAB>class[<TAB>label][<TAB>flags]

``form`` may span several words separated by spaces. The only flag is
``open_left``, which drops the leading word-boundary requirement so that a
single-word form also matches at the end of a longer token, e.g. ``covid19``
inside ``#stopcovid19``. The trailing boundary is always enforced.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Token, tokenize
from .errors import FormatError

OPEN_LEFT = "open_left"
KNOWN_FLAGS = frozenset({OPEN_LEFT})

_CLASS_RE = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class LexiconEntry:
    form: tuple[str, ...]
    word_class: str
    label: str | None = None
    open_left: bool = False

    def __post_init__(self):
        if not self.form or not all(self.form):
            raise ValueError("entry form must be one or more non-empty tokens")
        if any(tok != tok.lower() for tok in self.form):
            raise ValueError(f"entry form {self.form!r} is not case-folded")
        if not _CLASS_RE.fullmatch(self.word_class):
            raise ValueError(f"invalid word class {self.word_class!r}")
        if self.open_left and len(self.form) != 1:
            raise ValueError("open_left is only allowed on single-token forms")

    @property
    def text(self) -> str:
        return " ".join(self.form)


@dataclass(frozen=True)
class LexMatch:
    entry: LexiconEntry
    token_start: int
    token_end: int
    char_start: int
    char_end: int

    @property
    def word_class(self) -> str:
        return self.entry.word_class


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[LexiconEntry, ...]
    _closed: dict = field(init=False, repr=False, compare=False)
    _open: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        closed: dict[str, list[LexiconEntry]] = defaultdict(list)
        # open_left entries grouped by form length, then form, for suffix lookup
        open_: dict[int, dict[str, list[LexiconEntry]]] = defaultdict(lambda: defaultdict(list))
        seen = set()
        for entry in self.entries:
            key = (entry.form, entry.word_class)
            if key in seen:
                raise ValueError(f"duplicate entry {entry.text!r} {entry.word_class}")
            seen.add(key)
            if entry.open_left:
                form = entry.form[0]
                open_[len(form)][form].append(entry)
            else:
                closed[entry.form[0]].append(entry)
        object.__setattr__(self, "_closed", dict(closed))
        object.__setattr__(self, "_open", {n: dict(forms) for n, forms in open_.items()})

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def classes(self) -> set[str]:
        return {e.word_class for e in self.entries}

    def with_entries(self, extra: Iterable[LexiconEntry]) -> "Lexicon":
        return Lexicon(self.entries + tuple(extra))


def parse_entry(line: str) -> LexiconEntry:
    """Parse a single lexicon line (no comment handling)."""
    fields = line.split("\t")
    if len(fields) < 2 or len(fields) > 4:
        raise ValueError(f"expected 2 to 4 tab-separated fields, got {len(fields)}")
    form_field, word_class = fields[0].strip(), fields[1].strip()
    label = fields[2].strip() if len(fields) > 2 else ""
    flags_field = fields[3].strip() if len(fields) > 3 else ""
    if not form_field:
        raise ValueError("empty form")
    if not word_class:
        raise ValueError("missing word class")
    if not _CLASS_RE.fullmatch(word_class):
        raise ValueError(f"invalid word class {word_class!r}")
    flags = {f.strip() for f in flags_field.split(",") if f.strip()}
    unknown = flags - KNOWN_FLAGS
    if unknown:
        raise ValueError(f"unknown flag(s): {', '.join(sorted(unknown))}")
    form = tuple(tok.normalized for tok in tokenize(form_field))
    if not form:
        raise ValueError(f"form {form_field!r} contains no tokens")
    open_left = OPEN_LEFT in flags
    if open_left and len(form) != 1:
        raise ValueError(f"open_left on multi-token form {form_field!r}")
    return LexiconEntry(form, word_class, label or None, open_left)


def parse_lexicon(path: str | Path) -> Lexicon:
    path = str(path)
    entries = []
    seen = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                entry = parse_entry(line)
            except ValueError as err:
                raise FormatError(str(err), path, lineno) from None
            key = (entry.form, entry.word_class)
            if key in seen:
                raise FormatError(
                    f"duplicate entry {entry.text!r} {entry.word_class} (first on line {seen[key]})",
                    path, lineno,
                )
            seen[key] = lineno
            entries.append(entry)
    return Lexicon(tuple(entries))


def tag(lexicon: Lexicon, tokens: Sequence[Token]) -> list[LexMatch]:
    """Return every lexicon match over ``tokens``, overlapping ones included.

    Closed entries match whole tokens only, which is what the ``\\b`` markers
    on both sides amount to. Sorted by (token_start, token_end, class).
    """
    norms = [t.normalized for t in tokens]
    out = []
    n = len(tokens)
    for i, norm in enumerate(norms):
        for entry in lexicon._closed.get(norm, ()):
            k = len(entry.form)
            if i + k <= n and tuple(norms[i:i + k]) == entry.form:
                out.append(LexMatch(entry, i, i + k, tokens[i].start, tokens[i + k - 1].end))
        for length, forms in lexicon._open.items():
            if length > len(norm):
                continue
            for entry in forms.get(norm[len(norm) - length:], ()):
                out.append(LexMatch(entry, i, i + 1, tokens[i].start, tokens[i].end))
    out.sort(key=lambda m: (m.token_start, m.token_end, m.entry.word_class))
    return out


def tag_text(lexicon: Lexicon, text: str) -> tuple[list[Token], list[LexMatch]]:
    tokens = tokenize(text)
    return tokens, tag(lexicon, tokens)
