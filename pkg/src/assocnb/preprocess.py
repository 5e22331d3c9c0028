"""Turn raw document text into frequent-word transactions.

The pipeline is tokenize -> remove_stopwords -> merge_plurals, after which
words occurring at least ``min_word_frequency`` times are kept.  Training
documents are cut down to exactly ``transaction_size_k`` words; documents
being classified keep every frequent word.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

__all__ = [
    "RawDocument",
    "TokenStream",
    "Transaction",
    "PreprocessConfig",
    "PreprocessError",
    "Discarded",
    "EmptyDocument",
    "load_stopwords",
    "default_stopwords",
    "tokenize",
    "remove_stopwords",
    "merge_plurals",
    "word_frequencies",
    "extract_transaction",
    "build_transactions",
]

# letters/digits, optionally joined by single internal hyphens
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*")
_PLURAL_SUFFIXES = ("s", "es")


class PreprocessError(Exception):
    pass


class Discarded(PreprocessError):
    """A training document had fewer frequent words than the transaction size."""

    def __init__(self, doc_id: str, n_frequent: int, required: int):
        self.doc_id = doc_id
        self.n_frequent = n_frequent
        self.required = required
        super().__init__(
            f"{doc_id}: {n_frequent} frequent words, {required} required"
        )


class EmptyDocument(PreprocessError):
    """A document to classify has no frequent words at all."""

    def __init__(self, doc_id: str):
        self.doc_id = doc_id
        super().__init__(f"{doc_id}: no frequent words")


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str
    category: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be nonempty")


@dataclass(frozen=True)
class TokenStream:
    """Tokens in document order.

    ``indices`` holds, for every token, its index in the stream produced by
    :func:`tokenize`; filtering keeps the original indices of survivors.
    """

    tokens: tuple[str, ...] = ()
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.tokens) != len(self.indices):
            raise ValueError("tokens and indices differ in length")

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def positions(self) -> dict[str, int]:
        """First-occurrence index of each distinct token."""
        first: dict[str, int] = {}
        for tok, idx in zip(self.tokens, self.indices):
            if tok not in first:
                first[tok] = idx
        return first


@dataclass(frozen=True)
class Transaction:
    doc_id: str
    words: tuple[str, ...]
    counts: Mapping[str, int] = field(default_factory=dict, compare=False)
    category: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(sorted(set(self.words))))


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Read a stop-word file: one word per line, ``#`` comments, lowercased."""
    if path is None:
        text = resources.files("assocnb").joinpath("data/stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


_DEFAULT_STOPWORDS: frozenset[str] | None = None


def default_stopwords() -> frozenset[str]:
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        _DEFAULT_STOPWORDS = load_stopwords()
    return _DEFAULT_STOPWORDS


@dataclass(frozen=True)
class PreprocessConfig:
    """Preprocessing knobs.

    ``lexicon`` is an optional set of known singular forms: a plural whose
    singular is in the lexicon is rewritten even when the singular does not
    occur in the document itself.
    """

    stopwords: frozenset[str] = field(default_factory=default_stopwords)
    transaction_size_k: int = 13
    min_word_frequency: int = 2
    lexicon: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.transaction_size_k < 1:
            raise ValueError("transaction_size_k must be >= 1")
        if self.min_word_frequency < 2:
            raise ValueError("min_word_frequency must be >= 2")
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))
        object.__setattr__(self, "lexicon", frozenset(self.lexicon))


def tokenize(text: str) -> TokenStream:
    tokens = tuple(m.group().lower() for m in _TOKEN_RE.finditer(text))
    return TokenStream(tokens, tuple(range(len(tokens))))


def remove_stopwords(stream: TokenStream, config: PreprocessConfig) -> TokenStream:
    stop = config.stopwords
    kept = [(t, i) for t, i in zip(stream.tokens, stream.indices) if t not in stop]
    return TokenStream(tuple(t for t, _ in kept), tuple(i for _, i in kept))


def _singular_of(word: str, known: Iterable[str] | set[str]) -> str | None:
    for suffix in _PLURAL_SUFFIXES:
        if word.endswith(suffix) and len(word) > len(suffix):
            stem = word[: -len(suffix)]
            if stem in known:
                return stem
    return None


def merge_plurals(
    stream: TokenStream, lexicon: frozenset[str] | set[str] = frozenset()
) -> TokenStream:
    """Rewrite ``w+"s"`` / ``w+"es"`` to ``w`` when ``w`` is also present.

    No other stemming happens.  Words from ``lexicon`` count as present.
    """
    present = set(stream.tokens)
    known = present | set(lexicon)
    mapping = {}
    for tok in present:
        stem = _singular_of(tok, known)
        if stem is not None:
            mapping[tok] = stem
    if not mapping:
        return stream
    # collapse chains such as "sss" -> "ss" -> "s" so a second pass is a no-op
    for tok in list(mapping):
        target = mapping[tok]
        while target in mapping:
            target = mapping[target]
        mapping[tok] = target
    return TokenStream(tuple(mapping.get(t, t) for t in stream.tokens), stream.indices)


def word_frequencies(text: str, config: PreprocessConfig) -> tuple[Counter, dict[str, int]]:
    """Cleaned-word counts and first positions for ``text``."""
    stream = merge_plurals(remove_stopwords(tokenize(text), config), config.lexicon)
    return Counter(stream.tokens), stream.positions


def extract_transaction(
    doc: RawDocument, config: PreprocessConfig, *, training: bool = False
) -> Transaction:
    """Reduce ``doc`` to its frequent words.

    With ``training=True`` exactly ``config.transaction_size_k`` words are
    selected by descending frequency, earliest first occurrence breaking
    ties; documents with fewer frequent words raise :class:`Discarded`.
    Otherwise all frequent words are returned and :class:`EmptyDocument` is
    raised when there are none.
    """
    counts, positions = word_frequencies(doc.text, config)
    frequent = [w for w, c in counts.items() if c >= config.min_word_frequency]

    if training:
        k = config.transaction_size_k
        if len(frequent) < k:
            raise Discarded(doc.id, len(frequent), k)
        frequent.sort(key=lambda w: (-counts[w], positions[w]))
        frequent = frequent[:k]
    elif not frequent:
        raise EmptyDocument(doc.id)

    return Transaction(
        doc_id=doc.id,
        words=tuple(frequent),
        counts={w: counts[w] for w in frequent},
        category=doc.category,
    )


def build_transactions(
    docs: Iterable[RawDocument], config: PreprocessConfig
) -> tuple[list[Transaction], list[Discarded]]:
    """Training transactions for ``docs`` plus the discarded documents."""
    kept, dropped = [], []
    for doc in docs:
        try:
            kept.append(extract_transaction(doc, config, training=True))
        except Discarded as exc:
            dropped.append(exc)
    return kept, dropped
