"""Classify documents by matching their frequent words against word sets."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .model import Model, conditional
from .preprocess import PreprocessConfig, RawDocument, extract_transaction

__all__ = [
    "MODES",
    "MatchRecord",
    "ClassificationResult",
    "find_matches",
    "log_score",
    "score",
    "classify",
    "format_report",
]

Items = tuple[str, ...]
# "multiplier" scales each conditional by its fraction instead of raising it
MODES = ("plain", "fractional", "multiplier")


@dataclass(frozen=True)
class MatchRecord:
    vocab_itemset: Items
    matched_subset: Items
    fraction: Fraction


@dataclass(frozen=True)
class ClassificationResult:
    doc_id: str
    log_scores: dict[str, float]
    winner: str | None
    matches: tuple[MatchRecord, ...]
    mode: str

    @property
    def scores(self) -> dict[str, float]:
        return {c: math.exp(v) for c, v in self.log_scores.items()}

    @property
    def log10_scores(self) -> dict[str, float]:
        return {c: v / math.log(10) for c, v in self.log_scores.items()}

    @property
    def unclassifiable(self) -> bool:
        return self.winner is None


def find_matches(doc_words: Iterable[str], model: Model) -> list[MatchRecord]:
    """Word sets sharing at least two words with the document.

    When several word sets leave the same overlap, the one with the highest
    conditional in its own category wins; ties prefer the shorter set, then
    the lexicographically smaller one.
    """
    words = set(doc_words)
    best: dict[Items, tuple[tuple, MatchRecord]] = {}
    for vocab in model.vocabulary:
        overlap = tuple(w for w in vocab if w in words)
        if len(overlap) < 2:
            continue
        p = conditional(vocab, model.attribution[vocab], model)
        rank = (-p, len(vocab), vocab)
        if overlap not in best or rank < best[overlap][0]:
            best[overlap] = (rank, MatchRecord(vocab, overlap, Fraction(len(overlap), len(vocab))))
    return [best[key][1] for key in sorted(best)]


def log_score(category: str, matches: Sequence[MatchRecord], model: Model, mode: str = "plain") -> float:
    """Natural-log Naive Bayes score of ``category``."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    model.stats(category)
    total = math.log(model.priors[category])
    for m in matches:
        lp = math.log(conditional(m.vocab_itemset, category, model))
        if mode == "fractional":
            lp *= float(m.fraction)
        elif mode == "multiplier":
            lp += math.log(m.fraction)
        total += lp
    return total


def score(category: str, matches: Sequence[MatchRecord], model: Model, mode: str = "plain") -> float:
    return math.exp(log_score(category, matches, model, mode))


def classify(
    doc: RawDocument,
    model: Model,
    config: PreprocessConfig | None = None,
    mode: str = "plain",
    *,
    use_model_lexicon: bool = True,
) -> ClassificationResult:
    """Preprocess ``doc``, match it against ``model`` and take the argmax.

    Plural forms whose singular appears in some word set are folded onto that
    singular unless ``use_model_lexicon`` is false.  Raises
    :class:`~assocnb.preprocess.EmptyDocument` when the document has no
    frequent words; a document without matches gets ``winner=None``.
    """
    config = config or PreprocessConfig()
    if use_model_lexicon:
        config = replace(config, lexicon=config.lexicon | model.words())
    transaction = extract_transaction(doc, config, training=False)
    matches = find_matches(transaction.words, model)
    logs = {c: log_score(c, matches, model, mode) for c in model.category_names}
    winner = None
    if matches:
        priors = model.priors
        winner = min(logs, key=lambda c: (-logs[c], -priors[c], c))
    return ClassificationResult(doc.id, logs, winner, tuple(matches), mode)


def format_report(result: ClassificationResult) -> str:
    lines = [f"doc {result.doc_id}", f"winner {result.winner or 'UNCLASSIFIABLE'}"]
    for cat, v in result.log10_scores.items():
        lines.append(f"score {cat} {v:.6f}")
    for m in result.matches:
        frac = f"{len(m.matched_subset)}/{len(m.vocab_itemset)}"
        lines.append(f"match {','.join(m.matched_subset)} frac {frac} from {','.join(m.vocab_itemset)}")
    return "\n".join(lines) + "\n"
