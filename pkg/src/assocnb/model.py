"""Naive Bayes model over mined word sets.

Each category is mined on its own.  The category's word sets are its maximal
frequent itemsets with at least two words; a set mined in several categories
is attributed to the one where it occurs most (ties go to the smaller
category name) but keeps its true occurrence count everywhere.  Conditionals
use the m-estimate ``(n_k + 1) / (n + |vocabulary|)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .apriori import TransactionDB, mine
from .preprocess import Transaction

__all__ = [
    "ModelError",
    "NoFeatures",
    "UnknownCategory",
    "CategoryStats",
    "Model",
    "train",
    "conditional",
    "prior",
    "PRIOR_SOURCES",
]

Items = tuple[str, ...]
PRIOR_SOURCES = ("wordsets", "documents")


class ModelError(Exception):
    pass


class NoFeatures(ModelError):
    def __init__(self, category: str):
        self.category = category
        super().__init__(f"category {category!r} produced no word sets")


class UnknownCategory(ModelError, KeyError):
    def __init__(self, category: str):
        self.category = category
        super().__init__(category)

    def __str__(self) -> str:
        return f"unknown category {self.category!r}"


@dataclass(frozen=True)
class CategoryStats:
    category: str
    n_wordsets: int
    occurrence: Mapping[Items, int] = field(default_factory=dict)
    n_documents: int = 0

    def n_k(self, items: Iterable[str]) -> int:
        return self.occurrence.get(tuple(sorted(items)), 0)


@dataclass(frozen=True)
class Model:
    """Per-category statistics plus the shared word-set vocabulary.

    Priors are derived from the counts on access, never stored separately,
    so a model read back from disk is identical to the one written.
    """

    categories: tuple[CategoryStats, ...]
    vocabulary: tuple[Items, ...]
    attribution: Mapping[Items, str]
    min_sup: float = 0.02
    min_conf: float = 0.75
    transaction_size_k: int = 13
    prior_source: str = "wordsets"

    def __post_init__(self):
        if self.prior_source not in PRIOR_SOURCES:
            raise ValueError(f"prior_source must be one of {PRIOR_SOURCES}")
        object.__setattr__(self, "_by_name", {c.category: c for c in self.categories})

    @property
    def category_names(self) -> list[str]:
        return [c.category for c in self.categories]

    @property
    def vocabulary_size(self) -> int:
        return len(self.vocabulary)

    def stats(self, category: str) -> CategoryStats:
        try:
            return self._by_name[category]
        except KeyError:
            raise UnknownCategory(category) from None

    def prior_table(self, source: str | None = None) -> dict[str, float]:
        source = source or self.prior_source
        if source == "wordsets":
            weights = {c.category: c.n_wordsets for c in self.categories}
        elif source == "documents":
            weights = {c.category: c.n_documents for c in self.categories}
        else:
            raise ValueError(f"unknown prior source {source!r}")
        total = sum(weights.values())
        if total == 0:
            raise ModelError(f"no {source} to derive priors from")
        return {name: w / total for name, w in weights.items()}

    @property
    def priors(self) -> dict[str, float]:
        return self.prior_table()

    def words(self) -> frozenset[str]:
        """Every word appearing in some vocabulary word set."""
        return frozenset(w for items in self.vocabulary for w in items)

    def with_prior_source(self, source: str) -> "Model":
        return Model(
            self.categories, self.vocabulary, self.attribution,
            self.min_sup, self.min_conf, self.transaction_size_k, source,
        )


def conditional(itemset: Iterable[str], category: str, model: Model) -> float:
    stats = model.stats(category)
    items = tuple(sorted(getattr(itemset, "items", itemset)))
    return (stats.n_k(items) + 1) / (stats.n_wordsets + model.vocabulary_size)


def prior(category: str, model: Model) -> float:
    model.stats(category)
    return model.priors[category]


def train(
    corpus: Sequence[Transaction],
    min_sup: float = 0.02,
    min_conf: float = 0.75,
    *,
    categories: Iterable[str] | None = None,
    transaction_size_k: int = 13,
    prior_source: str = "wordsets",
) -> Model:
    """Fit a model to labeled transactions.

    ``categories`` lists the labels that must be represented; a listed label
    with no transactions (e.g. every document was discarded) raises
    :class:`NoFeatures` like any category that yields no word sets.
    ``min_conf`` is only recorded: the vocabulary is built from support alone.
    """
    if not corpus:
        raise ValueError("training corpus is empty")
    by_cat: dict[str, list[Transaction]] = defaultdict(list)
    for t in corpus:
        if t.category is None:
            raise ValueError(f"transaction {t.doc_id!r} has no category")
        by_cat[t.category].append(t)
    names = sorted(set(by_cat) | set(categories or ()))
    if len(names) < 2:
        raise ValueError("at least two categories are required")

    dbs = {name: TransactionDB(by_cat.get(name, ())) for name in names}
    mined: dict[str, set[Items]] = {}
    for name in names:
        if dbs[name].size == 0:
            raise NoFeatures(name)
        result = mine(dbs[name], min_sup)
        sets = [s.items for s in result.maximal if len(s) >= 2]
        if not sets:
            raise NoFeatures(name)
        mined[name] = set(sets)

    candidates = sorted({items for sets in mined.values() for items in sets})
    occurrence: dict[str, dict[Items, int]] = {name: {} for name in names}
    attribution: dict[Items, str] = {}
    for items in candidates:
        counts = {name: dbs[name].count(items) for name in names}
        for name, c in counts.items():
            if c > 0:
                occurrence[name][items] = c
        owners = [name for name in names if items in mined[name]]
        attribution[items] = min(owners, key=lambda name: (-counts[name], name))

    n_wordsets = defaultdict(int)
    for owner in attribution.values():
        n_wordsets[owner] += 1
    for name in names:
        if n_wordsets[name] == 0:
            raise NoFeatures(name)

    stats = tuple(
        CategoryStats(name, n_wordsets[name], occurrence[name], dbs[name].size)
        for name in names
    )
    return Model(
        categories=stats,
        vocabulary=tuple(candidates),
        attribution=attribution,
        min_sup=min_sup,
        min_conf=min_conf,
        transaction_size_k=transaction_size_k,
        prior_source=prior_source,
    )
