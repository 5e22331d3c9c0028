"""Level-wise frequent itemset mining and association rules.

Items are strings ordered lexicographically; an itemset is always kept as a
sorted tuple.  Support thresholds given as fractions are converted to counts
in :func:`support_threshold`, the single place the rounding rule lives.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Itemset",
    "TransactionDB",
    "MiningResult",
    "Rule",
    "InvalidSupport",
    "EmptyDatabase",
    "support_threshold",
    "join",
    "prune",
    "count_support",
    "mine",
    "maximal_itemsets",
    "generate_rules",
]

Items = tuple[str, ...]


class InvalidSupport(ValueError):
    pass


class EmptyDatabase(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Itemset:
    items: Items
    support_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(sorted(set(self.items))))

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        return ",".join(self.items)


class TransactionDB:
    """An immutable list of transactions, each stored as a frozenset of items."""

    def __init__(self, transactions: Iterable[Iterable[str]]):
        rows = []
        for t in transactions:
            words = getattr(t, "words", t)
            rows.append(frozenset(words))
        self.transactions: tuple[frozenset[str], ...] = tuple(rows)

    @property
    def size(self) -> int:
        return len(self.transactions)

    def __len__(self) -> int:
        return len(self.transactions)

    def items(self) -> list[str]:
        return sorted(set().union(*self.transactions)) if self.transactions else []

    def count(self, items: Iterable[str]) -> int:
        wanted = frozenset(items)
        return sum(1 for t in self.transactions if wanted <= t)


@dataclass(frozen=True)
class MiningResult:
    """Output of :func:`mine`.

    ``candidates[k-1]`` is the counted candidate set C_k after pruning, so the
    last entry is the empty candidate level that ended the search (or the
    level whose members all fell below the threshold).
    """

    levels: tuple[tuple[Itemset, ...], ...]
    maximal: tuple[Itemset, ...]
    min_sup: float
    support_threshold_count: int
    db_size: int
    candidates: tuple[tuple[Itemset, ...], ...] = ()

    def frequent(self) -> list[Itemset]:
        return [s for level in self.levels for s in level]

    def support_counts(self) -> dict[Items, int]:
        return {s.items: s.support_count for s in self.frequent()}

    def level(self, k: int) -> tuple[Itemset, ...]:
        return self.levels[k - 1] if 0 < k <= len(self.levels) else ()


@dataclass(frozen=True)
class Rule:
    antecedent: Itemset
    consequent: Itemset
    support: float
    confidence: float

    def __str__(self) -> str:
        return f"{{{self.antecedent}}} => {{{self.consequent}}}"


def support_threshold(min_sup: float, db_size: int) -> int:
    """Minimum support count: ``max(2, floor(min_sup * db_size))``."""
    if not (0 < min_sup <= 1):
        raise InvalidSupport(f"min_sup must be in (0, 1], got {min_sup!r}")
    if db_size < 1:
        raise ValueError("db_size must be positive")
    # the epsilon keeps products like 0.3 * 10 == 2.9999999999999996 at 3
    return max(2, math.floor(min_sup * db_size + 1e-9))


def join(prev_level: Sequence[Itemset | Items]) -> list[Items]:
    """Candidate k-itemsets from pairs of (k-1)-itemsets sharing a (k-2)-prefix."""
    prev = sorted({tuple(getattr(s, "items", s)) for s in prev_level})
    out = []
    for i, a in enumerate(prev):
        for b in prev[i + 1:]:
            if a[:-1] != b[:-1]:
                # sorted input: once the prefix differs, no later b matches
                break
            out.append(a + (b[-1],))
    return sorted(out)


def prune(candidates: Sequence[Items], prev_level: Sequence[Itemset | Items]) -> list[Items]:
    """Drop candidates having a (k-1)-subset outside ``prev_level``."""
    prev = {tuple(getattr(s, "items", s)) for s in prev_level}
    return [
        c for c in candidates
        if all(sub in prev for sub in combinations(c, len(c) - 1))
    ]


def count_support(candidates: Iterable[Items], db: TransactionDB) -> list[Itemset]:
    return [Itemset(tuple(c), db.count(c)) for c in candidates]


def maximal_itemsets(levels: Sequence[Sequence[Itemset]]) -> list[Itemset]:
    """Frequent itemsets with no frequent proper superset.

    Checking against the next level suffices: any frequent superset implies a
    frequent superset exactly one item larger.
    """
    out = []
    for k, level in enumerate(levels):
        bigger = [frozenset(s.items) for s in levels[k + 1]] if k + 1 < len(levels) else []
        for s in level:
            mine_ = frozenset(s.items)
            if not any(mine_ < b for b in bigger):
                out.append(s)
    return out


def mine(db: TransactionDB, min_sup: float, *, min_count: int | None = None) -> MiningResult:
    """Run Apriori over ``db``.

    ``min_count`` overrides the count derived from ``min_sup`` when given.
    """
    if not isinstance(db, TransactionDB):
        db = TransactionDB(db)
    if db.size == 0:
        raise EmptyDatabase("transaction database is empty")
    threshold = support_threshold(min_sup, db.size) if min_count is None else int(min_count)

    c1 = count_support([(item,) for item in db.items()], db)
    candidates = [tuple(c1)]
    levels = []
    current = [s for s in c1 if s.support_count >= threshold]
    while current:
        levels.append(tuple(current))
        ck = prune(join(current), current)
        counted = count_support(ck, db)
        candidates.append(tuple(counted))
        current = [s for s in counted if s.support_count >= threshold]

    return MiningResult(
        levels=tuple(levels),
        maximal=tuple(maximal_itemsets(levels)),
        min_sup=float(min_sup),
        support_threshold_count=threshold,
        db_size=db.size,
        candidates=tuple(candidates),
    )


def generate_rules(result: MiningResult, min_conf: float, db: TransactionDB | None = None) -> list[Rule]:
    """Strong rules A => F \\ A for every frequent F with at least two items.

    Confidence is ``count(F) / count(A)``; every nonempty subset of a frequent
    itemset is itself frequent, so counts come straight from ``result``.
    """
    if not (0 < min_conf <= 1):
        raise ValueError(f"min_conf must be in (0, 1], got {min_conf!r}")
    n = db.size if db is not None else result.db_size
    counts = result.support_counts()
    rules = []
    for level in result.levels[1:]:
        for f in level:
            full = f.items
            for r in range(1, len(full)):
                for ante in combinations(full, r):
                    conf = f.support_count / counts[ante]
                    if conf + 1e-12 < min_conf:
                        continue
                    cons = tuple(x for x in full if x not in ante)
                    rules.append(Rule(
                        antecedent=Itemset(ante, counts[ante]),
                        consequent=Itemset(cons, counts[cons]),
                        support=f.support_count / n,
                        confidence=conf,
                    ))
    return rules
