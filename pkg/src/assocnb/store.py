"""Corpus loading and the plain-text file formats.

Model file::

    assoc-nb-model v1
    vocab <|vocabulary|>
    config min_sup <float>
    config min_conf <float>
    config k <int>
    config prior_source <wordsets|documents>
    category <name> <n_wordsets> <prior, 10 significant digits>
    documents <n>
    <item,item,...> <n_k>
    ...
    attribution
    <item,item,...> <category>

Transaction file: one transaction per line, items comma-separated.
Mining output: ``item,item,...<TAB>support_count`` per line, levels in
ascending size, lexicographic within a level.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .apriori import Itemset, MiningResult, maximal_itemsets
from .model import PRIOR_SOURCES, CategoryStats, Model
from .preprocess import RawDocument

__all__ = [
    "StoreError",
    "MissingRoot",
    "UnreadableFile",
    "NoCategories",
    "BadMagic",
    "VersionMismatch",
    "ParseError",
    "MAGIC",
    "load_corpus",
    "dumps_model",
    "loads_model",
    "save_model",
    "load_model",
    "parse_transactions",
    "read_transactions",
    "format_itemsets",
    "parse_itemsets",
    "levels_to_result",
]

MAGIC = "assoc-nb-model"
VERSION = "v1"


class StoreError(Exception):
    pass


class MissingRoot(StoreError):
    pass


class UnreadableFile(StoreError):
    def __init__(self, path, reason=""):
        self.path = Path(path)
        super().__init__(f"cannot read {path}: {reason}" if reason else f"cannot read {path}")


class NoCategories(StoreError):
    pass


class BadMagic(StoreError):
    pass


class VersionMismatch(StoreError):
    pass


class ParseError(StoreError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def load_corpus(root: str | Path) -> list[RawDocument]:
    """One category per subdirectory, one document per regular file.

    Hidden entries are skipped; documents come back sorted by id
    (``"<category>/<filename>"``).
    """
    root = Path(root)
    if not root.is_dir():
        raise MissingRoot(f"corpus root {root} does not exist")
    cats = sorted(p for p in root.iterdir() if p.is_dir() and not p.name.startswith("."))
    if not cats:
        raise NoCategories(f"no category directories under {root}")
    docs = []
    for cat in cats:
        for f in sorted(cat.iterdir()):
            if f.name.startswith(".") or not f.is_file():
                continue
            try:
                text = f.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as exc:
                raise UnreadableFile(f, str(exc)) from exc
            docs.append(RawDocument(id=f"{cat.name}/{f.name}", text=text, category=cat.name))
    docs.sort(key=lambda d: d.id)
    return docs


def _itemset_key(items) -> str:
    return ",".join(items)


def dumps_model(model: Model) -> str:
    priors = model.priors
    out = [
        f"{MAGIC} {VERSION}",
        f"vocab {model.vocabulary_size}",
        f"config min_sup {model.min_sup!r}",
        f"config min_conf {model.min_conf!r}",
        f"config k {model.transaction_size_k}",
        f"config prior_source {model.prior_source}",
    ]
    for c in model.categories:
        out.append(f"category {c.category} {c.n_wordsets} {priors[c.category]:.10g}")
        out.append(f"documents {c.n_documents}")
        for items in sorted(c.occurrence):
            out.append(f"{_itemset_key(items)} {c.occurrence[items]}")
    out.append("attribution")
    for items in sorted(model.attribution):
        out.append(f"{_itemset_key(items)} {model.attribution[items]}")
    return "\n".join(out) + "\n"


def _parse_items(text: str, lineno: int) -> tuple[str, ...]:
    items = tuple(text.split(","))
    if any(not w or w != w.strip() for w in items):
        raise ParseError(lineno, f"malformed itemset {text!r}")
    if list(items) != sorted(set(items)):
        raise ParseError(lineno, f"itemset not sorted or has duplicates: {text!r}")
    return items


def _int(text: str, lineno: int, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(lineno, f"{what} is not an integer: {text!r}") from None
    if value < 0:
        raise ParseError(lineno, f"{what} is negative")
    return value


def loads_model(text: str) -> Model:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith(MAGIC + " "):
        raise BadMagic("not an assoc-nb-model file")
    version = lines[0][len(MAGIC) + 1:]
    if version != VERSION:
        raise VersionMismatch(f"unsupported model version {version!r}")

    config: dict[str, str] = {}
    categories: list[dict] = []
    attribution: dict[tuple[str, ...], str] = {}
    attribution_lines: dict[tuple[str, ...], int] = {}
    vocab_size = vocab_line = None
    section = "header"
    for lineno, line in enumerate(lines[1:], start=2):
        head, _, rest = line.partition(" ")
        if section == "header" and head == "vocab" and vocab_size is None:
            vocab_size = _int(rest, lineno, "vocab")
            vocab_line = lineno
        elif section == "header" and head == "config":
            key, _, value = rest.partition(" ")
            if key not in ("min_sup", "min_conf", "k", "prior_source") or not value:
                raise ParseError(lineno, f"bad config line {line!r}")
            config[key] = value
        elif section in ("header", "category") and head == "category":
            parts = rest.rsplit(" ", 2)
            if len(parts) != 3 or not parts[0]:
                raise ParseError(lineno, f"bad category line {line!r}")
            try:
                printed_prior = float(parts[2])
            except ValueError:
                raise ParseError(lineno, f"bad prior {parts[2]!r}") from None
            categories.append({
                "name": parts[0],
                "n": _int(parts[1], lineno, "n_wordsets"),
                "prior": printed_prior,
                "line": lineno,
                "docs": None,
                "occ": {},
            })
            section = "category"
        elif section == "category" and head == "documents" and categories[-1]["docs"] is None:
            categories[-1]["docs"] = _int(rest, lineno, "documents")
        elif section == "category" and head == "attribution" and not rest:
            section = "attribution"
        elif section == "category" and rest and "," in head:
            items = _parse_items(head, lineno)
            occ = categories[-1]["occ"]
            if items in occ:
                raise ParseError(lineno, f"duplicate itemset {head!r}")
            occ[items] = _int(rest, lineno, "n_k")
        elif section == "attribution" and rest:
            items = _parse_items(head, lineno)
            if items in attribution:
                raise ParseError(lineno, f"duplicate itemset {head!r}")
            attribution[items] = rest
            attribution_lines[items] = lineno
        else:
            raise ParseError(lineno, f"unexpected line {line!r}")

    end = len(lines)
    if vocab_size is None:
        raise ParseError(end, "missing vocab line")
    if section != "attribution":
        raise ParseError(end, "missing attribution block")
    if set(config) != {"min_sup", "min_conf", "k", "prior_source"}:
        raise ParseError(end, "incomplete config lines")
    if config["prior_source"] not in PRIOR_SOURCES:
        raise ParseError(end, f"unknown prior_source {config['prior_source']!r}")
    if len(attribution) != vocab_size:
        raise ParseError(vocab_line, f"vocab says {vocab_size} itemsets, attribution lists {len(attribution)}")
    names = {c["name"] for c in categories}
    for items, owner in attribution.items():
        if owner not in names:
            raise ParseError(attribution_lines[items], f"attribution to unknown category {owner!r}")

    stats = []
    for c in categories:
        owned = sum(1 for owner in attribution.values() if owner == c["name"])
        if owned != c["n"]:
            raise ParseError(c["line"], f"{c['name']} claims {c['n']} word sets, attribution gives {owned}")
        stats.append(CategoryStats(c["name"], c["n"], c["occ"], c["docs"] or 0))

    try:
        model = Model(
            categories=tuple(stats),
            vocabulary=tuple(sorted(attribution)),
            attribution=attribution,
            min_sup=float(config["min_sup"]),
            min_conf=float(config["min_conf"]),
            transaction_size_k=int(config["k"]),
            prior_source=config["prior_source"],
        )
    except ValueError as exc:
        raise ParseError(end, str(exc)) from None
    priors = model.priors
    for c in categories:
        if f"{priors[c['name']]:.10g}" != f"{c['prior']:.10g}":
            raise ParseError(c["line"], f"prior {c['prior']} disagrees with counts ({priors[c['name']]:.10g})")
    return model


def save_model(model: Model, path: str | Path) -> None:
    Path(path).write_text(dumps_model(model), encoding="utf-8", newline="\n")


def load_model(path: str | Path) -> Model:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UnreadableFile(path, str(exc)) from exc
    return loads_model(text)


def parse_transactions(text: str) -> list[tuple[str, ...]]:
    """Comma-separated items per line; blank lines skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        items = [w.strip() for w in line.split(",")]
        if any(not w for w in items):
            raise ParseError(lineno, f"empty item in {line!r}")
        out.append(tuple(items))
    return out


def read_transactions(path: str | Path) -> list[tuple[str, ...]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UnreadableFile(path, str(exc)) from exc
    return parse_transactions(text)


def format_itemsets(levels: Iterable[Iterable[Itemset]] | MiningResult) -> str:
    if isinstance(levels, MiningResult):
        levels = levels.levels
    lines = []
    for level in levels:
        for s in sorted(level, key=lambda s: s.items):
            lines.append(f"{_itemset_key(s.items)}\t{s.support_count}")
    return "".join(line + "\n" for line in lines)


def parse_itemsets(text: str) -> tuple[tuple[Itemset, ...], ...]:
    """Inverse of :func:`format_itemsets`; returns the levels."""
    levels: dict[int, list[Itemset]] = {}
    last_key = None
    for lineno, line in enumerate(text.split("\n")[:-1] if text.endswith("\n") else text.split("\n"), start=1):
        items_text, sep, count_text = line.partition("\t")
        if not sep:
            raise ParseError(lineno, f"missing tab in {line!r}")
        items = _parse_items(items_text, lineno)
        key = (len(items), items)
        if last_key is not None and key <= last_key:
            raise ParseError(lineno, "itemsets out of canonical order")
        last_key = key
        levels.setdefault(len(items), []).append(Itemset(items, _int(count_text, lineno, "support count")))
    if levels and sorted(levels) != list(range(1, max(levels) + 1)):
        raise ParseError(lineno, "missing itemset level")
    return tuple(tuple(levels[k]) for k in sorted(levels))


def levels_to_result(levels, min_sup: float, threshold: int, db_size: int) -> MiningResult:
    return MiningResult(
        levels=tuple(tuple(level) for level in levels),
        maximal=tuple(maximal_itemsets(levels)),
        min_sup=min_sup,
        support_threshold_count=threshold,
        db_size=db_size,
    )
