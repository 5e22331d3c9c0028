"""Command-line interface: ``assocnb mine|train|classify|eval|info``.

Exit codes: 0 success, 2 bad input (parse or corpus errors), 3 nothing to
mine or no features, 4 document unclassifiable, 5 document has no frequent
words.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from . import apriori, store
from .classify import MODES, classify, format_report
from .model import PRIOR_SOURCES, Model, NoFeatures, train
from .preprocess import EmptyDocument, PreprocessConfig, RawDocument, build_transactions, load_stopwords

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EMPTY = 3
EXIT_UNCLASSIFIABLE = 4
EXIT_EMPTY_DOCUMENT = 5

UNKNOWN = "unknown-category"
UNCLASSIFIABLE = "UNCLASSIFIABLE"


@dataclass(frozen=True)
class RunConfig:
    min_sup: float = 0.02
    min_conf: float = 0.75
    transaction_size_k: int = 13
    stopword_path: str | None = None
    mode: str = "plain"
    prior_source: str = "wordsets"

    def preprocess(self) -> PreprocessConfig:
        kwargs = {"transaction_size_k": self.transaction_size_k}
        if self.stopword_path:
            kwargs["stopwords"] = load_stopwords(self.stopword_path)
        return PreprocessConfig(**kwargs)


def _fraction(text: str) -> float:
    value = float(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"{text} is not in (0, 1]")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    d = RunConfig()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--min-sup", type=_fraction, default=d.min_sup,
                        help="minimum support as a fraction of transactions (default: %(default)s)")
    common.add_argument("--min-conf", type=_fraction, default=d.min_conf,
                        help="minimum rule confidence (default: %(default)s)")
    common.add_argument("--k", type=_positive, default=d.transaction_size_k,
                        help="frequent words kept per training document (default: %(default)s)")
    common.add_argument("--stopwords", metavar="PATH", default=None,
                        help="stop-word file, one word per line (default: bundled English list)")
    common.add_argument("--mode", choices=MODES, default=d.mode,
                        help="score matches plainly or weighted by matched fraction (default: %(default)s)")
    common.add_argument("--prior-source", choices=PRIOR_SOURCES, default=d.prior_source,
                        help="derive priors from word-set or document counts (default: %(default)s)")
    common.add_argument("--model", metavar="PATH", help="model file")
    common.add_argument("--out", metavar="PATH", help="output file")

    parser = argparse.ArgumentParser(prog="assocnb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("mine", parents=[common], help="mine frequent itemsets and rules from a transaction file")
    p.add_argument("input", help="transaction file, comma-separated items per line")
    p = sub.add_parser("train", parents=[common], help="train a model on a corpus directory")
    p.add_argument("corpus", help="directory with one subdirectory per category")
    p = sub.add_parser("classify", parents=[common], help="classify one document")
    p.add_argument("doc", help="text file to classify")
    p = sub.add_parser("eval", parents=[common], help="evaluate a model on a labeled corpus")
    p.add_argument("corpus", help="directory with one subdirectory per category")
    sub.add_parser("info", parents=[common], help="print the summary of a saved model")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(args.min_sup, args.min_conf, args.k, args.stopwords, args.mode, args.prior_source)


def _err(msg: str) -> None:
    print(f"assocnb: {msg}", file=sys.stderr)


def format_mining(result: apriori.MiningResult, rules: list[apriori.Rule]) -> str:
    lines = [
        f"# transactions {result.db_size} min_sup {result.min_sup} "
        f"min_count {result.support_threshold_count}"
    ]
    lines += store.format_itemsets(result).splitlines()
    for s in sorted(result.maximal, key=lambda s: (len(s), s.items)):
        lines.append(f"maximal {s}\t{s.support_count}")
    for r in rules:
        lines.append(f"rule {r.antecedent} => {r.consequent}\tsupport {r.support:.4f}\tconfidence {r.confidence:.4f}")
    return "\n".join(lines) + "\n"


def cmd_mine(args) -> int:
    cfg = _config(args)
    try:
        rows = store.read_transactions(args.input)
    except store.StoreError as exc:
        _err(str(exc))
        return EXIT_INPUT
    db = apriori.TransactionDB(rows)
    try:
        result = apriori.mine(db, cfg.min_sup)
    except apriori.EmptyDatabase as exc:
        _err(str(exc))
        return EXIT_EMPTY
    rules = apriori.generate_rules(result, cfg.min_conf, db)
    if args.out:
        Path(args.out).write_text(store.format_itemsets(result), encoding="utf-8", newline="\n")
    sys.stdout.write(format_mining(result, rules))
    return EXIT_OK


def format_model_summary(model: Model) -> str:
    lines = []
    for c in model.categories:
        lines.append(f"wordsets {c.category} {c.n_wordsets}")
    lines.append(f"vocabulary {model.vocabulary_size}")
    priors = model.priors
    for name in model.category_names:
        lines.append(f"prior {name} {priors[name]:.3f}")
    other = "documents" if model.prior_source == "wordsets" else "wordsets"
    try:
        alt = model.prior_table(other)
    except Exception:
        alt = None
    if alt and any(abs(alt[n] - priors[n]) > 0.01 for n in priors):
        for name in model.category_names:
            lines.append(f"prior-{other} {name} {alt[name]:.3f}")
    return "\n".join(lines) + "\n"


def cmd_train(args) -> int:
    cfg = _config(args)
    if not args.out:
        _err("train needs --out")
        return EXIT_INPUT
    try:
        docs = store.load_corpus(args.corpus)
        pre = cfg.preprocess()
    except (store.StoreError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    transactions, dropped = build_transactions(docs, pre)
    categories = sorted({d.category for d in docs})
    try:
        model = train(
            transactions, cfg.min_sup, cfg.min_conf,
            categories=categories,
            transaction_size_k=cfg.transaction_size_k,
            prior_source=cfg.prior_source,
        )
    except NoFeatures as exc:
        _err(str(exc))
        return EXIT_EMPTY
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    store.save_model(model, args.out)
    out = [f"documents {len(docs)}", f"used {len(transactions)}", f"discarded {len(dropped)}"]
    sys.stdout.write("\n".join(out) + "\n" + format_model_summary(model))
    return EXIT_OK


def _load_model(args) -> Model | None:
    if not args.model:
        _err("--model is required")
        return None
    try:
        model = store.load_model(args.model)
    except store.StoreError as exc:
        _err(str(exc))
        return None
    if args.prior_source != model.prior_source:
        model = model.with_prior_source(args.prior_source)
    return model


def cmd_info(args) -> int:
    model = _load_model(args)
    if model is None:
        return EXIT_INPUT
    sys.stdout.write(format_model_summary(model))
    return EXIT_OK


def cmd_classify(args) -> int:
    cfg = _config(args)
    model = _load_model(args)
    if model is None:
        return EXIT_INPUT
    try:
        text = Path(args.doc).read_text(encoding="utf-8")
        pre = cfg.preprocess()
    except (OSError, UnicodeDecodeError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    try:
        result = classify(RawDocument(args.doc, text), model, pre, cfg.mode)
    except EmptyDocument as exc:
        _err(str(exc))
        return EXIT_EMPTY_DOCUMENT
    sys.stdout.write(format_report(result))
    return EXIT_UNCLASSIFIABLE if result.unclassifiable else EXIT_OK


def evaluate(model: Model, docs, pre: PreprocessConfig, mode: str = "plain") -> dict:
    """Confusion counts keyed by (true label, predicted label)."""
    known = set(model.category_names)
    confusion: Counter = Counter()
    empty = 0
    for doc in docs:
        truth = doc.category if doc.category in known else UNKNOWN
        try:
            result = classify(doc, model, pre, mode)
            predicted = result.winner or UNCLASSIFIABLE
        except EmptyDocument:
            empty += 1
            predicted = UNCLASSIFIABLE
        confusion[truth, predicted] += 1
    return {"confusion": confusion, "empty": empty, "n": len(docs)}


def format_evaluation(model: Model, ev: dict) -> str:
    confusion = ev["confusion"]
    rows = list(model.category_names)
    if any(t == UNKNOWN for t, _ in confusion):
        rows.append(UNKNOWN)
    cols = list(model.category_names) + [UNCLASSIFIABLE]
    n = ev["n"]
    correct = sum(confusion[c, c] for c in model.category_names)
    unclassifiable = sum(v for (t, p), v in confusion.items() if p == UNCLASSIFIABLE)
    lines = [
        f"documents {n}",
        f"accuracy {correct / n if n else 0.0:.4f}",
        f"unclassifiable {unclassifiable}",
        f"unclassifiable-rate {unclassifiable / n if n else 0.0:.4f}",
        f"empty {ev['empty']}",
    ]
    for r in rows:
        total = sum(confusion[r, c] for c in cols)
        hit = confusion[r, r] if r != UNKNOWN else 0
        acc = hit / total if total else 0.0
        lines.append(f"accuracy-{r} {acc:.4f} {hit}/{total}")
    lines.append("confusion\t" + "\t".join(cols))
    for r in rows:
        lines.append(r + "\t" + "\t".join(str(confusion[r, c]) for c in cols))
    return "\n".join(lines) + "\n"


def cmd_eval(args) -> int:
    cfg = _config(args)
    model = _load_model(args)
    if model is None:
        return EXIT_INPUT
    try:
        docs = store.load_corpus(args.corpus)
        pre = cfg.preprocess()
    except (store.StoreError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    sys.stdout.write(format_evaluation(model, evaluate(model, docs, pre, cfg.mode)))
    return EXIT_OK


COMMANDS = {"mine": cmd_mine, "train": cmd_train, "classify": cmd_classify, "eval": cmd_eval, "info": cmd_info}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
