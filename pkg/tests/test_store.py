import pytest

from assocnb.apriori import TransactionDB, mine
from assocnb.datasets import reference_model, toy_transactions
from assocnb.model import conditional, train
from assocnb.preprocess import build_transactions, PreprocessConfig
from assocnb.store import (
    BadMagic,
    MissingRoot,
    NoCategories,
    ParseError,
    UnreadableFile,
    VersionMismatch,
    dumps_model,
    format_itemsets,
    load_corpus,
    load_model,
    loads_model,
    parse_itemsets,
    parse_transactions,
    save_model,
)
from assocnb.synthetic import generate_corpus

MINIMAL = """\
assoc-nb-model v1
vocab 2
config min_sup 0.02
config min_conf 0.75
config k 13
config prior_source wordsets
category ham 1 0.5
documents 3
gear,shaft 1
category spam 1 0.5
documents 4
pump,valve 1
attribution
gear,shaft ham
pump,valve spam
"""


def test_load_corpus(tmp_path):
    (tmp_path / "cs").mkdir()
    (tmp_path / "ee").mkdir()
    (tmp_path / ".git").mkdir()
    (tmp_path / "cs" / "b.txt").write_text("beta", encoding="utf-8")
    (tmp_path / "cs" / "a.txt").write_text("alpha", encoding="utf-8")
    (tmp_path / "cs" / ".hidden").write_text("x", encoding="utf-8")
    (tmp_path / "ee" / "c.txt").write_text("gamma", encoding="utf-8")
    (tmp_path / "stray.txt").write_text("ignored", encoding="utf-8")
    docs = load_corpus(tmp_path)
    assert [(d.id, d.category, d.text) for d in docs] == [
        ("cs/a.txt", "cs", "alpha"), ("cs/b.txt", "cs", "beta"), ("ee/c.txt", "ee", "gamma")]


def test_load_corpus_errors(tmp_path):
    with pytest.raises(MissingRoot):
        load_corpus(tmp_path / "nope")
    with pytest.raises(NoCategories):
        load_corpus(tmp_path)
    (tmp_path / "cs").mkdir()
    (tmp_path / "cs" / "bad.txt").write_bytes(b"\xff\xfe\xfa")
    with pytest.raises(UnreadableFile) as exc:
        load_corpus(tmp_path)
    assert exc.value.path.name == "bad.txt"


def test_bundled_sample_corpus():
    from pathlib import Path

    root = Path(__file__).resolve().parents[1] / "data" / "sample_corpus"
    docs = load_corpus(root)
    assert len(docs) == 60
    assert sorted({d.category for d in docs}) == ["computer-science", "electrical", "mechanical"]
    # the shipped files are exactly what the seeded generator produces
    assert [(d.id, d.text) for d in docs] == [(d.id, d.text) for d in generate_corpus(seed=0)]


def test_reference_round_trip(tmp_path, ref_model):
    path = tmp_path / "m.txt"
    save_model(ref_model, path)
    loaded = load_model(path)
    assert loaded == ref_model
    assert dumps_model(loaded) == path.read_text(encoding="utf-8")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[:2] == ["assoc-nb-model v1", "vocab 107"]
    assert "category Computer Science 43 0.4018691589" in lines
    assert "algorithm,graph 5" in lines


def test_trained_round_trip(tmp_path):
    docs = generate_corpus({"computer-science": 8, "electrical": 8, "mechanical": 8}, seed=2)
    ts, _ = build_transactions(docs, PreprocessConfig())
    model = train(ts, categories=["computer-science", "electrical", "mechanical"], prior_source="documents")
    text = dumps_model(model)
    again = loads_model(text)
    assert again == model
    assert again.priors == model.priors
    assert dumps_model(again) == text


def test_minimal_model_file():
    model = loads_model(MINIMAL)
    assert model.vocabulary == (("gear", "shaft"), ("pump", "valve"))
    assert model.priors == {"ham": 0.5, "spam": 0.5}
    # (n_k + 1) / (n + |vocabulary|) with n = 1 and |vocabulary| = 2
    assert conditional(("gear", "shaft"), "ham", model) == pytest.approx(2 / 3)
    assert conditional(("pump", "valve"), "ham", model) == pytest.approx(1 / 3)
    assert conditional(("pump", "valve"), "spam", model) == pytest.approx(2 / 3)
    assert conditional(("gear", "shaft"), "spam", model) == pytest.approx(1 / 3)
    assert dumps_model(model) == MINIMAL


@pytest.mark.parametrize("text, error", [
    ("assoc-nb-model v2\nvocab 0\n", VersionMismatch),
    ("something else\n", BadMagic),
    ("", BadMagic),
])
def test_header_errors(text, error):
    with pytest.raises(error):
        loads_model(text)


@pytest.mark.parametrize("old, new, line", [
    ("documents 3", "documents three", 8),
    ("gear,shaft 1", "gear,shaft", 9),
    ("pump,valve 1", "valve,pump 1", 12),
    ("vocab 2", "vocab 3", 2),
    ("category ham 1 0.5", "category ham 1 0.7", 7),
    ("config k 13", "config kk 13", 5),
    ("gear,shaft ham", "gear,shaft nobody", 14),
])
def test_parse_errors_carry_line(old, new, line):
    with pytest.raises(ParseError) as exc:
        loads_model(MINIMAL.replace(old, new, 1))
    assert exc.value.line == line


def test_transactions_and_itemset_format(toy_db):
    text = "I1, I2 ,I5\n\nI2,I4\n"
    assert parse_transactions(text) == [("I1", "I2", "I5"), ("I2", "I4")]
    with pytest.raises(ParseError) as exc:
        parse_transactions("a,b\na,,b\n")
    assert exc.value.line == 2
    result = mine(toy_db, 2 / 9)
    out = format_itemsets(result)
    assert "I1,I2,I3\t2\n" in out and out.startswith("I1\t6\n")
    assert parse_itemsets(out) == result.levels
    assert format_itemsets(parse_itemsets(out)) == out
