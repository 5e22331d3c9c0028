import itertools
import string

import pytest
from hypothesis import given, strategies as st

from assocnb.datasets import CONTROL_ABSTRACT, SPANNER_ABSTRACT
from assocnb.preprocess import (
    Discarded,
    EmptyDocument,
    PreprocessConfig,
    RawDocument,
    TokenStream,
    extract_transaction,
    load_stopwords,
    merge_plurals,
    remove_stopwords,
    tokenize,
    word_frequencies,
)

CONTROL_WORDS = {
    "feedback", "problem", "regularization", "affine", "nonlinear", "singular",
    "system", "based", "dynamic", "algorithm", "using", "condition",
}
SPANNER_WORDS = {
    "graph", "vertices", "distance", "t-spanner", "approximate", "time",
    "algorithm", "unweighted", "require", "log", "processor",
}


def walk_tokens(text):
    """Character-walk tokenizer used as an oracle for the regex version."""
    out, cur = [], []
    for i, ch in enumerate(text):
        if ch.isalnum():
            cur.append(ch)
        elif ch == "-" and cur and i + 1 < len(text) and text[i + 1].isalnum():
            cur.append(ch)
        else:
            if cur:
                out.append("".join(cur).lower())
            cur = []
    if cur:
        out.append("".join(cur).lower())
    return out


def stream(*tokens):
    return TokenStream(tuple(tokens), tuple(range(len(tokens))))


def test_tokenize_empty():
    assert tokenize("").tokens == ()
    assert tokenize("").positions == {}


def test_tokenize_hyphenated_fragment():
    text = "a t-spanner (an approximate t-spanner) of G"
    expected = ["a", "t-spanner", "an", "approximate", "t-spanner", "of", "g"]
    assert walk_tokens(text) == expected
    ts = tokenize(text)
    assert list(ts.tokens) == expected
    assert ts.positions == {"a": 0, "t-spanner": 1, "an": 2, "approximate": 3, "of": 5, "g": 6}


def test_tokenize_keeps_compound_word():
    assert list(tokenize("message-passing, system").tokens) == ["message-passing", "system"]


@pytest.mark.parametrize("text, expected", [
    ("-lead trail-", ["lead", "trail"]),
    ("a--b", ["a", "b"]),
    ("x_y", ["x", "y"]),
    ("O(n^2 log n)", ["o", "n", "2", "log", "n"]),
    ("Über-Größe", ["über-größe"]),
])
def test_tokenize_edges(text, expected):
    assert list(tokenize(text).tokens) == expected == walk_tokens(text)


ALPHABET = string.ascii_letters + string.digits + " -_.,;:()'\"\n\t!?éÅ"


@given(st.text(alphabet=ALPHABET, max_size=80))
def test_tokenize_matches_walk_oracle(text):
    ts = tokenize(text)
    assert list(ts.tokens) == walk_tokens(text)
    for tok in ts.tokens:
        assert all(c.isalnum() or c == "-" for c in tok)
        assert not tok.startswith("-") and not tok.endswith("-")
    firsts = sorted(ts.positions.values())
    assert [ts.tokens[i] for i in firsts] == list(dict.fromkeys(ts.tokens))


def test_remove_stopwords_set_difference():
    cfg = PreprocessConfig(stopwords={"the", "is"})
    out = remove_stopwords(stream("the", "graph", "is", "large"), cfg)
    assert out.tokens == ("graph", "large")
    assert out.indices == (1, 3)


def test_remove_stopwords_all():
    cfg = PreprocessConfig(stopwords={"the", "is"})
    assert remove_stopwords(stream("the", "is", "the"), cfg).tokens == ()


def test_merge_plurals_basic():
    assert merge_plurals(stream("graph", "graphs", "graphs")).tokens == ("graph",) * 3
    assert merge_plurals(stream("systems")).tokens == ("systems",)
    assert merge_plurals(stream("class", "classes")).tokens == ("class", "class")


@pytest.mark.parametrize("stem", ["graph", "class", "system", "it"])
def test_merge_plurals_enumerated(stem):
    forms = [stem, stem + "s", stem + "es"]
    for counts in itertools.product(range(3), repeat=3):
        toks = [f for f, c in zip(forms, counts) for _ in range(c)]
        got = merge_plurals(stream(*toks)).tokens
        if counts[0]:
            assert got == (stem,) * len(toks)
        else:
            assert got == tuple(toks)


def test_merge_plurals_lexicon():
    s = stream("processors", "processors", "vertices")
    assert merge_plurals(s).tokens == s.tokens
    assert merge_plurals(s, {"processor"}).tokens == ("processor", "processor", "vertices")


@given(st.lists(st.sampled_from(["a", "as", "ass", "asses", "graph", "graphs", "graphes", "s", "ss", "sss"]), max_size=12))
def test_merge_plurals_idempotent(tokens):
    once = merge_plurals(stream(*tokens))
    assert merge_plurals(once) == once


def test_load_stopwords(tmp_path):
    p = tmp_path / "stop.txt"
    p.write_text("# comment\nThe\n\n  of \n#not\n", encoding="utf-8")
    assert load_stopwords(p) == {"the", "of"}
    bundled = load_stopwords()
    assert {"the", "and", "between", "g", "2"} <= bundled
    assert not {"system", "using", "based", "algorithm"} & bundled


def test_control_abstract_frequent_words(ref_model):
    cfg = PreprocessConfig(lexicon=ref_model.words())
    t = extract_transaction(RawDocument("ctl", CONTROL_ABSTRACT), cfg)
    assert set(t.words) == CONTROL_WORDS
    assert all(t.counts[w] >= 2 for w in t.words)
    assert t.counts["algorithm"] == 4 and t.counts["system"] == 4


def test_control_abstract_without_lexicon():
    # "conditions" has no singular in the text, so only the lexicon folds it
    t = extract_transaction(RawDocument("ctl", CONTROL_ABSTRACT), PreprocessConfig())
    assert set(t.words) == CONTROL_WORDS - {"condition"} | {"conditions"}


def test_spanner_abstract_frequent_words(ref_model):
    cfg = PreprocessConfig(lexicon=ref_model.words())
    t = extract_transaction(RawDocument("sp", SPANNER_ABSTRACT), cfg)
    # "require" never appears in singular form and is not a word-set word
    assert set(t.words) == SPANNER_WORDS - {"require"} | {"requires"}
    t = extract_transaction(RawDocument("sp", SPANNER_ABSTRACT), PreprocessConfig(lexicon=ref_model.words() | {"require"}))
    assert set(t.words) == SPANNER_WORDS


def _doc_with(n_frequent, extra_once=3):
    words = [f"word{chr(97 + i)}" for i in range(n_frequent)]
    text = " ".join(words * 2 + [f"single{i}" for i in range(extra_once)])
    return RawDocument("d", text, "cs")


def test_training_discards_short_documents():
    with pytest.raises(Discarded) as exc:
        extract_transaction(_doc_with(12), PreprocessConfig(), training=True)
    assert exc.value.n_frequent == 12 and exc.value.required == 13
    t = extract_transaction(_doc_with(13), PreprocessConfig(), training=True)
    assert len(t.words) == 13


def test_training_selection_by_frequency_then_position():
    text = "zeta zeta zeta alpha alpha beta beta gamma gamma gamma gamma delta delta"
    cfg = PreprocessConfig(stopwords=frozenset(), transaction_size_k=3)
    t = extract_transaction(RawDocument("d", text, "x"), cfg, training=True)
    # gamma (4), zeta (3), then alpha beats beta and delta by position
    assert t.words == ("alpha", "gamma", "zeta")


def test_classification_is_uncapped_and_empty_raises():
    cfg = PreprocessConfig(transaction_size_k=3)
    t = extract_transaction(_doc_with(8), cfg)
    assert len(t.words) == 8
    with pytest.raises(EmptyDocument):
        extract_transaction(RawDocument("d", "the of and the of and"), cfg)
    with pytest.raises(EmptyDocument):
        extract_transaction(RawDocument("d", ""), cfg)


@given(st.lists(st.sampled_from(["graph", "graphs", "node", "nodes", "edge", "path", "paths", "cycle"]), min_size=0, max_size=40))
def test_transaction_words_are_frequent(tokens):
    cfg = PreprocessConfig(stopwords=frozenset(), transaction_size_k=2)
    doc = RawDocument("d", " ".join(tokens), "x")
    counts, _ = word_frequencies(doc.text, cfg)
    try:
        t = extract_transaction(doc, cfg, training=True)
    except Discarded:
        assert sum(1 for c in counts.values() if c >= 2) < 2
        return
    assert len(t.words) == 2
    assert list(t.words) == sorted(t.words)
    assert all(counts[w] >= 2 for w in t.words)
    # reformatting the text does not change the selection
    again = extract_transaction(RawDocument("d", ",\n ".join(tokens), "x"), cfg, training=True)
    assert again.words == t.words


def test_config_validation():
    with pytest.raises(ValueError):
        PreprocessConfig(transaction_size_k=0)
    with pytest.raises(ValueError):
        PreprocessConfig(min_word_frequency=1)
    with pytest.raises(ValueError):
        RawDocument("", "text")
