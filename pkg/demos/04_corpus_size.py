"""
More documents, more word sets
==============================

Train on a seeded synthetic corpus of 60 documents, then on one of 115,
and compare the number of word sets each model keeps. The larger corpus
yields more of them; we make no claim about the ratio.
"""
from assocnb.classify import classify
from assocnb.model import train
from assocnb.preprocess import PreprocessConfig, build_transactions
from assocnb.synthetic import LARGE_SIZES, SAMPLE_SIZES, generate_corpus

config = PreprocessConfig()
for sizes in (SAMPLE_SIZES, LARGE_SIZES):
    docs = generate_corpus(sizes, seed=0)
    kept, dropped = build_transactions(docs, config)
    model = train(kept, categories=sorted(sizes))
    per_cat = ", ".join(f"{c.category} {c.n_wordsets}" for c in model.categories)
    print(f"{len(docs)} documents ({len(dropped)} too short): {model.vocabulary_size} word sets [{per_cat}]")

###############################################################################
# Held-out check: documents generated with a different seed.
test = generate_corpus({c: 10 for c in SAMPLE_SIZES}, seed=99)
hits = sum(classify(d, model, config).winner == d.category for d in test)
print(f"held-out accuracy {hits}/{len(test)}")
