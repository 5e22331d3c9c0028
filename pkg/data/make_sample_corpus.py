"""Regenerate data/sample_corpus (3 categories x 20 documents, seed 0)."""
import shutil
from pathlib import Path

from assocnb.synthetic import SAMPLE_SIZES, generate_corpus, write_corpus

root = Path(__file__).resolve().parent / "sample_corpus"
if root.exists():
    shutil.rmtree(root)
write_corpus(generate_corpus(SAMPLE_SIZES, seed=0), root)
print(f"wrote {root}")
