"""Seeded generator for a labeled abstract-like corpus.

Every category owns a handful of themes (groups of words that tend to be used
together).  A document picks a few themes, repeats some of their words, and
pads the result with one-off words and stop words.  Document ``i`` of a
category depends only on ``(seed, category, i)``, so a larger corpus extends
a smaller one instead of replacing it.
"""
from __future__ import annotations

import random
from pathlib import Path
from typing import Mapping

from .preprocess import RawDocument

__all__ = ["THEMES", "SAMPLE_SIZES", "LARGE_SIZES", "generate_corpus", "write_corpus"]

THEMES: dict[str, list[list[str]]] = {
    "computer-science": [
        ["graph", "algorithm", "vertex", "edge", "parallel", "complexity"],
        ["multicast", "message", "routing", "network", "destination", "broadcast"],
        ["processor", "memory", "cache", "architecture", "instruction", "pipeline"],
        ["database", "query", "index", "transaction", "storage", "schema"],
        ["compiler", "program", "language", "type", "semantic", "optimization"],
        ["learning", "classifier", "feature", "training", "data", "accuracy"],
        ["software", "design", "framework", "component", "interface", "module"],
        ["security", "protocol", "encryption", "key", "attack", "authentication"],
    ],
    "electrical": [
        ["power", "voltage", "current", "transformer", "grid", "load"],
        ["oscillation", "damping", "stability", "generator", "controller", "model"],
        ["feeder", "distribution", "customer", "outage", "reliability", "substation"],
        ["signal", "filter", "frequency", "noise", "amplifier", "spectrum"],
        ["circuit", "transistor", "gate", "chip", "fabrication", "layout"],
        ["antenna", "wireless", "channel", "modulation", "receiver", "transmitter"],
        ["motor", "drive", "inverter", "speed", "torque", "converter"],
        ["sensor", "measurement", "calibration", "instrument", "accuracy", "test"],
    ],
    "mechanical": [
        ["shear", "stress", "strain", "beam", "deformation", "material"],
        ["fluid", "flow", "turbulence", "velocity", "pressure", "viscosity"],
        ["heat", "temperature", "conduction", "convection", "thermal", "exchanger"],
        ["vibration", "frequency", "mode", "damping", "structure", "resonance"],
        ["engine", "combustion", "fuel", "emission", "cylinder", "efficiency"],
        ["fatigue", "crack", "fracture", "load", "specimen", "experiment"],
    ],
}

SHARED = ["method", "result", "approach", "analysis", "performance", "problem", "proposed", "simulation"]
FILLER = [
    "paper", "present", "study", "novel", "work", "several", "case", "range",
    "important", "general", "practical", "application", "evaluate", "develop",
    "investigate", "compare", "improve", "discuss", "obtain", "significant",
    "typical", "future", "recent", "current", "various", "specific", "efficient",
    "effective", "detailed", "existing",
]
STOP = ["the", "of", "and", "a", "in", "for", "is", "with", "to", "on", "by", "this", "are", "that"]

SAMPLE_SIZES = {"computer-science": 20, "electrical": 20, "mechanical": 20}
LARGE_SIZES = {"computer-science": 47, "electrical": 48, "mechanical": 20}


def _document(seed: int, category: str, index: int) -> str:
    rng = random.Random(f"{seed}/{category}/{index}")
    themes = THEMES[category]
    # roughly one document in twelve is too thin to make a training transaction
    n_themes = 2 if rng.random() < 1 / 12 else 3
    bag: list[str] = []
    for theme in rng.sample(themes, n_themes):
        for word in rng.sample(theme, 4):
            bag += [word] * rng.randint(2, 4)
    for word in rng.sample(SHARED, 2):
        bag += [word] * 2
    bag += rng.sample(FILLER, rng.randint(5, 9))
    rng.shuffle(bag)

    # write one repeated occurrence in plural form; the singular stays present
    seen: dict[str, int] = {}
    for i, word in enumerate(bag):
        seen[word] = seen.get(word, 0) + 1
        if seen[word] == 2 and not word.endswith("s") and rng.random() < 0.3:
            bag[i] = word + "s"

    sentences = []
    while bag:
        n = min(len(bag), rng.randint(5, 8))
        chunk, bag = bag[:n], bag[n:]
        words = []
        for w in chunk:
            if rng.random() < 0.6:
                words.append(rng.choice(STOP))
            words.append(w)
        sentence = " ".join(words)
        sentences.append(sentence[0].upper() + sentence[1:] + ".")
    return " ".join(sentences) + "\n"


def generate_corpus(sizes: Mapping[str, int] | None = None, seed: int = 0) -> list[RawDocument]:
    """Documents for each category, ``sizes[category]`` of them."""
    sizes = SAMPLE_SIZES if sizes is None else sizes
    docs = []
    for category in sorted(sizes):
        if category not in THEMES:
            raise KeyError(f"no themes for category {category!r}")
        for i in range(sizes[category]):
            docs.append(RawDocument(
                id=f"{category}/doc{i:03d}.txt",
                text=_document(seed, category, i),
                category=category,
            ))
    return docs


def write_corpus(docs, root: str | Path) -> Path:
    """Write documents as ``root/<id>``, creating category directories."""
    root = Path(root)
    for doc in docs:
        path = root / doc.id
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(doc.text, encoding="utf-8", newline="\n")
    return root
