"""Small reference datasets for tests and demos.

* ``toy_transactions`` - nine market-basket transactions over items I1..I5.
* ``text_transactions`` - five documents already reduced to keyword sets.
* ``CONTROL_ABSTRACT`` / ``SPANNER_ABSTRACT`` - two unlabeled abstracts.
* ``reference_model`` - a three-category word-set model (computer science,
  electrical & electronic, mechanical) with 43/47/17 word sets.  Only 42 sets
  have known counts, so each category is padded with placeholder sets whose
  words never occur in real text.
"""
from __future__ import annotations

from .model import CategoryStats, Model

__all__ = [
    "CS",
    "EE",
    "ME",
    "toy_transactions",
    "text_transactions",
    "CONTROL_ABSTRACT",
    "SPANNER_ABSTRACT",
    "WORD_SET_TABLE",
    "EXTRA_WORD_SETS",
    "reference_model",
]

CS = "Computer Science"
EE = "Electrical & Electronic"
ME = "Mechanical"


def toy_transactions() -> list[tuple[str, ...]]:
    return [
        ("I1", "I2", "I5"),
        ("I2", "I4"),
        ("I2", "I3"),
        ("I1", "I2", "I4"),
        ("I1", "I3"),
        ("I2", "I3"),
        ("I1", "I3"),
        ("I1", "I2", "I3", "I5"),
        ("I1", "I2", "I3"),
    ]


def text_transactions() -> list[tuple[str, ...]]:
    return [
        ("algorithm", "network", "graph", "multicast", "processor", "system", "parallel"),
        ("cluster", "network", "design", "message", "processor", "system", "framework"),
        ("algorithm", "software", "graph", "method", "session", "analysis", "parallel"),
        ("switch", "load", "design", "power", "path", "system", "timing"),
        ("cable", "load", "energy", "power", "current", "motor", "signal"),
    ]


CONTROL_ABSTRACT = (
    "This paper discusses feedback control problems like regularization, "
    "noninteraction and linearization, for affine nonlinear singular systems. "
    "First, based on the constrained dynamic algorithm in affine nonlinear "
    "systems, an algorithm is introduced. By using such an algorithm, "
    "sufficient and necessary conditions are derived for the solvability of "
    "regularization problem. Then, another algorithm is proposed, based on "
    "which a sequence of integers can be defined for the system. It is shown "
    "that under some mild conditions, the dynamic part of singular systems can "
    "be linearized by using a regular feedback. Finally, an example is "
    "provided to illustrate the main results."
)

SPANNER_ABSTRACT = (
    "Given a connected graph G = (V, E) with n vertices and m edges, the "
    "distance between two vertices in G is the weight of the shortest path "
    "between them. A subgraph G' is a t-spanner (an approximate t-spanner) of "
    "G if, for every u, v in V, the distance between u and v in G' is at most "
    "t (f(t)) times longer than the distance in G, where f(t) is a polynomial "
    "function of variable t and t <= f(t) < n. In this paper parallel "
    "algorithms for finding approximate t-spanners on both unweighted graphs "
    "and weighted graphs are given. If G is an unweighted graph, our algorithm "
    "requires O(n^2 log n) time and M(n) processors, and the spanner generated "
    "has size of O(n^(1+1/t)) and factor of O(t^(1+1/t)); otherwise our "
    "algorithm requires O(n^2 log n) time and O(n^2) processors."
)

# (word set, category it was found in, number of documents containing it)
WORD_SET_TABLE: list[tuple[tuple[str, ...], str, int]] = [
    (("graph", "algorithm"), CS, 5),
    (("technology", "processor", "system"), CS, 4),
    (("design", "system"), CS, 4),
    (("message-passing", "system"), CS, 4),
    (("oscillation", "system", "power", "model"), EE, 3),
    (("distribution", "load", "feeder", "system"), EE, 3),
    (("multicast", "message-passing", "system"), CS, 3),
    (("destination", "multicast", "approach"), CS, 3),
    (("system", "result", "model"), EE, 3),
    (("power", "control", "system"), EE, 3),
    (("problem", "graph", "algorithm"), CS, 3),
    (("message", "communication", "system"), CS, 3),
    (("stability", "system", "power"), EE, 3),
    (("multidestination", "message-passing", "system"), CS, 3),
    (("customer", "feeder"), EE, 3),
    (("instability", "experiment"), ME, 3),
    (("virtual", "routing"), CS, 3),
    (("device", "power"), EE, 3),
    (("block", "power"), EE, 3),
    (("voltage", "power"), EE, 3),
    (("shear", "stress"), ME, 3),
    (("generator", "test"), EE, 3),
    (("current", "signal"), EE, 3),
    (("stability", "control", "system", "power", "model", "strategy", "device", "oscillation"), EE, 2),
    (("change", "distribution", "system", "load", "customer", "temperature", "feeder"), EE, 2),
    (("pinout", "framework", "processor", "technology", "system", "design"), CS, 2),
    (("approach", "message-passing", "multicast", "destination", "system"), CS, 2),
    (("broadcast", "message", "multicast", "approach", "destination"), CS, 2),
    (("distribution", "power", "system", "load", "feeder"), EE, 2),
    (("multidestination", "communication", "message", "system", "message-passing"), CS, 2),
    (("power", "damping", "model", "oscillation", "system"), EE, 2),
    (("irregular", "multicast", "algorithm", "system"), CS, 2),
    (("algorithm", "message-passing", "multicast", "system"), CS, 2),
    (("effect", "system", "power", "load"), EE, 2),
    (("multicast", "network", "message", "algorithm"), CS, 2),
    (("shear", "experiment", "rate", "stress"), ME, 2),
    (("sequential", "generator", "circuit", "test"), EE, 2),
]

# word sets that only show up in the matching tables of the two abstracts;
# counts follow from their listed probabilities (3/150 -> 2, 3/154 -> 2)
EXTRA_WORD_SETS: list[tuple[tuple[str, ...], str, int]] = [
    (("dynamic", "system", "interaction"), EE, 2),
    (("multidestination", "based", "multicast", "system"), CS, 2),
    (("using", "parameter", "system"), EE, 2),
    (("condition", "algorithm"), CS, 2),
    (("time", "bound", "algorithm"), CS, 2),
]

_WORD_SET_TOTALS = {CS: 43, EE: 47, ME: 17}
_DOCUMENTS = {CS: 47, EE: 48, ME: 20}


def reference_model(prior_source: str = "wordsets") -> Model:
    rows = [(tuple(sorted(items)), cat, n) for items, cat, n in WORD_SET_TABLE + EXTRA_WORD_SETS]
    tags = {CS: "cs", EE: "ee", ME: "me"}
    for cat, total in _WORD_SET_TOTALS.items():
        have = sum(1 for _, c, _ in rows if c == cat)
        for i in range(total - have):
            rows.append(((f"{tags[cat]}-filler-{i:02d}a", f"{tags[cat]}-filler-{i:02d}b"), cat, 2))

    attribution = {items: cat for items, cat, _ in rows}
    if len(attribution) != len(rows):
        raise AssertionError("duplicate word set in reference table")
    categories = tuple(
        CategoryStats(
            category=cat,
            n_wordsets=_WORD_SET_TOTALS[cat],
            occurrence={items: n for items, c, n in rows if c == cat},
            n_documents=_DOCUMENTS[cat],
        )
        for cat in (CS, EE, ME)
    )
    return Model(
        categories=categories,
        vocabulary=tuple(sorted(attribution)),
        attribution=attribution,
        min_sup=0.02,
        min_conf=0.75,
        transaction_size_k=13,
        prior_source=prior_source,
    )
