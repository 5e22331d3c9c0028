"""Text categorization with Apriori word sets and an m-estimate Naive Bayes."""
from .apriori import (
    EmptyDatabase,
    InvalidSupport,
    Itemset,
    MiningResult,
    Rule,
    TransactionDB,
    count_support,
    generate_rules,
    join,
    mine,
    prune,
    support_threshold,
)
from .classify import ClassificationResult, MatchRecord, classify, find_matches, log_score, score
from .model import CategoryStats, Model, NoFeatures, UnknownCategory, conditional, prior, train
from .preprocess import (
    Discarded,
    EmptyDocument,
    PreprocessConfig,
    RawDocument,
    TokenStream,
    Transaction,
    build_transactions,
    extract_transaction,
    merge_plurals,
    remove_stopwords,
    tokenize,
)
from .store import load_corpus, load_model, save_model

__version__ = "0.1.0"
