"""Per-document complexity features and their exports."""

from .export import (
    CSV_HEADER,
    FeatureRow,
    read_features_jsonl,
    write_features_csv,
    write_features_jsonl,
)
from .features import (
    FEATURE_NAMES,
    FeatureVector,
    clause_ratio,
    compute_features,
    lexical_density,
    lexical_sophistication,
    mean_sentence_length,
    type_token_ratio,
)

__all__ = [
    "CSV_HEADER",
    "FEATURE_NAMES",
    "FeatureRow",
    "FeatureVector",
    "clause_ratio",
    "compute_features",
    "lexical_density",
    "lexical_sophistication",
    "mean_sentence_length",
    "read_features_jsonl",
    "type_token_ratio",
    "write_features_csv",
    "write_features_jsonl",
]
