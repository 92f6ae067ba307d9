"""Author ethnicity labels and manuscript group assignment."""

from .annotate import (
    AnnotatedArticle,
    AnnotationResult,
    ArticleAnnotation,
    annotate_corpus,
    read_annotated,
    write_annotated,
)
from .lookup import (
    CachedLookup,
    EthnicityLookup,
    HttpLookup,
    LookupCache,
    TableLookup,
    read_probability_tsv,
    write_probability_tsv,
)
from .model import (
    ENGLISH,
    ETHNICITIES,
    DecisionKind,
    EnglishDualPolicy,
    EthnicityDecision,
    EthnicityProbabilities,
    GroupLabel,
    ManuscriptGroup,
    decide_label,
    ethnic_group,
    manuscript_group,
)

__all__ = [
    "ENGLISH",
    "ETHNICITIES",
    "AnnotatedArticle",
    "AnnotationResult",
    "ArticleAnnotation",
    "CachedLookup",
    "DecisionKind",
    "EnglishDualPolicy",
    "EthnicityDecision",
    "EthnicityLookup",
    "EthnicityProbabilities",
    "GroupLabel",
    "HttpLookup",
    "LookupCache",
    "ManuscriptGroup",
    "TableLookup",
    "annotate_corpus",
    "decide_label",
    "ethnic_group",
    "manuscript_group",
    "read_annotated",
    "read_probability_tsv",
    "write_annotated",
    "write_probability_tsv",
]
