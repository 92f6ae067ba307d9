"""Article ingestion: parsing, abbreviation expansion, filtering, persistence."""

from .abbrev import DEFAULT_ABBREVIATIONS, normalize_abbreviations
from .corpus_io import read_corpus, read_removals, write_corpus, write_removals
from .filters import filter_corpus
from .parse import parse_article
from .records import (
    ArticleRecord,
    ArticleType,
    AuthorRef,
    RawArticle,
    RemovalEntry,
    RemovalReason,
    SourceFormat,
)

__all__ = [
    "ArticleRecord",
    "ArticleType",
    "AuthorRef",
    "DEFAULT_ABBREVIATIONS",
    "RawArticle",
    "RemovalEntry",
    "RemovalReason",
    "SourceFormat",
    "filter_corpus",
    "normalize_abbreviations",
    "parse_article",
    "read_corpus",
    "read_removals",
    "write_corpus",
    "write_removals",
]
