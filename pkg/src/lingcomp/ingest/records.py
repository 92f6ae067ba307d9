"""Document records produced by ingestion.

An :class:`ArticleRecord` is the unit every later stage consumes: clean body
text plus the author list and the metadata needed for filtering and grouping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class SourceFormat(str, Enum):
    JATS_XML = "jats_xml"
    PLAIN_TEXT = "plain_text"
    JSONL_RECORD = "jsonl_record"


class ArticleType(str, Enum):
    RESEARCH = "research"
    NON_RESEARCH = "non_research"


class RemovalReason(str, Enum):
    NON_RESEARCH = "non_research"
    NO_CORRESPONDING_AUTHOR = "no_corresponding_author"
    UNKNOWN_ETHNICITY = "unknown_ethnicity"


@dataclass(frozen=True)
class RawArticle:
    """Unparsed input file plus the format it should be parsed as."""

    article_id: str
    source_bytes: bytes
    source_format: SourceFormat

    def __post_init__(self):
        if not self.article_id:
            raise ValueError("article_id must be non-empty")


@dataclass(frozen=True)
class AuthorRef:
    full_name: str
    position_index: int
    is_first: bool
    is_corresponding: bool

    def to_dict(self) -> dict:
        return {
            "full_name": self.full_name,
            "position_index": self.position_index,
            "is_first": self.is_first,
            "is_corresponding": self.is_corresponding,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AuthorRef":
        return cls(
            full_name=str(d["full_name"]),
            position_index=int(d["position_index"]),
            is_first=bool(d["is_first"]),
            is_corresponding=bool(d["is_corresponding"]),
        )


@dataclass
class ArticleRecord:
    """One ingested document with markup-free body text.

    ``word_count`` is 0 until the analysis stage computes it from the
    tokenizer's word-token count.
    """

    article_id: str
    journal: str = ""
    pub_year: int = 0
    article_type: ArticleType = ArticleType.RESEARCH
    title: str = ""
    body_text: str = ""
    authors: list[AuthorRef] = field(default_factory=list)
    subjects: list[str] = field(default_factory=list)
    word_count: int = 0

    def __post_init__(self):
        if not self.article_id:
            raise ValueError("article_id must be non-empty")
        if self.authors:
            firsts = [a for a in self.authors if a.is_first]
            if len(firsts) != 1 or self.authors[0] is not firsts[0]:
                raise ValueError("exactly the first-listed author must carry is_first")

    @property
    def first_author(self) -> AuthorRef | None:
        return self.authors[0] if self.authors else None

    @property
    def corresponding_author(self) -> AuthorRef | None:
        """First-listed corresponding author; ties between several CAs break by list order."""
        for a in self.authors:
            if a.is_corresponding:
                return a
        return None

    def to_dict(self) -> dict:
        return {
            "article_id": self.article_id,
            "journal": self.journal,
            "pub_year": self.pub_year,
            "article_type": self.article_type.value,
            "title": self.title,
            "body_text": self.body_text,
            "authors": [a.to_dict() for a in self.authors],
            "subjects": list(self.subjects),
            "word_count": self.word_count,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ArticleRecord":
        required = {"article_id", "journal", "pub_year", "article_type",
                    "title", "body_text", "authors", "subjects", "word_count"}
        missing = required - d.keys()
        if missing:
            raise KeyError(f"missing fields: {sorted(missing)}")
        return cls(
            article_id=str(d["article_id"]),
            journal=str(d["journal"]),
            pub_year=int(d["pub_year"]),
            article_type=ArticleType(d["article_type"]),
            title=str(d["title"]),
            body_text=str(d["body_text"]),
            authors=[AuthorRef.from_dict(a) for a in d["authors"]],
            subjects=[str(s) for s in d["subjects"]],
            word_count=int(d["word_count"]),
        )


@dataclass(frozen=True)
class RemovalEntry:
    article_id: str
    reason: RemovalReason
