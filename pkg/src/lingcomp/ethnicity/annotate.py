"""Corpus annotation: resolve leading-author ethnicities and assign groups.

The first author and the corresponding author are the leading authors. Both
names are resolved through the (cached) lookup; identical names resolve
once. Articles whose leading authors cannot be labeled are removed with
reason unknown_ethnicity, keeping the removal ledger unified across stages.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from ..errors import CorruptRecord, IoFailure, LookupUnavailable
from ..ingest.records import ArticleRecord, RemovalEntry, RemovalReason
from .lookup import EthnicityLookup
from .model import (
    DecisionKind,
    EnglishDualPolicy,
    EthnicityDecision,
    ManuscriptGroup,
    decide_label,
    ethnic_group,
    manuscript_group,
)


@dataclass(frozen=True)
class ArticleAnnotation:
    fa_name: str
    fa_decision: EthnicityDecision
    ca_name: str
    ca_decision: EthnicityDecision
    group: ManuscriptGroup

    def to_dict(self) -> dict:
        return {
            "fa_name": self.fa_name,
            "fa_decision": self.fa_decision.to_dict(),
            "ca_name": self.ca_name,
            "ca_decision": self.ca_decision.to_dict(),
            "group": self.group.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ArticleAnnotation":
        return cls(
            fa_name=str(d["fa_name"]),
            fa_decision=EthnicityDecision.from_dict(d["fa_decision"]),
            ca_name=str(d["ca_name"]),
            ca_decision=EthnicityDecision.from_dict(d["ca_decision"]),
            group=ManuscriptGroup(d["group"]),
        )


@dataclass
class AnnotatedArticle:
    record: ArticleRecord
    annotation: ArticleAnnotation


@dataclass
class AnnotationResult:
    annotated: list[AnnotatedArticle] = field(default_factory=list)
    removals: list[RemovalEntry] = field(default_factory=list)
    names_attempted: int = 0
    names_failed: int = 0

    @property
    def failure_rate(self) -> float:
        return self.names_failed / self.names_attempted if self.names_attempted else 0.0


def annotate_corpus(
    records: list[ArticleRecord],
    lookup: EthnicityLookup,
    english_dual_policy: EnglishDualPolicy = EnglishDualPolicy.INCLUDE,
) -> AnnotationResult:
    """Annotate every record with leading-author decisions and a group.

    Lookup failures fail only the affected articles; the caller can inspect
    ``failure_rate`` to decide whether the run as a whole should fail.
    """
    result = AnnotationResult()
    decisions: dict[str, EthnicityDecision | None] = {}

    def resolve(name: str) -> EthnicityDecision | None:
        if name not in decisions:
            result.names_attempted += 1
            try:
                decisions[name] = decide_label(lookup.lookup(name))
            except LookupUnavailable:
                result.names_failed += 1
                decisions[name] = None
        return decisions[name]

    for rec in records:
        fa = rec.first_author
        ca = rec.corresponding_author
        if fa is None or ca is None:
            result.removals.append(
                RemovalEntry(rec.article_id, RemovalReason.NO_CORRESPONDING_AUTHOR)
            )
            continue
        fa_decision = resolve(fa.full_name)
        ca_decision = resolve(ca.full_name) if ca.full_name != fa.full_name else fa_decision
        if (
            fa_decision is None
            or ca_decision is None
            or fa_decision.kind is DecisionKind.UNKNOWN
            or ca_decision.kind is DecisionKind.UNKNOWN
        ):
            result.removals.append(RemovalEntry(rec.article_id, RemovalReason.UNKNOWN_ETHNICITY))
            continue
        group = manuscript_group(
            ethnic_group(fa_decision, english_dual_policy),
            ethnic_group(ca_decision, english_dual_policy),
        )
        result.annotated.append(
            AnnotatedArticle(
                record=rec,
                annotation=ArticleAnnotation(
                    fa_name=fa.full_name,
                    fa_decision=fa_decision,
                    ca_name=ca.full_name,
                    ca_decision=ca_decision,
                    group=group,
                ),
            )
        )
    return result


def write_annotated(articles: list[AnnotatedArticle], path: str | os.PathLike) -> int:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for art in articles:
                payload = {
                    "record": art.record.to_dict(),
                    "annotation": art.annotation.to_dict(),
                }
                fh.write(json.dumps(payload, sort_keys=True, ensure_ascii=False))
                fh.write("\n")
    except OSError as exc:
        raise IoFailure(f"cannot write annotated corpus {path}: {exc}") from exc
    return len(articles)


def read_annotated(path: str | os.PathLike) -> list[AnnotatedArticle]:
    articles = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    payload = json.loads(line)
                    articles.append(
                        AnnotatedArticle(
                            record=ArticleRecord.from_dict(payload["record"]),
                            annotation=ArticleAnnotation.from_dict(payload["annotation"]),
                        )
                    )
                except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
                    raise CorruptRecord(str(exc), lineno) from exc
    except OSError as exc:
        raise IoFailure(f"cannot read annotated corpus {path}: {exc}") from exc
    return articles
