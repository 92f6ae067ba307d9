"""Corpus filters applied after parsing.

Non-research articles and articles without a corresponding author are
dropped before annotation; every drop is logged as a RemovalEntry so the
corpus accounting reconciles at the end of a run.
"""

from __future__ import annotations

from .records import ArticleRecord, ArticleType, RemovalEntry, RemovalReason


def filter_corpus(
    records: list[ArticleRecord],
) -> tuple[list[ArticleRecord], list[RemovalEntry]]:
    """Partition records into (kept, removed), preserving input order.

    A record that is both non-research and CA-less is removed once, with
    the non-research reason (the upstream publisher label wins).
    """
    kept: list[ArticleRecord] = []
    removed: list[RemovalEntry] = []
    for rec in records:
        if rec.article_type is ArticleType.NON_RESEARCH:
            removed.append(RemovalEntry(rec.article_id, RemovalReason.NON_RESEARCH))
        elif rec.corresponding_author is None:
            removed.append(RemovalEntry(rec.article_id, RemovalReason.NO_CORRESPONDING_AUTHOR))
        else:
            kept.append(rec)
    return kept, removed
