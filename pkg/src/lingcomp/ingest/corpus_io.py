"""Corpus persistence: line-delimited JSON records plus a removals CSV.

One record per line, UTF-8, '\\n' endings, keys sorted — byte-stable output
for a given record sequence, so reruns diff cleanly.
"""

from __future__ import annotations

import csv
import json
import os
from pathlib import Path

from ..errors import CorruptRecord, IoFailure
from .records import ArticleRecord, RemovalEntry, RemovalReason


def write_corpus(records: list[ArticleRecord], path: str | os.PathLike) -> int:
    """Write records as JSONL; returns the number written."""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict(), sort_keys=True, ensure_ascii=False))
                fh.write("\n")
    except OSError as exc:
        raise IoFailure(f"cannot write corpus {path}: {exc}") from exc
    return len(records)


def read_corpus(path: str | os.PathLike) -> list[ArticleRecord]:
    """Read a JSONL corpus; raises CorruptRecord naming the offending line."""
    records = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    payload = json.loads(line)
                    records.append(ArticleRecord.from_dict(payload))
                except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
                    raise CorruptRecord(str(exc), lineno) from exc
    except OSError as exc:
        raise IoFailure(f"cannot read corpus {path}: {exc}") from exc
    return records


def write_removals(removals: list[RemovalEntry], path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["article_id", "reason"])
            for entry in removals:
                writer.writerow([entry.article_id, entry.reason.value])
    except OSError as exc:
        raise IoFailure(f"cannot write removals {path}: {exc}") from exc


def read_removals(path: str | os.PathLike) -> list[RemovalEntry]:
    entries = []
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["article_id", "reason"]:
                raise IoFailure(f"{path}: unexpected removals header {header!r}")
            for row in reader:
                if not row:
                    continue
                entries.append(RemovalEntry(row[0], RemovalReason(row[1])))
    except OSError as exc:
        raise IoFailure(f"cannot read removals {path}: {exc}") from exc
    return entries


def corpus_path(out_dir: str | os.PathLike) -> Path:
    return Path(out_dir) / "corpus.jsonl"


def removals_path(out_dir: str | os.PathLike) -> Path:
    return Path(out_dir) / "removals.csv"
