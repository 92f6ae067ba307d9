"""Feature-row export: fixed-header CSV for plotting, JSONL for downstream stages.

The CSV carries exactly 13 columns (article_id, group, the 11 features);
the JSONL rows additionally keep word_token_count and sentence_count, which
the stats stage needs for length binning.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass

from ..errors import CorruptRecord, IoFailure
from .features import FEATURE_NAMES, FeatureVector

CSV_HEADER = ("article_id", "group") + FEATURE_NAMES


@dataclass
class FeatureRow:
    article_id: str
    group: str
    features: FeatureVector


def write_features_csv(rows: list[FeatureRow], path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                values = [row.article_id, row.group]
                for name in FEATURE_NAMES:
                    v = row.features.get(name)
                    values.append("" if v is None else repr(v))
                writer.writerow(values)
    except OSError as exc:
        raise IoFailure(f"cannot write features CSV {path}: {exc}") from exc


def write_features_jsonl(rows: list[FeatureRow], path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for row in rows:
                payload = {"article_id": row.article_id, "group": row.group}
                payload.update(row.features.to_dict())
                fh.write(json.dumps(payload, sort_keys=True, ensure_ascii=False))
                fh.write("\n")
    except OSError as exc:
        raise IoFailure(f"cannot write features JSONL {path}: {exc}") from exc


def read_features_jsonl(path: str | os.PathLike) -> list[FeatureRow]:
    rows = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    payload = json.loads(line)
                    rows.append(
                        FeatureRow(
                            article_id=str(payload["article_id"]),
                            group=str(payload["group"]),
                            features=FeatureVector.from_dict(payload),
                        )
                    )
                except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
                    raise CorruptRecord(str(exc), lineno) from exc
    except OSError as exc:
        raise IoFailure(f"cannot read features JSONL {path}: {exc}") from exc
    return rows
