"""Per-group feature summaries built from mergeable accumulators.

An accumulator keeps the raw per-feature value sequences, so merging two
half-corpus accumulators and summarizing gives results identical to one
pass over the whole corpus (the merge is plain concatenation). Documents
missing a feature (no tokens of that class) are excluded from that
feature's statistics and counted as exclusions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyGroup
from ..metrics.features import FEATURE_NAMES, FeatureVector


@dataclass(frozen=True)
class FeatureSummary:
    n: int
    mean: float | None
    median: float | None
    std: float | None
    excluded: int


class GroupAccumulator:
    """Mergeable per-(group, feature) value collector."""

    def __init__(self):
        self._values: dict[str, dict[str, list[float]]] = {}
        self._excluded: dict[str, dict[str, int]] = {}
        self._doc_counts: dict[str, int] = {}

    def add(self, group: str, features: FeatureVector) -> None:
        values = self._values.setdefault(group, {name: [] for name in FEATURE_NAMES})
        excluded = self._excluded.setdefault(group, {name: 0 for name in FEATURE_NAMES})
        self._doc_counts[group] = self._doc_counts.get(group, 0) + 1
        for name in FEATURE_NAMES:
            v = features.get(name)
            if v is None:
                excluded[name] += 1
            else:
                values[name].append(float(v))

    def merge(self, other: "GroupAccumulator") -> "GroupAccumulator":
        out = GroupAccumulator()
        for acc in (self, other):
            for group, per_feature in acc._values.items():
                values = out._values.setdefault(group, {name: [] for name in FEATURE_NAMES})
                excluded = out._excluded.setdefault(group, {name: 0 for name in FEATURE_NAMES})
                for name in FEATURE_NAMES:
                    values[name].extend(per_feature[name])
                    excluded[name] += acc._excluded[group][name]
                out._doc_counts[group] = out._doc_counts.get(group, 0) + acc._doc_counts[group]
        return out

    def groups(self) -> list[str]:
        return sorted(self._values)

    def document_count(self, group: str) -> int:
        return self._doc_counts.get(group, 0)

    def feature_values(self, group: str, feature: str) -> list[float]:
        return list(self._values.get(group, {}).get(feature, []))

    def summarize(self) -> dict[str, dict[str, FeatureSummary]]:
        out: dict[str, dict[str, FeatureSummary]] = {}
        for group in self.groups():
            out[group] = {}
            for name in FEATURE_NAMES:
                vals = self._values[group][name]
                excluded = self._excluded[group][name]
                if vals:
                    arr = np.asarray(vals)
                    out[group][name] = FeatureSummary(
                        n=len(vals),
                        mean=float(arr.mean()),
                        median=float(np.median(arr)),
                        std=float(arr.std()),  # population std
                        excluded=excluded,
                    )
                else:
                    out[group][name] = FeatureSummary(
                        n=0, mean=None, median=None, std=None, excluded=excluded
                    )
        return out


def group_summary(
    features_by_group: dict[str, list[FeatureVector]],
) -> dict[str, dict[str, FeatureSummary]]:
    """Mean/median/std/n per feature for each group."""
    for group, rows in features_by_group.items():
        if not rows:
            raise EmptyGroup(f"group {group!r} has no documents")
    acc = GroupAccumulator()
    for group in sorted(features_by_group):
        for fv in features_by_group[group]:
            acc.add(group, fv)
    return acc.summarize()
