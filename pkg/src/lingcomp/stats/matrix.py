"""Pairwise KS comparisons across the three manuscript groups.

Produces the 11-feature by 3-pair grid of test results. Documents missing
a feature are dropped from that feature's samples only; a cell whose
samples are empty is reported absent rather than failing the whole grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EmptySample
from ..metrics.features import FEATURE_NAMES, FeatureVector
from .ks import KSResult, ks_two_sample

GROUP_PAIRS = (("A", "B"), ("A", "AB"), ("AB", "B"))


def pair_label(pair: tuple[str, str]) -> str:
    return f"({pair[0]}, {pair[1]})"


@dataclass
class KSMatrix:
    # feature -> pair label -> result (None when a side had no values)
    cells: dict[str, dict[str, KSResult | None]]
    pairs: tuple[tuple[str, str], ...] = GROUP_PAIRS

    def get(self, feature: str, pair: tuple[str, str]) -> KSResult | None:
        return self.cells[feature][pair_label(pair)]


def feature_samples(rows: list[FeatureVector], feature: str) -> list[float]:
    """Present values of one feature across documents."""
    out = []
    for fv in rows:
        v = fv.get(feature)
        if v is not None:
            out.append(float(v))
    return out


def ks_matrix(
    features_by_group: dict[str, list[FeatureVector]],
    pairs: tuple[tuple[str, str], ...] = GROUP_PAIRS,
) -> KSMatrix:
    cells: dict[str, dict[str, KSResult | None]] = {}
    for feature in FEATURE_NAMES:
        row: dict[str, KSResult | None] = {}
        for pair in pairs:
            left = feature_samples(features_by_group.get(pair[0], []), feature)
            right = feature_samples(features_by_group.get(pair[1], []), feature)
            try:
                row[pair_label(pair)] = ks_two_sample(left, right)
            except EmptySample:
                row[pair_label(pair)] = None
        cells[feature] = row
    return KSMatrix(cells=cells, pairs=pairs)
