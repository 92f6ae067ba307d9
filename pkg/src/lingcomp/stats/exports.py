"""Stable CSV/JSON/text exports of the statistical comparisons.

All headers are fixed and documented here; downstream plotting reads these
files, never internal objects. p-values that underflow to zero are printed
as "<1e-300" in CSV and text output (the JSON export keeps raw numbers).
"""

from __future__ import annotations

import csv
import json
import os

from ..errors import IoFailure
from ..metrics.features import FEATURE_NAMES
from .histograms import Histogram, JointDensity
from .matrix import KSMatrix, pair_label
from .summary import FeatureSummary
from .ttr_bins import HIGHLIGHT_RANGE, BinnedTTR

UNDERFLOW_LABEL = "<1e-300"


def format_p(p: float | None) -> str:
    if p is None:
        return ""
    if p == 0.0:
        return UNDERFLOW_LABEL
    return repr(p)


def _open_w(path):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def write_ks_matrix_csv(matrix: KSMatrix, path: str | os.PathLike) -> None:
    with _open_w(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["feature", "pair", "d", "p", "n1", "n2"])
        for feature in FEATURE_NAMES:
            for pair in matrix.pairs:
                cell = matrix.cells[feature][pair_label(pair)]
                if cell is None:
                    writer.writerow([feature, f"{pair[0]}-{pair[1]}", "", "", "", ""])
                else:
                    writer.writerow(
                        [
                            feature,
                            f"{pair[0]}-{pair[1]}",
                            repr(cell.d_statistic),
                            format_p(cell.p_value),
                            cell.n1,
                            cell.n2,
                        ]
                    )


def write_ks_matrix_json(matrix: KSMatrix, path: str | os.PathLike) -> None:
    payload: dict = {"pairs": [pair_label(p) for p in matrix.pairs], "features": {}}
    for feature in FEATURE_NAMES:
        row = {}
        for pair in matrix.pairs:
            cell = matrix.cells[feature][pair_label(pair)]
            row[pair_label(pair)] = (
                None
                if cell is None
                else {
                    "d": cell.d_statistic,
                    "p": cell.p_value,
                    "n1": cell.n1,
                    "n2": cell.n2,
                }
            )
        payload["features"][feature] = row
    with _open_w(path) as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_summary_csv(
    summaries: dict[str, dict[str, FeatureSummary]], path: str | os.PathLike
) -> None:
    with _open_w(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["group", "feature", "n", "mean", "median", "std", "excluded"])
        for group in sorted(summaries):
            for feature in FEATURE_NAMES:
                s = summaries[group][feature]
                writer.writerow(
                    [
                        group,
                        feature,
                        s.n,
                        "" if s.mean is None else repr(s.mean),
                        "" if s.median is None else repr(s.median),
                        "" if s.std is None else repr(s.std),
                        s.excluded,
                    ]
                )


def write_histograms_csv(
    histograms: dict[str, dict[str, Histogram]], path: str | os.PathLike
) -> None:
    """Long-format grid: one row per (feature, group, bin)."""
    with _open_w(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["feature", "group", "bin_lo", "bin_hi", "count", "density"])
        for feature in sorted(histograms):
            for group in sorted(histograms[feature]):
                hist = histograms[feature][group]
                dens = hist.densities()
                for i, count in enumerate(hist.counts):
                    writer.writerow(
                        [
                            feature,
                            group,
                            repr(hist.edges[i]),
                            repr(hist.edges[i + 1]),
                            count,
                            repr(dens[i]),
                        ]
                    )


def write_joint_csv(joints: dict[str, JointDensity], path: str | os.PathLike) -> None:
    """One row per grid cell of each group's joint distribution."""
    with _open_w(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["group", "x_lo", "x_hi", "y_lo", "y_hi", "count"])
        for group in sorted(joints):
            joint = joints[group]
            for ix, row in enumerate(joint.grid):
                for iy, count in enumerate(row):
                    writer.writerow(
                        [
                            group,
                            repr(joint.x_edges[ix]),
                            repr(joint.x_edges[ix + 1]),
                            repr(joint.y_edges[iy]),
                            repr(joint.y_edges[iy + 1]),
                            count,
                        ]
                    )


def write_binned_ttr_csv(binned: BinnedTTR, path: str | os.PathLike) -> None:
    with _open_w(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["group", "bin_lo", "bin_hi", "n", "mean", "median"])
        for group in sorted(binned.by_group):
            for i, stats in enumerate(binned.by_group[group]):
                writer.writerow(
                    [
                        group,
                        binned.edges[i],
                        binned.edges[i + 1],
                        stats.n,
                        "" if stats.mean is None else repr(stats.mean),
                        "" if stats.median is None else repr(stats.median),
                    ]
                )


def render_report(
    summaries: dict[str, dict[str, FeatureSummary]],
    matrix: KSMatrix | None,
    binned_ttr: BinnedTTR | None,
) -> str:
    """Human-readable digest of group means and test outcomes."""
    lines = ["Group comparison report", "======================", ""]
    groups = sorted(summaries)
    lines.append("Documents per group: " + ", ".join(
        f"{g}={summaries[g][FEATURE_NAMES[0]].n + summaries[g][FEATURE_NAMES[0]].excluded}"
        for g in groups
    ))
    lines.append("")
    lines.append("Feature means by group")
    lines.append("----------------------")
    for feature in FEATURE_NAMES:
        parts = []
        for g in groups:
            s = summaries[g][feature]
            parts.append(f"{g}={s.mean:.4f}" if s.mean is not None else f"{g}=absent")
        suffix = ""
        excl = {g: summaries[g][feature].excluded for g in groups}
        if any(excl.values()):
            suffix = "  (excluded: " + ", ".join(f"{g}={excl[g]}" for g in groups if excl[g]) + ")"
        lines.append(f"  {feature}: " + ", ".join(parts) + suffix)
    if matrix is not None:
        lines.append("")
        lines.append("KS p-values")
        lines.append("-----------")
        header = "  {:<14}".format("feature") + "".join(
            "{:>16}".format(pair_label(p)) for p in matrix.pairs
        )
        lines.append(header)
        for feature in FEATURE_NAMES:
            row = "  {:<14}".format(feature)
            for pair in matrix.pairs:
                cell = matrix.cells[feature][pair_label(pair)]
                if cell is None:
                    row += "{:>16}".format("absent")
                else:
                    row += "{:>16}".format(
                        UNDERFLOW_LABEL if cell.p_value == 0.0 else f"{cell.p_value:.3g}"
                    )
            lines.append(row)
    if binned_ttr is not None:
        lines.append("")
        lo, hi = HIGHLIGHT_RANGE
        lines.append(f"TTR by article length, {lo}-{hi} words")
        lines.append("-------------------------------------")
        for i in range(binned_ttr.bin_count):
            b_lo, b_hi = binned_ttr.edges[i], binned_ttr.edges[i + 1]
            if b_lo < lo or b_hi > hi:
                continue
            parts = []
            for group in sorted(binned_ttr.by_group):
                stats = binned_ttr.by_group[group][i]
                parts.append(
                    f"{group}: n={stats.n}"
                    + (f" mean={stats.mean:.4f}" if stats.mean is not None else "")
                )
            lines.append(f"  [{b_lo}, {b_hi}): " + "; ".join(parts))
        overflow = {g: n for g, n in sorted(binned_ttr.overflow.items()) if n}
        if overflow:
            lines.append(
                "  outside binned range: "
                + ", ".join(f"{g}={n}" for g, n in overflow.items())
            )
    lines.append("")
    return "\n".join(lines)
