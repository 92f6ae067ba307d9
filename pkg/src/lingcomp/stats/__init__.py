"""Group distribution comparison: KS tests, histograms, summaries, TTR binning."""

from .exports import (
    UNDERFLOW_LABEL,
    format_p,
    render_report,
    write_binned_ttr_csv,
    write_histograms_csv,
    write_joint_csv,
    write_ks_matrix_csv,
    write_ks_matrix_json,
    write_summary_csv,
)
from .histograms import DEFAULT_BIN_COUNT, Histogram, JointDensity, histogram, joint_histogram
from .ks import KSResult, kolmogorov_p, ks_two_sample
from .matrix import GROUP_PAIRS, KSMatrix, feature_samples, ks_matrix, pair_label
from .summary import FeatureSummary, GroupAccumulator, group_summary
from .ttr_bins import (
    DEFAULT_BIN_WIDTH,
    HIGHLIGHT_RANGE,
    BinnedTTR,
    TTRBinStats,
    ttr_by_length,
)

__all__ = [
    "BinnedTTR",
    "DEFAULT_BIN_COUNT",
    "DEFAULT_BIN_WIDTH",
    "FeatureSummary",
    "GROUP_PAIRS",
    "GroupAccumulator",
    "HIGHLIGHT_RANGE",
    "Histogram",
    "JointDensity",
    "KSMatrix",
    "KSResult",
    "TTRBinStats",
    "UNDERFLOW_LABEL",
    "feature_samples",
    "format_p",
    "group_summary",
    "histogram",
    "joint_histogram",
    "kolmogorov_p",
    "ks_matrix",
    "ks_two_sample",
    "pair_label",
    "render_report",
    "ttr_by_length",
    "write_binned_ttr_csv",
    "write_histograms_csv",
    "write_joint_csv",
    "write_ks_matrix_csv",
    "write_ks_matrix_json",
    "write_summary_csv",
]
