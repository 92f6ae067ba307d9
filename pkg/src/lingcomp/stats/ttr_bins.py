"""TTR by article length.

TTR falls with document length, so raw group comparisons are confounded by
length. Documents are bucketed into fixed-width word-count bins ([lo,
lo+width) each) and TTR is summarized per group within each bin; the
default report highlights the 6,000-10,000-word range while the full-range
table serves as the appendix-style export.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

HIGHLIGHT_RANGE = (6000, 10000)
DEFAULT_BIN_WIDTH = 1000


@dataclass(frozen=True)
class TTRBinStats:
    n: int
    mean: float | None
    median: float | None


@dataclass
class BinnedTTR:
    edges: list[int]  # len(bins) + 1 word-count boundaries
    by_group: dict[str, list[TTRBinStats]]
    overflow: dict[str, int] = field(default_factory=dict)  # docs outside the range

    @property
    def bin_count(self) -> int:
        return len(self.edges) - 1


def ttr_by_length(
    docs_by_group: dict[str, list[tuple[float, int]]],
    bin_width: int = DEFAULT_BIN_WIDTH,
    length_range: tuple[int, int] | None = None,
) -> BinnedTTR:
    """Bucket (ttr, word_count) documents into length bins per group.

    Without an explicit range the bins cover every document; with one,
    documents outside [lo, hi) are counted per group as overflow.
    """
    if bin_width <= 0:
        raise ValueError("bin_width must be positive")

    counts = [wc for docs in docs_by_group.values() for _, wc in docs]
    if length_range is None:
        if not counts:
            return BinnedTTR(edges=[0, bin_width], by_group={g: [TTRBinStats(0, None, None)] for g in docs_by_group})
        lo = (min(counts) // bin_width) * bin_width
        hi = (max(counts) // bin_width) * bin_width + bin_width
    else:
        lo, hi = length_range
        if hi <= lo:
            raise ValueError("length_range must satisfy lo < hi")
        lo = (lo // bin_width) * bin_width
        hi = lo + math.ceil((hi - lo) / bin_width) * bin_width

    n_bins = (hi - lo) // bin_width
    edges = [lo + i * bin_width for i in range(n_bins + 1)]

    by_group: dict[str, list[TTRBinStats]] = {}
    overflow: dict[str, int] = {}
    for group in sorted(docs_by_group):
        bins: list[list[float]] = [[] for _ in range(n_bins)]
        out_of_range = 0
        for ttr, wc in docs_by_group[group]:
            if wc < lo or wc >= hi:
                out_of_range += 1
                continue
            bins[(wc - lo) // bin_width].append(ttr)
        stats = []
        for values in bins:
            if values:
                arr = np.asarray(values)
                stats.append(
                    TTRBinStats(n=len(values), mean=float(arr.mean()), median=float(np.median(arr)))
                )
            else:
                stats.append(TTRBinStats(n=0, mean=None, median=None))
        by_group[group] = stats
        overflow[group] = out_of_range
    return BinnedTTR(edges=edges, by_group=by_group, overflow=overflow)
