"""Histogram and joint-density grids for the distribution reports.

Bins are uniform over [min, max], right-open except the last (closed), so
counts always conserve the sample size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import EmptySample, NonFiniteValue

DEFAULT_BIN_COUNT = 60


@dataclass(frozen=True)
class Histogram:
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    n: int

    def densities(self) -> tuple[float, ...]:
        """Counts normalized so the histogram integrates to 1."""
        out = []
        for i, c in enumerate(self.counts):
            width = self.edges[i + 1] - self.edges[i]
            out.append(c / (self.n * width) if self.n and width else 0.0)
        return tuple(out)


@dataclass(frozen=True)
class JointDensity:
    x_edges: tuple[float, ...]
    y_edges: tuple[float, ...]
    grid: tuple[tuple[int, ...], ...]
    n: int


def _check_finite(arr: np.ndarray) -> None:
    if not np.isfinite(arr).all():
        raise NonFiniteValue("histogram input must be finite")


def histogram(
    values,
    bin_count: int | None = None,
    bin_width: float | None = None,
) -> Histogram:
    """Uniform-bin histogram; give either a bin count (default 60) or a width."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise EmptySample("histogram needs at least one value")
    _check_finite(arr)
    lo = float(arr.min())
    hi = float(arr.max())
    if bin_width is not None:
        if bin_width <= 0:
            raise ValueError("bin_width must be positive")
        n_bins = max(1, math.ceil((hi - lo) / bin_width)) if hi > lo else 1
        edges = np.array([lo + i * bin_width for i in range(n_bins + 1)])
        if edges[-1] < hi:  # guard against rounding in the width multiple
            edges[-1] = hi
    else:
        n_bins = bin_count if bin_count is not None else DEFAULT_BIN_COUNT
        if n_bins < 1:
            raise ValueError("bin_count must be at least 1")
        if hi > lo:
            edges = np.linspace(lo, hi, n_bins + 1)
        else:
            # Degenerate range: one unit-wide bin starting at the value.
            edges = np.linspace(lo, lo + 1.0, n_bins + 1)
    counts, edges = np.histogram(arr, bins=edges)
    return Histogram(
        edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
        n=int(arr.size),
    )


def joint_histogram(xs, ys, bins: int = DEFAULT_BIN_COUNT) -> JointDensity:
    """2-D counts grid over paired samples."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.size == 0 or y.size == 0:
        raise EmptySample("joint histogram needs at least one pair")
    if x.size != y.size:
        raise ValueError("x and y must have equal length")
    _check_finite(x)
    _check_finite(y)

    def axis_edges(arr: np.ndarray) -> np.ndarray:
        lo, hi = float(arr.min()), float(arr.max())
        if hi > lo:
            return np.linspace(lo, hi, bins + 1)
        return np.linspace(lo, lo + 1.0, bins + 1)

    grid, x_edges, y_edges = np.histogram2d(x, y, bins=[axis_edges(x), axis_edges(y)])
    return JointDensity(
        x_edges=tuple(float(e) for e in x_edges),
        y_edges=tuple(float(e) for e in y_edges),
        grid=tuple(tuple(int(c) for c in row) for row in grid),
        n=int(x.size),
    )
