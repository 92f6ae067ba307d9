from __future__ import annotations

import itertools
import math
import random

import numpy as np
import pytest

from lingcomp.errors import EmptyGroup, EmptySample, NonFiniteValue
from lingcomp.metrics import FeatureVector
from lingcomp.stats import (
    GROUP_PAIRS,
    GroupAccumulator,
    format_p,
    group_summary,
    histogram,
    joint_histogram,
    kolmogorov_p,
    ks_matrix,
    ks_two_sample,
    pair_label,
    ttr_by_length,
)


def _fv(**overrides) -> FeatureVector:
    base = dict(
        msl=20.0, clause_ratio=1.5, ttr=0.4,
        noun_ratio=0.3, verb_ratio=0.15, adj_ratio=0.1, adv_ratio=0.03,
        noun_len=6.5, verb_len=6.0, adj_len=7.5, adv_len=6.8,
        word_token_count=5000, sentence_count=250,
    )
    base.update(overrides)
    return FeatureVector(**base)


# --- ks_two_sample -------------------------------------------------------------

def test_identical_samples():
    r = ks_two_sample([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    assert r.d_statistic == 0.0
    assert r.p_value == 1.0


def test_disjoint_supports():
    r = ks_two_sample([1, 2, 3], [10, 20, 30])
    assert r.d_statistic == 1.0
    assert r.n1 == 3 and r.n2 == 3


def test_kolmogorov_series_oracle():
    # Independent numerical evaluation of 2*sum (-1)^(k-1) exp(-2 k^2 lam^2).
    lam = 1.36
    expected = 2 * sum((-1) ** (k - 1) * math.exp(-2 * k * k * lam * lam)
                       for k in range(1, 60))
    assert kolmogorov_p(lam) == pytest.approx(expected, abs=1e-9)
    assert kolmogorov_p(lam) == pytest.approx(0.049, abs=0.002)


def test_ks_symmetry():
    rng = random.Random(5)
    xs = [rng.gauss(0, 1) for _ in range(40)]
    ys = [rng.gauss(0.4, 1.2) for _ in range(25)]
    a = ks_two_sample(xs, ys)
    b = ks_two_sample(ys, xs)
    assert a.d_statistic == b.d_statistic
    assert a.p_value == b.p_value


def test_d_invariant_under_increasing_transform():
    rng = random.Random(6)
    xs = [rng.uniform(0, 4) for _ in range(30)]
    ys = [rng.uniform(1, 5) for _ in range(20)]
    base = ks_two_sample(xs, ys).d_statistic
    fwd = ks_two_sample([math.exp(x) for x in xs], [math.exp(y) for y in ys]).d_statistic
    assert fwd == base


def test_p_monotone_in_d():
    lams = [0.1 * i for i in range(1, 40)]
    ps = [kolmogorov_p(lam) for lam in lams]
    assert all(a >= b for a, b in zip(ps, ps[1:]))


def _brute_force_d(xs, ys):
    grid = sorted(set(xs) | set(ys))
    n1, n2 = len(xs), len(ys)
    return max(
        abs(sum(x <= t for x in xs) / n1 - sum(y <= t for y in ys) / n2)
        for t in grid
    )


def test_sweep_matches_bruteforce_on_sample():
    # Exhaustive n<=6 over {1..4} runs in the acceptance suite; spot-check here.
    rng = random.Random(11)
    for _ in range(300):
        xs = [rng.randint(1, 4) for _ in range(rng.randint(1, 6))]
        ys = [rng.randint(1, 4) for _ in range(rng.randint(1, 6))]
        assert ks_two_sample(xs, ys).d_statistic == _brute_force_d(xs, ys)


def test_ks_errors():
    with pytest.raises(EmptySample):
        ks_two_sample([], [1.0])
    with pytest.raises(NonFiniteValue):
        ks_two_sample([1.0, float("nan")], [1.0])
    with pytest.raises(NonFiniteValue):
        ks_two_sample([1.0], [float("inf")])


# --- histogram -------------------------------------------------------------------

def test_histogram_single_bin():
    h = histogram([1.0, 1.0, 1.0], bin_count=1)
    assert h.counts == (3,)
    assert h.n == 3


def test_histogram_edge_rule():
    h = histogram([0.0, 0.5, 1.0], bin_count=2)
    assert h.edges == (0.0, 0.5, 1.0)
    assert h.counts == (1, 2)  # 0.5 opens the second bin; 1.0 closes it


def test_histogram_conserves_n():
    rng = random.Random(3)
    values = [rng.uniform(-5, 5) for _ in range(500)]
    h = histogram(values, bin_count=17)
    assert sum(h.counts) == 500
    assert all(b > a for a, b in zip(h.edges, h.edges[1:]))


def test_histogram_bin_width():
    h = histogram([0.0, 2.5, 7.0], bin_width=2.0)
    assert h.edges[0] == 0.0 and h.edges[-1] >= 7.0
    assert sum(h.counts) == 3
    widths = {round(b - a, 9) for a, b in zip(h.edges[:-1], h.edges[1:-1])}
    assert widths <= {2.0}


def test_histogram_density_integrates_to_one():
    h = histogram([1, 2, 2, 3, 5, 8], bin_count=4)
    total = sum(d * (h.edges[i + 1] - h.edges[i]) for i, d in enumerate(h.densities()))
    assert total == pytest.approx(1.0)


def test_joint_histogram_diagonal():
    xs = [0.0, 1.0, 2.0, 3.0]
    j = joint_histogram(xs, xs, bins=4)
    assert j.n == 4
    assert sum(map(sum, j.grid)) == 4
    for ix, row in enumerate(j.grid):
        for iy, c in enumerate(row):
            if c:
                assert ix == iy  # perfectly correlated mass on the diagonal


def test_joint_histogram_requires_pairing():
    with pytest.raises(ValueError):
        joint_histogram([1.0], [1.0, 2.0])
    with pytest.raises(EmptySample):
        joint_histogram([], [])


# --- summaries ---------------------------------------------------------------------

def test_group_summary_single_doc():
    fv = _fv()
    out = group_summary({"A": [fv]})
    assert out["A"]["msl"].mean == fv.msl
    assert out["A"]["msl"].n == 1


def test_group_summary_mean():
    out = group_summary({"A": [_fv(msl=20.0), _fv(msl=30.0)]})
    assert out["A"]["msl"].mean == 25.0
    assert out["A"]["msl"].median == 25.0


def test_group_summary_excludes_absent_features():
    docs = [_fv(adv_len=None, adv_ratio=0.0), _fv(adv_len=6.0), _fv(adv_len=8.0)]
    out = group_summary({"A": docs})
    assert out["A"]["adv_len"].n == 2
    assert out["A"]["adv_len"].mean == 7.0
    assert out["A"]["adv_len"].excluded == 1


def test_group_summary_empty_group():
    with pytest.raises(EmptyGroup):
        group_summary({"A": []})


def test_accumulator_merge_equals_one_pass():
    rng = random.Random(9)
    docs = [
        ("A" if i % 2 else "B", _fv(msl=rng.uniform(10, 40),
                                    adv_len=None if i % 5 == 0 else rng.uniform(5, 8)))
        for i in range(60)
    ]
    one = GroupAccumulator()
    for g, fv in docs:
        one.add(g, fv)
    half1, half2 = GroupAccumulator(), GroupAccumulator()
    for g, fv in docs[:30]:
        half1.add(g, fv)
    for g, fv in docs[30:]:
        half2.add(g, fv)
    merged = half1.merge(half2)
    assert merged.summarize() == one.summarize()  # exact, not approximate


# --- ks_matrix -----------------------------------------------------------------------

def test_ks_matrix_identical_groups():
    docs = [_fv(msl=20 + i) for i in range(10)]
    matrix = ks_matrix({"A": docs, "AB": docs, "B": docs})
    for feature, row in matrix.cells.items():
        for pair in GROUP_PAIRS:
            cell = row[pair_label(pair)]
            assert cell.d_statistic == 0.0
            assert cell.p_value == 1.0


def test_ks_matrix_shifted_feature_detected():
    rng = random.Random(21)
    a = [_fv(msl=rng.gauss(30, 2)) for _ in range(500)]
    ab = [_fv(msl=rng.gauss(25, 2)) for _ in range(500)]
    b = [_fv(msl=rng.gauss(20, 2)) for _ in range(500)]
    matrix = ks_matrix({"A": a, "AB": ab, "B": b})
    assert matrix.get("msl", ("A", "B")).p_value < 0.01
    assert matrix.get("msl", ("A", "AB")).p_value < 0.01
    # Unshifted features compare a distribution to itself: p = 1.
    assert matrix.get("ttr", ("A", "B")).p_value == 1.0


def test_ks_matrix_absent_cells():
    a = [_fv(adv_len=None)] * 3
    b = [_fv()] * 3
    matrix = ks_matrix({"A": a, "AB": b, "B": b})
    assert matrix.get("adv_len", ("A", "B")) is None
    assert matrix.get("adv_len", ("AB", "B")) is not None
    assert matrix.cells["msl"][pair_label(("A", "B"))] is not None


# --- binned TTR -----------------------------------------------------------------------

def test_ttr_binning_buckets():
    docs = {"A": [(0.30, 6500)], "B": [(0.40, 6500), (0.50, 9999)]}
    binned = ttr_by_length(docs, bin_width=1000, length_range=(6000, 10000))
    assert binned.edges == [6000, 7000, 8000, 9000, 10000]
    assert binned.by_group["A"][0].n == 1
    assert binned.by_group["A"][0].mean == 0.30
    assert binned.by_group["B"][3].n == 1


def test_ttr_binning_empty_bin_absent_mean():
    binned = ttr_by_length({"A": [(0.3, 6100)]}, 1000, (6000, 8000))
    assert binned.by_group["A"][1].n == 0
    assert binned.by_group["A"][1].mean is None


def test_ttr_binning_identical_groups_match():
    docs = [(0.25 + 0.01 * i, 6000 + 450 * i) for i in range(8)]
    binned = ttr_by_length({"A": list(docs), "B": list(docs)}, 1000, (6000, 10000))
    assert binned.by_group["A"] == binned.by_group["B"]


def test_ttr_binning_overflow_counted():
    docs = {"A": [(0.3, 500), (0.4, 6100), (0.5, 12000)]}
    binned = ttr_by_length(docs, 1000, (6000, 10000))
    assert binned.overflow["A"] == 2
    assert sum(s.n for s in binned.by_group["A"]) == 1


def test_ttr_binning_default_range_covers_all():
    docs = {"A": [(0.3, 1234), (0.4, 8888)]}
    binned = ttr_by_length(docs, 1000)
    assert binned.overflow["A"] == 0
    assert sum(s.n for s in binned.by_group["A"]) == 2


# --- p formatting ------------------------------------------------------------------------

def test_underflowed_p_formats_as_label():
    assert format_p(0.0) == "<1e-300"
    assert format_p(None) == ""
    assert format_p(0.5) == "0.5"
    assert float(format_p(6.1e-155)) == 6.1e-155
