import math

import numpy as np
import pytest

import ordmaps as om
from ordmaps.ranking import rank_partitions
import oracles


def _analyzed(values, m=2, tau=1, w=1):
    ts = om.TimeSeries(np.asarray(values, dtype=float), dt=1.0)
    seq = om.symbolize(ts, om.WindowConfig(m=m, tau=tau, w=w))
    return ts, seq


# 15 leading digits of pi: a small series with both m=2 patterns, ties,
# and a non-trivial entry structure. Expected numbers were frozen from a
# brute-force hand evaluation before the implementation ran them.
PI_DIGITS = [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9]


def test_corpus_counts_on_digit_series():
    _, seq = _analyzed(PI_DIGITS)
    cc = om.corpus_counts(seq)
    assert cc.total_windows == 14
    assert cc.total_entries == 10


def test_entry_mask_first_window_counts():
    mask = om.entry_mask(np.array([5, 5, 7, 7, 5], dtype=np.int64))
    assert mask.tolist() == [True, False, True, False, True]
    assert om.entry_mask(np.array([], dtype=np.int64)).tolist() == []


def test_entry_points_examples():
    # symbols A A B B A over starts 0..4
    ts, seq = _analyzed([1, 2, 3, 2, 1, 2])
    up, down = om.OrdinalPattern((1, 2)), om.OrdinalPattern((2, 1))
    assert [s.perm for s in seq.symbols] == [(1, 2), (1, 2), (2, 1), (2, 1), (1, 2)]
    assert om.entry_points(seq, up).tolist() == [0, 4]
    assert om.entry_points(seq, down).tolist() == [2]

    # alternating A B A B
    ts, seq = _analyzed([1, 2, 1, 2, 1])
    assert om.entry_points(seq, up).tolist() == [0, 2]


def test_entry_points_absent_pattern_is_empty_not_error():
    _, seq = _analyzed([1, 2, 3, 4])
    assert om.entry_points(seq, om.OrdinalPattern((2, 1))).tolist() == []


def test_extract_subseries_values_and_absent_error():
    ts, seq = _analyzed(PI_DIGITS)
    sub = om.extract_subseries(ts, seq, om.OrdinalPattern((1, 2)))
    assert sub.samples.tolist() == [1, 1, 5, 2, 3, 5, 8, 7]
    sub = om.extract_subseries(ts, seq, om.OrdinalPattern((2, 1)))
    assert sub.samples.tolist() == [3, 4, 9, 6, 5, 9]

    ts, seq = _analyzed([1, 2, 3, 4])
    with pytest.raises(om.PatternAbsentError, match="2-1"):
        om.extract_subseries(ts, seq, om.OrdinalPattern((2, 1)))
    with pytest.raises(om.PatternAbsentError):
        om.weighted_entropies(ts, seq, om.OrdinalPattern((2, 1)))


def test_weighted_entropies_frozen_digit_case():
    ts, seq = _analyzed(PI_DIGITS)

    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)))
    assert (r.occurrence, r.entries) == (8, 5)
    assert r.occurrence_share == pytest.approx(8 / 14, abs=0)
    assert r.entry_share == pytest.approx(0.5, abs=0)
    assert r.entry_indices.tolist() == [1, 3, 6, 9, 13]
    assert not r.degenerate
    assert r.entropy == pytest.approx(1.3709505944546687, rel=1e-13)
    assert r.weighted_entropy == pytest.approx(1.2447460094355844, rel=1e-13)
    assert r.transition_entropy == pytest.approx(1.1854752972273344, rel=1e-13)

    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((2, 1)))
    assert (r.occurrence, r.entries) == (6, 5)
    assert r.entry_indices.tolist() == [0, 2, 5, 7, 12]
    assert r.entropy == pytest.approx(math.log2(3), rel=1e-13)
    assert r.weighted_entropy == pytest.approx(1.2031521094532591, rel=1e-13)
    assert r.transition_entropy == pytest.approx(1.292481250360578, rel=1e-13)


def test_full_coverage_collapses_weighting():
    # every window ascending: K = 1 and a single entrance, so both weighted
    # entropies must equal the raw sub-series entropy
    ts, seq = _analyzed([0, 5, 1, 6, 2, 7, 3, 8, 4, 9], m=2, tau=2)
    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)))
    assert r.occurrence_share == 1.0
    assert r.entry_share == 1.0
    assert r.entropy > 0.0
    assert r.weighted_entropy == pytest.approx(r.entropy, abs=0)
    assert r.transition_entropy == pytest.approx(r.entropy, abs=0)


def test_constant_subseries_entropy_zero_but_weighted_positive():
    # alternating 0 1 0 1 ... gives pattern (1,2) a constant sub-series:
    # h = 0 while the -K*log2(K) term survives in the weighted form
    values = [0, 1] * 6
    ts, seq = _analyzed(values)
    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)))
    assert r.entropy == 0.0
    assert r.occurrence_share == pytest.approx(6 / 11, abs=0)
    assert r.weighted_entropy == pytest.approx(0.4769831552269861, rel=1e-13)
    assert r.transition_entropy == pytest.approx(0.4769831552269861, rel=1e-13)
    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((2, 1)))
    assert r.weighted_entropy == pytest.approx(0.5170470562499704, rel=1e-13)


def test_degenerate_boundary_three_vs_four_occurrences():
    # default secondary window (m'=3, tau'=1, w'=1) needs 4 samples
    ts, seq = _analyzed([1, 2, 1, 2, 1, 2, 1])
    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)))
    assert r.occurrence == 3
    assert r.degenerate
    assert r.entropy == r.weighted_entropy == r.transition_entropy == 0.0

    ts, seq = _analyzed([1, 2, 1, 2, 1, 2, 1, 2, 1])
    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)))
    assert r.occurrence == 4
    assert not r.degenerate
    assert r.entropy == 0.0
    assert r.weighted_entropy == pytest.approx(0.5, abs=0)


def test_custom_sub_config_changes_degeneracy():
    ts, seq = _analyzed([1, 2, 1, 2, 1, 2, 1])
    cfg = om.SubSeriesConfig(m=2, tau=1, w=1)
    assert cfg.min_samples() == 3
    r = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)), sub_cfg=cfg)
    assert not r.degenerate


def test_rank_partitions_order_and_ties():
    ts, seq = _analyzed(PI_DIGITS)
    reports = om.analyze_partitions(ts, seq)
    ranked = rank_partitions(reports, "transition_entropy")
    vals = [r.transition_entropy for r in ranked]
    assert vals == sorted(vals, reverse=True)

    # equal entropies fall back to pattern order
    a = om.weighted_entropies(ts, seq, om.OrdinalPattern((1, 2)))
    b = om.weighted_entropies(ts, seq, om.OrdinalPattern((2, 1)))
    a.weighted_entropy = b.weighted_entropy = 0.9
    assert [r.pattern.perm for r in rank_partitions([b, a], "weighted_entropy")] == [
        (1, 2),
        (2, 1),
    ]
    with pytest.raises(ValueError, match="by must be"):
        rank_partitions([a], "entropy")
    assert rank_partitions([a], "weighted_entropy") == [a]


def test_detect_levels_examples():
    assert om.detect_levels([0.9, 0.85, 0.5, 0.45, 0.1]) == [1, 1, 2, 2, 3]
    assert om.detect_levels([0.5, 0.49, 0.48]) == [1, 1, 1]
    assert om.detect_levels([0.7]) == [1]
    assert om.detect_levels([0.9, 0.1], max_levels=1) == [1, 1]
    # tie between the two 0.35 gaps: earliest boundary wins
    assert om.detect_levels([0.9, 0.85, 0.5, 0.45, 0.1], max_levels=2) == [1, 1, 2, 2, 2]
    assert om.detect_levels([0.0, 0.0, 0.0]) == [1, 1, 1]


def test_detect_levels_validation():
    with pytest.raises(ValueError, match="empty"):
        om.detect_levels([])
    with pytest.raises(ValueError, match="gap_fraction"):
        om.detect_levels([1.0], gap_fraction=0.0)
    with pytest.raises(ValueError, match="gap_fraction"):
        om.detect_levels([1.0], gap_fraction=1.0)
    with pytest.raises(ValueError, match="max_levels"):
        om.detect_levels([1.0], max_levels=0)
    with pytest.raises(ValueError, match="descending"):
        om.detect_levels([0.1, 0.2])


def test_detect_levels_scale_invariance(rng):
    for _ in range(50):
        n = int(rng.integers(1, 15))
        vals = np.sort(rng.random(n))[::-1]
        base = om.detect_levels(vals.tolist())
        for c in (3.0, 0.125, 1e6):
            assert om.detect_levels((vals * c).tolist()) == base


def test_detect_levels_matches_oracle(rng):
    for _ in range(200):
        n = int(rng.integers(1, 20))
        vals = np.sort(rng.integers(0, 8, size=n).astype(float))[::-1]
        frac = float(rng.uniform(0.05, 0.6))
        ml = int(rng.integers(1, 5))
        got = om.detect_levels(vals.tolist(), gap_fraction=frac, max_levels=ml)
        assert got == oracles.levels(vals.tolist(), frac, ml)
        assert max(got) <= ml
        assert got == sorted(got)


def test_assign_levels_sets_both_attributes():
    ts, seq = _analyzed(PI_DIGITS)
    reports = [
        om.weighted_entropies(ts, seq, om.OrdinalPattern(p)) for p in ((1, 2), (2, 1))
    ]
    om.assign_levels(reports)
    # the gap 1.2925 -> 1.1855 is under 0.15 of the top value: one plateau
    assert [r.weighted_level for r in reports] == [1, 1]
    assert [r.transition_level for r in reports] == [1, 1]

    # force a genuine split to check the labels land on the right reports
    by_pattern = {r.pattern.perm: r for r in reports}
    by_pattern[(1, 2)].transition_entropy = 0.2
    by_pattern[(2, 1)].transition_entropy = 0.9
    om.assign_levels(reports)
    assert by_pattern[(2, 1)].transition_level == 1
    assert by_pattern[(1, 2)].transition_level == 2
    assert by_pattern[(1, 2)].weighted_level == 1


def test_analyze_partitions_order_and_share_sums(rng):
    for _ in range(20):
        n = int(rng.integers(12, 60))
        values = rng.integers(0, 4, size=n).astype(float)
        ts, seq = _analyzed(values.tolist(), m=3)
        reports = om.analyze_partitions(ts, seq)
        perms = [r.pattern.perm for r in reports]
        assert perms == sorted(perms)
        assert sum(r.occurrence for r in reports) == len(seq.codes)
        assert sum(r.occurrence_share for r in reports) == pytest.approx(1.0, abs=1e-12)
        assert sum(r.entry_share for r in reports) == pytest.approx(1.0, abs=1e-12)
        for r in reports:
            assert r.entries <= r.occurrence
            assert r.entries >= 1
