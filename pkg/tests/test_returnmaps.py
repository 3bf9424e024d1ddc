import numpy as np
import pytest

import ordmaps as om
import oracles


def _ts(values):
    return om.TimeSeries(np.asarray(values, dtype=float), dt=1.0)


def test_frm_pairs_example():
    rm = om.frm_from_entries(_ts([5, 0, 6, 0, 7]), [0, 2, 4])
    assert rm.pairs.tolist() == [[5, 6], [6, 7]]
    assert rm.values.tolist() == [5, 6, 7]
    assert rm.entry_indices.tolist() == [0, 2, 4]
    assert len(rm) == 2
    assert rm.source == "partition"
    assert rm.entry_tags is None


def test_frm_chain_property(rng):
    for _ in range(30):
        n = int(rng.integers(5, 40))
        values = rng.normal(size=n)
        k = int(rng.integers(2, n + 1))
        idx = np.sort(rng.choice(n, size=k, replace=False))
        rm = om.frm_from_entries(_ts(values), idx)
        pairs = rm.pairs
        assert pairs.shape == (k - 1, 2)
        assert np.array_equal(pairs[1:, 0], pairs[:-1, 1])


def test_frm_entry_validation():
    ts = _ts([1, 2, 3, 4, 5])
    with pytest.raises(om.EmptyMapError) as info:
        om.frm_from_entries(ts, [3])
    assert info.value.count == 1
    with pytest.raises(om.EmptyMapError) as info:
        om.frm_from_entries(ts, [])
    assert info.value.count == 0
    with pytest.raises(ValueError, match="ascending"):
        om.frm_from_entries(ts, [3, 3])
    with pytest.raises(ValueError, match="ascending"):
        om.frm_from_entries(ts, [3, 1])
    with pytest.raises(ValueError, match=r"\[0, 4\]"):
        om.frm_from_entries(ts, [0, 5])
    with pytest.raises(ValueError, match="one-dimensional"):
        om.frm_from_entries(ts, [[0, 1]])


def test_frm_values_are_a_copy():
    ts = _ts([1, 2, 3])
    rm = om.frm_from_entries(ts, [0, 2])
    rm.values[0] = 99.0
    assert ts.samples[0] == 1.0


def test_local_maxima_examples():
    assert om.local_maxima_indices(_ts([0, 1, 0, 2, 0])).tolist() == [1, 3]
    # plateau counts once, at its first index
    assert om.local_maxima_indices(_ts([0, 2, 2, 0])).tolist() == [1]
    # monotone and constant series have none
    assert om.local_maxima_indices(_ts([1, 2, 3, 4])).tolist() == []
    assert om.local_maxima_indices(_ts([5, 5, 5, 5])).tolist() == []
    # endpoints never qualify
    assert om.local_maxima_indices(_ts([3, 1, 2])).tolist() == []
    with pytest.raises(om.TooShortError):
        om.local_maxima_indices(_ts([1, 2]))


def test_local_maxima_match_oracle(rng):
    for _ in range(100):
        n = int(rng.integers(3, 60))
        values = rng.integers(0, 4, size=n).astype(float)
        got = om.local_maxima_indices(_ts(values)).tolist()
        assert got == oracles.maxima(values.tolist())


def test_maxima_frm_and_sign_tags():
    values = [0, 3, 0, -1, -0.5, -2, 0, 4, 0, 2, 0]
    rm = om.maxima_frm(_ts(values))
    assert rm.source == "maxima"
    assert rm.entry_tags is None
    assert rm.entry_indices.tolist() == [1, 4, 7, 9]
    assert rm.values.tolist() == [3, -0.5, 4, 2]

    tagged = om.maxima_frm(_ts(values), sign_split=True)
    assert tagged.entry_tags == ("pos", "neg", "pos", "pos")
    assert tagged.values.tolist() == rm.values.tolist()

    # zero-amplitude maximum lands on the positive side
    z = om.maxima_frm(_ts([-1, 0, -1, 0, -1, 0, -1]), sign_split=True)
    assert z.entry_tags == ("pos", "pos", "pos")

    with pytest.raises(om.TooShortError, match="3 local maxima"):
        om.maxima_frm(_ts([0, 1, 0, 2, 0]))


def test_two_routes_same_map():
    # explicit entries at the maxima must reproduce maxima_frm
    values = [0, 3, 0, 1, 0, 5, 0, 2, 0]
    ts = _ts(values)
    a = om.maxima_frm(ts)
    b = om.frm_from_entries(ts, om.local_maxima_indices(ts), source="maxima")
    assert np.array_equal(a.values, b.values)
    assert np.array_equal(a.entry_indices, b.entry_indices)


def test_diagonal_split_counts():
    rm = om.frm_from_entries(_ts([1, 3, 3, 2, 2]), [0, 1, 2, 3, 4])
    # pairs: (1,3) above, (3,3) on, (3,2) below, (2,2) on
    split = om.diagonal_split(rm)
    assert (split.above_count, split.below_count, split.on_count) == (1, 1, 2)
    assert split.above_count + split.below_count + split.on_count == len(rm)


def test_wing_split_counts():
    rm = om.frm_from_entries(_ts([1, 3, -3, 2, -2]), [0, 1, 2, 3, 4])
    # pair sums: 4, 0, -1, 0
    split = om.wing_split(rm)
    assert (split.above_count, split.below_count, split.on_count) == (1, 1, 2)

    # one-lobe map sits entirely on one side even though pairs straddle
    # the identity diagonal
    one_lobe = om.frm_from_entries(_ts([5, 7, 6, 8, 5]), [0, 1, 2, 3, 4])
    d = om.diagonal_split(one_lobe)
    assert d.above_count > 0 and d.below_count > 0
    w = om.wing_split(one_lobe)
    assert (w.above_count, w.below_count, w.on_count) == (4, 0, 0)

    # center shifts the separating line
    w = om.wing_split(one_lobe, center=10.0)
    assert (w.above_count, w.below_count, w.on_count) == (0, 4, 0)


def test_split_sums_match_pair_count(rng):
    for _ in range(30):
        n = int(rng.integers(2, 30))
        values = rng.normal(size=n)
        rm = om.frm_from_entries(_ts(values), np.arange(n))
        for split in (om.diagonal_split(rm), om.wing_split(rm)):
            assert split.above_count + split.below_count + split.on_count == len(rm)
