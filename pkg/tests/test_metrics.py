import numpy as np
import pytest

from sensorrank.core import CriterionSpec, Direction, build_matrix
from sensorrank.metrics import (
    BoxplotSummary,
    onvgr_counts,
    onvgr_per_front,
    summarize,
)
from sensorrank.pareto import ParetoStratification, pareto_fronts


def strat_of(*fronts):
    sets = tuple(frozenset(f) for f in fronts)
    index = {ident: i + 1 for i, f in enumerate(sets) for ident in f}
    return ParetoStratification(fronts=sets, front_index=index)


class TestOnvgrPerFront:
    def test_direct_count(self):
        report = onvgr_per_front({"a", "c"}, strat_of({"a", "b"}, {"c"}))
        assert [fc.onvgr for fc in report.per_front] == [0.5, 1.0]
        assert [fc.selected_in_front for fc in report.per_front] == [1, 1]

    def test_full_selection_covers_every_front(self):
        strat = strat_of({"a", "b"}, {"c"}, {"d", "e", "f"})
        report = onvgr_per_front({"a", "b", "c", "d", "e", "f"}, strat)
        assert all(fc.onvgr == 1.0 for fc in report.per_front)

    def test_single_member_of_deep_front(self):
        strat = strat_of({"a"}, {"b", "c"}, {"x", "y", "z"})
        report = onvgr_per_front({"x"}, strat)
        assert [fc.onvgr for fc in report.per_front] == [0.0, 0.0, pytest.approx(1 / 3)]

    def test_empty_selection_scores_zero(self):
        report = onvgr_per_front(set(), strat_of({"a"}, {"b"}))
        assert [fc.onvgr for fc in report.per_front] == [0.0, 0.0]

    def test_unknown_identifier_rejected(self):
        with pytest.raises(ValueError, match="ghost"):
            onvgr_per_front({"ghost"}, strat_of({"a"}))

    def test_counts_sum_to_selection_size(self):
        rng = np.random.default_rng(41)
        for _ in range(50):
            ids = [f"s{i}" for i in range(int(rng.integers(2, 30)))]
            splits = sorted(
                rng.choice(len(ids), size=int(rng.integers(0, 4)), replace=False)
            )
            fronts = [set(chunk) for chunk in np.split(np.array(ids), splits) if len(chunk)]
            strat = strat_of(*fronts)
            chosen = {i for i in ids if rng.random() < 0.4}
            report = onvgr_per_front(chosen, strat)
            assert sum(fc.selected_in_front for fc in report.per_front) == len(chosen)
            assert all(0.0 <= fc.onvgr <= 1.0 for fc in report.per_front)

    def test_monotone_under_selection_growth(self):
        rng = np.random.default_rng(42)
        ids = [f"s{i}" for i in range(40)]
        strat = strat_of(set(ids[:5]), set(ids[5:20]), set(ids[20:]))
        for _ in range(100):
            small = {i for i in ids if rng.random() < 0.3}
            extra = {i for i in ids if rng.random() < 0.3}
            grown = small | extra
            r_small = onvgr_per_front(small, strat)
            r_grown = onvgr_per_front(grown, strat)
            for fc_s, fc_g in zip(r_small.per_front, r_grown.per_front):
                assert fc_g.onvgr >= fc_s.onvgr


def test_array_route_matches_id_route():
    """onvgr_counts (harness path) must agree with onvgr_per_front."""
    rng = np.random.default_rng(43)
    for _ in range(30):
        m = int(rng.integers(2, 60))
        vals = np.round(rng.uniform(0, 3, (m, 3)), 1)
        matrix = build_matrix(
            [f"s{i}" for i in range(m)],
            [CriterionSpec(f"c{j}", Direction.MINIMIZE) for j in range(3)],
            vals,
        )
        strat = pareto_fronts(matrix)
        front_of = np.array([strat.front_index[f"s{i}"] for i in range(m)])
        front_sizes = np.array(strat.front_sizes())
        k = int(rng.integers(1, m + 1))
        chosen_rows = rng.choice(m, size=k, replace=False)
        ratios = onvgr_counts(front_of[chosen_rows], front_sizes)
        report = onvgr_per_front({f"s{i}" for i in chosen_rows}, strat)
        np.testing.assert_allclose(ratios, [fc.onvgr for fc in report.per_front])


class TestSummarize:
    def test_constant_data(self):
        box = summarize((1, 1, 1, 1))
        assert (box.median, box.q1, box.q3) == (1, 1, 1)
        assert box.outlier_count == 0
        assert box.n == 4

    def test_five_point_reference(self):
        box = summarize((1, 2, 3, 4, 5))
        assert (box.median, box.q1, box.q3) == (3, 2, 4)
        assert box.whisker_low == 1 and box.whisker_high == 5

    def test_extreme_value_is_outlier(self):
        assert summarize((1, 1, 1, 100)).outlier_count >= 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            summarize(())

    def test_permutation_invariant(self):
        rng = np.random.default_rng(44)
        data = rng.uniform(0, 1, 40)
        assert summarize(data) == summarize(rng.permutation(data))

    def test_quartiles_match_numpy_percentile(self):
        # np.percentile with linear interpolation is the independent
        # reference for the hand-rolled quantile code.
        rng = np.random.default_rng(45)
        for _ in range(200):
            data = rng.uniform(-10, 10, int(rng.integers(1, 60)))
            box = summarize(data)
            assert box.q1 == pytest.approx(np.percentile(data, 25), abs=1e-12)
            assert box.median == pytest.approx(np.percentile(data, 50), abs=1e-12)
            assert box.q3 == pytest.approx(np.percentile(data, 75), abs=1e-12)

    def test_whiskers_are_samples_within_reach(self):
        rng = np.random.default_rng(46)
        for _ in range(100):
            data = list(rng.normal(0, 1, int(rng.integers(2, 50))))
            box = summarize(data)
            assert box.q1 <= box.median <= box.q3
            reach = 1.5 * (box.q3 - box.q1)
            assert box.whisker_low in data or box.whisker_low == box.q1
            assert box.whisker_high in data or box.whisker_high == box.q3
            assert box.whisker_low >= box.q1 - reach - 1e-12
            assert box.whisker_high <= box.q3 + reach + 1e-12
            assert box.outlier_count == sum(
                1 for x in data if x < box.whisker_low or x > box.whisker_high
            )

    def test_result_is_frozen_record(self):
        box = summarize((3, 1, 2))
        assert isinstance(box, BoxplotSummary)
        with pytest.raises(AttributeError):
            box.median = 5
