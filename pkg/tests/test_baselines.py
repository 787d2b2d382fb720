"""Benchmark selectors and the exhaustive oracle."""

from __future__ import annotations

import numpy as np
import pytest

from barriercover.algorithms import oga, oga_continuous
from barriercover.baselines import (
    LEFT,
    RIGHT,
    InstanceTooLargeError,
    brute_force_min_kcover,
    build_barrier_graph,
    greedy_max_coverage,
    k_disjoint_paths,
)
from barriercover.model import (
    ParameterError,
    Sensor,
    SensorField,
    TargetSet,
    discretize,
)
from conftest import exhaustive_min_kcover, make_field, oracle_instance


def cheapest_path_oracle(graph):
    """Min (weight, node count, lexicographic) LEFT->RIGHT simple path."""
    interiors = [n for n in graph.nodes if n not in (LEFT, RIGHT)]
    best = [None]

    def rec(node, visited, path, weight):
        cand = (
            weight + graph.weight(node, RIGHT),
            len(path) + 1,
            path + (RIGHT,),
        )
        if best[0] is None or cand < best[0]:
            best[0] = cand
        for nxt in interiors:
            if nxt in visited:
                continue
            rec(
                nxt,
                visited | {nxt},
                path + (nxt,),
                weight + graph.weight(node, nxt),
            )

    rec(LEFT, frozenset(), (LEFT,), 0)
    return best[0]


class TestGreedyMaxCoverage:
    def test_center_bait_over_selects(self):
        field = make_field(
            [(0.5, 4.5), (4.5, 8.5), (2.0, 7.0)], domain=(0.0, 10.0)
        )
        targets = TargetSet(tuple(float(x) for x in range(1, 9)))
        greedy = greedy_max_coverage(field, targets)
        assert greedy.selected_ids == (2, 0, 1)
        assert greedy.fully_covered
        frontier = oga(field, targets)
        assert frontier.selected_ids == (0, 1)
        assert greedy.count > frontier.count

    def test_ties_go_to_lowest_index(self):
        field = make_field([(0.0, 5.0), (5.0, 10.0)], domain=(0.0, 10.0))
        targets = TargetSet((2.0, 7.0))
        greedy = greedy_max_coverage(field, targets)
        assert greedy.selected_ids[0] == 0

    def test_stops_when_no_gain_remains(self):
        field = make_field([(0.0, 4.0)], domain=(0.0, 10.0))
        targets = TargetSet((2.0, 8.0))
        greedy = greedy_max_coverage(field, targets)
        assert greedy.selected_ids == (0,)
        assert not greedy.fully_covered
        assert not greedy.virtual_ids

    def test_ignores_virtual_sensors(self):
        field = make_field([(0.0, 4.0)], domain=(0.0, 10.0))
        field, _ = field.with_virtual([(4.0, 10.0)])
        targets = TargetSet((2.0, 8.0))
        greedy = greedy_max_coverage(field, targets)
        assert greedy.selected_ids == (0,)
        assert not greedy.fully_covered

    def test_empty_field_covers_nothing(self):
        field = SensorField.build([], (0.0, 10.0))
        greedy = greedy_max_coverage(field, TargetSet((1.0,)))
        assert greedy.selected_ids == ()
        assert not greedy.fully_covered

    def test_rejects_empty_targets(self):
        field = make_field([(0.0, 4.0)])
        with pytest.raises(ParameterError):
            greedy_max_coverage(field, TargetSet(()))

    def test_never_beats_the_frontier_rule(self):
        for seed in range(60):
            field, targets = oracle_instance(seed, k=1)
            g = greedy_max_coverage(field, targets, record_trace=False)
            f = oga(field, targets, record_trace=False)
            assert g.fully_covered
            assert g.count >= f.count


class TestBarrierGraph:
    def test_nodes_and_terminal_spans(self):
        field = make_field([(0.0, 4.0), (3.0, 7.0)], domain=(0.0, 10.0))
        graph = build_barrier_graph(field, (0.0, 10.0))
        assert set(graph.nodes) == {LEFT, RIGHT, 0, 1}
        assert graph.spans[LEFT] == (0.0, 0.0)
        assert graph.spans[RIGHT] == (10.0, 10.0)

    def test_weights(self):
        field = make_field(
            [(0.0, 4.0), (2.0, 6.0), (4.0, 8.0), (9.0, 9.5)],
            domain=(0.0, 10.0),
        )
        graph = build_barrier_graph(field, (0.0, 10.0))
        assert graph.weight(0, 1) == 0
        assert graph.weight(0, 2) == 0
        assert graph.weight(0, 3) == 1
        assert graph.weight(LEFT, 0) == 0
        assert graph.weight(LEFT, 3) == 1
        assert graph.weight(3, RIGHT) == 1
        assert graph.weight(LEFT, RIGHT) == 1

    def test_virtual_sensors_excluded(self):
        field = make_field([(0.0, 4.0)], domain=(0.0, 10.0))
        field, _ = field.with_virtual([(4.0, 10.0)])
        graph = build_barrier_graph(field, (0.0, 10.0))
        assert set(graph.nodes) == {LEFT, RIGHT, 0}

    def test_rejects_empty_domain(self):
        field = make_field([(0.0, 4.0)])
        with pytest.raises(ParameterError):
            build_barrier_graph(field, (5.0, 5.0))


class TestKDisjointPaths:
    def test_chain_found_gap_free(self):
        field = make_field([(0.0, 4.0), (3.0, 7.0), (6.0, 10.0)])
        graph = build_barrier_graph(field, (0.0, 10.0))
        result = k_disjoint_paths(graph, 1)
        assert result.selected_ids == (0, 1, 2)
        assert result.fully_covered
        assert not result.virtual_ids

    def test_empty_field_single_bridge(self):
        field = SensorField.build([], (0.0, 10.0))
        graph = build_barrier_graph(field, (0.0, 10.0))
        result = k_disjoint_paths(graph, 1)
        assert result.count == 1
        assert len(result.virtual_ids) == 1
        assert result.virtual_spans[result.virtual_ids[0]] == (0.0, 10.0)
        assert not result.fully_covered

    def test_second_round_is_node_disjoint(self):
        field = make_field(
            [(0.0, 6.0), (5.0, 10.0), (0.0, 5.5), (5.0, 10.0)],
            domain=(0.0, 10.0),
        )
        graph = build_barrier_graph(field, (0.0, 10.0))
        result = k_disjoint_paths(graph, 2)
        assert result.fully_covered
        reals = [s for s in result.selected_ids if s not in result.virtual_ids]
        assert sorted(reals) == [0, 1, 2, 3]

    def test_exhausted_field_bridges_with_virtuals(self):
        field = make_field([(0.0, 4.0), (3.0, 7.0), (6.0, 10.0)])
        graph = build_barrier_graph(field, (0.0, 10.0))
        result = k_disjoint_paths(graph, 2)
        assert not result.fully_covered
        reals = [s for s in result.selected_ids if s not in result.virtual_ids]
        assert reals == [0, 1, 2]
        assert len(result.virtual_ids) >= 1

    def test_any_gap_collapses_to_the_direct_bridge(self):
        field = make_field([(0.0, 3.0), (6.0, 10.0)], domain=(0.0, 10.0))
        graph = build_barrier_graph(field, (0.0, 10.0))
        result = k_disjoint_paths(graph, 1)
        assert len(result.virtual_ids) == 1
        assert result.virtual_spans[result.virtual_ids[0]] == (0.0, 10.0)
        assert all(s in result.virtual_ids for s in result.selected_ids)

    def test_k_must_be_positive(self):
        field = make_field([(0.0, 4.0)])
        graph = build_barrier_graph(field, (0.0, 10.0))
        with pytest.raises(ParameterError):
            k_disjoint_paths(graph, 0)

    def test_matches_path_enumeration_oracle(self):
        import sys

        sys.path.insert(0, "tests")
        from conftest import random_small_field

        for seed in range(60):
            rng = np.random.default_rng([31, seed])
            field = random_small_field(rng, n_max=6, width=20.0)
            graph = build_barrier_graph(field, field.domain)
            result = k_disjoint_paths(graph, 1)
            weight, _, path = cheapest_path_oracle(graph)
            reals = tuple(
                s for s in result.selected_ids if s not in result.virtual_ids
            )
            assert reals == path[1:-1]
            assert len(result.virtual_ids) == weight

    def test_gap_free_path_never_beats_the_frontier_rule(self):
        import sys

        sys.path.insert(0, "tests")
        from conftest import random_small_field

        hits = 0
        for seed in range(200):
            rng = np.random.default_rng([37, seed])
            field = random_small_field(rng, n_max=10, width=20.0)
            graph = build_barrier_graph(field, field.domain)
            result = k_disjoint_paths(graph, 1)
            if result.virtual_ids:
                continue
            hits += 1
            frontier = oga_continuous(field, field.domain, record_trace=False)
            assert frontier.fully_covered
            assert result.count >= frontier.count
        assert hits > 20


class TestBruteForceOracle:
    def test_chain_needs_all_three(self):
        field = make_field([(0.0, 4.0), (2.0, 8.0), (7.0, 10.0)])
        targets = discretize(field)
        assert brute_force_min_kcover(field, targets, 1) == 3

    def test_redundant_sensor_skipped(self):
        field = make_field([(0.0, 6.0), (2.0, 5.0), (5.0, 10.0)])
        assert brute_force_min_kcover(field, discretize(field), 1) == 2

    def test_two_cover_needs_both_pairs(self):
        field = make_field(
            [(0.0, 6.0), (4.0, 10.0), (0.0, 5.0), (5.0, 10.0)],
            domain=(0.0, 10.0),
        )
        assert brute_force_min_kcover(field, discretize(field), 2) == 4

    def test_infeasible_is_none(self):
        field = make_field([(0.0, 4.0)], domain=(0.0, 10.0))
        assert brute_force_min_kcover(field, TargetSet((8.0,)), 1) is None
        assert brute_force_min_kcover(field, TargetSet((2.0,)), 2) is None

    def test_k_must_be_positive(self):
        field = make_field([(0.0, 4.0)])
        with pytest.raises(ParameterError):
            brute_force_min_kcover(field, TargetSet((2.0,)), 0)

    def test_cap_at_twenty_sensors(self):
        pairs = [(float(i), float(i) + 1.5) for i in range(21)]
        field = make_field(pairs, domain=(0.0, 22.0))
        with pytest.raises(InstanceTooLargeError) as err:
            brute_force_min_kcover(field, TargetSet((5.0,)), 1)
        assert "capped at 20 sensors, got 21" in str(err.value)
        assert isinstance(err.value, ValueError)

    def test_monotone_in_k(self):
        for seed in range(20):
            field, targets = oracle_instance(seed, k=2, n_max=8)
            one = brute_force_min_kcover(field, targets, 1)
            two = brute_force_min_kcover(field, targets, 2)
            assert one is not None and two is not None
            assert two >= one

    def test_matches_independent_enumeration(self):
        for seed in range(25):
            field, targets = oracle_instance(seed, k=1, n_max=8)
            assert brute_force_min_kcover(field, targets, 1) == (
                exhaustive_min_kcover(field, targets, 1)
            )
        for seed in range(10):
            field, targets = oracle_instance(seed, k=2, n_max=6)
            assert brute_force_min_kcover(field, targets, 2) == (
                exhaustive_min_kcover(field, targets, 2)
            )
