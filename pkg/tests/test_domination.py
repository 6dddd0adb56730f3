import random

import pytest

from gammagraphs import (
    Graph,
    WorkLimitExceeded,
    all_pairs_distances,
    domination_number,
    is_distance_d_dominating,
    make_family,
    min_dominating_sets,
)
from gammagraphs.classify import enumerate_connected_graphs
from gammagraphs.domination import result_to_json
from gammagraphs.fixtures import domination_demo_graph

from helpers import powerset_min_dominating, random_graph


def _as_name_sets(result, g):
    return sorted(tuple(sorted(int(g.names[v]) for v in s)) for s in result.min_sets)


class TestPredicates:
    def test_demo_graph_pair_dominates(self):
        g = domination_demo_graph()
        assert is_distance_d_dominating(g, {4, 5}, 1)  # vertices named 5 and 6

    def test_demo_graph_single_vertex_fails(self):
        g = domination_demo_graph()
        assert not is_distance_d_dominating(g, {0}, 1)  # vertex named 1

    def test_whole_vertex_set_dominates(self):
        for g in (make_family("cycle", 6), make_family("fan", 2, 3)):
            assert is_distance_d_dominating(g, range(g.n), 1)

    def test_empty_set_fails_on_nonempty_graph(self):
        assert not is_distance_d_dominating(make_family("path", 2), set(), 1)

    def test_bad_arguments(self):
        g = make_family("path", 3)
        with pytest.raises(ValueError):
            is_distance_d_dominating(g, {5}, 1)
        with pytest.raises(ValueError):
            is_distance_d_dominating(g, {0}, 0)


class TestDemoGraphFamilies:
    def test_gamma1(self):
        g = domination_demo_graph()
        assert domination_number(g, 1) == 2
        result = min_dominating_sets(g, 1)
        assert _as_name_sets(result, g) == [(1, 5), (2, 5), (3, 6), (4, 6), (5, 6)]

    def test_gamma2(self):
        g = domination_demo_graph()
        assert domination_number(g, 2) == 1
        result = min_dominating_sets(g, 2)
        assert _as_name_sets(result, g) == [(2,), (3,), (5,), (6,), (7,)]

    def test_complete_graph(self):
        k4 = make_family("complete", 4)
        assert domination_number(k4, 1) == 1
        assert len(min_dominating_sets(k4, 1).min_sets) == 4


class TestOracleAgreement:
    def test_exhaustive_small_graphs(self):
        for n in range(1, 7):
            for g in enumerate_connected_graphs(n):
                for d in (1, 2, 3):
                    gamma, sets = powerset_min_dominating(g, d)
                    result = min_dominating_sets(g, d)
                    assert result.gamma == gamma
                    assert set(result.min_sets) == sets

    def test_random_larger_graphs(self):
        rng = random.Random(20240817)
        for n in (7, 8):
            for _ in range(25):
                g = random_graph(rng, n, rng.choice([0.25, 0.5, 0.75]))
                for d in (1, 2, 3):
                    gamma, sets = powerset_min_dominating(g, d)
                    result = min_dominating_sets(g, d)
                    assert (result.gamma, set(result.min_sets)) == (gamma, sets)

    def test_disconnected_graph(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        gamma, sets = powerset_min_dominating(g, 1)
        result = min_dominating_sets(g, 1)
        assert (result.gamma, set(result.min_sets)) == (gamma, sets)


class TestInvariants:
    def test_monotone_in_d(self):
        for g in enumerate_connected_graphs(6)[::7]:
            gammas = [domination_number(g, d) for d in (1, 2, 3)]
            assert gammas[0] >= gammas[1] >= gammas[2]

    def test_gamma_one_iff_small_eccentricity(self):
        for n in range(1, 6):
            for g in enumerate_connected_graphs(n):
                dm = all_pairs_distances(g)
                for d in (1, 2):
                    has_center = any(
                        (e := dm.eccentricity(v)) is not None and e <= d for v in range(g.n)
                    )
                    assert (domination_number(g, d) == 1) == has_center

    def test_all_min_sets_same_size_and_dominate(self):
        for g in enumerate_connected_graphs(5):
            result = min_dominating_sets(g, 1)
            for s in result.min_sets:
                assert len(s) == result.gamma
                assert is_distance_d_dominating(g, s, 1)


def test_empty_graph_rejected():
    empty = Graph.from_edges(0, [])
    with pytest.raises(ValueError):
        domination_number(empty, 1)
    with pytest.raises(ValueError):
        min_dominating_sets(empty, 1)


def test_work_limit_reported():
    g = make_family("prism", 6)
    with pytest.raises(WorkLimitExceeded) as exc:
        min_dominating_sets(g, 1, work_limit=5)
    assert exc.value.examined > 5


def test_json_rendering_sorted_by_name():
    g = domination_demo_graph()
    doc = result_to_json(g, min_dominating_sets(g, 1))
    assert doc == {
        "d": 1,
        "gamma": 2,
        "min_sets": [["1", "5"], ["2", "5"], ["3", "6"], ["4", "6"], ["5", "6"]],
    }
    # lexicographic by name, not numeric: "10" sorts before "2"
    p11 = make_family("path", 11)
    doc = result_to_json(p11, min_dominating_sets(p11, 2))
    for s in doc["min_sets"]:
        assert s == sorted(s)
    assert doc["min_sets"] == sorted(doc["min_sets"])
