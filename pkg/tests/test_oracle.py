import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anydijkstra.bench import heap_baseline
from anydijkstra.costs import random_lattice
from anydijkstra.errors import LatticeTooLargeError
from anydijkstra.lattice import linear_index, make_lattice, unit_lattice
from anydijkstra.oracle import (
    brute_force_distance,
    brute_force_distances,
    dijkstra_reference,
    min_turn_oracle,
)
from oracles import axis_runs, fold_cost, simple_paths


def test_dijkstra_proof_lattice(proof_lattice):
    res = dijkstra_reference(proof_lattice, (0, 0))
    np.testing.assert_array_equal(res.dist, [[0, 1], [1, 2]])
    assert res.pred[1, 1] == linear_index((0, 1), (2, 2))
    assert res.pred[0, 0] == 0


def test_dijkstra_unit_grid():
    assert dijkstra_reference(unit_lattice((4, 4)), (0, 0)).dist[3, 3] == 6


def test_dijkstra_single_node():
    assert dijkstra_reference(make_lattice((1, 1), [], []), (0, 0)).dist.tolist() == [[0.0]]


def test_dijkstra_tie_break_prefers_lower_index():
    # unit 2x2: D is reached at cost 2 from B (index 2) and C (index 1); C pops first
    res = dijkstra_reference(unit_lattice((2, 2)), (0, 0))
    assert res.pred[1, 1] == linear_index((1, 0), (2, 2))


def test_brute_force_examples(proof_lattice):
    assert brute_force_distance(proof_lattice, (0, 0), (1, 1)) == 2
    assert brute_force_distance(unit_lattice((2, 2)), (0, 0), (1, 1)) == 2
    assert brute_force_distance(proof_lattice, (1, 0), (1, 0)) == 0


def test_brute_force_size_limit():
    with pytest.raises(LatticeTooLargeError):
        brute_force_distance(unit_lattice((4, 5)), (0, 0), (1, 1))


def test_brute_force_matches_independent_enumeration():
    lat = random_lattice((3, 3), 9)
    got = brute_force_distances(lat, (1, 2))
    want = np.full((3, 3), np.inf)
    for p in simple_paths(3, 3, (1, 2)):
        want[p[-1]] = min(want[p[-1]], fold_cost(lat.vcost, lat.hcost, p))
    np.testing.assert_array_equal(got, want)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**40), st.data())
def test_dijkstra_matches_brute_force(h, w, seed, data):
    lat = random_lattice((h, w), seed)
    src = (data.draw(st.integers(0, h - 1)), data.draw(st.integers(0, w - 1)))
    np.testing.assert_allclose(
        dijkstra_reference(lat, src).dist, brute_force_distances(lat, src), rtol=0, atol=1e-12
    )


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.integers(0, 2**40))
def test_triangle_consistency(h, w, seed):
    lat = random_lattice((h, w), seed)
    d = dijkstra_reference(lat, (0, w - 1)).dist
    assert np.all(d[1:, :] <= d[:-1, :] + lat.vcost)
    assert np.all(d[:-1, :] <= d[1:, :] + lat.vcost)
    assert np.all(d[:, 1:] <= d[:, :-1] + lat.hcost)
    assert np.all(d[:, :-1] <= d[:, 1:] + lat.hcost)


def test_min_turn_proof_lattice(proof_lattice):
    res = min_turn_oracle(proof_lattice, (0, 0))
    assert res.dist[1, 1] == 2 and res.min_turns[1, 1] == 1
    assert res.dist[0, 0] == 0 and res.min_turns[0, 0] == 0


def test_min_turn_straight_column():
    lat = random_lattice((6, 4), 5)
    # make the column path cheapest by inflating every horizontal edge
    lat = make_lattice((6, 4), lat.vcost, np.asarray(lat.hcost) + 100)
    res = min_turn_oracle(lat, (0, 2))
    assert np.all(res.min_turns[:, 2] == 0)


def test_min_turn_unit_grid_ties():
    res = min_turn_oracle(unit_lattice((5, 5)), (0, 0))
    i, j = np.indices((5, 5))
    np.testing.assert_array_equal(res.dist, i + j)
    np.testing.assert_array_equal(res.min_turns, ((i > 0) & (j > 0)).astype(int))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.integers(0, 3), st.data())
def test_min_turn_matches_enumeration(h, w, top, data):
    costs = data.draw(st.lists(st.integers(0, top), min_size=2 * h * w, max_size=2 * h * w))
    v = np.array(costs[: (h - 1) * w], float).reshape(h - 1, w)
    hc = np.array(costs[(h - 1) * w : (h - 1) * w + h * (w - 1)], float).reshape(h, w - 1)
    lat = make_lattice((h, w), v, hc)
    src = (data.draw(st.integers(0, h - 1)), data.draw(st.integers(0, w - 1)))
    best = {}
    for p in simple_paths(h, w, src):
        key = (fold_cost(v, hc, p), max(len(axis_runs(p)) - 1, 0))
        best[p[-1]] = min(best.get(p[-1], key), key)
    res = min_turn_oracle(lat, src)
    for node, (cost, turns) in best.items():
        assert res.dist[node] == cost
        assert res.min_turns[node] == turns


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**40))
def test_min_turn_cost_matches_dijkstra(h, w, seed):
    lat = random_lattice((h, w), seed)
    np.testing.assert_array_equal(min_turn_oracle(lat, (h - 1, 0)).dist, dijkstra_reference(lat, (h - 1, 0)).dist)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 30), st.integers(1, 30), st.integers(0, 2**40))
def test_compiled_heap_baseline_matches_reference(h, w, seed):
    lat = random_lattice((h, w), seed)
    ref = dijkstra_reference(lat, (h // 2, w // 2))
    dist, pred = heap_baseline(lat, (h // 2, w // 2))
    np.testing.assert_array_equal(dist, ref.dist)
    np.testing.assert_array_equal(pred, ref.pred)
