"""Static minimum cut: deterministic algorithm vs exhaustive enumeration."""

from __future__ import annotations

import random

import pytest

from dyncut import WeightedGraph, brute_force_mincut, edge_key, stoer_wagner


def _cut_weight(g: WeightedGraph, side: frozenset) -> int:
    return sum(w for (u, v), w in g.edges() if (u in side) != (v in side))


def _triangle_234() -> WeightedGraph:
    g = WeightedGraph()
    g.add_weight((0, 1), 2)
    g.add_weight((0, 2), 3)
    g.add_weight((1, 2), 4)
    return g


def test_weighted_triangle_value_and_side():
    cut = stoer_wagner(_triangle_234())
    assert cut.value == 5
    assert cut.side == frozenset({0})


def test_brute_force_weighted_triangle():
    cut = brute_force_mincut(_triangle_234())
    assert cut.value == 5
    assert cut.side == frozenset({0})


def test_disconnected_returns_zero():
    g = WeightedGraph(range(4))
    g.add_weight((0, 1), 1)
    g.add_weight((2, 3), 1)
    assert stoer_wagner(g).value == 0
    assert brute_force_mincut(g).value == 0


def _complete(n: int) -> WeightedGraph:
    g = WeightedGraph()
    for u in range(n):
        for v in range(u + 1, n):
            g.add_weight((u, v), 1)
    return g


def _cycle(n: int) -> WeightedGraph:
    g = WeightedGraph()
    for v in range(n):
        g.add_weight(edge_key(v, (v + 1) % n), 1)
    return g


def test_k4_value_three():
    assert brute_force_mincut(_complete(4)).value == 3
    assert stoer_wagner(_complete(4)).value == 3


def test_c6_value_two():
    assert brute_force_mincut(_cycle(6)).value == 2
    assert stoer_wagner(_cycle(6)).value == 2


def test_star_value_one():
    g = WeightedGraph()
    for leaf in range(1, 5):
        g.add_weight((0, leaf), 1)
    assert brute_force_mincut(g).value == 1
    assert stoer_wagner(g).value == 1


def test_two_vertex_minimum():
    g = WeightedGraph()
    g.add_weight((0, 1), 7)
    for fn in (stoer_wagner, brute_force_mincut):
        cut = fn(g)
        assert cut.value == 7
        assert cut.cut_edges == frozenset({(0, 1)})


def test_single_vertex_rejected():
    g = WeightedGraph([0])
    with pytest.raises(ValueError):
        stoer_wagner(g)
    with pytest.raises(ValueError):
        brute_force_mincut(g)


def test_brute_force_size_limit():
    with pytest.raises(ValueError):
        brute_force_mincut(WeightedGraph(range(21)))


def _random_graph(rng: random.Random, n: int, density: float = 0.5,
                  max_w: int = 4) -> WeightedGraph:
    g = WeightedGraph(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                g.add_weight((u, v), rng.randint(1, max_w))
    return g


def test_matches_enumeration_on_random_graphs():
    rng = random.Random(20240601)
    for trial in range(200):
        n = rng.randint(2, 10)
        g = _random_graph(rng, n, density=rng.uniform(0.2, 0.9))
        expect = brute_force_mincut(g)
        got = stoer_wagner(g)
        assert got.value == expect.value, f"trial {trial}"
        assert _cut_weight(g, got.side) == got.value
        assert got.cut_edges == frozenset(
            e for e, _ in g.edges() if (e[0] in got.side) != (e[1] in got.side)
        )


def test_reported_side_is_proper():
    rng = random.Random(99)
    for _ in range(50):
        g = _random_graph(rng, 8)
        for fn in (stoer_wagner, brute_force_mincut):
            cut = fn(g)
            assert 0 < len(cut.side) < 8


def _contract(g: WeightedGraph, a: int, b: int) -> WeightedGraph:
    # merge b into a, dropping the self-loop
    out = WeightedGraph(v for v in g.vertices if v != b)
    for (u, v), w in g.edges():
        u2 = a if u == b else u
        v2 = a if v == b else v
        if u2 != v2:
            out.add_weight(edge_key(u2, v2), w)
    return out


def test_contraction_never_decreases_value():
    rng = random.Random(4242)
    for _ in range(60):
        n = rng.randint(3, 8)
        g = _random_graph(rng, n, density=0.7)
        base = brute_force_mincut(g).value
        a, b = rng.sample(range(n), 2)
        merged = _contract(g, min(a, b), max(a, b))
        assert brute_force_mincut(merged).value >= base
