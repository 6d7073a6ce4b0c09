"""Static global minimum cut: Stoer-Wagner and an exhaustive oracle."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph_core import EdgeKey, WeightedGraph

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class CutResult:
    value: int
    side: frozenset[int]
    cut_edges: frozenset[EdgeKey]


def _components(g: WeightedGraph) -> list[set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for (u, v), _ in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    comps = []
    for root in sorted(g.vertices):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def _crossing_edges(g: WeightedGraph, side: frozenset[int]) -> frozenset[EdgeKey]:
    return frozenset(e for e, _ in g.edges() if (e[0] in side) != (e[1] in side))


def stoer_wagner(g: WeightedGraph) -> CutResult:
    """Exact global minimum cut of a weighted graph.

    Disconnected inputs report value 0 with one side a union of components;
    fewer than two vertices is an error. Deterministic for a given input.
    """
    if len(g.vertices) < 2:
        raise ValueError("minimum cut needs at least two vertices")
    comps = _components(g)
    if len(comps) > 1:
        # all but the component with the largest minimum vertex
        side = frozenset().union(*comps[:-1])
        return CutResult(0, side, frozenset())

    adj: dict[int, dict[int, int]] = {v: {} for v in g.vertices}
    for (u, v), w in g.edges():
        adj[u][v] = w
        adj[v][u] = w
    merged: dict[int, list[int]] = {v: [v] for v in g.vertices}

    best_value: int | None = None
    best_side: list[int] = []
    while len(adj) > 1:
        # maximum-adjacency sweep from a deterministic start vertex
        start = min(adj)
        in_a = {start}
        weight_to_a = dict(adj[start])
        heap = [(-w, u) for u, w in weight_to_a.items()]
        heapq.heapify(heap)
        order = [start]
        last_weight = 0
        while len(in_a) < len(adj):
            w, u = heapq.heappop(heap)
            if u in in_a or weight_to_a.get(u) != -w:
                continue
            in_a.add(u)
            order.append(u)
            last_weight = -w
            for x, wx in adj[u].items():
                if x not in in_a:
                    weight_to_a[x] = weight_to_a.get(x, 0) + wx
                    heapq.heappush(heap, (-weight_to_a[x], x))
        t = order[-1]
        s = order[-2]
        if best_value is None or last_weight < best_value:
            best_value = last_weight
            best_side = list(merged[t])
        # merge t into s
        for x, wx in adj.pop(t).items():
            del adj[x][t]
            if x == s:
                continue
            adj[s][x] = adj[s].get(x, 0) + wx
            adj[x][s] = adj[s][x]
        merged[s].extend(merged.pop(t))

    assert best_value is not None
    side = frozenset(best_side)
    other = frozenset(g.vertices) - side
    # the bipartition is symmetric; report the smaller side, ties by order
    if (len(other), sorted(other)) < (len(side), sorted(side)):
        side = other
    cut_edges = _crossing_edges(g, side)
    value = sum(g.weight(e) for e in cut_edges)
    assert value == best_value, "phase weight disagrees with reconstructed cut"
    return CutResult(value, side, cut_edges)


def brute_force_mincut(g: WeightedGraph) -> CutResult:
    """Global minimum cut by enumerating every bipartition.

    Limited to 20 vertices. Ties resolve to the lexicographically smallest
    sorted side containing the smallest vertex.
    """
    verts = sorted(g.vertices)
    n = len(verts)
    if n < 2:
        raise ValueError("minimum cut needs at least two vertices")
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}"
        )
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[u], idx[v], w) for (u, v), w in g.edges()]

    anchor = verts[0]
    best_value: int | None = None
    best_side: tuple[int, ...] = ()
    # the anchor is always inside S, the rest ranges over proper subsets
    for mask in range(2 ** (n - 1) - 1):
        bits = (mask << 1) | 1
        value = 0
        for iu, iv, w in edges:
            if ((bits >> iu) ^ (bits >> iv)) & 1:
                value += w
        if best_value is not None and value > best_value:
            continue
        side = tuple(verts[i] for i in range(n) if (bits >> i) & 1)
        if best_value is None or value < best_value or side < best_side:
            best_value = value
            best_side = side
    assert best_value is not None
    side_set = frozenset(best_side)
    return CutResult(best_value, side_set, _crossing_edges(g, side_set))
