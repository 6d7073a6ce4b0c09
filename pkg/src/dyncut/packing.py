"""Layered maximal packing of edge-disjoint forests over a weighted graph."""

from __future__ import annotations

from itertools import count
from typing import Iterable

from .forest import DynamicForest
from .graph_core import EdgeKey, WeightedGraph, WeightError, edge_key


class ForestPacking:
    """Maintains forests T_0..T_{k-1} packing a dynamically weighted graph.

    Level i holds a spanning forest of the residual graph: an edge is live
    at level i while it has weight left over after the copies used by the
    shallower forests, i.e. weight(e) - |{j in usage(e) : j < i}| > 0.
    Because residuals are non-increasing in the level index, each edge is
    present on a prefix of levels; the structure stores one forest handle
    per (edge, level) on that prefix.

    The invariants kept after every unit change:
      * usage(e) is the set of levels whose forest holds a copy of e, with
        |usage(e)| <= min(weight(e), depth);
      * each level's forest spans exactly the edges live at that level, so
        any live unused copy has its endpoints already connected there.

    A unit increment offers the new copy to each level past the current
    presence prefix until some forest adopts it. A unit decrement releases
    the deepest used copy when no free copy exists; the replacement edge
    pulled into that forest consumes one of its own copies, which cascades
    strictly deeper, at most once per level.
    """

    def __init__(self, depth: int, n: int, vertices: Iterable[int] | None = None) -> None:
        if depth < 1:
            raise ValueError("packing depth must be positive")
        self.depth = depth
        self.n = n
        self.vertices: set[int] = set(range(n) if vertices is None else vertices)
        self._levels = [DynamicForest(n) for _ in range(depth)]
        self._weight: dict[EdgeKey, int] = {}
        self._usage: dict[EdgeKey, set[int]] = {}
        # number of shallowest levels where the edge is present
        self._present: dict[EdgeKey, int] = {}
        self._handles: dict[tuple[EdgeKey, int], int] = {}
        self._handle_key: dict[int, EdgeKey] = {}
        self._ids = count()

    def weight(self, e: EdgeKey) -> int:
        return self._weight.get(edge_key(*e), 0)

    def used_levels(self, e: EdgeKey) -> frozenset[int]:
        return frozenset(self._usage.get(edge_key(*e), ()))

    def level_forest(self, i: int) -> set[EdgeKey]:
        return set(self._levels[i].tree_edges())

    def edges(self) -> Iterable[tuple[EdgeKey, int]]:
        return self._weight.items()

    def union_graph(self) -> WeightedGraph:
        """Graph of used copies: weight(e) = number of forests holding e."""
        g = WeightedGraph(self.vertices)
        for e, used in self._usage.items():
            if used:
                g.add_weight(e, len(used))
        return g

    def apply_delta(self, e: EdgeKey, delta: int) -> None:
        """Shift weight(e) by delta, decomposed into unit changes."""
        key = edge_key(*e)
        if self._weight.get(key, 0) + delta < 0:
            raise WeightError(f"weight of {key} would become negative")
        for _ in range(delta):
            self.increment(key)
        for _ in range(-delta):
            self.decrement(key)

    def increment(self, e: EdgeKey) -> None:
        key = edge_key(*e)
        self._weight[key] = self._weight.get(key, 0) + 1
        self._settle(key)

    def decrement(self, e: EdgeKey) -> None:
        key = edge_key(*e)
        w = self._weight.get(key, 0)
        if w == 0:
            raise WeightError(f"edge {key} has no weight to remove")
        self._weight[key] = w - 1
        self._settle(key)

    # -- internal machinery -------------------------------------------------

    def _target(self, key: EdgeKey) -> int:
        # deepest presence required by the residual rule, as a prefix length
        w = self._weight.get(key, 0)
        used = self._usage.get(key)
        if w == 0:
            return 0
        if used is None or len(used) < w:
            return self.depth
        return max(used) + 1

    def _settle(self, key: EdgeKey) -> None:
        stack = [key]
        while stack:
            e = stack.pop()
            w = self._weight.get(e, 0)
            used = self._usage.setdefault(e, set())
            present = self._present.get(e, 0)
            # Release over-committed forest copies, deepest first. Each
            # release may promote a replacement edge whose own copies then
            # need settling; that chain moves strictly deeper each step.
            while len(used) > w:
                lvl = max(used)
                assert present == lvl + 1
                used.discard(lvl)
                result = self._drop_handle(e, lvl)
                present = lvl
                assert result.removed
                if result.replacement is not None:
                    other = self._handle_key[result.replacement]
                    self._usage.setdefault(other, set()).add(lvl)
                    stack.append(other)
            target = self._target(e)
            while present > target:
                result = self._drop_handle(e, present - 1)
                assert not result.removed
                present -= 1
            while present < target:
                joined = self._add_handle(e, present)
                present += 1
                if joined:
                    used.add(present - 1)
                    target = self._target(e)
            if present:
                self._present[e] = present
            else:
                self._present.pop(e, None)
            if w == 0 and not used:
                self._weight.pop(e, None)
                self._usage.pop(e, None)

    def _add_handle(self, e: EdgeKey, lvl: int) -> bool:
        h = next(self._ids)
        self._handles[(e, lvl)] = h
        self._handle_key[h] = e
        return self._levels[lvl].insert(h, *e)

    def _drop_handle(self, e: EdgeKey, lvl: int):
        h = self._handles.pop((e, lvl))
        result = self._levels[lvl].delete(h)
        del self._handle_key[h]
        return result
