"""Fully dynamic minimum cut engine over a grid of contraction instances."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

from .contraction import DEFAULT_BUDGET_COEFF, DEFAULT_CENTER_COEFF, StarInstance
from .graph_core import DynamicGraph, EdgeKey, edge_key
from .mincut import CutResult, stoer_wagner
from .packing import ForestPacking

MODE_PACKED = "packed"
MODE_DIRECT = "direct"


def _child_seed(master: int, copy: int, level: int) -> int:
    digest = hashlib.sha256(f"{master}:{copy}:{level}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass
class EngineConfig:
    mode: str = MODE_PACKED
    copies: int | None = None
    seed: int = 0
    center_coeff: float = DEFAULT_CENTER_COEFF
    budget_coeff: float = DEFAULT_BUDGET_COEFF
    report_edges: bool = False


@dataclass
class EngineStats:
    updates: int = 0
    queries: int = 0
    queue_nonempty_steps: int = 0
    complete_steps: list[int] = field(default_factory=list)

    copies: int = 1

    def completeness_rates(self) -> list[float]:
        checks = self.updates * self.copies
        if not checks:
            return [1.0 for _ in self.complete_steps]
        return [c / checks for c in self.complete_steps]


class Engine:
    """Maintains the exact global minimum cut value under edge updates.

    One contraction instance per threshold 2^i, i = 0..ceil(log2 n), is
    replicated across independent copies. In packed mode each instance
    feeds its quotient weight deltas into a forest packing of depth
    2^(i+1) and queries run a static cut on the packing's union graph; in
    direct mode instances relabel lazily and queries run the static cut on
    the quotient graph itself. A query consults only the instances at the
    threshold level just below the current minimum degree, skips incomplete
    ones, and never answers below the true cut value; the minimum degree is
    an always-valid fallback.
    """

    def __init__(self, n: int, config: EngineConfig | None = None) -> None:
        if n < 1:
            raise ValueError("vertex count must be positive")
        self.config = config or EngineConfig()
        if self.config.mode not in (MODE_PACKED, MODE_DIRECT):
            raise ValueError(f"unknown engine mode {self.config.mode!r}")
        self.n = n
        log_n = math.log2(max(n, 2))
        self.levels = math.ceil(log_n) + 1
        self.copies = self.config.copies or max(1, math.ceil(5 * log_n))
        self.graph = DynamicGraph(n)
        instance_mode = "eager" if self.config.mode == MODE_PACKED else "lazy"
        self._instances: list[list[StarInstance]] = []
        self._packings: list[list[ForestPacking]] = []
        for c in range(self.copies):
            row = []
            packs = []
            for i in range(self.levels):
                inst = StarInstance(
                    n,
                    threshold=2**i,
                    mode=instance_mode,
                    seed=_child_seed(self.config.seed, c, i),
                    center_coeff=self.config.center_coeff,
                    budget_coeff=self.config.budget_coeff,
                )
                row.append(inst)
                if self.config.mode == MODE_PACKED:
                    packs.append(ForestPacking(2 ** (i + 1), n, inst.centers))
            self._instances.append(row)
            self._packings.append(packs)
        self.stats = EngineStats(
            complete_steps=[0] * self.levels, copies=self.copies
        )

    def insert(self, e: EdgeKey) -> None:
        self.update(e, 1)

    def delete(self, e: EdgeKey) -> None:
        self.update(e, -1)

    def update(self, e: EdgeKey, sign: int) -> None:
        key = edge_key(*e)
        if sign == 1:
            self.graph.insert_edge(key)
        elif sign == -1:
            self.graph.delete_edge(key)
        else:
            raise ValueError(f"update sign must be +1 or -1, got {sign}")
        packed = self.config.mode == MODE_PACKED
        any_queue = False
        complete = [0] * self.levels
        for c in range(self.copies):
            row = self._instances[c]
            for i in range(self.levels):
                inst = row[i]
                deltas = inst.apply_update(key, sign)
                if packed:
                    packing = self._packings[c][i]
                    for quotient_edge, d in deltas:
                        packing.apply_delta(quotient_edge, d)
                elif inst.has_pending():
                    any_queue = True
                if inst.is_complete():
                    complete[i] += 1
        self.stats.updates += 1
        if any_queue:
            self.stats.queue_nonempty_steps += 1
        for i in range(self.levels):
            self.stats.complete_steps[i] += complete[i]

    # -- queries ---------------------------------------------------------

    def _level_for_degree(self, degree: int) -> int:
        return min(degree.bit_length() - 1, self.levels - 1)

    def _evaluate(self) -> tuple[int, str, object]:
        degree = self.graph.min_degree()
        if degree == 0:
            return 0, "degree", self.graph.min_degree_vertex()
        level = self._level_for_degree(degree)
        best = degree
        kind = "degree"
        payload: object = self.graph.min_degree_vertex()
        for c in range(self.copies):
            inst = self._instances[c][level]
            if not inst.is_complete():
                continue
            if self.config.mode == MODE_PACKED:
                quotient = self._packings[c][level].union_graph()
            else:
                quotient = inst.contracted_graph()
            if len(quotient.vertices) < 2:
                continue  # everything merged into one side, no cut to read
            cut = stoer_wagner(quotient)
            if cut.value < best:
                best = cut.value
                kind = "quotient"
                payload = (c, level, cut.side)
        return best, kind, payload

    def query_value(self) -> int:
        """Exact minimum cut value (0 when the graph is disconnected)."""
        self.stats.queries += 1
        value, _, _ = self._evaluate()
        return value

    def query_cut(self) -> CutResult:
        """Minimum cut value plus a witness edge set and side."""
        if not self.config.report_edges:
            raise RuntimeError("cut reporting is disabled; set report_edges")
        self.stats.queries += 1
        value, kind, payload = self._evaluate()
        if kind == "degree":
            vertex = payload
            if value == 0:
                return CutResult(0, frozenset([vertex]), frozenset())
            edges = frozenset(edge_key(vertex, x) for x in self.graph.neighbors(vertex))
            return CutResult(value, frozenset([vertex]), edges)
        c, level, side = payload
        inst = self._instances[c][level]
        edges: set[EdgeKey] = set()
        for quotient_edge, _ in inst.contracted_graph().edges():
            if (quotient_edge[0] in side) != (quotient_edge[1] in side):
                edges |= inst.preimage_of(quotient_edge)
        original_side = frozenset(
            v for v in range(self.n) if inst.representative(v) in side
        )
        return CutResult(value, original_side, frozenset(edges))
