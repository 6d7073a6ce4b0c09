"""Uniform sampling from a dynamic set with minimal sample churn."""

from __future__ import annotations

import heapq
import random


class StableSampler:
    """Maintains a uniformly random element of a changing set.

    Every element receives a random 64-bit priority when inserted and the
    current sample is the minimum-priority element. Because priorities are
    distinct and exchangeable, an insert or delete changes the sample with
    probability exactly 1/|set| (taken after the insert, before the delete),
    and the sample is uniform at every point in time.
    """

    def __init__(self, rng: random.Random) -> None:
        self._rng = rng
        self._priority: dict[int, int] = {}
        self._taken: set[int] = set()
        self._heap: list[tuple[int, int]] = []

    def __len__(self) -> int:
        return len(self._priority)

    def __contains__(self, x: int) -> bool:
        return x in self._priority

    def current(self) -> int | None:
        """Minimum-priority element, or None when empty."""
        while self._heap:
            p, x = self._heap[0]
            if self._priority.get(x) == p:
                return x
            heapq.heappop(self._heap)
        return None

    def insert(self, x: int) -> bool:
        """Add x; returns True iff the current sample changed."""
        if x in self._priority:
            raise ValueError(f"element {x} already present")
        p = self._rng.getrandbits(64)
        while p in self._taken:  # keep priorities distinct
            p = self._rng.getrandbits(64)
        old = self.current()
        self._priority[x] = p
        self._taken.add(p)
        heapq.heappush(self._heap, (p, x))
        return old is None or p < self._priority[old]

    def remove(self, x: int) -> bool:
        """Remove x; returns True iff the current sample changed."""
        if x not in self._priority:
            raise KeyError(x)
        was_current = self.current() == x
        self._taken.discard(self._priority.pop(x))
        return was_current
