"""Power graphs of finite groups and the cut-set predicates on them.

Two distinct elements are adjacent exactly when one lies in the cyclic
subgroup generated by the other. Adjacency is stored densely as one integer
bitmask per vertex: power graphs are dense and the desk-scale sizes here
(at most ~1000 vertices) make O(1) edge queries and whole-row operations the
dominant win.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitsets import iter_bits, mask_of
from .groups import Group


@dataclass(frozen=True)
class Separation:
    """A bipartition of the surviving vertices with no crossing edge."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class PowerGraph:
    """Simple undirected graph on group element indices; vertex 0 is the identity."""

    vertex_count: int
    adj: tuple[int, ...]
    group_name: str = ""

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def adjacent(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    @property
    def is_complete(self) -> bool:
        want = self.vertex_count - 1
        return all(m.bit_count() == want for m in self.adj)

    def _vertex_mask(self, vertices: Iterable[int]) -> int:
        m = mask_of(vertices)
        if m & ~self.full_mask:
            raise ValueError("vertex set contains indices outside the graph")
        return m

    def _flood(self, alive: int, start: int) -> int:
        comp = 1 << start
        frontier = comp
        adj = self.adj
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= adj[u]
            frontier = reach & alive & ~comp
            comp |= frontier
        return comp

    def _component_masks(self, alive: int) -> list[int]:
        comps = []
        rest = alive
        while rest:
            start = (rest & -rest).bit_length() - 1
            comp = self._flood(rest, start)
            comps.append(comp)
            rest &= ~comp
        return comps

    def components_after_removal(self, removed: Iterable[int]) -> list[frozenset[int]]:
        """Connected components of the induced subgraph, ordered by least vertex."""
        alive = self.full_mask & ~self._vertex_mask(removed)
        return [frozenset(iter_bits(c)) for c in self._component_masks(alive)]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return self._flood(self.full_mask, 0) == self.full_mask

    def is_cut_set(self, vertices: Iterable[int]) -> bool:
        """True iff removing the set leaves >= 2 connected components.

        At least two vertices must survive the removal; smaller remainders are
        outside the definition and rejected.
        """
        cut = self._vertex_mask(vertices)
        alive = self.full_mask & ~cut
        if alive.bit_count() < 2:
            raise ValueError("a cut-set must leave at least two vertices")
        start = (alive & -alive).bit_length() - 1
        return self._flood(alive, start) != alive

    def is_minimal_cut_set(self, vertices: Iterable[int]) -> bool:
        """True iff no single element can be dropped while staying a cut-set."""
        cut = self._vertex_mask(vertices)
        if not self.is_cut_set(iter_bits(cut)):
            raise ValueError("is_minimal_cut_set requires a cut-set")
        alive = self.full_mask & ~cut
        for x in iter_bits(cut):
            smaller = alive | (1 << x)
            start = (smaller & -smaller).bit_length() - 1
            if self._flood(smaller, start) != smaller:
                return False
        return True

    def is_separation(self, removed: Iterable[int], sep: Separation) -> bool:
        """True iff sep partitions the surviving vertices with no crossing edge."""
        cut = self._vertex_mask(removed)
        alive = self.full_mask & ~cut
        a = self._vertex_mask(sep.side_a)
        b = self._vertex_mask(sep.side_b)
        if not a or not b:
            raise ValueError("both sides of a separation must be non-empty")
        if a & b or (a | b) != alive:
            raise ValueError("separation sides must partition the surviving vertices")
        return all(self.adj[u] & b == 0 for u in iter_bits(a))


def build_power_graph(group: Group) -> PowerGraph:
    """The power graph of a group: x ~ y iff x != y and x in <y> or y in <x>."""
    n = group.size
    adj = [0] * n
    for x in range(n):
        m = group.closure_mask(x) & ~(1 << x)
        adj[x] |= m
        for y in iter_bits(m):
            adj[y] |= 1 << x
    return PowerGraph(vertex_count=n, adj=tuple(adj), group_name=group.name)


def proper_power_graph_connected(group: Group) -> bool:
    """Connectivity of the power graph with the identity vertex deleted."""
    if group.size < 3:
        raise ValueError("proper power graph connectivity needs order >= 3")
    graph = build_power_graph(group)
    alive = graph.full_mask & ~1
    start = (alive & -alive).bit_length() - 1
    return graph._flood(alive, start) == alive
