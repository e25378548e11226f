"""Exact vertex connectivity and minimum cut-set enumeration.

Connectivity is computed by Menger's theorem: for a non-complete graph the
connectivity equals the minimum over non-adjacent pairs (s, t) of the maximum
number of internally vertex-disjoint s-t paths, obtained by unit-capacity
max-flow on the vertex-split digraph (in/out node per vertex). Two pure-graph
optimizations keep this fast on dense power graphs:

* pairs are taken between representatives of closed-neighborhood twin classes
  (twins are exchanged by a graph automorphism, so min cuts between them are
  equal), ordered by increasing degree sum;
* each flow aborts as soon as it reaches the best cut size found so far.

Minimum cut-set enumeration searches unions of generator classes: any minimal
cut-set is a union of such classes and contains the identity, so a
depth-first exact-sum search over classes is exhaustive for minimum cut-sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitsets import iter_bits, mask_of
from .powergraph import PowerGraph, Separation


class ResourceLimitError(RuntimeError):
    """Search exceeded its configured bound; partial results are attached."""

    def __init__(self, message: str, partial: tuple[frozenset[int], ...] = ()):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class CutReport:
    """A vertex cut with its size and any certified status.

    ``kappa`` is the size of the reported cut; it equals the graph's vertex
    connectivity exactly when ``is_minimum`` is True. Flags are None when the
    corresponding status was not determined.
    """

    cut: frozenset[int]
    kappa: int
    is_minimum: bool | None
    is_minimal: bool | None
    witness: Separation | None


def _split_residual(adj: Sequence[int], n: int) -> list[int]:
    # node 2v = in-copy, node 2v+1 = out-copy; vertex arcs in->out carry unit
    # capacity, edge arcs out->in are effectively infinite (never removed)
    res = [0] * (2 * n)
    for v in range(n):
        res[2 * v] = 1 << (2 * v + 1)
        out = 0
        for w in iter_bits(adj[v]):
            out |= 1 << (2 * w)
        res[2 * v + 1] = out
    return res


def _bfs_augment(res: list[int], src: int, snk: int, nnodes: int):
    """One BFS on the residual digraph; returns (parent, visited_mask).

    parent is None when the sink is unreachable, in which case visited_mask
    covers everything reachable from src (used for min-cut extraction).
    """
    parent = [-1] * nnodes
    visited = 1 << src
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            m = res[u] & ~visited
            if not m:
                continue
            visited |= m
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                parent[v] = u
                if v == snk:
                    return parent, visited
                nxt.append(v)
        frontier = nxt
    return None, visited


def _st_flow(
    adj: Sequence[int], n: int, s: int, t: int, limit: int | None = None
) -> tuple[int, frozenset[int] | None, list[int]]:
    """Max vertex-disjoint s-t paths with optional early abort.

    Returns (flow, cut, residual). cut is None when the computation aborted at
    ``limit`` augmentations; otherwise it is a minimum s-t vertex cut read off
    the final residual reachability.
    """
    res = _split_residual(adj, n)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while True:
        if limit is not None and flow >= limit:
            return flow, None, res
        parent, visited = _bfs_augment(res, src, snk, 2 * n)
        if parent is None:
            # edge arcs stay open, so the reachable-set boundary crosses only
            # saturated vertex arcs: exactly the min vertex cut
            cut = frozenset(
                v
                for v in range(n)
                if (visited >> (2 * v)) & 1 and not (visited >> (2 * v + 1)) & 1
            )
            return flow, cut, res
        v = snk
        while v != src:
            u = parent[v]
            if u ^ 1 == v:
                # vertex arc (either direction): toggle forward/reverse
                res[u] &= ~(1 << v)
                res[v] |= 1 << u
            elif u & 1:
                # forward edge arc out->in: capacity unbounded, open reverse
                res[v] |= 1 << u
            else:
                # reverse edge arc in->out: cancel the unit it carried
                res[u] &= ~(1 << v)
            v = u
        flow += 1


def _twin_class_representatives(graph: PowerGraph) -> list[int]:
    # vertices with equal closed neighborhoods are swapped by an automorphism,
    # and same-class vertices are always adjacent: one representative suffices
    reps: dict[int, int] = {}
    for v in range(graph.vertex_count):
        reps.setdefault(graph.adj[v] | (1 << v), v)
    return sorted(reps.values())


def _connectivity_with_cut(graph: PowerGraph) -> tuple[int, frozenset[int]]:
    n = graph.vertex_count
    adj = graph.adj
    v_min = min(range(n), key=lambda v: adj[v].bit_count())
    best = adj[v_min].bit_count()
    best_cut = graph.neighbors(v_min)
    reps = _twin_class_representatives(graph)
    pairs = [
        (s, t)
        for i, s in enumerate(reps)
        for t in reps[i + 1 :]
        if not graph.adjacent(s, t)
    ]
    pairs.sort(key=lambda p: (adj[p[0]].bit_count() + adj[p[1]].bit_count(), p))
    for s, t in pairs:
        flow, cut, _ = _st_flow(adj, n, s, t, limit=best)
        if cut is not None and flow < best:
            best, best_cut = flow, cut
    return best, best_cut


def vertex_connectivity(graph: PowerGraph) -> int:
    """Minimum number of vertices whose removal disconnects the graph.

    Complete graphs yield vertex_count - 1 (removal down to a single vertex).
    """
    if graph.vertex_count < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if graph.is_complete:
        return graph.vertex_count - 1
    kappa, _ = _connectivity_with_cut(graph)
    return kappa


def minimum_cutset(graph: PowerGraph) -> CutReport:
    """One minimum cut-set with a witnessing separation; graph must not be complete."""
    if graph.vertex_count < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if graph.is_complete:
        raise ValueError("a complete graph has no cut-set")
    kappa, cut = _connectivity_with_cut(graph)
    comps = graph.components_after_removal(cut)
    witness = Separation(comps[0], frozenset().union(*comps[1:]))
    return CutReport(cut=cut, kappa=kappa, is_minimum=True, is_minimal=True, witness=witness)


def min_vertex_cut_between(graph: PowerGraph, s: int, t: int) -> CutReport:
    """A minimum s-t vertex cut; s and t must be distinct and non-adjacent."""
    n = graph.vertex_count
    if not (0 <= s < n and 0 <= t < n) or s == t:
        raise ValueError(f"need two distinct vertices, got {s}, {t}")
    if graph.adjacent(s, t):
        raise ValueError(f"vertices {s} and {t} are adjacent; no vertex cut separates them")
    flow, cut, _ = _st_flow(graph.adj, n, s, t)
    assert cut is not None and len(cut) == flow
    comps = graph.components_after_removal(cut)
    side_s = next(c for c in comps if s in c)
    rest = frozenset().union(*(c for c in comps if c is not side_s))
    return CutReport(
        cut=cut, kappa=flow, is_minimum=None, is_minimal=None,
        witness=Separation(side_s, rest),
    )


def max_disjoint_paths(graph: PowerGraph, s: int, t: int) -> list[list[int]]:
    """A maximum family of internally vertex-disjoint s-t paths."""
    n = graph.vertex_count
    if graph.adjacent(s, t):
        raise ValueError(f"vertices {s} and {t} are adjacent")
    flow, _, res = _st_flow(graph.adj, n, s, t)
    init = _split_residual(graph.adj, n)
    # arcs carrying flow: saturated vertex arcs show as lost forward bits,
    # flowed edge arcs show as reverse bits added at the head's in-node
    used = [0] * (2 * n)
    for v in range(n):
        used[2 * v] |= init[2 * v] & ~res[2 * v]
        for u_out in iter_bits(res[2 * v] & ~init[2 * v]):
            used[u_out] |= 1 << (2 * v)
    src, snk = 2 * s + 1, 2 * t
    paths = []
    for _ in range(flow):
        path = [s]
        node = src
        while node != snk:
            step = used[node] & -used[node]
            used[node] ^= step
            node = step.bit_length() - 1
            if node % 2 == 1 and node != src:
                path.append(node // 2)
        path.append(t)
        paths.append(path)
    return paths


def certify_minimal(graph: PowerGraph, vertices: Iterable[int]) -> CutReport:
    """Check a cut-set for minimality and attach a witnessing separation."""
    cut = frozenset(vertices)
    if not graph.is_cut_set(cut):
        raise ValueError("certify_minimal requires a cut-set")
    minimal = graph.is_minimal_cut_set(cut)
    witness = None
    if minimal:
        comps = graph.components_after_removal(cut)
        witness = Separation(comps[0], frozenset().union(*comps[1:]))
    return CutReport(
        cut=cut, kappa=len(cut), is_minimum=None, is_minimal=minimal, witness=witness
    )


def minimalize_cutset(graph: PowerGraph, vertices: Iterable[int]) -> frozenset[int]:
    """Greedily shrink a cut-set to a minimal one (deterministic scan order)."""
    cut = set(vertices)
    if not graph.is_cut_set(cut):
        raise ValueError("minimalize_cutset requires a cut-set")
    changed = True
    while changed:
        changed = False
        for x in sorted(cut):
            smaller = cut - {x}
            if graph.is_cut_set(smaller):
                cut = smaller
                changed = True
                break
    return frozenset(cut)


def all_minimum_cutsets(
    graph: PowerGraph,
    classes: Sequence[frozenset[int]],
    kappa: int,
    *,
    max_combinations: int = 10_000_000,
) -> list[frozenset[int]]:
    """Every minimum cut-set, by exhaustive search over generator-class unions.

    ``classes`` must partition the vertices into generator classes of the
    underlying group. Every minimum cut-set is minimal, hence a union of
    generator classes, and contains the identity class {0}; the search walks
    class combinations of total size ``kappa`` (classes sorted by size
    descending, pruned on exact remaining sum) and keeps those that pass
    is_cut_set. Raises ResourceLimitError past ``max_combinations`` steps,
    with the sets found so far attached.
    """
    n = graph.vertex_count
    covered = mask_of(v for c in classes for v in c)
    if covered != graph.full_mask or sum(len(c) for c in classes) != n:
        raise ValueError("classes must partition the vertex set")
    if kappa >= n - 1:
        return []
    identity_class = next(c for c in classes if 0 in c)
    others = sorted((c for c in classes if 0 not in c), key=lambda c: (-len(c), min(c)))
    masks = [mask_of(c) for c in others]
    sizes = [len(c) for c in others]
    suffix = [0] * (len(others) + 1)
    for i in range(len(others) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]
    target = kappa - len(identity_class)
    if target < 0:
        return []
    id_mask = mask_of(identity_class)
    found: list[frozenset[int]] = []
    steps = 0

    def walk(i: int, acc: int, need: int) -> None:
        nonlocal steps
        steps += 1
        if steps > max_combinations:
            raise ResourceLimitError(
                f"class-union search exceeded {max_combinations} combinations",
                partial=tuple(found),
            )
        if need == 0:
            candidate = id_mask | acc
            if graph.is_cut_set(iter_bits(candidate)):
                found.append(frozenset(iter_bits(candidate)))
            return
        if i == len(others) or suffix[i] < need:
            return
        if sizes[i] <= need:
            walk(i + 1, acc | masks[i], need - sizes[i])
        walk(i + 1, acc, need)

    walk(0, 0, target)
    return sorted(found, key=sorted)
