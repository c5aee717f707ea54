"""Shortest paths, path-length distributions, components and bridges."""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graph import Edge, GraphError, WeightedGraph
from .metrics import Histogram


class CostMode(str, Enum):
    """How an edge weight turns into a traversal cost."""

    WEIGHT = "weight"    # cost = w, heavy ties are long
    INVERSE = "inverse"  # cost = 1/w, heavy ties are short


@dataclass(frozen=True)
class PathLengthDistribution:
    histogram: Histogram
    pair_count: int
    unreachable_pairs: int


@dataclass(frozen=True)
class ComponentsReport:
    component_ids: list[int]
    component_count: int
    sizes: list[int]

    def largest(self) -> int:
        """Label of the largest component (lowest label on ties)."""
        return max(range(self.component_count), key=lambda c: (self.sizes[c], -c))


def _mode(mode) -> CostMode:
    try:
        return CostMode(mode)
    except ValueError:
        raise ValueError(f"unknown cost mode {mode!r}; expected 'weight' or 'inverse'") from None


def shortest_paths_unweighted(g: WeightedGraph, source: int) -> list[int | None]:
    """Hop distances from ``source``; ``None`` for unreachable nodes."""
    g.degree_of(source)
    adj = g.adjacency()
    dist: list[int | None] = [None] * g.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = du
                queue.append(v)
    return dist


def shortest_paths_weighted(g: WeightedGraph, source: int, mode=CostMode.WEIGHT) -> list[float | None]:
    """Dijkstra distances from ``source`` under the chosen cost mode.

    In ``weight`` mode the distances are exact integers.
    """
    mode = _mode(mode)
    g.degree_of(source)
    adj = g.adjacency()
    dist: list = [None] * g.node_count
    dist[source] = 0
    heap = [(0, source)]
    done = [False] * g.node_count
    inverse = mode is CostMode.INVERSE
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u].items():
            if done[v]:
                continue
            nd = d + (1.0 / w if inverse else w)
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _distances(g, source, weighted, mode):
    if weighted:
        return shortest_paths_weighted(g, source, mode)
    return shortest_paths_unweighted(g, source)


def path_length_distribution(g: WeightedGraph, weighted: bool = False,
                             mode=CostMode.WEIGHT) -> PathLengthDistribution:
    """Histogram of shortest-path lengths over unordered connected pairs.

    Only integer lengths are binned, so weighted mode requires
    ``mode='weight'``.
    """
    n = g.node_count
    if n < 2:
        raise GraphError(f"path-length distribution needs at least 2 nodes, got {n}")
    if weighted and _mode(mode) is CostMode.INVERSE:
        raise ValueError("inverse-weight costs are real-valued and cannot be binned; "
                         "use diameter() or shortest_paths_weighted() instead")
    counts: dict[int, int] = {}
    reachable = 0
    for s in range(n):
        dist = _distances(g, s, weighted, mode)
        for t in range(s + 1, n):
            d = dist[t]
            if d is not None:
                counts[d] = counts.get(d, 0) + 1
                reachable += 1
    total_pairs = n * (n - 1) // 2
    return PathLengthDistribution(Histogram(counts), reachable, total_pairs - reachable)


def connected_components(g: WeightedGraph) -> ComponentsReport:
    """Label components in order of their lowest node id."""
    adj = g.adjacency()
    labels = [-1] * g.node_count
    sizes = []
    for start in range(g.node_count):
        if labels[start] != -1:
            continue
        label = len(sizes)
        labels[start] = label
        size = 0
        stack = [start]
        while stack:
            u = stack.pop()
            size += 1
            for v in adj[u]:
                if labels[v] == -1:
                    labels[v] = label
                    stack.append(v)
        sizes.append(size)
    return ComponentsReport(labels, len(sizes), sizes)


def diameter(g: WeightedGraph, weighted: bool = False, mode=CostMode.WEIGHT):
    """Longest shortest path inside the largest connected component."""
    if g.node_count < 2:
        raise GraphError(f"diameter needs at least 2 nodes, got {g.node_count}")
    comps = connected_components(g)
    target = comps.largest()
    members = [u for u, c in enumerate(comps.component_ids) if c == target]
    best = 0
    for s in members:
        dist = _distances(g, s, weighted, mode)
        for t in members:
            if dist[t] > best:
                best = dist[t]
    return best


def bridges(g: WeightedGraph) -> set[Edge]:
    """Edges whose removal disconnects their endpoints (iterative Tarjan lowlink)."""
    adj = g.adjacency()
    n = g.node_count
    disc = [-1] * n
    low = [0] * n
    found: set[Edge] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (node, parent, neighbour iterator); simple graph so skipping the parent once is exact
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(adj[v])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    found.add(Edge.of(parent, u, adj[u][parent]))
    return found


@dataclass(frozen=True)
class PathLengthSummary:
    diameter: float
    mean_length: float
    pair_count: int
    unreachable_pairs: int


def path_length_summary(g: WeightedGraph, weighted: bool = False, mode=CostMode.WEIGHT) -> PathLengthSummary:
    """Real-valued path statistics, usable with every cost mode.

    ``mean_length`` averages over connected unordered pairs; ``diameter``
    is taken within the largest component.
    """
    n = g.node_count
    if n < 2:
        raise GraphError(f"path statistics need at least 2 nodes, got {n}")
    lengths = []
    for s in range(n):
        dist = _distances(g, s, weighted, mode)
        lengths.extend(d for d in dist[s + 1:] if d is not None)
    mean = math.fsum(lengths) / len(lengths) if lengths else 0.0
    return PathLengthSummary(diameter(g, weighted, mode), mean, len(lengths), n * (n - 1) // 2 - len(lengths))
