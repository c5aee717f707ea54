"""Weighted undirected graph with dense integer node ids."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class GraphError(ValueError):
    """Raised for invalid graph construction or queries."""


class Edge(NamedTuple):
    u: int
    v: int
    weight: int

    @classmethod
    def of(cls, u: int, v: int, weight: int = 1) -> "Edge":
        # canonical orientation, so Edge.of(1, 0, w) == Edge.of(0, 1, w)
        return cls(u, v, weight) if u < v else cls(v, u, weight)


class WeightedGraph:
    """Undirected simple graph whose edges carry positive integer weights.

    Repeated insertions of the same pair accumulate weight. Self-loops are
    rejected. Node ids are ``0 .. node_count - 1``.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, node_count: int = 0):
        if node_count < 0:
            raise GraphError(f"node_count must be non-negative, got {node_count}")
        self._adj: list[dict[int, int]] = [{} for _ in range(node_count)]
        self._edge_count = 0

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple]) -> "WeightedGraph":
        """Build a graph from ``(u, v)`` or ``(u, v, w)`` tuples."""
        g = cls(node_count)
        for e in edges:
            if len(e) == 2:
                g.add_edge(e[0], e[1])
            else:
                g.add_edge(e[0], e[1], e[2])
        return g

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"WeightedGraph(nodes={self.node_count}, edges={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._adj == other._adj

    def _check(self, u: int) -> None:
        if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < len(self._adj):
            raise GraphError(f"invalid node id {u!r} (graph has {len(self._adj)} nodes)")

    def add_node(self) -> int:
        self._adj.append({})
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int, w: int = 1) -> "WeightedGraph":
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop on node {u} is not allowed")
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise GraphError(f"edge weight must be a positive integer, got {w!r}")
        old = self._adj[u].get(v)
        if old is None:
            self._edge_count += 1
            new = w
        else:
            new = old + w
        self._adj[u][v] = new
        self._adj[v][u] = new
        return self

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def weight(self, u: int, v: int) -> int | None:
        self._check(u)
        self._check(v)
        return self._adj[u].get(v)

    def neighbors(self, u: int) -> list[tuple[int, int]]:
        """``(neighbor, weight)`` pairs sorted by neighbor id."""
        self._check(u)
        return sorted(self._adj[u].items())

    def neighbor_ids(self, u: int) -> list[int]:
        self._check(u)
        return sorted(self._adj[u])

    def degree_of(self, u: int) -> int:
        self._check(u)
        return len(self._adj[u])

    def nodes(self) -> range:
        return range(len(self._adj))

    def iter_edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield Edge(u, v, nbrs[v])

    def edges(self) -> list[Edge]:
        return list(self.iter_edges())

    def adjacency(self) -> list[dict[int, int]]:
        """Read-only view of the raw adjacency maps. Do not mutate."""
        return self._adj

    def copy(self) -> "WeightedGraph":
        g = WeightedGraph(0)
        g._adj = [dict(nbrs) for nbrs in self._adj]
        g._edge_count = self._edge_count
        return g

    def without_edge(self, u: int, v: int) -> "WeightedGraph":
        """Copy of the graph with edge ``(u, v)`` removed."""
        if not self.has_edge(u, v):
            raise GraphError(f"no edge between {u} and {v}")
        g = self.copy()
        del g._adj[u][v]
        del g._adj[v][u]
        g._edge_count -= 1
        return g


def new_graph(node_count: int) -> WeightedGraph:
    return WeightedGraph(node_count)


def induced_subgraph(g: WeightedGraph, nodes: Iterable[int]) -> tuple[WeightedGraph, dict[int, int]]:
    """Subgraph on ``nodes`` with re-densified ids.

    Returns the subgraph and a mapping from original id to new id. New ids
    follow ascending order of the original ids.
    """
    keep = sorted(set(nodes))
    for u in keep:
        g._check(u)
    mapping = {old: new for new, old in enumerate(keep)}
    sub = WeightedGraph(len(keep))
    adj = g.adjacency()
    for old in keep:
        for nbr, w in adj[old].items():
            if old < nbr and nbr in mapping:
                sub.add_edge(mapping[old], mapping[nbr], w)
    return sub, mapping
