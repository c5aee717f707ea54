"""Seeded synthetic network models.

Every generator takes ``seed`` (an int, or an existing
``numpy.random.Generator``) and is deterministic in it. Integer seeds drive
numpy's PCG64 bit generator. All synthetic edges carry weight 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .graph import GraphError, WeightedGraph

# redraw budget for WS rewiring and NWS shortcut sampling before giving up on one edge
MAX_REDRAWS = 1000


class Model(str, Enum):
    ER_GNL = "er-gnl"
    GILBERT_GNP = "gilbert-gnp"
    WS = "ws"
    NWS = "nws"
    BA = "ba"


_FIELDS = {
    Model.ER_GNL: {"l"},
    Model.GILBERT_GNP: {"p"},
    Model.WS: {"k", "p"},
    Model.NWS: {"k", "p"},
    Model.BA: {"m"},
}


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"probability must lie in [0, 1], got {p}")


def even_neighbors(k: int) -> int:
    """Largest even ring-neighbour count not above ``k``."""
    return 2 * (int(k) // 2)


def _pair_from_index(idx: int, n: int) -> tuple[int, int]:
    # row-major enumeration of pairs (i, j), i < j
    i = n - 2 - int(math.floor(math.sqrt(-8 * idx + 4 * n * (n - 1) - 7) / 2.0 - 0.5))
    j = idx + i + 1 - n * (n - 1) // 2 + (n - i) * (n - i - 1) // 2
    return i, j


def erdos_renyi_gnl(n: int, l: int, seed=None) -> WeightedGraph:
    """``l`` distinct edges drawn uniformly without replacement."""
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    max_edges = n * (n - 1) // 2
    if not 0 <= l <= max_edges:
        raise GraphError(f"l={l} outside [0, {max_edges}] for n={n}")
    rng = _rng(seed)
    g = WeightedGraph(n)
    if l == 0:
        return g
    for idx in sorted(rng.choice(max_edges, size=l, replace=False).tolist()):
        u, v = _pair_from_index(idx, n)
        g.add_edge(u, v)
    return g


def gilbert_gnp(n: int, p: float, seed=None) -> WeightedGraph:
    """Each unordered pair present independently with probability ``p``."""
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    _check_p(p)
    rng = _rng(seed)
    g = WeightedGraph(n)
    for u in range(n - 1):
        draws = rng.random(n - u - 1)
        for off in np.flatnonzero(draws < p).tolist():
            g.add_edge(u, u + 1 + off)
    return g


def _check_ring(n: int, k: int, p: float) -> int:
    _check_p(p)
    if k < 2:
        raise GraphError(f"ring neighbour count k must be >= 2, got {k}")
    if k >= n:
        raise GraphError(f"ring neighbour count k={k} must be below n={n}")
    eff = even_neighbors(k)
    if eff != k:
        warnings.warn(f"odd ring neighbour count k={k} normalized to {eff}", stacklevel=3)
    return eff


def ring_lattice(n: int, k: int) -> WeightedGraph:
    """Cycle where each node links to its ``k/2`` nearest neighbours on each side."""
    g = WeightedGraph(n)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            g.add_edge(u, (u + j) % n)
    return g


def watts_strogatz(n: int, k: int, p: float, seed=None) -> WeightedGraph:
    """Ring lattice with each edge rewired with probability ``p``.

    Rewiring keeps the first endpoint and moves the second to a uniform
    random node, redrawing on self-loops and duplicates. If no valid target
    turns up within ``MAX_REDRAWS`` draws the edge stays put, so the edge
    count is always ``n * (k // 2)``.
    """
    k = _check_ring(n, k, p)
    rng = _rng(seed)
    half = k // 2
    adj: list[set[int]] = [set() for _ in range(n)]
    for j in range(1, half + 1):
        for u in range(n):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    for j in range(1, half + 1):
        for u in range(n):
            v = (u + j) % n
            if v not in adj[u] or rng.random() >= p:
                continue
            if len(adj[u]) >= n - 1:
                continue
            for _ in range(MAX_REDRAWS):
                w = int(rng.integers(n))
                if w != u and w not in adj[u]:
                    adj[u].discard(v)
                    adj[v].discard(u)
                    adj[u].add(w)
                    adj[w].add(u)
                    break
    g = WeightedGraph(n)
    for u in range(n):
        for v in sorted(adj[u]):
            if u < v:
                g.add_edge(u, v)
    return g


def newman_watts_strogatz(n: int, k: int, p: float, seed=None) -> WeightedGraph:
    """Ring lattice plus, per ring edge and with probability ``p``, one shortcut.

    A shortcut joins a uniformly random pair of distinct, not yet connected
    nodes. No edge is ever removed.
    """
    k = _check_ring(n, k, p)
    rng = _rng(seed)
    g = ring_lattice(n, k)
    ring_edges = g.edge_count
    max_edges = n * (n - 1) // 2
    for _ in range(ring_edges):
        if rng.random() >= p or g.edge_count >= max_edges:
            continue
        for _ in range(MAX_REDRAWS):
            u, v = (int(x) for x in rng.integers(n, size=2))
            if u != v and not g.has_edge(u, v):
                g.add_edge(u, v)
                break
    return g


def barabasi_albert(n: int, m: int, seed=None) -> WeightedGraph:
    """Growth with preferential attachment.

    Starts from ``m`` isolated nodes; node ``m`` links to all of them, and
    every later node links to ``m`` distinct existing nodes picked with
    probability proportional to degree. Gives exactly ``(n - m) * m`` edges.
    """
    if m < 1 or m >= n:
        raise GraphError(f"BA needs 1 <= m < n, got m={m}, n={n}")
    rng = _rng(seed)
    g = WeightedGraph(n)
    # every edge endpoint appears once here, so a uniform pick is degree-proportional
    endpoints: list[int] = []
    for t in range(m):
        g.add_edge(m, t)
        endpoints.extend((m, t))
    for new in range(m + 1, n):
        chosen: list[int] = []
        seen = set()
        while len(chosen) < m:
            t = endpoints[int(rng.integers(len(endpoints)))]
            if t not in seen:
                seen.add(t)
                chosen.append(t)
        for t in chosen:
            g.add_edge(new, t)
            endpoints.extend((new, t))
    return g


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for one synthetic model. Only the model's own fields may be set."""

    model: Model
    n: int
    l: int | None = None
    p: float | None = None
    k: int | None = None
    m: int | None = None
    seed: int = 0
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        self.validate()

    def validate(self) -> None:
        need = _FIELDS[self.model]
        for name in ("l", "p", "k", "m"):
            value = getattr(self, name)
            if name in need and value is None:
                raise GraphError(f"model {self.model.value} requires parameter {name}")
            if name not in need and value is not None:
                raise GraphError(f"model {self.model.value} does not take parameter {name}")
        if self.n < 1:
            raise GraphError(f"n must be positive, got {self.n}")
        if self.p is not None:
            _check_p(self.p)
        if self.m is not None and not 1 <= self.m < self.n:
            raise GraphError(f"BA needs 1 <= m < n, got m={self.m}, n={self.n}")
        if self.k is not None and not 2 <= self.k < self.n:
            raise GraphError(f"ring neighbour count k={self.k} must satisfy 2 <= k < n={self.n}")
        if self.l is not None and not 0 <= self.l <= self.n * (self.n - 1) // 2:
            raise GraphError(f"l={self.l} exceeds the {self.n * (self.n - 1) // 2} possible edges")

    @property
    def name(self) -> str:
        return self.label or self.model.value

    def with_seed(self, seed: int) -> "GeneratorSpec":
        return replace(self, seed=seed)

    def params(self) -> dict:
        out = {"model": self.model.value, "n": self.n}
        for name in ("l", "p", "k", "m"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        out["seed"] = self.seed
        if self.label:
            out["label"] = self.label
        return out


def generate(spec: GeneratorSpec) -> WeightedGraph:
    if spec.model is Model.ER_GNL:
        return erdos_renyi_gnl(spec.n, spec.l, spec.seed)
    if spec.model is Model.GILBERT_GNP:
        return gilbert_gnp(spec.n, spec.p, spec.seed)
    if spec.model is Model.WS:
        return watts_strogatz(spec.n, spec.k, spec.p, spec.seed)
    if spec.model is Model.NWS:
        return newman_watts_strogatz(spec.n, spec.k, spec.p, spec.seed)
    return barabasi_albert(spec.n, spec.m, spec.seed)
