"""Node and graph statistics: degree, strength, distributions, clustering."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .graph import GraphError, WeightedGraph


@dataclass
class Histogram:
    """Discrete distribution over non-negative integer values."""

    bins: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, c in self.bins.items():
            if int(k) != k or k < 0:
                raise ValueError(f"histogram keys must be non-negative integers, got {k!r}")
            if c < 0:
                raise ValueError(f"histogram counts must be non-negative, got {c!r}")
            if c:
                clean[int(k)] = int(c)
        self.bins = dict(sorted(clean.items()))

    @classmethod
    def of(cls, values: Iterable[int]) -> "Histogram":
        return cls(dict(Counter(values)))

    @property
    def total(self) -> int:
        return sum(self.bins.values())

    def __len__(self) -> int:
        return len(self.bins)

    def __add__(self, other: "Histogram") -> "Histogram":
        merged = Counter(self.bins)
        merged.update(other.bins)
        return Histogram(dict(merged))

    def probabilities(self) -> dict[int, float]:
        total = self.total
        if total == 0:
            return {}
        return {k: c / total for k, c in self.bins.items()}

    def max_key(self) -> int | None:
        return max(self.bins) if self.bins else None

    def mode_count(self) -> int:
        return max(self.bins.values()) if self.bins else 0

    def items(self):
        return self.bins.items()


@dataclass(frozen=True)
class ClusteringReport:
    per_node: list[float]
    average: float


@dataclass(frozen=True)
class PowerLawFit:
    gamma: float
    intercept: float
    r_squared: float
    points: int


def _require_nodes(g: WeightedGraph) -> None:
    if g.node_count == 0:
        raise GraphError("operation undefined on an empty graph")


def degree(g: WeightedGraph, u: int) -> int:
    return g.degree_of(u)


def strength(g: WeightedGraph, u: int) -> int:
    """Sum of weights on the edges incident to ``u``."""
    return sum(w for _, w in g.neighbors(u))


def degrees(g: WeightedGraph) -> list[int]:
    return [len(nbrs) for nbrs in g.adjacency()]


def strengths(g: WeightedGraph) -> list[int]:
    return [sum(nbrs.values()) for nbrs in g.adjacency()]


def average_degree(g: WeightedGraph) -> float:
    _require_nodes(g)
    return 2 * g.edge_count / g.node_count


def degree_distribution(g: WeightedGraph) -> Histogram:
    _require_nodes(g)
    return Histogram.of(degrees(g))


def weight_distribution(g: WeightedGraph) -> Histogram:
    return Histogram.of(e.weight for e in g.iter_edges())


def strength_distribution(g: WeightedGraph) -> Histogram:
    _require_nodes(g)
    return Histogram.of(strengths(g))


def clustering(g: WeightedGraph) -> ClusteringReport:
    """Local clustering coefficients and their mean.

    Nodes with fewer than two neighbours get a coefficient of 0 and are
    still counted in the average.
    """
    _require_nodes(g)
    adj = g.adjacency()
    per_node = []
    for u, nbrs in enumerate(adj):
        k = len(nbrs)
        if k < 2:
            per_node.append(0.0)
            continue
        nb = sorted(nbrs)
        links = 0
        for i, a in enumerate(nb):
            row = adj[a]
            for b in nb[i + 1:]:
                if b in row:
                    links += 1
        per_node.append(2 * links / (k * (k - 1)))
    return ClusteringReport(per_node, math.fsum(per_node) / len(per_node))


def small_world_estimate(node_count: int, avg_degree: float) -> float:
    """Logarithmic estimate of the average distance, ``ln N / ln <k>``."""
    if node_count < 2:
        raise ValueError(f"need at least 2 nodes, got {node_count}")
    if avg_degree <= 1:
        raise ValueError(f"small-world estimate undefined for average degree {avg_degree} <= 1")
    return math.log(node_count) / math.log(avg_degree)


def fit_power_law(h: Histogram | Mapping[int, float], k_min: float | None = None,
                  k_max: float | None = None) -> PowerLawFit:
    """Least-squares line through ``log p_k`` against ``log k``.

    Bins with ``k = 0`` or zero mass are skipped. ``k_min``/``k_max``
    restrict the fitted range (inclusive). ``gamma`` is the negated slope.
    """
    probs = h.probabilities() if isinstance(h, Histogram) else dict(h)
    pts = [(k, p) for k, p in sorted(probs.items())
           if k >= 1 and p > 0
           and (k_min is None or k >= k_min)
           and (k_max is None or k <= k_max)]
    if len(pts) < 2:
        raise ValueError(f"power-law fit needs at least 2 usable bins, got {len(pts)}")
    x = np.log(np.array([k for k, _ in pts], dtype=float))
    y = np.log(np.array([p for _, p in pts], dtype=float))
    xm, ym = x.mean(), y.mean()
    sxx = np.sum((x - xm) ** 2)
    slope = float(np.sum((x - xm) * (y - ym)) / sxx)
    intercept = float(ym - slope * xm)
    ss_res = float(np.sum((y - (intercept + slope * x)) ** 2))
    ss_tot = float(np.sum((y - ym) ** 2))
    r2 = 1.0 if ss_tot == 0 else max(0.0, 1.0 - ss_res / ss_tot)
    return PowerLawFit(gamma=-slope, intercept=intercept, r_squared=r2, points=len(pts))
