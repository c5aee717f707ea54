"""Replicated synthetic-model ensembles compared against a real network."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .generators import GeneratorSpec, Model, even_neighbors, generate
from .graph import GraphError, WeightedGraph
from .metrics import average_degree, degree_distribution, weight_distribution
from .paths import connected_components, diameter

DEFAULT_REPLICAS = 100
WS_REWIRE_P = 0.5
NWS_SHORTCUT_P = 0.25
BA_LINKS = (2, 3)


@dataclass(frozen=True)
class NetworkSummary:
    node_count: int
    edge_count: int
    max_weight: int
    max_weight_frequency: int
    average_degree: float
    max_shortest_path: int
    component_count: int


@dataclass
class EnsembleResult:
    spec: GeneratorSpec
    replicas: int
    mean_edge_count: float
    mean_average_degree: float
    mean_degree_distribution: dict[int, float]
    edge_counts: list[int] = field(default_factory=list, repr=False)


@dataclass(frozen=True)
class Distances:
    total_variation: float
    chi_square: float
    max_abs_diff: float


@dataclass
class ComparisonReport:
    reference: NetworkSummary
    reference_distribution: dict[int, float]
    ensembles: list[EnsembleResult]
    distances: dict[str, Distances]
    base_seed: int
    reference_name: str = "reference"


def summarize(g: WeightedGraph) -> NetworkSummary:
    """Table-style description of a network; path length is unweighted."""
    if g.node_count == 0:
        raise GraphError("cannot summarize an empty graph")
    weights = weight_distribution(g)
    return NetworkSummary(
        node_count=g.node_count,
        edge_count=g.edge_count,
        max_weight=weights.max_key() or 0,
        max_weight_frequency=weights.mode_count(),
        average_degree=average_degree(g),
        max_shortest_path=diameter(g) if g.node_count >= 2 else 0,
        component_count=connected_components(g).component_count,
    )


def replica_seed(base_seed: int, index: int) -> int:
    """64-bit seed for replica ``index``; independent of execution order."""
    state = np.random.SeedSequence([base_seed & (2**64 - 1), index]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def _replica_stats(spec: GeneratorSpec) -> tuple[int, float, dict[int, float]]:
    g = generate(spec)
    return g.edge_count, average_degree(g), degree_distribution(g).probabilities()


def run_ensemble(spec: GeneratorSpec, replicas: int = DEFAULT_REPLICAS, workers: int = 1) -> EnsembleResult:
    """Generate ``replicas`` graphs with derived seeds and average their statistics.

    ``spec.seed`` is the base seed. A degree missing from a replica counts as
    probability 0 for that replica.
    """
    if replicas < 1:
        raise ValueError(f"replicas must be >= 1, got {replicas}")
    specs = [spec.with_seed(replica_seed(spec.seed, i)) for i in range(replicas)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            stats = list(pool.map(_replica_stats, specs, chunksize=max(1, replicas // (4 * workers))))
    else:
        stats = [_replica_stats(s) for s in specs]

    edge_counts = [s[0] for s in stats]
    sums: dict[int, list[float]] = {}
    for _, _, dist in stats:
        for k, p in dist.items():
            sums.setdefault(k, []).append(p)
    mean_dist = {k: math.fsum(v) / replicas for k, v in sorted(sums.items())}
    return EnsembleResult(
        spec=spec,
        replicas=replicas,
        mean_edge_count=sum(edge_counts) / replicas,
        mean_average_degree=math.fsum(s[1] for s in stats) / replicas,
        mean_degree_distribution=mean_dist,
        edge_counts=edge_counts,
    )


def distribution_distances(p: dict[int, float], q: dict[int, float]) -> Distances:
    """Total variation, symmetric chi-square and max per-degree gap over the union support."""
    support = sorted(set(p) | set(q))
    diffs = [(p.get(k, 0.0), q.get(k, 0.0)) for k in support]
    tv = 0.5 * math.fsum(abs(a - b) for a, b in diffs)
    chi = math.fsum((a - b) ** 2 / (a + b) for a, b in diffs if a + b > 0)
    mad = max((abs(a - b) for a, b in diffs), default=0.0)
    return Distances(total_variation=min(1.0, tv), chi_square=chi, max_abs_diff=mad)


def default_specs(reference: WeightedGraph, base_seed: int = 0) -> list[GeneratorSpec]:
    """The five comparison models parameterized from the reference graph."""
    return specs_for(reference.node_count, reference.edge_count, base_seed)


def specs_for(n: int, l: int, base_seed: int = 0) -> list[GeneratorSpec]:
    """G-ER, WS, N-WS, BA2 and BA3 for a network with ``n`` nodes and ``l`` edges.

    Ring models use ``k = 2l/n`` rounded down to an even number.
    """
    k = max(2, even_neighbors(int(2 * l / n)))
    specs = [
        GeneratorSpec(Model.ER_GNL, n=n, l=l, seed=base_seed, label="G-ER"),
        GeneratorSpec(Model.WS, n=n, k=k, p=WS_REWIRE_P, seed=base_seed, label="WS"),
        GeneratorSpec(Model.NWS, n=n, k=k, p=NWS_SHORTCUT_P, seed=base_seed, label="N-WS"),
    ]
    specs += [GeneratorSpec(Model.BA, n=n, m=m, seed=base_seed, label=f"BA{m}") for m in BA_LINKS]
    return specs


def compare(reference: WeightedGraph, specs: list[GeneratorSpec] | None = None,
            replicas: int = DEFAULT_REPLICAS, base_seed: int = 0, workers: int = 1,
            reference_name: str = "reference") -> ComparisonReport:
    """Ensemble every spec and measure its mean degree distribution against the reference.

    With ``specs=None`` the five default models are used. Each spec's own
    ``seed`` is its base seed; ``base_seed`` only feeds the defaults.
    """
    if reference.node_count == 0:
        raise GraphError("reference graph is empty")
    if specs is None:
        specs = default_specs(reference, base_seed)
    if not specs:
        raise ValueError("nothing to compare: no generator specs given")
    ref_dist = degree_distribution(reference).probabilities()
    ensembles = [run_ensemble(s, replicas, workers) for s in specs]
    distances = {e.spec.name: distribution_distances(e.mean_degree_distribution, ref_dist) for e in ensembles}
    if len(distances) != len(ensembles):
        raise ValueError("generator spec names must be unique within one comparison")
    return ComparisonReport(
        reference=summarize(reference),
        reference_distribution=ref_dist,
        ensembles=ensembles,
        distances=distances,
        base_seed=base_seed,
        reference_name=reference_name,
    )
