"""Weighted undirected network analytics and synthetic-model comparison."""

__version__ = "0.1.0"

from .graph import Edge, GraphError, WeightedGraph, induced_subgraph, new_graph
from .metrics import (ClusteringReport, Histogram, PowerLawFit, average_degree, clustering, degree,
                      degree_distribution, fit_power_law, small_world_estimate, strength,
                      strength_distribution, weight_distribution)
from .paths import (ComponentsReport, CostMode, PathLengthDistribution, bridges, connected_components,
                    diameter, path_length_distribution, shortest_paths_unweighted, shortest_paths_weighted)
from .generators import (GeneratorSpec, Model, barabasi_albert, erdos_renyi_gnl, generate, gilbert_gnp,
                         newman_watts_strogatz, watts_strogatz)
from .harness import (ComparisonReport, EnsembleResult, NetworkSummary, compare, default_specs,
                      distribution_distances, run_ensemble, specs_for, summarize)
