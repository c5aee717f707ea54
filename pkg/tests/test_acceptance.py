"""Exit criteria. A PASS/FAIL line per criterion is printed in the terminal summary."""

import math
import time
from pathlib import Path

import pytest

from crimnet.cli import main
from crimnet.generators import barabasi_albert, gilbert_gnp, newman_watts_strogatz, ring_lattice, watts_strogatz
from crimnet.graph import WeightedGraph
from crimnet.harness import compare, run_ensemble, specs_for, summarize
from crimnet.io import common_labels, write_comparison, write_degree_series
from crimnet.metrics import (average_degree, clustering, degree_distribution, degrees, fit_power_law,
                             strengths)
from crimnet.paths import bridges, diameter, path_length_distribution, shortest_paths_unweighted, \
    shortest_paths_weighted

from conftest import random_edge_lists
from oracles import bridges_by_removal, clustering_by_triangles

# node and edge counts of the two real networks
PHONE = (100, 124)
MEETINGS = (101, 256)


# ---- 1: dataset statistics --------------------------------------------------------------------

def _check_table(summary, g, nodes, edges, max_weight, avg, max_path):
    assert (summary.node_count, summary.edge_count, summary.max_weight) == (nodes, edges, max_weight)
    assert abs(summary.average_degree - avg) <= 0.005
    if summary.max_shortest_path != max_path:
        weighted = diameter(g, weighted=True, mode="weight")
        pytest.fail(f"unweighted diameter {summary.max_shortest_path} != {max_path}; "
                    f"weighted (weight-as-cost) diameter is {weighted}")


@pytest.mark.criterion(1)
def test_c1_meetings_table(meetings):
    g, _ = meetings
    t = time.perf_counter()
    s = summarize(g)
    assert time.perf_counter() - t < 1.0
    print(f"meetings: {s}")
    _check_table(s, g, 101, 256, 10, 5.07, 7)


@pytest.mark.criterion(1)
def test_c1_phonecalls_table(phonecalls):
    g, _ = phonecalls
    t = time.perf_counter()
    s = summarize(g)
    assert time.perf_counter() - t < 1.0
    print(f"phone calls: {s}")
    _check_table(s, g, 100, 124, 8, 2.48, 14)


@pytest.mark.criterion(1)
def test_c1_common_nodes(meetings, phonecalls):
    assert len(common_labels(meetings[1], phonecalls[1])) == 47


# ---- 2 and 3: synthetic model tables ---------------------------------------------------------

DETERMINISTIC = {
    PHONE: {"G-ER": (124, 2.48), "WS": (100, 2.00), "BA2": (196, 3.92), "BA3": (291, 5.82)},
    MEETINGS: {"G-ER": (256, 5.07), "WS": (202, 4.00), "BA2": (198, 3.92), "BA3": (294, 5.82)},
}


@pytest.mark.criterion(2)
@pytest.mark.parametrize("network", [PHONE, MEETINGS], ids=["phone", "meetings"])
def test_c2_deterministic_rows(network):
    t = time.perf_counter()
    specs = {s.name: s for s in specs_for(*network, base_seed=0)}
    for name, (edges, avg) in DETERMINISTIC[network].items():
        res = run_ensemble(specs[name], 100)
        assert res.replicas == 100
        assert set(res.edge_counts) == {edges}, name
        assert res.mean_edge_count == edges
        assert round(res.mean_average_degree, 2) == avg, name
    assert time.perf_counter() - t < 5.0


@pytest.mark.criterion(3)
@pytest.mark.parametrize("network,target,tol", [(PHONE, 123, 3), (MEETINGS, 250, 4)], ids=["phone", "meetings"])
def test_c3_nws_rows(network, target, tol):
    spec = {s.name: s for s in specs_for(*network, base_seed=0)}["N-WS"]
    res = run_ensemble(spec, 100)
    print(f"N-WS n={network[0]}: mean edges {res.mean_edge_count}, mean degree {res.mean_average_degree:.3f}")
    assert abs(res.mean_edge_count - target) <= tol


# ---- 4: invariants on a graph corpus ---------------------------------------------------------

def _check_invariants(g):
    n = g.node_count
    assert sum(degrees(g)) == 2 * g.edge_count
    assert math.fsum(degree_distribution(g).probabilities().values()) == pytest.approx(1.0, abs=1e-12)
    cl = clustering(g)
    assert all(0.0 <= c <= 1.0 for c in cl.per_node)
    assert cl.per_node == pytest.approx(clustering_by_triangles(n, g.edges()), abs=1e-12)
    unit = WeightedGraph.from_edges(n, [(e.u, e.v) for e in g.edges()])
    assert strengths(unit) == degrees(unit)
    for s in range(n):
        assert shortest_paths_weighted(unit, s, "weight") == shortest_paths_unweighted(unit, s)
    if n <= 30:
        got = {frozenset((e.u, e.v)) for e in bridges(g)}
        assert got == bridges_by_removal(n, g.edges())
    if n >= 2:
        pld = path_length_distribution(g)
        assert pld.histogram.total + pld.unreachable_pairs == n * (n - 1) // 2


@pytest.mark.criterion(4)
def test_c4_invariants_random_corpus():
    t = time.perf_counter()
    corpus = random_edge_lists(200, max_nodes=30, seed=2024)
    assert len(corpus) >= 200
    for n, edges in corpus:
        _check_invariants(WeightedGraph.from_edges(n, edges))
    # synthetic graphs at the real networks' sizes
    for n, l in (PHONE, MEETINGS):
        for spec in specs_for(n, l, base_seed=1):
            from crimnet.generators import generate
            _check_invariants(generate(spec))
    assert time.perf_counter() - t < 30.0


@pytest.mark.criterion(4)
def test_c4_invariants_fixture_graphs(meetings, phonecalls):
    for g, _ in (meetings, phonecalls):
        _check_invariants(g)


# ---- 5: generator boundaries -----------------------------------------------------------------

@pytest.mark.criterion(5)
def test_c5_generator_boundaries():
    t = time.perf_counter()
    for n in (1, 2, 10, 60):
        assert gilbert_gnp(n, 0.0, 3).edge_count == 0
        assert gilbert_gnp(n, 1.0, 3).edge_count == n * (n - 1) // 2
    for n, k in ((10, 2), (30, 4), (101, 4)):
        assert newman_watts_strogatz(n, k, 0.0, 5) == ring_lattice(n, k)
    lattice = watts_strogatz(24, 4, 0.0, 8)
    assert clustering_by_triangles(24, lattice.edges()) == [0.5] * 24
    assert clustering(lattice).per_node == [0.5] * 24
    assert time.perf_counter() - t < 5.0


# ---- 6: scale-free sanity at large n ---------------------------------------------------------

@pytest.mark.criterion(6)
def test_c6_large_n_hubs():
    t = time.perf_counter()
    ba = barabasi_albert(10000, 2, 0)
    h = degree_distribution(ba)
    fit = fit_power_law(h, k_min=2, k_max=h.max_key() / 10)
    print(f"BA n=10000 m=2: gamma={fit.gamma:.3f} r2={fit.r_squared:.3f} over {fit.points} bins")
    assert 2.5 <= fit.gamma <= 3.5
    ws = watts_strogatz(10000, 4, 0.5, 0)
    assert max(degrees(ws)) < 3 * average_degree(ws)
    assert time.perf_counter() - t < 60.0


# ---- 7: power-law fit recovery ---------------------------------------------------------------

@pytest.mark.criterion(7)
@pytest.mark.parametrize("gamma,k_max", [(2.0, 5), (3.0, 8)])
def test_c7_exact_power_law(gamma, k_max):
    fit = fit_power_law({k: k ** -gamma for k in range(1, k_max + 1)})
    assert abs(fit.gamma - gamma) <= 1e-9
    assert abs(fit.r_squared - 1.0) <= 1e-9


# ---- 8: degree-distribution comparison -------------------------------------------------------

@pytest.mark.criterion(8)
def test_c8_comparison_against_real_networks(meetings, phonecalls):
    for name, (g, _) in (("meetings", meetings), ("phonecalls", phonecalls)):
        a = compare(g, replicas=100, base_seed=0, reference_name=name)
        b = compare(g, replicas=100, base_seed=0, reference_name=name)
        assert write_comparison(a) == write_comparison(b)
        assert write_comparison(a, "json") == write_comparison(b, "json")
        assert write_degree_series(a) == write_degree_series(b)
        print(write_comparison(a).decode())
        for model, d in a.distances.items():
            assert d.total_variation > 0, f"{name}/{model}"


# ---- 9: CLI determinism ----------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_c9_cli_determinism(tmp_path, capsys):
    src = tmp_path / "net.csv"
    assert main(["generate", "--model", "nws", "--n", "60", "--k", "4", "--p", "0.25", "--seed", "3",
                 "-o", str(src)]) == 0
    # put some weight on the edges so weighted statistics differ from hop counts
    lines = src.read_text().splitlines()
    src.write_text("\n".join([lines[0]] + [f"{l[:-1]}{1 + i % 4}" for i, l in enumerate(lines[1:])]) + "\n")

    invocations = [
        ["stats", str(src)],
        ["stats", str(src), "--format", "json"],
        ["distributions", str(src), "-o", "{out}"],
        ["distributions", str(src), "--format", "json", "-o", "{out}"],
        ["paths", str(src), "-o", "{out}/p.csv"],
        ["paths", str(src), "--weighted", "--weighted-mode", "weight", "--format", "json", "-o", "{out}/w.json"],
        ["paths", str(src), "--weighted", "--weighted-mode", "inverse", "-o", "{out}/i.csv"],
        ["generate", "--model", "ba", "--n", "100", "--m", "2", "--seed", "7", "-o", "{out}/ba.csv"],
        ["generate", "--model", "ws", "--n", "100", "--k", "2", "--p", "0.5", "--seed", "7", "-o", "{out}/ws.csv"],
        ["compare", str(src), "--replicas", "1", "--seed", "1", "-o", "{out}"],
        ["compare", str(src), "--replicas", "5", "--seed", "1", "--format", "json", "-o", "{out}"],
    ]
    for i, argv in enumerate(invocations):
        outputs = []
        for run in ("a", "b"):
            out = tmp_path / f"run{i}{run}"
            out.mkdir()
            code = main([a.replace("{out}", str(out)) for a in argv])
            assert code == 0, argv
            stdout = capsys.readouterr().out
            files = {p.name: p.read_bytes() for p in sorted(Path(out).iterdir())}
            outputs.append((stdout, files))
        assert outputs[0] == outputs[1], argv
