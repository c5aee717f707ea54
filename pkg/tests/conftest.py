import os
import random
import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crimnet.io import normalize_edge_list, parse_edge_list  # noqa: E402

FIXTURE_DIR = Path(__file__).parent / "fixtures"
DATA_ENV = "CRIMNET_DATA_DIR"
DATASET_FILES = {
    "meetings": ("meetings.csv", "Montagna_meetings_edgelist.csv"),
    "phonecalls": ("phonecalls.csv", "Montagna_phonecalls_edgelist.csv"),
}


def find_dataset(name):
    dirs = [Path(os.environ[DATA_ENV])] if os.environ.get(DATA_ENV) else []
    dirs.append(FIXTURE_DIR)
    for d in dirs:
        for fname in DATASET_FILES[name]:
            if (d / fname).is_file():
                return d / fname
    return None


def load_dataset(name):
    path = find_dataset(name)
    if path is None:
        pytest.fail(
            f"dataset fixture {name!r} not found: place one of {DATASET_FILES[name]} in "
            f"tests/fixtures/ or ${DATA_ENV}", pytrace=False)
    return parse_edge_list(normalize_edge_list(path.read_text(encoding="utf-8")))


@pytest.fixture(scope="session")
def meetings():
    return load_dataset("meetings")


@pytest.fixture(scope="session")
def phonecalls():
    return load_dataset("phonecalls")


def random_edge_lists(count, max_nodes=30, seed=12345, max_weight=5):
    """(n, [(u, v, w), ...]) corpus built with the stdlib RNG only."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(1, max_nodes)
        density = rng.choice([0.05, 0.1, 0.2, 0.4, 0.8])
        edges = [(u, v, rng.randint(1, max_weight))
                 for u in range(n) for v in range(u + 1, n) if rng.random() < density]
        rng.shuffle(edges)
        corpus.append((n, edges))
    return corpus


# acceptance bookkeeping: one PASS/FAIL line per criterion in the terminal summary
_criteria = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[marker.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        results = _criteria[num]
        ok = all(passed for _, passed in results)
        failed = [name for name, passed in results if not passed]
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} ({len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
