"""Edge-list ingestion and deterministic serialization of results."""

from __future__ import annotations

import csv
import io
import json
import os
import re
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .graph import WeightedGraph
from .harness import DEFAULT_REPLICAS, ComparisonReport, NetworkSummary
from .metrics import Histogram

SCHEMA_VERSION = 1
OUTPUT_DIR_ENV = "CRIMNET_OUTPUT_DIR"
HEADER = ("source", "target", "weight")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class EdgeListRecord:
    source_label: str
    target_label: str
    weight: int


class LabelMap:
    """Bijection between external string labels and dense node ids."""

    def __init__(self, labels: Iterable[str] = ()):
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        for label in labels:
            self.add(label)

    def add(self, label: str) -> int:
        if label not in self._ids:
            self._ids[label] = len(self._labels)
            self._labels.append(label)
        return self._ids[label]

    def id(self, label: str) -> int:
        return self._ids[label]

    def label(self, node: int) -> str:
        return self._labels[node]

    @property
    def labels(self) -> list[str]:
        return list(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: str) -> bool:
        return label in self._ids

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelMap) and self._labels == other._labels

    def to_json(self) -> dict:
        return {"labels": self.labels}

    @classmethod
    def identity(cls, n: int) -> "LabelMap":
        return cls(str(i) for i in range(n))


def common_labels(a: LabelMap, b: LabelMap) -> set[str]:
    return set(a.labels) & set(b.labels)


@dataclass
class RunConfig:
    inputs: list[Path]
    weighted_mode: str | None = None
    replicas: int = DEFAULT_REPLICAS
    base_seed: int = 0
    output_dir: Path | None = None
    output_format: str = "csv"
    workers: int = 1
    generator: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.replicas < 1:
            raise ValueError(f"replica count must be >= 1, got {self.replicas}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.output_dir is None and os.environ.get(OUTPUT_DIR_ENV):
            self.output_dir = Path(os.environ[OUTPUT_DIR_ENV])


def _is_header(fields: list[str]) -> bool:
    return [f.strip().lower() for f in fields] == list(HEADER)


def iter_records(stream: TextIO | str) -> Iterable[tuple[int, EdgeListRecord]]:
    """Yield ``(line_number, record)`` from canonical ``source,target,weight`` CSV."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    seen_data = False
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = next(csv.reader([line]))
        if not seen_data and _is_header(fields):
            seen_data = True
            continue
        seen_data = True
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 3 fields (source,target,weight), got {len(fields)}")
        src, dst, w = (f.strip() for f in fields)
        if not src or not dst:
            raise ParseError(lineno, "empty node label")
        try:
            weight = int(w)
        except ValueError:
            raise ParseError(lineno, f"weight {w!r} is not an integer") from None
        if weight < 1:
            raise ParseError(lineno, f"weight must be >= 1, got {weight}")
        if src == dst:
            raise ParseError(lineno, f"self-loop on {src!r}")
        yield lineno, EdgeListRecord(src, dst, weight)


def parse_edge_list(stream: TextIO | str) -> tuple[WeightedGraph, LabelMap]:
    """Read an edge list; ids follow first appearance, repeated pairs accumulate weight."""
    labels = LabelMap()
    pending = []
    for _, rec in iter_records(stream):
        pending.append((labels.add(rec.source_label), labels.add(rec.target_label), rec.weight))
    if not pending:
        raise ParseError(0, "input contains no edges")
    g = WeightedGraph(len(labels))
    for u, v, w in pending:
        g.add_edge(u, v, w)
    return g, labels


def read_edge_list(path: str | Path) -> tuple[WeightedGraph, LabelMap]:
    with open(path, newline="", encoding="utf-8") as fh:
        try:
            return parse_edge_list(fh)
        except ParseError as exc:
            raise ParseError(exc.line, f"{path}: {str(exc).split(': ', 1)[1]}") from None


_SPLIT = re.compile(r"[,;\t ]+")
_HEADER_WORDS = {"source", "target", "from", "to", "src", "dst", "node1", "node2", "weight", "w"}


def _looks_like_header(fields: list[str]) -> bool:
    if len(fields) == 3:
        return not fields[2].lstrip("-").isdigit()
    return len(fields) == 2 and fields[0].lower() in _HEADER_WORDS


def normalize_edge_list(text: str) -> str:
    """Convert loosely formatted edge lists to canonical headered CSV.

    Accepts comma, semicolon, tab or space separators, an optional header
    line and an optional weight column (default 1). Faulty rows raise
    :class:`ParseError` with their line number.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f for f in _SPLIT.split(line) if f]
        if first:
            first = False
            if _looks_like_header(fields):
                continue
        if len(fields) == 2:
            fields.append("1")
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 2 or 3 fields, got {len(fields)}")
        writer.writerow(fields)
    return out.getvalue()


def format_float(x: float) -> str:
    """12 significant digits, always with a decimal point or exponent."""
    s = f"{x:.12g}"
    if "." not in s and "e" not in s and "n" not in s:
        s += ".0"
    return s


def _format_number(x: float) -> str:
    if float(x).is_integer():
        return str(int(x))
    return format_float(x)


def _csv_bytes(rows: Iterable[Iterable]) -> bytes:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)
    return out.getvalue().encode("utf-8")


def _json_bytes(payload: dict) -> bytes:
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")


def write_edge_list(g: WeightedGraph, labels: LabelMap | None = None) -> bytes:
    labels = labels or LabelMap.identity(g.node_count)
    rows = [HEADER]
    rows += [(labels.label(e.u), labels.label(e.v), e.weight) for e in g.iter_edges()]
    return _csv_bytes(rows)


def histogram_to_json(h: Histogram) -> dict:
    probs = h.probabilities()
    return {
        "bins": [[k, c] for k, c in h.items()],
        "probabilities": [[k, float(format_float(probs[k]))] for k in h.bins],
        "total": h.total,
    }


def write_histogram(h: Histogram, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        probs = h.probabilities()
        rows = [("value", "count", "probability")]
        rows += [(k, c, format_float(probs[k])) for k, c in h.items()]
        return _csv_bytes(rows)
    if fmt == "json":
        return _json_bytes({"schema_version": SCHEMA_VERSION, **histogram_to_json(h)})
    raise ValueError(f"unknown format {fmt!r}")


def read_histogram_json(data: bytes | str) -> Histogram:
    payload = json.loads(data)
    return Histogram({int(k): int(c) for k, c in payload["bins"]})


def summary_to_json(s: NetworkSummary) -> dict:
    d = asdict(s)
    d["average_degree"] = float(format_float(s.average_degree))
    return d


COMPARISON_COLUMNS = ("model", "edges", "avg_degree", "total_variation", "chi_square", "max_abs_diff")


def write_comparison(report: ComparisonReport, fmt: str = "csv") -> bytes:
    """Per-model table of mean edges, mean average degree and distances."""
    if not report.ensembles:
        raise ValueError("nothing to compare: report has no ensembles")
    if fmt == "csv":
        rows = [COMPARISON_COLUMNS]
        for e in report.ensembles:
            d = report.distances[e.spec.name]
            rows.append((e.spec.name, _format_number(e.mean_edge_count), format_float(e.mean_average_degree),
                         format_float(d.total_variation), format_float(d.chi_square),
                         format_float(d.max_abs_diff)))
        return _csv_bytes(rows)
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "reference": {"name": report.reference_name, **summary_to_json(report.reference),
                          "degree_distribution": _series(report.reference_distribution)},
            "base_seed": report.base_seed,
            "models": [
                {
                    "name": e.spec.name,
                    "spec": e.spec.params(),
                    "replicas": e.replicas,
                    "mean_edge_count": float(format_float(e.mean_edge_count)),
                    "mean_average_degree": float(format_float(e.mean_average_degree)),
                    "mean_degree_distribution": _series(e.mean_degree_distribution),
                    "distances": {k: float(format_float(v))
                                  for k, v in asdict(report.distances[e.spec.name]).items()},
                }
                for e in report.ensembles
            ],
        }
        return _json_bytes(payload)
    raise ValueError(f"unknown format {fmt!r}")


def _series(dist: dict[int, float]) -> list[list]:
    return [[k, float(format_float(p))] for k, p in sorted(dist.items())]


def write_degree_series(report: ComparisonReport) -> bytes:
    """Wide CSV of mean p_k per degree: reference first, then one column per model."""
    names = [e.spec.name for e in report.ensembles]
    support = sorted(set(report.reference_distribution).union(
        *(e.mean_degree_distribution for e in report.ensembles)))
    rows = [("degree", report.reference_name, *names)]
    for k in support:
        row = [k, format_float(report.reference_distribution.get(k, 0.0))]
        row += [format_float(e.mean_degree_distribution.get(k, 0.0)) for e in report.ensembles]
        rows.append(row)
    return _csv_bytes(rows)
