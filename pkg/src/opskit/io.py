"""Text formats for graphs, networks, knapsack instances, rank and score CSVs.

Graph file (one edge per line, ``#`` starts a comment line)::

    n 8
    1 2 5
    1 4 2

Flow networks use the same layout with each line read as a directed arc
``tail head capacity``; parallel arcs are allowed. Knapsack files start with
``capacity <C>`` followed by ``weight value`` lines.

Rank CSV: a header row of object ids, then one row of integer ranks per
expert. Score CSV: a header row of indicator names, then one row of 0..3
scores per expert, plus optional keyword rows ``weight,...`` and
``mean,...`` (the latter for data published only as per-indicator means).

Every ``format_*`` writer emits the canonical form its ``parse_*`` reader
accepts, and canonical files round-trip byte for byte.
"""

from __future__ import annotations

import csv
import io
from importlib import resources
from pathlib import Path

from .algorithms.maxflow import Arc, FlowNetwork
from .errors import (
    BadVertexId,
    DuplicateEdge,
    NonIntegerCell,
    ParseError,
    RaggedRows,
    ScoreOutOfScale,
)
from .graph import Edge, WeightedGraph, WeightMatrix, format_weight, parse_weight
from .stats.concordance import RankMatrix
from .stats.scores import ScoreMatrix

FIXTURES = ("fig1.graph", "table1.csv", "scores_tech.csv", "scores_psych.csv")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _header(lines, keyword: str) -> int:
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError(f"empty input, expected '{keyword} <count>'", 1) from None
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError(f"expected '{keyword} <count>'", lineno)
    try:
        value = int(tokens[1])
    except ValueError:
        raise ParseError(f"'{keyword}' needs an integer, got {tokens[1]!r}", lineno) from None
    if value < 0:
        raise ParseError(f"'{keyword}' must be >= 0", lineno)
    return value


def _triple(tokens, lineno: int, n: int) -> tuple[int, int, float]:
    if len(tokens) != 3:
        raise ParseError(f"expected 'u v w', got {len(tokens)} fields", lineno)
    try:
        u, v = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"vertex ids must be integers: {' '.join(tokens)}", lineno) from None
    try:
        w = float(tokens[2])
    except ValueError:
        raise ParseError(f"bad weight {tokens[2]!r}", lineno) from None
    for x in (u, v):
        if not 1 <= x <= n:
            raise BadVertexId(f"vertex {x} outside 1..{n}", lineno)
    if u == v:
        raise ParseError(f"self-loop on vertex {u}", lineno)
    if not w >= 0 or w == float("inf"):
        raise ParseError(f"weight must be finite and >= 0, got {tokens[2]}", lineno)
    return u, v, w


def parse_graph_file(text: str) -> WeightedGraph:
    lines = _content_lines(text)
    n = _header(lines, "n")
    edges: dict[tuple[int, int], Edge] = {}
    for lineno, tokens in lines:
        e = Edge(*_triple(tokens, lineno, n))
        if e.key in edges:
            raise DuplicateEdge(f"duplicate edge {e.u}-{e.v}", lineno)
        edges[e.key] = e
    return WeightedGraph(n, edges.values())


def format_graph(g: WeightedGraph) -> str:
    out = [f"n {g.n}"]
    out += [f"{e.u} {e.v} {format_weight(e.weight)}" for e in g.edges]
    return "\n".join(out) + "\n"


def parse_network_file(text: str) -> FlowNetwork:
    lines = _content_lines(text)
    n = _header(lines, "n")
    return FlowNetwork(n, [Arc(*_triple(tokens, lineno, n)) for lineno, tokens in lines])


def format_network(net: FlowNetwork) -> str:
    out = [f"n {net.n}"]
    out += [f"{a.tail} {a.head} {format_weight(a.capacity)}" for a in net.arcs]
    return "\n".join(out) + "\n"


def parse_knapsack_file(text: str) -> tuple[list[tuple[int, float]], int]:
    lines = _content_lines(text)
    capacity = _header(lines, "capacity")
    items = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError("expected 'weight value'", lineno)
        try:
            w = int(tokens[0])
            v = float(tokens[1])
        except ValueError:
            raise ParseError(f"bad item {' '.join(tokens)!r}", lineno) from None
        if w < 0 or v < 0:
            raise ParseError("item weight and value must be >= 0", lineno)
        items.append((w, v))
    return items, capacity


def format_knapsack(items, capacity: int) -> str:
    out = [f"capacity {capacity}"] + [f"{int(w)} {format_weight(v)}" for w, v in items]
    return "\n".join(out) + "\n"


def parse_weight_matrix(text: str) -> WeightMatrix:
    """Whitespace-separated rows; absent edges are written ``inf``."""
    rows = []
    for lineno, tokens in _content_lines(text):
        try:
            rows.append(tuple(parse_weight(t) for t in tokens))
        except ValueError:
            raise ParseError(f"bad matrix cell in {' '.join(tokens)!r}", lineno) from None
    if any(len(r) != len(rows) for r in rows):
        raise RaggedRows(f"matrix is not square ({len(rows)} rows)")
    return WeightMatrix(len(rows), tuple(rows))


def format_weight_matrix(c: WeightMatrix) -> str:
    return "".join(" ".join(format_weight(x) for x in row) + "\n" for row in c.rows)


def _csv_rows(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        cells = [c.strip() for c in row]
        if not cells or cells == [""]:
            continue
        rows.append((lineno, cells))
    return rows


def _write_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _int_cell(cell: str, lineno: int) -> int:
    try:
        return int(cell)
    except ValueError:
        raise NonIntegerCell(f"expected an integer, got {cell!r}", lineno) from None


def parse_rank_csv(text: str) -> RankMatrix:
    """Parse a rank table. Repeated ranks are reported by
    :attr:`RankMatrix.tie_warnings`, not rejected."""
    rows = _csv_rows(text)
    if not rows:
        raise ParseError("empty rank CSV", 1)
    first_line, first = rows[0]
    if all(c.lstrip("-").isdigit() for c in first) and len(rows) == 1:
        # headerless single row, e.g. a 1x1 matrix
        return RankMatrix(((_int_cell(c, first_line) for c in first),))
    labels = tuple(first)
    data = []
    for lineno, cells in rows[1:]:
        if len(cells) != len(labels):
            raise RaggedRows(f"expected {len(labels)} cells, got {len(cells)}", lineno)
        data.append(tuple(_int_cell(c, lineno) for c in cells))
    if not data:
        raise ParseError("rank CSV has a header but no expert rows", first_line)
    return RankMatrix(tuple(data), labels)


def format_rank_csv(r: RankMatrix) -> str:
    return _write_csv([list(r.labels), *r.x])


def _float_cell(cell: str, lineno: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise ParseError(f"expected a number, got {cell!r}", lineno) from None


def parse_score_csv(text: str) -> ScoreMatrix:
    rows = _csv_rows(text)
    if not rows:
        raise ParseError("empty score CSV", 1)
    names = tuple(rows[0][1])
    k = len(names)
    scores, weights, means = [], (), ()
    for lineno, cells in rows[1:]:
        keyword = cells[0].lower()
        if keyword in ("weight", "mean"):
            if len(cells) != k + 1:
                raise RaggedRows(f"expected '{keyword}' plus {k} cells, got {len(cells)}", lineno)
            values = tuple(_float_cell(c, lineno) for c in cells[1:])
            if keyword == "weight":
                if any(w <= 0 for w in values):
                    raise ParseError("weights must be > 0", lineno)
                weights = values
            else:
                if any(not 0 <= v <= 3 for v in values):
                    raise ScoreOutOfScale("means must lie in [0, 3]", lineno)
                means = values
            continue
        if len(cells) != k:
            raise RaggedRows(f"expected {k} cells, got {len(cells)}", lineno)
        row = tuple(_int_cell(c, lineno) for c in cells)
        for v in row:
            if not 0 <= v <= 3:
                raise ScoreOutOfScale(f"score {v} not in 0..3", lineno)
        scores.append(row)
    return ScoreMatrix(names, tuple(scores), weights, means)


def format_score_csv(s: ScoreMatrix) -> str:
    rows: list[list] = [list(s.names), *s.scores]
    rows.append(["weight", *(format_weight(w) for w in s.weights)])
    if s.reported_means:
        rows.append(["mean", *(format_weight(v) for v in s.reported_means)])
    return _write_csv(rows)


def fixture_text(name: str) -> str:
    """Contents of a bundled fixture (one of :data:`FIXTURES`)."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    return resources.files("opskit").joinpath("fixtures", name).read_text(encoding="utf-8")


def read_input(path: str) -> str:
    """Read ``path``; a missing ``fixtures/<name>`` falls back to the bundled copy."""
    p = Path(path)
    if not p.exists() and p.parent.name == "fixtures" and p.name in FIXTURES:
        return fixture_text(p.name)
    return p.read_text(encoding="utf-8")
