"""Edge-list text format.

One ``u v`` pair per line; ``#`` starts a comment; blank lines are ignored.
Vertex labels are arbitrary non-whitespace tokens and are mapped to dense
0-based ids in order of first appearance.
"""

from __future__ import annotations

from .errors import GraphInputError
from .graph import Graph


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse edge-list text; returns the graph and the id -> label table."""
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def vertex_id(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphInputError(
                f"line {lineno}: expected two vertex tokens, got {len(tokens)}"
            )
        u, v = vertex_id(tokens[0]), vertex_id(tokens[1])
        if u == v:
            raise GraphInputError(f"line {lineno}: self-loop at {tokens[0]!r}")
        edges.append((u, v))

    if not labels:
        raise GraphInputError("no edges found in input")
    return Graph(len(labels), edges), labels


def format_edge_list(g: Graph, labels: list[str] | None = None) -> str:
    """Serialize a graph to edge-list text, one edge per line.

    Lines are canonical (smaller label first, lines sorted) so parsing and
    re-serializing reproduces the text byte for byte.
    """
    if labels is None:
        labels = [str(v) for v in range(g.n)]
    lines = []
    for u, v in g.edges():
        a, b = sorted((labels[u], labels[v]))
        lines.append(f"{a} {b}")
    return "\n".join(sorted(lines)) + "\n"
