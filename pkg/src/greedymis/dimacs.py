"""DIMACS-style edge-list text format.

Header line ``p edge <n> <m>`` followed by ``e <u> <v>`` lines with 1-based
endpoints.  Lines starting with ``c`` and blank lines are ignored.  Vertex
ids are 0-based in memory and shifted on read/write.
"""

from __future__ import annotations

from .graph import Graph, GraphError


class GraphParseError(ValueError):
    """Malformed graph file; ``line`` is the 1-based offending line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def read_graph(data: bytes | str) -> Graph:
    """Parse an edge-list file body into a Graph."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError(lineno, "duplicate header line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(lineno, f"malformed header {line!r}")
            try:
                n = int(parts[2])
                declared_m = int(parts[3])
            except ValueError:
                raise GraphParseError(lineno, f"malformed header {line!r}") from None
            if n < 0 or declared_m < 0:
                raise GraphParseError(lineno, f"negative count in header {line!r}")
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError(lineno, "edge line before header")
            if len(parts) != 3:
                raise GraphParseError(lineno, f"malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(lineno, f"malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(lineno, f"endpoint out of range in {line!r}")
            if u == v:
                raise GraphParseError(lineno, f"self-loop in {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(lineno, f"unrecognized line {line!r}")
    if n is None:
        raise GraphParseError(1, "missing 'p edge <n> <m>' header")
    try:
        return Graph(n, edges)
    except GraphError as exc:  # pragma: no cover - endpoints validated above
        raise GraphParseError(1, str(exc)) from exc


def write_graph(g: Graph) -> bytes:
    """Serialize a Graph; ``read_graph(write_graph(g)) == g``."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return ("\n".join(lines) + "\n").encode("utf-8")
