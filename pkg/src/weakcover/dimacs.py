"""DIMACS edge-format I/O.

The format: an optional run of "c ..." comment lines, one "p edge N M" header,
then "e u v" lines with 1-based endpoints. Vertices are exactly 1..N, so
isolated vertices are representable; id gaps are not, and writing a graph
whose id set has gaps will reintroduce the missing ids as isolated vertices
on reparse.
"""

from .graph import Graph


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed problem line {line!r}") from None
            if n < 0 or declared_m < 0:
                raise ValueError(f"line {lineno}: negative sizes in problem line")
        elif fields[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: vertex id out of range 1..{n}")
            if u == v:
                raise ValueError(f"line {lineno}: self-loop at {u}")
            edges.append((min(u, v), max(u, v)))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    # Duplicate edge lines collapse; Graph deduplicates via adjacency sets.
    return Graph(range(1, n + 1), edges)


def write_dimacs(g: Graph) -> str:
    if g.n and min(g.vertices) < 1:
        raise ValueError("DIMACS requires positive vertex ids")
    n = max(g.vertices) if g.n else 0
    lines = [f"p edge {n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
