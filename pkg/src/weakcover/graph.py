"""Simple undirected graphs with stable vertex ids.

Graphs are immutable values: every operation that changes structure returns a
new Graph. Vertex ids are positive integers and survive deletion unchanged,
so a subgraph of a graph on {1..8} may live on {4, 6, 7, 8}. Invariants
(symmetry, no self-loops, known endpoints) are checked at construction time.
"""

import random
from typing import Iterable


class Graph:
    """An undirected simple graph stored as an adjacency-set map."""

    __slots__ = ("_adj", "_edges")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if not isinstance(v, int):
                raise ValueError(f"vertex ids must be integers, got {v!r}")
            adj[v] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {
            v: frozenset(nbrs) for v, nbrs in adj.items()
        }
        self._edges: tuple[tuple[int, int], ...] = tuple(
            sorted((v, w) for v, nbrs in self._adj.items() for w in nbrs if v < w)
        )

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return self._edges

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        """The induced subgraph on vertices(g) minus drop. Ids are kept."""
        gone = set(drop)
        kept = [v for v in self._adj if v not in gone]
        kept_set = set(kept)
        edges = [(u, v) for u, v in self._edges if u in kept_set and v in kept_set]
        return Graph(kept, edges)

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """A copy with the given edges added (endpoints must already exist)."""
        return Graph(self._adj, list(self._edges) + list(extra))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash((frozenset(self._adj), self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def gen_family(family: str, n: int, p: float | None = None, seed: int | None = None) -> Graph:
    """Build a named instance family on vertices 1..n.

    Families:
      complete      K_n, n >= 1
      cycle         C_n on 1..n in order, n >= 3
      wheel         cycle on 1..n-1 plus hub n adjacent to every cycle
                    vertex, n >= 4
      double_wheel  cycle on 1..n-2 plus hubs n-1 and n, each adjacent to
                    every cycle vertex and to each other, n >= 5
      random        Erdos-Renyi G(n, p), seeded and deterministic, n >= 1

    random requires both p (in [0, 1]) and seed.
    """
    if family == "complete":
        _need(n >= 1, f"complete needs n >= 1, got {n}")
        vs = range(1, n + 1)
        return Graph(vs, [(i, j) for i in vs for j in vs if i < j])
    if family == "cycle":
        _need(n >= 3, f"cycle needs n >= 3, got {n}")
        return Graph(range(1, n + 1), _cycle_edges(1, n))
    if family == "wheel":
        _need(n >= 4, f"wheel needs n >= 4, got {n}")
        rim = _cycle_edges(1, n - 1)
        spokes = [(i, n) for i in range(1, n)]
        return Graph(range(1, n + 1), rim + spokes)
    if family == "double_wheel":
        _need(n >= 5, f"double_wheel needs n >= 5, got {n}")
        rim = _cycle_edges(1, n - 2)
        spokes = [(i, h) for h in (n - 1, n) for i in range(1, n - 1)]
        return Graph(range(1, n + 1), rim + spokes + [(n - 1, n)])
    if family == "random":
        _need(n >= 1, f"random needs n >= 1, got {n}")
        if p is None or seed is None:
            raise ValueError("random needs both p and seed")
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {p}")
        rng = random.Random(seed)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < p
        ]
        return Graph(range(1, n + 1), edges)
    raise ValueError(f"unknown family {family!r}")


def _cycle_edges(lo: int, hi: int) -> list[tuple[int, int]]:
    vs = list(range(lo, hi + 1))
    if len(vs) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    """True when every edge of g has at least one endpoint in s."""
    members = set(s)
    return all(u in members or v in members for u, v in g.edges())


def reduction_sets(g: Graph, i: int, j: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split the neighborhoods of an edge (i, j) into (delta, d_i, d_j).

    delta is the set of common neighbors, d_i the remaining neighbors private
    to i, d_j those private to j. The three sets are pairwise disjoint and
    delta | d_i | d_j | {i, j} covers both closed neighborhoods.
    """
    if not g.has_edge(i, j):
        raise ValueError(f"({i}, {j}) is not an edge")
    ni = g.neighbors(i)
    nj = g.neighbors(j)
    delta = ni & nj
    d_i = ni - delta - {j}
    d_j = nj - delta - {i}
    return frozenset(delta), frozenset(d_i), frozenset(d_j)
