import pytest

from weakcover import Graph, gen_family

# The eight-vertex working example. Edge (1, 2) has common neighborhood
# {3, 5} and private neighborhoods {4, 8} (side of 1) and {7} (side of 2);
# reducing along it must leave {4, 6, 7, 8} with edges (4,7), (6,7), (7,8).
# Deliberately restated here, independent of the copy inside the package.
EIGHT_VERTEX_EDGES = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 8),
    (2, 3), (2, 5), (2, 7),
    (3, 4), (3, 5), (3, 8),
    (4, 5),
    (5, 6), (5, 7),
    (6, 7),
    (7, 8),
)


@pytest.fixture
def eight_vertex() -> Graph:
    return Graph(range(1, 9), EIGHT_VERTEX_EDGES)


@pytest.fixture
def petersen() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)]
    return Graph(range(1, 11), outer + spokes + inner)


def random_graphs(count, n_lo, n_hi, seed0):
    """A deterministic mixed bag of seeded random instances."""
    out = []
    for k in range(count):
        n = n_lo + k % (n_hi - n_lo + 1)
        p = (0.2, 0.5, 0.8)[k % 3]
        out.append(gen_family("random", n, p=p, seed=seed0 + k))
    return out
