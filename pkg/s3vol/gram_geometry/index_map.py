"""Edge labels of the tetrahedron and their Gram matrix positions.

Edges are labelled e1..e6 with opposite pairs (e1, e4), (e2, e5), (e3, e6).
Faces are the rows of the Gram matrix; vertex p is the vertex opposite face p.
Every module takes its index conventions from here.
"""

from typing import NamedTuple


class EdgeIndex(NamedTuple):
    """Gram position (p', q') of an edge and its complementary cofactor pair (p, q).

    The edge lies on faces p' and q' and joins the vertices opposite faces p and q.
    """

    edge: int
    gram: tuple[int, int]
    cofactor: tuple[int, int]


EDGE_INDEX_MAP: dict[int, EdgeIndex] = {
    1: EdgeIndex(1, (1, 2), (3, 4)),
    2: EdgeIndex(2, (1, 3), (2, 4)),
    3: EdgeIndex(3, (2, 3), (1, 4)),
    4: EdgeIndex(4, (3, 4), (1, 2)),
    5: EdgeIndex(5, (2, 4), (1, 3)),
    6: EdgeIndex(6, (1, 4), (2, 3)),
}

OPPOSITE_EDGE: dict[int, int] = {1: 4, 2: 5, 3: 6, 4: 1, 5: 2, 6: 3}

# edges meeting at the vertices opposite faces 4, 3, 2, 1
VERTEX_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 5, 6),
    (2, 4, 6),
    (3, 4, 5),
)

# complements of the opposite pairs (3, 6), (2, 5), (1, 4)
EDGE_QUADRUPLES: tuple[tuple[int, int, int, int], ...] = (
    (1, 2, 4, 5),
    (1, 3, 4, 6),
    (2, 3, 5, 6),
)

_EDGE_BY_FACES: dict[frozenset[int], int] = {
    frozenset(index.gram): edge for edge, index in EDGE_INDEX_MAP.items()
}


def sigma(j: int) -> int:
    """The opposite edge j <-> j±3."""
    return OPPOSITE_EDGE[j]


def edge_between_faces(a: int, b: int) -> int:
    """Label of the edge on faces a and b (1-based, a != b)."""
    return _EDGE_BY_FACES[frozenset((a, b))]
