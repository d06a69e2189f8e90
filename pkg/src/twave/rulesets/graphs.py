"""Node Kayles graphs and Friend Circle positions.

Node Kayles keeps no separate selected-set: playing a vertex deletes its
closed neighborhood, so feasibility is mere presence.  Vertex identities are
preserved across deletions because reductions pair moves by vertex id.

Friend Circle is a seeded edge-truthification game with a single-level
cascade: playing a seed turns all its incident edges true, and every
neighbor already joined to it by a true edge (before the move) has its own
incident edges turned true as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u}, {v}) must be stored sorted")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the graph")

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "UndirectedGraph":
        return cls(
            frozenset(range(vertex_count)),
            frozenset(edge(u, v) for u, v in edges),
        )

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self) -> dict[int, frozenset[int]]:
        return _adjacency(self)


@lru_cache(maxsize=4096)
def _adjacency(g: UndirectedGraph) -> dict[int, frozenset[int]]:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return {v: frozenset(nbrs) for v, nbrs in adj.items()}


def node_kayles_options(g: UndirectedGraph) -> list[tuple[int, UndirectedGraph]]:
    """One option per remaining vertex; the successor deletes its closed
    neighborhood."""
    adj = g.adjacency()
    out = []
    for v in sorted(g.vertices):
        removed = adj[v] | {v}
        vertices = g.vertices - removed
        edges = frozenset(e for e in g.edges if e[0] in vertices and e[1] in vertices)
        out.append((v, UndirectedGraph(vertices, edges)))
    return out


@dataclass(frozen=True)
class FriendCirclePosition:
    graph: UndirectedGraph
    seeds: frozenset[int]
    true_edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not self.seeds <= self.graph.vertices:
            raise ValueError("seeds must be vertices of the graph")
        if not self.true_edges <= self.graph.edges:
            raise ValueError("true edges must be edges of the graph")

    def weight(self, u: int, v: int) -> str:
        e = edge(u, v)
        if e not in self.graph.edges:
            raise ValueError(f"no edge {e}")
        return "t" if e in self.true_edges else "f"


def friend_circle_options(
    p: FriendCirclePosition,
) -> list[tuple[int, FriendCirclePosition]]:
    """Seeds with at least one incident false edge.  The cascade tests the
    pre-move weights and runs one level deep."""
    adj = p.graph.adjacency()
    out = []
    for v in sorted(p.seeds):
        incident = {edge(v, x) for x in adj[v]}
        if incident <= p.true_edges:
            continue
        new_true = set(p.true_edges) | incident
        for x in adj[v]:
            if edge(v, x) in p.true_edges:
                new_true.update(edge(x, y) for y in adj[x])
        out.append(
            (v, FriendCirclePosition(p.graph, p.seeds, frozenset(new_true)))
        )
    return out
