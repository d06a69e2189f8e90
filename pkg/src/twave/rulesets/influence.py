"""Demographic Influence: threshold subtraction with an endorsement cascade.

A move picks a demographic and an amount no larger than the group's highest
threshold.  All members are reduced first; the vertices driven from
non-negative to negative by that subtraction are collected, and only then is
every graph-neighbor of a collected vertex overwritten to -1.  Vertices made
negative by the overwrite do not cascade further.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import UndirectedGraph

DemographicMove = tuple[int, int]


@dataclass(frozen=True)
class InfluenceNetwork:
    graph: UndirectedGraph
    theta: tuple[int, ...]
    demographics: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        vertices = frozenset(range(len(self.theta)))
        if self.graph.vertices != vertices:
            raise ValueError("graph vertices must be 0..len(theta)-1")
        for d in self.demographics:
            if not d <= vertices:
                raise ValueError(f"demographic {sorted(d)} outside the vertex set")

    @property
    def vertex_count(self) -> int:
        return len(self.theta)


def demographic_apply(z: InfluenceNetwork, k: int, c: int) -> InfluenceNetwork:
    group = z.demographics[k]
    if c < 1 or not any(z.theta[v] >= c for v in group):
        raise ValueError(f"move (demographic {k}, amount {c}) is infeasible")
    theta = list(z.theta)
    collected = []
    for v in group:
        theta[v] -= c
        if z.theta[v] >= 0 and theta[v] < 0:
            collected.append(v)
    adj = z.graph.adjacency()
    for v in collected:
        for x in adj[v]:
            theta[x] = -1
    return InfluenceNetwork(z.graph, tuple(theta), z.demographics)


def demographic_options(
    z: InfluenceNetwork,
) -> list[tuple[DemographicMove, InfluenceNetwork]]:
    out = []
    for k, group in enumerate(z.demographics):
        top = max((z.theta[v] for v in group), default=0)
        for c in range(1, top + 1):
            out.append(((k, c), demographic_apply(z, k, c)))
    return out
