"""Rechargeable hypergraph Boolean Nim.

Every vertex holds at most one pebble and a token marks the current vertex.
A move takes the pebble of a vertex sharing a hyperedge with the current
one; hyperedges not containing the chosen vertex are lost, and the token
moves there.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HypergraphNimPosition:
    vertex_count: int
    hyperedges: tuple[frozenset[int], ...]
    pebbles: tuple[int, ...]
    current: int

    def __post_init__(self) -> None:
        if len(self.pebbles) != self.vertex_count:
            raise ValueError("pebbles must list one bit per vertex")
        if any(p not in (0, 1) for p in self.pebbles):
            raise ValueError("pebbles are 0/1")
        if not 0 <= self.current < max(self.vertex_count, 1):
            raise ValueError(f"current vertex {self.current} out of range")
        valid = range(self.vertex_count)
        for e in self.hyperedges:
            if any(v not in valid for v in e):
                raise ValueError(f"hyperedge {sorted(e)} outside the vertex set")


def hypergraph_nim_options(
    h: HypergraphNimPosition,
) -> list[tuple[int, HypergraphNimPosition]]:
    out = []
    for v in range(h.vertex_count):
        if not h.pebbles[v]:
            continue
        if not any(h.current in e and v in e for e in h.hyperedges):
            continue
        pebbles = h.pebbles[:v] + (0,) + h.pebbles[v + 1:]
        edges = tuple(e for e in h.hyperedges if v in e)
        out.append((v, HypergraphNimPosition(h.vertex_count, edges, pebbles, v)))
    return out
