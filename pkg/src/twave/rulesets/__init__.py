"""Position types and a uniform options generator for the nine rulesets.

``options(position)`` returns the feasible (move, successor) pairs for any
position; an empty list means the position is terminal under normal play.
All positions are immutable values and all generators are pure functions.
"""

from __future__ import annotations

from functools import singledispatch

from .cnf import CnfPosition, avoid_true_options
from .graphs import (
    Edge,
    FriendCirclePosition,
    UndirectedGraph,
    edge,
    friend_circle_options,
    node_kayles_options,
)
from .grid import (
    BooleanMatrix,
    CrosswiseAnd,
    CrosswiseOr,
    Grid,
    cw_and_options,
    cw_or_options,
    tw_options,
)
from .hypernim import HypergraphNimPosition, hypergraph_nim_options
from .influence import (
    DemographicMove,
    InfluenceNetwork,
    demographic_apply,
    demographic_options,
)
from .nim import (
    MoveVector,
    NimPosition,
    Superposition,
    dqnim_apply,
    dqnim_options,
    move_vector,
    nim_options,
    vector_heap_amount,
)

__all__ = [
    "BooleanMatrix",
    "CnfPosition",
    "CrosswiseAnd",
    "CrosswiseOr",
    "DemographicMove",
    "Edge",
    "FriendCirclePosition",
    "Grid",
    "HypergraphNimPosition",
    "InfluenceNetwork",
    "MoveVector",
    "NimPosition",
    "Superposition",
    "UndirectedGraph",
    "avoid_true_options",
    "cw_and_options",
    "cw_or_options",
    "demographic_apply",
    "demographic_options",
    "dqnim_apply",
    "dqnim_options",
    "edge",
    "friend_circle_options",
    "hypergraph_nim_options",
    "move_vector",
    "nim_options",
    "node_kayles_options",
    "options",
    "tw_options",
    "vector_heap_amount",
]


@singledispatch
def options(position):
    """Feasible (move, successor) pairs of a position, dispatched by type."""
    raise TypeError(f"no ruleset registered for {type(position).__name__}")


options.register(Grid, tw_options)
options.register(CrosswiseAnd, cw_and_options)
options.register(CrosswiseOr, cw_or_options)
options.register(NimPosition, nim_options)
options.register(Superposition, dqnim_options)
options.register(CnfPosition, avoid_true_options)
options.register(UndirectedGraph, node_kayles_options)
options.register(FriendCirclePosition, friend_circle_options)
options.register(InfluenceNetwork, demographic_options)
options.register(HypergraphNimPosition, hypergraph_nim_options)
