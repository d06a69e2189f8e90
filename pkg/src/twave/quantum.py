"""Variant-D quantum Nim: superposed moves over superposed positions.

A quantum move is any non-empty set of distinct classical removal vectors;
it is feasible when each part is feasible for at least one realization.
Applying it crosses every part with every realization, keeping the distinct
feasible results; parts infeasible for a realization simply contribute
nothing there.  Width-1 moves are the classical moves, so demi-quantum play
is the width-1 slice of this option relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .nimber import OutcomeClass
from .rulesets import MoveVector, Superposition, vector_heap_amount
from .solver import SolveBudget, normalize, outcome


@dataclass(frozen=True)
class QuantumMove:
    """Non-empty set of distinct single-heap removal vectors."""

    parts: frozenset[MoveVector]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a quantum move needs at least one part")
        for part in self.parts:
            vector_heap_amount(part)

    @property
    def width(self) -> int:
        return len(self.parts)

    def rendering(self) -> tuple[MoveVector, ...]:
        return tuple(sorted(self.parts))

    def __repr__(self) -> str:
        return "<" + " | ".join(str(p) for p in self.rendering()) + ">"


def classical_moves(s: Superposition) -> list[MoveVector]:
    """Removal vectors feasible for at least one realization."""
    n = s.heap_count
    out = []
    for i in range(n):
        top = max(r[i] for r in s.realizations)
        for q in range(1, top + 1):
            vec = [0] * n
            vec[i] = -q
            out.append(tuple(vec))
    return sorted(out)


def qnim_apply(s: Superposition, move: QuantumMove) -> Superposition:
    """Tensor of parts and realizations, deduplicated and sorted."""
    results = set()
    for part in move.parts:
        i, q = vector_heap_amount(part)
        for r in s.realizations:
            if r[i] >= q:
                results.add(r[:i] + (r[i] - q,) + r[i + 1:])
    if not results:
        raise ValueError(f"quantum move {move!r} is infeasible")
    return Superposition(tuple(sorted(results)))


def qnim_options(
    s: Superposition, max_width: Optional[int] = None
) -> list[tuple[QuantumMove, Superposition]]:
    moves = classical_moves(s)
    widest = len(moves) if max_width is None else min(max_width, len(moves))
    out = []
    for width in range(1, widest + 1):
        for parts in combinations(moves, width):
            move = QuantumMove(frozenset(parts))
            out.append((move, qnim_apply(s, move)))
    return out


_outcome_memos: dict[Optional[int], dict] = {}


def qnim_outcome(
    s: Superposition,
    budget: Optional[SolveBudget] = None,
    max_width: Optional[int] = None,
) -> OutcomeClass:
    """Normal-play outcome under the variant-D option relation, memoized on
    the deduplicated sorted realization set."""
    memo = _outcome_memos.setdefault(max_width, {})
    return outcome(
        s,
        budget=budget,
        memo=memo,
        options_fn=lambda pos: qnim_options(pos, max_width),
        normalize_fn=normalize,
    )
