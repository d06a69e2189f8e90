"""Nim heaps and demi-quantum Nim superpositions.

A classical move removes pebbles from exactly one heap and is rendered as a
non-positive vector with a single nonzero entry, e.g. (0, -2, 0).  A
demi-quantum position is an ordered list of classical realizations; a
classical move collapses every realization it is infeasible for and plays
out normally on the rest.
"""

from __future__ import annotations

from dataclasses import dataclass

MoveVector = tuple[int, ...]


@dataclass(frozen=True)
class NimPosition:
    heaps: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(h < 0 for h in self.heaps):
            raise ValueError(f"heaps must be non-negative, got {self.heaps}")


@dataclass(frozen=True)
class Superposition:
    """Non-empty ordered list of equal-length heap vectors."""

    realizations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.realizations:
            raise ValueError("superposition needs at least one realization")
        n = len(self.realizations[0])
        for r in self.realizations:
            if len(r) != n:
                raise ValueError("realizations must have equal heap counts")
            if any(h < 0 for h in r):
                raise ValueError(f"heaps must be non-negative, got {r}")

    @property
    def heap_count(self) -> int:
        return len(self.realizations[0])

    @property
    def width(self) -> int:
        return len(self.realizations)


def move_vector(heap_count: int, heap: int, amount: int) -> MoveVector:
    """Render a take-from-one-heap move as a non-positive vector."""
    vec = [0] * heap_count
    vec[heap] = -amount
    return tuple(vec)


def vector_heap_amount(vec: MoveVector) -> tuple[int, int]:
    """Inverse of move_vector; raises on malformed vectors."""
    nonzero = [(i, v) for i, v in enumerate(vec) if v != 0]
    if len(nonzero) != 1 or nonzero[0][1] > 0:
        raise ValueError(f"not a single-heap removal vector: {vec}")
    i, v = nonzero[0]
    return i, -v


def nim_options(p: NimPosition) -> list[tuple[MoveVector, NimPosition]]:
    out = []
    n = len(p.heaps)
    for i, h in enumerate(p.heaps):
        for q in range(1, h + 1):
            heaps = p.heaps[:i] + (h - q,) + p.heaps[i + 1:]
            out.append((move_vector(n, i, q), NimPosition(heaps)))
    return out


def dqnim_apply(s: Superposition, heap: int, amount: int) -> Superposition:
    """Collapse-and-subtract: drop realizations with fewer than ``amount``
    pebbles on ``heap``, subtract from the rest.  Realization order is kept."""
    survivors = tuple(
        r[:heap] + (r[heap] - amount,) + r[heap + 1:]
        for r in s.realizations
        if r[heap] >= amount
    )
    if not survivors:
        raise ValueError(f"move (heap {heap}, amount {amount}) is infeasible")
    return Superposition(survivors)


def dqnim_options(s: Superposition) -> list[tuple[MoveVector, Superposition]]:
    """Classical moves feasible for at least one realization."""
    n = s.heap_count
    out = []
    for i in range(n):
        top = max(r[i] for r in s.realizations)
        for q in range(1, top + 1):
            out.append((move_vector(n, i, q), dqnim_apply(s, i, q)))
    return out
