"""Nimber arithmetic and outcome classes for impartial games under normal play."""

from __future__ import annotations

import enum
from typing import Iterable


class Nimber(int):
    """A Grundy value.  Renders as ``*k``; ``*0`` is a previous-player win.

    Values are plain machine integers: every game in this workbench has a
    Grundy value bounded by its option count, which is bounded by the board
    width, so big integers are never needed.
    """

    def __new__(cls, value: int) -> "Nimber":
        if value < 0:
            raise ValueError(f"nimber value must be non-negative, got {value}")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"*{int(self)}"

    __str__ = __repr__

    def __xor__(self, other: int) -> "Nimber":
        return Nimber(int(self) ^ int(other))

    __rxor__ = __xor__


class OutcomeClass(enum.Enum):
    """Normal-play outcome: N = next player wins, P = previous player wins."""

    N = "N"
    P = "P"

    def __str__(self) -> str:
        return self.value


def nimber_add(a: int, b: int) -> Nimber:
    """Sum of independent game components: bitwise xor of the two values."""
    return Nimber(int(a) ^ int(b))


def mex(values: Iterable[int]) -> Nimber:
    """Least non-negative integer not present in ``values``."""
    seen = {int(v) for v in values}
    k = 0
    while k in seen:
        k += 1
    return Nimber(k)


def outcome_of(grundy: int) -> OutcomeClass:
    """A position is an N-position exactly when its Grundy value is nonzero."""
    return OutcomeClass.N if int(grundy) != 0 else OutcomeClass.P
