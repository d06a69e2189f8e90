"""Avoid True: positive CNF over 1-based variables plus a set of chosen ones.

A variable is selectable when choosing it leaves at least one clause with no
true variable.  Clauses never change; only the true-set grows.  An empty
clause is legal and can never be satisfied, so it keeps every remaining
variable selectable (it is the image of an uncollapsable all-ones Boolean
Nim realization).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CnfPosition:
    var_count: int
    clauses: tuple[frozenset[int], ...]
    true_set: frozenset[int]

    def __post_init__(self) -> None:
        valid = range(1, self.var_count + 1)
        for c in self.clauses:
            if any(x not in valid for x in c):
                raise ValueError(f"clause {sorted(c)} outside x1..x{self.var_count}")
        if any(x not in valid for x in self.true_set):
            raise ValueError(
                f"true set {sorted(self.true_set)} outside x1..x{self.var_count}"
            )

    @classmethod
    def from_clauses(cls, var_count, clauses, true_set=()) -> "CnfPosition":
        return cls(
            var_count,
            tuple(frozenset(c) for c in clauses),
            frozenset(true_set),
        )


def avoid_true_options(c: CnfPosition) -> list[tuple[int, CnfPosition]]:
    """Variables whose selection still leaves some clause entirely false."""
    out = []
    for x in range(1, c.var_count + 1):
        if x in c.true_set:
            continue
        chosen = c.true_set | {x}
        if any(not (clause & chosen) for clause in c.clauses):
            out.append((x, CnfPosition(c.var_count, c.clauses, chosen)))
    return out
