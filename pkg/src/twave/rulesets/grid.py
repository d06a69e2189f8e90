"""Transverse Wave grids and the Crosswise AND / Crosswise OR matrix games.

A Transverse Wave position is an m-by-n grid of green and purple cells.
Selecting a (feasible) column floods that column purple and fully purples
every row that already held a purple cell in that column.  The two matrix
games are its Boolean twins: green maps to 1 for Crosswise AND and purple
maps to 1 for Crosswise OR.

Rows are stored as bitmasks (bit j = column j), which makes a move a couple
of mask operations per row.
"""

from __future__ import annotations

from dataclasses import dataclass


def _validate_rows(n: int, rows: tuple[int, ...]) -> None:
    if n < 0:
        raise ValueError(f"column count must be non-negative, got {n}")
    limit = 1 << n
    for i, row in enumerate(rows):
        if not 0 <= row < limit:
            raise ValueError(f"row {i} mask {row:#x} does not fit {n} columns")


@dataclass(frozen=True)
class Grid:
    """Two-color board; bit j of ``rows[i]`` is set when cell (i, j) is green."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_rows(self.n, self.rows)

    @property
    def m(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, row_strings) -> "Grid":
        """Build from strings over {G, P}, e.g. ["PGGG", "GPPG"]."""
        rows = []
        n = None
        for i, text in enumerate(row_strings):
            if n is None:
                n = len(text)
            elif len(text) != n:
                raise ValueError(
                    f"row {i + 1} has {len(text)} cells, expected {n}"
                )
            mask = 0
            for j, ch in enumerate(text):
                if ch == "G":
                    mask |= 1 << j
                elif ch != "P":
                    raise ValueError(
                        f"illegal cell {ch!r} at row {i + 1}, column {j + 1}"
                    )
            rows.append(mask)
        return cls(n or 0, tuple(rows))

    @classmethod
    def from_literal(cls, literal: str) -> "Grid":
        """Parse the compact form "PGGG/GPPG/..." (rows top to bottom)."""
        return cls.from_rows(literal.split("/"))

    def row_strings(self) -> tuple[str, ...]:
        return tuple(
            "".join("G" if row >> j & 1 else "P" for j in range(self.n))
            for row in self.rows
        )

    def literal(self) -> str:
        return "/".join(self.row_strings())

    def is_green(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)


@dataclass(frozen=True)
class BooleanMatrix:
    """0/1 matrix; bit j of ``rows[i]`` is set when entry (i, j) is 1."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_rows(self.n, self.rows)

    @property
    def m(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, row_strings) -> "BooleanMatrix":
        rows = []
        n = None
        for i, text in enumerate(row_strings):
            if n is None:
                n = len(text)
            elif len(text) != n:
                raise ValueError(
                    f"row {i + 1} has {len(text)} entries, expected {n}"
                )
            mask = 0
            for j, ch in enumerate(text):
                if ch == "1":
                    mask |= 1 << j
                elif ch != "0":
                    raise ValueError(
                        f"illegal bit {ch!r} at row {i + 1}, column {j + 1}"
                    )
            rows.append(mask)
        return cls(n or 0, tuple(rows))

    def row_strings(self) -> tuple[str, ...]:
        return tuple(
            "".join("1" if row >> j & 1 else "0" for j in range(self.n))
            for row in self.rows
        )


@dataclass(frozen=True)
class CrosswiseAnd(BooleanMatrix):
    """Crosswise AND position (Transverse Wave with green as 1)."""


@dataclass(frozen=True)
class CrosswiseOr(BooleanMatrix):
    """Crosswise OR position (Transverse Wave with purple as 1)."""


def tw_options(g: Grid) -> list[tuple[int, Grid]]:
    """Feasible columns of a Transverse Wave position with their successors.

    A column is feasible when it contains a green cell.  The successor marks
    every row holding a purple cell in that column (using the pre-move grid),
    then purples the whole column and every marked row.
    """
    greens = 0
    for row in g.rows:
        greens |= row
    out = []
    for j in range(g.n):
        bit = 1 << j
        if not greens & bit:
            continue
        rows = tuple(row & ~bit if row & bit else 0 for row in g.rows)
        out.append((j, Grid(g.n, rows)))
    return out


def cw_and_options(b: BooleanMatrix) -> list[tuple[int, CrosswiseAnd]]:
    """Columns with a 1 somewhere; each row ANDs with its column-j bit, then
    column j is zeroed."""
    ones = 0
    for row in b.rows:
        ones |= row
    out = []
    for j in range(b.n):
        bit = 1 << j
        if not ones & bit:
            continue
        rows = tuple(row & ~bit if row & bit else 0 for row in b.rows)
        out.append((j, CrosswiseAnd(b.n, rows)))
    return out


def cw_or_options(b: BooleanMatrix) -> list[tuple[int, CrosswiseOr]]:
    """Columns with a 0 somewhere; each row ORs with its column-j bit, then
    column j is filled.  Dual of cw_and_options under bit complement."""
    full = (1 << b.n) - 1
    zeros = 0
    for row in b.rows:
        zeros |= full & ~row
    out = []
    for j in range(b.n):
        bit = 1 << j
        if not zeros & bit:
            continue
        rows = tuple(full if row & bit else row | bit for row in b.rows)
        out.append((j, CrosswiseOr(b.n, rows)))
    return out
