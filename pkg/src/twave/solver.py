"""Memoized Sprague-Grundy solver over the game DAG of any ruleset.

Positions are memoized on a value-preserving normal form, so permuted or
padded boards share table entries.  Every ruleset in this package is
monotone (each move strictly shrinks some finite resource), hence the state
graph is a DAG and plain depth-first evaluation terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from typing import Any, Optional

from .nimber import Nimber, OutcomeClass, mex, outcome_of
from .rulesets import (
    CrosswiseAnd,
    CrosswiseOr,
    Grid,
    InfluenceNetwork,
    Superposition,
    options,
)


@dataclass(frozen=True)
class SolveBudget:
    """Hard limits for one solve call; exceeding them raises BudgetExceeded."""

    max_nodes: int = 50_000_000
    max_memo_entries: int = 10_000_000

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_memo_entries < 1:
            raise ValueError("budget limits must be at least 1")


@dataclass
class SolveResult:
    grundy: Nimber
    outcome: OutcomeClass
    best_move: Optional[Any]
    nodes_expanded: int
    max_depth: int


class BudgetExceeded(Exception):
    def __init__(self, message: str, nodes_expanded: int):
        super().__init__(message)
        self.nodes_expanded = nodes_expanded


DEFAULT_BUDGET = SolveBudget()

_shared_grundy_memo: dict[Any, int] = {}
_shared_outcome_memo: dict[Any, bool] = {}


def clear_memo() -> None:
    """Drop the session-wide tables (mainly for tests measuring cold solves)."""
    _shared_grundy_memo.clear()
    _shared_outcome_memo.clear()


def _reverse_bits(mask: int, n: int) -> int:
    out = 0
    for j in range(n):
        if mask >> j & 1:
            out |= 1 << (n - 1 - j)
    return out


def _sorted_matrix(n: int, keymasks: list[int]) -> tuple[int, ...]:
    """Alternately sort columns and rows by bit pattern until stable.

    ``keymasks`` hold the bit that sorts LAST per cell (purple for grids,
    ones for matrices); rows compare left to right, columns top to bottom.
    """
    rows = keymasks
    for _ in range(100):
        m = len(rows)
        col_keys = []
        for j in range(n):
            pattern = 0
            for i, row in enumerate(rows):
                if row >> j & 1:
                    pattern |= 1 << (m - 1 - i)
            col_keys.append((pattern, j))
        order = [j for _, j in sorted(col_keys)]
        permuted = []
        for row in rows:
            new_row = 0
            for new_j, old_j in enumerate(order):
                if row >> old_j & 1:
                    new_row |= 1 << new_j
            permuted.append(new_row)
        resorted = sorted(permuted, key=lambda r: _reverse_bits(r, n))
        if resorted == rows:
            break
        rows = resorted
    return tuple(rows)


def _normalize_rows(n: int, rows, absorbing: int, key_of, key_to_row):
    kept = [key_of(r) for r in rows if r != absorbing]
    kept = sorted(set(kept), key=lambda r: _reverse_bits(r, n))
    return tuple(key_to_row(r) for r in _sorted_matrix(n, kept))


@singledispatch
def normalize(position):
    """Value-preserving memo key; identity unless registered otherwise."""
    return position


@normalize.register
def _(g: Grid) -> Grid:
    full = (1 << g.n) - 1
    rows = _normalize_rows(
        g.n, g.rows, absorbing=0,
        key_of=lambda r: full & ~r, key_to_row=lambda k: full & ~k,
    )
    return Grid(g.n, rows)


@normalize.register
def _(b: CrosswiseAnd) -> CrosswiseAnd:
    rows = _normalize_rows(
        b.n, b.rows, absorbing=0, key_of=lambda r: r, key_to_row=lambda k: k
    )
    return CrosswiseAnd(b.n, rows)


@normalize.register
def _(b: CrosswiseOr) -> CrosswiseOr:
    full = (1 << b.n) - 1
    rows = _normalize_rows(
        b.n, b.rows, absorbing=full, key_of=lambda r: r, key_to_row=lambda k: k
    )
    return CrosswiseOr(b.n, rows)


@normalize.register
def _(s: Superposition) -> Superposition:
    return Superposition(tuple(sorted(set(s.realizations))))


@normalize.register
def _(z: InfluenceNetwork) -> InfluenceNetwork:
    # The magnitude of negativity never matters: feasibility reads only
    # non-negative thresholds and the cascade overwrites with exactly -1,
    # so clamping merges positions with identical option trees.
    if all(t >= -1 for t in z.theta):
        return z
    theta = tuple(t if t >= -1 else -1 for t in z.theta)
    return InfluenceNetwork(z.graph, theta, z.demographics)


def split_free_columns(g: Grid) -> tuple[Grid, int]:
    """Factor out the all-green columns of a non-empty grid.

    An all-green column can neither be killed nor interact with the rest of
    the board: a cell (i, j) of such a column only turns purple when j is
    selected or row i floods entirely, and the column stays selectable as
    long as any row is unflooded, so it is an independent single-move
    component.  Returns the grid without those columns and their count.
    """
    if not g.rows:
        return g, 0
    greens = (1 << g.n) - 1
    for row in g.rows:
        greens &= row
    if not greens:
        return g, 0
    keep = [j for j in range(g.n) if not greens >> j & 1]
    rows = tuple(
        sum(((row >> old) & 1) << new for new, old in enumerate(keep))
        for row in g.rows
    )
    return Grid(len(keep), rows), g.n - len(keep)


class _Search:
    """One solve call: counters plus per-call budget accounting."""

    def __init__(self, budget, memo, options_fn, normalize_fn, accelerate=False):
        self.budget = budget or DEFAULT_BUDGET
        self.memo = _shared_grundy_memo if memo is None else memo
        self.options_fn = options_fn
        self.normalize_fn = normalize_fn
        self.accelerate = accelerate
        self.nodes = 0
        self.added = 0
        self.max_depth = 0

    def charge(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(
                f"node budget {self.budget.max_nodes} exceeded", self.nodes
            )

    def store(self, key, value) -> None:
        self.added += 1
        if self.added > self.budget.max_memo_entries:
            raise BudgetExceeded(
                f"memo budget {self.budget.max_memo_entries} exceeded", self.nodes
            )
        self.memo[key] = value

    def value(self, position, depth: int) -> int:
        if depth > self.max_depth:
            self.max_depth = depth
        if self.accelerate and isinstance(position, Grid):
            reduced, stars = split_free_columns(position)
            if stars:
                return self.value(reduced, depth) ^ (stars & 1)
        key = self.normalize_fn(position)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        self.charge()
        g = int(mex(self.value(succ, depth + 1) for _, succ in self.options_fn(key)))
        self.store(key, g)
        return g


def grundy(position, budget=None, memo=None, options_fn=options,
           normalize_fn=None, accelerate=False) -> SolveResult:
    """Grundy value, outcome and a winning move (when one exists).

    ``memo`` defaults to a session-wide table keyed on normalized positions;
    pass a dict for an isolated solve.  The budget bounds work done by this
    call, not the lifetime table size.  ``accelerate`` turns on the
    all-green-column factorization for grids; it is off by default so the
    plain engine stays a trustworthy oracle for exactly that shortcut.
    """
    search = _Search(budget, memo, options_fn, normalize_fn or normalize,
                     accelerate=accelerate)
    children = sorted(options_fn(position), key=lambda mv: mv[0])
    values = [search.value(succ, 1) for _, succ in children]
    g = mex(values)
    best = None
    if g != 0:
        best = next(m for (m, _), v in zip(children, values) if v == 0)
    return SolveResult(
        grundy=g,
        outcome=outcome_of(g),
        best_move=best,
        nodes_expanded=search.nodes + 1,
        max_depth=max(search.max_depth, 1 if children else 0),
    )


def outcome(position, budget=None, memo=None, options_fn=options,
            normalize_fn=None) -> OutcomeClass:
    """N/P classification only; short-circuits on the first losing child."""
    search = _Search(budget, memo if memo is not None else _shared_outcome_memo,
                     options_fn, normalize_fn or normalize)

    def win(position) -> bool:
        key = search.normalize_fn(position)
        cached = search.memo.get(key)
        if cached is not None:
            return cached
        search.charge()
        result = any(not win(succ) for _, succ in search.options_fn(key))
        search.store(key, result)
        return result

    return OutcomeClass.N if win(position) else OutcomeClass.P


def game_sum_grundy(components: list[SolveResult]) -> Nimber:
    """Nim-sum of solved independent components."""
    total = 0
    for res in components:
        total ^= int(res.grundy)
    return Nimber(total)
