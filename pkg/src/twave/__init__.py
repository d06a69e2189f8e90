"""Workbench for Transverse Wave and its family of isomorphic and
generalizing impartial games: rulesets, a Sprague-Grundy solver, the
closed-form nimber triangle, certified reductions, variant-D quantum Nim,
position file formats, a CLI and an HTTP analysis service."""

from .nimber import Nimber, OutcomeClass, mex, nimber_add, outcome_of
from .rulesets import options
from .solver import (
    BudgetExceeded,
    SolveBudget,
    SolveResult,
    game_sum_grundy,
    grundy,
    normalize,
    outcome,
)

__all__ = [
    "BudgetExceeded",
    "Nimber",
    "OutcomeClass",
    "SolveBudget",
    "SolveResult",
    "game_sum_grundy",
    "grundy",
    "mex",
    "nimber_add",
    "normalize",
    "options",
    "outcome",
    "outcome_of",
]

__version__ = "0.1.0"
