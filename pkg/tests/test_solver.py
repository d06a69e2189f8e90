import random
from itertools import product

import pytest

from twave.nimber import Nimber, OutcomeClass
from twave.rulesets import (
    CnfPosition,
    Grid,
    NimPosition,
    Superposition,
    options,
)
from twave.solver import (
    BudgetExceeded,
    SolveBudget,
    game_sum_grundy,
    grundy,
    normalize,
    outcome,
    split_free_columns,
)

from oracles import brute_grundy, brute_outcome


def random_grid(rng, max_side=4):
    m = rng.randint(1, max_side)
    n = rng.randint(1, max_side)
    return Grid(n, tuple(rng.randrange(1 << n) for _ in range(m)))


def test_grundy_table_positions():
    assert grundy(Grid.from_literal("PPG/GGP")).grundy == Nimber(2)
    assert grundy(Grid.from_literal("PPGG/GGPG")).grundy == Nimber(3)
    assert grundy(Grid.from_literal("PP/PP")).grundy == Nimber(0)
    assert grundy(Grid.from_literal("PPGGGG/GGPPPG/PGGPGP")).grundy == Nimber(4)


def test_grundy_agrees_with_brute_force_small_grids():
    for m, n in ((1, 1), (1, 2), (2, 2), (2, 3)):
        for rows in product(range(1 << n), repeat=m):
            g = Grid(n, tuple(rows))
            assert int(grundy(g, memo={}).grundy) == brute_grundy(g)


def test_grundy_agrees_with_brute_force_random_3x3():
    rng = random.Random(11)
    for _ in range(60):
        g = Grid(3, tuple(rng.randrange(8) for _ in range(3)))
        assert int(grundy(g, memo={}).grundy) == brute_grundy(g)


def test_outcome_examples():
    assert outcome(NimPosition((2, 2))) is OutcomeClass.P
    assert outcome(NimPosition((1, 2))) is OutcomeClass.N


def test_outcome_matches_grundy_across_rulesets():
    from twave.reductions import REDUCTIONS, sample_source

    rng = random.Random(17)
    for name in sorted(REDUCTIONS):
        for _ in range(5):
            position = sample_source(name, rng)
            is_win = outcome(position, memo={}) is OutcomeClass.N
            assert is_win == (grundy(position, memo={}).grundy != Nimber(0))


def test_outcome_of_reverse_worked_example_matches_its_superposition():
    from twave.reductions import avoid_true_to_dqbn

    c = CnfPosition.from_clauses(
        8, [{1, 2, 3, 4}, {1, 5, 6, 7}, {1, 3, 6}, {2, 5, 8}], {8}
    )
    s = avoid_true_to_dqbn(c)
    assert brute_outcome(c) == brute_outcome(s)
    assert outcome(c) == outcome(s)


def test_normalize_drops_absorbing_and_duplicate_rows():
    g = Grid.from_literal("PP/GP/GP")
    assert normalize(g).literal() == "GP"


def test_normalize_identifies_row_permuted_copies():
    rng = random.Random(12)
    for _ in range(100):
        g = random_grid(rng)
        rows = list(g.rows)
        rng.shuffle(rows)
        assert normalize(Grid(g.n, tuple(rows))) == normalize(g)


def test_grundy_invariant_under_permutations():
    rng = random.Random(16)
    for _ in range(40):
        g = random_grid(rng, max_side=3)
        rows = list(g.rows)
        rng.shuffle(rows)
        cols = list(range(g.n))
        rng.shuffle(cols)
        col_permuted = Grid(g.n, tuple(
            sum(((row >> old) & 1) << new for new, old in enumerate(cols))
            for row in rows
        ))
        assert grundy(col_permuted).grundy == grundy(g).grundy


def test_normalize_superposition_dedups():
    a = Superposition(((1, 0), (1, 0), (0, 0)))
    b = Superposition(((1, 0), (0, 0)))
    assert normalize(a) == normalize(b)
    assert brute_grundy(a) == brute_grundy(b)
    assert grundy(a).grundy == grundy(b).grundy


def test_grundy_invariant_under_row_noise():
    rng = random.Random(13)
    for _ in range(40):
        g = random_grid(rng, max_side=3)
        base = int(grundy(g).grundy)
        doubled = Grid(g.n, g.rows + (g.rows[0],))
        padded = Grid(g.n, g.rows + (0,))
        assert int(grundy(doubled).grundy) == base
        assert int(grundy(padded).grundy) == base
        assert int(grundy(normalize(g)).grundy) == base


def test_best_move_replay():
    rng = random.Random(14)
    for _ in range(60):
        g = random_grid(rng, max_side=3)
        res = grundy(g)
        if res.outcome is OutcomeClass.N:
            succ = dict(options(g))[res.best_move]
            assert grundy(succ).grundy == Nimber(0)
        else:
            assert res.best_move is None
            for _, succ in options(g):
                assert grundy(succ).grundy != Nimber(0)


def test_best_move_is_lexicographically_least_winner():
    res = grundy(Grid.from_literal("PPG/GGP"))
    winners = [
        j for j, succ in options(Grid.from_literal("PPG/GGP"))
        if grundy(succ).grundy == Nimber(0)
    ]
    assert res.best_move == min(winners) == 2


def test_counters_are_bounded():
    rng = random.Random(15)
    for _ in range(20):
        g = random_grid(rng, max_side=4)
        res = grundy(g, memo={})
        assert res.max_depth <= g.n
        assert res.nodes_expanded <= 2 ** (g.m * g.n) + 1


def test_budget_exceeded_carries_progress():
    g = Grid.from_literal("GGGG/GGGG/GGGG")
    with pytest.raises(BudgetExceeded) as info:
        grundy(g, budget=SolveBudget(max_nodes=3), memo={})
    assert info.value.nodes_expanded >= 3
    with pytest.raises(ValueError):
        SolveBudget(max_nodes=0)


def test_memo_budget_counts_new_entries_only():
    memo = {}
    g = Grid.from_literal("GGG/GGG")
    grundy(g, memo=memo)
    # a warm table must not charge against a small per-call allowance
    grundy(g, budget=SolveBudget(max_memo_entries=1), memo=memo)


def test_split_free_columns():
    g = Grid.from_literal("PPGG/GGPG")
    reduced, stars = split_free_columns(g)
    assert stars == 1
    assert reduced.literal() == "PPG/GGP"
    assert split_free_columns(Grid.from_literal("PP/GP"))[1] == 0


def test_free_column_acceleration_is_an_equivalence():
    rng = random.Random(18)
    for _ in range(80):
        g = random_grid(rng, max_side=3)
        plain = grundy(g, memo={})
        fast = grundy(g, memo={}, accelerate=True)
        assert plain.grundy == fast.grundy
        assert plain.outcome == fast.outcome
    # two appended all-green columns cancel as a pair of stars
    base = Grid.from_literal("PPG/GGP")
    padded = Grid(5, tuple(r | 0b11000 for r in base.rows))
    assert grundy(padded, memo={}, accelerate=True).grundy == Nimber(2)
    assert grundy(padded, memo={}).grundy == Nimber(2)
    # one appended column xors a star in
    lone = Grid(4, tuple(r | 0b1000 for r in base.rows))
    assert grundy(lone, memo={}, accelerate=True).grundy == Nimber(3)


def test_game_sum_grundy():
    def solved(v):
        return grundy(NimPosition((v,)))

    assert game_sum_grundy([solved(2), solved(1)]) == Nimber(3)
    assert game_sum_grundy([solved(0)]) == Nimber(0)
    assert game_sum_grundy([solved(1), solved(1)]) == Nimber(0)
