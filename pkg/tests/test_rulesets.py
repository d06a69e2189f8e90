import random

import pytest

from twave.rulesets import (
    BooleanMatrix,
    CnfPosition,
    CrosswiseAnd,
    CrosswiseOr,
    FriendCirclePosition,
    Grid,
    HypergraphNimPosition,
    InfluenceNetwork,
    NimPosition,
    Superposition,
    UndirectedGraph,
    avoid_true_options,
    cw_and_options,
    cw_or_options,
    demographic_apply,
    demographic_options,
    dqnim_apply,
    dqnim_options,
    edge,
    friend_circle_options,
    hypergraph_nim_options,
    move_vector,
    nim_options,
    node_kayles_options,
    options,
    tw_options,
)

from oracles import brute_grundy

SAMPLE_START = "PGGG/GPPG/GPGG/GPPP/PPGP"
SAMPLE_AFTER_COL2 = "PGPG/PPPP/GPPG/PPPP/PPPP"


def random_grid(rng, max_side=4):
    m = rng.randint(1, max_side)
    n = rng.randint(1, max_side)
    return Grid(n, tuple(rng.randrange(1 << n) for _ in range(m)))


# ---------------------------------------------------------------------------
# Transverse Wave

def test_tw_sample_move():
    g = Grid.from_literal(SAMPLE_START)
    successors = dict(tw_options(g))
    assert successors[2].literal() == SAMPLE_AFTER_COL2


def test_tw_all_purple_is_terminal():
    assert tw_options(Grid.from_literal("PP/PP")) == []


def test_tw_single_green_cell():
    (j, succ), = tw_options(Grid.from_literal("G"))
    assert j == 0 and succ.literal() == "P"


def test_tw_purple_set_strictly_grows():
    rng = random.Random(1)
    for _ in range(200):
        g = random_grid(rng)
        before = {(i, j) for i in range(g.m) for j in range(g.n)
                  if not g.is_green(i, j)}
        for _, succ in tw_options(g):
            after = {(i, j) for i in range(succ.m) for j in range(succ.n)
                     if not succ.is_green(i, j)}
            assert before < after


def test_tw_playout_height_bounded_by_columns():
    rng = random.Random(2)
    for _ in range(300):
        g = random_grid(rng, max_side=6)
        n = g.n
        length = 0
        while True:
            opts = tw_options(g)
            if not opts:
                break
            _, g = rng.choice(opts)
            length += 1
        assert length <= n


# ---------------------------------------------------------------------------
# Crosswise AND / OR and the color dualities

def test_cw_and_mirrors_the_grid_move():
    g = Grid.from_literal(SAMPLE_START)
    b = CrosswiseAnd(g.n, g.rows)  # green as 1
    and_succ = dict(cw_and_options(b))[2]
    expected = Grid.from_literal(SAMPLE_AFTER_COL2)
    assert and_succ.rows == expected.rows


def test_cw_and_edge_cases():
    assert cw_and_options(CrosswiseAnd.from_rows(["00", "00"])) == []
    (j, succ), = cw_and_options(CrosswiseAnd.from_rows(["11"]))[:1]
    assert j == 0 and succ.row_strings() == ("01",)


def test_cw_or_mirrors_the_grid_move():
    g = Grid.from_literal(SAMPLE_START)
    full = (1 << g.n) - 1
    b = CrosswiseOr(g.n, tuple(full & ~r for r in g.rows))  # purple as 1
    or_succ = dict(cw_or_options(b))[2]
    expected = Grid.from_literal(SAMPLE_AFTER_COL2)
    assert or_succ.rows == tuple(full & ~r for r in expected.rows)


def test_cw_or_edge_cases():
    assert cw_or_options(CrosswiseOr.from_rows(["11", "11"])) == []
    opts = dict(cw_or_options(CrosswiseOr.from_rows(["00"])))
    assert opts[1].row_strings() == ("01",)


def test_color_dualities_commute_move_for_move():
    rng = random.Random(3)
    for _ in range(150):
        g = random_grid(rng, max_side=3)
        full = (1 << g.n) - 1
        and_opts = cw_and_options(CrosswiseAnd(g.n, g.rows))
        or_opts = cw_or_options(CrosswiseOr(g.n, tuple(full & ~r for r in g.rows)))
        tw_opts = tw_options(g)
        assert [j for j, _ in tw_opts] == [j for j, _ in and_opts]
        assert [j for j, _ in tw_opts] == [j for j, _ in or_opts]
        for (_, gs), (_, az), (_, oz) in zip(tw_opts, and_opts, or_opts):
            assert az.rows == gs.rows
            assert oz.rows == tuple(full & ~r for r in gs.rows)


# ---------------------------------------------------------------------------
# Nim and demi-quantum Nim

def test_nim_moves():
    opts = dict(nim_options(NimPosition((2, 2))))
    assert opts[(-2, 0)] == NimPosition((0, 2))
    assert nim_options(NimPosition((0, 0))) == []
    assert dict(nim_options(NimPosition((1,))))[(-1,)] == NimPosition((0,))


def test_dqnim_collapse_example():
    s = Superposition((
        (5, 3, 0, 4, 2, 2),
        (1, 3, 3, 2, 1, 0),
        (0, 0, 4, 6, 5, 7),
        (4, 2, 5, 0, 1, 2),
    ))
    succ = dqnim_apply(s, 4, 2)
    assert succ.realizations == ((5, 3, 0, 4, 0, 2), (0, 0, 4, 6, 3, 7))
    assert dict(dqnim_options(s))[move_vector(6, 4, 2)] == succ


def test_dqnim_terminal_and_infeasible():
    assert dqnim_options(Superposition(((0, 0),))) == []
    with pytest.raises(ValueError):
        dqnim_apply(Superposition(((1, 0),)), 1, 1)


def test_dqnim_width_one_matches_nim():
    rng = random.Random(4)
    for _ in range(100):
        heaps = tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 3)))
        nim_moves = [(m, s.heaps) for m, s in nim_options(NimPosition(heaps))]
        dq_moves = [(m, s.realizations[0])
                    for m, s in dqnim_options(Superposition((heaps,)))]
        assert nim_moves == dq_moves


def test_dqnim_zero_row_padding_is_inert():
    rng = random.Random(5)
    for _ in range(100):
        width = rng.randint(1, 3)
        heaps = rng.randint(1, 3)
        s = Superposition(tuple(
            tuple(rng.randint(0, 3) for _ in range(heaps))
            for _ in range(width)
        ))
        padded = Superposition(s.realizations + ((0,) * heaps,))
        plain = dqnim_options(s)
        with_pad = dqnim_options(padded)
        assert [m for m, _ in plain] == [m for m, _ in with_pad]
        for (_, a), (_, b) in zip(plain, with_pad):
            # the all-zero row can never survive a removal
            assert a == b


def test_superposition_validation():
    with pytest.raises(ValueError):
        Superposition(())
    with pytest.raises(ValueError):
        Superposition(((1, 2), (1,)))


# ---------------------------------------------------------------------------
# Avoid True

def test_avoid_true_worked_example():
    c = CnfPosition.from_clauses(
        7, [{2, 3, 6, 7}, {1, 3, 7}, {2, 3, 7}]
    )
    moves = [x for x, _ in avoid_true_options(c)]
    assert moves == [1, 2, 4, 5, 6]  # x3 and x7 would satisfy every clause


def test_avoid_true_edge_cases():
    lone = CnfPosition.from_clauses(1, [{1}])
    assert avoid_true_options(lone) == []
    two = CnfPosition.from_clauses(2, [{1}, {2}])
    assert [x for x, _ in avoid_true_options(two)] == [1, 2]


def test_avoid_true_monotone_true_set():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(1, 5)
        clauses = [
            frozenset(rng.sample(range(1, n + 1), rng.randint(1, n)))
            for _ in range(rng.randint(0, 4))
        ]
        pos = CnfPosition(n, tuple(clauses), frozenset())
        while True:
            opts = avoid_true_options(pos)
            if not opts:
                break
            x, succ = rng.choice(opts)
            assert succ.true_set == pos.true_set | {x}
            assert len(avoid_true_options(succ)) <= len(opts)
            pos = succ


# ---------------------------------------------------------------------------
# Node Kayles

def test_node_kayles_path():
    path = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    succ = dict(node_kayles_options(path))
    assert succ[1].vertices == frozenset()
    assert succ[0].vertices == frozenset({2})
    assert node_kayles_options(UndirectedGraph(frozenset(), frozenset())) == []


# ---------------------------------------------------------------------------
# Friend Circle

def sample_friend_circle():
    graph = UndirectedGraph.from_edges(
        5, [(0, 1), (0, 2), (0, 4), (1, 3), (2, 4), (3, 4)]
    )
    true_edges = frozenset({edge(0, 1), edge(0, 4)})
    return FriendCirclePosition(graph, frozenset({0, 1, 2, 3}), true_edges)


def test_friend_circle_sample_move():
    p = sample_friend_circle()
    assert [v for v, _ in friend_circle_options(p)] == [0, 1, 2, 3]
    succ = dict(friend_circle_options(p))[1]
    # direct edges of the pick turn true; the cascade through the already
    # true edge also truthifies the far endpoint's edges
    assert succ.true_edges == frozenset(
        {edge(0, 1), edge(0, 2), edge(0, 4), edge(1, 3)}
    )
    assert [v for v, _ in friend_circle_options(succ)] == [2, 3]


def test_friend_circle_single_edge():
    g = UndirectedGraph.from_edges(2, [(0, 1)])
    p = FriendCirclePosition(g, frozenset({0}), frozenset())
    (v, succ), = friend_circle_options(p)
    assert v == 0
    assert succ.true_edges == frozenset({edge(0, 1)})
    assert friend_circle_options(succ) == []


def test_friend_circle_all_true_terminal():
    g = UndirectedGraph.from_edges(2, [(0, 1)])
    p = FriendCirclePosition(g, frozenset({0, 1}), frozenset({edge(0, 1)}))
    assert friend_circle_options(p) == []


# ---------------------------------------------------------------------------
# Demographic Influence

def sample_influence_network():
    # vertices: v1=0 v2=1 v3=2, then the anonymous neighbors
    graph = UndirectedGraph.from_edges(10, [
        (0, 3), (0, 4), (0, 5), (0, 6), (0, 7),
        (2, 7), (2, 6), (2, 8),
        (1, 8), (1, 9), (1, 5),
    ])
    theta = (7, 2, 4, 0, -1, -2, 4, 2, 3, 6)
    return InfluenceNetwork(graph, theta, (frozenset({0, 1, 2}),))


def test_demographic_sample_move():
    z = sample_influence_network()
    succ = demographic_apply(z, 0, 4)
    assert succ.theta == (3, -2, 0, 0, -1, -1, 4, 2, -1, -1)


def test_demographic_single_member():
    g = UndirectedGraph.from_edges(1, [])
    z = InfluenceNetwork(g, (1,), (frozenset({0}),))
    assert [m for m, _ in demographic_options(z)] == [(0, 1)]
    (_, succ), = demographic_options(z)
    assert demographic_options(succ) == []


def test_demographic_terminal_when_nobody_uninfluenced():
    g = UndirectedGraph.from_edges(2, [(0, 1)])
    z = InfluenceNetwork(g, (0, -3), (frozenset({0, 1}),))
    assert demographic_options(z) == []


def _option_tree(z, depth):
    if depth == 0:
        return None
    return {m: _option_tree(s, depth - 1) for m, s in demographic_options(z)}


def test_demographic_negativity_magnitude_is_irrelevant():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 4)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = UndirectedGraph.from_edges(n, edges)
        theta = tuple(rng.randint(-4, 3) for _ in range(n))
        demos = tuple(
            frozenset(v for v in range(n) if rng.random() < 0.6) or frozenset({0})
            for _ in range(rng.randint(1, 3))
        )
        z = InfluenceNetwork(g, theta, demos)
        clamped = InfluenceNetwork(
            g, tuple(t if t >= -1 else -1 for t in theta), demos
        )
        assert _option_tree(z, 3) == _option_tree(clamped, 3)


# ---------------------------------------------------------------------------
# Rechargeable hypergraph Boolean Nim

def test_hypergraph_mutual_exclusion():
    h = HypergraphNimPosition(
        3, (frozenset({0, 1}), frozenset({0, 2})), (0, 1, 1), 0
    )
    assert [v for v, _ in hypergraph_nim_options(h)] == [1, 2]
    after_a = dict(hypergraph_nim_options(h))[1]
    assert after_a.hyperedges == (frozenset({0, 1}),)
    assert hypergraph_nim_options(after_a) == []


def test_hypergraph_no_pebbles_terminal():
    h = HypergraphNimPosition(2, (frozenset({0, 1}),), (0, 0), 0)
    assert hypergraph_nim_options(h) == []


def test_hypergraph_shared_edge_two_move_game():
    h = HypergraphNimPosition(3, (frozenset({0, 1, 2}),), (0, 1, 1), 0)
    after_a = dict(hypergraph_nim_options(h))[1]
    assert [v for v, _ in hypergraph_nim_options(after_a)] == [2]
    assert brute_grundy(h) == 0


# ---------------------------------------------------------------------------
# dispatch

def test_options_dispatch_covers_every_ruleset():
    assert options(Grid.from_literal("G")) == tw_options(Grid.from_literal("G"))
    assert options(NimPosition((1,))) == nim_options(NimPosition((1,)))
    with pytest.raises(TypeError):
        options(object())
    with pytest.raises(TypeError):
        options(BooleanMatrix.from_rows(["01"]))  # base type carries no game
