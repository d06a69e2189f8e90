"""Position transformers between the rulesets and a game-value verifier.

Each transformer realizes one special-case/generalization arrow or
isomorphism of the ruleset family.  Transformers are total functions on
positions; certification is separate: ``verify_reduction`` solves both
sides and, when the transformer declares a move bijection, walks both game
trees in lockstep checking that option sets correspond under it at every
depth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .nimber import Nimber
from .rulesets import (
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
    edge,
    move_vector,
    options,
    vector_heap_amount,
)
from .solver import SolveBudget, grundy


class InapplicableTransformer(ValueError):
    pass


# ---------------------------------------------------------------------------
# Grid <-> Boolean matrix isomorphisms

def grid_to_and(g: Grid) -> CrosswiseAnd:
    """Green maps to 1, purple to 0; moves keep their column index."""
    return CrosswiseAnd(g.n, g.rows)


def and_to_grid(b: BooleanMatrix) -> Grid:
    return Grid(b.n, b.rows)


def grid_to_or(g: Grid) -> CrosswiseOr:
    """Purple maps to 1, green to 0; the bit complement of grid_to_and."""
    full = (1 << g.n) - 1
    return CrosswiseOr(g.n, tuple(full & ~r for r in g.rows))


def and_to_dqbn(b: BooleanMatrix) -> Superposition:
    """Read the matrix rows as the realizations of a Boolean Nim
    superposition; column j corresponds to taking the pebble of heap j."""
    rows = b.rows if b.rows else ((0,) * b.n,)
    return Superposition(
        tuple(tuple(r >> j & 1 for j in range(b.n)) for r in rows)
    )


# ---------------------------------------------------------------------------
# Boolean Nim superpositions <-> positive CNF

def _boolean_rows(b) -> tuple[int, tuple[tuple[int, ...], ...]]:
    if isinstance(b, BooleanMatrix):
        return b.n, tuple(
            tuple(r >> j & 1 for j in range(b.n)) for r in b.rows
        )
    if isinstance(b, Superposition):
        if any(h not in (0, 1) for r in b.realizations for h in r):
            raise InapplicableTransformer(
                "superposition is not Boolean (a heap exceeds one pebble)"
            )
        return b.heap_count, b.realizations
    raise InapplicableTransformer(f"not a Boolean superposition: {type(b).__name__}")


def dqbn_to_avoid_true(b) -> CnfPosition:
    """One clause per realization, over the variables of its empty heaps.

    An all-ones realization yields an empty clause: it can never be
    collapsed, and the empty clause can never be satisfied.
    """
    n, rows = _boolean_rows(b)
    clauses = tuple(
        frozenset(j + 1 for j in range(n) if not row[j]) for row in rows
    )
    return CnfPosition(n, clauses, frozenset())


def avoid_true_to_dqbn(c: CnfPosition) -> Superposition:
    """One Boolean realization per not-yet-satisfied clause, with empty heaps
    at the clause's variables and at every chosen variable.

    When every clause is satisfied the game is over on both sides; the
    superposition type needs a realization, so a single all-zero one stands
    in (all-zero realizations are inert).
    """
    n = c.var_count
    rows = []
    for clause in c.clauses:
        if clause & c.true_set:
            continue
        dead = clause | c.true_set
        rows.append(tuple(0 if x in dead else 1 for x in range(1, n + 1)))
    if not rows:
        rows.append((0,) * n)
    return Superposition(tuple(rows))


# ---------------------------------------------------------------------------
# Node Kayles / Friend Circle

def node_kayles_to_friend_circle(g: UndirectedGraph) -> FriendCirclePosition:
    """Add a pendant t-vertex per vertex; old edges become true, pendant
    edges false, and the old vertices form the seed set."""
    order = sorted(g.vertices)
    base = max(g.vertices) + 1 if g.vertices else 0
    pendant = {v: base + i for i, v in enumerate(order)}
    vertices = g.vertices | frozenset(pendant.values())
    pendant_edges = frozenset(edge(v, pendant[v]) for v in order)
    graph = UndirectedGraph(vertices, g.edges | pendant_edges)
    return FriendCirclePosition(graph, g.vertices, g.edges)


def bipartite_fc_to_or(p: FriendCirclePosition) -> CrosswiseOr:
    """Friend Circle on a complete bipartite graph seeded by one side is
    Crosswise OR over the pseudo-adjacency matrix: seed side as columns,
    other side as rows, 1 where the edge is already true."""
    cols = sorted(p.seeds)
    rows = sorted(p.graph.vertices - p.seeds)
    expected = frozenset(edge(u, w) for u in cols for w in rows)
    if p.graph.edges != expected:
        raise InapplicableTransformer(
            "graph is not complete bipartite with the seeds as one side"
        )
    masks = []
    for w in rows:
        mask = 0
        for j, u in enumerate(cols):
            if edge(u, w) in p.true_edges:
                mask |= 1 << j
        masks.append(mask)
    return CrosswiseOr(len(cols), tuple(masks))


def or_to_bipartite_fc(b: BooleanMatrix) -> FriendCirclePosition:
    """Inverse construction: columns become seeds 0..n-1, rows become
    vertices n..n+m-1, and 1-entries become true edges."""
    seeds = frozenset(range(b.n))
    others = frozenset(range(b.n, b.n + b.m))
    edges = frozenset(edge(j, b.n + i) for j in range(b.n) for i in range(b.m))
    true_edges = frozenset(
        edge(j, b.n + i)
        for i, row in enumerate(b.rows)
        for j in range(b.n)
        if row >> j & 1
    )
    graph = UndirectedGraph(seeds | others, edges)
    return FriendCirclePosition(graph, seeds, true_edges)


# ---------------------------------------------------------------------------
# Demographic Influence generalizations

def dqnim_to_demographic(s: Superposition) -> InfluenceNetwork:
    """Vertex (r, c) per realization r and heap c, cliques within each
    realization, thresholds equal to the pebble counts, one demographic per
    heap column."""
    m, n = s.width, s.heap_count
    theta = tuple(h for r in s.realizations for h in r)
    edges = frozenset(
        edge(r * n + c1, r * n + c2)
        for r in range(m)
        for c1 in range(n)
        for c2 in range(c1 + 1, n)
    )
    graph = UndirectedGraph(frozenset(range(m * n)), edges)
    demographics = tuple(
        frozenset(r * n + c for r in range(m)) for c in range(n)
    )
    return InfluenceNetwork(graph, theta, demographics)


def node_kayles_to_demographic(g: UndirectedGraph) -> InfluenceNetwork:
    """Each vertex gets a threshold-1 partner; a demographic pairs them.
    Partners attach to the vertex and to its neighbors, so influencing a
    demographic knocks out the whole closed neighborhood."""
    order = sorted(g.vertices)
    rank = {v: i for i, v in enumerate(order)}
    n = len(order)
    theta = tuple([0] * n + [1] * n)
    edges = set()
    for u, w in g.edges:
        edges.add(edge(rank[u], rank[w]))
        edges.add(edge(rank[u], n + rank[w]))
        edges.add(edge(rank[w], n + rank[u]))
    for v in order:
        edges.add(edge(rank[v], n + rank[v]))
    graph = UndirectedGraph(frozenset(range(2 * n)), frozenset(edges))
    demographics = tuple(
        frozenset({rank[v], n + rank[v]}) for v in order
    )
    return InfluenceNetwork(graph, theta, demographics)


def friend_circle_to_demographic(p: FriendCirclePosition) -> InfluenceNetwork:
    """Build on the line graph: one vertex per edge, thresholds 1 for false
    and 0 for true edges, one demographic per seed covering its incident
    edges."""
    edge_order = sorted(p.graph.edges)
    index = {e: i for i, e in enumerate(edge_order)}
    theta = tuple(0 if e in p.true_edges else 1 for e in edge_order)
    line_edges = set()
    for i, e1 in enumerate(edge_order):
        for e2 in edge_order[i + 1:]:
            if set(e1) & set(e2):
                line_edges.add(edge(index[e1], index[e2]))
    graph = UndirectedGraph(frozenset(range(len(edge_order))), frozenset(line_edges))
    demographics = tuple(
        frozenset(index[e] for e in edge_order if s in e)
        for s in sorted(p.seeds)
    )
    return InfluenceNetwork(graph, theta, demographics)


# ---------------------------------------------------------------------------
# Avoid True as rechargeable hypergraph Boolean Nim

def avoid_true_to_hypergraph(c: CnfPosition) -> HypergraphNimPosition:
    """Variable x becomes vertex x; an auxiliary start vertex 0 carries no
    pebble and sits in every hyperedge.  The hyperedge of a live clause
    holds exactly the variables outside it, so sharing an edge with the
    current vertex matches "some clause avoids all chosen variables"."""
    n = c.var_count
    hyperedges = tuple(
        frozenset(x for x in range(1, n + 1) if x not in clause) | {0}
        for clause in c.clauses
        if not clause & c.true_set
    )
    pebbles = (0,) + tuple(0 if x in c.true_set else 1 for x in range(1, n + 1))
    return HypergraphNimPosition(n + 1, hyperedges, pebbles, 0)


def nim_to_dqnim(p: NimPosition) -> Superposition:
    return Superposition((p.heaps,))


# ---------------------------------------------------------------------------
# Registry and verification

@dataclass(frozen=True)
class Reduction:
    name: str
    source_type: type
    source_ruleset: str
    target_ruleset: str
    transform: Callable
    bijection_factory: Optional[Callable] = None


def _rank_of(values):
    order = sorted(values)
    return {v: i for i, v in enumerate(order)}


def _seed_column_bijection(p: FriendCirclePosition):
    rank = _rank_of(p.seeds)
    return lambda v: rank[v]


def _seed_demographic_bijection(p: FriendCirclePosition):
    rank = _rank_of(p.seeds)
    return lambda s: (rank[s], 1)


def _vertex_demographic_bijection(g: UndirectedGraph):
    rank = _rank_of(g.vertices)
    return lambda v: (rank[v], 1)


REDUCTIONS: dict[str, Reduction] = {}


def _register(red: Reduction) -> None:
    REDUCTIONS[red.name] = red


_register(Reduction(
    "grid_to_and", Grid, "transverse_wave", "crosswise_and",
    grid_to_and, lambda g: lambda j: j))
_register(Reduction(
    "and_to_grid", BooleanMatrix, "crosswise_and", "transverse_wave",
    and_to_grid, lambda b: lambda j: j))
_register(Reduction(
    "grid_to_or", Grid, "transverse_wave", "crosswise_or",
    grid_to_or, lambda g: lambda j: j))
_register(Reduction(
    "and_to_dqbn", BooleanMatrix, "crosswise_and", "demi_quantum_nim",
    and_to_dqbn, lambda b: lambda j: move_vector(b.n, j, 1)))
_register(Reduction(
    "dqbn_to_avoid_true", Superposition, "demi_quantum_nim", "avoid_true",
    dqbn_to_avoid_true,
    lambda s: lambda vec: vector_heap_amount(vec)[0] + 1))
_register(Reduction(
    "avoid_true_to_dqbn", CnfPosition, "avoid_true", "demi_quantum_nim",
    avoid_true_to_dqbn,
    lambda c: lambda x: move_vector(c.var_count, x - 1, 1)))
_register(Reduction(
    "node_kayles_to_friend_circle", UndirectedGraph, "node_kayles",
    "friend_circle", node_kayles_to_friend_circle, lambda g: lambda v: v))
_register(Reduction(
    "bipartite_fc_to_or", FriendCirclePosition, "friend_circle",
    "crosswise_or", bipartite_fc_to_or, _seed_column_bijection))
_register(Reduction(
    "or_to_bipartite_fc", BooleanMatrix, "crosswise_or", "friend_circle",
    or_to_bipartite_fc, lambda b: lambda j: j))
_register(Reduction(
    "dqnim_to_demographic", Superposition, "demi_quantum_nim",
    "demographic_influence", dqnim_to_demographic,
    lambda s: lambda vec: vector_heap_amount(vec)))
_register(Reduction(
    "node_kayles_to_demographic", UndirectedGraph, "node_kayles",
    "demographic_influence", node_kayles_to_demographic,
    _vertex_demographic_bijection))
_register(Reduction(
    "friend_circle_to_demographic", FriendCirclePosition, "friend_circle",
    "demographic_influence", friend_circle_to_demographic,
    _seed_demographic_bijection))
_register(Reduction(
    "avoid_true_to_hypergraph", CnfPosition, "avoid_true", "hypergraph_nim",
    avoid_true_to_hypergraph, lambda c: lambda x: x))
_register(Reduction(
    "nim_to_dqnim", NimPosition, "nim", "demi_quantum_nim",
    nim_to_dqnim, lambda p: lambda vec: vec))


@dataclass
class ReductionReport:
    reduction: str
    source_grundy: Nimber
    target_grundy: Nimber
    isomorphism_checked: bool
    move_bijection_depth: int
    verdict: str
    counterexample: Optional[str] = None


class _Mismatch(Exception):
    def __init__(self, detail: str, source, target):
        super().__init__(detail)
        self.detail = detail
        self.source = source
        self.target = target


def _lockstep(source, target, bijection, max_depth: Optional[int]) -> int:
    """Walk both trees together, checking the option sets correspond under
    the bijection at every node.  Returns the verified height."""
    seen: dict = {}

    def walk(src, tgt, remaining) -> int:
        if remaining is not None and remaining <= 0:
            return 0
        key = (src, tgt, remaining)
        cached = seen.get(key)
        if cached is not None:
            return cached
        mapped = {}
        for move, succ in options(src):
            image = bijection(move)
            if image in mapped:
                raise _Mismatch(f"bijection collides on target move {image!r}", src, tgt)
            mapped[image] = succ
        target_opts = dict(options(tgt))
        if set(mapped) != set(target_opts):
            missing = sorted(map(repr, set(mapped) - set(target_opts)))
            extra = sorted(map(repr, set(target_opts) - set(mapped)))
            raise _Mismatch(
                f"option sets differ (unmatched source images: {missing}; "
                f"unmatched target moves: {extra})", src, tgt)
        height = 0
        for image, src_succ in mapped.items():
            sub = walk(src_succ, target_opts[image],
                       None if remaining is None else remaining - 1)
            height = max(height, 1 + sub)
        seen[key] = height
        return height

    return walk(source, target, max_depth)


def verify_reduction(source, name: str, budget: Optional[SolveBudget] = None,
                     max_bijection_depth: Optional[int] = None,
                     memo=None) -> ReductionReport:
    """Certify one transformer on one source position.

    Computes both Grundy values and, when a move bijection is declared,
    walks both trees in lockstep (to ``max_bijection_depth`` when given,
    otherwise exhaustively).
    """
    red = REDUCTIONS.get(name)
    if red is None:
        raise InapplicableTransformer(f"unknown reduction {name!r}")
    if not isinstance(source, red.source_type):
        raise InapplicableTransformer(
            f"{name} expects {red.source_type.__name__}, got {type(source).__name__}"
        )
    target = red.transform(source)
    source_res = grundy(source, budget=budget, memo=memo)
    target_res = grundy(target, budget=budget, memo=memo)
    verdict = "pass"
    counterexample = None
    depth = 0
    checked = red.bijection_factory is not None
    if source_res.grundy != target_res.grundy:
        verdict = "fail"
        counterexample = (
            f"grundy mismatch {source_res.grundy} vs {target_res.grundy} "
            f"on {source!r}"
        )
    elif checked:
        try:
            depth = _lockstep(source, target, red.bijection_factory(source),
                              max_bijection_depth)
        except _Mismatch as exc:
            verdict = "fail"
            counterexample = f"{exc.detail} at {exc.source!r} vs {exc.target!r}"
    return ReductionReport(
        reduction=name,
        source_grundy=source_res.grundy,
        target_grundy=target_res.grundy,
        isomorphism_checked=checked,
        move_bijection_depth=depth,
        verdict=verdict,
        counterexample=counterexample,
    )


# ---------------------------------------------------------------------------
# Ruleset-to-ruleset conversion over the registered transformers

def conversion_path(from_ruleset: str, to_ruleset: str) -> list[Reduction]:
    """Shortest chain of registered transformers connecting two rulesets."""
    if from_ruleset == to_ruleset:
        return []
    frontier = [(from_ruleset, [])]
    visited = {from_ruleset}
    while frontier:
        here, path = frontier.pop(0)
        for red in REDUCTIONS.values():
            if red.source_ruleset != here or red.target_ruleset in visited:
                continue
            step = path + [red]
            if red.target_ruleset == to_ruleset:
                return step
            visited.add(red.target_ruleset)
            frontier.append((red.target_ruleset, step))
    raise InapplicableTransformer(
        f"no registered transformer connects {from_ruleset} to {to_ruleset}"
    )


def convert_position(position, from_ruleset: str, to_ruleset: str):
    """Transform a position along the shortest registered chain.

    Returns (converted position, move table or None); the table maps each
    currently feasible source move to its image, when every step of the
    chain declares a bijection.
    """
    path = conversion_path(from_ruleset, to_ruleset)
    bijections = []
    current = position
    for red in path:
        if not isinstance(current, red.source_type):
            raise InapplicableTransformer(
                f"{red.name} expects {red.source_type.__name__}, "
                f"got {type(current).__name__}"
            )
        if red.bijection_factory is not None and bijections is not None:
            bijections.append(red.bijection_factory(current))
        else:
            bijections = None
        current = red.transform(current)
    table = None
    if bijections is not None:
        table = {}
        for move, _ in options(position):
            image = move
            for bij in bijections:
                image = bij(image)
            table[move] = image
    return current, table


# ---------------------------------------------------------------------------
# Seeded sample sources for randomized certification

def _random_graph(rng: random.Random, max_vertices: int) -> UndirectedGraph:
    n = rng.randint(1, max_vertices)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
    ]
    return UndirectedGraph.from_edges(n, edges)


def _random_friend_circle(rng: random.Random, max_vertices: int) -> FriendCirclePosition:
    g = _random_graph(rng, max_vertices)
    seeds = frozenset(v for v in g.vertices if rng.random() < 0.6)
    true_edges = frozenset(e for e in g.edges if rng.random() < 0.5)
    return FriendCirclePosition(g, seeds, true_edges)


def _random_bipartite_fc(rng: random.Random) -> FriendCirclePosition:
    cols = rng.randint(1, 4)
    rows = rng.randint(1, 4)
    bits = tuple(rng.randrange(1 << cols) for _ in range(rows))
    return or_to_bipartite_fc(CrosswiseOr(cols, bits))


def _random_cnf(rng: random.Random) -> CnfPosition:
    n = rng.randint(1, 5)
    clause_count = rng.randint(0, 4)
    clauses = []
    for _ in range(clause_count):
        size = rng.randint(1, n)
        clauses.append(frozenset(rng.sample(range(1, n + 1), size)))
    true_set = frozenset(
        x for x in range(1, n + 1) if rng.random() < 0.15
    )
    return CnfPosition(n, tuple(clauses), true_set)


def _random_superposition(rng: random.Random, max_width: int, max_heaps: int,
                          max_pebbles: int) -> Superposition:
    width = rng.randint(1, max_width)
    heaps = rng.randint(1, max_heaps)
    return Superposition(tuple(
        tuple(rng.randint(0, max_pebbles) for _ in range(heaps))
        for _ in range(width)
    ))


def _random_grid(rng: random.Random, max_side: int) -> Grid:
    m = rng.randint(1, max_side)
    n = rng.randint(1, max_side)
    return Grid(n, tuple(rng.randrange(1 << n) for _ in range(m)))


def sample_source(name: str, rng: random.Random):
    """A random source position sized for desk-scale certification of the
    named reduction."""
    if name in ("grid_to_and", "grid_to_or"):
        return _random_grid(rng, 3)
    if name in ("and_to_grid", "and_to_dqbn"):
        g = _random_grid(rng, 3)
        return CrosswiseAnd(g.n, g.rows)
    if name == "or_to_bipartite_fc":
        g = _random_grid(rng, 4)
        return CrosswiseOr(g.n, g.rows)
    if name == "dqbn_to_avoid_true":
        return _random_superposition(rng, 4, 4, 1)
    if name in ("avoid_true_to_dqbn", "avoid_true_to_hypergraph"):
        return _random_cnf(rng)
    if name in ("node_kayles_to_friend_circle", "node_kayles_to_demographic"):
        return _random_graph(rng, 5)
    if name == "friend_circle_to_demographic":
        return _random_friend_circle(rng, 5)
    if name == "bipartite_fc_to_or":
        return _random_bipartite_fc(rng)
    if name == "dqnim_to_demographic":
        return _random_superposition(rng, 3, 4, 3)
    if name == "nim_to_dqnim":
        return NimPosition(tuple(
            rng.randint(0, 5) for _ in range(rng.randint(1, 3))
        ))
    raise InapplicableTransformer(f"no sample source for reduction {name!r}")
