"""Move-selection strategies for both games, plus baseline adversaries.

Every strategy is a pure function of the current state (including its
history) and an immutable per-game context built by ``prepare``; identical
states always yield identical moves.  Ties are always broken by lowest
vertex index, purple before blue.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache

from .engine import (
    BDG,
    BLUE,
    DDG,
    DOM,
    PASS,
    PURPLE,
    SEPY,
    GameConfig,
    GameState,
    Move,
    opposite,
)
from .graphs import Graph, SubdivisionMap, bits, induced_subgraph, is_connected
from .matching import MatchingStructure, matching_plan


class NotApplicable(ValueError):
    """The strategy's preconditions (variant, role, graph shape) are unmet."""


class StrategyViolation(RuntimeError):
    """The strategy could not produce a rule-compliant move; carries the
    offending state when available."""

    def __init__(self, message: str, state: GameState | None = None):
        super().__init__(message)
        self.state = state


# --- shared opposite-neighbor search ---------------------------------------

def _ons_search(state: GameState, anchor_v: int, anchor_c: int, region: int | None = None) -> Move | None:
    """The opposite-neighbor move: answer the anchor vertex with the
    complementary color on a neighbor; otherwise fall back to the frontier
    construction over the vertices dominated by zero / exactly one color.

    region restricts the fallback to one component.  Returns None when no
    compliant move exists (caller decides whether that is an error).
    """
    g = state.graph
    reg = g.full_mask if region is None else region

    # rule 1: an uncolored neighbor of the anchor takes the opposite color
    want = opposite(anchor_c)
    for u in g.adj[anchor_v]:
        if state.select_legal(u, want):
            return Move(u, want)

    # rule 2a: frontier between the dominated region and the untouched one
    dom_any = (state.dom[PURPLE] | state.dom[BLUE]) & reg
    undom = reg & ~dom_any & g.full_mask
    uncolored = state.uncolored_mask() & reg
    if undom:
        for u in bits(uncolored & dom_any):
            if not g.nbr_mask[u] & undom:
                continue
            neighbor_colors = {state.colors[w] for w in g.adj[u]}
            # move color is the opposite of a colored neighbor; prefer purple
            if BLUE in neighbor_colors:
                return Move(u, PURPLE)
            if PURPLE in neighbor_colors:
                return Move(u, BLUE)

    # rule 2b: a vertex dominated in exactly one color gets (or passes on)
    # the missing color
    single = state.single_dominated_mask() & reg
    if single:
        u = (single & -single).bit_length() - 1
        have = PURPLE if state.dom[PURPLE] >> u & 1 else BLUE
        want = opposite(have)
        if state.colors[u] == -1:
            return Move(u, want)
        for w in g.adj[u]:
            if state.colors[w] == -1:
                return Move(w, want)
        raise StrategyViolation(
            f"vertex {u} lacks an uncolored neighbor in an ongoing game", state
        )
    return None


def _anchor(state: GameState, *, require_sepy: bool) -> tuple[int, int]:
    last = state.last_select
    if last is None:
        raise StrategyViolation("no selection in the history to answer", state)
    v, c, actor = last
    if require_sepy and actor != SEPY:
        raise StrategyViolation("opposite-neighbor play expects Sepy to have just moved", state)
    return v, c


def _winning_select(state: GameState) -> Move | None:
    """An immediately winning selection for the mover, if any (least vertex,
    purple first)."""
    g = state.graph
    for v in bits(state.uncolored_mask()):
        for c in state.config.allowed_colors(state.actor):
            if not state.select_legal(v, c):
                continue
            vc = state.vmask[c] | (1 << v)
            for u in bits(g.closed_mask[v]):
                if not g.closed_mask[u] & g.full_mask & ~vc:
                    return Move(v, c)
    return None


# --- strategy objects -------------------------------------------------------

class Strategy:
    sid = "?"
    role: str | None = DOM  # None means either seat

    def prepare(self, config: GameConfig, graph: Graph, *, submap=None, seed=None):
        """Validate applicability and build the per-game context."""
        return None

    def move(self, state: GameState, ctx) -> Move:
        raise NotImplementedError

    def memo_key(self, state: GameState, ctx):
        """Fields a verification walk may memoize on; None disables memoing
        (history-dependent strategies)."""
        return (
            state.vmask[PURPLE],
            state.vmask[BLUE],
            state.actor,
            state.selections_done,
            state.any_move_made,
            state.last_select,
        )

    def check_invariants(self, state: GameState, ctx) -> None:
        """Called on the state right after this strategy's move during
        verification runs."""


def _require(cond: bool, message: str):
    if not cond:
        raise NotApplicable(message)


def _every_colored_has_opposite_neighbor(state: GameState) -> bool:
    g = state.graph
    for v in range(g.n):
        c = state.colors[v]
        if c == -1:
            continue
        if not g.nbr_mask[v] & state.vmask[opposite(c)]:
            return False
    return True


class Ons(Strategy):
    """Dom answers Sepy's latest vertex with the complementary color next to
    it, falling back to the frontier construction."""

    sid = "ons"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "opposite-neighbor play is for the disjoint game")
        _require(not config.biased, "opposite-neighbor play assumes one selection per turn")
        _require(config.starter == SEPY, "opposite-neighbor play assumes Sepy starts")
        _require(config.pass_rights == "none", "use the pass-aware variant when passing is allowed")
        _require(is_connected(graph), "opposite-neighbor play assumes a connected graph")
        return None

    def move(self, state, ctx):
        v, c = _anchor(state, require_sepy=True)
        mv = _ons_search(state, v, c)
        if mv is None:
            raise StrategyViolation("no opposite-neighbor move available", state)
        return mv

    def check_invariants(self, state, ctx):
        if not _every_colored_has_opposite_neighbor(state):
            raise StrategyViolation(
                "a colored vertex lacks an opposite-colored neighbor", state
            )


class Onsp(Strategy):
    """Pass-aware variant: the anchor is the latest selection regardless of
    who made it, so Dom can answer his own vertex after a Sepy pass."""

    sid = "onsp"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "pass-aware opposite-neighbor play is for the disjoint game")
        _require(not config.biased, "pass-aware opposite-neighbor play assumes one selection per turn")
        _require(config.starter == SEPY, "pass-aware opposite-neighbor play assumes Sepy starts")
        _require(is_connected(graph), "pass-aware opposite-neighbor play assumes a connected graph")
        return None

    def move(self, state, ctx):
        v, c = _anchor(state, require_sepy=False)
        mv = _ons_search(state, v, c)
        if mv is None:
            raise StrategyViolation("no opposite-neighbor move available", state)
        return mv

    check_invariants = Ons.check_invariants


def _safe_first_vertex(graph: Graph) -> int | None:
    """Least v having some u != v with N[u] contained in N[v]; coloring v
    makes N[v] permanently bichromatic."""
    for v in range(graph.n):
        cv = graph.closed_mask[v]
        for u in range(graph.n):
            if u != v and graph.closed_mask[u] & ~cv == 0:
                return v
    return None


class DomStartSafe(Strategy):
    """Dom opens on a vertex whose closed neighborhood contains another one,
    then switches to opposite-neighbor play."""

    sid = "dom-start-safe"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "safe-start play is for the disjoint game")
        _require(not config.biased, "safe-start play assumes one selection per turn")
        _require(config.starter == DOM, "safe-start play assumes Dom starts")
        _require(is_connected(graph), "safe-start play assumes a connected graph")
        v = _safe_first_vertex(graph)
        _require(v is not None, "no pair of nested closed neighborhoods")
        return v

    def move(self, state, ctx):
        if not state.history:
            return Move(ctx, PURPLE)
        v, c = _anchor(state, require_sepy=False)
        mv = _ons_search(state, v, c)
        if mv is None:
            raise StrategyViolation("no opposite-neighbor move available", state)
        return mv


@lru_cache(maxsize=None)
def _dom_win_opening(graph: Graph) -> Move | None:
    """First move of a winning line in the least Dom-win component of the
    Dom-start no-pass disjoint game, or None if no component is Dom-win."""
    from .solver import solve

    cfg = GameConfig(variant=DDG, starter=DOM)
    for comp_mask in graph.component_masks():
        sub, old_ids = induced_subgraph(graph, bits(comp_mask))
        res = solve(cfg, sub)
        if res.winner == DOM:
            mv = res.best_move
            return Move(old_ids[mv.vertex], mv.color)
    return None


class DomPass(Strategy):
    """With pass rights, Dom shadows Sepy's component with opposite-neighbor
    play and passes when that component is exhausted; a Dom start opens a
    component the exact solver certifies as Dom-win."""

    sid = "dom-pass"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "pass-based play is for the disjoint game")
        _require(not config.biased, "pass-based play assumes one selection per turn")
        _require(config.pass_rights == DOM, "pass-based play needs Dom's pass rights")
        opening = None
        if config.starter == DOM:
            opening = _dom_win_opening(graph)
            _require(opening is not None, "no Dom-win component to open")
        return opening

    def move(self, state, ctx):
        if not state.any_move_made:
            if ctx is None:
                raise StrategyViolation("missing opening move", state)
            return ctx
        last = state.last_select
        if last is None:
            raise StrategyViolation("no selection to answer", state)
        v, c, _actor = last
        region = state.graph.component_of(v)
        if not _region_has_select(state, region):
            return PASS
        mv = _ons_search(state, v, c, region)
        if mv is None:
            raise StrategyViolation(
                "component holds legal moves but no opposite-neighbor move", state
            )
        return mv


def _region_has_select(state: GameState, region: int) -> bool:
    g = state.graph
    undom = 0
    for c in state.config.allowed_colors(state.actor):
        undom |= g.full_mask & ~state.dom[c]
    for v in bits(state.uncolored_mask() & region):
        if g.closed_mask[v] & undom:
            return True
    return False


def component_safe(state: GameState, comp) -> bool:
    """True when the component can no longer produce a monochromatic closed
    neighborhood: it is already dominated in both colors, or one legal
    selection inside it would finish that."""
    mask = 0
    if isinstance(comp, int):
        mask = comp
    else:
        for v in comp:
            mask |= 1 << v
    both = state.dom[PURPLE] & state.dom[BLUE]
    if mask & ~both == 0:
        return True
    g = state.graph
    for u in bits(state.uncolored_mask() & mask):
        for c in (PURPLE, BLUE):
            if not state.select_legal(u, c):
                continue
            new_dom = state.dom[c] | g.closed_mask[u]
            if mask & ~(new_dom & state.dom[opposite(c)]) == 0:
                return True
    return False


class BiasedDom(Strategy):
    """Dom's play for several selections per turn against a single Sepy
    selection: pass-aware opposite-neighbor play, with fresh components
    always opened by an arbitrary vertex immediately answered on the next
    selection.

    The exception: when the prescribed opposite-neighbor move would finish
    the touched region with exactly two selections left, that completion is
    skipped (the abandoned component is safe, being one move from done) and
    both selections go into a fresh component instead.  A lone unanswered
    opener is never left behind; ending a turn that way is losing (e.g. one
    purple leaf of a path invites a monochromatic reply-fork).
    """

    sid = "biased-dom"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "biased play is for the disjoint game")
        _require(config.d >= 2 and config.s == 1, "biased play needs d >= 2 selections against 1")
        return None

    def move(self, state, ctx):
        g = state.graph
        colored = state.vmask[PURPLE] | state.vmask[BLUE]
        fresh = [m for m in g.component_masks() if not m & colored]
        remaining = state.config.d - state.selections_done
        mv = None
        if state.last_select is not None:
            v, c, _actor = state.last_select
            mv = _ons_search(state, v, c)
        if mv is not None:
            if remaining == 2 and fresh and _completes_touched(state, mv):
                return _opener(fresh[0])
            return mv
        if fresh:
            return _opener(fresh[0])
        raise StrategyViolation("no biased-play move available", state)


def _completes_touched(state: GameState, mv: Move) -> bool:
    """Would this selection leave every touched component dominated in both
    colors?"""
    g = state.graph
    new_dom = list(state.dom)
    new_dom[mv.color] |= g.closed_mask[mv.vertex]
    both = new_dom[PURPLE] & new_dom[BLUE]
    colored = state.vmask[PURPLE] | state.vmask[BLUE] | (1 << mv.vertex)
    return all(
        m & ~both == 0
        for m in g.component_masks()
        if m & colored
    )


def _opener(comp_mask: int) -> Move:
    return Move((comp_mask & -comp_mask).bit_length() - 1, PURPLE)


# --- bicolored-game strategies ----------------------------------------------

@dataclass(frozen=True)
class BdgPlan:
    """Static matching data for Dom's bicolored play; the dynamic parts
    (which endpoints are colored, Sepy's latest move) are read off the state."""

    matching: MatchingStructure
    partner: tuple[int, ...]  # matched partner or -1
    centers: frozenset[int]  # centers of star edges
    external_mask: int

    @staticmethod
    def build(graph: Graph) -> "BdgPlan":
        struct = matching_plan(graph)
        partner = struct.partner_table(graph.n)
        centers = frozenset(
            k.center for k in struct.kinds if k.kind == "star"
        )
        ext = 0
        for v in struct.external:
            ext |= 1 << v
        return BdgPlan(struct, tuple(partner), centers, ext)


def _bdg_partner_reply(state: GameState, plan: BdgPlan) -> Move | None:
    last = state.last_select
    if last is None:
        return None
    v, c, _actor = last
    if c != BLUE:
        return None
    p = plan.partner[v]
    if p != -1 and state.select_legal(p, PURPLE):
        return Move(p, PURPLE)
    return None


class BdgMatching(Strategy):
    """Perfect-matching play: answer Sepy inside his matching edge when
    legal, otherwise take a vertex of an untouched edge."""

    sid = "bdg-matching"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == BDG, "matching play is for the bicolored game")
        plan = BdgPlan.build(graph)
        _require(not plan.matching.external, "graph has no perfect matching")
        return plan

    def move(self, state, ctx):
        mv = _bdg_partner_reply(state, ctx)
        if mv is not None:
            return mv
        colored = state.vmask[PURPLE] | state.vmask[BLUE]
        for v in bits(state.uncolored_mask()):
            p = ctx.partner[v]
            if p < 0 or colored >> p & 1:
                continue
            if state.select_legal(v, PURPLE):
                return Move(v, PURPLE)
        # partner of an earlier Sepy vertex; keeps one-vertex-per-edge intact
        for v in bits(state.uncolored_mask()):
            p = ctx.partner[v]
            if p >= 0 and state.vmask[BLUE] >> p & 1 and state.select_legal(v, PURPLE):
                return Move(v, PURPLE)
        raise StrategyViolation("no matching-play move available", state)

    def check_invariants(self, state, ctx):
        _check_one_purple_per_edge(state, ctx)


def _check_one_purple_per_edge(state: GameState, plan: BdgPlan):
    vp = state.vmask[PURPLE]
    for u, v in plan.matching.pairs:
        if vp >> u & 1 and vp >> v & 1:
            raise StrategyViolation(
                f"both endpoints of matching edge ({u},{v}) are purple", state
            )


class BdgGeneral(Strategy):
    """Bicolored play from a maximum matching: partner replies first, then
    the least matching vertex that opens star edges at their center, never
    doubles an edge and keeps every blue vertex purple-dominated; externals
    only as a last resort."""

    sid = "bdg-general"
    role = DOM

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == BDG, "general bicolored play is for the bicolored game")
        return BdgPlan.build(graph)

    def move(self, state, ctx):
        mv = _bdg_partner_reply(state, ctx)
        if mv is not None:
            return mv
        g = state.graph
        vp, vb = state.vmask[PURPLE], state.vmask[BLUE]
        colored = vp | vb
        for v in bits(state.uncolored_mask() & ~ctx.external_mask):
            p = ctx.partner[v]
            if vp >> p & 1:
                continue  # never a second endpoint of one edge
            edge_untouched = not (colored >> v & 1 or colored >> p & 1)
            if edge_untouched and (v in ctx.centers or p in ctx.centers) and v not in ctx.centers:
                continue  # a fresh star edge must be opened at its center
            if not state.select_legal(v, PURPLE):
                continue
            if vb & ~(state.dom[PURPLE] | g.closed_mask[v]):
                continue  # every blue vertex must end up purple-dominated
            return Move(v, PURPLE)
        for v in bits(state.uncolored_mask() & ctx.external_mask):
            if state.select_legal(v, PURPLE):
                return Move(v, PURPLE)
        raise StrategyViolation("no rule-compliant bicolored move available", state)

    def check_invariants(self, state, ctx):
        _check_one_purple_per_edge(state, ctx)
        if state.vmask[BLUE] & ~state.dom[PURPLE]:
            raise StrategyViolation("a blue vertex has no purple vertex in reach", state)


# --- Sepy's constructions ---------------------------------------------------

@dataclass(frozen=True)
class CycleMemory:
    """Normalization fixed after Dom's first move on a cycle: rotate/reflect
    the labeling and optionally swap the palette so that move reads as
    position 1 colored purple."""

    offset: int  # cyclic index of Dom's first vertex
    reflect: bool
    swap: bool  # True when Dom's first color was blue


def _cycle_order(graph: Graph) -> list[int] | None:
    if graph.n < 3 or not is_connected(graph):
        return None
    if any(graph.degree(v) != 2 for v in range(graph.n)):
        return None
    order = [0, graph.adj[0][0]]
    while len(order) < graph.n:
        a, b = graph.adj[order[-1]]
        order.append(b if a == order[-2] else a)
    return order


def derive_cycle_memory(state: GameState, order: list[int]) -> CycleMemory:
    first_actor, first_move = state.history[0]
    if first_actor != DOM or first_move.is_pass:
        raise StrategyViolation("cycle play expects Dom's opening selection", state)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    i0 = idx[first_move.vertex]
    # choose the direction that gives position 2 the smaller real vertex
    fwd = order[(i0 + 1) % n]
    rev = order[(i0 - 1) % n]
    return CycleMemory(
        offset=i0,
        reflect=rev < fwd,
        swap=first_move.color == BLUE,
    )


def _cycle_real_vertex(mem: CycleMemory, order: list[int], pos: int) -> int:
    n = len(order)
    step = -(pos - 1) if mem.reflect else (pos - 1)
    return order[(mem.offset + step) % n]


def _cycle_pos(mem: CycleMemory, order: list[int], vertex: int) -> int:
    n = len(order)
    i = order.index(vertex)
    diff = (mem.offset - i) % n if mem.reflect else (i - mem.offset) % n
    return diff + 1


class SepyCycle(Strategy):
    """Sepy's four-ply win on long cycles when Dom starts: echo Dom's color
    next to his opening, then close a monochromatic stretch on whichever
    side Dom failed to guard."""

    sid = "sepy-cycle"
    role = SEPY

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "cycle play is for the disjoint game")
        _require(not config.biased, "cycle play assumes one selection per turn")
        _require(config.starter == DOM, "cycle play assumes Dom starts")
        _require(config.pass_rights == "none", "cycle play assumes no passing")
        order = _cycle_order(graph)
        _require(order is not None and graph.n >= 8, "graph is not a cycle of length at least 8")
        return order

    def move(self, state, ctx):
        order = ctx
        selects = [m for _a, m in state.history if not m.is_pass]
        mem = derive_cycle_memory(state, order)
        color = BLUE if mem.swap else PURPLE  # Dom's own first color
        if len(selects) == 1:
            return Move(_cycle_real_vertex(mem, order, 2), color)
        if len(selects) == 3:
            n = len(order)
            k = _cycle_pos(mem, order, selects[2].vertex)
            pos = n if k in (3, 4, 5) else 3
            return Move(_cycle_real_vertex(mem, order, pos), color)
        raise StrategyViolation("cycle play should have won by its second move", state)

    def memo_key(self, state, ctx):
        return None  # decisions hinge on the move order in the history


class SepySubdiv(Strategy):
    """Sepy's win on triple subdivisions of graphs with minimum degree two
    when Dom starts: a double threat beside a subdivision-vertex opening, or
    one threat per incident path after a base-vertex opening."""

    sid = "sepy-subdiv"
    role = SEPY

    def prepare(self, config, graph, *, submap=None, seed=None):
        _require(config.variant == DDG, "subdivision play is for the disjoint game")
        _require(not config.biased, "subdivision play assumes one selection per turn")
        _require(config.starter == DOM, "subdivision play assumes Dom starts")
        _require(config.pass_rights == "none", "subdivision play assumes no passing")
        _require(isinstance(submap, SubdivisionMap), "needs the subdivision bookkeeping of the graph")
        sub, _ = _resubdivide(submap)
        _require(sub == graph, "graph does not match the subdivision bookkeeping")
        _require(submap.base.min_degree() >= 2, "base graph needs minimum degree 2")
        return submap

    def move(self, state, ctx):
        mv = _winning_select(state)
        if mv is not None:
            return mv
        first_actor, first_move = state.history[0]
        if first_actor != DOM or first_move.is_pass:
            raise StrategyViolation("subdivision play expects Dom's opening selection", state)
        v0, c0 = first_move.vertex, first_move.color
        if ctx.is_sub_vertex(v0):
            inner = ctx.inner_partner(v0)
            if state.select_legal(inner, c0):
                return Move(inner, c0)
            raise StrategyViolation("double-threat reply unavailable", state)
        candidates = sorted(near for near, _far, _opp in ctx.paths_at(v0))
        for near in candidates:
            if state.select_legal(near, c0):
                return Move(near, c0)
        raise StrategyViolation("no open threat on the opened base vertex", state)

    def memo_key(self, state, ctx):
        return None


def _resubdivide(submap: SubdivisionMap):
    from .graphs import subdivide3

    return subdivide3(submap.base)


# --- baseline adversaries ----------------------------------------------------

def _state_digest(state: GameState, seed) -> int:
    raw = (
        f"{seed}|{state.vmask[PURPLE]}|{state.vmask[BLUE]}|{state.actor}|"
        f"{state.selections_done}|{state.any_move_made}|{state.last_select}"
    )
    return int.from_bytes(hashlib.sha256(raw.encode()).digest()[:8], "big")


class RandomStrategy(Strategy):
    """Uniform over the legal moves, deterministic per (seed, state)."""

    sid = "random"
    role = None

    def prepare(self, config, graph, *, submap=None, seed=None):
        return 0 if seed is None else seed

    def move(self, state, ctx):
        moves = state.legal_moves()
        rng = random.Random(_state_digest(state, ctx))
        return moves[rng.randrange(len(moves))]


class GreedyWin(Strategy):
    """An immediately winning selection when one exists, otherwise random."""

    sid = "greedy"
    role = None

    def prepare(self, config, graph, *, submap=None, seed=None):
        return 0 if seed is None else seed

    def move(self, state, ctx):
        for mv in state.legal_moves():
            if mv.is_pass:
                continue
            if state.apply(mv).status.winner == state.actor:
                return mv
        return RandomStrategy.move(self, state, ctx)


_REGISTRY = {
    "ons": Ons,
    "onsp": Onsp,
    "dom-start-safe": DomStartSafe,
    "dom-pass": DomPass,
    "biased-dom": BiasedDom,
    "bdg-matching": BdgMatching,
    "bdg-general": BdgGeneral,
    "sepy-cycle": SepyCycle,
    "sepy-subdiv": SepySubdiv,
    "random": RandomStrategy,
    "greedy": GreedyWin,
}

_ALIASES = {
    "cycle": "sepy-cycle",
    "subdiv": "sepy-subdiv",
    "greedy-win": "greedy",
}


def strategy_ids() -> list[str]:
    return sorted(_REGISTRY)


def get_strategy(sid: str) -> Strategy:
    key = sid.replace("_", "-")
    key = _ALIASES.get(key, key)
    if key not in _REGISTRY:
        raise KeyError(f"unknown strategy {sid!r}; known: {', '.join(strategy_ids())}")
    return _REGISTRY[key]()


# --- spec-level convenience wrappers -----------------------------------------

def ons_move(state: GameState) -> Move:
    strat = Ons()
    return strat.move(state, strat.prepare(state.config, state.graph))


def onsp_move(state: GameState) -> Move:
    strat = Onsp()
    return strat.move(state, strat.prepare(state.config, state.graph))


def dom_start_safe_move(state: GameState) -> Move:
    strat = DomStartSafe()
    return strat.move(state, strat.prepare(state.config, state.graph))


def dom_pass_move(state: GameState) -> Move:
    strat = DomPass()
    return strat.move(state, strat.prepare(state.config, state.graph))


def biased_dom_move(state: GameState) -> Move:
    strat = BiasedDom()
    return strat.move(state, strat.prepare(state.config, state.graph))


def bdg_matching_move(state: GameState, plan: BdgPlan) -> Move:
    return BdgMatching().move(state, plan)


def bdg_general_move(state: GameState, plan: BdgPlan) -> Move:
    return BdgGeneral().move(state, plan)


def sepy_cycle_move(state: GameState, mem_order=None) -> Move:
    strat = SepyCycle()
    ctx = mem_order if mem_order is not None else strat.prepare(state.config, state.graph)
    return strat.move(state, ctx)


def sepy_subdiv_move(state: GameState, submap: SubdivisionMap) -> Move:
    strat = SepySubdiv()
    return strat.move(state, strat.prepare(state.config, state.graph, submap=submap))


def random_move(state: GameState, seed: int = 0) -> Move:
    return RandomStrategy().move(state, seed)


def greedy_win_move(state: GameState, seed: int = 0) -> Move:
    return GreedyWin().move(state, seed)
