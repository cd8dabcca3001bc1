"""Exact winner computation and exhaustive strategy certification.

``solve`` runs a memoized win/lose search over the raw position (coloring
masks plus turn bookkeeping); games of this family always end with a winner,
so no scores are needed and the first winning child cuts the branch.

``verify_strategy`` walks the full game tree with one side pinned to a
strategy and the other ranging over every legal move (passes included); it
either certifies the strategy or returns a counterexample playout.

Everything here is single-threaded; positions are plain values, so callers
wanting parallelism can fan out root children across solver instances and
will get identical results.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import engine
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
    new_game,
    other_player,
    trace_lines,
)
from .graphs import Graph, bits

DEFAULT_VERTEX_CAP = 14
DEFAULT_ENTRY_CAP = 20_000_000


class ResourceLimitError(RuntimeError):
    """The configured state-space bound was exceeded; results would be
    incomplete, so the solver refuses instead of degrading."""


@dataclass(frozen=True)
class SolveResult:
    winner: str
    best_move: Move | None
    nodes: int
    pv: tuple[Move, ...]

    def to_json(self, graph: Graph, config: GameConfig) -> dict:
        from .formats import emit_graph6

        return {
            "graph": emit_graph6(graph),
            "config": config.to_json(),
            "winner": self.winner,
            "nodes": self.nodes,
            "pv": [m.to_json() for m in self.pv],
        }


@dataclass
class VerificationReport:
    strategy: str
    role: str
    config: GameConfig
    graph6: str
    verified: bool
    counterexample: list[dict] | None
    branches: int
    max_plies: int

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "role": self.role,
            "config": self.config.to_json(),
            "graph": self.graph6,
            "verified": self.verified,
            "branches": self.branches,
            "max_plies": self.max_plies,
            "counterexample": self.counterexample,
        }


def encode_state(state: GameState) -> str:
    """Canonical key of a state: per-vertex trits (0 uncolored, 1 purple,
    2 blue) plus actor, selections this turn, and the first-move flag.  In
    the disjoint game the palette-swapped twin shares the key."""
    digits = "".join(
        "0" if c == -1 else ("1" if c == PURPLE else "2") for c in state.colors
    )
    tail = f"|{state.actor[0]}|{state.selections_done}|{int(state.any_move_made)}"
    key = digits + tail
    if state.config.variant == DDG:
        swapped = digits.translate(str.maketrans("12", "21")) + tail
        key = min(key, swapped)
    return key


class _Solver:
    """Win/lose search on (purple mask, blue mask, actor, selections, moved)."""

    def __init__(self, config: GameConfig, graph: Graph, *,
                 use_memo: bool = True, entry_cap: int = DEFAULT_ENTRY_CAP):
        self.cfg = config
        self.g = graph
        self.n = graph.n
        self.full = graph.full_mask
        self.closed = graph.closed_mask
        self.closed_verts = tuple(tuple(bits(m)) for m in graph.closed_mask)
        self.use_memo = use_memo
        self.entry_cap = entry_cap
        self.memo: dict[int, str] = {}
        self.nodes = 0
        self.dom_colors = config.allowed_colors(DOM)
        self.sepy_colors = config.allowed_colors(SEPY)

    # -- rule primitives on raw masks --------------------------------------

    def _colors_of(self, actor):
        return self.dom_colors if actor == DOM else self.sepy_colors

    def _has_select(self, vp, vb, dp, db, actor):
        undom = 0
        for c in self._colors_of(actor):
            undom |= self.full & ~(dp if c == PURPLE else db)
        unc = self.full & ~(vp | vb)
        for v in bits(unc):
            if self.closed[v] & undom:
                return True
        return False

    def _pass_child(self, vp, vb, dp, db, actor, sel, moved):
        """The post-pass position, or None when passing is illegal here."""
        cfg = self.cfg
        if actor == SEPY and sel >= 1:
            pass  # biased mid-turn stop is always available
        else:
            allowed = cfg.dom_may_pass if actor == DOM else cfg.sepy_may_pass
            if not allowed:
                return None
            if not (moved or cfg.allow_first_turn_pass):
                return None
        if not self._has_select(vp, vb, dp, db, other_player(actor)):
            return None
        return self._resolve_incoming(vp, vb, dp, db, other_player(actor), moved)

    def _resolve_incoming(self, vp, vb, dp, db, actor, moved):
        """(actor', sel', terminal_winner_or_None); skips stuck bicolored
        players and detects the bicolored end."""
        if self.cfg.variant == DDG:
            return actor, 0, None
        if self._has_select(vp, vb, dp, db, actor):
            return actor, 0, None
        other = other_player(actor)
        if self._has_select(vp, vb, dp, db, other):
            return other, 0, None
        return actor, 0, DOM

    def _select_children(self, vp, vb, dp, db, actor, sel, moved):
        """Ordered (move, child) pairs; child is (vp, vb, dp, db, actor, sel,
        moved, winner_or_None)."""
        out = []
        cfg = self.cfg
        unc = self.full & ~(vp | vb)
        cols = self._colors_of(actor)
        for v in bits(unc):
            cbit = 1 << v
            for c in cols:
                dmask = dp if c == PURPLE else db
                if not self.closed[v] & self.full & ~dmask:
                    continue
                nvp, nvb = (vp | cbit, vb) if c == PURPLE else (vp, vb | cbit)
                ndp, ndb = (dp | self.closed[v], db) if c == PURPLE else (dp, db | self.closed[v])
                vcmask = nvp if c == PURPLE else nvb
                winner = None
                for u in self.closed_verts[v]:
                    if not self.closed[u] & self.full & ~vcmask:
                        winner = SEPY
                        break
                nsel = sel + 1
                nactor = actor
                if winner is None and cfg.variant == DDG and ndp == self.full and ndb == self.full:
                    winner = DOM
                if winner is None:
                    cap = cfg.d if actor == DOM else cfg.s
                    if nsel < cap and self._has_select(nvp, nvb, ndp, ndb, actor):
                        pass  # same actor continues the turn
                    else:
                        nactor, nsel, winner = self._resolve_incoming(
                            nvp, nvb, ndp, ndb, other_player(actor), True
                        )
                out.append(
                    (Move(v, c), (nvp, nvb, ndp, ndb, nactor, nsel, True, winner))
                )
        return out

    def _children(self, vp, vb, dp, db, actor, sel, moved):
        out = self._select_children(vp, vb, dp, db, actor, sel, moved)
        child = self._pass_child(vp, vb, dp, db, actor, sel, moved)
        if child is not None:
            a2, s2, winner = child
            out.append((PASS, (vp, vb, dp, db, a2, s2, moved, winner)))
        return out

    # -- search -------------------------------------------------------------

    def _key(self, vp, vb, actor, sel, moved):
        n = self.n
        k = vp | vb << n | (actor == DOM) << (2 * n) | sel << (2 * n + 1) | moved << (2 * n + 5)
        if self.cfg.variant == DDG:
            k2 = vb | vp << n | (actor == DOM) << (2 * n) | sel << (2 * n + 1) | moved << (2 * n + 5)
            if k2 < k:
                return k2
        return k

    def value(self, vp, vb, dp, db, actor, sel, moved) -> str:
        key = self._key(vp, vb, actor, sel, moved)
        if self.use_memo:
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        self.nodes += 1
        children = self._children(vp, vb, dp, db, actor, sel, moved)
        if not children:
            raise engine.EngineInvariantError("ongoing position with no moves")
        result = other_player(actor)
        for _mv, (cvp, cvb, cdp, cdb, ca, cs, cm, winner) in children:
            w = winner if winner is not None else self.value(cvp, cvb, cdp, cdb, ca, cs, cm)
            if w == actor:
                result = actor
                break
        if self.use_memo:
            if len(self.memo) >= self.entry_cap:
                raise ResourceLimitError(
                    f"transposition table exceeded {self.entry_cap} entries"
                )
            self.memo[key] = result
        return result

    def _position_of(self, state: GameState):
        return (
            state.vmask[PURPLE],
            state.vmask[BLUE],
            state.dom[PURPLE],
            state.dom[BLUE],
            state.actor,
            state.selections_done,
            state.any_move_made,
        )


def _state_cap() -> int:
    env = os.environ.get("DOMGAME_STATE_CAP")
    return int(env) if env else DEFAULT_VERTEX_CAP


def solve(config: GameConfig, g: Graph, state: GameState | None = None, *,
          vertex_cap: int | None = None, use_memo: bool = True,
          entry_cap: int = DEFAULT_ENTRY_CAP) -> SolveResult:
    """Exact winner under optimal play, with the deterministic best move at
    the root and a principal variation."""
    cap = vertex_cap if vertex_cap is not None else _state_cap()
    if g.n > cap:
        raise ResourceLimitError(
            f"graph has {g.n} vertices, above the solve bound of {cap} "
            "(raise via DOMGAME_STATE_CAP or vertex_cap at your own risk)"
        )
    root = state if state is not None else new_game(config, g)
    if root.graph != g or root.config != config:
        raise ValueError("state does not belong to the given graph and config")
    solver = _Solver(config, g, use_memo=use_memo, entry_cap=entry_cap)
    if not root.status.ongoing:
        return SolveResult(root.status.winner, None, 0, ())
    pos = solver._position_of(root)
    winner = solver.value(*pos)
    best = _best_of(solver, pos, winner)
    pv = _principal_variation(solver, pos)
    return SolveResult(winner, best, solver.nodes, tuple(pv))


def _best_of(solver: _Solver, pos, winner: str) -> Move | None:
    children = solver._children(*pos)
    actor = pos[4]
    if winner == actor:
        for mv, child in children:
            w = child[7] if child[7] is not None else solver.value(*child[:7])
            if w == actor:
                return mv
        raise engine.EngineInvariantError("winning position without a winning child")
    return children[0][0] if children else None


def _principal_variation(solver: _Solver, pos, limit: int = 200) -> list[Move]:
    pv = []
    cur = pos
    for _ in range(limit):
        children = solver._children(*cur)
        if not children:
            break
        actor = cur[4]
        value = solver.value(*cur)
        chosen = None
        for mv, child in children:
            w = child[7] if child[7] is not None else solver.value(*child[:7])
            if w == value:
                chosen = (mv, child)
                break
        if chosen is None:
            chosen = (children[0][0], children[0][1])
        pv.append(chosen[0])
        if chosen[1][7] is not None:
            break
        cur = chosen[1][:7]
    return pv


def best_move(config: GameConfig, g: Graph, state: GameState | None = None, *,
              vertex_cap: int | None = None) -> tuple[Move, bool]:
    """The actor's minimax move and whether it actually wins (False means
    every move loses and the least one is returned)."""
    res = solve(config, g, state, vertex_cap=vertex_cap)
    actor = (state or new_game(config, g)).actor
    if res.best_move is None:
        raise ValueError("game is already over")
    return res.best_move, res.winner == actor


def verify_strategy(strategy, role: str, config: GameConfig, g: Graph, *,
                    submap=None, seed=None) -> VerificationReport:
    """Certify that `strategy` playing `role` beats every line of opponent
    play on g, or produce the losing playout.

    The walk follows the strategy's unique move on its turns and branches on
    all legal opponent moves (passes included).  Subtrees are shared through
    a memo only when the strategy declares itself history-independent.
    """
    from .formats import emit_graph6
    from .strategies import NotApplicable, StrategyViolation, get_strategy

    strat = get_strategy(strategy) if isinstance(strategy, str) else strategy
    if strat.role is not None and strat.role != role:
        raise NotApplicable(f"strategy {strat.sid} plays {strat.role}, not {role}")
    ctx = strat.prepare(config, g, submap=submap, seed=seed)
    start = new_game(config, g)
    memo: set = set()
    stats = {"leaves": 0, "max_plies": 0}

    class _Failed(Exception):
        def __init__(self, state):
            self.state = state

    def walk(state: GameState):
        st = state.status
        if not st.ongoing:
            stats["leaves"] += 1
            stats["max_plies"] = max(stats["max_plies"], state.ply())
            if st.winner != role:
                raise _Failed(state)
            return
        key = strat.memo_key(state, ctx)
        if key is not None and key in memo:
            return
        if state.actor == role:
            try:
                mv = strat.move(state, ctx)
                nxt = state.apply(mv)
            except engine.IllegalMoveError as exc:
                raise StrategyViolation(str(exc), state) from exc
            strat.check_invariants(nxt, ctx)
            walk(nxt)
        else:
            for mv in state.legal_moves():
                walk(state.apply(mv))
        if key is not None:
            memo.add(key)

    verified = True
    counterexample = None
    try:
        walk(start)
    except _Failed as fail:
        verified = False
        counterexample = trace_lines(fail.state)
    return VerificationReport(
        strategy=strat.sid,
        role=role,
        config=config,
        graph6=emit_graph6(g),
        verified=verified,
        counterexample=counterexample,
        branches=stats["leaves"],
        max_plies=stats["max_plies"],
    )
