"""Rules engine for the two domination games.

Two players, Dom and Sepy, alternately color vertices purple or blue.  A
coloring of v with c is legal when v is uncolored and some vertex of N[v] is
not yet dominated in c.  Sepy wins the moment some closed neighborhood
becomes monochromatic; in the disjoint game (DDG) Dom wins when both color
classes dominate every vertex, and in the bicolored game (BDG, Dom plays
only purple, Sepy only blue) Dom wins when neither player can move and no
monochromatic closed neighborhood exists.

States are value-like: ``apply`` returns a fresh state and never mutates its
input, so undo is just keeping the old reference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits

UNCOLORED = -1
PURPLE = 0
BLUE = 1
COLOR_NAMES = ("purple", "blue")

DOM = "dom"
SEPY = "sepy"

DDG = "ddg"
BDG = "bdg"


def opposite(color: int) -> int:
    return 1 - color


def other_player(actor: str) -> str:
    return SEPY if actor == DOM else DOM


class ConfigError(ValueError):
    """Invalid game configuration or setup graph."""


class IllegalMoveError(ValueError):
    """Move rejected by the rules; the state is unchanged."""


class EngineInvariantError(AssertionError):
    """A rule-level invariant failed; indicates an engine bug."""


@dataclass(frozen=True)
class Move:
    """Either a vertex selection with a color, or a pass (both fields None)."""

    vertex: int | None = None
    color: int | None = None

    @property
    def is_pass(self) -> bool:
        return self.vertex is None

    @staticmethod
    def select(vertex: int, color: int) -> "Move":
        return Move(vertex, color)

    def to_json(self):
        if self.is_pass:
            return "pass"
        return {"v": self.vertex, "c": COLOR_NAMES[self.color]}

    @staticmethod
    def from_json(obj) -> "Move":
        if obj == "pass":
            return PASS
        return Move(int(obj["v"]), COLOR_NAMES.index(obj["c"]))

    def __repr__(self) -> str:
        if self.is_pass:
            return "Move(pass)"
        return f"Move({self.vertex},{COLOR_NAMES[self.color]})"


PASS = Move()


@dataclass(frozen=True)
class GameConfig:
    """Variant, starter, per-turn selection counts and pass rights.

    In a biased game Dom colors exactly d vertices per turn (fewer only when
    he runs out of legal selections) while Sepy colors at most s and may pass
    a whole turn; that pass right is part of the biased rules, so it is in
    force whenever (d, s) != (1, 1) regardless of pass_rights.  Passing on
    the game's very first turn is forbidden unless allow_first_turn_pass is
    set (kept as an explicit escape hatch, default off in every variant).
    """

    variant: str = DDG
    starter: str = SEPY
    d: int = 1
    s: int = 1
    pass_rights: str = "none"  # "none" | "dom" | "sepy"
    allow_first_turn_pass: bool = False

    def __post_init__(self):
        if self.variant not in (DDG, BDG):
            raise ConfigError(f"unknown variant {self.variant!r}")
        if self.starter not in (DOM, SEPY):
            raise ConfigError(f"unknown starter {self.starter!r}")
        if self.pass_rights not in ("none", DOM, SEPY):
            raise ConfigError(f"unknown pass rights {self.pass_rights!r}")
        if self.d < 1 or self.s < 1:
            raise ConfigError("selection counts d and s must be at least 1")
        if self.variant == BDG and (self.d, self.s) != (1, 1):
            raise ConfigError("the bicolored game requires d = s = 1")
        if self.biased and self.pass_rights == DOM:
            raise ConfigError("Dom cannot hold pass rights in a biased game")

    @property
    def biased(self) -> bool:
        return (self.d, self.s) != (1, 1)

    @property
    def sepy_may_pass(self) -> bool:
        return self.pass_rights == SEPY or self.biased

    @property
    def dom_may_pass(self) -> bool:
        return self.pass_rights == DOM

    def allowed_colors(self, actor: str) -> tuple[int, ...]:
        if self.variant == BDG:
            return (PURPLE,) if actor == DOM else (BLUE,)
        return (PURPLE, BLUE)

    def to_json(self):
        return {
            "variant": self.variant,
            "start": self.starter,
            "d": self.d,
            "s": self.s,
            "pass": self.pass_rights,
        }


@dataclass(frozen=True)
class Status:
    """Outcome view of a state: winner None while the game is ongoing."""

    winner: str | None
    next_actor: str | None = None
    witness: int | None = None
    witness_color: int | None = None

    @property
    def ongoing(self) -> bool:
        return self.winner is None

    def label(self) -> str:
        return "ongoing" if self.ongoing else self.winner


class GameState:
    """Position plus turn bookkeeping.

    colors[v] is UNCOLORED/PURPLE/BLUE; vmask and dom are per-color bitmasks
    of colored and dominated vertices; ledger[2v+c] counts the vertices of
    N[v] colored c (always recomputable from colors).
    """

    __slots__ = (
        "graph", "config", "colors", "vmask", "dom", "ledger",
        "actor", "selections_done", "any_move_made", "history",
        "last_select", "_status",
    )

    graph: Graph
    config: GameConfig

    def __init__(self):
        raise TypeError("use new_game() to create states")

    # -- queries ----------------------------------------------------------

    @property
    def status(self) -> Status:
        return self._status

    def color_of(self, v: int) -> int | None:
        c = self.colors[v]
        return None if c == UNCOLORED else c

    def uncolored_mask(self) -> int:
        return self.graph.full_mask & ~(self.vmask[PURPLE] | self.vmask[BLUE])

    def undominated_mask(self) -> int:
        """Vertices dominated by no color."""
        return self.graph.full_mask & ~(self.dom[PURPLE] | self.dom[BLUE])

    def single_dominated_mask(self) -> int:
        """Vertices dominated in exactly one color."""
        return self.dom[PURPLE] ^ self.dom[BLUE]

    def select_legal(self, v: int, c: int) -> bool:
        """Selection legality for the current actor."""
        if self.colors[v] != UNCOLORED:
            return False
        if c not in self.config.allowed_colors(self.actor):
            return False
        g = self.graph
        return bool(g.closed_mask[v] & g.full_mask & ~self.dom[c])

    def _has_select(self, actor: str) -> bool:
        g = self.graph
        undom = 0
        for c in self.config.allowed_colors(actor):
            undom |= g.full_mask & ~self.dom[c]
        for v in bits(self.uncolored_mask()):
            if g.closed_mask[v] & undom:
                return True
        return False

    def _pass_legal(self) -> bool:
        cfg = self.config
        if self.actor == SEPY and self.selections_done >= 1:
            # biased mid-turn: Sepy may stop after 1..s selections
            return True
        if self.actor == DOM:
            if not cfg.dom_may_pass:
                return False
        else:
            if not cfg.sepy_may_pass:
                return False
        if not (self.any_move_made or cfg.allow_first_turn_pass):
            return False
        # a pass that leaves the opponent with no selection would stall the
        # game (reachable only in bicolored corner cases)
        return self._has_select(other_player(self.actor))

    def ply(self) -> int:
        return len(self.history)

    def recount_ledger(self) -> list[int]:
        """From-scratch ledger recomputation (test oracle)."""
        g = self.graph
        fresh = [0] * (2 * g.n)
        for v in range(g.n):
            for c in (PURPLE, BLUE):
                fresh[2 * v + c] = (g.closed_mask[v] & self.vmask[c]).bit_count()
        return fresh

    # -- transitions -------------------------------------------------------

    def legal_moves(self) -> list[Move]:
        if not self._status.ongoing:
            return []
        out = []
        cols = self.config.allowed_colors(self.actor)
        for v in bits(self.uncolored_mask()):
            for c in cols:
                if self.select_legal(v, c):
                    out.append(Move(v, c))
        if self._pass_legal():
            out.append(PASS)
        if not out:
            raise EngineInvariantError(
                "ongoing state with no legal move for the actor"
            )
        return out

    def apply(self, move: Move) -> "GameState":
        if not self._status.ongoing:
            raise IllegalMoveError("game is over")
        if move.is_pass:
            if not self._pass_legal():
                raise IllegalMoveError(f"{self.actor} may not pass here")
            return self._apply_pass()
        if not self.select_legal(move.vertex, move.color):
            raise IllegalMoveError(
                f"{self.actor} cannot color vertex {move.vertex} "
                f"{COLOR_NAMES[move.color]}"
            )
        return self._apply_select(move)

    def _clone(self) -> "GameState":
        st = object.__new__(GameState)
        st.graph = self.graph
        st.config = self.config
        st.colors = self.colors.copy()
        st.vmask = self.vmask.copy()
        st.dom = self.dom.copy()
        st.ledger = self.ledger.copy()
        st.actor = self.actor
        st.selections_done = self.selections_done
        st.any_move_made = self.any_move_made
        st.history = self.history
        st.last_select = self.last_select
        st._status = self._status
        return st

    def _apply_pass(self) -> "GameState":
        st = self._clone()
        st.history = self.history + ((self.actor, PASS),)
        st.actor = other_player(self.actor)
        st.selections_done = 0
        st._resolve_incoming()
        return st

    def _apply_select(self, move: Move) -> "GameState":
        v, c = move.vertex, move.color
        g = self.graph
        st = self._clone()
        st.colors[v] = c
        bit = 1 << v
        st.vmask[c] |= bit
        st.dom[c] |= g.closed_mask[v]
        witness = None
        for u in bits(g.closed_mask[v]):
            st.ledger[2 * u + c] += 1
            if witness is None and st.ledger[2 * u + c] == g.degree(u) + 1:
                witness = u
        if st.ledger[2 * v + c] == g.degree(v) + 1:
            raise EngineInvariantError(
                "legal selection made its own closed neighborhood monochromatic"
            )
        st.any_move_made = True
        st.history = self.history + ((self.actor, move),)
        st.last_select = (v, c, self.actor)
        st.selections_done = self.selections_done + 1

        if witness is not None:
            st._status = Status(SEPY, witness=witness, witness_color=c)
            return st
        full = g.full_mask
        if self.config.variant == DDG and st.dom[PURPLE] == full and st.dom[BLUE] == full:
            st._status = Status(DOM)
            return st
        st._advance_turn()
        return st

    def _advance_turn(self):
        cfg = self.config
        cap = cfg.d if self.actor == DOM else cfg.s
        if self.selections_done < cap and self._has_select(self.actor):
            self._status = Status(None, next_actor=self.actor)
            return
        self.actor = other_player(self.actor)
        self.selections_done = 0
        self._resolve_incoming()

    def _resolve_incoming(self):
        """Settle whose turn it really is, skipping stuck bicolored players,
        and refresh the status."""
        if self.config.variant == DDG:
            if not self._has_select(self.actor) and not self._pass_legal():
                raise EngineInvariantError(
                    "ongoing disjoint-game state without a feasible move"
                )
            self._status = Status(None, next_actor=self.actor)
            return
        if self._has_select(self.actor):
            self._status = Status(None, next_actor=self.actor)
            return
        other = other_player(self.actor)
        if self._has_select(other):
            self.actor = other
            self.selections_done = 0
            self._status = Status(None, next_actor=other)
            return
        # neither side can color: Dom's bicolored win.  With no monochromatic
        # closed neighborhood, a stuck player's color class must dominate
        # every vertex, so both masks are full here.
        if self.dom[PURPLE] != self.graph.full_mask or self.dom[BLUE] != self.graph.full_mask:
            raise EngineInvariantError(
                "bicolored game ended without two dominating color classes"
            )
        self._status = Status(DOM)


def new_game(config: GameConfig, g: Graph) -> GameState:
    """Fresh state: everything uncolored, the configured starter to move."""
    if g.n < 1:
        raise ConfigError("game graph must have at least one vertex")
    if g.has_isolates():
        isolate = next(v for v in range(g.n) if not g.adj[v])
        raise ConfigError(f"game graph has an isolated vertex ({isolate})")
    st = object.__new__(GameState)
    st.graph = g
    st.config = config
    st.colors = [UNCOLORED] * g.n
    st.vmask = [0, 0]
    st.dom = [0, 0]
    st.ledger = [0] * (2 * g.n)
    st.actor = config.starter
    st.selections_done = 0
    st.any_move_made = False
    st.history = ()
    st.last_select = None
    st._status = Status(None, next_actor=config.starter)
    return st


def is_legal(state: GameState, move: Move) -> bool:
    if not state.status.ongoing:
        return False
    if move.is_pass:
        return state._pass_legal()
    return state.select_legal(move.vertex, move.color)


def legal_moves(state: GameState) -> list[Move]:
    return state.legal_moves()


def apply(state: GameState, move: Move) -> GameState:
    return state.apply(move)


def status(state: GameState) -> Status:
    return state.status


# -- replay / trace ---------------------------------------------------------

def trace_lines(state: GameState) -> list[dict]:
    """Replay the state's history into the JSON-lines trace records."""
    cur = new_game(state.config, state.graph)
    out = []
    for ply, (actor, move) in enumerate(state.history, start=1):
        if cur.actor != actor:
            raise EngineInvariantError("history actor mismatch during replay")
        cur = cur.apply(move)
        out.append(
            {
                "ply": ply,
                "actor": actor,
                "move": move.to_json(),
                "status": cur.status.label(),
            }
        )
    return out


def replay(config: GameConfig, g: Graph, lines: list[dict]) -> GameState:
    """Re-apply a trace, checking each recorded status; returns the end state."""
    cur = new_game(config, g)
    for rec in lines:
        if cur.actor != rec["actor"]:
            raise IllegalMoveError(
                f"ply {rec['ply']}: expected {cur.actor} to move"
            )
        cur = cur.apply(Move.from_json(rec["move"]))
        if cur.status.label() != rec["status"]:
            raise IllegalMoveError(
                f"ply {rec['ply']}: status {cur.status.label()} != recorded "
                f"{rec['status']}"
            )
    return cur
