"""The acceptance battery: every headline claim of the library, checked
exactly (winners and certifications admit no tolerance) at desk scale.

Each item is independent and returns a short detail string; ``run_suite``
prints one pass/fail line per item.  The pytest suite runs the same items.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .engine import (
    BDG,
    BLUE,
    DDG,
    DOM,
    PURPLE,
    SEPY,
    GameConfig,
    Move,
    new_game,
)
from .formats import emit_graph6, parse_graph6
from .graphs import (
    Graph,
    bits,
    disjoint_union,
    enumerate_connected_graphs,
    enumerate_graphs,
    enumerate_isolate_free_graphs,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    random_isolate_free,
    relabel,
    subdivide3,
)
from .matching import maximum_matching
from .solver import encode_state, solve, verify_strategy
from .strategies import _safe_first_vertex


def _ddg(starter, pass_rights="none", d=1, s=1) -> GameConfig:
    return GameConfig(variant=DDG, starter=starter, d=d, s=s, pass_rights=pass_rights)


def _bdg(starter) -> GameConfig:
    return GameConfig(variant=BDG, starter=starter)


def _check(cond, message):
    if not cond:
        raise AssertionError(message)


# -- 1 ------------------------------------------------------------------------

def crit_cycles() -> str:
    """Dom-start cycles of length >= 8 are Sepy wins, and the explicit cycle
    strategy is certified (winning within four plies up to n = 12)."""
    for n in (8, 9, 10, 11):
        g = gen_cycle(n)
        res = solve(_ddg(DOM), g)
        _check(res.winner == SEPY, f"C{n} Dom-start solved as {res.winner}")
    for n in range(8, 13):
        rep = verify_strategy("sepy-cycle", SEPY, _ddg(DOM), gen_cycle(n))
        _check(rep.verified, f"cycle strategy failed on C{n}")
        _check(rep.max_plies <= 4, f"cycle strategy needed {rep.max_plies} plies on C{n}")
    return "C8..C11 solved Sepy-win; strategy certified on C8..C12 within 4 plies"


# -- 2 / 3 ---------------------------------------------------------------------

def _connected_corpus():
    for n in range(2, 7):
        yield from enumerate_connected_graphs(n)


def crit_ons_connected() -> str:
    """Sepy-start on a connected graph: Dom wins, and opposite-neighbor play
    is a certified winning strategy, over the whole n <= 6 corpus."""
    cfg = _ddg(SEPY)
    count = 0
    for g in _connected_corpus():
        _check(solve(cfg, g).winner == DOM, f"{emit_graph6(g)} not Dom-win")
        rep = verify_strategy("ons", DOM, cfg, g)
        _check(rep.verified, f"ons failed on {emit_graph6(g)}")
        count += 1
    return f"{count} connected graphs: solver Dom-win and ons certified"


def crit_onsp_pass() -> str:
    """Same corpus with Sepy allowed to pass (never in the first move)."""
    cfg = _ddg(SEPY, pass_rights=SEPY)
    count = 0
    for g in _connected_corpus():
        _check(solve(cfg, g).winner == DOM, f"{emit_graph6(g)} not Dom-win with passes")
        rep = verify_strategy("onsp", DOM, cfg, g)
        _check(rep.verified, f"onsp failed on {emit_graph6(g)}")
        count += 1
    return f"{count} connected graphs with Sepy passes: solver Dom-win and onsp certified"


# -- 4 / 5 ---------------------------------------------------------------------

def _two_component_unions(total: int):
    conn = {n: list(enumerate_connected_graphs(n)) for n in range(2, total - 1)}
    for a in range(2, total - 1):
        for b in range(a, total - a + 1):
            if b not in conn:
                continue
            for i, g1 in enumerate(conn[a]):
                second = range(i, len(conn[b])) if a == b else range(len(conn[b]))
                for j in second:
                    yield disjoint_union(g1, conn[b][j])


def crit_dom_pass_unions() -> str:
    """Dom's pass rights beat every two-component union (total n <= 8) in the
    Sepy-start game, and the C4+C8 Dom-start game with pass rights."""
    g = disjoint_union(gen_cycle(4), gen_cycle(8))
    cfg = _ddg(DOM, pass_rights=DOM)
    _check(solve(cfg, g).winner == DOM, "C4+C8 Dom-start with Dom passes not Dom-win")
    rep = verify_strategy("dom-pass", DOM, cfg, g)
    _check(rep.verified, "dom-pass failed on C4+C8 Dom-start")
    cfg = _ddg(SEPY, pass_rights=DOM)
    count = 0
    for u in _two_component_unions(8):
        rep = verify_strategy("dom-pass", DOM, cfg, u)
        _check(rep.verified, f"dom-pass failed on union {emit_graph6(u)}")
        count += 1
    return f"C4+C8 Dom-start certified; {count} Sepy-start unions certified"


def crit_c4c8_passing() -> str:
    """Pass rights flip the C4+C8 Sepy-start game: Sepy-win with them,
    Dom-win without."""
    g = disjoint_union(gen_cycle(4), gen_cycle(8))
    with_pass = solve(_ddg(SEPY, pass_rights=SEPY), g).winner
    _check(with_pass == SEPY, f"with Sepy passes solved as {with_pass}")
    without = solve(_ddg(SEPY), g).winner
    _check(without == DOM, f"without passes solved as {without}")
    return "C4+C8 Sepy-start: sepy with pass rights, dom without"


# -- 6 --------------------------------------------------------------------------

def crit_safe_start() -> str:
    """A nested closed-neighborhood pair gives Dom a certified Dom-start win
    (complete graphs, paths, and the whole connected n <= 6 corpus that has
    such a pair)."""
    cfg = _ddg(DOM)
    fixtures = [gen_complete(n) for n in range(2, 7)]
    fixtures += [gen_path(n) for n in range(2, 8)]
    bulk = [g for g in _connected_corpus() if _safe_first_vertex(g) is not None]
    count = 0
    for g in fixtures + bulk:
        rep = verify_strategy("dom-start-safe", DOM, cfg, g)
        _check(rep.verified, f"safe-start failed on {emit_graph6(g)}")
        _check(solve(cfg, g).winner == DOM, f"{emit_graph6(g)} not Dom-win")
        count += 1
    return f"{count} graphs with nested neighborhoods: certified and solver-agreed"


# -- 7 --------------------------------------------------------------------------

def crit_subdivision() -> str:
    """Triple subdivisions of min-degree-2 graphs are Sepy wins when Dom
    starts; the explicit strategy is certified on C3, C4, K4 bases."""
    cfg = _ddg(DOM)
    g9, _ = subdivide3(gen_cycle(3))
    res = solve(cfg, g9)
    _check(res.winner == SEPY, f"C3 subdivision solved as {res.winner}")
    for name, base in (("C3", gen_cycle(3)), ("C4", gen_cycle(4)), ("K4", gen_complete(4))):
        sub, smap = subdivide3(base)
        rep = verify_strategy("sepy-subdiv", SEPY, cfg, sub, submap=smap)
        _check(rep.verified, f"subdivision strategy failed on {name} base")
    return "C3+2 solved Sepy-win; strategy certified on C3+2, C4+2, K4+2"


# -- 8 --------------------------------------------------------------------------

def crit_biased_two_one() -> str:
    """Two selections per Dom turn beat every isolate-free graph: strategy
    certified on n <= 6 (both starts), solver agreement there and on larger
    fixtures up to n = 10."""
    count = 0
    for n in range(2, 7):
        for g in enumerate_isolate_free_graphs(n):
            for start in (DOM, SEPY):
                cfg = _ddg(start, d=2, s=1)
                rep = verify_strategy("biased-dom", DOM, cfg, g)
                _check(rep.verified, f"biased-dom failed on {emit_graph6(g)} {start}-start")
                _check(solve(cfg, g).winner == DOM, f"{emit_graph6(g)} {start}-start not Dom-win")
                count += 1
    fixtures = [
        gen_cycle(7), gen_cycle(8), gen_cycle(10), gen_path(10),
        Graph(6, [(u, v + 3) for u in range(3) for v in range(3)]),  # K3,3
        disjoint_union(gen_path(2), gen_cycle(8)),
        disjoint_union(gen_cycle(4), gen_cycle(5)),
        gen_petersen(),
    ]
    for g in fixtures:
        for start in (DOM, SEPY):
            cfg = _ddg(start, d=2, s=1)
            _check(solve(cfg, g).winner == DOM,
                   f"(2:1) fixture {emit_graph6(g)} {start}-start not Dom-win")
    return f"{count} corpus cases certified; {len(fixtures)} fixtures to n=10 solver-agreed"


# -- 9 / 10 ----------------------------------------------------------------------

def crit_bdg_perfect_matching() -> str:
    """Matching play wins the bicolored game on every isolate-free graph with
    a perfect matching, n in {2, 4, 6}, both starts."""
    count = 0
    for n in (2, 4, 6):
        for g in enumerate_isolate_free_graphs(n):
            if 2 * len(maximum_matching(g).pairs) != n:
                continue
            for start in (DOM, SEPY):
                rep = verify_strategy("bdg-matching", DOM, _bdg(start), g)
                _check(rep.verified, f"bdg-matching failed on {emit_graph6(g)} {start}-start")
                count += 1
    return f"{count} perfect-matching cases certified"


def crit_bdg_general() -> str:
    """The matching-based rules win the bicolored game on every isolate-free
    graph: certified on n <= 6 both starts, solver agreement there and on 100
    seeded random graphs up to n = 10."""
    count = 0
    for n in range(2, 7):
        for g in enumerate_isolate_free_graphs(n):
            for start in (DOM, SEPY):
                cfg = _bdg(start)
                rep = verify_strategy("bdg-general", DOM, cfg, g)
                _check(rep.verified, f"bdg-general failed on {emit_graph6(g)} {start}-start")
                _check(solve(cfg, g).winner == DOM, f"{emit_graph6(g)} {start}-start not Dom-win")
                count += 1
    rng = random.Random(20260810)
    for i in range(100):
        g = random_isolate_free(rng.randrange(2, 11), rng)
        start = DOM if i % 2 == 0 else SEPY
        _check(solve(_bdg(start), g).winner == DOM,
               f"random bicolored fixture {i} ({emit_graph6(g)}) not Dom-win")
    return f"{count} corpus cases certified; 100 random graphs to n=10 solver-agreed"


# -- 11 ---------------------------------------------------------------------------

_RULE_COMBOS = (
    _ddg(DOM), _ddg(SEPY),
    _ddg(DOM, pass_rights=DOM), _ddg(SEPY, pass_rights=DOM),
    _ddg(DOM, pass_rights=SEPY), _ddg(SEPY, pass_rights=SEPY),
    _bdg(DOM), _bdg(SEPY),
)


def _assert_state_sound(state) -> None:
    _check(state.ledger == state.recount_ledger(),
           "ledger diverged from a from-scratch recount")
    g = state.graph
    mono = None
    for v in range(g.n):
        c = state.colors[v]
        if c != -1 and g.closed_mask[v] & ~state.vmask[c] & g.full_mask == 0:
            mono = (v, c)
            break
    both_dominating = (
        state.dom[PURPLE] == g.full_mask and state.dom[BLUE] == g.full_mask
    )
    _check(not (mono and both_dominating),
           "a monochromatic neighborhood coexists with two dominating classes")
    st = state.status
    if st.winner == SEPY:
        _check(mono is not None, "Sepy win without a monochromatic neighborhood")
    if state.config.variant == DDG:
        if st.winner == DOM:
            _check(both_dominating and mono is None, "malformed Dom win")
        if st.ongoing:
            _check(len(state.legal_moves()) > 0, "ongoing state with no moves")
            _check(mono is None, "ongoing state already monochromatic")


def _walk_full_tree(config, g) -> int:
    seen = set()
    states = 0

    def walk(state):
        nonlocal states
        key = (tuple(state.colors), state.actor, state.selections_done, state.any_move_made)
        if key in seen:
            return
        seen.add(key)
        states += 1
        _assert_state_sound(state)
        if state.status.ongoing:
            for mv in state.legal_moves():
                walk(state.apply(mv))

    walk(new_game(config, g))
    return states


def crit_engine_properties() -> str:
    """Rule-level invariants: a move always exists while the game is on, a
    legal coloring never self-monochromatizes, the two win conditions never
    coincide, and the ledger always matches a recount -- over the full game
    trees of every isolate-free graph n <= 5 under all eight rule
    combinations, plus 10^4 seeded random playouts at n <= 12.  Also:
    memoized and unmemoized solving agree on the whole n <= 5 corpus, and
    winners are invariant under palette swaps and vertex relabelings."""
    states = 0
    for n in range(2, 6):
        for g in enumerate_isolate_free_graphs(n):
            for cfg in _RULE_COMBOS:
                states += _walk_full_tree(cfg, g)

    rng = random.Random(1177)
    for _ in range(10_000):
        n = rng.randrange(2, 13)
        g = random_isolate_free(n, rng)
        cfg = _RULE_COMBOS[rng.randrange(len(_RULE_COMBOS))]
        state = new_game(cfg, g)
        plies = 0
        while state.status.ongoing:
            moves = state.legal_moves()
            state = state.apply(moves[rng.randrange(len(moves))])
            plies += 1
            _assert_state_sound(state)
            _check(plies <= 4 * g.n + 4, "playout failed to terminate in time")

    mismatches = 0
    for n in range(2, 6):
        for g in enumerate_isolate_free_graphs(n):
            for cfg in _RULE_COMBOS:
                if solve(cfg, g).winner != solve(cfg, g, use_memo=False).winner:
                    mismatches += 1
    _check(mismatches == 0, f"{mismatches} memoized/unmemoized winner mismatches")

    # palette-swap twins share a solve key and a winner in the disjoint game
    rng = random.Random(4242)
    fixtures = [gen_cycle(7), gen_path(6), disjoint_union(gen_cycle(4), gen_path(3))]
    for g in fixtures:
        for cfg in (_ddg(DOM), _ddg(SEPY)):
            base = new_game(cfg, g)
            for _ in range(100):
                state, twin = base, base
                while state.status.ongoing and rng.random() < 0.7:
                    mv = state.legal_moves()[rng.randrange(len(state.legal_moves()))]
                    if mv.is_pass:
                        break
                    state = state.apply(mv)
                    twin = twin.apply(Move(mv.vertex, 1 - mv.color))
                _check(encode_state(state) == encode_state(twin),
                       "palette twins encode differently")
                if state.status.ongoing:
                    _check(solve(cfg, g, state).winner == solve(cfg, g, twin).winner,
                           "palette twins solved differently")

    rng = random.Random(999)
    for g, cfg in ((gen_cycle(8), _ddg(DOM)), (gen_cycle(8), _ddg(SEPY)),
                   (gen_cycle(6), _bdg(SEPY))):
        base_winner = solve(cfg, g).winner
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            _check(solve(cfg, relabel(g, perm)).winner == base_winner,
                   "relabeling changed the winner")
    return f"{states} tree states checked; playouts, memo equivalence, symmetry spot checks all clean"


# -- 12 ---------------------------------------------------------------------------

def _brute_matching_size(g: Graph) -> int:
    best = 0

    def rec(v, used, count):
        nonlocal best
        if v == g.n:
            best = max(best, count)
            return
        if count + (g.n - v) // 2 <= best:
            return
        if used >> v & 1:
            rec(v + 1, used, count)
            return
        rec(v + 1, used, count)
        for u in g.adj[v]:
            if u > v and not used >> u & 1:
                rec(v + 1, used | 1 << v | 1 << u, count + 1)

    rec(0, 0, 0)
    return best


def crit_graph_oracles() -> str:
    """Graph-layer oracles: blossom matching equals brute force on every
    graph n <= 8, the Petersen graph matches 5 edges, graph6 round-trips the
    whole n <= 6 corpus, and connected-graph counts match the known values."""
    counts = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
    for n, expected in counts.items():
        got = len(enumerate_connected_graphs(n))
        _check(got == expected, f"{got} connected graphs on {n} vertices, expected {expected}")

    checked = 0
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            _check(len(maximum_matching(g).pairs) == _brute_matching_size(g),
                   f"matching size off on {emit_graph6(g)}")
            checked += 1

    _check(len(maximum_matching(gen_petersen()).pairs) == 5, "Petersen matching size")

    for n in range(1, 7):
        for g in enumerate_graphs(n):
            s = emit_graph6(g)
            _check(parse_graph6(s) == g, f"graph6 round trip failed for {s}")
            _check(emit_graph6(parse_graph6(s)) == s, f"graph6 re-emit differs for {s}")
    return f"matching vs brute force on {checked} graphs; counts and round trips exact"


@dataclass(frozen=True)
class Item:
    item_id: str
    title: str
    fn: Callable[[], str]


ITEMS: tuple[Item, ...] = (
    Item("cycles", "Dom-start cycles (n >= 8) are Sepy wins", crit_cycles),
    Item("ons-connected", "Sepy-start connected graphs are Dom wins via ons", crit_ons_connected),
    Item("onsp-pass", "...even when Sepy may pass, via onsp", crit_onsp_pass),
    Item("dom-pass-unions", "Dom's pass rights win disconnected Sepy-start games", crit_dom_pass_unions),
    Item("c4c8-passing", "pass rights flip the C4+C8 game", crit_c4c8_passing),
    Item("safe-start", "nested neighborhoods give Dom the first move", crit_safe_start),
    Item("subdivision", "triple subdivisions are Sepy wins when Dom starts", crit_subdivision),
    Item("biased-two-one", "two Dom selections per turn win everywhere", crit_biased_two_one),
    Item("bdg-perfect-matching", "bicolored game: matching play on perfect matchings", crit_bdg_perfect_matching),
    Item("bdg-general", "bicolored game: Dom wins on every graph", crit_bdg_general),
    Item("engine-properties", "engine invariants, memo equivalence, symmetries", crit_engine_properties),
    Item("graph-oracles", "matching/enumeration/graph6 against independent oracles", crit_graph_oracles),
)


def run_suite(only: str | None = None, out=print) -> bool:
    """Run (a filtered subset of) the battery; one line per item."""
    ok = True
    for item in ITEMS:
        if only and only not in item.item_id:
            continue
        try:
            detail = item.fn()
            out(f"[PASS] {item.item_id}: {detail}")
        except AssertionError as exc:
            ok = False
            out(f"[FAIL] {item.item_id}: {exc}")
    return ok
