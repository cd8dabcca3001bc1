"""Maximum matching on general graphs (blossom contraction) and the
star/triangle classification of matching edges used by the bicolored game."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph


class MatchingError(ValueError):
    """The supplied matching is inconsistent or not maximum."""


@dataclass(frozen=True)
class EdgeKind:
    kind: str  # "bare" | "star" | "triangle"
    center: int | None = None  # star edges only


@dataclass(frozen=True)
class MatchingStructure:
    """A matching with its external vertices and optional edge classification.

    pairs are vertex-disjoint edges (u < v, sorted by u); external is every
    unmatched vertex; kinds[i] classifies pairs[i] once classify_matching has
    run (None straight out of maximum_matching).
    """

    pairs: tuple[tuple[int, int], ...]
    external: frozenset[int]
    kinds: tuple[EdgeKind, ...] | None = None

    def partner_table(self, n: int) -> list[int]:
        partner = [-1] * n
        for u, v in self.pairs:
            partner[u] = v
            partner[v] = u
        return partner


def _find_augmenting(adj, match, parent, base, root, n):
    """One phase of the blossom algorithm: search for an augmenting path from
    root, contracting odd cycles as they appear.  Returns the free endpoint
    of the path, or -1."""
    used = [False] * n
    for i in range(n):
        parent[i] = -1
        base[i] = i
    used[root] = True
    queue = deque([root])

    def lowest_common_base(a, b):
        flagged = [False] * n
        while True:
            a = base[a]
            flagged[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if flagged[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, in_blossom):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lowest_common_base(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to
                used[match[to]] = True
                queue.append(match[to])
    return -1


def maximum_matching(g: Graph) -> MatchingStructure:
    """A maximum-cardinality matching (not merely maximal); deterministic
    under the fixed ascending vertex scan."""
    n = g.n
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    for v in range(n):
        if match[v] != -1:
            continue
        end = _find_augmenting(g.adj, match, parent, base, v, n)
        while end != -1:
            prev = parent[end]
            nxt = match[prev]
            match[end] = prev
            match[prev] = end
            end = nxt
    pairs = tuple(sorted((u, match[u]) for u in range(n) if match[u] > u))
    matched = {u for p in pairs for u in p}
    external = frozenset(v for v in range(n) if v not in matched)
    return MatchingStructure(pairs=pairs, external=external)


def classify_matching(g: Graph, pairs) -> MatchingStructure:
    """Classify every matching edge as bare, star(center) or triangle.

    The structural facts this relies on (externals independent, a unique
    center when externals attach through one endpoint) hold exactly when the
    matching is maximum, so a violation raises MatchingError.
    """
    pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
    matched: set[int] = set()
    for u, v in pairs:
        if not g.has_edge(u, v):
            raise MatchingError(f"pair ({u},{v}) is not an edge of the graph")
        if u in matched or v in matched:
            raise MatchingError(f"pair ({u},{v}) overlaps another matching edge")
        matched.update((u, v))
    external = frozenset(v for v in range(g.n) if v not in matched)
    ext_mask = _mask(external)
    for x in sorted(external):
        hit = g.nbr_mask[x] & ext_mask
        if hit:
            other = (hit & -hit).bit_length() - 1
            raise MatchingError(
                f"external vertices {x} and {other} are adjacent; "
                "matching is not maximum"
            )
    kinds = []
    for u, v in pairs:
        ext_u = [x for x in g.adj[u] if x in external]
        ext_v = [x for x in g.adj[v] if x in external]
        both = sorted(set(ext_u) & set(ext_v))
        if not ext_u and not ext_v:
            kinds.append(EdgeKind("bare"))
        elif both:
            if len(set(ext_u) | set(ext_v)) > 1:
                raise MatchingError(
                    f"edge ({u},{v}) has an external vertex on both endpoints and "
                    "further external neighbors; matching is not maximum"
                )
            kinds.append(EdgeKind("triangle"))
        else:
            if ext_u and ext_v:
                raise MatchingError(
                    f"edge ({u},{v}) has distinct external neighbors at both "
                    "endpoints; matching is not maximum"
                )
            kinds.append(EdgeKind("star", center=u if ext_u else v))
    return MatchingStructure(pairs=pairs, external=external, kinds=tuple(kinds))


def matching_plan(g: Graph) -> MatchingStructure:
    """Maximum matching plus classification in one step."""
    return classify_matching(g, maximum_matching(g).pairs)


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
