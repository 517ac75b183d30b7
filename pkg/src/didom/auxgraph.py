"""Auxiliary undirected graphs and their structural checks.

Packings of a digraph are exactly the independent sets of its closed
in-neighborhood graph (and open packings those of the open variant), which
is what lets the exact independent-set kernel compute packing numbers.  The
chordality and clique-containment checks here power the ditree equalities.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from time import perf_counter
from typing import Optional

from didom import bitset
from didom.core import Digraph, UndirectedGraph, girth, underlying_graph
from didom.errors import CliqueLimitExceeded
from didom.records import (
    FAILS,
    HOLDS,
    HYPOTHESIS_NOT_MET,
    VerificationRecord,
    digraph_descriptor,
)

DEFAULT_CLIQUE_CAP = 1_000_000

CLAIM_CLOSED_HELLY = "lemma:closed-helly"
CLAIM_OPEN_HELLY = "lemma:open-helly"


def closed_in_neighborhood_graph(d: Digraph) -> UndirectedGraph:
    """Edge uv iff the closed in-neighborhoods of u and v intersect.

    Equivalently: every closed out-neighborhood N+[w] induces a clique.
    """
    adj = [0] * d.n
    for w in range(d.n):
        m = d.out_closed(w)
        for u in bitset.iter_bits(m):
            adj[u] |= m
    for v in range(d.n):
        adj[v] &= ~(1 << v)
    return UndirectedGraph(d.n, tuple(adj))


def open_in_neighborhood_graph(d: Digraph) -> UndirectedGraph:
    """Edge uv iff the open in-neighborhoods of u and v intersect."""
    adj = [0] * d.n
    for w in range(d.n):
        m = d.out_adj[w]
        for u in bitset.iter_bits(m):
            adj[u] |= m
    for v in range(d.n):
        adj[v] &= ~(1 << v)
    return UndirectedGraph(d.n, tuple(adj))


def closed_neighborhood_graph(g: UndirectedGraph) -> UndirectedGraph:
    """The square of g: edges between vertices at distance at most 2."""
    adj = [0] * g.n
    for w in range(g.n):
        m = g.closed_neighborhood(w)
        for u in bitset.iter_bits(m):
            adj[u] |= m
    for v in range(g.n):
        adj[v] &= ~(1 << v)
    return UndirectedGraph(g.n, tuple(adj))


def open_neighborhood_graph(g: UndirectedGraph) -> UndirectedGraph:
    """Edge uv iff u and v share a common neighbor in g."""
    adj = [0] * g.n
    for w in range(g.n):
        m = g.adj[w]
        for u in bitset.iter_bits(m):
            adj[u] |= m
    for v in range(g.n):
        adj[v] &= ~(1 << v)
    return UndirectedGraph(g.n, tuple(adj))


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    elimination_order: Optional[tuple[int, ...]]  # perfect elimination order
    hole: Optional[tuple[int, ...]]  # induced chordless cycle, length >= 4

    def __bool__(self) -> bool:
        return self.chordal


def _lex_bfs(g: UndirectedGraph) -> list[int]:
    # O(n^2) label-list variant; ties broken toward the lowest index.
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited[v] and (best == -1 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in bitset.iter_bits(g.adj[best]):
            if not visited[w]:
                labels[w].append(g.n - step)
    return order


def _peo_violation(
    g: UndirectedGraph, elimination: list[int]
) -> Optional[tuple[int, int, int]]:
    # Tarjan-Yannakakis test; returns (v, u, w) with u, w non-adjacent
    # later-neighbors of v on failure.
    pos = [0] * g.n
    for i, v in enumerate(elimination):
        pos[v] = i
    eliminated = 0
    for v in elimination:
        eliminated |= 1 << v
        later = g.adj[v] & ~eliminated
        if not later:
            continue
        w = min(bitset.iter_bits(later), key=lambda u: pos[u])
        rest = later & ~(1 << w) & ~g.adj[w]
        if rest:
            u = (rest & -rest).bit_length() - 1
            return v, u, w
    return None


def _find_hole(g: UndirectedGraph) -> Optional[tuple[int, ...]]:
    # Shortest u-w path avoiding N[v] - {u, w} closes a chordless cycle
    # through v whenever u, w are non-adjacent neighbors of v.
    for v in range(g.n):
        nbrs = bitset.to_list(g.adj[v])
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                u, w = nbrs[ai], nbrs[bi]
                if g.has_edge(u, w):
                    continue
                allowed = ~(g.closed_neighborhood(v)) | (1 << u) | (1 << w)
                prev = {u: -1}
                queue = deque([u])
                while queue:
                    x = queue.popleft()
                    if x == w:
                        break
                    for y in bitset.iter_bits(g.adj[x] & allowed):
                        if y not in prev:
                            prev[y] = x
                            queue.append(y)
                if w in prev:
                    path = [w]
                    while path[-1] != u:
                        path.append(prev[path[-1]])
                    return tuple([v] + path[::-1])
    return None


def is_chordal(g: UndirectedGraph) -> ChordalityResult:
    """Certifying chordality test.

    Chordal graphs come with a perfect elimination order; non-chordal ones
    with an induced chordless cycle of length at least 4.
    """
    elimination = _lex_bfs(g)[::-1]
    if _peo_violation(g, elimination) is None:
        return ChordalityResult(True, tuple(elimination), None)
    hole = _find_hole(g)
    if hole is None:
        raise AssertionError("elimination check failed but no hole found")
    return ChordalityResult(False, None, hole)


def maximal_cliques(g: UndirectedGraph, cap: int = DEFAULT_CLIQUE_CAP) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting).

    The result is complete, duplicate-free, and sorted by member lists; the
    cap turns pathological inputs into CliqueLimitExceeded.
    """
    if g.n == 0:
        return []
    out: list[int] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            if len(out) > cap:
                raise CliqueLimitExceeded(f"more than {cap} maximal cliques")
            return
        pivot = -1
        best = -1
        for u in bitset.iter_bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                best = c
                pivot = u
        for v in bitset.iter_bits(p & ~adj[pivot]):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, bitset.full(g.n), 0)
    return sorted(out, key=bitset.to_list)


def _helly_record(
    d: Digraph,
    aux: UndirectedGraph,
    closed: bool,
    hypotheses_met: bool,
    claim: str,
    clique_cap: int,
) -> VerificationRecord:
    start = perf_counter()
    cliques = maximal_cliques(aux, cap=clique_cap)
    contained = 0
    failing = None
    for k in cliques:
        ok = False
        for w in range(d.n):
            target = d.out_closed(w) if closed else d.out_adj[w]
            if k & ~target == 0:
                ok = True
                break
        if ok:
            contained += 1
        elif failing is None:
            failing = k
    conclusion = failing is None
    if not hypotheses_met:
        verdict = HYPOTHESIS_NOT_MET
    else:
        verdict = HOLDS if conclusion else FAILS
    witnesses = {}
    if failing is not None:
        witnesses["uncontained_clique"] = bitset.to_list(failing)
    return VerificationRecord(
        claim=claim,
        instance=digraph_descriptor(d),
        hypotheses_met=hypotheses_met,
        lhs=contained,
        rhs=len(cliques),
        verdict=verdict,
        witnesses=witnesses,
        elapsed_ms=(perf_counter() - start) * 1000.0,
        extras={"conclusion_holds": conclusion},
    )


def check_closed_helly_lemma(
    d: Digraph, clique_cap: int = DEFAULT_CLIQUE_CAP
) -> VerificationRecord:
    """Every maximal clique of the closed in-neighborhood graph sits inside
    some closed out-neighborhood (hypothesis: underlying girth >= 7)."""
    g = girth(underlying_graph(d))
    hyp = g is None or g >= 7
    aux = closed_in_neighborhood_graph(d)
    return _helly_record(d, aux, True, hyp, CLAIM_CLOSED_HELLY, clique_cap)


def check_open_helly_lemma(
    d: Digraph, clique_cap: int = DEFAULT_CLIQUE_CAP
) -> VerificationRecord:
    """Open variant: maximal cliques of the open in-neighborhood graph sit
    inside open out-neighborhoods (hypotheses: girth >= 7 and min in-degree
    >= 1, the setting in which total domination is defined)."""
    g = girth(underlying_graph(d))
    hyp = (g is None or g >= 7) and d.min_in_degree >= 1
    aux = open_in_neighborhood_graph(d)
    return _helly_record(d, aux, False, hyp, CLAIM_OPEN_HELLY, clique_cap)
