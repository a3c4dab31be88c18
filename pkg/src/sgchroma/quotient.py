"""Balanced quotient: collapse maximal connected balanced sets until every
adjacent pair of vertices is joined by a digon.

Every step switches the chosen set all-positive and identifies it to one
vertex with a positive loop, which is at once a minor operation (contract
positive edges) and a homomorphism.  The merged vertex takes the position of
the smallest vertex of the set; the other vertices keep their relative order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import BoundExceeded, SignedGraph, balance_mask

QUOTIENT_BOUND = 16


@dataclass(frozen=True)
class QuotientResult:
    quotient: SignedGraph
    fiber_map: tuple[int, ...]
    contraction_trace: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # (set, switching)
    loop_flags: tuple[bool, ...]
    switching: tuple[int, ...]  # accumulated switching of the input vertices


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def maximal_connected_balanced_sets(g: SignedGraph) -> list[tuple[int, ...]]:
    """Inclusion-maximal vertex sets inducing a connected balanced subgraph."""
    adj = g.adjacency
    und = [adj.pos[v] | adj.neg[v] for v in range(g.n)]
    seen = set()
    maximal = []
    stack = [1 << v for v in range(g.n) if not adj.neg_loops >> v & 1]
    seen.update(stack)
    while stack:
        X = stack.pop()
        border = 0
        for v in _verts(X):
            border |= und[v]
        border &= ~X
        grew = False
        for v in _verts(border):
            Y = X | 1 << v
            if balance_mask(adj, Y) < 0:
                continue
            grew = True
            if Y not in seen:
                seen.add(Y)
                stack.append(Y)
        if not grew:
            maximal.append(_verts(X))
    return sorted(maximal)


def _dedupe(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple(dict.fromkeys(g.edges)))


def _collapse(g: SignedGraph, members: tuple[int, ...], s: tuple[int, ...]):
    """Switch by ``s`` and identify ``members``; returns (graph, old->new vertex map)."""
    mset = set(members)
    keep = [v for v in range(g.n) if v not in mset or v == members[0]]
    new_index = {v: i for i, v in enumerate(keep)}
    rep = new_index[members[0]]
    mapping = [new_index.get(v, rep) for v in range(g.n)]
    edges = [(rep, rep, 1)]
    for u, v, sig in g.edges:
        if u != v and u in mset and v in mset:
            continue
        edges.append((mapping[u], mapping[v], sig * s[u] * s[v]))
    return _dedupe(SignedGraph(len(keep), tuple(edges))), mapping


def balanced_quotient(g: SignedGraph, rng: random.Random | None = None) -> QuotientResult:
    """Collapse the lexicographically smallest maximal connected balanced set
    of size >= 2 until none is left; ``rng`` picks uniformly among them instead."""
    if g.has_negative_loop:
        raise ValueError("balanced quotient needs a graph with no negative loop")
    if g.n > QUOTIENT_BOUND:
        raise BoundExceeded(f"balanced quotient limited to n <= {QUOTIENT_BOUND}")
    cur = _dedupe(g)
    fiber = list(range(g.n))
    total = [1] * g.n
    trace = []
    while True:
        cands = [X for X in maximal_connected_balanced_sets(cur) if len(X) >= 2]
        if not cands:
            break
        X = cands[0] if rng is None else rng.choice(cands)
        minus = balance_mask(cur.adjacency, sum(1 << v for v in X))
        s = tuple(-1 if minus >> v & 1 else 1 for v in range(cur.n))
        trace.append((X, s))
        for v in range(g.n):
            total[v] *= s[fiber[v]]
        cur, mapping = _collapse(cur, X, s)
        fiber = [mapping[f] for f in fiber]
    loops = tuple(bool(cur.adjacency.pos_loops >> x & 1) for x in range(cur.n))
    return QuotientResult(cur, tuple(fiber), tuple(trace), loops, tuple(total))


# -- independent replay ------------------------------------------------------------


def _is_connected(vertices, edges) -> bool:
    vertices = set(vertices)
    if not vertices:
        return False
    start = min(vertices)
    reach = {start}
    changed = True
    while changed:
        changed = False
        for u, v, _ in edges:
            if u in vertices and v in vertices and (u in reach) != (v in reach):
                reach |= {u, v}
                changed = True
    return reach == vertices


def _simple_cycles(g: SignedGraph, max_len: int):
    """Edge-index lists of the cycles of length 2..max_len through their smallest vertex."""
    inc: dict[int, list[tuple[int, int]]] = {}
    for i, (u, v, _) in enumerate(g.edges):
        if u != v:
            inc.setdefault(u, []).append((v, i))
            inc.setdefault(v, []).append((u, i))
    for start in range(g.n):
        stack = [(start, (start,), ())]
        while stack:
            u, path, eids = stack.pop()
            for w, i in inc.get(u, ()):
                if i in eids:
                    continue
                if w == start:
                    yield eids + (i,)
                elif w > start and w not in path and len(eids) + 1 < max_len:
                    stack.append((w, path + (w,), eids + (i,)))


def verify_quotient(g: SignedGraph, q: QuotientResult) -> str | None:
    """Replay the trace from scratch; ``None`` when everything checks out."""
    edges = list(dict.fromkeys(g.edges))
    n = g.n
    fiber = list(range(g.n))
    total = [1] * g.n
    for X, s in q.contraction_trace:
        if len(s) != n or not X or any(not 0 <= v < n for v in X):
            return "trace shape"
        Xs = set(X)
        if len(X) < 2:
            return "trace set too small"
        inside = [(u, v, sig) for u, v, sig in edges if u in Xs and v in Xs and u != v]
        if not _is_connected(Xs, inside):
            return "trace set not connected"
        if any(sig * s[u] * s[v] < 0 for u, v, sig in inside):
            return "trace set not balanced under its switching"
        if any(u == v and u in Xs and sig < 0 for u, v, sig in edges):
            return "negative loop inside trace set"
        rep = min(X)
        keep = [v for v in range(n) if v not in Xs or v == rep]
        idx = {v: i for i, v in enumerate(keep)}
        mapping = [idx[v] if v in idx else idx[rep] for v in range(n)]
        new_edges = []
        for u, v, sig in edges:
            if u in Xs and v in Xs and u != v:
                continue
            new_edges.append((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]), sig * s[u] * s[v]))
        new_edges.append((idx[rep], idx[rep], 1))
        edges = list(dict.fromkeys(new_edges))
        for v in range(g.n):
            total[v] *= s[fiber[v]]
        fiber = [mapping[f] for f in fiber]
        n = len(keep)
    if n != q.quotient.n or sorted(edges) != sorted(set(q.quotient.edges)):
        return "replayed quotient differs"
    if tuple(fiber) != q.fiber_map:
        return "fiber map differs"
    signs: dict[tuple[int, int], set[int]] = {}
    for u, v, sig in q.quotient.edges:
        signs.setdefault((u, v), set()).add(sig)
        if u == v and sig < 0:
            return "negative loop in quotient"
    for (u, v), ss in signs.items():
        if u != v and ss != {1, -1}:
            return "adjacent pair without a digon"
    for flag, x in zip(q.loop_flags, range(q.quotient.n)):
        if flag != (1 in signs.get((x, x), set())):
            return "loop flags"
    # homomorphism: every edge lands on an edge of the switched sign
    for u, v, sig in g.edges:
        a, b = sorted((fiber[u], fiber[v]))
        if sig * total[u] * total[v] not in signs.get((a, b), set()):
            return "edge has no image"
    for cyc in _simple_cycles(g, 6):
        orig = image = 1
        for i in cyc:
            u, v, sig = g.edges[i]
            orig *= sig
            a, b = sorted((fiber[u], fiber[v]))
            mapped = sig * total[u] * total[v]
            if mapped not in signs.get((a, b), set()):
                return "cycle edge has no image"
            image *= mapped
        if orig != image:
            return "closed walk sign changed"
    return None
