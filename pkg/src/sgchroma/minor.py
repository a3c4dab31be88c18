"""Exhaustive detectors for K~_t-minors, odd minors, even-odd minors,
K~_t-subdivisions and the negative H-path dichotomy, each returning a
certificate that :func:`verify_certificate` re-checks from scratch.

A branch set is usable when it is connected through edges that are positive
after switching it; its remaining internal edges are deleted before the
positive ones are contracted.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import BoundExceeded, Graph, SignedGraph, balance_mask, connected_mask, simplify

MINOR_BOUND = 9
DICHOTOMY_BOUND = 10
DICHOTOMY_K_BOUND = 3
SUBDIVISION_T_BOUND = 4
ODD_FLIP_T_BOUND = 5


class CriticalDefect(RuntimeError):
    """A theorem-backed search came back empty on both branches."""


@dataclass(frozen=True)
class MinorCertificate:
    pattern: str  # "ktilde" or "odd"
    t: int
    branch_sets: tuple[tuple[int, ...], ...]
    internal_switchings: tuple[tuple[int, ...], ...]  # aligned with branch_sets, first entry +1
    flips: tuple[int, ...]
    cross_edges: tuple[tuple[int, int, tuple[tuple[int, int, int], ...]], ...]

    def switching_of(self, i: int) -> dict[int, int]:
        return {v: s * self.flips[i] for v, s in zip(self.branch_sets[i], self.internal_switchings[i])}


@dataclass(frozen=True)
class EvenOddCertificate:
    t: int
    coloring: tuple[int, ...]
    trees: tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]  # (vertices, edges)


@dataclass(frozen=True)
class SubdivisionCertificate:
    t: int
    branch_vertices: tuple[int, ...]
    # (i, j, positive path, negative path); a path is (vertices, step signs)
    paths: tuple[tuple[int, int, tuple, tuple], ...]


@dataclass(frozen=True)
class DichotomyResult:
    k: int
    paths: tuple[tuple[int, ...], ...] | None = None
    path_signs: tuple[tuple[int, ...], ...] | None = None
    hitting_set: tuple[int, ...] | None = None

    @property
    def found_paths(self) -> bool:
        return self.paths is not None


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


# -- branch-set options ------------------------------------------------------


@dataclass
class _Option:
    mask: int
    minus: int  # vertices switched inside the set
    plus_reach: int  # outside vertices hit by a cross edge of relative sign +
    minus_reach: int
    key: tuple = field(default=())


def _grow_options(g: SignedGraph) -> dict[int, dict[int, tuple[int, int]]]:
    """All (set, minus-side) pairs whose positive edges connect the set.

    Grown one vertex at a time: a connected set always has a vertex whose
    removal leaves it connected, so every pair arises from a smaller one.
    Values are the (plus_reach, minus_reach) masks outside the set.
    """
    adj = g.adjacency
    pos, neg = adj.pos, adj.neg
    level: dict[tuple[int, int], tuple[int, int]] = {}
    for v in range(g.n):
        if not adj.neg_loops >> v & 1:
            level[(1 << v, 0)] = (pos[v], neg[v])
    out: dict[int, dict[int, tuple[int, int]]] = {}
    while level:
        nxt: dict[tuple[int, int], tuple[int, int]] = {}
        for (X, M), (pr, mr) in level.items():
            out.setdefault(X, {})[M] = (pr, mr)
            cand = (pr | mr) & ~adj.neg_loops
            while cand:
                b = cand & -cand
                cand ^= b
                v = b.bit_length() - 1
                Y = X | b
                for plus_side in (True, False):
                    if not (pr if plus_side else mr) & b:
                        continue
                    if plus_side:
                        N, p2, m2 = M, pr | pos[v], mr | neg[v]
                    else:
                        N, p2, m2 = M | b, pr | neg[v], mr | pos[v]
                    if N & Y & -Y:
                        # keep the lowest vertex on the plus side
                        N, p2, m2 = N ^ Y, m2, p2
                    if (Y, N) not in nxt:
                        nxt[(Y, N)] = (p2 & ~Y, m2 & ~Y)
        level = nxt
    return out


@functools.lru_cache(maxsize=32)
def _options(g: SignedGraph, with_flips: bool, strict: bool) -> list[_Option]:
    adj = g.adjacency
    opts = []
    for X, by_minus in _grow_options(g).items():
        if strict:
            m = balance_mask(adj, X)
            if m < 0:
                continue
            items = [(m, by_minus[m])]
        else:
            items = by_minus.items()
        vs = _verts(X)
        for m, (p, q) in items:
            opts.append(_Option(X, m, p, q, (vs, _verts(m))))
            if with_flips:
                opts.append(_Option(X, m ^ X, q, p, (vs, _verts(m ^ X))))
    opts.sort(key=lambda o: o.key)
    return opts


def _cross_signs(a: _Option, b: _Option) -> tuple[bool, bool]:
    Y, N = b.mask, b.minus
    has_pos = bool((a.plus_reach & Y & ~N) | (a.minus_reach & N))
    has_neg = bool((a.minus_reach & Y & ~N) | (a.plus_reach & N))
    return has_pos, has_neg


def _pack(opts: list[_Option], t: int, compatible) -> list[_Option] | None:
    """First t pairwise compatible, disjoint options in index order."""

    def rec(chosen: list[_Option], cands: list[_Option]) -> list[_Option] | None:
        if len(chosen) == t:
            return chosen
        need = t - len(chosen)
        for idx, o in enumerate(cands):
            if len(cands) - idx < need:
                return None
            nxt = [c for c in cands[idx + 1:] if not (c.mask & o.mask) and compatible(o, c)]
            res = rec(chosen + [o], nxt)
            if res is not None:
                return res
        return None

    return rec([], opts)


def _certificate(g: SignedGraph, pattern: str, t: int, chosen: list[_Option]) -> MinorCertificate:
    sets, internal, flips = [], [], []
    side = {}
    for o in chosen:
        vs = _verts(o.mask)
        s = [-1 if o.minus >> v & 1 else 1 for v in vs]
        flip = s[0]
        sets.append(vs)
        internal.append(tuple(x * flip for x in s))
        flips.append(flip)
        for v, x in zip(vs, s):
            side[v] = (len(sets) - 1, x)
    cross: dict[tuple[int, int], list] = {}
    for u, v, sig in g.edges:
        if u in side and v in side and side[u][0] != side[v][0]:
            i, j = sorted((side[u][0], side[v][0]))
            cross.setdefault((i, j), []).append((u, v, sig * side[u][1] * side[v][1]))
    return MinorCertificate(
        pattern,
        t,
        tuple(sets),
        tuple(internal),
        tuple(flips),
        tuple((i, j, tuple(es)) for (i, j), es in sorted(cross.items())),
    )


def _check_bound(g: SignedGraph, t: int, bound: int = MINOR_BOUND):
    if g.n > bound:
        raise BoundExceeded(f"exhaustive search limited to n <= {bound}")
    if t < 1:
        raise ValueError("pattern order must be positive")


def has_ktilde_minor(g: SignedGraph, t: int, strict: bool = False) -> MinorCertificate | None:
    """``strict`` only allows branch sets whose induced subgraph is balanced."""
    _check_bound(g, t)
    g = simplify(g)
    if t > g.n:
        return None
    opts = _options(g, with_flips=False, strict=strict)

    def both(a, b):
        p, q = _cross_signs(a, b)
        return p and q

    chosen = _pack(opts, t, both)
    return None if chosen is None else _certificate(g, "ktilde", t, chosen)


def has_odd_minor(g: SignedGraph, t: int, strict: bool = False) -> MinorCertificate | None:
    """(K_t,-)-minor: every pair of branch sets joined by a negative edge under some flips."""
    _check_bound(g, t)
    if t > ODD_FLIP_T_BOUND:
        raise BoundExceeded(f"flip search limited to t <= {ODD_FLIP_T_BOUND}")
    g = simplify(g)
    if t > g.n:
        return None
    opts = _options(g, with_flips=True, strict=strict)
    chosen = _pack(opts, t, lambda a, b: _cross_signs(a, b)[1])
    return None if chosen is None else _certificate(g, "odd", t, chosen)


# -- even-odd minors ----------------------------------------------------------


def _spanning_tree(adj_masks: Sequence[int], X: int) -> tuple[tuple[int, int], ...]:
    root = (X & -X).bit_length() - 1
    seen = 1 << root
    edges = []
    queue = [root]
    for u in queue:
        new = adj_masks[u] & X & ~seen
        for w in _verts(new):
            edges.append((min(u, w), max(u, w)))
            queue.append(w)
        seen |= new
    return tuple(edges)


def has_even_odd_minor(G: Graph, t: int) -> EvenOddCertificate | None:
    """2-colouring plus t disjoint properly coloured trees, each pair joined by a
    monochromatic and a properly coloured edge."""
    if G.n > MINOR_BOUND:
        raise BoundExceeded(f"exhaustive search limited to n <= {MINOR_BOUND}")
    if t < 1:
        raise ValueError("pattern order must be positive")
    n = G.n
    if t > n:
        return None
    adj = G.adj
    # colourings up to swapping the two colours: vertex 0 has colour 0
    for red in range(0, 1 << n, 2 if n else 1):
        proper = [adj[v] & (~red if red >> v & 1 else red) for v in range(n)]
        mono = [adj[v] & ~proper[v] for v in range(n)]
        opts = []
        for X in range(1, 1 << n):
            if connected_mask(proper, X):
                pr = mo = 0
                for v in _verts(X):
                    pr |= proper[v]
                    mo |= mono[v]
                opts.append((_verts(X), X, pr & ~X, mo & ~X))
        opts.sort()

        def ok(a, b):
            return bool(a[2] & b[1]) and bool(a[3] & b[1])

        def rec(chosen, cands):
            if len(chosen) == t:
                return chosen
            for idx, o in enumerate(cands):
                if len(cands) - idx < t - len(chosen):
                    return None
                nxt = [c for c in cands[idx + 1:] if not (c[1] & o[1]) and ok(o, c)]
                res = rec(chosen + [o], nxt)
                if res is not None:
                    return res
            return None

        chosen = rec([], opts)
        if chosen is not None:
            coloring = tuple(red >> v & 1 for v in range(n))
            trees = tuple((o[0], _spanning_tree(proper, o[1])) for o in chosen)
            return EvenOddCertificate(t, coloring, trees)
    return None


# -- subdivisions --------------------------------------------------------------


def _paths_by_support(g: SignedGraph, a: int, b: int, allowed: int) -> dict[tuple[int, int], tuple]:
    """One a-b path per (internal vertex mask, sign), internals drawn from ``allowed``."""
    adj = g.adjacency
    out: dict[tuple[int, int], tuple] = {}

    def dfs(u: int, used: int, sign: int, verts: list[int], signs: list[int]):
        for s, nb in ((1, adj.pos[u]), (-1, adj.neg[u])):
            if nb >> b & 1:
                key = (used, sign * s)
                if key not in out:
                    out[key] = (tuple(verts + [b]), tuple(signs + [s]))
            nxt = nb & allowed & ~used
            for w in _verts(nxt):
                dfs(w, used | 1 << w, sign * s, verts + [w], signs + [s])

    dfs(a, 0, 1, [a], [])
    return out


def has_ktilde_subdivision(g: SignedGraph, t: int) -> SubdivisionCertificate | None:
    """Branch vertices joined pairwise by two internally disjoint paths of opposite signs."""
    _check_bound(g, t)
    if t > SUBDIVISION_T_BOUND:
        raise BoundExceeded(f"subdivision search limited to t <= {SUBDIVISION_T_BOUND}")
    g = simplify(g)
    n = g.n
    if t > n:
        return None
    adj = g.adjacency
    full = (1 << n) - 1
    # each branch vertex spends two edge ends per other branch vertex
    deg = [adj.pos[v].bit_count() + adj.neg[v].bit_count() for v in range(n)]
    for B in itertools.combinations(range(n), t):
        if any(deg[v] < 2 * (t - 1) for v in B):
            continue
        bmask = sum(1 << v for v in B)
        pairs = list(itertools.combinations(range(t), 2))
        cache = {}

        def paths(i, j):
            if (i, j) not in cache:
                cache[(i, j)] = sorted(_paths_by_support(g, B[i], B[j], full & ~bmask).items())
            return cache[(i, j)]

        def rec(k: int, used: int, acc: list):
            if k == len(pairs):
                return acc
            i, j = pairs[k]
            pos = [(m, p) for (m, s), p in paths(i, j) if s > 0 and not m & used]
            neg = [(m, p) for (m, s), p in paths(i, j) if s < 0 and not m & used]
            for mp, pp in pos:
                for mn, pn in neg:
                    if mp & mn:
                        continue
                    res = rec(k + 1, used | mp | mn, acc + [(i, j, pp, pn)])
                    if res is not None:
                        return res
            return None

        found = rec(0, 0, [])
        if found is not None:
            return SubdivisionCertificate(t, B, tuple(found))
    return None


def subdivision_to_minor(g: SignedGraph, cert: SubdivisionCertificate) -> MinorCertificate:
    """K~_t-minor model read off a subdivision.

    Branch set i is u_i plus the interiors of its paths to later branch
    vertices, switched so those paths are positive from u_i outwards.  The
    last edges of the two u_i-u_j paths then reach u_j with opposite signs.
    """
    side: dict[int, tuple[int, int]] = {b: (i, 1) for i, b in enumerate(cert.branch_vertices)}
    for i, j, pp, pn in cert.paths:
        for verts, signs in (pp, pn):
            cur = 1
            for step in range(len(verts) - 2):
                cur *= signs[step]
                side[verts[step + 1]] = (i, cur)
    sets = [[] for _ in range(cert.t)]
    for v in sorted(side):
        sets[side[v][0]].append(v)
    cross: dict[tuple[int, int], list] = {}
    for u, v, sig in g.edges:
        if u in side and v in side and side[u][0] != side[v][0]:
            i, j = sorted((side[u][0], side[v][0]))
            cross.setdefault((i, j), []).append((u, v, sig * side[u][1] * side[v][1]))
    internal, flips = [], []
    for vs in sets:
        f = side[vs[0]][1]
        flips.append(f)
        internal.append(tuple(side[v][1] * f for v in vs))
    return MinorCertificate(
        "ktilde",
        cert.t,
        tuple(tuple(vs) for vs in sets),
        tuple(internal),
        tuple(flips),
        tuple((i, j, tuple(es)) for (i, j), es in sorted(cross.items())),
    )


# -- negative H-path dichotomy ----------------------------------------------------


def _h_positive_connected(g: SignedGraph, H: int) -> bool:
    adj = g.adjacency
    return connected_mask(adj.pos, H)


def negative_path_supports(g: SignedGraph, H: int) -> list[int]:
    """Vertex sets (bitmasks) of negative H-paths, inclusion-minimal ones only."""
    adj = g.adjacency
    outside = ((1 << g.n) - 1) & ~H
    supports = set()
    for a in _verts(H):
        # states: (internal mask, last vertex) -> signs reachable
        seen: dict[tuple[int, int], int] = {}
        stack = [(0, a, 1)]
        while stack:
            used, u, sign = stack.pop()
            for s, nb in ((1, adj.pos[u]), (-1, adj.neg[u])):
                sg = sign * s
                if sg < 0:
                    for b in _verts(nb & H & ~(1 << a)):
                        supports.add(used | 1 << a | 1 << b)
                for w in _verts(nb & outside & ~used):
                    key = (used | 1 << w, w)
                    bit = 1 if sg > 0 else 2
                    if seen.get(key, 0) & bit:
                        continue
                    seen[key] = seen.get(key, 0) | bit
                    stack.append((used | 1 << w, w, sg))
    minimal = [m for m in supports if not any(o != m and o & m == o for o in supports)]
    return sorted(minimal)


def negative_path_dichotomy(g: SignedGraph, H: Sequence[int], k: int) -> DichotomyResult:
    """k disjoint negative H-paths, or at most 2k-2 vertices meeting all of them.

    ``H`` is the vertex set of the subgraph formed by the positive edges among
    those vertices; it must be connected.  Other edges with both ends in ``H``
    are H-paths of length one.
    """
    if g.n > DICHOTOMY_BOUND:
        raise BoundExceeded(f"dichotomy limited to n <= {DICHOTOMY_BOUND}")
    if not 1 <= k <= DICHOTOMY_K_BOUND:
        raise BoundExceeded(f"dichotomy limited to 1 <= k <= {DICHOTOMY_K_BOUND}")
    g = simplify(g)
    Hm = 0
    for v in H:
        if not 0 <= v < g.n:
            raise ValueError(f"H vertex {v} out of range")
        Hm |= 1 << v
    if not Hm or not _h_positive_connected(g, Hm):
        raise ValueError("H must be non-empty and connected through positive edges")
    supports = negative_path_supports(g, Hm)

    def pack(start: int, chosen: list[int], used: int):
        if len(chosen) == k:
            return chosen
        for idx in range(start, len(supports)):
            m = supports[idx]
            if not m & used:
                res = pack(idx + 1, chosen + [m], used | m)
                if res is not None:
                    return res
        return None

    packed = pack(0, [], 0)
    if packed is not None:
        paths, signs = [], []
        for m in packed:
            p, s = _witness_path(g, Hm, m)
            paths.append(p)
            signs.append(s)
        return DichotomyResult(k, paths=tuple(paths), path_signs=tuple(signs))
    for size in range(0, 2 * k - 1):
        for X in itertools.combinations(range(g.n), size):
            xm = sum(1 << v for v in X)
            if all(m & xm for m in supports):
                return DichotomyResult(k, hitting_set=X)
    raise CriticalDefect(
        f"neither {k} disjoint negative H-paths nor a hitting set of size <= {2 * k - 2}"
    )


def _witness_path(g: SignedGraph, H: int, support: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A negative H-path whose vertex set is exactly ``support``."""
    adj = g.adjacency
    ends = _verts(support & H)
    a, b = ends[0], ends[1]
    inner = support & ~H

    def dfs(u, used, sign, verts, signs):
        for s, nb in ((1, adj.pos[u]), (-1, adj.neg[u])):
            if used == inner and nb >> b & 1 and sign * s < 0:
                return verts + [b], signs + [s]
            for w in _verts(nb & inner & ~used):
                res = dfs(w, used | 1 << w, sign * s, verts + [w], signs + [s])
                if res:
                    return res
        return None

    verts, signs = dfs(a, 0, 1, [a], [])
    return tuple(verts), tuple(signs)


# -- independent certificate checks -------------------------------------------------


def _edge_signs(g: SignedGraph) -> dict[tuple[int, int], set[int]]:
    signs: dict[tuple[int, int], set[int]] = {}
    for u, v, s in g.edges:
        signs.setdefault((min(u, v), max(u, v)), set()).add(s)
    return signs


def verify_certificate(g: SignedGraph, cert) -> str | None:
    """``None`` when ``cert`` is valid for ``g``, otherwise the violated property."""
    if isinstance(cert, MinorCertificate):
        return _verify_minor(g, cert)
    if isinstance(cert, SubdivisionCertificate):
        return _verify_subdivision(g, cert)
    if isinstance(cert, DichotomyResult):
        raise TypeError("use verify_dichotomy(g, H, result)")
    raise TypeError(f"unknown certificate type {type(cert).__name__}")


def _verify_minor(g: SignedGraph, cert: MinorCertificate) -> str | None:
    if len(cert.branch_sets) != cert.t:
        return "branch set count"
    owner = {}
    sw = {}
    for i, bs in enumerate(cert.branch_sets):
        if not bs or len(cert.internal_switchings[i]) != len(bs):
            return "shape"
        for v, s in zip(bs, cert.internal_switchings[i]):
            if not 0 <= v < g.n:
                return "vertex range"
            if v in owner:
                return "disjointness"
            owner[v] = i
            sw[v] = s * cert.flips[i]
    for u, v, s in g.edges:
        if u == v and s < 0 and u in owner:
            return "negative loop in branch set"
    # each branch set must be connected through positive edges
    for i, bs in enumerate(cert.branch_sets):
        reach = {bs[0]}
        grew = True
        while grew:
            grew = False
            for u, v, s in g.edges:
                if owner.get(u) == i and owner.get(v) == i and s * sw[u] * sw[v] > 0:
                    if (u in reach) != (v in reach):
                        reach |= {u, v}
                        grew = True
        if len(reach) != len(bs):
            return "connectivity"
    found: dict[tuple[int, int], set[int]] = {}
    for u, v, s in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            key = tuple(sorted((owner[u], owner[v])))
            found.setdefault(key, set()).add(s * sw[u] * sw[v])
    for i, j in itertools.combinations(range(cert.t), 2):
        signs = found.get((i, j), set())
        if cert.pattern == "ktilde" and signs != {1, -1}:
            return "missing sign"
        if cert.pattern == "odd" and -1 not in signs:
            return "missing negative edge"
    for i, j, es in cert.cross_edges:
        for u, v, s in es:
            if owner.get(u) is None or owner.get(v) is None:
                return "cross edge outside branch sets"
            if s not in found.get((min(owner[u], owner[v]), max(owner[u], owner[v])), set()):
                return "cross edge sign"
    return None


def _verify_subdivision(g: SignedGraph, cert: SubdivisionCertificate) -> str | None:
    signs = _edge_signs(g)
    B = cert.branch_vertices
    if len(B) != cert.t or len(set(B)) != cert.t:
        return "branch vertices"
    needed = {(i, j) for i in range(cert.t) for j in range(i + 1, cert.t)}
    got = {(i, j) for i, j, _, _ in cert.paths}
    if needed != got or len(cert.paths) != len(needed):
        return "missing pair"
    interior_seen = set()
    for i, j, pp, pn in cert.paths:
        total = []
        for verts, steps in (pp, pn):
            if verts[0] != B[i] or verts[-1] != B[j] or len(steps) != len(verts) - 1:
                return "path ends"
            if len(set(verts)) != len(verts):
                return "path not simple"
            prod = 1
            for a, b, s in zip(verts, verts[1:], steps):
                if s not in signs.get((min(a, b), max(a, b)), set()):
                    return "path edge missing"
                prod *= s
            total.append(prod)
            for v in verts[1:-1]:
                if v in B or v in interior_seen:
                    return "paths not internally disjoint"
                interior_seen.add(v)
        if total != [1, -1]:
            return "path signs"
    return None


def verify_even_odd(G: Graph, cert: EvenOddCertificate) -> str | None:
    edges = set(G.edges)
    col = cert.coloring
    if len(col) != G.n or len(cert.trees) != cert.t:
        return "shape"
    owner = {}
    for i, (vs, es) in enumerate(cert.trees):
        for v in vs:
            if v in owner:
                return "disjointness"
            owner[v] = i
        if len(es) != len(vs) - 1:
            return "not a tree"
        comp = {v: v for v in vs}

        def find(x):
            while comp[x] != x:
                x = comp[x]
            return x

        for u, v in es:
            if (min(u, v), max(u, v)) not in edges or u not in comp or v not in comp:
                return "tree edge missing"
            if col[u] == col[v]:
                return "tree edge not properly coloured"
            ru, rv = find(u), find(v)
            if ru == rv:
                return "not a tree"
            comp[ru] = rv
    for i, j in itertools.combinations(range(cert.t), 2):
        kinds = {col[u] == col[v] for u, v in edges
                 if {owner.get(u), owner.get(v)} == {i, j}}
        if kinds != {True, False}:
            return "pair lacks a monochromatic or a properly coloured edge"
    return None


def all_negative_h_paths_avoiding(g: SignedGraph, H: Sequence[int], X: Sequence[int]) -> list[tuple[int, ...]]:
    """Plain DFS over simple paths; used to re-check hitting sets."""
    Hs, Xs = set(H), set(X)
    adj: dict[int, list[tuple[int, int]]] = {}
    for u, v, s in g.edges:
        if u != v:
            adj.setdefault(u, []).append((v, s))
            adj.setdefault(v, []).append((u, s))
    found = []

    def walk(path, sign):
        u = path[-1]
        for w, s in adj.get(u, ()):
            if w in Xs or w in path:
                continue
            if w in Hs:
                if sign * s < 0:
                    found.append(tuple(path + [w]))
            else:
                walk(path + [w], sign * s)

    for a in sorted(Hs - Xs):
        walk([a], 1)
    return found


def verify_dichotomy(g: SignedGraph, H: Sequence[int], res: DichotomyResult) -> str | None:
    Hs = set(H)
    if res.paths is not None:
        signs = _edge_signs(g)
        if len(res.paths) != res.k:
            return "path count"
        used = set()
        for verts, steps in zip(res.paths, res.path_signs):
            if verts[0] not in Hs or verts[-1] not in Hs or verts[0] == verts[-1]:
                return "path ends not in H"
            if any(v in Hs for v in verts[1:-1]):
                return "internal vertex in H"
            if len(set(verts)) != len(verts) or used & set(verts):
                return "paths not disjoint"
            used |= set(verts)
            prod = 1
            for a, b, s in zip(verts, verts[1:], steps):
                if s not in signs.get((min(a, b), max(a, b)), set()):
                    return "path edge missing"
                prod *= s
            if prod > 0:
                return "path not negative"
        return None
    if res.hitting_set is None or len(res.hitting_set) > 2 * res.k - 2:
        return "hitting set too large"
    if all_negative_h_paths_avoiding(g, H, res.hitting_set):
        return "hitting set misses a negative H-path"
    return None


def has_clique_minor(G: Graph, k: int) -> bool:
    """Unsigned K_k-minor by brute force over vertex labellings (n <= 8)."""
    if G.n > 8:
        raise BoundExceeded("clique minor brute force limited to n <= 8")
    if k <= 0:
        return True
    if k > G.n:
        return False
    edges = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if G.adj[u] >> v & 1]
    for lab in itertools.product(range(k + 1), repeat=G.n):  # label k = deleted
        sets = [[v for v in range(G.n) if lab[v] == i] for i in range(k)]
        if any(not s for s in sets) or lab[0] not in (0, k):
            continue
        ok = True
        for i, s in enumerate(sets):
            reach, frontier = {s[0]}, [s[0]]
            while frontier:
                u = frontier.pop()
                for a, b in edges:
                    for x, y in ((a, b), (b, a)):
                        if x == u and lab[y] == i and y not in reach:
                            reach.add(y)
                            frontier.append(y)
            if len(reach) != len(s):
                ok = False
                break
        if ok and all(any({lab[a], lab[b]} == {i, j} for a, b in edges)
                      for i, j in itertools.combinations(range(k), 2)):
            return True
    return False
