"""Signed multigraphs and the switching/balance algebra.

Vertices are dense integers ``0..n-1``.  Edges are ``(u, v, sign)`` triples
with ``u <= v`` and ``sign`` in ``{+1, -1}``; ``u == v`` is a loop.  Parallel
edges are kept as given, solvers call :func:`simplify` first.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

CANONICAL_VERSION = 1
DEFAULT_CANONICAL_BOUND = 7


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class WalkError(ValueError):
    pass


class BoundExceeded(ValueError):
    """Raised when an exhaustive routine is asked for an instance above its bound."""


@dataclass(frozen=True)
class Graph:
    """Plain undirected graph, used by the classical oracles."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"bad edge {(u, v)} for n={self.n}")
        object.__setattr__(self, "edges", tuple(sorted(set(edges))))

    @classmethod
    def from_networkx(cls, G) -> "Graph":
        nodes = sorted(G.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        return cls(len(nodes), tuple((index[u], index[v]) for u, v in G.edges() if u != v))

    @cached_property
    def adj(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj


@dataclass(frozen=True)
class Adjacency:
    """Bitmask view of the simplified graph."""

    pos: tuple[int, ...]
    neg: tuple[int, ...]
    pos_loops: int
    neg_loops: int


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = []
        for e in self.edges:
            u, v, s = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"vertex out of range in edge {e}")
            if s not in (1, -1):
                raise ValueError(f"bad sign in edge {e}")
            norm.append((min(u, v), max(u, v), s))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Adjacency:
        pos = [0] * self.n
        neg = [0] * self.n
        pl = nl = 0
        for u, v, s in self.edges:
            if u == v:
                if s > 0:
                    pl |= 1 << u
                else:
                    nl |= 1 << u
                continue
            side = pos if s > 0 else neg
            side[u] |= 1 << v
            side[v] |= 1 << u
        return Adjacency(tuple(pos), tuple(neg), pl, nl)

    @cached_property
    def incidence(self) -> list[list[tuple[int, int, int]]]:
        """Per vertex, ``(neighbour, sign, edge index)`` sorted by neighbour then index."""
        inc: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v, s) in enumerate(self.edges):
            if u == v:
                continue
            inc[u].append((v, s, i))
            inc[v].append((u, s, i))
        for lst in inc:
            lst.sort(key=lambda t: (t[0], t[2]))
        return inc

    @property
    def has_negative_loop(self) -> bool:
        return any(u == v and s < 0 for u, v, s in self.edges)

    def degree(self, v: int) -> int:
        """Number of non-loop edge ends at ``v``."""
        return len(self.incidence[v])

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class NegativeCycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class BalanceResult:
    switching: tuple[int, ...] | None = None
    cycle: NegativeCycle | None = None

    def __post_init__(self):
        if (self.switching is None) == (self.cycle is None):
            raise ValueError("exactly one of switching/cycle must be set")

    @property
    def balanced(self) -> bool:
        return self.switching is not None

    def __bool__(self) -> bool:
        return self.balanced


def parse(text: str | bytes) -> SignedGraph:
    """Read the ``n m`` / ``u v s`` text format. ``#`` lines are comments."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(lineno, "header must be 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(lineno, "header must be two integers") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count in header")
            header = (n, m)
            continue
        if len(parts) != 3:
            raise ParseError(lineno, "edge line must be 'u v s'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "vertex is not an integer") from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if parts[2] not in ("+", "-"):
            raise ParseError(lineno, f"bad sign token {parts[2]!r}")
        edges.append((u, v, 1 if parts[2] == "+" else -1))
    if header is None:
        raise ParseError(0, "missing header")
    if len(edges) != header[1]:
        raise ParseError(0, f"header announces {header[1]} edges, found {len(edges)}")
    return SignedGraph(header[0], tuple(edges))


def switch(g: SignedGraph, s: Sequence[int]) -> SignedGraph:
    if len(s) != g.n:
        raise ValueError(f"switching has length {len(s)}, graph has {g.n} vertices")
    return SignedGraph(g.n, tuple((u, v, sig * s[u] * s[v]) for u, v, sig in g.edges))


def switch_set(g: SignedGraph, X: Iterable[int]) -> SignedGraph:
    s = [1] * g.n
    for v in X:
        s[v] = -1
    return switch(g, s)


def walk_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    """Product of signs along a walk given as edge indices."""
    if not walk:
        return 1
    first = g.edges[walk[0]]
    for start in dict.fromkeys((first[0], first[1])):
        cur = start
        sign = 1
        for idx in walk:
            u, v, s = g.edges[idx]
            if cur == u:
                cur = v
            elif cur == v:
                cur = u
            else:
                break
            sign *= s
        else:
            return sign
    raise WalkError("edge sequence is not a walk")


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Switching certificate, or a negative cycle.

    Spanning forest by lowest-index-first BFS; non-tree edges are then checked
    in edge order and the first violated one closes the returned cycle.
    """
    for i, (u, v, s) in enumerate(g.edges):
        if u == v and s < 0:
            return BalanceResult(cycle=NegativeCycle((u,), (i,)))
    label = [0] * g.n
    parent: list[tuple[int, int] | None] = [None] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if label[root]:
            continue
        label[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, s, i in g.incidence[u]:
                if not label[w]:
                    label[w] = label[u] * s
                    parent[w] = (u, i)
                    depth[w] = depth[u] + 1
                    queue.append(w)
    tree = {p[1] for p in parent if p is not None}
    for i, (u, v, s) in enumerate(g.edges):
        if u == v or i in tree or label[u] * label[v] == s:
            continue
        # climb to the common ancestor
        a, b = u, v
        up_a, up_b = [a], [b]
        ea, eb = [], []
        while a != b:
            if depth[a] >= depth[b]:
                p, idx = parent[a]
                ea.append(idx)
                a = p
                up_a.append(a)
            else:
                p, idx = parent[b]
                eb.append(idx)
                b = p
                up_b.append(b)
        verts = tuple(up_a + up_b[-2::-1])
        edges = tuple(ea + eb[::-1] + [i])
        return BalanceResult(cycle=NegativeCycle(verts, edges))
    return BalanceResult(switching=tuple(label))


def balance_mask(adj: Adjacency, mask: int) -> int:
    """Minus-side bitmask of a balancing switching of ``mask``, or -1.

    Each component's smallest vertex is kept on the plus side.
    """
    if mask & adj.neg_loops:
        return -1
    pos, neg = adj.pos, adj.neg
    minus = 0
    seen = 0
    rest = mask
    while rest:
        root = rest & -rest
        seen |= root
        stack = [root.bit_length() - 1]
        while stack:
            u = stack.pop()
            same, diff = pos[u] & mask, neg[u] & mask
            if minus >> u & 1:
                same, diff = diff, same
            if same & diff:
                return -1
            if (diff & seen & ~minus) or (same & minus):
                return -1
            new = (same | diff) & ~seen
            if not new:
                continue
            minus |= diff & new
            seen |= new
            while new:
                b = new & -new
                stack.append(b.bit_length() - 1)
                new ^= b
        rest &= ~seen
    return minus


def connected_mask(adj_masks: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        b = frontier & -frontier
        frontier ^= b
        new = adj_masks[b.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def induced(g: SignedGraph, X: Iterable[int]) -> tuple[SignedGraph, tuple[int, ...]]:
    """Induced subgraph on ``X``, re-indexed; returns it with the old labels."""
    verts = tuple(sorted(set(X)))
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple(
        (index[u], index[v], s) for u, v, s in g.edges if u in index and v in index
    )
    return SignedGraph(len(verts), edges), verts


def max_positive_switching(g: SignedGraph) -> tuple[tuple[int, ...], SignedGraph]:
    """Switch until every vertex has at least half of its edges positive.

    Returns the switching and the spanning subgraph of (switched) positive
    non-loop edges, which is balanced.
    """
    if g.has_negative_loop:
        raise ValueError("negative loop cannot be switched positive")
    s = [1] * g.n
    # balance[v] = (#positive - #negative) non-loop edges at v under s
    balance = [0] * g.n
    for u, v, sig in g.edges:
        if u != v:
            balance[u] += sig
            balance[v] += sig
    inc = g.incidence
    v = 0
    while v < g.n:
        if balance[v] < 0:
            s[v] = -s[v]
            balance[v] = -balance[v]
            for w, sig, _ in inc[v]:
                # the edge vw flipped; its contribution at w changes by 2*new sign
                balance[w] += 2 * sig * s[v] * s[w]
            v = 0
            continue
        v += 1
    H = SignedGraph(g.n, tuple((u, w, 1) for u, w, sig in g.edges if u != w and sig * s[u] * s[w] > 0))
    return tuple(s), H


def simplify(g: SignedGraph) -> SignedGraph:
    """Drop repeated same-sign parallel edges and positive loops; keep one negative loop per vertex."""
    seen = set()
    out = []
    for u, v, s in g.edges:
        if u == v and s > 0:
            continue
        if (u, v, s) in seen:
            continue
        seen.add((u, v, s))
        out.append((u, v, s))
    return SignedGraph(g.n, tuple(out))


# -- canonical form --------------------------------------------------------
#
# Layout (version 1):  b"SG" + bytes([version, n])
#   then per vertex in canonical order: (#positive loops, #negative loops)
#   then per pair (i, j), i < j, in lexicographic order: (#positive, #negative)
# after the switching that makes a lexicographically-first spanning forest of
# the "sign-asymmetric" pairs positive-majority.  All counts are < 256.


def _pair_counts(g: SignedGraph):
    loops = [[0, 0] for _ in range(g.n)]
    pairs: dict[tuple[int, int], list[int]] = {}
    for u, v, s in g.edges:
        if u == v:
            loops[u][0 if s > 0 else 1] += 1
        else:
            pairs.setdefault((u, v), [0, 0])[0 if s > 0 else 1] += 1
    return loops, pairs


def _refine(colors: list[int], nbrs: list[list[tuple[int, tuple]]]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], p) for w, p in nbrs[v])))
            for v in range(len(colors))
        ]
        rank = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [rank[sig] for sig in sigs]
        if len(rank) == ncol:
            return new
        colors, ncol = new, len(rank)


def _leaves(colors: list[int], nbrs) -> Iterable[list[int]]:
    """Discrete colourings reached by individualisation-refinement."""
    colors = _refine(colors, nbrs)
    n = len(colors)
    if len(set(colors)) == n:
        yield colors
        return
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    for v in range(n):
        if colors[v] != target:
            continue
        ind = [2 * c for c in colors]
        ind[v] -= 1
        yield from _leaves(ind, nbrs)


def canonical_form(g: SignedGraph, bound: int = DEFAULT_CANONICAL_BOUND) -> bytes:
    """Opaque byte string, equal for two graphs iff they are switching-isomorphic."""
    n = g.n
    if n > bound:
        raise BoundExceeded(f"canonical_form refuses n={n} > {bound}")
    loops, pairs = _pair_counts(g)
    # orientation of a sign-asymmetric pair flips under switching; the
    # product of orientations around a triangle does not
    orient = {}
    for (u, v), (cp, cn) in pairs.items():
        if cp != cn:
            orient[(u, v)] = orient[(v, u)] = 1 if cp > cn else -1
    neg_tri: dict[tuple[int, int], int] = {}
    for a, b, c in itertools.combinations(range(n), 3):
        if (a, b) in orient and (b, c) in orient and (a, c) in orient:
            if orient[(a, b)] * orient[(b, c)] * orient[(a, c)] < 0:
                for p in ((a, b), (b, c), (a, c)):
                    neg_tri[p] = neg_tri.get(p, 0) + 1
    nbrs: list[list[tuple[int, tuple]]] = [[] for _ in range(n)]
    for (u, v), (cp, cn) in pairs.items():
        prof = (min(cp, cn), max(cp, cn), neg_tri.get((u, v), 0))
        nbrs[u].append((v, prof))
        nbrs[v].append((u, prof))
    init = [(tuple(loops[v]), tuple(sorted(p for _, p in nbrs[v]))) for v in range(n)]
    rank = {x: i for i, x in enumerate(sorted(set(init)))}
    best = None
    for leaf in _leaves([rank[x] for x in init], nbrs):
        order = sorted(range(n), key=leaf.__getitem__)
        code = _encode(order, loops, pairs)
        if best is None or code < best:
            best = code
    head = bytes([ord("S"), ord("G"), CANONICAL_VERSION, n])
    return head + bytes(best or ())


def _encode(order: list[int], loops, pairs) -> tuple[int, ...]:
    n = len(order)
    comp = list(range(n))
    s = [1] * n
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            u, v = order[i], order[j]
            cnt = pairs.get((u, v) if u < v else (v, u))
            if cnt is None or cnt[0] == cnt[1]:
                continue
            if comp[i] != comp[j]:
                # flip j's component so this pair is positive-majority
                if (cnt[0] > cnt[1]) != (s[i] * s[j] > 0):
                    cj = comp[j]
                    for k in range(n):
                        if comp[k] == cj:
                            s[k] = -s[k]
                old, new = comp[j], comp[i]
                for k in range(n):
                    if comp[k] == old:
                        comp[k] = new
    code = []
    for i in range(n):
        code.extend(loops[order[i]])
    for i in range(n):
        for j in range(i + 1, n):
            u, v = order[i], order[j]
            cnt = pairs.get((u, v) if u < v else (v, u))
            if cnt is None:
                code.extend((0, 0))
            elif s[i] * s[j] > 0:
                code.extend(cnt)
            else:
                code.extend((cnt[1], cnt[0]))
    return tuple(code)


def from_canonical(code: bytes) -> SignedGraph:
    """Representative graph encoded by a canonical form."""
    if code[:2] != b"SG" or code[2] != CANONICAL_VERSION:
        raise ValueError("not a version-1 canonical form")
    n = code[3]
    body = code[4:]
    edges = []
    for v in range(n):
        cp, cn = body[2 * v], body[2 * v + 1]
        edges += [(v, v, 1)] * cp + [(v, v, -1)] * cn
    k = 2 * n
    for i in range(n):
        for j in range(i + 1, n):
            cp, cn = body[k], body[k + 1]
            k += 2
            edges += [(i, j, 1)] * cp + [(i, j, -1)] * cn
    return SignedGraph(n, tuple(edges))


def permute(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    return SignedGraph(g.n, tuple((perm[u], perm[v], s) for u, v, s in g.edges))


def tilde(G: Graph) -> SignedGraph:
    """Each edge of ``G`` becomes a positive/negative digon."""
    return SignedGraph(G.n, tuple((u, v, s) for u, v in G.edges for s in (1, -1)))


def minus(G: Graph) -> SignedGraph:
    return SignedGraph(G.n, tuple((u, v, -1) for u, v in G.edges))


def underlying(g: SignedGraph) -> Graph:
    """Simple loopless graph on the adjacent pairs of ``g``."""
    return Graph(g.n, tuple({(u, v) for u, v, _ in g.edges if u != v}))
