"""Balanced colourings: balanced sets, exact chi_b with witnesses, and the
equivalent views (0-free colourings, homomorphisms to K~_k^+, circular
colourings)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    BoundExceeded,
    Graph,
    SignedGraph,
    balance_mask,
    induced,
    is_balanced,
    simplify,
)

ALL_SETS_BOUND = 16
MAXIMAL_SETS_BOUND = 20
CHI_BOUND = 10

INFINITY = math.inf


@dataclass(frozen=True)
class BalancedCover:
    parts: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class ZeroFreeColoring:
    psi: tuple[int, ...]
    k: int


@dataclass(frozen=True)
class HomToKtildePlus:
    k: int
    image: tuple[int, ...]
    switching: tuple[int, ...]


@dataclass(frozen=True)
class CircularColoring:
    r: Fraction
    phi: tuple[Fraction, ...]


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def balanced_masks(g: SignedGraph) -> list[int]:
    """Every balanced vertex set of ``g`` as a bitmask, in increasing mask order."""
    if g.n > ALL_SETS_BOUND:
        raise BoundExceeded(f"all balanced sets limited to n <= {ALL_SETS_BOUND}")
    adj = g.adjacency
    ok = bytearray(1 << g.n)
    out = []
    for mask in range(1 << g.n):
        if mask and not ok[mask & (mask - 1)]:
            continue  # a subset is already unbalanced
        if balance_mask(adj, mask) >= 0:
            ok[mask] = 1
            out.append(mask)
    return out


def maximal_balanced_masks(g: SignedGraph) -> list[int]:
    """Inclusion-maximal balanced sets, sorted by decreasing size then vertex list."""
    n = g.n
    if n > MAXIMAL_SETS_BOUND:
        raise BoundExceeded(f"maximal balanced sets limited to n <= {MAXIMAL_SETS_BOUND}")
    adj = g.adjacency
    full = (1 << n) - 1
    found = []

    def rec(v: int, X: int, excluded: int):
        if v == n:
            for w in _verts(excluded):
                if balance_mask(adj, X | 1 << w) >= 0:
                    return
            found.append(X)
            return
        bit = 1 << v
        rest = full & ~((bit << 1) - 1)
        if balance_mask(adj, X | bit) >= 0:
            rec(v + 1, X | bit, excluded)
        # excluding v only pays off if v can end up blocked
        if balance_mask(adj, X | bit | rest) < 0:
            rec(v + 1, X, excluded | bit)

    if n == 0:
        return [0]
    rec(0, 0, 0)
    found.sort(key=lambda m: (-m.bit_count(), _verts(m)))
    return found


def enumerate_balanced_sets(g: SignedGraph, maximal_only: bool = False) -> list[tuple[int, ...]]:
    if maximal_only:
        return [_verts(m) for m in maximal_balanced_masks(g)]
    return sorted((_verts(m) for m in balanced_masks(g)), key=lambda t: (len(t), t))


def _must_separate_clique(g: SignedGraph) -> int:
    """Greedy clique among vertices pairwise joined by digons."""
    adj = g.adjacency
    dig = [adj.pos[v] & adj.neg[v] for v in range(g.n)]
    order = sorted(range(g.n), key=lambda v: (-dig[v].bit_count(), v))
    best = 0
    for start in order:
        clique = 1 << start
        cand = dig[start]
        for v in order:
            if cand >> v & 1:
                clique |= 1 << v
                cand &= dig[v]
        best = max(best, clique.bit_count())
    return best


def chi_b(g: SignedGraph) -> tuple[int | float, BalancedCover | None]:
    """Balanced chromatic number with a partition witness; ``(inf, None)`` on a negative loop."""
    if g.has_negative_loop:
        return INFINITY, None
    g = simplify(g)
    n = g.n
    if n == 0:
        return 0, BalancedCover(())
    full = (1 << n) - 1
    adj = g.adjacency
    if balance_mask(adj, full) >= 0:
        return 1, BalancedCover((tuple(range(n)),))
    cols = maximal_balanced_masks(g)
    degree = [(adj.pos[v] | adj.neg[v]).bit_count() for v in range(n)]
    containing = [[c for c in cols if c >> v & 1] for v in range(n)]

    # greedy upper bound
    greedy = []
    uncovered = full
    while uncovered:
        c = max(cols, key=lambda c: (c & uncovered).bit_count())
        greedy.append(c)
        uncovered &= ~c
    lower = max(2, _must_separate_clique(g))

    def search(uncovered: int, left: int, chosen: list[int]) -> list[int] | None:
        if not uncovered:
            return chosen
        if left == 0:
            return None
        v = min(_verts(uncovered), key=lambda v: (len(containing[v]), -degree[v], v))
        for c in containing[v]:
            res = search(uncovered & ~c, left - 1, chosen + [c])
            if res is not None:
                return res
        return None

    best = greedy
    for k in range(lower, len(greedy)):
        res = search(full, k, [])
        if res is not None:
            best = res
            break
    return len(best), _as_partition(best)


def _as_partition(cols: Sequence[int]) -> BalancedCover:
    parts = []
    taken = 0
    for c in cols:
        parts.append(_verts(c & ~taken))
        taken |= c
    return BalancedCover(tuple(p for p in parts if p))


def verify_cover(g: SignedGraph, cover: BalancedCover) -> str | None:
    """``None`` if valid, otherwise a short reason."""
    seen = set()
    for i, part in enumerate(cover.parts):
        if any(not 0 <= v < g.n for v in part):
            return f"part {i} has an out-of-range vertex"
        sub, _ = induced(g, part)
        if not is_balanced(sub):
            return f"part {i} is not balanced"
        seen.update(part)
    if len(seen) != g.n:
        return "parts do not cover V"
    return None


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def _lowest_part(g: SignedGraph, cover: BalancedCover) -> list[int]:
    part_of = [-1] * g.n
    for i, part in enumerate(cover.parts):
        for v in part:
            if part_of[v] < 0:
                part_of[v] = i
    return part_of


def _part_switchings(g: SignedGraph, cover: BalancedCover) -> tuple[list[int], list[int]]:
    part_of = _lowest_part(g, cover)
    s = [1] * g.n
    for i in range(cover.k):
        members = [v for v in range(g.n) if part_of[v] == i]
        sub, verts = induced(g, members)
        res = is_balanced(sub)
        for local, v in enumerate(verts):
            s[v] = res.switching[local]
    return part_of, s


def balanced_to_zero_free(g: SignedGraph, cover: BalancedCover) -> ZeroFreeColoring:
    """0-free colouring of ``negate(g)`` from a balanced cover of ``g``."""
    reason = verify_cover(g, cover)
    if reason:
        raise ValueError(f"invalid cover: {reason}")
    part_of, s = _part_switchings(g, cover)
    return ZeroFreeColoring(tuple(s[v] * (part_of[v] + 1) for v in range(g.n)), cover.k)


def verify_zero_free(g: SignedGraph, c: ZeroFreeColoring) -> int | None:
    """Index of the first edge with ``psi(u) == sigma(e) psi(v)``, or ``None``."""
    for i, (u, v, s) in enumerate(g.edges):
        if c.psi[u] == s * c.psi[v]:
            return i
    if any(not (1 <= abs(x) <= c.k) for x in c.psi):
        return -1
    return None


def check_hom_to_ktilde_plus(g: SignedGraph, k: int) -> HomToKtildePlus | None:
    if g.has_negative_loop:
        raise ValueError("negative loop: no homomorphism to K~_k^+")
    opt, cover = chi_b(g)
    if opt > k:
        return None
    part_of, s = _part_switchings(g, cover)
    hom = HomToKtildePlus(k, tuple(part_of), tuple(s))
    assert verify_hom(g, hom) is None
    return hom


def verify_hom(g: SignedGraph, h: HomToKtildePlus) -> int | None:
    """Index of the first edge that is negative inside a fibre after switching."""
    if len(h.image) != g.n or any(not 0 <= x < h.k for x in h.image):
        return -1
    for i, (u, v, s) in enumerate(g.edges):
        if h.image[u] == h.image[v] and s * h.switching[u] * h.switching[v] < 0:
            return i
    return None


def ktilde_plus(k: int) -> SignedGraph:
    edges = [(v, v, 1) for v in range(k)]
    edges += [(u, v, s) for u in range(k) for v in range(u + 1, k) for s in (1, -1)]
    return SignedGraph(k, tuple(edges))


def _circle_distance(x: Fraction, y: Fraction, r: Fraction) -> Fraction:
    d = abs(x - y) % r
    return min(d, r - d)


def verify_circular(g: SignedGraph, c: CircularColoring) -> int | None:
    """Index of the first violated edge in input order, or ``None`` if valid."""
    r = Fraction(c.r)
    if r < 2:
        raise ValueError("circumference must be at least 2")
    for i, (u, v, s) in enumerate(g.edges):
        d = _circle_distance(Fraction(c.phi[u]), Fraction(c.phi[v]), r)
        if s < 0 and d < 1:
            return i
        if s > 0 and d > r / 2 - 1:
            return i
    return None


def lift_to_circular(g: SignedGraph, cover: BalancedCover) -> CircularColoring:
    """Circular ``2k``-colouring: part ``i`` sits at ``i`` or its antipode ``i + k``."""
    k = cover.k
    part_of, s = _part_switchings(g, cover)
    phi = tuple(Fraction(part_of[v] + (k if s[v] < 0 else 0)) for v in range(g.n))
    return CircularColoring(Fraction(2 * k), phi)


def chi(G: Graph) -> int:
    """Classical chromatic number by DSATUR-ordered branch and bound."""
    n = G.n
    if n > CHI_BOUND:
        raise BoundExceeded(f"chi limited to n <= {CHI_BOUND}")
    if n == 0:
        return 0
    nbrs = [[w for w in range(n) if G.adj[v] >> w & 1] for v in range(n)]
    color = [-1] * n
    best = [n]

    def pick():
        choice, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in nbrs[v] if color[w] >= 0})
            cand = (sat, len(nbrs[v]), -v)
            if key is None or cand > key:
                choice, key = v, cand
        return choice

    def rec(colored: int, used: int):
        if used >= best[0]:
            return
        if colored == n:
            best[0] = used
            return
        v = pick()
        taken = {color[w] for w in nbrs[v]}
        for c in range(used):
            if c not in taken:
                color[v] = c
                rec(colored + 1, used)
        color[v] = used
        rec(colored + 1, used + 1)
        color[v] = -1

    rec(0, 0)
    return best[0]
