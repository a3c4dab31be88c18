"""Fractional colourings as exact covering LPs.

``min sum w_S`` subject to ``sum_{S ni v} w_S >= 1`` and ``w >= 0``.  The
solver is a dense dual simplex over :class:`fractions.Fraction` with Bland's
rule: the all-surplus basis is dual feasible because every cost is 1, so no
phase one is needed.  The optimal multipliers are kept as a certificate and
both solutions are checked before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .color import maximal_balanced_masks
from .core import BoundExceeded, Graph, SignedGraph, simplify

CHI_FB_BOUND = 12
CHI_F_BOUND = 10

ZERO = Fraction(0)
ONE = Fraction(1)


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    weights: tuple[Fraction, ...]  # aligned with the input columns
    dual: tuple[Fraction, ...]  # one per vertex


@dataclass(frozen=True)
class RationalWeighting:
    weights: dict[tuple[int, ...], Fraction]  # only positive weights
    objective: Fraction
    dual: tuple[Fraction, ...]


def solve_covering_lp(columns: Sequence[Sequence[int]], n: int) -> LPSolution:
    m = len(columns)
    cover = [[False] * m for _ in range(n)]
    for j, col in enumerate(columns):
        for v in col:
            cover[v][j] = True
    if any(not any(row) for row in cover):
        raise LPError("some vertex is in no column; the LP is infeasible")
    if n == 0:
        return LPSolution(ZERO, (ZERO,) * m, ())

    # rows: -A w + s = -1 with s the surplus variables; columns 0..m-1 are w, m..m+n-1 are s
    width = m + n
    T = []
    for v in range(n):
        row = [-ONE if cover[v][j] else ZERO for j in range(m)] + [ZERO] * n
        row[m + v] = ONE
        T.append(row)
    rhs = [-ONE] * n
    basis = [m + v for v in range(n)]
    d = [ONE] * m + [ZERO] * n  # reduced costs
    obj = ZERO

    while True:
        infeasible = [i for i in range(n) if rhs[i] < 0]
        if not infeasible:
            break
        r = min(infeasible, key=lambda i: basis[i])
        row = T[r]
        best = None
        for j in range(width):
            a = row[j]
            if a < 0:
                ratio = d[j] / -a
                if best is None or ratio < best[0]:
                    best = (ratio, j)
        if best is None:
            raise LPError("primal infeasible")
        j = best[1]
        piv = row[j]
        row = [x / piv for x in row]
        rhs[r] /= piv
        T[r] = row
        for i in range(n):
            if i != r and T[i][j] != 0:
                f = T[i][j]
                Ti = T[i]
                T[i] = [a - f * b for a, b in zip(Ti, row)]
                rhs[i] -= f * rhs[r]
        f = d[j]
        if f != 0:
            d = [a - f * b for a, b in zip(d, row)]
            obj -= f * rhs[r]
        basis[r] = j

    x = [ZERO] * width
    for i, b in enumerate(basis):
        x[b] = rhs[i]
    weights = tuple(x[:m])
    dual = tuple(d[m + v] for v in range(n))
    _certify(cover, weights, dual)
    return LPSolution(sum(weights, ZERO), weights, dual)


def _certify(cover: list[list[bool]], weights, dual) -> None:
    """Primal feasible, dual feasible, equal objectives: hence both optimal."""
    n, m = len(cover), len(weights)
    if any(w < 0 for w in weights) or any(y < 0 for y in dual):
        raise LPError("negative value in certificate")
    for v in range(n):
        if sum((weights[j] for j in range(m) if cover[v][j]), ZERO) < 1:
            raise LPError(f"vertex {v} under-covered")
    for j in range(m):
        if sum((dual[v] for v in range(n) if cover[v][j]), ZERO) > 1:
            raise LPError(f"dual constraint {j} violated")
    if sum(weights, ZERO) != sum(dual, ZERO):
        raise LPError("objectives differ")


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def chi_fb(g: SignedGraph) -> tuple[Fraction, RationalWeighting]:
    """Fractional balanced chromatic number over the maximal balanced sets."""
    if g.has_negative_loop:
        raise ValueError("fractional balanced colouring needs a graph with no negative loop")
    if g.n > CHI_FB_BOUND:
        raise BoundExceeded(f"chi_fb limited to n <= {CHI_FB_BOUND}")
    g = simplify(g)
    if g.n == 0:
        return ZERO, RationalWeighting({}, ZERO, ())
    cols = [_bits(m) for m in maximal_balanced_masks(g)]
    sol = solve_covering_lp(cols, g.n)
    w = {c: x for c, x in zip(cols, sol.weights) if x > 0}
    return sol.value, RationalWeighting(w, sol.value, sol.dual)


def verify_weighting(g: SignedGraph, rw: RationalWeighting) -> str | None:
    from .core import induced, is_balanced

    cov = [ZERO] * g.n
    for S, x in rw.weights.items():
        if x < 0:
            return "negative weight"
        if not is_balanced(induced(g, S)[0]):
            return f"set {S} is not balanced"
        for v in S:
            cov[v] += x
    if any(c < 1 for c in cov):
        return "some vertex is covered less than once"
    if sum(rw.weights.values(), ZERO) != rw.objective:
        return "objective mismatch"
    return None


def maximal_independent_sets(G: Graph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting on the complement."""
    n = G.n
    full = (1 << n) - 1
    non = [full & ~G.adj[v] & ~(1 << v) for v in range(n)]
    out = []

    def bk(R: int, P: int, X: int):
        if not P and not X:
            out.append(_bits(R))
            return
        u = max(_bits(P | X), key=lambda u: (non[u] & P).bit_count())
        for v in _bits(P & ~non[u]):
            bk(R | 1 << v, P & non[v], X & non[v])
            P &= ~(1 << v)
            X |= 1 << v

    if n:
        bk(0, full, 0)
    return sorted(out)


def chi_f(G: Graph) -> Fraction:
    """Fractional chromatic number: floating-point LP (HiGHS), then exact certification."""
    if G.n > CHI_F_BOUND:
        raise BoundExceeded(f"chi_f limited to n <= {CHI_F_BOUND}")
    if G.n == 0:
        return ZERO
    cols = maximal_independent_sets(G)
    A = np.zeros((G.n, len(cols)))
    for j, S in enumerate(cols):
        A[list(S), j] = 1.0
    res = linprog(np.ones(len(cols)), A_ub=-A, b_ub=-np.ones(G.n), bounds=(0, None), method="highs")
    if res.status != 0:
        raise LPError(f"HiGHS failed: {res.message}")
    weights = [Fraction(x).limit_denominator(10**4) for x in res.x]
    dual = [Fraction(-y).limit_denominator(10**4) for y in res.ineqlin.marginals]
    cover = [[v in S for S in cols] for v in range(G.n)]
    _certify(cover, [max(w, ZERO) for w in weights], [max(y, ZERO) for y in dual])
    return sum((max(w, ZERO) for w in weights), ZERO)
