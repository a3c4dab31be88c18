import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import C, K, petersen, signed_graphs
from sgchroma.color import chi_b
from sgchroma.core import BoundExceeded, Graph, SignedGraph, simplify, tilde
from sgchroma.fraclp import (
    LPError,
    chi_f,
    chi_fb,
    maximal_independent_sets,
    solve_covering_lp,
    verify_weighting,
)


def vertex_oracle(columns, n):
    """Optimum of the covering LP by brute force over the vertices of the dual
    polytope {y >= 0, sum_{v in S} y_v <= 1}: solve every n x n subsystem of
    tight constraints exactly and keep the best feasible point."""
    rows = [[Fraction(int(v in S)) for v in range(n)] for S in columns]
    rows += [[Fraction(int(v == w)) for v in range(n)] for w in range(n)]
    rhs = [Fraction(1)] * len(columns) + [Fraction(0)] * n
    best = None
    for pick in itertools.combinations(range(len(rows)), n):
        A = [rows[i][:] + [rhs[i]] for i in pick]
        ok = True
        for c in range(n):
            p = next((r for r in range(c, n) if A[r][c] != 0), None)
            if p is None:
                ok = False
                break
            A[c], A[p] = A[p], A[c]
            A[c] = [x / A[c][c] for x in A[c]]
            for r in range(n):
                if r != c and A[r][c] != 0:
                    A[r] = [a - A[r][c] * b for a, b in zip(A[r], A[c])]
        if not ok:
            continue
        y = [A[r][n] for r in range(n)]
        if all(v >= 0 for v in y) and all(sum(y[v] for v in S) <= 1 for S in columns):
            val = sum(y)
            best = val if best is None or val > best else best
    return best


class TestCoveringLP:
    def test_singletons(self):
        assert solve_covering_lp([(v,) for v in range(4)], 4).value == 4

    def test_whole_set(self):
        assert solve_covering_lp([(0, 1, 2)], 3).value == 1

    def test_c5_independent_sets(self):
        sol = solve_covering_lp(maximal_independent_sets(C(5)), 5)
        assert sol.value == Fraction(5, 2)
        assert sum(sol.dual) == sol.value

    def test_uncovered(self):
        with pytest.raises(LPError):
            solve_covering_lp([(0,)], 2)

    @given(st.integers(1, 5), st.data())
    def test_matches_vertex_enumeration(self, n, data):
        cols = data.draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=7))
        cols = [tuple(sorted(c)) for c in cols]
        missing = set(range(n)) - set().union(*map(set, cols))
        cols += [(v,) for v in sorted(missing)]
        sol = solve_covering_lp(cols, n)
        assert sol.value == vertex_oracle(cols, n)


class TestChiFb:
    def test_tilde_c5(self):
        value, w = chi_fb(tilde(C(5)))
        assert value == Fraction(5, 2) and verify_weighting(tilde(C(5)), w) is None

    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_tilde_complete(self, t):
        assert chi_fb(tilde(K(t)))[0] == t

    def test_balanced(self):
        assert chi_fb(SignedGraph(3, ((0, 1, 1), (1, 2, -1))))[0] == 1

    def test_negative_loop_and_bound(self):
        with pytest.raises(ValueError):
            chi_fb(SignedGraph(1, ((0, 0, -1),)))
        with pytest.raises(BoundExceeded):
            chi_fb(SignedGraph(13))

    @given(signed_graphs(max_n=7, loops=True).filter(lambda g: not g.has_negative_loop))
    def test_between_bounds_and_loop_free(self, g):
        value, w = chi_fb(g)
        assert verify_weighting(g, w) is None
        assert value <= chi_b(g)[0]
        assert value == chi_fb(simplify(g))[0]
        if g.n:
            assert value >= 1


class TestChiF:
    def test_examples(self):
        assert chi_f(K(4)) == 4
        assert chi_f(C(5)) == Fraction(5, 2)
        assert chi_f(C(6)) == 2
        assert chi_f(petersen()) == Fraction(5, 2)
        assert chi_f(Graph(0)) == 0

    @given(st.integers(1, 7), st.data())
    def test_tilde_identity(self, n, data):
        edges = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
        G = Graph(n, tuple(edges))
        assert chi_f(G) == chi_fb(tilde(G))[0]
