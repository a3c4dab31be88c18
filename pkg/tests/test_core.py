import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import brute_switching_isomorphic, signed_graphs
from sgchroma.core import (
    BoundExceeded,
    ParseError,
    SignedGraph,
    WalkError,
    canonical_form,
    from_canonical,
    induced,
    is_balanced,
    max_positive_switching,
    parse,
    permute,
    simplify,
    switch,
    switch_set,
    walk_sign,
)

NEG_TRIANGLE = SignedGraph(3, ((0, 1, -1), (1, 2, -1), (0, 2, -1)))
DIGON = SignedGraph(2, ((0, 1, 1), (0, 1, -1)))


class TestParse:
    def test_triangle_one_negative(self):
        g = parse("3 3\n0 1 +\n1 2 +\n0 2 -\n")
        assert g.n == 3 and g.edges == ((0, 1, 1), (1, 2, 1), (0, 2, -1))

    def test_negative_loop(self):
        g = parse("1 1\n0 0 -\n")
        assert g.has_negative_loop

    def test_digon(self):
        assert parse("2 2\n0 1 +\n0 1 -\n") == DIGON

    def test_comments_and_roundtrip(self):
        g = parse("# a comment\n2 1\n# more\n1 0 -\n")
        assert parse(g.to_text()) == g

    @pytest.mark.parametrize(
        "text, lineno",
        [("3 1\n0 3 +\n", 2), ("3 1\n0 1 x\n", 2), ("3 1\n0 1\n", 2), ("x y\n", 1), ("2 2\n0 1 +\n", 0)],
    )
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(ParseError) as exc:
            parse(text)
        assert exc.value.lineno == lineno


class TestSwitching:
    def test_flip_at_vertex_zero(self):
        h = switch(NEG_TRIANGLE, (-1, 1, 1))
        assert h.edges == ((0, 1, 1), (1, 2, -1), (0, 2, 1))

    def test_identity_and_negative_loop(self):
        g = SignedGraph(2, ((0, 0, -1), (0, 1, 1)))
        assert switch(g, (1, 1)) == g
        assert switch(g, (-1, 1)).edges[0] == (0, 0, -1)

    def test_switch_set(self):
        assert switch_set(NEG_TRIANGLE, [0]) == switch(NEG_TRIANGLE, (-1, 1, 1))

    @given(signed_graphs(max_n=6), st.data())
    def test_cycle_signs_invariant(self, g, data):
        s = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.n, max_size=g.n))
        h = switch(g, s)
        for cyc in _cycles(g):
            assert walk_sign(g, cyc) == walk_sign(h, cyc)


def _cycles(g, max_len=6):
    inc = {}
    for i, (u, v, _) in enumerate(g.edges):
        if u != v:
            inc.setdefault(u, []).append((v, i))
            inc.setdefault(v, []).append((u, i))
    out = []
    for start in range(g.n):
        stack = [(start, (start,), ())]
        while stack:
            u, path, eids = stack.pop()
            for w, i in inc.get(u, ()):
                if i in eids:
                    continue
                if w == start:
                    out.append(eids + (i,))
                elif w > start and w not in path and len(eids) < max_len - 1:
                    stack.append((w, path + (w,), eids + (i,)))
    return out


class TestWalkSign:
    def test_triangle(self):
        assert walk_sign(NEG_TRIANGLE, [0, 1, 2]) == -1

    def test_back_and_forth(self):
        g = SignedGraph(2, ((0, 1, -1),))
        assert walk_sign(g, [0, 0]) == 1

    def test_digon(self):
        assert walk_sign(DIGON, [0, 1]) == -1

    def test_not_a_walk(self):
        g = SignedGraph(4, ((0, 1, 1), (2, 3, 1)))
        with pytest.raises(WalkError):
            walk_sign(g, [0, 1])


class TestBalance:
    def test_triangle_two_negative(self):
        g = SignedGraph(3, ((0, 1, 1), (1, 2, -1), (0, 2, -1)))
        res = is_balanced(g)
        assert res and res.switching == (1, 1, -1)

    def test_negative_triangle_cycle(self):
        res = is_balanced(NEG_TRIANGLE)
        assert not res and len(res.cycle.edges) == 3
        assert walk_sign(NEG_TRIANGLE, res.cycle.edges) == -1

    def test_digon_cycle(self):
        res = is_balanced(DIGON)
        assert len(res.cycle.edges) == 2

    @given(signed_graphs(max_n=7, loops=True))
    def test_certificates(self, g):
        res = is_balanced(g)
        if res:
            assert all(s > 0 for _, _, s in switch(g, res.switching).edges)
        else:
            assert walk_sign(g, res.cycle.edges) == -1
            assert len(set(res.cycle.vertices)) == len(res.cycle.vertices)


class TestInducedSimplify:
    def test_induced(self):
        assert induced(NEG_TRIANGLE, range(3))[0] == NEG_TRIANGLE
        assert induced(NEG_TRIANGLE, [])[0] == SignedGraph(0)
        assert induced(DIGON, [0])[0] == SignedGraph(1)

    def test_simplify(self):
        assert simplify(SignedGraph(2, ((0, 1, 1), (0, 1, 1)))).edges == ((0, 1, 1),)
        assert simplify(DIGON) == DIGON
        assert simplify(SignedGraph(1, ((0, 0, 1),))).edges == ()
        assert simplify(SignedGraph(1, ((0, 0, -1), (0, 0, -1)))).edges == ((0, 0, -1),)


class TestMaxPositiveSwitching:
    def test_negative_k4(self):
        g = SignedGraph(4, tuple((u, v, -1) for u, v in itertools.combinations(range(4), 2)))
        _, H = max_positive_switching(g)
        assert min(H.degree(v) for v in range(4)) >= 2

    def test_balanced_input(self):
        g = SignedGraph(3, ((0, 1, 1), (1, 2, -1), (0, 2, -1)))
        s, H = max_positive_switching(g)
        assert H.m == 3

    def test_single_negative_edge(self):
        s, H = max_positive_switching(SignedGraph(2, ((0, 1, -1),)))
        assert s == (-1, 1) and H.edges == ((0, 1, 1),)

    @given(signed_graphs(max_n=9, max_edges=30))
    def test_degree_bound_and_balance(self, g):
        s, H = max_positive_switching(g)
        for v in range(g.n):
            assert 2 * H.degree(v) >= g.degree(v)
        res = is_balanced(H)
        assert res and set(res.switching) <= {1}


class TestCanonicalForm:
    def test_unbalanced_vs_balanced_triangle(self):
        bal = SignedGraph(3, ((0, 1, -1), (1, 2, -1), (0, 2, 1)))
        assert canonical_form(NEG_TRIANGLE) != canonical_form(bal)
        # one negative edge: sign product -1, same class as the all-negative triangle
        one_neg = SignedGraph(3, ((0, 1, -1), (1, 2, 1), (0, 2, 1)))
        assert canonical_form(NEG_TRIANGLE) == canonical_form(one_neg)

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            canonical_form(SignedGraph(8))
        assert canonical_form(SignedGraph(8), bound=8)

    def test_format(self):
        code = canonical_form(NEG_TRIANGLE)
        assert code[:4] == b"SG\x01\x03"
        assert canonical_form(from_canonical(code)) == code

    @given(signed_graphs(max_n=7, loops=True, max_edges=16), st.data())
    def test_invariant_under_relabel_and_switch(self, g, data):
        perm = data.draw(st.permutations(range(g.n)))
        s = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.n, max_size=g.n))
        h = switch(permute(g, perm), s)
        assert canonical_form(h) == canonical_form(g)
        if g.n <= 4:
            assert brute_switching_isomorphic(from_canonical(canonical_form(g)), g)

    @given(signed_graphs(min_n=1, max_n=4, loops=True, max_edges=7), signed_graphs(min_n=1, max_n=4, loops=True, max_edges=7))
    def test_equal_iff_switching_isomorphic(self, g, h):
        assert (canonical_form(g) == canonical_form(h)) == brute_switching_isomorphic(g, h)

    def test_exhaustive_n3_against_brute_force(self):
        rng = random.Random(3)
        states = ((), (1,), (-1,), (1, -1))
        graphs = []
        for combo in itertools.product(range(4), repeat=3):
            edges = tuple((u, v, s) for (u, v), st_ in zip(((0, 1), (0, 2), (1, 2)), combo) for s in states[st_])
            graphs.append(SignedGraph(3, edges))
        reps = []
        for g in graphs:
            if not any(brute_switching_isomorphic(g, r) for r in reps):
                reps.append(g)
        assert len(reps) == 11
        assert len({canonical_form(g) for g in graphs}) == 11
        for g, h in zip(rng.sample(graphs, 20), rng.sample(graphs, 20)):
            assert (canonical_form(g) == canonical_form(h)) == brute_switching_isomorphic(g, h)
