import itertools
import math

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sgchroma.core import Graph, SignedGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def signed_graphs(draw, min_n=0, max_n=6, loops=False, max_edges=14):
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        return SignedGraph(0)
    vert = st.integers(0, n - 1)
    edge = st.tuples(vert, vert, st.sampled_from((1, -1)))
    if not loops:
        edge = edge.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(edge, max_size=max_edges)) if n > 1 or loops else []
    return SignedGraph(n, tuple(edges))


@st.composite
def switchings(draw, n):
    return tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)))


def nxg(G) -> Graph:
    return Graph.from_networkx(G)


def K(n):
    return nxg(nx.complete_graph(n))


def C(n):
    return nxg(nx.cycle_graph(n))


def petersen():
    return nxg(nx.petersen_graph())


def burnside_count(n: int, loops: bool = False) -> int:
    """Switching-isomorphism classes by Burnside over S_n x Z_2^n.

    A pair orbit of a group element fixes 4 pair states when the switching
    product around it is +1 (all states allowed) and 2 otherwise (only
    "absent" and "digon" are sign-symmetric).  Loop states are switching
    invariant, so each vertex cycle contributes 4.
    """
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for perm in itertools.permutations(range(n)):
        vcycles = 0
        seen_v = set()
        for v in range(n):
            if v not in seen_v:
                vcycles += 1
                w = v
                while w not in seen_v:
                    seen_v.add(w)
                    w = perm[w]
        for bits in range(2 ** n):
            s = [-1 if bits >> i & 1 else 1 for i in range(n)]
            seen = set()
            fix = 1
            for p in pairs:
                if p in seen:
                    continue
                par, q = 1, p
                while True:
                    seen.add(q)
                    u, v = q
                    par *= s[u] * s[v]
                    a, b = perm[u], perm[v]
                    q = (min(a, b), max(a, b))
                    if q == p:
                        break
                fix *= 4 if par == 1 else 2
            if loops:
                fix *= 4 ** vcycles
            total += fix
    return total // (math.factorial(n) * 2 ** n)


def brute_switching_isomorphic(g: SignedGraph, h: SignedGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    target = sorted(h.edges)
    for perm in itertools.permutations(range(g.n)):
        for bits in range(2 ** g.n):
            s = [-1 if bits >> i & 1 else 1 for i in range(g.n)]
            img = sorted(
                (min(perm[u], perm[v]), max(perm[u], perm[v]), sig * s[u] * s[v]) for u, v, sig in g.edges
            )
            if img == target:
                return True
    return False


@pytest.fixture(scope="session")
def corpus5():
    from sgchroma.harness.corpus import enumerate_upto

    return list(enumerate_upto(5))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(capsys):
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number, ok: bool, text: str):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
