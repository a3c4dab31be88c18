"""Deterministic graph families.

Random graphs use :class:`random.Random` (Mersenne Twister) seeded explicitly,
so the same parameters always give the same graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..core import Graph, SignedGraph, minus, tilde

FAMILIES = ("tilde", "minus", "complete", "cycle", "path", "random")


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((min(v, (v + 1) % n), max(v, (v + 1) % n)) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((v, v + 1) for v in range(n - 1)))


_BASES = {"complete": complete_graph, "cycle": cycle_graph, "path": path_graph}


def base_graph(spec: str) -> Graph:
    """``"complete:4"``, ``"cycle:5"`` or ``"path:3"``."""
    try:
        name, n = spec.split(":")
        return _BASES[name](int(n))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad base graph {spec!r}") from exc


def _signed(G: Graph, sign: str) -> SignedGraph:
    if sign == "+":
        return SignedGraph(G.n, tuple((u, v, 1) for u, v in G.edges))
    if sign == "-":
        return minus(G)
    if sign == "tilde":
        return tilde(G)
    raise ValueError(f"sign must be '+', '-' or 'tilde', got {sign!r}")


@dataclass(frozen=True)
class RandomParams:
    n: int
    p: float = 0.5  # edge probability per pair
    q: float = 0.5  # probability that an edge is negative
    digon: float = 0.0  # probability that a present pair is a digon
    seed: int = 0


def random_signed(params: RandomParams) -> SignedGraph:
    if params.n < 0 or not all(0 <= x <= 1 for x in (params.p, params.q, params.digon)):
        raise ValueError(f"invalid random parameters {params}")
    rng = random.Random(params.seed)
    edges = []
    for u in range(params.n):
        for v in range(u + 1, params.n):
            if rng.random() >= params.p:
                continue
            if rng.random() < params.digon:
                edges += [(u, v, 1), (u, v, -1)]
            else:
                edges.append((u, v, -1 if rng.random() < params.q else 1))
    return SignedGraph(params.n, tuple(edges))


def generate(family: str, **params) -> SignedGraph:
    """Build a member of ``family``.

    tilde/minus take ``base`` (e.g. ``"cycle:5"``); complete/cycle/path take
    ``n`` and ``sign`` in {"+", "-", "tilde"}; random takes the fields of
    :class:`RandomParams`.
    """
    if family in ("tilde", "minus"):
        G = base_graph(params["base"])
        return tilde(G) if family == "tilde" else minus(G)
    if family in _BASES:
        return _signed(_BASES[family](int(params["n"])), params.get("sign", "+"))
    if family == "random":
        return random_signed(RandomParams(**params))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
