"""Exhaustive corpora: one representative per switching-isomorphism class.

Signed graphs of order ``n`` are grown one vertex at a time from the classes
of order ``n - 1`` and deduplicated with :func:`canonical_form`.  Results are
cached as sorted hex canonical forms under ``$SGCHROMA_CACHE`` (default
``~/.cache/sgchroma``) so later runs resume from disk.
"""

from __future__ import annotations

import itertools
import os
from pathlib import Path
from typing import Iterator

import networkx as nx

from ..core import BoundExceeded, Graph, SignedGraph, canonical_form, from_canonical

SIGNED_BOUND = 6
UNSIGNED_BOUND = 7

# pair states: absent, positive, negative, digon
_PAIR_STATES = ((), (1,), (-1,), (1, -1))
_LOOP_STATES = ((), (1,), (-1,), (1, -1))


def cache_dir() -> Path:
    root = os.environ.get("SGCHROMA_CACHE")
    return Path(root) if root else Path.home() / ".cache" / "sgchroma"


def _cache_path(n: int, loops: bool) -> Path:
    return cache_dir() / f"signed-n{n}-{'loops' if loops else 'noloops'}-v1.txt"


def _extensions(n: int, loops: bool) -> Iterator[tuple[tuple[int, int, int], ...]]:
    """Edge sets joining a new vertex ``n - 1`` to ``0..n-2``.

    Switching the new vertex swaps + and -, so the first single edge is kept
    positive.
    """
    new = n - 1
    loop_states = _LOOP_STATES if loops else ((),)
    for states in itertools.product(range(4), repeat=new):
        first_single = next((st for st in states if st in (1, 2)), None)
        if first_single == 2:
            continue
        edges = tuple((u, new, s) for u, st in enumerate(states) for s in _PAIR_STATES[st])
        for ls in loop_states:
            yield edges + tuple((new, new, s) for s in ls)


def _classes(n: int, loops: bool) -> list[bytes]:
    path = _cache_path(n, loops)
    if path.exists():
        return [bytes.fromhex(line) for line in path.read_text().split()]
    if n == 0:
        forms = [canonical_form(SignedGraph(0))]
    else:
        seen = set()
        for base in _classes(n - 1, loops):
            g = from_canonical(base)
            for ext in _extensions(n, loops):
                seen.add(canonical_form(SignedGraph(n, g.edges + ext), bound=SIGNED_BOUND))
        forms = sorted(seen)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("\n".join(f.hex() for f in forms) + "\n")
        tmp.replace(path)
    except OSError:
        pass  # read-only home: recompute next time
    return forms


def enumerate_all(n: int, loops: bool = False) -> Iterator[SignedGraph]:
    """Signed graphs of order exactly ``n`` with pair states {none, +, -, digon}
    (and, with ``loops``, loop states {none, +, -, both}), one per
    switching-isomorphism class, in sorted canonical order."""
    if n > SIGNED_BOUND:
        raise BoundExceeded(f"signed enumeration limited to n <= {SIGNED_BOUND}")
    if n < 0:
        raise ValueError("negative order")
    for code in _classes(n, loops):
        yield from_canonical(code)


def class_count(n: int, loops: bool = False) -> int:
    if n > SIGNED_BOUND:
        raise BoundExceeded(f"signed enumeration limited to n <= {SIGNED_BOUND}")
    return len(_classes(n, loops))


def enumerate_upto(n: int, loops: bool = False) -> Iterator[SignedGraph]:
    for k in range(1, n + 1):
        yield from enumerate_all(k, loops)


def unsigned_graphs(n: int) -> Iterator[Graph]:
    """All simple graphs of order ``1..n`` up to isomorphism (networkx atlas)."""
    if n > UNSIGNED_BOUND:
        raise BoundExceeded(f"unsigned corpus limited to n <= {UNSIGNED_BOUND}")
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= n:
            yield Graph.from_networkx(G)
