"""Bounded-order scans over exhaustive or seeded random corpora.

A check is a pure function of one corpus item returning
``(counterexample detail or None, stats, counters)``.  Stats are maximised per
order and the first graph reaching each maximum is kept as an extremal
witness; counters are summed.  Items are evaluated in corpus order (in chunks,
optionally on worker processes) and merged in that order, so records are
identical regardless of parallelism.
"""

from __future__ import annotations

import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator

from ..color import chi, chi_b
from ..core import (
    Graph,
    SignedGraph,
    is_balanced,
    max_positive_switching,
    minus,
    parse,
    switch,
    tilde,
    underlying,
)
from ..fraclp import chi_f, chi_fb
from ..minor import (
    CriticalDefect,
    has_clique_minor,
    has_even_odd_minor,
    has_ktilde_minor,
    has_ktilde_subdivision,
    has_odd_minor,
    negative_path_dichotomy,
    subdivision_to_minor,
    verify_certificate,
    verify_dichotomy,
    verify_even_odd,
)
from ..quotient import balanced_quotient, verify_quotient
from ..witness import rational
from .corpus import SIGNED_BOUND, UNSIGNED_BOUND, enumerate_all, unsigned_graphs
from .generators import RandomParams, random_signed

RECORD_VERSION = 1
LABEL = "bounded-order estimates"
CHUNK = 256
MAX_LISTED = 50
PRNG = "random.Random (MT19937)"


@dataclass(frozen=True)
class ScanSpec:
    check: str
    n: int
    t: int = 3
    corpus: str = "all"  # "all" or "random"
    seed: int = 0
    count: int = 1000

    def validate(self) -> None:
        if self.check not in CHECKS:
            raise ValueError(f"unknown check {self.check!r}; expected one of {sorted(CHECKS)}")
        c = CHECKS[self.check]
        if self.corpus not in ("all", "random") or (self.corpus == "all" and not c.exhaustive):
            raise ValueError(f"check {self.check} does not support corpus {self.corpus!r}")
        bound = c.bound if self.corpus == "all" else c.random_bound
        if not 1 <= self.n <= bound:
            raise ValueError(f"check {self.check} needs 1 <= n <= {bound} on corpus {self.corpus}")
        if not c.t_range[0] <= self.t <= c.t_range[1]:
            raise ValueError(f"check {self.check} needs {c.t_range[0]} <= t <= {c.t_range[1]}")
        if self.corpus == "random" and self.count < 0:
            raise ValueError("count must be non-negative")


@dataclass
class OrderRow:
    order: int
    checked: int = 0
    counterexamples: int = 0
    counters: dict[str, int] = field(default_factory=dict)
    maxima: dict[str, str] = field(default_factory=dict)


@dataclass
class ExtremalRecord:
    check: str
    kind: str  # "theorem" or "conjecture"
    claim: str
    t: int
    n: int
    corpus: dict[str, Any]
    rows: list[OrderRow] = field(default_factory=list)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    extrema: list[dict[str, Any]] = field(default_factory=list)
    label: str = LABEL
    version: int = RECORD_VERSION

    @property
    def graphs_checked(self) -> int:
        return sum(r.checked for r in self.rows)

    @property
    def counterexample_count(self) -> int:
        return sum(r.counterexamples for r in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ExtremalRecord":
        d = dict(d)
        d["rows"] = [OrderRow(**r) for r in d.get("rows", [])]
        return cls(**d)


# -- per-item evaluators --------------------------------------------------------

Outcome = tuple[str | None, dict[str, Any], dict[str, int]]


def _signed_hadwiger(g: SignedGraph, t: int) -> Outcome:
    k, _ = chi_b(g)
    cert = has_ktilde_minor(g, t)
    if cert is not None and verify_certificate(g, cert):
        return f"minor certificate rejected: {verify_certificate(g, cert)}", {}, {}
    if cert is None:
        detail = f"chi_b={k} >= {t} but no K~_{t} minor" if k >= t else None
        return detail, {"max_chi_b_minor_free": k}, {"minor_free": 1}
    return None, {}, {}


def _odd_relation(G: Graph, t: int) -> Outcome:
    c = chi(G)
    b, _ = chi_b(minus(G))
    detail = None if b == math.ceil(c / 2) else f"chi={c}, chi_b(G,-)={b}"
    stats: dict[str, Any] = {"max_chi": c}
    counters = {}
    if has_odd_minor(minus(G), t) is None:
        stats["max_chi_odd_minor_free"] = c
        counters["odd_minor_free"] = 1
        if c >= t:
            counters["odd_hadwiger_counterexamples"] = 1
    return detail, stats, counters


def _even_odd(G: Graph, t: int) -> Outcome:
    cert = has_even_odd_minor(G, t)
    if cert is None:
        return None, {"max_chi_even_odd_free": chi(G)}, {"even_odd_free": 1}
    bad = verify_even_odd(G, cert)
    if bad:
        return f"even-odd certificate rejected: {bad}", {}, {}
    if G.n == 2 * t - 2 and len(G.edges) == G.n * (G.n - 1) // 2:
        return f"K_{G.n} has an even-odd K_{t} minor", {}, {}
    if has_odd_minor(minus(G), t) is None:
        return "even-odd minor without an odd minor", {}, {}
    return None, {}, {}


def _fractional_bound(g: SignedGraph, t: int) -> Outcome:
    if has_ktilde_minor(g, t) is not None:
        return None, {}, {}
    f, _ = chi_fb(g)
    detail = f"chi_fb={f} > {2 * t - 2}" if f > 2 * t - 2 else None
    return detail, {"max_chi_fb_minor_free": f}, {"minor_free": 1}


def _subdivision_table(g: SignedGraph, t: int) -> Outcome:
    cert = has_ktilde_subdivision(g, t)
    if cert is None:
        k, _ = chi_b(g)
        return None, {"max_chi_b_subdivision_free": k}, {"subdivision_free": 1}
    bad = verify_certificate(g, cert)
    if bad:
        return f"subdivision certificate rejected: {bad}", {}, {}
    bad = verify_certificate(g, subdivision_to_minor(g, cert))
    if bad:
        return f"derived minor certificate rejected: {bad}", {}, {}
    if has_ktilde_minor(g, t) is None:
        return "subdivision found but minor search found none", {}, {}
    return None, {}, {"with_subdivision": 1}


def _quotient_audit(g: SignedGraph, t: int) -> Outcome:
    q = balanced_quotient(g)
    bad = verify_quotient(g, q)
    if bad:
        return f"quotient rejected: {bad}", {}, {}
    H = underlying(q.quotient)
    for k in range(2, t + 1):
        if (has_ktilde_minor(q.quotient, k) is not None) != has_clique_minor(H, k):
            return f"K~_{k} transfer fails on the quotient", {}, {}
    a, _ = chi_b(g)
    b, _ = chi_b(q.quotient)
    counters = {"steps": len(q.contraction_trace)}
    if b < a:
        return f"homomorphic image has chi_b={b} < chi_b(g)={a}", {}, counters
    if b > a:
        counters["image_exceeds_source"] = 1
        return f"chi_b(quotient)={b} > chi_b(g)={a}", {"max_chi_b_quotient": b}, counters
    return None, {"max_chi_b_quotient": b}, counters


def _tilde_identity(G: Graph, t: int) -> Outcome:
    c = chi(G)
    b, _ = chi_b(tilde(G))
    return (None if b == c else f"chi={c}, chi_b(tilde)={b}"), {"max_chi": c}, {}


def _fractional_identity(G: Graph, t: int) -> Outcome:
    a = chi_f(G)
    b, _ = chi_fb(tilde(G))
    return (None if a == b else f"chi_f={a}, chi_fb(tilde)={b}"), {"max_chi_f": a}, {}


def _spanning_balanced(g: SignedGraph, t: int) -> Outcome:
    s, H = max_positive_switching(g)
    for v in range(g.n):
        if 2 * H.degree(v) < g.degree(v):
            return f"vertex {v}: d_H={H.degree(v)} < d_G/2={g.degree(v)}/2", {}, {}
    res = is_balanced(H)
    if not res or any(x != 1 for x in res.switching):
        return "positive subgraph is not switched all-positive", {}, {}
    sw = switch(g, s)
    if sorted(e for e in sw.edges if e[0] != e[1] and e[2] > 0) != sorted(H.edges):
        return "subgraph is not the positive part of the switched graph", {}, {}
    return None, {"max_degree": max((g.degree(v) for v in range(g.n)), default=0)}, {}


def _dichotomy(item: tuple[SignedGraph, tuple[int, ...], int], t: int) -> Outcome:
    g, H, k = item
    try:
        res = negative_path_dichotomy(g, H, k)
    except CriticalDefect as exc:
        return f"critical defect: {exc}", {}, {}
    bad = verify_dichotomy(g, H, res)
    if bad:
        return f"dichotomy result rejected: {bad}", {}, {}
    branch = "path_branch" if res.paths is not None else "hitting_branch"
    return None, {}, {branch: 1}


@dataclass(frozen=True)
class Check:
    evaluate: Callable[[Any, int], Outcome]
    domain: str  # "signed", "unsigned" or "dichotomy"
    kind: str
    claim: str
    bound: int
    random_bound: int
    t_range: tuple[int, int] = (1, 4)
    exhaustive: bool = True


CHECKS: dict[str, Check] = {
    "signed-hadwiger": Check(
        _signed_hadwiger, "signed", "conjecture",
        "chi_b >= t forces a K~_t minor; max chi_b over K~_t-minor-free graphs", SIGNED_BOUND, 9, (1, 5)),
    "odd-relation": Check(
        _odd_relation, "unsigned", "theorem",
        "chi_b(G,-) = ceil(chi(G)/2); odd K_t minors of (G,-) tabulated", UNSIGNED_BOUND, 9, (1, 5)),
    "even-odd": Check(
        _even_odd, "unsigned", "theorem",
        "K_{2t-2} has no even-odd K_t minor; even-odd K_t minors are odd K_t minors", UNSIGNED_BOUND, 9, (2, 5)),
    "fractional-bound": Check(
        _fractional_bound, "signed", "theorem",
        "no K~_t minor implies chi_fb <= 2t-2", SIGNED_BOUND, 9, (1, 5)),
    "subdivision-table": Check(
        _subdivision_table, "signed", "theorem",
        "a K~_t subdivision yields a verified K~_t minor; max chi_b over subdivision-free graphs",
        SIGNED_BOUND, 9, (1, 4)),
    "quotient-audit": Check(
        _quotient_audit, "signed", "theorem",
        "balanced quotient is a verified minor and homomorphic image with digons on adjacent pairs; "
        "audited inequality chi_b(quotient) <= chi_b(g)", SIGNED_BOUND, 9, (1, 4)),
    "tilde-identity": Check(
        _tilde_identity, "unsigned", "theorem", "chi(G) = chi_b(G~)", UNSIGNED_BOUND, 10),
    "fractional-identity": Check(
        _fractional_identity, "unsigned", "theorem", "chi_f(G) = chi_fb(G~)", UNSIGNED_BOUND, 10),
    "spanning-balanced": Check(
        _spanning_balanced, "signed", "theorem",
        "some switching leaves a balanced spanning subgraph with d_H(v) >= d_G(v)/2",
        0, 30, exhaustive=False),
    "dichotomy": Check(
        _dichotomy, "dichotomy", "theorem",
        "k disjoint negative H-paths or at most 2k-2 vertices meeting all of them",
        0, 10, (1, 3), exhaustive=False),
}


# -- corpora ----------------------------------------------------------------------


def _random_items(spec: ScanSpec, domain: str) -> Iterator[Any]:
    rng = random.Random(spec.seed)
    lo = 2 if domain == "dichotomy" else 1
    for _ in range(spec.count):
        n = rng.randint(lo, spec.n)
        params = RandomParams(
            n=n,
            p=rng.uniform(0.2, 0.8),
            q=0.5,
            digon=0.0 if domain == "unsigned" else rng.uniform(0.0, 0.3),
            seed=rng.getrandbits(32),
        )
        g = random_signed(params)
        if domain == "unsigned":
            yield underlying(g)
        elif domain == "dichotomy":
            H = tuple(sorted(rng.sample(range(n), rng.randint(1, n))))
            k = rng.randint(1, spec.t)
            # H must be connected through positive edges
            path = tuple((a, b, 1) for a, b in zip(H, H[1:]))
            yield SignedGraph(n, g.edges + path), H, k
        else:
            yield g


def corpus_items(spec: ScanSpec) -> Iterator[Any]:
    domain = CHECKS[spec.check].domain
    if spec.corpus == "random":
        yield from _random_items(spec, domain)
    elif domain == "unsigned":
        yield from unsigned_graphs(spec.n)
    else:
        for k in range(1, spec.n + 1):
            yield from enumerate_all(k)


def _order(item: Any) -> int:
    return item[0].n if isinstance(item, tuple) else item.n


def item_payload(item: Any) -> dict[str, Any]:
    if isinstance(item, tuple):
        g, H, k = item
        return {"graph": g.to_text(), "H": list(H), "k": k}
    if isinstance(item, Graph):
        return {"graph": SignedGraph(item.n, tuple((u, v, 1) for u, v in item.edges)).to_text()}
    return {"graph": item.to_text()}


def item_from_payload(check: str, payload: dict[str, Any]) -> Any:
    g = parse(payload["graph"])
    domain = CHECKS[check].domain
    if domain == "unsigned":
        return underlying(g)
    if domain == "dichotomy":
        return g, tuple(payload["H"]), payload["k"]
    return g


# -- evaluation and merge ----------------------------------------------------------


def _jsonable(stats: dict[str, Any]) -> dict[str, str]:
    return {k: rational(v) for k, v in sorted(stats.items())}


def _eval_chunk(check: str, t: int, items: list[Any]) -> list[list[Any]]:
    ev = CHECKS[check].evaluate
    out = []
    for item in items:
        detail, stats, counters = ev(item, t)
        out.append([_order(item), detail, _jsonable(stats), dict(sorted(counters.items()))])
    return out


def _chunks(items: Iterator[Any], size: int) -> Iterator[list[Any]]:
    chunk = []
    for it in items:
        chunk.append(it)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def default_workers() -> int:
    env = os.environ.get("SGCHROMA_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(int(env), cap))
        except ValueError:
            pass
    return 1


def _checkpoint_path(root: Path, spec: ScanSpec) -> Path:
    name = f"{spec.check}-t{spec.t}-n{spec.n}-{spec.corpus}"
    if spec.corpus == "random":
        name += f"-s{spec.seed}-c{spec.count}"
    return root / name


def run_scan(spec: ScanSpec, workers: int | None = None, checkpoint_dir: str | Path | None = None) -> ExtremalRecord:
    spec.validate()
    check = CHECKS[spec.check]
    workers = default_workers() if workers is None else max(1, workers)
    chunks = list(_chunks(corpus_items(spec), CHUNK))

    ckpt = _checkpoint_path(Path(checkpoint_dir), spec) if checkpoint_dir else None
    results: list[list[list[Any]] | None] = [None] * len(chunks)
    if ckpt is not None:
        ckpt.mkdir(parents=True, exist_ok=True)
        for i in range(len(chunks)):
            f = ckpt / f"chunk-{i:05d}.json"
            if f.exists():
                results[i] = json.loads(f.read_text())
    todo = [i for i, r in enumerate(results) if r is None]

    def store(i: int, res: list[list[Any]]) -> None:
        results[i] = res
        if ckpt is not None:
            tmp = ckpt / f"chunk-{i:05d}.tmp"
            tmp.write_text(json.dumps(res, sort_keys=True))
            tmp.replace(ckpt / f"chunk-{i:05d}.json")

    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [ex.submit(_eval_chunk, spec.check, spec.t, chunks[i]) for i in todo]
            for i, fut in zip(todo, futs):
                store(i, fut.result())
    else:
        for i in todo:
            store(i, _eval_chunk(spec.check, spec.t, chunks[i]))

    corpus: dict[str, Any] = {"kind": spec.corpus}
    if spec.corpus == "random":
        corpus.update(seed=spec.seed, count=spec.count, prng=PRNG)
    record = ExtremalRecord(spec.check, check.kind, check.claim, spec.t, spec.n, corpus)
    rows: dict[int, OrderRow] = {}
    best: dict[tuple[str, int], tuple[Fraction, dict[str, Any]]] = {}
    for chunk, res in zip(chunks, results):
        for item, (order, detail, stats, counters) in zip(chunk, res):
            row = rows.setdefault(order, OrderRow(order))
            row.checked += 1
            for k, v in counters.items():
                row.counters[k] = row.counters.get(k, 0) + v
            if detail is not None:
                row.counterexamples += 1
                if len(record.counterexamples) < MAX_LISTED:
                    record.counterexamples.append({"order": order, "detail": detail, **item_payload(item)})
            for name, value in stats.items():
                val = Fraction(value)
                key = (name, order)
                if key not in best or val > best[key][0]:
                    best[key] = (val, item_payload(item))
    for (name, order), (val, payload) in sorted(best.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        rows[order].maxima[name] = rational(val)
        record.extrema.append({"name": name, "order": order, "value": rational(val), **payload})
    record.rows = [rows[k] for k in sorted(rows)]
    for row in record.rows:
        row.counters = dict(sorted(row.counters.items()))
    return record


def reverify_extrema(record: ExtremalRecord) -> list[str]:
    """Re-evaluate every stored extremal graph; returns the failures."""
    failures = []
    for e in record.extrema:
        item = item_from_payload(record.check, e)
        _, stats, _ = CHECKS[record.check].evaluate(item, record.t)
        got = stats.get(e["name"])
        if got is None or rational(got) != e["value"]:
            failures.append(f"{e['name']} at order {e['order']}: stored {e['value']}, got {got}")
    return failures
