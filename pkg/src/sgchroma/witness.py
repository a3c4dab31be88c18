"""JSON shape shared by every witness and certificate.

Each object is a dict with a ``"type"`` tag plus its fields.  Vertex sets are
lists, switchings are lists of +1/-1, rationals are ``"p/q"`` strings and
fractional weightings are lists of ``[set, weight]`` pairs.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

from .color import BalancedCover, CircularColoring, HomToKtildePlus, ZeroFreeColoring
from .core import NegativeCycle, SignedGraph
from .fraclp import RationalWeighting
from .minor import (
    DichotomyResult,
    EvenOddCertificate,
    MinorCertificate,
    SubdivisionCertificate,
)
from .quotient import QuotientResult

_TYPES = {
    cls.__name__: cls
    for cls in (
        BalancedCover,
        CircularColoring,
        HomToKtildePlus,
        ZeroFreeColoring,
        NegativeCycle,
        RationalWeighting,
        DichotomyResult,
        EvenOddCertificate,
        MinorCertificate,
        SubdivisionCertificate,
        QuotientResult,
    )
}


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str | int) -> Fraction:
    return Fraction(s)


def _enc(x: Any) -> Any:
    if isinstance(x, SignedGraph):
        return {"type": "SignedGraph", "n": x.n, "edges": [list(e) for e in x.edges]}
    if isinstance(x, RationalWeighting):
        return {
            "type": "RationalWeighting",
            "weights": [[list(S), rational(w)] for S, w in x.weights.items()],
            "objective": rational(x.objective),
            "dual": [rational(y) for y in x.dual],
        }
    if dataclasses.is_dataclass(x):
        out = {"type": type(x).__name__}
        for f in dataclasses.fields(x):
            out[f.name] = _enc(getattr(x, f.name))
        return out
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    return x


def _tup(x: Any) -> Any:
    if isinstance(x, list):
        return tuple(_tup(v) for v in x)
    return x


def to_json(obj: Any) -> dict:
    return _enc(obj)


def from_json(d: dict) -> Any:
    kind = d["type"]
    if kind == "SignedGraph":
        return SignedGraph(d["n"], tuple(tuple(e) for e in d["edges"]))
    if kind == "RationalWeighting":
        return RationalWeighting(
            {tuple(S): Fraction(w) for S, w in d["weights"]},
            Fraction(d["objective"]),
            tuple(Fraction(y) for y in d["dual"]),
        )
    if kind == "CircularColoring":
        return CircularColoring(Fraction(d["r"]), tuple(Fraction(p) for p in d["phi"]))
    if kind == "QuotientResult":
        return QuotientResult(
            from_json(d["quotient"]),
            tuple(d["fiber_map"]),
            tuple((tuple(X), tuple(s)) for X, s in d["contraction_trace"]),
            tuple(d["loop_flags"]),
            tuple(d["switching"]),
        )
    cls = _TYPES[kind]
    kwargs = {f.name: _tup(d[f.name]) for f in dataclasses.fields(cls) if f.name in d}
    return cls(**kwargs)


def dumps(obj: Any) -> str:
    return json.dumps(to_json(obj), sort_keys=True)


def loads(s: str) -> Any:
    return from_json(json.loads(s))
