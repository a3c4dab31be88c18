"""Versioned serialization of scan records.

CSV columns (fixed): check, t, n, corpus, order, checked, counterexamples,
counters, maxima.  ``counters`` and ``maxima`` are ``name=value`` lists joined
by ``;``.  One row per order plus a final ``total`` row.
"""

from __future__ import annotations

import csv
import io
import json

from .scan import ExtremalRecord, reverify_extrema

CSV_COLUMNS = ("check", "t", "n", "corpus", "order", "checked", "counterexamples", "counters", "maxima")


class ReportError(ValueError):
    pass


def _kv(d: dict, sep: str = ";") -> str:
    return sep.join(f"{k}={v}" for k, v in sorted(d.items()))


def _pretty(d: dict) -> dict:
    return {k: v[:-2] if isinstance(v, str) and v.endswith("/1") else v for k, v in d.items()}


def _corpus_label(record: ExtremalRecord) -> str:
    c = record.corpus
    if c.get("kind") == "random":
        return f"random(seed={c['seed']},count={c['count']})"
    return c.get("kind", "")


def report(record: ExtremalRecord, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(record.to_dict(), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        head = [record.check, record.t, record.n, _corpus_label(record)]
        totals: dict[str, int] = {}
        for row in record.rows:
            w.writerow(head + [row.order, row.checked, row.counterexamples, _kv(row.counters), _kv(row.maxima)])
            for k, v in row.counters.items():
                totals[k] = totals.get(k, 0) + v
        w.writerow(head + ["total", record.graphs_checked, record.counterexample_count, _kv(totals), ""])
        return buf.getvalue().encode()
    if fmt == "text":
        lines = [
            f"check: {record.check} ({record.kind})",
            f"claim: {record.claim}",
            f"t = {record.t}, orders 1..{record.n}, corpus {_corpus_label(record)}",
            f"{record.label}: {record.graphs_checked} graphs, {record.counterexample_count} counterexamples",
        ]
        if record.corpus.get("prng"):
            lines.append(f"prng: {record.corpus['prng']}")
        for row in record.rows:
            extra = "  ".join(x for x in (_kv(_pretty(row.maxima), " "), _kv(row.counters, " ")) if x)
            lines.append(f"  order {row.order}: checked {row.checked}, counterexamples {row.counterexamples}"
                         + (f"  {extra}" if extra else ""))
        for c in record.counterexamples:
            lines.append(f"  counterexample (order {c['order']}): {c['detail']}")
        return ("\n".join(lines) + "\n").encode()
    raise ReportError(f"unknown format {fmt!r}")


def load(data: bytes | str, reverify: bool = True) -> ExtremalRecord:
    d = json.loads(data)
    if d.get("version") != 1:
        raise ReportError(f"unsupported record version {d.get('version')!r}")
    record = ExtremalRecord.from_dict(d)
    if reverify:
        bad = reverify_extrema(record)
        if bad:
            raise ReportError("extremal graphs failed re-verification: " + "; ".join(bad))
    return record
