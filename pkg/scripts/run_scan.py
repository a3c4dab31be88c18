"""Run one bounded-order scan and write the report next to a checkpoint directory.

    python3 scripts/run_scan.py --check signed-hadwiger --t 3 --n 6 --out results/
"""

import argparse
import time
from pathlib import Path

from sgchroma.harness.report import report
from sgchroma.harness.scan import CHECKS, ScanSpec, run_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", required=True, choices=sorted(CHECKS))
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()

    corpus = "random" if args.seed is not None else "all"
    spec = ScanSpec(args.check, args.n, args.t, corpus, args.seed or 0, args.count)
    spec.validate()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    start = time.time()
    record = run_scan(spec, workers=args.workers, checkpoint_dir=out / "checkpoints")
    stem = f"{args.check}-t{args.t}-n{args.n}-{corpus}"
    for fmt in ("json", "csv", "text"):
        (out / f"{stem}.{fmt if fmt != 'text' else 'txt'}").write_bytes(report(record, fmt))
    print(report(record, "text").decode(), end="")
    print(f"[{time.time() - start:.1f}s]")


if __name__ == "__main__":
    main()
