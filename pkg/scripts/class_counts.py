"""Count switching-isomorphism classes of signed simple graphs per order."""

import sys
import time

from sgchroma.harness.corpus import class_count

if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    for n in range(1, top + 1):
        start = time.time()
        print(f"n={n}  classes={class_count(n)}  ({time.time() - start:.1f}s)")
