"""Compare tree branch sets against strict (all-internal-positive) branch sets.

Lists, per order, the classes with a K~_t minor under tree semantics but
none when every internal edge of a branch set must be positive.
"""

import sys

from sgchroma.harness.corpus import enumerate_all
from sgchroma.minor import has_ktilde_minor

if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for t in (2, 3):
        for n in range(t, top + 1):
            total = diff = 0
            example = None
            for g in enumerate_all(n):
                total += 1
                if has_ktilde_minor(g, t) is not None and has_ktilde_minor(g, t, strict=True) is None:
                    diff += 1
                    example = example or g
            print(f"t={t} n={n}: {diff}/{total} classes differ")
            if example is not None:
                print("  e.g.", example.to_text().replace("\n", " | "))
