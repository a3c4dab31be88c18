"""How the balanced quotient depends on the order in which sets are collapsed.

For every class up to the given order, compare chi_b of the source with the
lexicographic quotient and with several random-order quotients.
"""

import random
import sys
from collections import Counter

from sgchroma.color import chi_b
from sgchroma.harness.corpus import enumerate_upto
from sgchroma.quotient import balanced_quotient, verify_quotient

if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    rng = random.Random(0)
    relation = Counter()
    order_dependent = 0
    for g in enumerate_upto(top):
        a = chi_b(g)[0]
        values = set()
        for trial in range(6):
            q = balanced_quotient(g, rng=None if trial == 0 else rng)
            assert verify_quotient(g, q) is None
            b = chi_b(q.quotient)[0]
            values.add(b)
            relation["equal" if a == b else "image larger" if b > a else "image smaller"] += 1
        order_dependent += len(values) > 1
    print(dict(relation))
    print(f"classes whose quotient chi_b depends on the collapse order: {order_dependent}")
