"""Stabilizer orders of the non-stable orbit representatives over F_p against
the point counts of their isotropy groups, plus how often the two listed
closure relations for Z2_2 hold on random stable pencils.

    python3 scripts/isotropy_counts.py [p ...]  (default: 13 17)
"""

import argparse
import random

from pencilgit import atlas
from pencilgit.fields import field_from_spec
from pencilgit.forms import LinearlyDependent, pencil_from_coeffs
from pencilgit.groups import stabilizer
from pencilgit.invariants import StabilityClass, classify_stability


def relation_rate(F, p: int, n: int, rng: random.Random) -> tuple:
    hits = total = 0
    while total < n:
        try:
            pen = pencil_from_coeffs(F, [rng.randrange(p) for _ in range(4)], [rng.randrange(p) for _ in range(4)])
        except LinearlyDependent:
            continue
        if classify_stability(pen) is StabilityClass.STABLE:
            total += 1
            hits += atlas.closure_predicates("Z2_2", pen.plucker())
    return hits, total


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("primes", nargs="*", type=int, default=[13, 17])
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for p in args.primes:
        F = field_from_spec("fp:%d" % p)
        print("F_%d" % p)
        for label in atlas.NONSTABLE_LABELS:
            name, count = atlas.ISOTROPY[label]
            got = stabilizer(atlas.representative(label, F)).order
            flag = "ok" if got == count(p) else "MISMATCH"
            print("  %-5s %-6s expected %5d  found %5d  %s" % (label, name, count(p), got, flag))
        hits, total = relation_rate(F, p, args.samples, rng)
        print("  Z2_2 relations hold on %d of %d random stable pencils (%.3f)" % (hits, total, hits / total))


if __name__ == "__main__":
    main()
