"""How I' and J change under a GL2 representative of a PGL2 element: the
exponents k with I'(A.p) = det(A)^k I'(p) that are consistent with every
random sample.

    python3 scripts/invariant_weight.py [--field fp:13] [--samples N]
"""

import argparse
import random

from pencilgit.fields import field_from_spec
from pencilgit.forms import LinearlyDependent, pencil_from_coeffs
from pencilgit.groups import act_plucker, pgl2_elements
from pencilgit.invariants import invariants_of_plucker


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", default="fp:13")
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    F = field_from_spec(args.field)
    rng = random.Random(args.seed)
    elems = pgl2_elements(F)
    span = F.order - 1  # exponents only matter modulo the order of F*
    consistent = {"Iprime": set(range(-span, span + 1)), "J": set(range(-span, span + 1))}
    n = 0
    while n < args.samples:
        try:
            p = pencil_from_coeffs(F, [rng.randrange(F.order) for _ in range(4)], [rng.randrange(F.order) for _ in range(4)])
        except LinearlyDependent:
            continue
        A = rng.choice(elems)
        base = invariants_of_plucker(p.plucker())
        moved = invariants_of_plucker(act_plucker(A.rows, p))
        for key, ks in consistent.items():
            b, m = getattr(base, key), getattr(moved, key)
            ks &= {k for k in ks if m == b * A.det**k}
        n += 1
    for key, ks in consistent.items():
        print("%s: det exponents consistent with %d samples: %s" % (key, n, sorted(ks)))


if __name__ == "__main__":
    main()
