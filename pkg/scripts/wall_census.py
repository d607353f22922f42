"""Census of Wall parameters over several prime fields: stable parameters,
S4-orbit sizes, stabilizer orders and 24-point fibers.

    python3 scripts/wall_census.py [p ...]      (default: 13 17 29)
"""

import argparse
import time
from collections import Counter

from pencilgit import atlas
from pencilgit.fields import field_from_spec
from pencilgit.groups import stabilizer


def census(p: int) -> dict:
    F = field_from_spec("fp:%d" % p)
    line = atlas.projective_line(F)
    stable = [w for w in line if not w.in_fwall]
    orbits = {frozenset(atlas.s4_orbit_rho(w)) for w in stable}
    stab = Counter()
    fibers = Counter()
    for orbit in orbits:
        w = min(orbit, key=lambda x: x.sort_key())
        pencil = atlas.wall_pencil(w)
        st = stabilizer(pencil)
        stab[(len(orbit), st.order)] += 1
        fibers[len(atlas.phi_fiber(pencil))] += 1
    return {
        "p": p,
        "parameters": len(line),
        "stable": len(stable),
        "orbits (size, |Stab|) -> count": dict(stab),
        "phi fiber sizes": dict(fibers),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("primes", nargs="*", type=int, default=[13, 17, 29])
    args = ap.parse_args()
    print("| p | P^1 | stable | (orbit size, stabilizer order): count | fiber sizes | seconds |")
    print("|---|---|---|---|---|---|")
    for p in args.primes:
        if p % 4 != 1:
            print("| %d | skipped: needs p = 1 mod 4 for the D4 and S4 matrices |" % p)
            continue
        t = time.perf_counter()
        c = census(p)
        print(
            "| %d | %d | %d | %s | %s | %.1f |"
            % (p, c["parameters"], c["stable"], c["orbits (size, |Stab|) -> count"], c["phi fiber sizes"], time.perf_counter() - t)
        )


if __name__ == "__main__":
    main()
