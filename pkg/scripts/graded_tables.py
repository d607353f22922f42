"""Graded pieces of every built-in presentation, degree by degree, as
abelian groups.

    python3 scripts/graded_tables.py [--bound D]
"""

import argparse

from pencilgit import chow


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=8)
    args = ap.parse_args()
    header = "| presentation | " + " | ".join(str(d) for d in range(args.bound + 1)) + " |"
    print(header)
    print("|" + "---|" * (args.bound + 2))
    for name in chow.BUILTIN_NAMES:
        pres = chow.builtin(name)
        cells = [chow.graded_piece(pres, d).describe() for d in range(args.bound + 1)]
        print("| %s | %s |" % (name, " | ".join(cells)))


if __name__ == "__main__":
    main()
