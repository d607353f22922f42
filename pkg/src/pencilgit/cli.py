"""Command-line interface.

Exit codes: 0 success, 1 failed checks or a domain error, 2 usage or parse
errors.  With --json every command prints a report in the verify-all schema.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import atlas, characters, chow
from .fields import FieldError, ParseError, field_from_spec
from .forms import FormError, ProjectivePoint
from .groups import GroupError, stabilizer
from .invariants import classify_stability, invariants_of_plucker
from .verify import PASS, CheckRecord, Report, VerifyConfig, jsonable, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--field", default=d("q"), help="q, fp:<p>, q(sqrt:<d>) or fp:<p>(sqrt:<d>)")
    p.add_argument("--json", action="store_true", default=d(False), help="print a JSON report")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--degree-bound", type=int, default=d(chow.DEFAULT_DEGREE_BOUND))
    p.add_argument("--out", default=d(None), help="also write the output to this file")


def _common() -> argparse.ArgumentParser:
    # flags are accepted before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    _add_common(p, suppress=True)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="pencilgit", description="Pencils of binary cubics: invariants, orbits, Chow rings.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    pencil_help = "f=[a0,a1,a2,a3];g=[b0,..] | plucker=[p01,..,p23] | wall:<rho> | rep:<label>"
    for name, text in (
        ("invariants", "I', J, the quotient point and the stability class"),
        ("classify", "orbit label"),
        ("wall-form", "g and rho with p = g . p_rho"),
        ("stabilizer", "stabilizer in PGL2 over a finite field"),
    ):
        add(name, text).add_argument("--pencil", required=True, help=pencil_help)

    fib = add("fiber", "parameters rho over a quotient point, or the 24-point fiber with --phi")
    fib.add_argument("--point", help="x:y in P^1")
    fib.add_argument("--pencil", help=pencil_help)
    fib.add_argument("--phi", action="store_true", help="list (B, rho) with B . p_rho = p")

    orb = add("orbit", "S4-orbit of a Wall parameter")
    orb.add_argument("--rho", required=True)

    ch = sub.add_parser("chow", help="graded rings over Z")
    csub = ch.add_subparsers(dest="chow_command", required=True, parser_class=_Parser)
    piece = csub.add_parser("piece", parents=[common], help="degree-d piece as an abelian group")
    piece.add_argument("name")
    piece.add_argument("degree", type=int)
    ideal = csub.add_parser("ideal", parents=[common], help="is a homogeneous element zero in the ring")
    ideal.add_argument("name")
    ideal.add_argument("element")
    ideal.add_argument("--extra", action="append", default=[], help="extra relation (repeatable)")
    vm = csub.add_parser("verify-map", parents=[common], help="check that a built-in map respects relations")
    vm.add_argument("map", choices=sorted(chow.BUILTIN_MAPS))
    show = csub.add_parser("show", parents=[common], help="print a built-in presentation")
    show.add_argument("name")

    chars = add("chars", "character table and decompositions")
    chars.add_argument("group", choices=sorted(characters._TABLES))

    va = add("verify-all", "run every acceptance check")
    va.add_argument("--only", action="append", default=[], metavar="ID", help="run checks whose id starts with ID")
    return parser


def _report_one(command: str, field: str, witness, ok: bool = True) -> Report:
    r = Report(command, field)
    r.checks.append(CheckRecord(command, "", PASS if ok else "fail", jsonable(witness)))
    return r


def _matrix(A) -> str:
    return "[[%s]]" % "], [".join(", ".join(str(jsonable(x)) for x in r) for r in A.rows)


def _field(args):
    return field_from_spec(args.field)


def cmd_invariants(args):
    F = _field(args)
    p, q = atlas.parse_pencil_with_plucker(args.pencil, F)
    inv = invariants_of_plucker(q)
    stab = classify_stability(p)
    lines = ["I' = %s" % inv.Iprime, "J = %s" % inv.J]
    w = {"Iprime": inv.Iprime, "J": inv.J, "stability": stab.value}
    if inv.Iprime or inv.J:
        pt = ProjectivePoint(F, (inv.Iprime**3, inv.J))
        lines.append("point = %s" % pt)
        w["point"] = pt
    lines.append(stab.value)
    return lines, w, True


def cmd_classify(args):
    label = atlas.classify_orbit(atlas.parse_pencil(args.pencil, _field(args)))
    return [str(label)], {"label": label}, True


def cmd_wall_form(args):
    g, rho = atlas.wall_normal_form(atlas.parse_pencil(args.pencil, _field(args)))
    return ["g = %s" % _matrix(g), "rho = %s" % rho], {"g": _matrix(g), "rho": rho}, True


def cmd_stabilizer(args):
    st = stabilizer(atlas.parse_pencil(args.pencil, _field(args)))
    profile = {str(k): v for k, v in sorted(st.profile.items())}
    lines = ["order %d" % st.order, "type %s" % st.label, "element orders %s" % profile]
    return lines, {"order": st.order, "type": st.label, "profile": profile}, True


def cmd_fiber(args):
    F = _field(args)
    if args.phi:
        if not args.pencil:
            raise UsageError("fiber --phi needs --pencil")
        fib = atlas.phi_fiber(atlas.parse_pencil(args.pencil, F))
        lines = ["%d points" % len(fib)] + ["%s  rho=%s" % (_matrix(B), r) for B, r in fib]
        return lines, {"size": len(fib), "points": [[_matrix(B), r] for B, r in fib]}, True
    if args.point:
        parts = args.point.split(":")
        if len(parts) != 2:
            raise ParseError("expected x:y, got %r" % args.point)
        x = ProjectivePoint(F, tuple(F.parse(t) for t in parts))
    elif args.pencil:
        from .invariants import newstead_point

        x = newstead_point(atlas.parse_pencil(args.pencil, F))
    else:
        raise UsageError("fiber needs --point or --pencil")
    fib = atlas.invariant_fiber_rho(x)
    return [" ".join(str(r) for r in fib)], {"point": x, "rho": fib}, True


def cmd_orbit(args):
    F = _field(args)
    orbit = sorted(atlas.s4_orbit_rho(atlas.parse_param(args.rho, F)), key=lambda w: w.sort_key())
    return [" ".join(str(w) for w in orbit)], {"orbit": orbit}, True


def _presentation(name: str, extra: Sequence[str] = ()) -> chow.GradedPresentation:
    if name not in chow.BUILTIN_TEXT:
        raise ParseError("unknown presentation %r; built-ins: %s" % (name, ", ".join(sorted(chow.BUILTIN_TEXT))))
    pres = chow.builtin(name)
    return chow.quotient(pres, list(extra)) if extra else pres


def cmd_chow(args):
    c = args.chow_command
    if c == "piece":
        piece = chow.graded_piece(_presentation(args.name), args.degree)
        w = {"group": piece.describe(), "invariant_factors": piece.invariant_factors, "free_rank": piece.free_rank}
        return [piece.describe()], w, True
    if c == "ideal":
        pres = _presentation(args.name, args.extra)
        zero = chow.in_ideal(pres, args.element)
        nf = pres.format(chow.normal_form(pres, args.element))
        return ["zero" if zero else "nonzero (normal form %s)" % nf], {"zero": zero, "normal_form": nf}, True
    if c == "verify-map":
        m = chow.builtin_map(args.map)
        bad = m.failing_relations(args.degree_bound)
        lines = ["ok up to degree %d" % args.degree_bound] if not bad else ["fails on %s" % r for r in bad]
        return lines, {"map": args.map, "failing": bad}, not bad
    pres = _presentation(args.name)
    return [pres.to_text()], {"presentation": pres.to_text()}, True


def cmd_chars(args):
    spec = args.field if args.field != "q" else characters.DEFAULT_FIELD
    G = characters.group_data(args.group, spec)
    lines = ["classes: " + ", ".join("%s(%d)" % (c.label, c.size) for c in G.classes)]
    for name, vals in G.irreducibles:
        lines.append("%-10s %s" % (name, " ".join(str(v) for v in vals)))
    w = {"classes": list(G.class_labels), "irreducibles": {n: [str(v) for v in vals] for n, vals in G.irreducibles}}
    for label, chi in (("V", characters.v_character(G)), ("adjoint", characters.adjoint_character(G))):
        dec = characters.decompose(chi)
        text = " + ".join(("%d*%s" % (m, n) if m > 1 else n) for n, m in dec.items() if m)
        lines.append("%s = %s" % (label, text))
        w[label] = dec
    return lines, w, True


COMMANDS = {
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "wall-form": cmd_wall_form,
    "stabilizer": cmd_stabilizer,
    "fiber": cmd_fiber,
    "orbit": cmd_orbit,
    "chow": cmd_chow,
    "chars": cmd_chars,
}


def _emit(text: str, args, stdout) -> None:
    print(text, file=stdout)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None, builtin_overrides=None) -> int:
    """Run one command; builtin_overrides replaces built-in presentations in verify-all."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        print("usage error: %s" % exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    if args.command == "verify-all":
        field = args.field if args.field != "q" else "fp:13"
        try:
            cfg = VerifyConfig(field=field, seed=args.seed, degree_bound=args.degree_bound,
                               builtin_overrides=builtin_overrides)
            only = (lambda cid: any(cid.startswith(x) for x in args.only)) if args.only else None
            report = verify_all(cfg, only=only)
        except (ValueError, FieldError) as exc:
            print("error: %s" % exc, file=stderr)
            return EXIT_USAGE
        if args.json:
            _emit(report.to_json(), args, stdout)
        else:
            lines = ["%-32s %s" % (c.id, c.status) for c in report.checks]
            for c in report.failing():
                lines.append("FAILED %s: %s" % (c.id, c.witness.get("error", "")))
            lines.append("overall: %s" % report.status)
            _emit("\n".join(lines), args, stdout)
        return EXIT_OK if report.status == PASS else EXIT_FAIL

    try:
        lines, witness, ok = COMMANDS[args.command](args)
    except (UsageError, ParseError, FieldError, chow.UnknownName) as exc:
        print("error: %s" % exc, file=stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, GroupError, FormError, atlas.AtlasError, chow.ChowError,
            characters.CharacterError, KeyError) as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=stderr)
        return EXIT_FAIL
    if args.json:
        name = args.command if args.command != "chow" else "chow " + args.chow_command
        _emit(_report_one(name, args.field, witness, ok).to_json(), args, stdout)
    else:
        _emit("\n".join(lines), args, stdout)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
