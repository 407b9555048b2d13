"""Command line front end; every command is a thin wrapper over the library.

Exit codes: 0 success, 1 a checked relation failed, 2 precondition failure,
3 degree cap reached, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chain, firstfall, invariants, minrank, solver, systems
from .algebra import DRL, LEX, format_polynomial
from .errors import PreconditionError, SolvdegError
from .groebner import buchberger
from .homogenize import homogenized_ideal, tilde_ideal, top_ideal
from .macaulay import xl_groebner


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}") from None


def _system(args):
    return systems.parse_system(_read(args.file))


def _order(args):
    return LEX if args.order == "lex" else DRL


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _basis_lines(G, order):
    return "\n".join(format_polynomial(g, order) for g in G)


def cmd_gb(args):
    I = _system(args)
    order = _order(args)
    G = buchberger(I, order)
    _emit(args, {"order": order.name, "basis": [format_polynomial(g, order) for g in G]},
          _basis_lines(G, order))


def cmd_solvdeg(args):
    I = _system(args)
    order = _order(args)
    _, report = xl_groebner(I, order, mutants=args.mutants == "on")
    text = "\n".join(f"d={s.d} rows={s.rows} cols={s.cols} rank={s.rank} "
                     f"new={s.new_leading_terms} mutants={s.mutants}" for s in report.trace)
    _emit(args, report.to_dict(), f"{text}\nsolving degree: {report.solving_degree}")


def _system_out(args, I):
    _emit(args, {"system": systems.format_system(I)}, systems.format_system(I).rstrip("\n"))


def cmd_homogenize(args):
    I = _system(args)
    _system_out(args, homogenized_ideal(I) if args.full else tilde_ideal(I))


def cmd_top(args):
    _system_out(args, top_ideal(_system(args)))


def cmd_add_field_eqs(args):
    _system_out(args, systems.add_field_equations(_system(args)))


def cmd_abc_fixture(args):
    _system_out(args, systems.abc_fixture())


def _homogeneous(args):
    I = _system(args)
    if not I.is_homogeneous():
        raise PreconditionError(f"'{args.command}' needs homogeneous input; try 'homogenize' first")
    return I


def cmd_reg(args):
    report = invariants.reg_via_initial(_homogeneous(args), args.assert_generic_coords)
    _emit(args, report.to_dict(), f"reg = {report.value} ({report.label})")


def cmd_betti(args):
    I = _system(args)
    if any(len(g.terms) != 1 for g in I):
        raise PreconditionError("'betti' needs monomial generators; use 'reg' for other ideals")
    table = invariants.betti_table(I)
    rows = "\n".join(f"beta[{i},{j}] = {v}" for i, j, v in table.to_dict()["betti"])
    _emit(args, table.to_dict(), f"{rows}\npd = {table.pd}\nreg = {table.reg}")


def cmd_hilbert(args):
    hs = invariants.ideal_hilbert_series(_homogeneous(args))
    _emit(args, hs.to_dict(), f"h = {list(hs.h)}\nell = {hs.ell}\nireg = {hs.ireg}")


def cmd_ireg(args):
    value = invariants.index_of_regularity(_homogeneous(args))
    _emit(args, {"ireg": value}, str(value))


def cmd_dregf(args):
    value = invariants.dreg_faugere(_system(args))
    _emit(args, {"dregF": value}, str(value))


def cmd_firstfall(args):
    report = firstfall.first_fall(_system(args))
    d = report.first_fall_degree
    _emit(args, report.to_dict(), "no fall degree in B" if d is None else str(d))


def _points_out(args, points):
    _emit(args, [list(pt) for pt in points], "\n".join(" ".join(map(str, pt)) for pt in points))


def cmd_solve(args):
    _points_out(args, solver.lex_solve(_system(args)))


def cmd_unique_solve(args):
    _points_out(args, [solver.unique_solve(_system(args))])


def cmd_interpolate(args):
    ring, points = systems.parse_points(_read(args.file))
    G = solver.shape_interpolate(points, ring)
    _emit(args, {"order": "lex", "basis": [format_polynomial(g, LEX) for g in G]},
          _basis_lines(G, LEX))


def cmd_specialize(args):
    I = _system(args)
    if I.ring.n < 1:
        raise PreconditionError("specialize needs at least one variable")
    basis = solver.specialize_gb(buchberger(I, LEX), args.value)
    _emit(args, {"order": "lex", "basis": [format_polynomial(g, LEX) for g in basis]},
          _basis_lines(basis, LEX) if basis else "0")


def cmd_minors(args):
    M = minrank.parse_matrix(_read(args.file))
    _system_out(args, minrank.minors(M, args.t))


def _instance(args):
    return minrank.gen_instance(args.kind, args.r, args.s, args.n, args.p, args.seed)


def cmd_minrank_gen(args):
    M = _instance(args)
    text = minrank.format_matrix(M)
    _emit(args, {"matrix": text, "kind": M.kind, "seed": args.seed}, text.rstrip("\n"))


def cmd_minrank_exp(args):
    M = minrank.parse_matrix(_read(args.file)) if args.file else _instance(args)
    report = minrank.minrank_experiment(M, args.t, args.seed if not args.file else None)
    _emit(args, report, " ".join(f"{k}={v}" for k, v in report.items()))
    return 0 if report["height_ok"] is not False else 1


def cmd_verify_chain(args):
    report = chain.verify_chain(_system(args), args.assert_generic_coords)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + ("" if r.licensed else "  (not licensed)")
             for r in report.relations]
    values = " ".join(f"{k}={v}" for k, v in report.values.items())
    _emit(args, report.to_dict(), values + "\n" + "\n".join(lines))
    return 0 if report.passed else 1


COMMANDS = {
    "gb": (cmd_gb, "reduced Groebner basis"),
    "solvdeg": (cmd_solvdeg, "solving degree with the elimination trace"),
    "homogenize": (cmd_homogenize, "homogenize the generators (or the whole ideal with --full)"),
    "top": (cmd_top, "top-degree parts of the generators"),
    "reg": (cmd_reg, "regularity through the DRL initial ideal"),
    "betti": (cmd_betti, "graded Betti numbers of a monomial ideal"),
    "hilbert": (cmd_hilbert, "Hilbert series of the quotient"),
    "ireg": (cmd_ireg, "index of regularity"),
    "dregf": (cmd_dregf, "degree of regularity of the top-degree ideal"),
    "firstfall": (cmd_firstfall, "first fall degree of quadratics"),
    "solve": (cmd_solve, "all F_p-rational solutions"),
    "unique-solve": (cmd_unique_solve, "the solution of a unique-solution system"),
    "interpolate": (cmd_interpolate, "LEX basis through points in normal position"),
    "specialize": (cmd_specialize, "specialize the LEX basis at the last variable"),
    "minors": (cmd_minors, "ideal of t-minors of a matrix file"),
    "minrank-gen": (cmd_minrank_gen, "random determinantal instance"),
    "minrank-exp": (cmd_minrank_exp, "solving degree of maximal minors against the bound"),
    "verify-chain": (cmd_verify_chain, "check the solving-degree chain on a system"),
    "abc-fixture": (cmd_abc_fixture, "the F_2 toy ABC system"),
    "add-field-eqs": (cmd_add_field_eqs, "append the field equations"),
}

NO_FILE = {"abc-fixture", "minrank-gen"}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=["lex", "drl"], default="drl")
    common.add_argument("--mutants", choices=["on", "off"], default="on")
    common.add_argument("--assert-generic-coords", action="store_true",
                        help="treat the input as being in generic coordinates")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print JSON to stdout")
    parser = argparse.ArgumentParser(prog="solvdeg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name == "minrank-exp":
            sp.add_argument("file", nargs="?", help="matrix file; omit to generate")
        elif name not in NO_FILE:
            sp.add_argument("file", help="system file, or - for stdin")
        if name == "homogenize":
            sp.add_argument("--full", action="store_true", help="homogenize the whole ideal")
        if name == "specialize":
            sp.add_argument("--value", type=int, required=True)
        if name == "minors":
            sp.add_argument("-t", type=int, required=True)
        if name in ("minrank-gen", "minrank-exp"):
            sp.add_argument("--kind", choices=minrank.KINDS, default="generic-linear")
            sp.add_argument("-r", type=int, default=2)
            sp.add_argument("-s", type=int, default=3)
            sp.add_argument("-n", type=int, default=3)
            sp.add_argument("-p", type=int, default=101)
        if name == "minrank-exp":
            sp.add_argument("-t", type=int, default=None)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        status = COMMANDS[args.command][0](args)
    except SolvdegError as exc:
        print(f"solvdeg {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
