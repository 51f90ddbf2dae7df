"""Command-line entry point: ``python -m lattice_obstruction <command>``.

Exit codes: 0 success / Found / Obstructed, 1 Exhausted or not
obstructed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .constructors import ld_lattice
from .lattice import InvalidInputError, classify_definiteness, load_lattice
from .pipeline import OBSTRUCTED, obstruct, theorem_range
from .search import (
    DiagonalTarget,
    SearchOptions,
    find_representations,
    orbits,
    represents_into_some_diagonal,
    support_bound,
)
from .spinc import (
    CircleBundle,
    OutOfDomainError,
    contact_spinc,
    euler_class_xi,
    spin_structures_circle,
    spincform_check,
    torsion_table,
    vanishing_locus_pd,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _fmt_matrix(rows) -> str:
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join("  " + " ".join(str(x).rjust(width) for x in row) for row in rows)


def cmd_embed(args) -> int:
    L = load_lattice(args.lattice)
    if args.m is not None:
        if args.m < 0:
            raise InvalidInputError("--m must be nonnegative")
        target = DiagonalTarget(args.m)
    else:
        target = DiagonalTarget(support_bound(L))
    cert = find_representations(L, target, SearchOptions())
    out = cert.to_dict()
    if args.orbits:
        out["orbit_count"] = len(orbits(L, target))
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        scope = f"D_{target.m}" + (" (support bound, covers every D_m)" if args.m is None else "")
        print(f"target: {scope}")
        print(f"outcome: {cert.outcome}")
        print(f"nodes visited: {cert.nodes_visited}")
        print("pruned: " + (", ".join(f"{k}={v}" for k, v in cert.pruned_by.items()) or "none"))
        for R in cert.solutions:
            print("representation:")
            print(_fmt_matrix(R.images))
        if args.orbits:
            print(f"orbits: {out['orbit_count']}")
    return 0 if cert.found else 1


def cmd_ld(args) -> int:
    if args.d < 1:
        raise InvalidInputError("--d must be positive")
    L = ld_lattice(args.d)
    cls = classify_definiteness(L)
    print(f"L_{args.d} (rank {L.rank}):")
    print(_fmt_matrix(L.gram))
    print(cls.describe())
    if args.emit_json:
        with open(args.emit_json, "w") as fh:
            json.dump(L.to_dict(), fh)
            fh.write("\n")
    return 0


def _spinc_data(g, n, i_values):
    b = CircleBundle(g, n)
    b.require_torsion()
    data = {
        "g": g,
        "n": n,
        "torsion": [{"e": e, "c1": c} for e, c in torsion_table(b)],
        "spin": sorted(t.e for t in spin_structures_circle(b)),
        "contact": [],
    }
    if n >= 2 * g:
        for i in i_values:
            row = {"i": i, "t": contact_spinc(b, i).e, "euler": euler_class_xi(b, i).coefficient}
            if n % 2 == 0:
                row["pd_vanishing_locus"] = vanishing_locus_pd(b, i).coefficient
                row["spincform"] = spincform_check(b, i)
            data["contact"].append(row)
    return data


def cmd_spinc(args) -> int:
    i_values = (0, 1) if args.i is None else (args.i,)
    data = _spinc_data(args.g, args.n, i_values)
    if args.json:
        print(json.dumps(data, indent=2))
        return 0
    print(f"Y_({args.g},{args.n}): torsion Spin^c structures t_e, c1(t_e) = 2(1-g+e)F mod n")
    for row in data["torsion"]:
        print(f"  t_{row['e']}: c1 = {row['c1']}F")
    print("spin: {" + ", ".join(f"t_{e}" for e in data["spin"]) + "}")
    if not data["contact"]:
        print("contact structures xi_0, xi_1 undefined for n < 2g")
    for row in data["contact"]:
        i = row["i"]
        line = f"t_xi{i} = t_{row['t']}, e(xi{i}) = {row['euler']}F"
        if "spincform" in row:
            line += f", PD[L_v] = {row['pd_vanishing_locus']}F, t_v + PD[L_v] = t_xi{i}: {row['spincform']}"
        print(line)
    return 0


def _print_report(rep) -> None:
    print(f"Y_({rep.g},{rep.n}): {rep.verdict} ({rep.reason})")
    if rep.contact:
        c = rep.contact
        print(f"  t_xi0 = t_{c['t_xi0']}, t_xi1 = t_{c['t_xi1']}, "
              f"e(xi0) = {c['euler_xi0']}F, e(xi1) = {c['euler_xi1']}F")
    if rep.cap:
        cap = rep.cap
        print(f"  cap: d = {cap.d}, k = {cap.k}, curve degree {cap.curve_degree}, "
              f"fake handles {cap.fake_handles}, proper transform square {cap.proper_transform_square}")
        print(f"  L_{cap.d}: {rep.definiteness.describe()}")
        s = rep.search
        print(f"  search: {s.outcome} at D_{s.m}, {s.nodes_visited} nodes")
        for a in rep.attempts:
            print(f"    tried d = {a.d}: {a.outcome} at D_{a.m}")
        print("  assumptions: " + ", ".join(a["id"] for a in rep.assumptions))
        for r in rep.remarks:
            print(f"  remark: {r}")


def cmd_obstruct(args) -> int:
    rep = obstruct(args.g, args.n)
    if args.json:
        print(rep.to_json(indent=2))
    else:
        _print_report(rep)
    return 0 if rep.verdict == OBSTRUCTED else 1


def cmd_range(args) -> int:
    if args.dmax < 1:
        raise InvalidInputError("--dmax must be positive")
    triples = theorem_range(args.dmax)
    status = 0
    for g, n, d in triples:
        if args.run:
            rep = obstruct(g, n)
            print(f"g={g} n={n} d={d} {rep.verdict}" + ("" if rep.cap is None else f" (via d={rep.cap.d})"))
            if rep.verdict != OBSTRUCTED:
                status = 1
        else:
            print(f"g={g} n={n} d={d}")
    print(f"{len(triples)} pairs")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lattice-obstruction", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("embed", help="search for representations of a lattice in D_m")
    e.add_argument("lattice", help='JSON file {"rank": r, "gram": [[...]], "labels": [...]}')
    grp = e.add_mutually_exclusive_group()
    grp.add_argument("--m", type=int)
    grp.add_argument("--any", action="store_true", help="search D_{m*}, which decides every m (default)")
    e.add_argument("--orbits", action="store_true")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_embed)

    ld = sub.add_parser("ld", help="print L_d and its definiteness")
    ld.add_argument("--d", type=int, required=True)
    ld.add_argument("--emit-json", metavar="PATH")
    ld.set_defaults(func=cmd_ld)

    s = sub.add_parser("spinc", help="torsion Spin^c data of Y_{g,n}")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, choices=(0, 1))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_spinc)

    o = sub.add_parser("obstruct", help="obstruction report for Y_{g,n}")
    o.add_argument("--g", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_obstruct)

    r = sub.add_parser("range", help="enumerate the covered (g, n, d)")
    r.add_argument("--dmax", type=int, required=True)
    r.add_argument("--run", action="store_true", help="run obstruct on each pair")
    r.set_defaults(func=cmd_range)
    return p


def cli_main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInputError, OutOfDomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())
