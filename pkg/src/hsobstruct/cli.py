"""Command line entry point: ``hsobstruct <subcommand> ...``.

Exit codes: 0 when output was produced, 2 when the input is proven not to
embed, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .chi import chi_range
from .csknot import order_bound, quotient_order, resultant_order, verify_root_intervals
from .errors import ObstructionError
from .forms import AlternatingForm3
from .massey import verify_identities
from .report import full_report, load_input
from .seifert import SeifertData, euler_invariant, homology, obstruct, smooth_obstructions
from .splitting import DEFAULT_RADIUS, find_splitting
from .torsion import LinkingPairing, is_direct_double, is_hyperbolic


def _read_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def cmd_report(args) -> int:
    rep = full_report(load_input(args.file), radius=args.radius)
    if args.json == "-":
        sys.stdout.write(rep.dumps())
    else:
        sys.stdout.write(rep.to_text())
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(rep.dumps())
    return rep.exit_code


def cmd_chi_set(args) -> int:
    print(" ".join(str(v.chi_x) for v in chi_range(args.beta)))
    return 0


def cmd_split_search(args) -> int:
    f = AlternatingForm3.from_json(_read_json(args.file))
    w = find_splitting(f, args.gamma, args.radius)
    if w is None:
        print(f"gamma={args.gamma}: no splitting found within radius {args.radius} (inconclusive)")
    else:
        print(json.dumps(w.to_json(), sort_keys=True))
    return 0


def cmd_seifert(args) -> int:
    s = SeifertData.from_json(_read_json(args.file))
    beta, torsion = homology(s)
    print(f"{s}: euler invariant {euler_invariant(s)}, H_1 betti {beta}, torsion {torsion or 'none'}")
    code = 0
    for v in obstruct(s, beta):
        why = "; ".join(r.detail for r in v.reasons)
        print(f"  chi(X)={v.chi_x}: {v.status}" + (f" ({why})" if why else ""))
    smooth = smooth_obstructions(s)
    print(f"  smooth: {json.dumps(smooth.to_json(), sort_keys=True)}")
    if smooth.topological_obstruction:
        code = 2
    return code


def cmd_massey(args) -> int:
    results = verify_identities(args.e, args.samples, args.seed)
    for name, ok in results.items():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return 0 if all(results.values()) else 1


def cmd_cs_knot(args) -> int:
    order = quotient_order(args.a, args.c)
    bound = order_bound(args.a, args.c)
    print(f"a={args.a} c={args.c}: root intervals {'ok' if verify_root_intervals(args.a) else 'FAILED'}")
    print(f"|Res(f_a, t^c - 1)| = {resultant_order(args.a, args.c)}")
    print(f"quotient order = {order}; bound c*a^(c-1) = {bound}; order > bound: {order > bound}")
    return 0


def cmd_linking(args) -> int:
    p = LinkingPairing.from_json(_read_json(args.file))
    dd = is_direct_double(p.group)
    w = is_hyperbolic(p)
    print(f"group {list(p.group.invariant_factors)}: direct double {dd}, hyperbolic {w is not None}")
    if w is not None:
        print(json.dumps(w.to_json(), sort_keys=True))
    return 0 if w is not None else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hsobstruct", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="full obstruction report for a manifold description")
    p.add_argument("file")
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--json", metavar="OUT", help="also write the JSON report here ('-' for stdout only)")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("chi-set", help="admissible chi(X) values for a Betti number")
    p.add_argument("--beta", type=int, required=True)
    p.set_defaults(func=cmd_chi_set)

    p = sub.add_parser("split-search", help="search an isotropic splitting of a 3-form")
    p.add_argument("file")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.set_defaults(func=cmd_split_search)

    p = sub.add_parser("seifert", help="Seifert fibred obstructions")
    p.add_argument("file")
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("massey-verify", help="check the cochain identities on random samples")
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_massey)

    p = sub.add_parser("cs-knot", help="Cappell-Shaneson quotient order")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(func=cmd_cs_knot)

    p = sub.add_parser("linking", help="direct double and hyperbolicity of a linking pairing")
    p.add_argument("file")
    p.set_defaults(func=cmd_linking)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ObstructionError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
