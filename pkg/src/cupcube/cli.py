"""``cupcube`` command line.

Every command prints one JSON document (or a table with ``--format table``)
and exits 0 on success, 1 when a check finds a mismatch and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import SCHEMA_VERSION
from .algebra.descriptors import DescriptorError, group_from, module_from, psi_from, read
from .algebra.groups import GroupError, ModuleError
from .branched import TORUS_KNOTS, branched_form, census, knot_diagram, table_check
from .coloring import ColoringError, Representation, check_representation, colorings
from .diagram import DiagramError, RMoveSite, find_sites, parse_pd
from .harness import (
    OracleError, check_fig8, check_torus, check_trefoil, make_setup, rmove_suite,
)
from .trilinear import DEFAULT, PsiError, cubic_tensor, psi_check


class InputError(Exception):
    pass


def _threads():
    raw = os.environ.get("CUPCUBE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"CUPCUBE_THREADS must be an integer, got {raw!r}") from None


def _pmap(fn, items):
    """Ordered map, over processes when ``CUPCUBE_THREADS`` > 1."""
    k = _threads()
    if k == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))


def load_diagram(spec):
    """A census name, a file holding a PD code, or an inline PD code."""
    data = census()
    if spec in data["knots"] or spec in data["links"]:
        return knot_diagram(spec)
    path = Path(spec)
    text = path.read_text() if path.is_file() else spec
    return parse_pd(text)


def load_rep(path, D, G):
    """``f.json``: a list of element names per arc, or ``{"constant": g}``."""
    if path is None:
        if "t" in G.gens:
            return Representation.constant(D, G, "t")
        raise InputError("--rep is required for this group")
    data = read(path)
    if isinstance(data, dict) and "constant" in data:
        f = Representation.constant(D, G, data["constant"])
    else:
        arcs = data["arcs"] if isinstance(data, dict) else data
        f = Representation.from_names(D, G, arcs)
    bad = check_representation(f)
    if bad:
        raise InputError(f"not a representation: {bad}")
    return f


def parse_range(text):
    """``"5"``, ``"2..9"`` or ``"2,4,8"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"bad modulus {text!r}") from None


def emit(args, command, result, table=None):
    if getattr(args, "format", "json") == "table" and table is not None:
        print(table)
        return
    doc = {"schema_version": SCHEMA_VERSION, "convention": DEFAULT.name,
           "command": command, "result": result}
    print(json.dumps(doc, separators=(",", ":")))


def _table(header, rows):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*map(str, r)) for r in [header] + rows)


# -- commands ---------------------------------------------------------------------

def cmd_diagram(args):
    D = load_diagram(args.diagram)
    info = D.info()
    if args.unbounded is not None:
        if not 0 <= args.unbounded < len(D.faces):
            raise InputError(f"face {args.unbounded} out of range")
        info["unbounded_face"] = args.unbounded
    emit(args, "diagram info", info)
    return 0


def cmd_color(args):
    D = load_diagram(args.diagram)
    G = group_from(read(args.group))
    M = module_from(read(args.module), G)
    f = load_rep(args.rep, D, G)
    sp = colorings(D, f, M)
    result = {
        "arcs": D.n_arcs, "col_size": sp.full.size, "col_red_size": sp.reduced.size,
        "col_orders": sp.full.orders, "col_red_orders": sp.reduced.orders,
        "generators": sp.full.gens, "reduced_generators": sp.reduced.gens,
    }
    emit(args, "color", result)
    return 0


def cmd_trilinear(args):
    D = load_diagram(args.diagram)
    G = group_from(read(args.group))
    paths = args.modules.split(",")
    if len(paths) != 3:
        raise InputError("--modules takes three comma-separated descriptors")
    cache = {}
    mods = tuple(cache.setdefault(p, module_from(read(p), G)) for p in paths)
    psi = psi_from(read(args.psi), mods)
    bad = psi_check(psi)
    if bad:
        raise InputError(f"psi is not G-invariant: {bad}")
    f = load_rep(args.rep, D, G)
    spaces = tuple(colorings(D, f, M) for M in mods)
    if args.unbounded is not None and not 0 <= args.unbounded < len(D.faces):
        raise InputError(f"face {args.unbounded} out of range")
    form = cubic_tensor(spaces, psi, unbounded=args.unbounded)
    tensor = {",".join(map(str, k)): list(v) for k, v in sorted(form.tensor.items())}
    result = {"orders": form.orders, "poly": form.poly(), "tensor": tensor}
    if args.format == "poly":
        print(form.poly())
        return 0
    if args.format == "tensor":
        result = {"orders": form.orders, "tensor": tensor}
    emit(args, "trilinear", result)
    return 0


DEFAULT_SETUPS = {
    "trefoil": ["branched:2", "branched:4", "s3std:3"],
    "fig8": ["branched:2", "branched:4", "branched:8"],
    "torus": ["branched:2", "branched:4", "s3std:3"],
}


def cmd_oracle(args):
    setups = args.setup or DEFAULT_SETUPS[args.which]
    reports = []
    for spec in setups:
        S = make_setup(spec)
        if args.which == "trefoil":
            reports.append(check_trefoil(S, args.samples, args.seed))
            reports.append(check_trefoil(S, args.samples, args.seed, mirror=True))
        elif args.which == "fig8":
            reports.append(check_fig8(S, args.samples, args.seed))
        else:
            if args.m is None or args.m < 2:
                raise InputError("torus needs m >= 2")
            try:
                reports.append(check_torus(S, args.m, args.samples, args.seed))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
    ok = all(r.passed for r in reports)
    rows = [[r.name, "pass" if r.passed else "FAIL", r.checked, r.nonzero, len(r.mismatches)]
            for r in reports]
    emit(args, f"oracle-check {args.which}",
         {"pass": ok, "reports": [r.to_json() for r in reports]},
         _table(["check", "status", "checked", "nonzero", "mismatches"], rows))
    return 0 if ok else 1


def cmd_rmove(args):
    D = load_diagram(args.diagram)
    S = make_setup(args.setup)
    f = load_rep(args.rep, D, S.group) if args.rep else S.representation(D)
    if args.moves:
        data = read(args.moves)
        sites = [RMoveSite.from_json(s) for s in (data["moves"] if isinstance(data, dict) else data)]
    else:
        sites = []
        for kind, inv in ((1, False), (1, True), (2, False), (2, True), (3, False)):
            sites += find_sites(D, kind, inv)[: args.per_kind]
    if not sites:
        raise InputError("no move sites")
    rep = rmove_suite(D, f, S.modules, S.psis, sites, samples=args.samples, seed=args.seed)
    emit(args, "rmove-check", rep.to_json(),
         _table(["check", "status", "checked", "nonzero"],
                [[rep.name, "pass" if rep.passed else "FAIL", rep.checked, rep.nonzero]]))
    return 0 if rep.passed else 1


def _branched_one(job):
    spec, n, torus = job
    D = load_diagram(spec)
    return branched_form(D, n, knot=spec, torus=torus).to_json()


def cmd_branched(args):
    torus = None
    if args.torus_annotate:
        try:
            torus = tuple(int(v) for v in args.torus_annotate.split(","))
        except ValueError:
            raise InputError("--torus-annotate takes m,k") from None
        if len(torus) != 2:
            raise InputError("--torus-annotate takes m,k")
    elif args.knot in TORUS_KNOTS:
        torus = TORUS_KNOTS[args.knot]
    load_diagram(args.knot)
    ns = parse_range(args.n)
    if any(n < 2 for n in ns):
        raise InputError("modulus must be at least 2")
    results = _pmap(_branched_one, [(args.knot, n, torus) for n in ns])
    rows = [[r["knot"], r["n"], r["col_red_orders"], r["form"], "; ".join(r["notes"])]
            for r in results]
    emit(args, "branched", results[0] if len(results) == 1 else results,
         _table(["knot", "n", "Col^red", "form", "notes"], rows))
    return 0


def cmd_table(args):
    rows = table_check(alt=args.alt)
    out = [r.to_json() for r in rows]
    ok = all(r.passed for r in rows)
    emit(args, "table-check", {"pass": ok, "rows": out},
         _table(["knot", "n", "expected", "computed", "status"],
                [[r.knot, r.n, r.expected, r.computed, "pass" if r.passed else "FAIL"]
                 for r in rows]))
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="cupcube", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("diagram", help="inspect a PD code")
    dsub = d.add_subparsers(dest="action", required=True)
    info = dsub.add_parser("info")
    info.add_argument("diagram", help="census name, file, or inline PD")
    info.add_argument("--unbounded", type=int, help="override the unbounded face index")
    info.set_defaults(fn=cmd_diagram)

    c = sub.add_parser("color", help="coloring module of a diagram")
    c.add_argument("diagram")
    c.add_argument("--group", required=True)
    c.add_argument("--module", required=True)
    c.add_argument("--rep")
    c.set_defaults(fn=cmd_color)

    t = sub.add_parser("trilinear", help="cubic tensor of T_psi")
    t.add_argument("diagram")
    t.add_argument("--group", required=True)
    t.add_argument("--modules", required=True, help="m1,m2,m3 descriptor paths")
    t.add_argument("--psi", required=True)
    t.add_argument("--rep")
    t.add_argument("--unbounded", type=int)
    t.add_argument("--format", choices=["json", "tensor", "poly"], default="json")
    t.set_defaults(fn=cmd_trilinear)

    o = sub.add_parser("oracle-check", help="generic engine against closed forms")
    o.add_argument("which", choices=["trefoil", "fig8", "torus"])
    o.add_argument("m", nargs="?", type=int)
    o.add_argument("--setup", action="append", help="e.g. branched:2, s3std:3 (repeatable)")
    o.add_argument("--samples", type=int, default=100)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--format", choices=["json", "table"], default="json")
    o.set_defaults(fn=cmd_oracle)

    r = sub.add_parser("rmove-check", help="Reidemeister invariance of T_psi")
    r.add_argument("diagram")
    r.add_argument("--setup", default="branched:2")
    r.add_argument("--rep")
    r.add_argument("--moves", help="JSON/TOML list of move sites")
    r.add_argument("--per-kind", type=int, default=4, help="sites per move kind when --moves is absent")
    r.add_argument("--samples", type=int, default=20)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--format", choices=["json", "table"], default="json")
    r.set_defaults(fn=cmd_rmove)

    b = sub.add_parser("branched", help="triple cup product form of the 3-fold branched cover")
    b.add_argument("knot", help="census name, file, or inline PD")
    b.add_argument("--n", required=True, help="modulus: 5, 2..9 or 2,4,8")
    b.add_argument("--torus-annotate", metavar="m,k")
    b.add_argument("--format", choices=["json", "table"], default="json")
    b.set_defaults(fn=cmd_branched)

    tc = sub.add_parser("table-check", help="compare with the bundled table")
    tc.add_argument("--alt", action="store_true", help="use the braid-closure diagrams")
    tc.add_argument("--format", choices=["json", "table"], default="json")
    tc.set_defaults(fn=cmd_table)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    for name in ("samples", "per_kind"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            print(f"cupcube: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except (InputError, DescriptorError, DiagramError, GroupError, ModuleError, PsiError,
            ColoringError, OracleError, ValueError, KeyError, OSError) as exc:
        print(f"cupcube: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
