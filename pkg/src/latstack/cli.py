"""Command line interface: ``latstack {build,count,grid,verify,enumerate,export}``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.
"""

import argparse
import json
import sys
from pathlib import Path

from . import bijections as bj
from .counting import cell_count, count_maximal_chains, enumerate_maximal_chains, grid
from .errors import CapExceededError, LatstackError, SizeError
from .hypercube import (
    column_tower,
    default_budget,
    row_star_sublattice,
    row_tower,
    star_sublattice,
)
from .io import export_dot, read_poset, render_grid, write_poset


class UsageError(Exception):
    pass


def parse_range(text):
    """``"3"`` -> [3]; ``"0..4"`` -> [0, 1, 2, 3, 4]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("parameters must be nonnegative")
    return [v]


def _single(values, name):
    if len(values) != 1:
        raise UsageError(f"--{name} must be a single value for this command")
    return values[0]


def _budget(args):
    return args.budget if args.budget is not None else default_budget()


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _side_path(out, suffix):
    if out:
        return str(Path(out).with_suffix(suffix))
    return None


def _build(args):
    k, n, m = (_single(getattr(args, a), a) for a in ("k", "n", "m"))
    budget = _budget(args)
    if args.via == "stack":
        tower = column_tower(k, n, m, budget) if args.axis == "column" else row_tower(k, n, m, budget)
        return tower.poset(), dict(axis=args.axis, k=k, n=n, m=m, via="stack")
    if args.axis == "column":
        p = star_sublattice(k, n, m, budget)
    else:
        p = row_star_sublattice(n, k, m, budget)
    return p, dict(axis=args.axis, k=k, n=n, m=m, via="rep")


def _poset_output(p, meta, fmt, out):
    if fmt == "dot":
        _emit(export_dot(p), out)
    elif fmt == "json":
        _emit(write_poset(p, meta) + "\n", out)
    else:
        raise UsageError(f"format {fmt!r} does not apply to posets")


def cmd_build(args):
    p, meta = _build(args)
    _poset_output(p, meta, args.format or "json", args.out)
    if args.plot:
        from .plotting import plot_hasse

        plot_hasse(p, args.plot, title=f"{args.axis} k={meta['k']} n={meta['n']} m={meta['m']}")
    return 0


def cmd_export(args):
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
        p, meta = read_poset(text)
    else:
        p, meta = _build(args)
    _poset_output(p, meta, args.format or "dot", args.out)
    if args.plot:
        from .plotting import plot_hasse

        plot_hasse(p, args.plot)
    return 0


def cmd_count(args):
    budget = _budget(args)
    cells = [(k, n, m) for k in args.k for n in args.n for m in args.m]
    lines = []
    for k, n, m in cells:
        if args.via == "stack":
            tower = column_tower(k, n, m, budget) if args.axis == "column" else row_tower(k, n, m, budget)
            value = count_maximal_chains(tower.poset())
        else:
            value = cell_count(args.axis, k, n, m, budget)
        lines.append(str(value) if len(cells) == 1 else f"k={k} n={n} m={m} {value}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_grid(args):
    g = grid(args.axis, args.k, args.n, args.m, budget=_budget(args), workers=args.workers)
    fmt = args.format or "table"
    if fmt not in ("table", "bfile", "csv", "json"):
        raise UsageError(f"format {fmt!r} does not apply to grids")
    _emit(render_grid(g, fmt), args.out)
    plot = args.plot or (_side_path(args.out, ".png") if args.out and args.plot_alongside else None)
    if plot:
        from .plotting import plot_grid

        plot_grid(g, plot)
    return 0


def cmd_verify(args):
    from .verify import run

    failed = 0
    lines = []
    for c in run(args.suite):
        failed += not c.ok
        if args.verbose or not c.ok:
            lines.append(f"{'PASS' if c.ok else 'FAIL'} {c.suite}: {c.name} {c.detail if not c.ok else ''}".rstrip())
    lines.append(f"{'ok' if not failed else 'FAILED'}: suite {args.suite}, {failed} failure(s)")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_enumerate(args):
    k, n, m = (_single(getattr(args, a), a) for a in ("k", "n", "m"))
    budget = _budget(args)
    if args.axis == "column":
        p = star_sublattice(k, n, m, budget)
    else:
        p = row_star_sublattice(n, k, m, budget)
    chains = [[p.tuples[i] for i in c] for c in enumerate_maximal_chains(p, args.cap)]
    records = []
    for c in chains:
        rec = {"chain": ["".join(map(str, t)) if p.height < 10 else list(t) for t in c]}
        if args.axis == "column" and m == 1:
            rec["word"] = list(bj.chain_to_word(c, k))
        if args.axis == "column" and k == 1 and m >= 0 and n * (m + 1) > 0:
            rec["partition"] = [list(b) for b in bj.chain_to_partition(c, m + 1)]
        if args.axis == "row" and k == 1:
            rec["walk"] = ["D" if s == bj.DIAG else f"-{s}" for s in bj.chain_to_walk(c, n, m)]
        records.append(rec)
    fmt = args.format or "json"
    if fmt == "json":
        _emit(json.dumps(records, indent=1) + "\n", args.out)
    elif fmt in ("table", "csv"):
        sep = "," if fmt == "csv" else " "
        _emit("".join(sep.join(map(str, r["chain"])) + "\n" for r in records), args.out)
    else:
        raise UsageError(f"format {fmt!r} does not apply to chain listings")
    return 0


def _add_params(sp, required=True):
    sp.add_argument("--axis", choices=("column", "row"), default="column")
    for name in ("k", "n", "m"):
        sp.add_argument(f"--{name}", type=parse_range, required=required)


def _add_common(sp):
    sp.add_argument("--format", choices=("table", "bfile", "csv", "json", "dot"))
    sp.add_argument("--budget", type=int, default=None, help="element budget (default: $LATSTACK_BUDGET or 2^20)")
    sp.add_argument("--out", default=None, help="write to this path instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="latstack", description="Stacked lattices and their maximal chains.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("build", help="construct a stacked lattice")
    _add_params(sp)
    _add_common(sp)
    sp.add_argument("--via", choices=("rep", "stack"), default="rep")
    sp.add_argument("--plot", default=None, help="also draw the Hasse diagram to this image file")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("count", help="count maximal chains")
    _add_params(sp)
    _add_common(sp)
    sp.add_argument("--via", choices=("rep", "stack"), default="rep")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("grid", help="table of maximal chain numbers")
    _add_params(sp)
    _add_common(sp)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--plot", default=None, help="also plot the sequences to this image file")
    sp.add_argument("--plot-alongside", action="store_true", help="write a .png next to --out")
    sp.set_defaults(func=cmd_grid)

    sp = sub.add_parser("verify", help="run self-check suites")
    sp.add_argument("--suite", choices=("formulas", "representations", "structure", "bijections", "all"), default="all")
    sp.add_argument("--verbose", "-v", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="list maximal chains with their combinatorial encodings")
    _add_params(sp)
    _add_common(sp)
    sp.add_argument("--cap", type=int, default=5000)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("export", help="export a poset document or a construction")
    _add_params(sp, required=False)
    _add_common(sp)
    sp.add_argument("--in", dest="input", default=None, help="read a JSON poset document ('-' for stdin)")
    sp.add_argument("--via", choices=("rep", "stack"), default="rep")
    sp.add_argument("--plot", default=None)
    sp.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "export" and not args.input and None in (args.k, args.n, args.m):
            raise UsageError("export needs --in or all of --k, --n, --m")
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except CapExceededError as exc:
        print(f"latstack: {exc}", file=sys.stderr)
        return 1
    except (SizeError, LatstackError) as exc:
        print(f"latstack: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
