"""Command line interface: ``hydras <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import primes as oracle
from . import verify
from .construct import (
    ConstructionPlan, WitnessPair, maillet_hydra, maillet_plan, polignac_hydra, polignac_plan, scan_witness,
)
from .counting import counts, predict_split
from .errors import BudgetExceeded, HydraError
from .hydra import Budget, Hydra, count_only, heads, natural, next_prime, recurse, root, select_heads, split
from .metrics import count_pairs, density_report, wheeldiff, wheeldist
from .render import (
    WheelStyle, hydra_to_dict, render_gaps, render_histogram_compact, render_hydra_text, render_json,
    render_matrix, render_wheel_svg,
)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",")]


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _emit_hydra(H: Hydra, args, selector: str = "alive", mark=None) -> None:
    if args.format == "json":
        print(render_json(H, indent=2))
    else:
        sys.stdout.write(render_hydra_text(H, selector, args.tail, header=not args.no_header,
                                           layout=args.header_layout, mark=mark))


def _heads_for_indices(H: Hydra, indices: list[str]) -> list[int]:
    return [int(h) for h in H[indices].heads]


def cmd_hydra(args) -> int:
    H = natural(args.primes, args.budget)
    selector = "all" if args.all else "twins" if args.twins else "alive"
    mark = _heads_for_indices(H, args.mark_pairs) if args.mark_pairs else None
    _emit_hydra(H, args, selector, mark)
    return 0


def cmd_recurse(args) -> int:
    H = root()
    if args.steps is not None:
        for _ in range(args.steps):
            H = recurse(H, args.budget)
    else:
        while next_prime(H) <= args.upto_prime:
            H = recurse(H, args.budget)
    _emit_hydra(H, args)
    return 0


def cmd_split(args) -> int:
    H = split(natural(args.primes, args.budget), args.by, args.budget)
    _emit_hydra(H, args, "all" if args.all else "alive")
    return 0


def cmd_select(args) -> int:
    H = natural(args.primes, args.budget)
    if args.index:
        view = H[args.index]
    elif args.dist is not None:
        pairs = count_pairs(H, args.dist).pairs
        view = select_heads(H, {h for p in pairs for h in (p.low, p.high)})
    else:
        view = select_heads(H, heads(H, "twins"))
    _emit_hydra(view, args)
    return 0


def cmd_diff(args) -> int:
    gv = wheeldiff(natural(args.primes, args.budget))
    if args.format == "json":
        out = {str(k): v for k, v in gv.histogram().items()} if args.table else dict(gv.entries())
        print(json.dumps(out))
    elif args.table:
        print(render_histogram_compact(gv.histogram()))
    else:
        sys.stdout.write(render_gaps(gv))
    return 0


def cmd_dist(args) -> int:
    table = wheeldist(natural(args.primes, args.budget))
    if args.format == "json":
        print(json.dumps({"labels": table.labels, "matrix": table.matrix.tolist()}))
    else:
        sys.stdout.write(render_matrix(table))
    return 0


def cmd_counts(args) -> int:
    report = counts(args.primes)
    if args.predict is not None:
        report = predict_split(report, args.predict)
    if args.format == "json":
        print(json.dumps({"primes": list(report.primes), **report.as_dict()}))
    else:
        print(f"P = {{{', '.join(map(str, report.primes))}}}")
        print(f"k = {report.k}")
        print(f"k1 = {report.k1}")
        print(f"k2 = {'NA' if report.k2_twin is None else report.k2_twin}")
    return 0


def _report_plan(plan: ConstructionPlan, args, materialize) -> int:
    result: dict = {
        "artificial": sorted(plan.artificial),
        "split_order": list(plan.split_order),
        "natural": list(plan.natural_fill),
        "target": plan.target,
        "mode": plan.mode,
    }
    witness: WitnessPair | None = None
    H = None
    if args.materialize:
        try:
            H, witness = materialize()
        except BudgetExceeded as exc:
            print(f"note: {exc.case}: {exc}; locating witness without a snake table", file=sys.stderr)
            witness = scan_witness(plan)
    if args.format == "json":
        if witness is not None:
            result["witness"] = vars(witness)
        if H is not None:
            result["hydra"] = {k: v for k, v in hydra_to_dict(H).items() if k != "snakes"}
        print(json.dumps(result))
        return 0
    print("artificial", " ".join(map(str, result["artificial"])))
    print("natural", " ".join(map(str, result["natural"])))
    if H is not None:
        print(f"hydra H({','.join(map(str, H.primes))}) k = {H.wavelength}")
    if witness is not None:
        print(f"witness {witness.low_head} {witness.high_head} {witness.kind}"
              f"{' consecutive' if witness.consecutive else ''}")
    return 0


def cmd_kronecker(args) -> int:
    plan = maillet_plan(args.distance)
    return _report_plan(plan, args, lambda: maillet_hydra(args.distance, args.budget))


def cmd_polignac(args) -> int:
    mode = "brute" if args.brute else "efficient"
    plan = polignac_plan(args.gap, mode)
    return _report_plan(plan, args, lambda: polignac_hydra(args.gap, mode, args.budget))


def cmd_density(args) -> int:
    rep = density_report(count_only(args.primes), args.n)
    if args.format == "json":
        print(json.dumps(dict(rep.rows())))
    else:
        for name, value in rep.rows():
            print(f"{name:<18}{value}")
    return 0


def _parse_rings(text: str, outer_only: bool) -> list[list[int]]:
    if ";" in text:
        rings = [_int_list(part) for part in text.split(";") if part.strip()]
    else:
        chain = _int_list(text)
        rings = [chain[: i + 1] for i in range(len(chain))]
    return rings[-1:] if outer_only else rings


def cmd_wheel(args) -> int:
    rings = [natural(P, args.budget) for P in _parse_rings(args.rings, args.outer_only)]
    render_wheel_svg(WheelStyle(rings, args.layout, args.highlight), args.output)
    print(f"wrote {args.output} ({len(rings)} rings, outer k = {rings[-1].wavelength})", file=sys.stderr)
    return 0


def cmd_primes(args) -> int:
    if args.first is not None:
        out = oracle.primes_first(args.first)
    elif args.gaps is not None:
        out = oracle.gap_pairs_upto(args.upto, args.gaps, args.consecutive)
    else:
        out = oracle.primes_upto(args.upto)
    if args.format == "json":
        print(json.dumps(out))
    elif out and isinstance(out[0], tuple):
        print("\n".join(f"{p} {q}" for p, q in out))
    else:
        print(" ".join(map(str, out)))
    return 0


def cmd_verify(args) -> int:
    return 0 if verify.run(args.max_prime, args.budget) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-snakes", type=_positive, default=Budget().max_snakes,
                        help="materialization budget (default %(default)s)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tail", type=int, default=4, help="tail values per snake row")
    common.add_argument("--header-layout", choices=("tabbed", "columns"), default="tabbed")
    common.add_argument("--no-header", action="store_true")

    parser = argparse.ArgumentParser(prog="hydras", description="Hydra recursion toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    p = add("hydra", cmd_hydra, help="print a hydra")
    p.add_argument("--primes", type=_int_list, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--twins", action="store_true")
    p.add_argument("--mark-pairs", type=_str_list, metavar="I1,I2", help="flag snakes with these index prefixes")

    p = add("recurse", cmd_recurse, help="natural hydra by recursion from the root")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--steps", type=int)
    g.add_argument("--upto-prime", type=int)

    p = add("split", cmd_split, help="split a hydra by one more prime")
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--by", type=int, required=True)
    p.add_argument("--all", action="store_true")

    p = add("select", cmd_select, help="sub-hydra by index, distance or twins")
    p.add_argument("--primes", type=_int_list, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--index", type=_str_list)
    g.add_argument("--dist", type=int)
    g.add_argument("--twins", action="store_true")

    p = add("diff", cmd_diff, help="gaps between consecutive alive snakes")
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--table", action="store_true", help="histogram instead of the gap vector")

    p = add("dist", cmd_dist, help="distance matrix of alive snakes")
    p.add_argument("--primes", type=_int_list, required=True)

    p = add("counts", cmd_counts, help="closed-form counts (no materialization)")
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--predict", type=int)

    p = add("kronecker", cmd_kronecker, help="hydra with a pair at even distance d")
    p.add_argument("--distance", type=int, required=True)
    p.add_argument("--materialize", action="store_true")

    p = add("polignac", cmd_polignac, help="hydra with a consecutive pair at even gap")
    p.add_argument("--gap", type=int, required=True)
    p.add_argument("--brute", action="store_true")
    p.add_argument("--materialize", action="store_true")

    p = add("density", cmd_density, help="density products and reference values")
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("wheel", cmd_wheel, help="SVG wheel diagram")
    p.add_argument("--rings", required=True,
                   help="prime chain '2,3,5' (one ring per prefix) or explicit rings '2;2,3;2,3,5'")
    p.add_argument("--layout", choices=("sorted", "recursive"), default="sorted")
    p.add_argument("--highlight", choices=("none", "twins"), default="none")
    p.add_argument("--outer-only", action="store_true", help="draw only the last ring")
    p.add_argument("-o", "--output", required=True)

    p = add("primes", cmd_primes, help="oracle prime lists")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--first", type=int)
    g.add_argument("--gaps", type=int, metavar="D")
    p.add_argument("--upto", type=int)
    p.add_argument("--consecutive", action="store_true")

    p = add("verify", cmd_verify, help="cross-check everything against the oracle")
    p.add_argument("--max-prime", type=int, default=13)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.budget = Budget(args.max_snakes)
    if args.command == "primes":
        if args.first is None and args.upto is None:
            parser.error("primes needs --first or --upto")
        if args.gaps is not None and args.upto is None:
            parser.error("primes --gaps needs --upto")
    try:
        return args.func(args)
    except HydraError as exc:
        print(f"error: {exc.case}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
