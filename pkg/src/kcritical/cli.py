"""Command-line front end: ``kcritical <subcommand> ...``.

Exit status is 0 on success (or a passed verification), 1 when a
verification fails, and 2 on usage errors or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .barriers import deficiency_k
from .criticality import (
    barrier_uniqueness_check,
    classify_gbc,
    classify_gfc,
    classify_kd,
    classify_parity,
    even_k_by_deletion,
    kd_by_definition,
)
from .enumeration import (
    EnumerationBudgetExceeded,
    EnumerationStats,
    EnumerationTask,
    enumerate_graphs,
)
from .extremal import parse_family
from .graph import (
    Graph,
    GraphError,
    bits,
    component_summary,
    from_edge_list_text,
    from_graph6,
    is_connected,
    read_graph6_file,
    to_graph6,
    write_graph6_file,
)
from .harness import FACTOR_VARIANTS, RegimeError, verify
from .matchings import (
    cycle_factor_search,
    factor_from_fractional,
    factor_predicates,
    fractional_matching,
    k_matching_from_factor,
)
from .spectral import DEFAULT_TOL, SpectralError, spectral_radius, spectral_radius_charpoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph6 string")
    src.add_argument("--g6-file", type=Path, help="file with one graph6 string per line")
    src.add_argument("--edges", type=Path, help="edge-list file: 'n m' header then 'u v' lines")
    src.add_argument("--family", help='family expression such as "K1 v (K6 + 1*K1)"')


def _load_graphs(args) -> list[Graph]:
    try:
        if args.g6 is not None:
            return [from_graph6(args.g6)]
        if args.g6_file is not None:
            graphs = read_graph6_file(args.g6_file)
            if not graphs:
                raise UsageError(f"{args.g6_file} holds no graphs")
            return graphs
        if args.edges is not None:
            return [from_edge_list_text(args.edges.read_text())]
        return [parse_family(args.family)]
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    except (GraphError, ValueError) as exc:
        raise UsageError(f"bad graph input: {exc}") from exc


def _subset_text(mask: int | None) -> str:
    return "{" + ", ".join(map(str, bits(mask))) + "}" if mask is not None else "-"


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# --- subcommands ------------------------------------------------------------


def cmd_analyze(args) -> int:
    for g in _load_graphs(args):
        summary = component_summary(g)
        out = {
            "graph6": to_graph6(g), "n": g.n, "m": g.m, "connected": is_connected(g),
            "degrees": g.degrees(), "components": summary.orders,
            "deficiency": {}, "criticality": {},
        }
        for k in args.k_values:
            report = deficiency_k(g, k)
            out["deficiency"][k] = {"value": report.deficiency,
                                    "barrier": sorted(bits(report.witness))}
            if g.n:
                out["criticality"][k] = classify_parity(g, k).to_dict()
        frac = fractional_matching(g)
        out["fractional_matching_number"] = str(frac.value)
        if is_connected(g) and g.n:
            est = spectral_radius(g)
            out["spectral_radius"] = est.rho
            out["spectral_bracket"] = [est.lower, est.upper]
        if g.n <= args.factor_limit:
            pred = factor_predicates(g, 2)
            out["factors"] = {"k2_cycle": pred.cycle_factor, "k2_odd_cycle": pred.odd_cycle_factor,
                              "fractional_perfect": pred.fractional_perfect,
                              "perfect_even_k_matching": pred.perfect_k_matching}
        _print_json(out)
    return EXIT_OK


def cmd_classify(args) -> int:
    for g in _load_graphs(args):
        prop = args.property
        if prop == "kd" and args.d is None:
            raise UsageError("--property kd needs --d")
        if args.d is not None and prop not in ("kd", "auto"):
            raise UsageError("--d only applies to --property kd")
        try:
            if prop == "kd" or (prop == "auto" and args.d is not None):
                verdict = (kd_by_definition(g, args.k, args.d) if args.method == "definitional"
                           else classify_kd(g, args.k, args.d))
            elif args.method == "barrier":
                verdict = barrier_uniqueness_check(g, args.k)
            elif args.method == "definitional":
                if args.k % 2:
                    verdict = kd_by_definition(g, args.k, 1 if g.n % 2 else 2)
                else:
                    verdict = even_k_by_deletion(g, args.k, definitional=True)
            elif prop == "gfc":
                verdict = classify_gfc(g, args.k)
            elif prop == "gbc":
                verdict = classify_gbc(g, args.k)
            else:
                verdict = classify_parity(g, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.json:
            _print_json({"graph6": to_graph6(g), **verdict.to_dict()})
            continue
        label = verdict.property + (f" d={verdict.d}" if verdict.d is not None else "")
        line = f"{to_graph6(g)}  k={verdict.k}  {label}: {'yes' if verdict.holds else 'no'}"
        if not verdict.holds:
            w = _subset_text(verdict.witness) if verdict.witness_kind == "subset" else verdict.witness
            line += f"  ({verdict.witness_kind} witness {w})"
        print(line + f"  [{verdict.method}]")
    return EXIT_OK


def cmd_spectral(args) -> int:
    for g in _load_graphs(args):
        try:
            res = spectral_radius_charpoly(g, args.tol) if args.exact else spectral_radius(g, args.tol)
        except SpectralError as exc:
            raise UsageError(str(exc)) from exc
        print(f"{res.rho:.{args.digits}f}")
        if args.verbose:
            print(f"  bracket [{res.lower!r}, {res.upper!r}] via {res.method}, "
                  f"{res.iterations} iterations")
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        g = parse_family(args.family)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    out = {"family": args.family, "graph6": to_graph6(g), "n": g.n, "m": g.m,
           "connected": is_connected(g)}
    if is_connected(g) and g.n:
        out["spectral_radius"] = spectral_radius(g).rho
    _print_json(out)
    return EXIT_OK


def cmd_factor(args) -> int:
    for g in _load_graphs(args):
        out = {"graph6": to_graph6(g), "variant": args.variant}
        if args.variant == "fractional":
            frac = fractional_matching(g)
            frac.validate(g)
            out["perfect"] = frac.total_doubled == g.n
            out["weights"] = {f"{u}-{v}": "1/2" if w == 1 else str(w // 2)
                              for (u, v), w in sorted(frac.doubled_weights.items())}
        else:
            frac = fractional_matching(g)
            if frac.total_doubled == g.n and args.variant == "odd-cycle":
                factor = factor_from_fractional(g, frac)
            else:
                factor = cycle_factor_search(g, odd_only=args.variant == "odd-cycle")
            out["exists"] = factor is not None
            if factor is not None:
                out["k2_edges"] = [list(e) for e in factor.k2_edges]
                out["cycles"] = [list(c) for c in factor.cycles]
                if args.k is not None:
                    if args.k % 2:
                        raise UsageError("--k must be even for a k-matching from a factor")
                    km = k_matching_from_factor(g, factor, args.k)
                    out["k_matching"] = {f"{u}-{v}": w for (u, v), w in sorted(km.weights.items())}
        _print_json(out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    threshold = None
    if args.mode == "spectral-filtered":
        if args.threshold_family is None:
            raise UsageError("spectral-filtered needs --threshold-family")
        try:
            tg = parse_family(args.threshold_family)
        except (GraphError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        from .spectral import exact_spectral_radius

        threshold = exact_spectral_radius(tg)
    if args.mode == "dense-by-complement" and args.max_complement_edges is None:
        raise UsageError("dense-by-complement needs --max-complement-edges")
    task = EnumerationTask(args.n, args.mode, args.max_complement_edges, threshold, args.dedup)
    stats = EnumerationStats()
    try:
        graphs = list(enumerate_graphs(task, stats))
    except (EnumerationBudgetExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.dump_g6:
        write_graph6_file(args.dump_g6, graphs)
    print(f"n={args.n} mode={args.mode} dedup={args.dedup}: {len(graphs)} graphs "
          f"({stats.disconnected} disconnected skipped, {stats.below_threshold} below threshold)")
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {"workers": args.workers}
    if args.theorem in ("C10", "C11"):
        kwargs["variant"] = args.variant
    if args.theorem not in ("T9",):
        kwargs["dedup"] = not args.labeled
        if args.k is None and args.theorem not in ("C10", "C11"):
            raise UsageError(f"{args.theorem} needs --k")
    elif args.k is None:
        raise UsageError("T9 needs --k (an even integer)")
    try:
        report = verify(args.theorem, args.n, args.k, args.d, **kwargs)
    except (RegimeError, EnumerationBudgetExceeded) as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n")
    status = "PASSED" if report.passed else "FAILED"
    print(f"{report.theorem_id} n={report.n} k={report.k} d={report.d}: {status} "
          f"(domain {report.domain_size}, exceptions {report.exceptions_found}, "
          f"expected {report.expected_exceptions}, {report.runtime_s:.2f}s)")
    return EXIT_OK if report.passed else EXIT_FAIL


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcritical", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one graph")
    _add_graph_input(p)
    p.add_argument("--k-values", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--factor-limit", type=int, default=12,
                   help="skip the factor searches above this order")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="GFC_k / GBC_k / k-d-critical verdict")
    _add_graph_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--property", choices=["gfc", "gbc", "kd", "auto"], default="auto")
    p.add_argument("--method", choices=["structural", "definitional", "barrier"],
                   default="structural")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("spectral", help="adjacency spectral radius")
    _add_graph_input(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--digits", type=int, default=2)
    p.add_argument("--exact", action="store_true", help="use the characteristic polynomial")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("family", help="build a family graph from its text form")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("factor", help="emit a factor decomposition")
    _add_graph_input(p)
    p.add_argument("--variant", choices=FACTOR_VARIANTS, default="cycle")
    p.add_argument("--k", type=int, help="also emit the perfect k-matching (even k)")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("enumerate", help="enumerate connected graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", default="all-labeled-connected",
                   choices=["all-labeled-connected", "dense-by-complement", "spectral-filtered"])
    p.add_argument("--max-complement-edges", type=int)
    p.add_argument("--threshold-family", help="family whose spectral radius is the threshold")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--dump-g6", type=Path)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively check one theorem at one order")
    p.add_argument("--theorem", required=True,
                   choices=["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "C10", "C11"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--variant", choices=FACTOR_VARIANTS, default="cycle")
    p.add_argument("--labeled", action="store_true",
                   help="check every labelled graph instead of one per isomorphism class")
    p.add_argument("--json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kcritical: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
