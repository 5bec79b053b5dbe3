"""Command-line front end: ``powergraph <command> [options]``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks
from .catalog import catalog, parse_group_name
from .cycles import (
    ORACLE_MAX,
    PATH_BUDGET,
    hamiltonian_cycle_power_cyclic,
    heaviest_class_path,
    longest_cycle_oracle,
)
from .errors import InvalidSpec, PowerGraphError, PreconditionViolated, TooLarge
from .graphs import Digraph, Graph, dumps, parse_dot, quotient, to_dot, to_json_dict
from .groups import FromCayleyFile, build_group, exponent, order_census
from .isomorphism import are_isomorphic_digraphs, are_isomorphic_graphs
from .power import directed_power_graph, power_graph, proper_power_graph
from .quotients import component_counts, is_locally_strong, is_tame
from .reconstruction import analyze_n_classes, orient
from .recognition import abelian_invariants_from_power_graph, element_orders_from_digraph
from .relations import (
    StarTag,
    classify_star_case,
    diamond_partition_from_group,
    n_partition,
    o_partition,
    open_twin_partition,
    twin_partition,
)


def _budget_s(args) -> float:
    return args.budget_ms / 1000.0 if args.budget_ms else 30.0


def _load_group(args):
    if args.group:
        spec = parse_group_name(args.group)
    elif getattr(args, "in_path", None):
        spec = FromCayleyFile(args.in_path)
    else:
        raise InvalidSpec("a group is required: pass --group NAME or --in table.csv")
    return build_group(spec)


def _load_graph(args) -> tuple[Graph, list[str] | None, object]:
    """Graph from ``--in`` (DOT) or the power graph of ``--group``; also returns the group if built."""
    if args.in_path:
        try:
            text = Path(args.in_path).read_text(encoding="utf-8")
            g, labels = parse_dot(text)
        except (OSError, ValueError) as exc:
            raise InvalidSpec(f"cannot read graph {args.in_path}: {exc}") from None
        if isinstance(g, Digraph):
            raise PreconditionViolated("expected an undirected graph")
        return g, labels, None
    G = _load_group(args)
    return power_graph(G), G.labels, G


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render(args, g, labels, name) -> str:
    if args.format == "json":
        return dumps(to_json_dict(g, labels)) + "\n"
    return to_dot(g, labels, name)


def _classes(part, labels=None):
    if labels is None:
        return [list(c) for c in part.classes]
    return [[labels[v] for v in c] for c in part.classes]


def cmd_group(args) -> int:
    G = _load_group(args)
    info = {
        "name": args.group or G.name,
        "order": G.n,
        "abelian": G.is_abelian(),
        "exponent": exponent(G),
        "identity": G.identity,
        "order_census": {str(k): v for k, v in order_census(G).items()},
        "labels": G.labels,
    }
    _emit(args, dumps(info) + "\n")
    return 0


def cmd_power(args) -> int:
    G = _load_group(args)
    name = args.group or G.name
    if args.command == "power":
        text = _render(args, power_graph(G), G.labels, name)
    elif args.command == "dpower":
        text = _render(args, directed_power_graph(G), G.labels, name)
    else:
        pg, index = proper_power_graph(G)
        labels = [G.labels[v] for v in sorted(index, key=index.get)]
        text = _render(args, pg, labels, name)
    _emit(args, text)
    return 0


def cmd_classes(args) -> int:
    g, labels, G = _load_graph(args)
    report = {
        "N": _classes(n_partition(g), labels),
        "O": _classes(open_twin_partition(g), labels),
        "T": _classes(twin_partition(g), labels),
        "star_case": classify_star_case(g).tag.value,
    }
    if G is not None:
        report["diamond"] = _classes(diamond_partition_from_group(G), labels)
        report["order"] = _classes(o_partition(G), labels)
    _emit(args, dumps(report) + "\n")
    return 0


def _class_report(g) -> dict:
    case = classify_star_case(g)
    out = {"star_case": case.tag.value, "star": sorted(case.star_set)}
    if case.tag == StarTag.SINGLETON_STAR:
        _, reports = analyze_n_classes(g, case.star_set)
        out["classes"] = [r.to_dict() for r in reports]
    else:
        out["classes"] = [
            {"index": k, "members": list(c), "size": len(c), "chat_size": None, "type": None,
             "params": None, "critical": False}
            for k, c in enumerate(n_partition(g).classes)
        ]
    return out


def cmd_reconstruct(args) -> int:
    g, labels, G = _load_graph(args)
    d = orient(g)
    if args.report:
        Path(args.report).write_text(dumps(_class_report(g)) + "\n", encoding="utf-8")
    if args.check:
        if G is None:
            raise PreconditionViolated("--check needs --group to compare against")
        same = are_isomorphic_digraphs(d, directed_power_graph(G), _budget_s(args)) is not None
        print(f"isomorphic: {'true' if same else 'false'}")
        if args.out:
            Path(args.out).write_text(_render(args, d, labels, "reconstructed"), encoding="utf-8")
        return 0
    _emit(args, _render(args, d, labels, "reconstructed"))
    return 0


def cmd_recognize(args) -> int:
    g, _, _ = _load_graph(args)
    case = classify_star_case(g)
    invariants = abelian_invariants_from_power_graph(g)
    orders = element_orders_from_digraph(orient(g))
    census: dict[int, int] = {}
    for o in orders:
        census[o] = census.get(o, 0) + 1
    out = {
        "cyclic": case.tag in (StarTag.COMPLETE_CYCLIC_PRIME_POWER, StarTag.CYCLIC_NON_PRIME_POWER),
        "invariants": invariants,
        "order_census": {str(k): census[k] for k in sorted(census)},
    }
    _emit(args, dumps(out) + "\n")
    return 0


def _cyclic_witness(G) -> list[str] | None:
    if G.n < 3 or max(G.order) != G.n:
        return None
    gen = G.order.index(G.n)
    powers = [G.identity]
    for _ in range(G.n - 1):
        powers.append(G.mul(powers[-1], gen))
    # element k of the standard cyclic group is gen^k
    return [G.labels[powers[k]] for k in hamiltonian_cycle_power_cyclic(G.n)]


def cmd_cycles(args) -> int:
    G = _load_group(args)
    if G.n < 3:
        raise PreconditionViolated("cycle bounds need a group of order at least 3")
    _, _, res = heaviest_class_path(G, PATH_BUDGET)
    g = power_graph(G)
    out = {
        "M_o": max(G.order),
        "w_G": res.w_G,
        "bound": res.w_G + 1,
        "oracle_longest": longest_cycle_oracle(g) if G.n <= ORACLE_MAX else None,
        "hamiltonian_witness": _cyclic_witness(G),
    }
    _emit(args, dumps(out) + "\n")
    return 0


def cmd_quotient(args) -> int:
    G = _load_group(args)
    if args.proper:
        g, index = proper_power_graph(G)
        keep = sorted(index, key=index.get)
    else:
        g = power_graph(G)
        keep = list(range(G.n))
    labels = [G.labels[v] for v in keep]
    rel = args.relation
    if rel == "N":
        part = n_partition(g)
    elif rel == "O":
        part = open_twin_partition(g)
    elif rel == "T":
        part = twin_partition(g)
    else:
        part = diamond_partition_from_group(G).restrict(keep)
    q = quotient(g, part)
    if args.out:
        Path(args.out).write_text(to_dot(q, [labels[c[0]] for c in part.classes], f"quotient_{rel}"), encoding="utf-8")
    report = {
        "relation": rel,
        "proper": args.proper,
        "classes": _classes(part, labels),
        "quotient": to_json_dict(q),
        "tame": is_tame(g, part),
        "pseudo_covering": is_locally_strong(g, part),
        "component_counts": list(component_counts(G)) if G.n >= 2 else None,
    }
    sys.stdout.write(dumps(report) + "\n")
    return 0


def cmd_verify(args) -> int:
    results = checks.run_verify(args.extended, args.huge, _budget_s(args))
    failed = 0
    for r in results:
        print(r.line())
        failed += not r.ok
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_scan_critical(args) -> int:
    rows = checks.critical_scan(catalog(args.extended, args.huge))
    _emit(args, dumps(rows) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="group name, e.g. C12, D7, Q16, S4, C2xC10, UT3_3, GL2_5, file:<path>")
    common.add_argument("--in", dest="in_path", help="input DOT graph (or Cayley CSV for group commands)")
    common.add_argument("--out", help="write the main output here instead of stdout")
    common.add_argument("--format", choices=["dot", "json"], default="dot")
    common.add_argument("--budget-ms", type=int, default=0, help="time budget for isomorphism searches")
    common.add_argument("--extended", action="store_true", help="include GL2(5)")
    common.add_argument("--huge", action="store_true", help="include the lazy S8 scan")
    common.add_argument("--json-errors", action="store_true", help="report domain errors as JSON on stdout")

    parser = argparse.ArgumentParser(prog="powergraph", description="Power graphs of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("group", parents=[common], help="build a group and print a summary").set_defaults(func=cmd_group)
    for name, what in (("power", "power graph"), ("dpower", "directed power graph"), ("proper", "proper power graph")):
        sub.add_parser(name, parents=[common], help=f"emit the {what}").set_defaults(func=cmd_power)
    sub.add_parser("classes", parents=[common], help="report vertex partitions").set_defaults(func=cmd_classes)
    p = sub.add_parser("reconstruct", parents=[common], help="orient a power graph")
    p.add_argument("--report", help="write the class-typing report (JSON) here")
    p.add_argument("--check", action="store_true", help="compare with the directed power graph of --group")
    p.set_defaults(func=cmd_reconstruct)
    sub.add_parser("recognize", parents=[common], help="abelian invariants and order census").set_defaults(
        func=cmd_recognize
    )
    sub.add_parser("cycles", parents=[common], help="longest-cycle bounds").set_defaults(func=cmd_cycles)
    p = sub.add_parser("quotient", parents=[common], help="quotient by a vertex partition")
    p.add_argument("--relation", choices=["N", "O", "T", "diamond"], default="N")
    p.add_argument("--proper", action="store_true", help="use the proper power graph")
    p.set_defaults(func=cmd_quotient)
    sub.add_parser("verify", parents=[common], help="run the catalog invariant suite").set_defaults(func=cmd_verify)
    sub.add_parser("scan-critical", parents=[common], help="list critical classes").set_defaults(
        func=cmd_scan_critical
    )
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PowerGraphError as exc:
        if args.json_errors:
            sys.stdout.write(dumps({"error": exc.to_dict()}) + "\n")
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
