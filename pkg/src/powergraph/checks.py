"""Invariant checks run by ``powergraph verify`` over the built-in catalog."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .catalog import catalog
from .cycles import cycle_bounds, longest_cycle_oracle
from .graphs import is_transitive
from .errors import TooLarge
from .groups import GL2, GroupTable, build_group, find_singer_element
from .isomorphism import are_isomorphic_digraphs
from .numtheory import factorize
from .power import LazyPowerGraph, directed_power_graph, power_graph, proper_power_graph
from .quotients import component_counts, is_locally_strong, is_tame, o_tame_trivial_check
from .reconstruction import (
    _diamond_structure,
    analyze_n_classes,
    classify_n_class,
    critical_classes,
    orient,
)
from .recognition import (
    abelian_invariants_from_power_graph,
    element_orders_from_digraph,
    sylow_decomposition_from_order_counts,
)
from .relations import (
    StarTag,
    classify_star_case,
    diamond_partition_from_group,
    n_class_of,
    n_partition,
    twin_partition,
)


@dataclass(frozen=True)
class CheckResult:
    group: str
    check: str
    ok: bool
    detail: str = ""
    skipped: bool = False

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        status = "SKIP" if self.skipped else "PASS" if self.ok else "FAIL"
        return f"{status} {self.group} {self.check}{tail}"


def expected_abelian_invariants(G: GroupTable) -> list[int]:
    """Invariants of an abelian group computed from its element orders alone."""
    out = []
    for p, _ in factorize(G.n):
        counts: dict[int, int] = {}
        for o in G.order:
            if o > 1 and not o % p and all(q == p for q, _ in factorize(o)):
                counts[o] = counts.get(o, 0) + 1
        out += sylow_decomposition_from_order_counts(counts, p)
    return sorted(out)


def n_classes_latin(g) -> bool:
    """Two closed-twin classes joined by one edge are joined by all edges."""
    npart = n_partition(g)
    cls = npart.class_of
    for a, A in enumerate(npart.classes):
        touched = {cls[y] for y in g.adj[A[0]]} - {a}
        for b in touched:
            B = npart.classes[b]
            if any(y not in g.adj[x] for x in A for y in B):
                return False
    return True


def group_checks(name: str, G: GroupTable, iso_budget_s: float = 30.0) -> list[CheckResult]:
    out = []

    def add(check, ok, detail=""):
        out.append(CheckResult(name, check, bool(ok), detail))

    g = power_graph(G)
    d = directed_power_graph(G)
    add("directed-transitive", is_transitive(d))
    add("roundtrip", are_isomorphic_digraphs(orient(g), d, iso_budget_s) is not None)
    sizes = sorted(len(c) for c in _diamond_structure(g).partition.classes)
    add("diamond-sizes", sizes == sorted(len(c) for c in diamond_partition_from_group(G).classes))
    add("element-orders", element_orders_from_digraph(d) == list(G.order))
    add("n-classes-latin", n_classes_latin(g))
    if G.is_abelian():
        got = abelian_invariants_from_power_graph(g)
        want = expected_abelian_invariants(G)
        add("abelian-invariants", got == want, f"{got}")
    if G.n >= 2:
        c = component_counts(G)
        add("component-counts", c[0] == c[1] == c[2], f"{c}")
        pg, index = proper_power_graph(G)
        keep = sorted(index, key=index.get)
        npg = n_partition(pg)
        dia = diamond_partition_from_group(G).restrict(keep)
        add("n-quotient-tame-strong", is_tame(pg, npg) and is_locally_strong(pg, npg))
        add("diamond-quotient-tame-strong", is_tame(pg, dia) and is_locally_strong(pg, dia))
        tp = twin_partition(pg)
        add("t-tame-iff-t-equals-n", is_tame(pg, tp) == (tp.classes == npg.classes))
        add("o-tame-iff-trivial", o_tame_trivial_check(G))
    if G.n >= 3:
        try:
            m_o, bound = cycle_bounds(G)
        except TooLarge as exc:
            out.append(CheckResult(name, "cycle-bounds", True, str(exc), skipped=True))
            return out
        detail = f"M_o={m_o} w_G+1={bound}"
        ok = m_o <= bound
        if G.n <= 20:
            longest = longest_cycle_oracle(g)
            ok = ok and longest >= bound
            detail += f" longest={longest}"
        add("cycle-bounds", ok, detail)
    return out


def _cycle_type(label: str) -> tuple[int, ...]:
    return tuple(sorted(len(c.split()) for c in re.findall(r"\(([^)]*)\)", label)))


def lazy_critical_scan(G: GroupTable) -> list[dict]:
    """Critical classes of ``P(G)`` for a permutation group, one cycle type at a time.

    Conjugation is an automorphism of the power graph, so one element per
    cycle type covers every class up to isomorphism.
    """
    g = LazyPowerGraph(G)
    star = {G.identity}
    seen: dict[tuple[int, ...], int] = {}
    for x in range(G.n):
        if x != G.identity:
            seen.setdefault(_cycle_type(G.labels[x]), x)
    out = []
    for ct, x in sorted(seen.items()):
        C = n_class_of(g, x)
        t = classify_n_class(g, star, C)
        if t.critical:
            out.append({"representative": G.labels[x], "cycle_type": list(ct), "size": len(C),
                        "p": t.p, "r": t.r, "type": t.kind})
    return out


def critical_scan(names_specs) -> list[dict]:
    out = []
    for name, spec in names_specs:
        G = build_group(spec)
        if G.n > 4096:
            for row in lazy_critical_scan(G):
                out.append({"group": name, **row})
            continue
        g = power_graph(G)
        if classify_star_case(g).tag != StarTag.SINGLETON_STAR:
            continue
        _, reports = analyze_n_classes(g)
        for info in critical_classes(reports):
            rep = reports[info.class_index]
            out.append({"group": name, "class": info.class_index, "representative": G.labels[rep.members[0]],
                        "size": rep.size, "p": info.p, "r": info.r, "type": info.resolved_type})
    return out


def run_verify(extended: bool = False, huge: bool = False, iso_budget_s: float = 30.0) -> list[CheckResult]:
    results = []
    for name, spec in catalog(extended, huge=False):
        results += group_checks(name, build_group(spec), iso_budget_s)
    if extended:
        G = build_group(GL2(5))
        g = power_graph(G)
        t = classify_n_class(g, {G.identity}, n_class_of(g, find_singer_element(G, 5)))
        ok = t.kind == "FirstType" and t.critical and (t.p, t.r) == (3, 2)
        results.append(CheckResult("GL2_5", "singer-class-critical", ok, f"{t.kind} ({t.p},{t.r})"))
    if huge:
        rows = [r for r in critical_scan([("S8", catalog(huge=True)[-1][1])]) if r["cycle_type"] == [3, 5]]
        ok = len(rows) == 1 and rows[0]["type"] == "FirstType" and (rows[0]["p"], rows[0]["r"]) == (3, 2)
        detail = f"{rows[0]['type']} ({rows[0]['p']},{rows[0]['r']})" if rows else "not critical"
        results.append(CheckResult("S8", "critical-[3,5]", ok, detail))
    return results
