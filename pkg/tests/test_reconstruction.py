import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CATALOG, group
from powergraph.errors import (
    ClassificationFailed,
    NotAnNClass,
    NotAPowerGraphShape,
    NotSingletonStar,
    OrientationAmbiguous,
    SizeMismatch,
)
from powergraph.graphs import Digraph, Graph, relabel_graph, underlying_undirected
from powergraph.isomorphism import are_isomorphic_digraphs
from powergraph.power import directed_power_graph, power_graph
from powergraph.reconstruction import (
    FIRST,
    SECOND,
    STAR,
    NClassType,
    analyze_n_classes,
    classify_n_class,
    detect_size_signature,
    diamond_from_power_graph,
    orient,
    split_second_type,
)
from powergraph.relations import StarTag, classify_star_case, diamond_partition_from_group, n_partition

SINGLETON = [n for n in CATALOG if classify_star_case(power_graph(group(n))).tag == StarTag.SINGLETON_STAR]


def test_signature_examples():
    assert detect_size_signature(7, 8) == (2, 3, 0)
    assert detect_size_signature(8, 9) == (3, 2, 0)
    assert detect_size_signature(4, 12) is None
    assert detect_size_signature(6, 8) == (2, 3, 1)
    assert detect_size_signature(2, 3) is None  # r must be at least 2
    assert detect_size_signature(5, 5) is None


def types_by_class(name):
    g = power_graph(group(name))
    _, reports = analyze_n_classes(g)
    return reports


def test_typing_examples():
    s4 = [r for r in types_by_class("S4") if r.type.kind == SECOND]
    assert len(s4) == 3 and all(r.type.params() == (2, 2, 0) for r in s4)
    d9 = [r for r in types_by_class("D9") if r.type.kind == SECOND]
    assert len(d9) == 1 and d9[0].type.params() == (3, 2, 0) and d9[0].type.critical
    d15 = [r for r in types_by_class("D15") if r.type.critical]
    assert len(d15) == 1
    r = d15[0]
    assert r.type.kind == FIRST and (r.type.p, r.type.r) == (3, 2) and r.size == 8 and r.chat_size == 9
    d8 = [r for r in types_by_class("D8") if r.type.kind == SECOND]
    assert len(d8) == 1 and (d8[0].type.p, d8[0].type.r) == (2, 3) and d8[0].size == 7 and d8[0].chat_size == 8


@pytest.mark.parametrize("name", SINGLETON)
def test_typing_matches_group_side(name):
    """First type iff the class is one generator class; second-type classes are the stated order band."""
    G = group(name)
    g = power_graph(G)
    dia = diamond_partition_from_group(G)
    _, reports = analyze_n_classes(g)
    for rep in reports:
        t = rep.type
        if t.kind == STAR:
            assert rep.members == (G.identity,)
            continue
        n_dia = len({dia.class_of[v] for v in rep.members})
        assert (t.kind == FIRST) == (n_dia == 1)
        if t.kind == SECOND:
            y = max(rep.members, key=lambda v: G.order[v])
            band = {z for z in G.cyc[y] if t.p ** (t.s + 1) <= G.order[z] <= t.p**t.r}
            assert set(rep.members) == band


def test_classify_errors():
    g = power_graph(group("S4"))
    with pytest.raises(NotSingletonStar):
        classify_n_class(g, {0, 1}, [1])
    npart = n_partition(g)
    big = next(c for c in npart.classes if len(c) == 3)
    with pytest.raises(NotAnNClass):
        classify_n_class(g, {0}, big[:2])
    with pytest.raises(NotAnNClass):
        classify_n_class(g, {0}, [])


def test_split_examples():
    assert [len(m) for m, _ in split_second_type(range(3), NClassType(SECOND, 2, 2, 0))] == [1, 2]
    parts = split_second_type(range(10, 17), NClassType(SECOND, 2, 3, 0))
    assert [len(m) for m, _ in parts] == [1, 2, 4]
    assert [o for _, o in parts] == [2, 4, 8]
    assert parts[0][0] == (10,)
    assert [len(m) for m, _ in split_second_type(range(8), NClassType(SECOND, 3, 2, 0))] == [2, 6]
    with pytest.raises(SizeMismatch):
        split_second_type(range(5), NClassType(SECOND, 2, 2, 0))


def test_diamond_from_power_graph_examples():
    split = diamond_from_power_graph(power_graph(group("S4")))
    assert len(split.partition) == 17
    sizes = sorted(split.partition.sizes())
    assert sizes == sorted(diamond_partition_from_group(group("S4")).sizes())
    d15 = sorted(diamond_from_power_graph(power_graph(group("D15"))).partition.sizes())
    assert d15 == [1] * 16 + [2, 4, 8]
    d9 = sorted(diamond_from_power_graph(power_graph(group("D9"))).partition.sizes())
    assert d9 == [1] * 10 + [2, 6]
    with pytest.raises(NotSingletonStar):
        diamond_from_power_graph(power_graph(group("C6")))


@pytest.mark.parametrize("name", SINGLETON)
def test_diamond_sizes_match_group(name):
    G = group(name)
    split = diamond_from_power_graph(power_graph(G))
    assert sorted(split.partition.sizes()) == sorted(diamond_partition_from_group(G).sizes())
    assert split.identity == G.identity


@pytest.mark.parametrize("name", CATALOG)
def test_orient_roundtrip(name):
    G = group(name)
    g = power_graph(G)
    d = orient(g)
    assert underlying_undirected(d) == g
    assert are_isomorphic_digraphs(d, directed_power_graph(G)) is not None


def test_orient_trivial_group():
    d = orient(Graph(1, [()]))
    assert d.n == 1 and d.arc_count() == 0


def test_orient_rejects_non_power_graphs():
    with pytest.raises(NotAPowerGraphShape):
        orient(Graph.complete(6))
    # two equal joined classes, each next to its own involution candidate
    edges = [(0, v) for v in range(1, 7)] + [(1, 2), (3, 4), (1, 3), (1, 4), (2, 3), (2, 4), (5, 1), (5, 2), (6, 3), (6, 4)]
    with pytest.raises(OrientationAmbiguous):
        orient(Graph.from_edges(7, edges))
    # a first-type class of odd size
    edges = [(0, v) for v in range(1, 7)] + [(1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (4, 3), (4, 5)]
    with pytest.raises(ClassificationFailed):
        orient(Graph.from_edges(7, edges))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["S4", "D9", "D15", "D8", "A4", "C2xC10"]), st.randoms(use_true_random=False))
def test_typing_invariant_under_relabelling(name, rnd):
    g = power_graph(group(name))
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel_graph(g, perm)
    _, ra = analyze_n_classes(g)
    _, rb = analyze_n_classes(h)
    by_vertex = {perm[v]: r.type for r in ra for v in r.members}
    for r in rb:
        for v in r.members:
            assert by_vertex[v] == r.type


@pytest.mark.parametrize("name", CATALOG)
def test_n_classes_joined_all_or_nothing(name):
    g = power_graph(group(name))
    npart = n_partition(g)
    for a in npart.classes:
        for b in npart.classes:
            if a is b:
                continue
            joined = [y in g.adj[x] for x in a for y in b]
            assert all(joined) or not any(joined)


@pytest.mark.parametrize("name", SINGLETON)
def test_class_size_monotonicity(name):
    G = group(name)
    g = power_graph(G)
    npart = n_partition(g)
    dia = diamond_partition_from_group(G)
    first = {k: len({dia.class_of[v] for v in c}) == 1 for k, c in enumerate(npart.classes)}
    star = npart.class_of[G.identity]
    for y in range(G.n):
        for x in G.cyc[y]:
            cx, cy = npart.class_of[x], npart.class_of[y]
            if cx == cy or star in (cx, cy) or len(G.cyc[x]) == len(G.cyc[y]):
                continue
            sx, sy = len(npart.classes[cx]), len(npart.classes[cy])
            assert sx <= sy
            ox, oy = G.order[x], G.order[y]
            expected_eq = first[cx] and first[cy] and oy == 2 * ox and ox % 2 == 1 and ox >= 3
            assert (sx == sy) == expected_eq, (name, x, y)
