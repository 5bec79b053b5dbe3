import networkx as nx
import pytest

from conftest import SMALL, brute_cycle_vertex_sets, group, to_nx
from powergraph.cycles import (
    c2xc10_cycle,
    close_cycle_over_n_classes,
    cycle_bounds,
    hamiltonian_cycle_power_cyclic,
    hamiltonian_directed_path_prime_power,
    heaviest_class_path,
    is_cycle,
    longest_cycle_oracle,
    max_weight_path,
    maximal_directed_cycles,
    n_weight,
    no_heavy_neighbours,
)
from powergraph.errors import InvalidN, InvalidParams, NotACycle, OutOfRange, TooLarge, TooSmall
from powergraph.graphs import Graph, Partition
from powergraph.groups import cyclic_group
from powergraph.power import directed_power_graph, power_graph


# cycle enumeration explodes on the near-complete digraphs of larger cyclic groups
@pytest.mark.parametrize("name", [n for n in SMALL if group(n).n <= 10])
def test_maximal_directed_cycles_vs_networkx(name):
    d = directed_power_graph(group(name))
    cycles = [frozenset(c) for c in nx.simple_cycles(to_nx(d)) if len(c) >= 3]
    maximal = {c for c in cycles if not any(c < o for o in cycles)}
    assert set(maximal_directed_cycles(d)) == maximal


@pytest.mark.parametrize("name", SMALL)
def test_maximal_directed_cycles_exhaustive(name):
    d = directed_power_graph(group(name))
    sets = brute_cycle_vertex_sets(d)
    maximal = {c for c in sets if not any(c < o for o in sets)}
    assert set(maximal_directed_cycles(d)) == maximal


@pytest.mark.parametrize("n", range(3, 31))
def test_hamiltonian_cycle_cyclic(n):
    cyc = hamiltonian_cycle_power_cyclic(n)
    G = cyclic_group(n)
    assert len(cyc) == n and cyc[0] == G.identity
    assert is_cycle(power_graph(G), cyc)


def test_hamiltonian_cycle_small_n():
    for n in (0, 1, 2):
        with pytest.raises(InvalidN):
            hamiltonian_cycle_power_cyclic(n)


@pytest.mark.parametrize("p,k", [(2, 1), (2, 3), (3, 2), (5, 1)])
def test_directed_path_prime_power(p, k):
    path = hamiltonian_directed_path_prime_power(p, k)
    d = directed_power_graph(cyclic_group(p**k))
    assert sorted(path) == list(range(p**k))
    assert all(b in d.out[a] for a, b in zip(path, path[1:]))


def test_directed_path_bad_params():
    with pytest.raises(InvalidParams):
        hamiltonian_directed_path_prime_power(4, 1)
    with pytest.raises(InvalidParams):
        hamiltonian_directed_path_prime_power(3, 0)


def test_close_cycle():
    G = group("C2xC4")
    g = power_graph(G)
    e = G.identity
    x = G.order.index(4)
    sq = G.power(x, 2)
    closed = close_cycle_over_n_classes(g, [e, x, sq])
    assert is_cycle(g, closed)
    assert sorted(closed) == sorted({e, sq, x, G.inv[x]})
    with pytest.raises(NotACycle):
        close_cycle_over_n_classes(g, [e, x])


def test_close_cycle_on_c6():
    g = power_graph(cyclic_group(6))
    G = cyclic_group(6)
    out = close_cycle_over_n_classes(g, [G.identity, 1, 2])
    # generators join the identity's class; the involution 3 stays off the cycle
    assert is_cycle(g, out) and sorted(out) == [0, 1, 2, 4, 5]


def test_n_weight():
    p = Partition.from_classes(5, [[0], [1, 2], [3, 4]])
    assert n_weight(p, 1) == 2
    assert n_weight(p, [0, 2]) == 3
    with pytest.raises(OutOfRange):
        n_weight(p, 3)


def test_max_weight_path():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    res = max_weight_path(path, [1, 5, 1, 4])
    assert res.weight == 11 and res.path == (0, 1, 2, 3)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    res = max_weight_path(star, [1, 3, 3, 2])
    assert res.weight == 7 and res.path == (1, 0, 2)  # lexicographically least among ties
    with pytest.raises(TooLarge):
        max_weight_path(Graph.complete(5), [1] * 5, budget=4)


@pytest.mark.parametrize("name,expected", [("C5", (5, 5)), ("C8", (8, 8)), ("C12", (12, 12))])
def test_cycle_bounds_cyclic(name, expected):
    assert cycle_bounds(group(name)) == expected


def test_cycle_bounds_examples():
    assert cycle_bounds(group("C2xC10")) == (10, 15)
    assert cycle_bounds(group("C2xC4")) == (4, 6)
    with pytest.raises(TooSmall):
        cycle_bounds(group("C2"))


@pytest.mark.parametrize("name", [n for n in SMALL if group(n).n >= 3])
def test_bounds_below_oracle(name):
    G = group(name)
    m_o, bound = cycle_bounds(G)
    longest = longest_cycle_oracle(power_graph(G))
    assert m_o <= bound <= longest


def test_oracle_values():
    assert longest_cycle_oracle(power_graph(group("C2xC4"))) == 6
    for k in range(3, 8):
        assert longest_cycle_oracle(power_graph(group(f"D{k}"))) == k
    assert longest_cycle_oracle(power_graph(group("C2xC10"))) == 20
    assert longest_cycle_oracle(Graph.from_edges(3, [(0, 1), (1, 2)])) == 0
    with pytest.raises(TooLarge):
        longest_cycle_oracle(Graph.complete(21))


def test_oracle_on_petersen_graph():
    h = nx.petersen_graph()
    g = Graph.from_edges(10, list(h.edges()))
    assert longest_cycle_oracle(g) == 9


def test_c2xc10_cycle():
    G = group("C2xC10")
    cyc = c2xc10_cycle(G)
    assert len(cyc) == 20 and is_cycle(power_graph(G), cyc)


def test_no_heavy_neighbours_c2xc4():
    q, part, res = heaviest_class_path(group("C2xC4"))
    assert no_heavy_neighbours(q, part.sizes(), res.path)


def test_is_cycle_rejects():
    g = Graph.complete(4)
    assert not is_cycle(g, [0, 1])
    assert not is_cycle(g, [0, 1, 1])
    assert not is_cycle(g, [0, 1, 7])
    assert is_cycle(g, [0, 1, 2, 3])
