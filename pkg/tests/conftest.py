import os
from functools import lru_cache

import networkx as nx
import pytest

from powergraph.catalog import catalog, catalog_names, parse_group_name
from powergraph.graphs import Digraph, Graph
from powergraph.groups import build_group

EXTENDED = os.environ.get("POWERGRAPH_EXTENDED") == "1"


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="set POWERGRAPH_EXTENDED=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@lru_cache(maxsize=None)
def group(name):
    return build_group(parse_group_name(name))


CATALOG = catalog_names()
SMALL = [n for n in CATALOG if group(n).n <= 12]


def brute_powers(G, x):
    """Powers of x by repeated multiplication, independent of the cached data."""
    out = {G.identity}
    cur = x
    while cur not in out:
        out.add(cur)
        cur = G.mul(cur, x)
    return out


def brute_power_graph(G):
    pw = [brute_powers(G, x) for x in range(G.n)]
    edges = [(x, y) for x in range(G.n) for y in range(x + 1, G.n) if y in pw[x] or x in pw[y]]
    return Graph.from_edges(G.n, edges)


def to_nx(g):
    if isinstance(g, Digraph):
        h = nx.DiGraph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.arcs())
    else:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
    return h


def brute_partition_classes(n, key):
    d = {}
    for v in range(n):
        d.setdefault(key(v), []).append(v)
    return sorted(sorted(c) for c in d.values())


def brute_cycle_vertex_sets(d):
    """Every vertex set carrying a directed cycle of length >= 3, by search over (visited mask, endpoint)."""
    found = set()
    for s in range(d.n):
        seen = set()
        stack = [(1 << s, s)]
        while stack:
            mask, v = stack.pop()
            if (mask, v) in seen:
                continue
            seen.add((mask, v))
            if s in d.out[v] and bin(mask).count("1") >= 3:
                found.add(frozenset(i for i in range(d.n) if mask >> i & 1))
            for w in d.out[v]:
                # smallest vertex of the cycle is the start
                if w > s and not mask >> w & 1:
                    stack.append((mask | 1 << w, w))
    return found
