"""Power graph, directed power graph and proper power graph of a group."""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache

from .errors import TooLarge, TrivialGroup
from .graphs import Digraph, Graph, induced_subgraph
from .groups import GroupTable

DENSE_MAX = 4096


def _above(G: GroupTable) -> list[list[int]]:
    # above[h] = elements g != h with h in <g>
    above = [[] for _ in range(G.n)]
    for g in range(G.n):
        for h in G.cyc[g]:
            if h != g:
                above[h].append(g)
    return above


def power_graph(G: GroupTable, dense_max: int = DENSE_MAX) -> Graph:
    if G.n > dense_max:
        raise TooLarge(f"dense power graph limited to {dense_max} vertices; use LazyPowerGraph")
    above = _above(G)
    adj = [(set(G.cyc[g]) | set(above[g])) - {g} for g in range(G.n)]
    return Graph(G.n, adj)


def directed_power_graph(G: GroupTable, dense_max: int = DENSE_MAX) -> Digraph:
    """Arc ``(x, y)`` iff ``x != y`` and ``y`` is a power of ``x``."""
    if G.n > dense_max:
        raise TooLarge(f"dense directed power graph limited to {dense_max} vertices")
    return Digraph(G.n, [set(G.cyc[g]) - {g} for g in range(G.n)])


def proper_power_graph(G: GroupTable) -> tuple[Graph, dict[int, int]]:
    if G.n < 2:
        raise TrivialGroup("the trivial group has no proper power graph")
    keep = [g for g in range(G.n) if g != G.identity]
    return induced_subgraph(power_graph(G), keep)


def _member(sorted_seq, x) -> bool:
    i = bisect_left(sorted_seq, x)
    return i < len(sorted_seq) and sorted_seq[i] == x


def edge_predicate(G: GroupTable, x: int, y: int) -> bool:
    G.check(x)
    G.check(y)
    return x != y and (_member(G.cyc[x], y) or _member(G.cyc[y], x))


class LazyPowerGraph:
    """Neighbourhood oracle for ``P(G)`` without materialising the edge set.

    Offers the same ``n`` / ``neighbors`` / ``closed_nbhd`` / ``has_edge``
    surface as :class:`Graph`, which is all the class-typing code needs.
    """

    def __init__(self, G: GroupTable):
        self.G = G
        self.n = G.n
        self._above = _above(G)

    def check(self, x: int) -> None:
        self.G.check(x)

    def has_edge(self, x: int, y: int) -> bool:
        return edge_predicate(self.G, x, y)

    @lru_cache(maxsize=4096)
    def closed_nbhd(self, x: int) -> frozenset[int]:
        return frozenset(self.G.cyc[x]) | frozenset(self._above[x])

    def neighbors(self, x: int) -> frozenset[int]:
        return self.closed_nbhd(x) - {x}

    def degree(self, x: int) -> int:
        return len(self.closed_nbhd(x)) - 1
