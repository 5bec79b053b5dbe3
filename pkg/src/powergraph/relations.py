"""Equivalence relations on power-graph vertices and the closure operators.

The graph-side functions accept anything with ``n``, ``neighbors(x)`` and
``closed_nbhd(x)``, so they work on a dense :class:`Graph` and on a
:class:`~powergraph.power.LazyPowerGraph` alike (except the full-partition
ones, which visit every vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce

from .errors import EmptySet, NotAPowerGraphShape
from .graphs import Partition
from .groups import GroupTable
from .numtheory import euler_phi


class StarTag(str, Enum):
    COMPLETE_CYCLIC_PRIME_POWER = "CompleteCyclicPrimePower"
    CYCLIC_NON_PRIME_POWER = "CyclicNonPrimePower"
    GENERALIZED_QUATERNION = "GeneralizedQuaternion"
    SINGLETON_STAR = "SingletonStar"


@dataclass(frozen=True)
class StarCase:
    tag: StarTag
    star_set: frozenset[int]


def closed_neighborhood(g, x: int) -> frozenset[int]:
    g.check(x)
    return g.closed_nbhd(x)


def star_vertices(g) -> frozenset[int]:
    return frozenset(x for x in range(g.n) if len(g.closed_nbhd(x)) == g.n)


def classify_star_case(g, star: frozenset[int] | None = None) -> StarCase:
    """Which of the four power-graph shapes ``g`` has, judged from ``|S|`` alone.

    Tested in the order complete, ``1 + phi(n)``, ``|S| = 2``, ``|S| = 1``.
    """
    S = star_vertices(g) if star is None else star
    n, k = g.n, len(S)
    if k == n:
        tag = StarTag.COMPLETE_CYCLIC_PRIME_POWER
    elif k == 1 + euler_phi(n):
        tag = StarTag.CYCLIC_NON_PRIME_POWER
    elif k == 2:
        tag = StarTag.GENERALIZED_QUATERNION
    elif k == 1:
        tag = StarTag.SINGLETON_STAR
    else:
        raise NotAPowerGraphShape(f"{k} star vertices on {n} vertices matches no power graph")
    return StarCase(tag, frozenset(S))


def n_partition(g) -> Partition:
    return Partition.from_key(g.n, g.closed_nbhd)


def n_class_of(g, x: int) -> frozenset[int]:
    """Closed-twin class of ``x``, found inside ``N[x]`` (cheap on lazy graphs)."""
    target = g.closed_nbhd(x)
    return frozenset(z for z in target if g.closed_nbhd(z) == target)


def diamond_partition_from_group(G: GroupTable) -> Partition:
    return Partition.from_key(G.n, lambda g: G.cyc[g])


def o_partition(G: GroupTable) -> Partition:
    return Partition.from_key(G.n, lambda g: G.order[g])


def open_twin_partition(g) -> Partition:
    return Partition.from_key(g.n, g.neighbors)


def twin_partition(g) -> Partition:
    """Join of the closed-twin and open-twin partitions."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in (n_partition(g), open_twin_partition(g)):
        for cls in p.classes:
            r = find(cls[0])
            for v in cls[1:]:
                parent[find(v)] = r
    return Partition.from_key(g.n, find)


def neighborhood_of_set(g, X) -> frozenset[int]:
    X = list(X)
    if not X:
        raise EmptySet("N[X] needs a nonempty X")
    return reduce(frozenset.intersection, (g.closed_nbhd(x) for x in X))


def hat(g, X) -> frozenset[int]:
    """``N[N[X]]``."""
    return neighborhood_of_set(g, neighborhood_of_set(g, X))
