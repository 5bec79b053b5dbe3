"""Twin reductions and properties of quotient projections.

Graphs here carry an implicit loop at every vertex, so two vertices of the
same class always map to a (loop) edge of the quotient.
"""

from __future__ import annotations

from .errors import PartitionMismatch, TrivialGroup
from .graphs import Graph, Partition, connected_components, quotient
from .groups import GroupTable
from .power import proper_power_graph
from .relations import (
    diamond_partition_from_group,
    n_partition,
    open_twin_partition,
    twin_partition,
)


def ctr(g: Graph) -> tuple[Graph, Partition]:
    """Closed twin reduction."""
    p = n_partition(g)
    return quotient(g, p), p


def otr(g: Graph) -> tuple[Graph, Partition]:
    """Open twin reduction."""
    p = open_twin_partition(g)
    return quotient(g, p), p


def tr(g: Graph) -> tuple[Graph, Partition]:
    p = twin_partition(g)
    return quotient(g, p), p


def _check(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise PartitionMismatch(f"partition on {p.n} vertices, graph has {g.n}")


def is_tame(g: Graph, p: Partition) -> bool:
    """Every class lies inside a single connected component."""
    _check(g, p)
    _, label = connected_components(g)
    return all(len({label[v] for v in c}) == 1 for c in p.classes)


def is_locally_strong(g: Graph, p: Partition) -> bool:
    """Whenever two classes are joined, each member of one has a neighbour in the other."""
    _check(g, p)
    cls = p.class_of
    joined: set[tuple[int, int]] = set()
    for x in range(g.n):
        for y in g.adj[x]:
            if cls[x] != cls[y]:
                joined.add((cls[x], cls[y]))
    # same-class pairs are settled by the loop at each vertex
    for a, b in joined:
        B = set(p.classes[b])
        if any(not (g.adj[x] & B) for x in p.classes[a]):
            return False
    return True


def is_pseudo_covering(g: Graph, p: Partition) -> bool:
    # the projection onto the quotient is always surjective
    return is_locally_strong(g, p)


def is_complete(g: Graph, p: Partition, q: Graph | None = None) -> bool:
    """Every edge of the quotient ``q`` is the image of an edge of ``g``."""
    _check(g, p)
    image = quotient(g, p)
    if q is None:
        q = image
    return q.n == image.n and all(q.adj[k] == image.adj[k] for k in range(q.n))


def component_counts(G: GroupTable) -> tuple[int, int, int]:
    """Components of the proper power graph and of its quotients by generator classes and closed twins."""
    if G.n < 2:
        raise TrivialGroup("the trivial group has no proper power graph")
    pg, index = proper_power_graph(G)
    keep = sorted(index, key=index.get)
    dia = diamond_partition_from_group(G).restrict(keep)
    c_star, _ = connected_components(pg)
    c_dia, _ = connected_components(quotient(pg, dia))
    c_n, _ = connected_components(ctr(pg)[0])
    return c_star, c_dia, c_n


def o_tame_trivial_check(G: GroupTable) -> bool:
    """Whether the open-twin quotient of the proper power graph is tame exactly when it is trivial."""
    if G.n < 2:
        raise TrivialGroup("the trivial group has no proper power graph")
    pg, _ = proper_power_graph(G)
    op = open_twin_partition(pg)
    return is_tame(pg, op) == op.is_discrete()
