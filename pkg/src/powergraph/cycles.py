"""Directed cycles, hamiltonian constructions and longest-cycle bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidN,
    InvalidParams,
    NotACycle,
    OutOfRange,
    PreconditionViolated,
    QuotientSearchFailed,
    TooLarge,
    TooSmall,
)
from .graphs import Digraph, Graph, Partition, quotient
from .groups import GroupTable, cyclic_group, order_census
from .numtheory import is_prime
from .power import power_graph, proper_power_graph
from .quotients import ctr
from .recognition import diamond_partition_from_digraph
from .relations import diamond_partition_from_group, n_partition

PATH_BUDGET = 24
ORACLE_MAX = 20


@dataclass(frozen=True)
class WeightedPathResult:
    path: tuple[int, ...]
    weight: int
    w_G: int


def is_cycle(g: Graph, seq) -> bool:
    """``seq`` lists the vertices of a cycle of ``g`` (closing edge implied)."""
    seq = list(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def maximal_directed_cycles(d: Digraph) -> list[frozenset[int]]:
    """Vertex sets of the maximal directed cycles: generator classes with three or more members."""
    part = diamond_partition_from_digraph(d)
    return [frozenset(c) for c in part.classes if len(c) >= 3]


def _ham_path(q: Graph) -> list[int] | None:
    n = q.n
    if n == 0:
        return []
    path: list[int] = []
    used = [False] * n

    def go(v):
        path.append(v)
        used[v] = True
        if len(path) == n:
            return True
        for w in sorted(q.adj[v]):
            if not used[w] and go(w):
                return True
        path.pop()
        used[v] = False
        return False

    for s in range(n):
        if go(s):
            return path
    return None


def hamiltonian_cycle_power_cyclic(n: int) -> list[int]:
    """A hamiltonian cycle of ``P(C_n)`` as ``n`` element ids starting at the identity.

    A hamiltonian path through the generator classes of the proper power
    graph is expanded class by class; the identity, adjacent to everything,
    closes it up.
    """
    if n < 3:
        raise InvalidN(f"need n >= 3, got {n}")
    G = cyclic_group(n)
    pg, index = proper_power_graph(G)
    old = sorted(index, key=index.get)
    dia = diamond_partition_from_group(G).restrict(old)
    route = _ham_path(quotient(pg, dia))
    if route is None:
        raise QuotientSearchFailed(f"no hamiltonian path among the generator classes of C_{n}")
    cycle = [G.identity] + [old[v] for k in route for v in dia.classes[k]]
    if not is_cycle(power_graph(G), cycle):
        raise QuotientSearchFailed("expanded route is not a cycle")
    return cycle


def hamiltonian_directed_path_prime_power(p: int, k: int) -> list[int]:
    """Directed hamiltonian path of the directed power graph of ``C_{p^k}``."""
    if not is_prime(p) or k < 1:
        raise InvalidParams(f"need a prime p and k >= 1, got p={p}, k={k}")
    G = cyclic_group(p**k)
    return sorted(range(G.n), key=lambda x: (-G.order[x], x))


def close_cycle_over_n_classes(g: Graph, cycle) -> list[int]:
    """Enlarge a cycle so that its vertex set is a union of closed-twin classes.

    Missing members of a class are spliced in right after the first cycle
    vertex of that class; they share its neighbourhood, so the result is
    still a cycle.
    """
    cycle = list(cycle)
    if not is_cycle(g, cycle):
        raise NotACycle("input is not a cycle of the graph")
    npart = n_partition(g)
    on = set(cycle)
    out = []
    done = set()
    for v in cycle:
        out.append(v)
        k = npart.class_of[v]
        if k in done:
            continue
        done.add(k)
        out.extend(w for w in npart.classes[k] if w not in on)
    return out


def n_weight(p: Partition, cls) -> int:
    """Total size of one class index or of a collection of class indices."""
    ks = [cls] if isinstance(cls, int) else list(cls)
    for k in ks:
        if not 0 <= k < len(p.classes):
            raise OutOfRange(f"class index {k} outside [0, {len(p.classes)})")
    return sum(len(p.classes[k]) for k in ks)


def max_weight_path(gq: Graph, weights, budget: int = PATH_BUDGET) -> WeightedPathResult:
    """Heaviest simple path by exhaustive search with a reachable-weight bound.

    Ties go to the lexicographically least path.
    """
    n = gq.n
    if n > budget:
        raise TooLarge(f"quotient has {n} vertices, search budget is {budget}")
    weights = list(weights)
    if len(weights) != n:
        raise PreconditionViolated("one weight per vertex required")
    if n == 0:
        return WeightedPathResult((), 0, 0)
    nbrs = [sorted(gq.adj[v]) for v in range(n)]
    best = [(), -1]
    path: list[int] = []
    used = [False] * n

    def reachable_weight(v):
        seen = {v}
        stack = [v]
        total = 0
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if not used[y] and y not in seen:
                    seen.add(y)
                    total += weights[y]
                    stack.append(y)
        return total

    def go(v, w):
        if w > best[1]:
            best[0], best[1] = tuple(path), w
        if w + reachable_weight(v) <= best[1]:
            return
        for y in nbrs[v]:
            if not used[y]:
                used[y] = True
                path.append(y)
                go(y, w + weights[y])
                path.pop()
                used[y] = False

    for s in range(n):
        used[s] = True
        path.append(s)
        go(s, weights[s])
        path.pop()
        used[s] = False
    return WeightedPathResult(best[0], best[1], best[1])


def heaviest_class_path(G: GroupTable, budget: int = PATH_BUDGET) -> tuple[Graph, Partition, WeightedPathResult]:
    """Closed twin reduction of the proper power graph and its heaviest path."""
    pg, _ = proper_power_graph(G)
    q, part = ctr(pg)
    return q, part, max_weight_path(q, part.sizes(), budget)


def cycle_bounds(G: GroupTable, budget: int = PATH_BUDGET) -> tuple[int, int]:
    """Lower bounds ``(M_o, w_G + 1)`` for the longest cycle of ``P(G)``."""
    if G.n < 3:
        raise TooSmall(f"need |G| >= 3, got {G.n}")
    m_o = max(G.order)
    _, _, res = heaviest_class_path(G, budget)
    return m_o, res.w_G + 1


def no_heavy_neighbours(gq: Graph, weights, path) -> bool:
    """No quotient vertex off ``path`` of weight at least 2 is adjacent to the path."""
    on = set(path)
    return all(weights[y] < 2 for c in path for y in gq.adj[c] if y not in on)


def _two_core(g: Graph) -> set[int]:
    alive = set(range(g.n))
    deg = {v: len(g.adj[v]) for v in alive}
    stack = [v for v in alive if deg[v] < 2]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return alive


def longest_cycle_oracle(g: Graph, cap: int = ORACLE_MAX) -> int:
    """Length of a longest cycle by exhaustive search (0 when acyclic)."""
    if g.n > cap:
        raise TooLarge(f"exhaustive cycle search limited to {cap} vertices")
    core = _two_core(g)
    if not core:
        return 0
    bit_adj = [0] * g.n
    for v in core:
        for w in g.adj[v]:
            if w in core:
                bit_adj[v] |= 1 << w
    upper = len(core)
    best = 0

    def reach_count(v, allowed):
        seen = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= bit_adj[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return bin(seen).count("1") - 1

    def go(s, v, visited, length, allowed):
        nonlocal best
        if length >= 3 and bit_adj[v] >> s & 1 and length > best:
            best = length
        if best == upper:
            return
        free = allowed & ~visited
        if length + reach_count(v, free) <= best:
            return
        cand = bit_adj[v] & free
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            go(s, w, visited | low, length + 1, allowed)
            if best == upper:
                return
            cand ^= low

    # each cycle is found from its smallest vertex
    mask = 0
    for v in core:
        mask |= 1 << v
    allowed = mask
    for s in sorted(core):
        if bin(allowed).count("1") <= best:
            break
        go(s, s, 1 << s, 1, allowed)
        allowed &= ~(1 << s)
        if best == upper:
            break
    return best


def c2xc10_cycle(G: GroupTable) -> list[int]:
    """Explicit hamiltonian cycle of ``P(C2 x C10)`` (closing edge implied).

    With involutions ``i1, i2, i3``, order-5 elements ``F`` and ``T_k`` the
    order-10 elements whose fifth power is ``i_k``, the cycle runs
    ``1, i1, T1, f1, t2, i2, T2 - t2, F - f1, T3, i3``.
    """
    if order_census(G) != {1: 1, 2: 3, 5: 4, 10: 12}:
        raise PreconditionViolated("group does not have the element orders of C2 x C10")
    inv = sorted(x for x in range(G.n) if G.order[x] == 2)
    F = sorted(x for x in range(G.n) if G.order[x] == 5)
    T = [sorted(x for x in range(G.n) if G.order[x] == 10 and G.power(x, 5) == i) for i in inv]
    seq = [G.identity, inv[0], *T[0], F[0], T[1][0], inv[1], *T[1][1:], *F[1:], *T[2], inv[2]]
    return seq
