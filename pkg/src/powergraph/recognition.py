"""Element orders from a directed power graph, abelian structure from a power graph."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import InconsistentCounts, NotAPowerDigraphShape, NotTransitive
from .graphs import Digraph, Graph, Partition, induced_subgraph, is_transitive
from .numtheory import factorize, is_prime, prime_power, valuation
from .relations import StarTag, classify_star_case, n_partition


def diamond_partition_from_digraph(d: Digraph) -> Partition:
    """Classes of vertices joined by arcs in both directions."""
    if not is_transitive(d):
        raise NotTransitive("the directed power graph of a group is transitive")
    return Partition.from_key(d.n, lambda x: frozenset(d.out[x] & d.inn[x]) | {x})


@dataclass(frozen=True)
class ClassPoset:
    classes: Partition
    below: tuple[frozenset[int], ...]  # strict: class indices reachable by one arc
    identity: int | None

    def leq(self, a: int, b: int) -> bool:
        """``[a] <= [b]``: ``a`` is a power of ``b``."""
        return a == b or a in self.below[b]

    def minimal(self) -> list[int]:
        """Minimal classes above the identity class."""
        return [k for k in range(len(self.classes)) if k != self.identity and self.below[k] <= {self.identity}]


def class_poset(d: Digraph) -> ClassPoset:
    part = diamond_partition_from_digraph(d)
    cls = part.class_of
    below = []
    for k, members in enumerate(part.classes):
        below.append(frozenset(cls[y] for y in d.out[members[0]]) - {k})
    m = len(part.classes)
    sinks = [k for k in range(m) if len(part.classes[k]) == 1 and all(k in below[j] for j in range(m) if j != k)]
    identity = sinks[0] if len(sinks) == 1 else None
    return ClassPoset(part, tuple(below), identity)


def element_orders_from_digraph(d: Digraph) -> list[int]:
    """Order of the group element behind each vertex."""
    poset = class_poset(d)
    if poset.identity is None:
        raise NotAPowerDigraphShape("no unique identity class receiving arcs from every other vertex")
    part = poset.classes
    prime_of = {}
    for k in poset.minimal():
        p = len(part.classes[k]) + 1
        if not is_prime(p):
            raise NotAPowerDigraphShape(f"minimal class of size {p - 1}, {p} is not prime")
        prime_of[k] = p
    class_order = []
    for k, members in enumerate(part.classes):
        if k == poset.identity:
            class_order.append(1)
            continue
        primes = sorted({prime_of[j] for j in prime_of if j == k or j in poset.below[k]})
        if not primes:
            raise NotAPowerDigraphShape(f"class {k} lies above no minimal class")
        d_ = prod(p - 1 for p in primes)
        if len(members) % d_:
            raise NotAPowerDigraphShape(f"class size {len(members)} not divisible by {d_}")
        m = len(members) // d_
        if any(q not in primes for q, _ in factorize(m)):
            raise NotAPowerDigraphShape(f"class size {len(members)} has a foreign prime factor")
        class_order.append(prod(p ** (1 + valuation(m, p)) for p in primes))
    return [class_order[part.class_of[x]] for x in range(d.n)]


def sylow_decomposition_from_order_counts(counts: dict[int, int], p: int) -> list[int]:
    """Cyclic factors of the abelian ``p``-group with these element-order counts.

    ``counts`` maps ``p^i`` (i >= 1) to the number of elements of that order;
    an entry ``{1: 1}`` for the identity is tolerated.
    """
    if not is_prime(p):
        raise InconsistentCounts(f"{p} is not prime")
    by_exp = {}
    for q, c in counts.items():
        if q == 1:
            if c != 1:
                raise InconsistentCounts("exactly one element has order 1")
            continue
        pp = prime_power(q)
        if pp is None or pp[0] != p or c < 0:
            raise InconsistentCounts(f"order {q} is not a power of {p}")
        if c:
            by_exp[pp[1]] = c
    if not by_exp:
        return []
    top = max(by_exp)
    # e[i] = log_p of the number of elements of order dividing p^i
    e = [0]
    total = 1
    for i in range(1, top + 1):
        total += by_exp.get(i, 0)
        pp = prime_power(total)
        if pp is None or pp[0] != p:
            raise InconsistentCounts(f"{total} elements of order dividing {p}^{i} is not a power of {p}")
        e.append(pp[1])
    c = [e[i] - e[i - 1] for i in range(1, top + 1)] + [0]
    if any(c[i] < c[i + 1] for i in range(top)) or c[top - 1] < 1:
        raise InconsistentCounts(f"order counts {dict(sorted(counts.items()))} fit no abelian {p}-group")
    parts = []
    for i in range(1, top + 1):
        parts += [p**i] * (c[i - 1] - c[i])
    parts.sort()
    lam = [valuation(x, p) for x in parts]
    for i in range(1, top + 1):
        assert sum(min(l, i) for l in lam) == e[i]
    return parts


def _prime_power_factors(n: int) -> list[int]:
    return sorted(p**e for p, e in factorize(n))


def _sylow_levels(g: Graph, identity: int, npart: Partition, p: int) -> tuple[dict[int, int], set[int]]:
    """Label the elements of ``p``-power order level by level; return counts and the labelled set."""
    labelled = {identity}
    counts = {}
    classes = [c for c in npart.classes if identity not in c]
    order3: set[int] = set()
    i = 1
    while True:
        if p == 2 and i == 1:
            level = [c for c in classes if len(c) == 1]
            inv = {c[0] for c in level}
            order3 = {v for c in classes if len(c) == 2 and not (g.adj[c[0]] & inv) for v in c}
        else:
            want = p ** (i - 1) * (p - 1)
            level = [
                c for c in classes
                if len(c) == want
                and c[0] not in labelled
                and len(g.adj[c[0]] & labelled) == p ** (i - 1)
                and not (p == 2 and g.adj[c[0]] & order3)
            ]
        if not level:
            break
        members = [v for c in level for v in c]
        counts[p**i] = len(members)
        labelled.update(members)
        i += 1
    return counts, labelled


def abelian_invariants_from_power_graph(g: Graph) -> list[int]:
    """Orders of the cyclic prime-power factors of the abelian group behind ``g``, sorted."""
    if g.n == 1:
        return []
    case = classify_star_case(g)
    if case.tag == StarTag.GENERALIZED_QUATERNION:
        raise InconsistentCounts("two star vertices occur only for non-abelian quaternion groups")
    if case.tag != StarTag.SINGLETON_STAR:
        return _prime_power_factors(g.n)
    (identity,) = case.star_set
    n = g.n
    p = factorize(n)[0][0]
    counts, P = _sylow_levels(g, identity, n_partition(g), p)
    parts = sylow_decomposition_from_order_counts(counts, p)
    size_p = p ** valuation(n, p)
    if len(P) != size_p or prod(parts) != size_p:
        raise InconsistentCounts(f"found {len(P)} elements of {p}-power order, expected {size_p}")
    H = [identity] + [x for x in range(n) if x not in P and g.adj[x] & P == {identity}]
    if len(H) * len(P) != n:
        raise InconsistentCounts(f"complement has {len(H)} elements, expected {n // len(P)}")
    if len(H) == 1:
        return sorted(parts)
    sub, _ = induced_subgraph(g, H)
    return sorted(parts + abelian_invariants_from_power_graph(sub))
