"""Recover the directed power graph from an abstract power graph.

Only the undirected graph is used. The identity and the classes of
elements generating the same cyclic subgroup are located first; every edge
is then oriented from the larger generator class to the smaller one, with
the two equal-size cases settled by the identity and by adjacency to an
involution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    ClassificationFailed,
    NotAnNClass,
    NotAPowerGraphShape,
    NotSingletonStar,
    OrientationAmbiguous,
    SizeMismatch,
)
from .graphs import Digraph, Partition
from .numtheory import euler_phi, prime_power
from .relations import StarTag, classify_star_case, hat, n_class_of, n_partition

STAR = "Star"
FIRST = "FirstType"
SECOND = "SecondType"


@dataclass(frozen=True)
class NClassType:
    """Type of a closed-twin class.

    ``p, r, s`` are set for second-type classes; a critical first-type
    class carries its ``(p, r)`` with ``s`` left as None.
    """

    kind: str
    p: int | None = None
    r: int | None = None
    s: int | None = None
    critical: bool = False

    def params(self):
        return (self.p, self.r, self.s) if self.kind == SECOND else None


@dataclass(frozen=True)
class CriticalClassInfo:
    class_index: int
    p: int
    r: int
    resolved_type: str


@dataclass
class ClassReport:
    index: int
    members: tuple[int, ...]
    chat_size: int
    type: NClassType

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        t = self.type
        return {
            "index": self.index,
            "members": list(self.members),
            "size": self.size,
            "chat_size": self.chat_size,
            "type": t.kind,
            "params": None if t.p is None else {"p": t.p, "r": t.r, "s": t.s},
            "critical": t.critical,
        }


@dataclass
class DiamondSplit:
    """Generator-class partition recovered from a power graph."""

    partition: Partition
    identity: int
    intended_order: dict[int, int] = field(default_factory=dict)
    reports: list[ClassReport] = field(default_factory=list)


def detect_size_signature(c_size: int, chat_size: int):
    """The ``(p, r, s)`` with ``chat_size = p^r`` and ``c_size = p^r - p^s``, if any."""
    if c_size < 1 or chat_size <= c_size:
        return None
    pp = prime_power(chat_size)
    if pp is None or pp[1] < 2:
        return None
    p, r = pp
    for s in range(r - 1):
        if p**r - p**s == c_size:
            return p, r, s
    return None


def classify_n_class(g, star, C, class_size: Callable[[int], int] | None = None) -> NClassType:
    """Type of the closed-twin class ``C`` of a power graph with a single star vertex.

    ``class_size(x)`` may supply ``|[x]_N|`` when a full N-partition is at
    hand; otherwise classes are found locally, which keeps lazy graphs cheap.
    """
    star = frozenset(star)
    if len(star) != 1:
        raise NotSingletonStar(f"{len(star)} star vertices; class typing needs exactly one")
    C = frozenset(C)
    if not C:
        raise NotAnNClass("empty class")
    y = min(C)
    if n_class_of(g, y) != C:
        raise NotAnNClass(f"{sorted(C)[:8]}... is not a closed-twin class")
    if C == star:
        return NClassType(STAR)
    chat = hat(g, C)
    sig = detect_size_signature(len(C), len(chat))
    if sig is None:
        return NClassType(FIRST)
    p, r, s = sig
    if chat != C | star:
        return NClassType(SECOND, p, r, s)
    # critical class: first type iff y has a neighbour outside C-hat whose
    # class is no larger than C
    size_of = class_size or (lambda x: len(n_class_of(g, x)))
    for x in sorted(g.neighbors(y) - chat):
        if size_of(x) <= len(C):
            return NClassType(FIRST, p, r, None, critical=True)
    return NClassType(SECOND, p, r, 0, critical=True)


def split_second_type(C, t: NClassType) -> list[tuple[tuple[int, ...], int]]:
    """Cut a second-type class into runs of sizes ``phi(p^(s+1)), ..., phi(p^r)``.

    Returns ``(members, intended order)`` pairs by increasing order; the
    smallest vertex ids go to the smallest order.
    """
    p, r, s = t.p, t.r, t.s
    members = sorted(C)
    if len(members) != p**r - p**s:
        raise SizeMismatch(f"class of size {len(members)} cannot have parameters {(p, r, s)}")
    out = []
    pos = 0
    for i in range(s + 1, r + 1):
        k = euler_phi(p**i)
        out.append((tuple(members[pos:pos + k]), p**i))
        pos += k
    return out


def _is_totient_value(k: int) -> bool:
    return k == 1 or k % 2 == 0


def analyze_n_classes(g, star=None) -> tuple[Partition, list[ClassReport]]:
    """Type every closed-twin class of a single-star power graph."""
    npart = n_partition(g)
    if star is None:
        star = frozenset(c for c in range(g.n) if len(g.closed_nbhd(c)) == g.n)
    if len(star) != 1:
        raise NotSingletonStar(f"{len(star)} star vertices; class typing needs exactly one")
    size_of = lambda x: len(npart.class_containing(x))  # noqa: E731
    reports = []
    for k, cls in enumerate(npart.classes):
        t = classify_n_class(g, star, cls, size_of)
        reports.append(ClassReport(k, cls, len(hat(g, cls)), t))
    return npart, reports


def diamond_from_power_graph(g) -> DiamondSplit:
    case = classify_star_case(g)
    if case.tag != StarTag.SINGLETON_STAR:
        raise NotSingletonStar(f"star case is {case.tag.value}")
    (identity,) = case.star_set
    _, reports = analyze_n_classes(g, case.star_set)
    classes: list[tuple[int, ...]] = []
    orders: list[int | None] = []
    for rep in reports:
        t = rep.type
        if t.kind == SECOND:
            for members, o in split_second_type(rep.members, t):
                classes.append(members)
                orders.append(o)
        else:
            if t.kind == FIRST and not _is_totient_value(rep.size):
                raise ClassificationFailed(f"first-type class of odd size {rep.size} is impossible")
            classes.append(rep.members)
            orders.append(1 if t.kind == STAR else None)
    part = Partition.from_classes(g.n, classes)
    intended = {}
    for members, o in zip(classes, orders):
        if o is not None:
            intended[part.class_of[members[0]]] = o
    return DiamondSplit(part, identity, intended, reports)


def _diamond_structure(g) -> DiamondSplit:
    """Generator classes and identity for any of the four star cases."""
    case = classify_star_case(g)
    S = sorted(case.star_set)
    n = g.n
    if case.tag == StarTag.SINGLETON_STAR:
        return diamond_from_power_graph(g)
    identity = S[0]
    if case.tag == StarTag.COMPLETE_CYCLIC_PRIME_POWER:
        if n == 1:
            return DiamondSplit(Partition.discrete(1), 0, {0: 1})
        pp = prime_power(n)
        if pp is None:
            raise NotAPowerGraphShape(f"complete graph on {n} vertices, {n} is not a prime power")
        p, k = pp
        classes = [(identity,)]
        orders = [1]
        rest = [v for v in range(n) if v != identity]
        for members, o in split_second_type(rest, NClassType(SECOND, p, k, 0)):
            classes.append(members)
            orders.append(o)
    elif case.tag == StarTag.CYCLIC_NON_PRIME_POWER:
        if prime_power(n) is not None:
            raise NotAPowerGraphShape(f"{n} is a prime power but the graph is not complete")
        classes = [(identity,), tuple(S[1:])]
        orders = [1, n]
        for cls in n_partition(g).classes:
            if identity not in cls:
                classes.append(cls)
                orders.append(None)
    else:
        pp = prime_power(n)
        if pp is None or pp[0] != 2 or n < 8:
            raise NotAPowerGraphShape(f"two star vertices need a 2-group of order >= 8, got n={n}")
        k = pp[1]
        classes = [(S[0],), (S[1],)]
        orders = [1, 2]
        others = [c for c in n_partition(g).classes if S[0] not in c]
        big = n // 2 - 2
        if big > 2:
            hits = [c for c in others if len(c) == big]
            if len(hits) != 1:
                raise NotAPowerGraphShape("no unique class for the cyclic subgroup of index 2")
            for members, o in split_second_type(hits[0], NClassType(SECOND, 2, k - 1, 1)):
                classes.append(members)
                orders.append(o)
            others = [c for c in others if c is not hits[0]]
        for c in others:
            classes.append(c)
            orders.append(None)
    part = Partition.from_classes(n, classes)
    intended = {part.class_of[m[0]]: o for m, o in zip(classes, orders) if o is not None}
    return DiamondSplit(part, identity, intended)


def orient_with_classes(g, split: DiamondSplit) -> Digraph:
    """Orient every edge of ``g`` given the generator classes and the identity."""
    part, identity = split.partition, split.identity
    cls = part.class_of
    size = [len(c) for c in part.classes]
    involutions = frozenset(c[0] for c in part.classes if len(c) == 1 and c[0] != identity)
    touches_involution: dict[int, bool] = {}

    def inv_adjacent(k: int) -> bool:
        if k not in touches_involution:
            rep = part.classes[k][0]
            touches_involution[k] = bool(g.neighbors(rep) & involutions)
        return touches_involution[k]

    out = [set() for _ in range(g.n)]
    for x in range(g.n):
        for y in g.neighbors(x):
            if y < x:
                continue
            cx, cy = cls[x], cls[y]
            if cx == cy:
                out[x].add(y)
                out[y].add(x)
            elif size[cx] != size[cy]:
                if size[cx] > size[cy]:
                    out[x].add(y)
                else:
                    out[y].add(x)
            elif size[cx] == 1:
                if y == identity:
                    out[x].add(y)
                elif x == identity:
                    out[y].add(x)
                else:
                    raise OrientationAmbiguous(f"two joined involution candidates {x}, {y}")
            else:
                ax, ay = inv_adjacent(cx), inv_adjacent(cy)
                if ax == ay:
                    raise OrientationAmbiguous(
                        f"equal classes around {x}, {y}: {'both' if ax else 'neither'} touch an involution"
                    )
                if ax:
                    out[x].add(y)
                else:
                    out[y].add(x)
    return Digraph(g.n, out)


def orient(g) -> Digraph:
    """Directed power graph reconstructed from the power graph ``g``."""
    if g.n == 1:
        return Digraph(1, [()])
    return orient_with_classes(g, _diamond_structure(g))


def critical_classes(reports: list[ClassReport]) -> list[CriticalClassInfo]:
    return [
        CriticalClassInfo(r.index, r.type.p, r.type.r, r.type.kind)
        for r in reports
        if r.type.critical
    ]
