"""Finite groups materialised as Cayley tables.

Every group is a :class:`GroupTable`: elements are the integers ``0..n-1``
and multiplication is a lookup in a dense table, except for the large
symmetric groups (S7, S8) whose table would not fit in memory; those are
backed by a multiplication function over rank-indexed permutations. Both
backings go through :meth:`GroupTable.mul`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidSpec, NotAGroup, OutOfRange, TooLarge
from .numtheory import is_prime, lcm

DEFAULT_CAP = 50_000
DENSE_SYMMETRIC_MAX = 6
FULL_AXIOM_CHECK_MAX = 256


# ---------------------------------------------------------------------------
# Group specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order ``2n``: ``a^n = b^2 = 1``, ``b a b = a^-1``."""
    n: int


@dataclass(frozen=True)
class GeneralizedQuaternion:
    """Dicyclic group of the given order ``4n``: ``x^n = y^2``, ``x^2n = 1``, ``y^-1 x y = x^-1``."""
    order: int


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple


@dataclass(frozen=True)
class UniTriangular3:
    p: int


@dataclass(frozen=True)
class GL2:
    p: int


@dataclass(frozen=True)
class FromCayleyFile:
    path: str


GroupSpec = (
    Cyclic | Dihedral | GeneralizedQuaternion | Symmetric | Alternating | DirectProduct
    | UniTriangular3 | GL2 | FromCayleyFile
)


def spec_order(spec) -> int | None:
    """Order of the group a spec describes, without building it (None for files)."""
    match spec:
        case Cyclic(n):
            return n
        case Dihedral(n):
            return 2 * n
        case GeneralizedQuaternion(order):
            return order
        case Symmetric(n):
            return prod(range(1, n + 1))
        case Alternating(n):
            return max(1, prod(range(1, n + 1)) // 2)
        case DirectProduct(factors):
            orders = [spec_order(f) for f in factors]
            return None if None in orders else prod(orders)
        case UniTriangular3(p):
            return p**3
        case GL2(p):
            return (p * p - 1) * (p * p - p)
    return None


def validate_spec(spec) -> None:
    match spec:
        case Cyclic(n):
            if n < 1:
                raise InvalidSpec(f"Cyclic needs n >= 1, got {n}")
        case Dihedral(n):
            if n < 2:
                raise InvalidSpec(f"Dihedral needs n >= 2, got {n}")
        case GeneralizedQuaternion(order):
            if order < 8 or order % 4:
                raise InvalidSpec(f"GeneralizedQuaternion needs order divisible by 4 and >= 8, got {order}")
        case Symmetric(n) | Alternating(n):
            if not 1 <= n <= 8:
                raise InvalidSpec(f"symmetric/alternating groups limited to 1 <= n <= 8, got {n}")
        case DirectProduct(factors):
            if not factors:
                raise InvalidSpec("DirectProduct needs at least one factor")
            for f in factors:
                validate_spec(f)
        case UniTriangular3(p) | GL2(p):
            if not is_prime(p):
                raise InvalidSpec(f"parameter must be prime, got {p}")
        case FromCayleyFile(path):
            if not path:
                raise InvalidSpec("empty Cayley file path")
        case _:
            raise InvalidSpec(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------
# GroupTable
# ---------------------------------------------------------------------------

class GroupTable:
    """An immutable finite group on the element ids ``0..n-1``.

    ``order[g]`` and ``cyc[g]`` (the sorted elements of the cyclic subgroup
    generated by ``g``) are computed once at construction.
    """

    def __init__(
        self,
        n: int,
        identity: int,
        table: np.ndarray | None = None,
        mul_fn: Callable[[int, int], int] | None = None,
        labels: Sequence[str] | None = None,
        name: str = "",
    ):
        if (table is None) == (mul_fn is None):
            raise ValueError("exactly one of table / mul_fn is required")
        self.n = n
        self.identity = identity
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if table is not None:
            table = np.ascontiguousarray(table, dtype=np.int64)
            table.setflags(write=False)
            self.table = table
            self._rows = table.tolist()
            rows = self._rows
            self._mul = lambda a, b: rows[a][b]
        else:
            self.table = None
            self._rows = None
            self._mul = mul_fn
        self.order, self.cyc, self.inv = self._cyclic_data()

    @property
    def is_dense(self) -> bool:
        return self.table is not None

    def mul(self, a: int, b: int) -> int:
        return self._mul(a, b)

    def _cyclic_data(self):
        order = [0] * self.n
        cyc = [()] * self.n
        inv = [0] * self.n
        e = self.identity
        for g in range(self.n):
            powers = [g]
            cur = g
            while cur != e:
                cur = self._mul(cur, g)
                powers.append(cur)
                if len(powers) > self.n:
                    raise NotAGroup(f"element {g} has no finite order")
            order[g] = len(powers)
            cyc[g] = tuple(sorted(powers))
            inv[g] = powers[-2] if len(powers) > 1 else e
        return order, cyc, inv

    def check(self, g: int) -> None:
        if not 0 <= g < self.n:
            raise OutOfRange(f"element {g} not in [0, {self.n})")

    def power(self, g: int, k: int) -> int:
        k %= self.order[g]
        out = self.identity
        for _ in range(k):
            out = self._mul(out, g)
        return out

    def is_abelian(self) -> bool:
        if self.is_dense:
            return bool(np.array_equal(self.table, self.table.T))
        return all(self.mul(a, b) == self.mul(b, a) for a in range(self.n) for b in range(a))

    def __repr__(self):
        return f"GroupTable({self.name or '?'}, n={self.n})"


def element_order(G: GroupTable, g: int) -> int:
    G.check(g)
    return G.order[g]


def centralizer(G: GroupTable, g: int) -> frozenset[int]:
    G.check(g)
    return frozenset(h for h in range(G.n) if G.mul(g, h) == G.mul(h, g))


def check_axioms(G: GroupTable, seed: int = 0) -> None:
    """Raise :class:`NotAGroup` unless the table is a group.

    Associativity is checked exhaustively for ``n <= 256`` and on
    ``10 * n**2`` random triples above that.
    """
    n, e = G.n, G.identity
    for a in range(n):
        if G.mul(e, a) != a or G.mul(a, e) != a:
            raise NotAGroup(f"{e} is not a two-sided identity (fails at {a})")
        if G.mul(a, G.inv[a]) != e or G.mul(G.inv[a], a) != e:
            raise NotAGroup(f"element {a} has no two-sided inverse")
    if G.is_dense and n <= FULL_AXIOM_CHECK_MAX:
        T = G.table
        for a in range(n):
            # (a*b)*c vs a*(b*c) for all b, c
            left = T[T[a]]
            right = T[a][T]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
        return
    if G.is_dense:
        T = G.table
        a, b, c = np.random.default_rng(seed).integers(0, n, size=(3, 10 * n * n))
        bad = np.flatnonzero(T[T[a, b], c] != T[a, T[b, c]])
        if bad.size:
            k = bad[0]
            raise NotAGroup(f"associativity fails at ({a[k]}, {b[k]}, {c[k]})")
        return
    rng = random.Random(seed)
    for _ in range(10 * n * n):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
            raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def cyclic_group(n: int) -> GroupTable:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    labels = ["1"] + [_power_label("a", k) for k in range(1, n)]
    return GroupTable(n, 0, table=table, labels=labels, name=f"C{n}")


def dihedral_group(n: int) -> GroupTable:
    # a^i b^j  <->  i + n*j
    i = np.arange(2 * n) % n
    j = np.arange(2 * n) // n
    sign = np.where(j == 1, -1, 1)
    new_i = (i[:, None] + sign[:, None] * i[None, :]) % n
    new_j = (j[:, None] + j[None, :]) % 2
    table = new_i + n * new_j
    labels = [(_power_label("a", k % n) + ("b" if k >= n else "")) or "1" for k in range(2 * n)]
    return GroupTable(2 * n, 0, table=table, labels=labels, name=f"D{n}")


def quaternion_group(order: int) -> GroupTable:
    # x^i y^j  <->  i + 2n*j, with x of order 2n, y^2 = x^n, y x = x^-1 y
    n = order // 4
    m = 2 * n
    i = np.arange(order) % m
    j = np.arange(order) // m
    ii, kk = i[:, None], i[None, :]
    jj, ll = j[:, None], j[None, :]
    sign = np.where(jj == 1, -1, 1)
    exp = ii + sign * kk + np.where((jj == 1) & (ll == 1), n, 0)
    new_j = (jj + ll) % 2
    table = exp % m + m * new_j
    labels = [(_power_label("x", k % m) + ("y" if k >= m else "")) or "1" for k in range(order)]
    return GroupTable(order, 0, table=table, labels=labels, name=f"Q{order}")


def _cycle_label(perm: Sequence[int]) -> str:
    seen = set()
    parts = []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        t = perm[s]
        while t != s:
            cyc.append(t)
            seen.add(t)
            t = perm[t]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) or "1"


def _permutation_group(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    # composition (p*q)(i) = p[q[i]]; perms[0] must be the identity
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    labels = [_cycle_label(p) for p in perms]
    if n <= 720:
        arr = np.array(perms, dtype=np.int64)
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            composed = arr[a][arr]  # row b holds perms[a] o perms[b]
            table[a] = [index[tuple(r)] for r in composed.tolist()]
        return GroupTable(n, 0, table=table, labels=labels, name=name)

    def mul(a: int, b: int) -> int:
        p, q = perms[a], perms[b]
        return index[tuple([p[i] for i in q])]

    return GroupTable(n, 0, mul_fn=mul, labels=labels, name=name)


def symmetric_group(n: int) -> GroupTable:
    return _permutation_group(list(itertools.permutations(range(n))), f"S{n}")


def _parity(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    par = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        t, length = s, 0
        while not seen[t]:
            seen[t] = True
            t = p[t]
            length += 1
        par ^= (length - 1) & 1
    return par


def alternating_group(n: int) -> GroupTable:
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _permutation_group(perms, f"A{n}")


def direct_product(groups: Sequence[GroupTable]) -> GroupTable:
    if any(not g.is_dense for g in groups):
        raise TooLarge("direct products need dense factors")
    G = groups[0]
    table, labels, ident = G.table, [[l] for l in G.labels], G.identity
    for H in groups[1:]:
        n1, n2 = table.shape[0], H.n
        big = table[:, None, :, None] * n2 + H.table[None, :, None, :]
        table = big.reshape(n1 * n2, n1 * n2)
        labels = [l + [m] for l in labels for m in H.labels]
        ident = ident * n2 + H.identity
    name = "x".join(g.name for g in groups)
    flat = ["(" + ",".join(l) + ")" for l in labels] if len(groups) > 1 else [l[0] for l in labels]
    return GroupTable(table.shape[0], ident, table=table, labels=flat, name=name)


def unitriangular3(p: int) -> GroupTable:
    # [[1,a,c],[0,1,b],[0,0,1]] <-> a*p^2 + b*p + c
    idx = np.arange(p**3)
    a, b, c = idx // (p * p), (idx // p) % p, idx % p
    na = (a[:, None] + a[None, :]) % p
    nb = (b[:, None] + b[None, :]) % p
    nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
    table = na * p * p + nb * p + nc
    labels = [f"({x},{y},{z})" for x, y, z in zip(a.tolist(), b.tolist(), c.tolist())]
    return GroupTable(p**3, 0, table=table, labels=labels, name=f"UT3_{p}")


def gl2(p: int) -> GroupTable:
    """GL(2, p): identity first, then the other invertible matrices in lexicographic order."""
    mats = [m for m in itertools.product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p]
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    code = np.full(p**4, -1, dtype=np.int64)
    M = np.array(mats, dtype=np.int64)
    code[M @ np.array([p**3, p**2, p, 1])] = np.arange(len(mats))
    a, b, c, d = (M[:, k] for k in range(4))
    # [[a,b],[c,d]] * [[a',b'],[c',d']]
    e00 = (a[:, None] * a[None, :] + b[:, None] * c[None, :]) % p
    e01 = (a[:, None] * b[None, :] + b[:, None] * d[None, :]) % p
    e10 = (c[:, None] * a[None, :] + d[:, None] * c[None, :]) % p
    e11 = (c[:, None] * b[None, :] + d[:, None] * d[None, :]) % p
    table = code[((e00 * p + e01) * p + e10) * p + e11]
    labels = [f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]" for m in mats]
    return GroupTable(len(mats), 0, table=table, labels=labels, name=f"GL2_{p}")


def subgroup_table(G: GroupTable, elements, name: str = "") -> GroupTable:
    """Restrict ``G`` to a subgroup; the identity becomes element 0."""
    members = sorted(set(elements) - {G.identity})
    members.insert(0, G.identity)
    pos = {g: k for k, g in enumerate(members)}
    try:
        table = np.array([[pos[G.mul(a, b)] for b in members] for a in members])
    except KeyError:
        raise NotAGroup("element set is not closed under multiplication") from None
    return GroupTable(len(members), 0, table=table, labels=[G.labels[g] for g in members], name=name)


def relabel(G: GroupTable, perm: Sequence[int]) -> GroupTable:
    """The isomorphic copy of ``G`` in which element ``g`` is renamed ``perm[g]``."""
    perm = np.asarray(perm)
    if not G.is_dense:
        raise TooLarge("relabel needs a dense table")
    inv = np.argsort(perm)
    table = perm[G.table[np.ix_(inv, inv)]]
    labels = [G.labels[i] for i in inv.tolist()]
    return GroupTable(G.n, int(perm[G.identity]), table=table, labels=labels, name=G.name)


def find_singer_element(G: GroupTable, p: int) -> int:
    """Smallest element id of order ``p**2 - 1`` (a Singer cycle in GL(2, p))."""
    for g in range(G.n):
        if G.order[g] == p * p - 1:
            return g
    raise InvalidSpec(f"no element of order {p * p - 1}")


# ---------------------------------------------------------------------------
# Cayley CSV
# ---------------------------------------------------------------------------

def parse_cayley_csv(text: str, name: str = "") -> GroupTable:
    """Parse the ``n`` header plus ``n`` rows of comma separated ids and validate."""
    lines = [ln.strip() for ln in text.replace("\r\n", "\n").split("\n")]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise NotAGroup("empty Cayley file")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split(",")] for ln in lines[1:]]
    except ValueError as exc:
        raise NotAGroup(f"malformed Cayley file: {exc}") from None
    if n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise NotAGroup(f"expected {n} rows of {n} entries")
    table = np.array(rows, dtype=np.int64)
    if table.min() < 0 or table.max() >= n:
        raise NotAGroup(f"entries must lie in [0, {n})")
    ident = [i for i in range(n) if np.array_equal(table[i], np.arange(n))]
    if not ident:
        raise NotAGroup("no row equals [0..n); identity not found")
    # a Latin-square check guarantees finite orders during construction
    for r in range(n):
        if len(set(rows[r])) != n or len(set(table[:, r].tolist())) != n:
            raise NotAGroup("table is not a Latin square")
    G = GroupTable(n, ident[0], table=table, name=name or "cayley")
    check_axioms(G)
    return G


def write_cayley_csv(G: GroupTable) -> str:
    rows = [",".join(str(G.mul(a, b)) for b in range(G.n)) for a in range(G.n)]
    return "\n".join([str(G.n)] + rows) + "\n"


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------

def build_group(spec, cap: int = DEFAULT_CAP) -> GroupTable:
    validate_spec(spec)
    size = spec_order(spec)
    if size is not None and size > cap:
        raise TooLarge(f"group of order {size} exceeds cap {cap}")
    match spec:
        case Cyclic(n):
            return cyclic_group(n)
        case Dihedral(n):
            return dihedral_group(n)
        case GeneralizedQuaternion(order):
            return quaternion_group(order)
        case Symmetric(n):
            return symmetric_group(n)
        case Alternating(n):
            return alternating_group(n)
        case DirectProduct(factors):
            return direct_product([build_group(f, cap) for f in factors])
        case UniTriangular3(p):
            return unitriangular3(p)
        case GL2(p):
            return gl2(p)
        case FromCayleyFile(path):
            try:
                text = Path(path).read_text(encoding="utf-8")
            except OSError as exc:
                raise InvalidSpec(f"cannot read {path}: {exc}") from None
            G = parse_cayley_csv(text, name=Path(path).stem)
            if G.n > cap:
                raise TooLarge(f"group of order {G.n} exceeds cap {cap}")
            return G
    raise InvalidSpec(f"unknown group spec {spec!r}")


def order_census(G: GroupTable) -> dict[int, int]:
    counts: dict[int, int] = {}
    for o in G.order:
        counts[o] = counts.get(o, 0) + 1
    return dict(sorted(counts.items()))


def exponent(G: GroupTable) -> int:
    out = 1
    for o in set(G.order):
        out = lcm(out, o)
    return out
