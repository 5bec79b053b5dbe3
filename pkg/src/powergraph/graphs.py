"""Vertex-indexed graphs, digraphs and partitions.

Graphs never store self-edges. Following the convention used for quotient
graphs, every vertex is treated as carrying a loop (``loops_implicit``), so a
projection onto a quotient is always a graph homomorphism; the loop is
metadata only and does not count towards degrees.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import BadVertexList, OutOfRange, PartitionMismatch


class Graph:
    __slots__ = ("n", "adj", "loops_implicit", "_closed")

    def __init__(self, n: int, adj: Sequence[Iterable[int]], loops_implicit: bool = True):
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        self.loops_implicit = loops_implicit
        self._closed = None
        if len(self.adj) != n:
            raise ValueError("adjacency length differs from n")
        for x, nb in enumerate(self.adj):
            if x in nb:
                raise ValueError(f"self-edge stored at {x}")
            for y in nb:
                if x not in self.adj[y]:
                    raise ValueError(f"asymmetric adjacency {x}-{y}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [set() for _ in range(n)]
        for x, y in edges:
            if x == y:
                continue
            adj[x].add(y)
            adj[y].add(x)
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [set(range(n)) - {x} for x in range(n)])

    def check(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise OutOfRange(f"vertex {x} not in [0, {self.n})")

    def neighbors(self, x: int) -> frozenset[int]:
        return self.adj[x]

    def closed_nbhd(self, x: int) -> frozenset[int]:
        if self._closed is None:
            self._closed = tuple(a | {v} for v, a in enumerate(self.adj))
        return self._closed[x]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.adj[x]

    def degree(self, x: int) -> int:
        return len(self.adj[x])

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in sorted(self.adj[x]) if x < y]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


class Digraph:
    __slots__ = ("n", "out", "inn")

    def __init__(self, n: int, out: Sequence[Iterable[int]]):
        self.n = n
        self.out = tuple(frozenset(o) for o in out)
        inn = [set() for _ in range(n)]
        for x, o in enumerate(self.out):
            if x in o:
                raise ValueError(f"self-arc at {x}")
            for y in o:
                inn[y].add(x)
        self.inn = tuple(frozenset(s) for s in inn)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        out = [set() for _ in range(n)]
        for x, y in arcs:
            if x != y:
                out[x].add(y)
        return cls(n, out)

    def has_arc(self, x: int, y: int) -> bool:
        return y in self.out[x]

    def arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in sorted(self.out[x])]

    def arc_count(self) -> int:
        return sum(len(o) for o in self.out)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.out == other.out

    def __hash__(self):
        return hash((self.n, self.out))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count()})"


@dataclass(frozen=True)
class Partition:
    """Classes sorted internally and ordered by their smallest member."""

    n: int
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Partition":
        cl = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0] if c else -1)
        class_of = [-1] * n
        for k, c in enumerate(cl):
            if not c:
                raise PartitionMismatch("empty class")
            for v in c:
                if not 0 <= v < n or class_of[v] != -1:
                    raise PartitionMismatch(f"vertex {v} out of range or in two classes")
                class_of[v] = k
        if -1 in class_of:
            raise PartitionMismatch("classes do not cover the vertex set")
        return cls(n, tuple(cl), tuple(class_of))

    @classmethod
    def from_key(cls, n: int, key: Callable[[int], Hashable]) -> "Partition":
        groups: dict = {}
        for v in range(n):
            groups.setdefault(key(v), []).append(v)
        return cls.from_classes(n, groups.values())

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls.from_classes(n, [[v] for v in range(n)])

    def __len__(self):
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def class_containing(self, v: int) -> tuple[int, ...]:
        return self.classes[self.class_of[v]]

    def is_discrete(self) -> bool:
        return len(self.classes) == self.n

    def restrict(self, keep: Sequence[int]) -> "Partition":
        """Partition induced on ``keep`` (old ids), re-indexed in ``keep`` order."""
        return Partition.from_key(len(keep), lambda i: self.class_of[keep[i]])

    def refines(self, other: "Partition") -> bool:
        return all(len({other.class_of[v] for v in c}) == 1 for c in self.classes)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, vs: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    if not vs or len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        raise BadVertexList("vertex list must be nonempty, duplicate free and in range")
    vs = sorted(vs)
    index = {v: i for i, v in enumerate(vs)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in vs]
    return Graph(len(vs), adj, g.loops_implicit), index


def quotient(g: Graph, p: Partition) -> Graph:
    """One vertex per class; distinct classes joined iff some cross edge exists."""
    if p.n != g.n:
        raise PartitionMismatch(f"partition on {p.n} vertices, graph has {g.n}")
    cls = p.class_of
    adj = [set() for _ in range(len(p))]
    for x in range(g.n):
        cx = cls[x]
        for y in g.adj[x]:
            if cls[y] != cx:
                adj[cx].add(cls[y])
    return Graph(len(p), adj)


def connected_components(g: Graph) -> tuple[int, list[int]]:
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if label[y] == -1:
                    label[y] = count
                    queue.append(y)
        count += 1
    return count, label


def underlying_undirected(d: Digraph) -> Graph:
    adj = [set(d.out[x]) | set(d.inn[x]) for x in range(d.n)]
    return Graph(d.n, adj)


def is_transitive(d: Digraph) -> bool:
    # x->y->z with z != x must give x->z
    for x in range(d.n):
        ox = d.out[x]
        for y in ox:
            if not (d.out[y] - {x}) <= ox:
                return False
    return True


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, [set(range(n)) - {x} for x in range(n)])


def relabel_graph(g: Graph, perm: Sequence[int]) -> Graph:
    adj = [None] * g.n
    for x in range(g.n):
        adj[perm[x]] = {perm[y] for y in g.adj[x]}
    return Graph(g.n, adj, g.loops_implicit)


def relabel_digraph(d: Digraph, perm: Sequence[int]) -> Digraph:
    out = [None] * d.n
    for x in range(d.n):
        out[perm[x]] = {perm[y] for y in d.out[x]}
    return Digraph(d.n, out)


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: Graph | Digraph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    directed = isinstance(g, Digraph)
    op = "->" if directed else "--"
    lines = [f'{"digraph" if directed else "graph"} "{_dot_escape(name)}" {{']
    for v in range(g.n):
        if labels is not None:
            lines.append(f'  {v} [label="{_dot_escape(labels[v])}"];')
        else:
            lines.append(f"  {v};")
    pairs = g.arcs() if directed else g.edges()
    lines += [f"  {x} {op} {y};" for x, y in pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"


_TOKEN = r'(?:"(?:[^"\\]|\\.)*"|[A-Za-z0-9_.^]+)'
_EDGE_RE = re.compile(rf"({_TOKEN})\s*(--|->)\s*({_TOKEN})")
_NODE_RE = re.compile(rf"^\s*({_TOKEN})\s*(\[[^\]]*\])?\s*;?\s*$")
_HEADER_RE = re.compile(r"^\s*(strict\s+)?(di)?graph\b", re.IGNORECASE)


def parse_dot(text: str) -> tuple[Graph | Digraph, list[str]]:
    """Parse the DOT subset written by :func:`to_dot`.

    Vertex names that are all integers ``0..n-1`` keep their ids; otherwise
    ids follow order of first appearance. Returns the graph and the vertex
    labels (``label`` attributes when present, else the names).
    """
    header = _HEADER_RE.search(text)
    if not header:
        raise ValueError("not a DOT graph")
    directed = bool(header.group(2))
    body = text[text.index("{") + 1: text.rindex("}")]
    names: list[str] = []
    labels: dict[str, str] = {}
    pairs = []

    def see(tok: str) -> str:
        if tok.startswith('"'):
            tok = tok[1:-1]
        if tok not in names:
            names.append(tok)
        return tok

    for stmt in re.split(r"[;\n]", body):
        stmt = stmt.strip()
        if not stmt or stmt.startswith(("//", "#")):
            continue
        if re.match(r"^(graph|node|edge)\s*\[", stmt) or "=" in stmt.split("[")[0]:
            continue
        toks = _EDGE_RE.findall(stmt)
        if toks:
            chain = re.split(r"\s*(?:--|->)\s*", stmt.split("[")[0])
            chain = [see(t.strip()) for t in chain if t.strip()]
            pairs += list(zip(chain, chain[1:]))
            continue
        m = _NODE_RE.match(stmt)
        if m:
            nm = see(m.group(1))
            lab = re.search(r'label\s*=\s*"((?:[^"\\]|\\.)*)"', m.group(2) or "")
            if lab:
                labels[nm] = lab.group(1).replace('\\"', '"').replace("\\\\", "\\")
    if names and all(t.isdigit() for t in names) and sorted(int(t) for t in names) == list(range(len(names))):
        ids = {t: int(t) for t in names}
    else:
        ids = {t: i for i, t in enumerate(names)}
    n = len(names)
    lab_list = [""] * n
    for t, i in ids.items():
        lab_list[i] = labels.get(t, t)
    id_pairs = [(ids[a], ids[b]) for a, b in pairs]
    if directed:
        return Digraph.from_arcs(n, id_pairs), lab_list
    return Graph.from_edges(n, id_pairs), lab_list


def to_json_dict(g: Graph | Digraph, labels: Sequence[str] | None = None) -> dict:
    directed = isinstance(g, Digraph)
    out = {
        "n": g.n,
        "directed": directed,
        "arcs" if directed else "edges": [list(e) for e in (g.arcs() if directed else g.edges())],
    }
    if labels is not None:
        out["labels"] = list(labels)
    return out


def from_json_dict(data: dict) -> Graph | Digraph:
    if data.get("directed"):
        return Digraph.from_arcs(data["n"], [tuple(a) for a in data["arcs"]])
    return Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
