"""Exact isomorphism testing for small graphs and digraphs.

Backtracking over individualised vertices with joint colour refinement
(1-dimensional Weisfeiler-Leman) run on both inputs at once, so colour ids
are comparable across the two. Branching always happens on the smallest
vertex of ``a`` whose colour class is not yet a singleton, with candidates
tried in increasing order; the first witness found is therefore the
lexicographically least isomorphism.
"""

from __future__ import annotations

import time
from collections import Counter

from .errors import IsomorphismTimeout
from .graphs import Digraph, Graph

DEFAULT_BUDGET_S = 30.0


class _Search:
    def __init__(self, a_out, a_in, b_out, b_in, directed, budget_s):
        self.n = len(a_out)
        self.a_out, self.a_in = a_out, a_in
        self.b_out, self.b_in = b_out, b_in
        self.directed = directed
        self.deadline = time.monotonic() + budget_s
        self.budget_s = budget_s

    def _signatures(self, colors, out, inn):
        sigs = []
        for v in range(self.n):
            so = tuple(sorted(colors[w] for w in out[v]))
            if self.directed:
                si = tuple(sorted(colors[w] for w in inn[v]))
                sigs.append((colors[v], so, si))
            else:
                sigs.append((colors[v], so))
        return sigs

    def refine(self, ca, cb):
        """Refine both colourings to a joint fixpoint; None when histograms diverge."""
        ncol = len(set(ca))
        while True:
            sa = self._signatures(ca, self.a_out, self.a_in)
            sb = self._signatures(cb, self.b_out, self.b_in)
            if Counter(sa) != Counter(sb):
                return None
            ids = {s: k for k, s in enumerate(sorted(set(sa)))}
            ca = [ids[s] for s in sa]
            cb = [ids[s] for s in sb]
            if len(ids) == ncol:
                return ca, cb
            ncol = len(ids)

    def verify(self, mapping):
        for x in range(self.n):
            if {mapping[y] for y in self.a_out[x]} != set(self.b_out[mapping[x]]):
                return False
        return True

    def run(self, ca, cb):
        if time.monotonic() > self.deadline:
            raise IsomorphismTimeout(f"isomorphism search exceeded {self.budget_s} s")
        sizes = Counter(ca)
        pick = next((v for v in range(self.n) if sizes[ca[v]] > 1), None)
        if pick is None:
            where = {c: w for w, c in enumerate(cb)}
            mapping = [where[c] for c in ca]
            return mapping if self.verify(mapping) else None
        target = ca[pick]
        fresh = max(ca) + 1
        for w in range(self.n):
            if cb[w] != target:
                continue
            na, nb = list(ca), list(cb)
            na[pick] = fresh
            nb[w] = fresh
            refined = self.refine(na, nb)
            if refined is None:
                continue
            found = self.run(*refined)
            if found is not None:
                return found
        return None


def _iso(a_out, a_in, b_out, b_in, directed, budget_s):
    n = len(a_out)
    if n != len(b_out):
        return None
    if sum(map(len, a_out)) != sum(map(len, b_out)):
        return None
    if n == 0:
        return {}
    s = _Search(a_out, a_in, b_out, b_in, directed, budget_s)
    start = s.refine([0] * n, [0] * n)
    if start is None:
        return None
    mapping = s.run(*start)
    return None if mapping is None else dict(enumerate(mapping))


def are_isomorphic_graphs(a: Graph, b: Graph, budget_s: float = DEFAULT_BUDGET_S) -> dict[int, int] | None:
    """Lexicographically least isomorphism ``a -> b`` as a dict, or None."""
    return _iso(a.adj, a.adj, b.adj, b.adj, False, budget_s)


def are_isomorphic_digraphs(a: Digraph, b: Digraph, budget_s: float = DEFAULT_BUDGET_S) -> dict[int, int] | None:
    return _iso(a.out, a.inn, b.out, b.inn, True, budget_s)
