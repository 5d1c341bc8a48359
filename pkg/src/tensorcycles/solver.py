"""Exact-cover backtracking for k-cycle decompositions of small graphs.

This is the independent oracle: it knows nothing about the constructions
and decides existence by exhaustive search.  At every node the pivot is the
lexicographically smallest uncovered edge ``(u, v)``; the branches are the
k-cycles through that edge that use only uncovered edges.  Each cycle is
generated exactly once, as the closed walk ``u, v, ..., u``, so no
rotation or reflection symmetry needs filtering.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import List, Optional, Union

from .errors import BudgetExceeded
from .graphs import EdgeSet, Explicit, GraphFamily, materialize
from .verify import Decomposition, canonicalize

FOUND = "FOUND"
NONE = "NONE"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

_TIME_CHECK_EVERY = 1024


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_millis: int = 30_000  # 0 disables the wall-clock limit


@dataclass(frozen=True)
class SolveOutcome:
    status: str
    decomposition: Optional[Decomposition]
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Search:
    def __init__(self, graph: EdgeSet, k: int, budget: SearchBudget):
        self.labels = sorted(graph.vertices)
        index = {v: i for i, v in enumerate(self.labels)}
        self.adj = [0] * len(self.labels)
        for u, v in graph.edges:
            iu, iv = index[u], index[v]
            self.adj[iu] |= 1 << iv
            self.adj[iv] |= 1 << iu
        self.k = k
        self.remaining = len(graph.edges)
        self.budget = budget
        self.nodes = 0
        self.work = 0  # path extensions, for clock checks inside a node
        self.deadline = (time.monotonic() + budget.max_millis / 1000
                         if budget.max_millis else None)

    def hopeless(self) -> bool:
        if self.remaining % self.k:
            return True
        return any(bin(a).count("1") % 2 for a in self.adj)

    def check_clock(self):
        if time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time budget of {self.budget.max_millis} ms exhausted")

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(f"node budget of {self.budget.max_nodes} exhausted")
        if self.deadline is not None and self.nodes % _TIME_CHECK_EVERY == 0:
            self.check_clock()

    def pivot(self):
        for u, a in enumerate(self.adj):
            if a:
                return u, (a & -a).bit_length() - 1
        return None

    def cycles_through(self, u: int, v: int) -> List[List[int]]:
        """All k-cycles u, v, ..., u over uncovered edges, in a fixed order."""
        adj, k = self.adj, self.k
        found = []
        path = [u, v]
        on_path = (1 << u) | (1 << v)

        def extend(cur, on_path):
            self.work += 1
            if self.deadline is not None and self.work % _TIME_CHECK_EVERY == 0:
                self.check_clock()
            if len(path) == k:
                if adj[cur] >> u & 1:
                    found.append(list(path))
                return
            m = adj[cur] & ~on_path
            while m:
                low = m & -m
                m ^= low
                w = low.bit_length() - 1
                path.append(w)
                extend(w, on_path | low)
                path.pop()

        extend(v, on_path)
        return found

    def toggle(self, cyc):
        adj = self.adj
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            adj[a] ^= 1 << b
            adj[b] ^= 1 << a

    def run(self, stop_at_first: bool):
        """Depth-first exact cover; yields each complete solution."""
        self.tick()
        if self.hopeless():
            return
        chosen: List[List[int]] = []
        stack = []
        piv = self.pivot()
        if piv is None:
            yield []
            return
        stack.append(iter(self.cycles_through(*piv)))
        while stack:
            cyc = next(stack[-1], None)
            if cyc is None:
                stack.pop()
                if chosen:
                    self.toggle(chosen.pop())
                    self.remaining += self.k
                continue
            self.tick()
            self.toggle(cyc)
            self.remaining -= self.k
            chosen.append(cyc)
            piv = self.pivot()
            if piv is None:
                yield [list(c) for c in chosen]
                if stop_at_first:
                    return
                self.toggle(chosen.pop())
                self.remaining += self.k
                continue
            stack.append(iter(self.cycles_through(*piv)))


def _as_family(graph: Union[GraphFamily, EdgeSet]):
    if isinstance(graph, EdgeSet):
        return Explicit(graph), graph
    return graph, materialize(graph)


def solve(graph: Union[GraphFamily, EdgeSet], k: int,
          budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """Find a k-cycle decomposition of ``graph`` or prove that none exists.

    ``graph`` may be a family or an explicit edge set.  A NONE outcome is
    only ever returned after the whole search space is exhausted.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    family, edges = _as_family(graph)
    search = _Search(edges, k, budget or SearchBudget())
    try:
        solution = next(search.run(stop_at_first=True), None)
    except BudgetExceeded:
        return SolveOutcome(BUDGET_EXCEEDED, None, search.nodes)
    if solution is None:
        return SolveOutcome(NONE, None, search.nodes)
    labels = search.labels
    cycles = [tuple(labels[i] for i in c) for c in solution]
    return SolveOutcome(FOUND, canonicalize(Decomposition(family, k, cycles)), search.nodes)


def count_all(graph: Union[GraphFamily, EdgeSet], k: int,
              budget: Optional[SearchBudget] = None) -> int:
    """Number of distinct k-cycle decompositions (as sets of cycles).

    Raises BudgetExceeded if the enumeration does not finish in budget.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    _, edges = _as_family(graph)
    search = _Search(edges, k, budget or SearchBudget())
    return sum(1 for _ in search.run(stop_at_first=False))
