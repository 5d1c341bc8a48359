"""Graph families, explicit edge sets and tensor-product structure.

Vertices are plain ints for one-part graphs (complete, complete minus a
perfect matching, cycle), ``(side, index)`` pairs for bipartite graphs and
``(row, col)`` pairs for tensor products, where ``row`` is a vertex of the
left factor and ``col`` a vertex of the right factor.  Everything is
0-based.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterator, Tuple

from .errors import BadColumn, InvalidFamily

Vertex = Hashable
Edge = Tuple[Vertex, Vertex]


def edge(u: Vertex, v: Vertex) -> Edge:
    """Canonical encoding of the undirected edge uv (smaller endpoint first)."""
    return (u, v) if u < v else (v, u)


class GraphFamily:
    """Symbolic description of a structured graph.

    Subclasses are frozen dataclasses and validate their parameters on
    construction, raising :class:`InvalidFamily`.
    """

    def vertices(self) -> Tuple[Vertex, ...]:
        raise NotImplementedError

    def iter_edges(self) -> Iterator[Edge]:
        raise NotImplementedError

    def edge_count(self) -> int:
        raise NotImplementedError

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        raise NotImplementedError


def _check_int(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise InvalidFamily(f"{name} must be an integer >= {minimum}, got {value!r}")


@dataclass(frozen=True)
class Complete(GraphFamily):
    m: int

    def __post_init__(self):
        _check_int("m", self.m, 1)

    def vertices(self):
        return tuple(range(self.m))

    def iter_edges(self):
        return combinations(range(self.m), 2)

    def edge_count(self):
        return self.m * (self.m - 1) // 2

    def has_edge(self, u, v):
        return u != v and 0 <= u < self.m and 0 <= v < self.m


@dataclass(frozen=True)
class CompleteMinusFactor(GraphFamily):
    """K_m with the perfect matching {0,1}, {2,3}, ... removed."""

    m: int

    def __post_init__(self):
        _check_int("m", self.m, 2)
        if self.m % 2:
            raise InvalidFamily(f"K_m - I needs even m, got {self.m}")

    def vertices(self):
        return tuple(range(self.m))

    def iter_edges(self):
        return ((u, v) for u, v in combinations(range(self.m), 2) if u // 2 != v // 2)

    def edge_count(self):
        return self.m * (self.m - 2) // 2

    def has_edge(self, u, v):
        return 0 <= u < self.m and 0 <= v < self.m and u // 2 != v // 2


@dataclass(frozen=True)
class CompleteBipartite(GraphFamily):
    a: int
    b: int

    def __post_init__(self):
        _check_int("a", self.a, 1)
        _check_int("b", self.b, 1)

    def vertices(self):
        return tuple((0, i) for i in range(self.a)) + tuple((1, j) for j in range(self.b))

    def iter_edges(self):
        return (((0, i), (1, j)) for i in range(self.a) for j in range(self.b))

    def edge_count(self):
        return self.a * self.b

    def has_edge(self, u, v):
        u, v = edge(u, v)
        return u[0] == 0 and v[0] == 1 and 0 <= u[1] < self.a and 0 <= v[1] < self.b


@dataclass(frozen=True)
class CompleteBipartiteMinusFactor(GraphFamily):
    """K_{n,n} with the perfect matching {(0,i), (1,i)} removed."""

    n: int

    def __post_init__(self):
        _check_int("n", self.n, 1)

    def vertices(self):
        return tuple((s, i) for s in (0, 1) for i in range(self.n))

    def iter_edges(self):
        n = self.n
        return (((0, i), (1, j)) for i in range(n) for j in range(n) if i != j)

    def edge_count(self):
        return self.n * (self.n - 1)

    def has_edge(self, u, v):
        u, v = edge(u, v)
        return (u[0] == 0 and v[0] == 1 and u[1] != v[1]
                and 0 <= u[1] < self.n and 0 <= v[1] < self.n)


@dataclass(frozen=True)
class Cycle(GraphFamily):
    m: int

    def __post_init__(self):
        _check_int("m", self.m, 3)

    def vertices(self):
        return tuple(range(self.m))

    def iter_edges(self):
        return (edge(i, (i + 1) % self.m) for i in range(self.m))

    def edge_count(self):
        return self.m

    def has_edge(self, u, v):
        return 0 <= u < self.m and 0 <= v < self.m and (u - v) % self.m in (1, self.m - 1)


@dataclass(frozen=True)
class Tensor(GraphFamily):
    """Tensor (categorical) product: (r1,c1) ~ (r2,c2) iff r1 ~ r2 and c1 ~ c2."""

    left: GraphFamily
    right: GraphFamily

    def __post_init__(self):
        for side in (self.left, self.right):
            if not isinstance(side, GraphFamily):
                raise InvalidFamily(f"tensor operand is not a graph family: {side!r}")

    def vertices(self):
        cols = self.right.vertices()
        return tuple((r, c) for r in self.left.vertices() for c in cols)

    def iter_edges(self):
        right_edges = list(self.right.iter_edges())
        for r1, r2 in self.left.iter_edges():
            for c1, c2 in right_edges:
                yield edge((r1, c1), (r2, c2))
                yield edge((r1, c2), (r2, c1))

    def edge_count(self):
        return 2 * self.left.edge_count() * self.right.edge_count()

    def has_edge(self, u, v):
        try:
            (r1, c1), (r2, c2) = u, v
        except (TypeError, ValueError):
            return False
        return self.left.has_edge(r1, r2) and self.right.has_edge(c1, c2)


@dataclass(frozen=True)
class Explicit(GraphFamily):
    """An arbitrary graph given by its explicit edge set."""

    graph: "EdgeSet"

    def vertices(self):
        return self.graph.vertices

    def iter_edges(self):
        return iter(sorted(self.graph.edges))

    def edge_count(self):
        return len(self.graph.edges)

    def has_edge(self, u, v):
        return (u, v) in self.graph


@dataclass(frozen=True)
class EdgeSet:
    """Explicit edge set of a graph, over canonical vertex labels."""

    vertices: Tuple[Vertex, ...]
    edges: FrozenSet[Edge]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, e):
        return edge(*e) in self.edges

    @cached_property
    def adjacency(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}


def materialize(family: GraphFamily) -> EdgeSet:
    """Return the explicit edge set of ``family``."""
    if not isinstance(family, GraphFamily):
        raise InvalidFamily(f"not a graph family: {family!r}")
    return EdgeSet(family.vertices(), frozenset(family.iter_edges()))


def column_pair_subgraph(family: Tensor, j, j2) -> EdgeSet:
    """Edges of ``family`` running between columns ``j`` and ``j2``.

    For ``Tensor(Complete(m), Complete(n))`` this is K_{m,m} - I on the
    2m column vertices.
    """
    if not isinstance(family, Tensor):
        raise InvalidFamily("column pairs are only defined for tensor products")
    cols = family.right.vertices()
    if j not in cols or j2 not in cols:
        raise BadColumn(f"column out of range: {j!r}, {j2!r}")
    if j == j2:
        raise BadColumn(f"columns must differ, got {j!r} twice")
    rows = family.left.vertices()
    verts = tuple((r, c) for c in (j, j2) for r in rows)
    if not family.right.has_edge(j, j2):
        return EdgeSet(verts, frozenset())
    edges = set()
    for r1, r2 in family.left.iter_edges():
        edges.add(edge((r1, j), (r2, j2)))
        edges.add(edge((r1, j2), (r2, j)))
    return EdgeSet(verts, frozenset(edges))


def degree_profile(edges: EdgeSet) -> Dict[int, int]:
    """Histogram mapping each degree to the number of vertices having it."""
    deg = Counter({v: 0 for v in edges.vertices})
    for u, v in edges.edges:
        deg[u] += 1
        deg[v] += 1
    return dict(sorted(Counter(deg.values()).items()))


def swap_coordinates(vertex):
    """(row, col) -> (col, row); the isomorphism G x H -> H x G."""
    r, c = vertex
    return (c, r)
