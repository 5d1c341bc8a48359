"""Leaf-level decompositions that the product constructions are built from.

Closed-form where a construction is known (Steiner triple systems, K_m into
triangles and 4-cycles, even complete bipartite graphs, K_{n,n} - I by
differences); the triangle systems of K_m - I come from the exact solver
and are cached on disk.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple

from .errors import BudgetExceeded, NotApplicable
from .graphs import (Complete, CompleteBipartite, CompleteBipartiteMinusFactor,
                     CompleteMinusFactor, Cycle, Tensor)
from .verify import Decomposition, canonical_cycle, canonicalize, verify

log = logging.getLogger(__name__)

# Layers u, v, w are rows 0, 1, 2; subscript i is column i - 1.
C3XK4_TABLE = (
    "u1 v4 u2 w3", "u1 v3 u4 w2", "u1 v2 u3 w4",
    "u2 v3 w2 v1", "u3 v1 w3 v4", "u2 w1 v3 w4",
    "u3 w2 v4 w1", "u4 v1 w4 v2", "u4 w1 v2 w3",
)


def layer_vertex(token: str, layers: str = "uvw") -> Tuple[int, int]:
    """``"v4"`` -> ``(1, 3)``: layer letter to row, 1-based subscript to column."""
    return layers.index(token[0]), int(token[1:]) - 1


def c4_table_c3xk4() -> Decomposition:
    """The nine 4-cycles decomposing C_3 x K_4."""
    cycles = [tuple(layer_vertex(t) for t in row.split()) for row in C3XK4_TABLE]
    return canonicalize(Decomposition(Tensor(Cycle(3), Complete(4)), 4, cycles))


def _bose_triples(m: int) -> List[tuple]:
    # m = 3n, n odd; x o y = (x + y) / 2 mod n is idempotent and commutative
    n = m // 3
    half = (n + 1) // 2
    label = lambda x, i: (i % 3) * n + x
    triples = [(label(x, 0), label(x, 1), label(x, 2)) for x in range(n)]
    for i in range(3):
        for x in range(n):
            for y in range(x + 1, n):
                triples.append((label(x, i), label(y, i), label((x + y) * half % n, i + 1)))
    return triples


def _skolem_triples(m: int) -> List[tuple]:
    # m = 6t + 1 on Z_2t x Z_3 plus a point at infinity, using the
    # half-idempotent commutative quasigroup of order 2t
    n = (m - 1) // 3
    t = n // 2
    inf = m - 1
    label = lambda x, i: (i % 3) * n + x

    def op(x, y):
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else s // 2 + t

    triples = [(label(x, 0), label(x, 1), label(x, 2)) for x in range(t)]
    for i in range(3):
        for x in range(t):
            triples.append((inf, label(x + t, i), label(x, i + 1)))
        for x in range(n):
            for y in range(x + 1, n):
                triples.append((label(x, i), label(y, i), label(op(x, y), i + 1)))
    return triples


def steiner_triples(m: int) -> Decomposition:
    """Steiner triple system of order m, as a triangle decomposition of K_m.

    Bose construction for m = 3 (mod 6), Skolem construction for m = 1 (mod 6).
    """
    if not isinstance(m, int) or m < 3 or m % 6 not in (1, 3):
        raise NotApplicable(f"Steiner triple systems need m = 1 or 3 (mod 6), m >= 3; got {m}")
    triples = _bose_triples(m) if m % 6 == 3 else _skolem_triples(m)
    return canonicalize(Decomposition(Complete(m), 3, triples))


@dataclass(frozen=True)
class MixedDecomposition:
    """K_m split into ``p`` triangles and ``q`` 4-cycles."""

    m: int
    triangles: Tuple[tuple, ...]
    quads: Tuple[tuple, ...]

    @property
    def p(self) -> int:
        return len(self.triangles)

    @property
    def q(self) -> int:
        return len(self.quads)

    def as_decomposition(self) -> Decomposition:
        return Decomposition(Complete(self.m), 0, self.triangles + self.quads)


def mixed_triangles_quads(m: int) -> MixedDecomposition:
    """Triangles and 4-cycles covering K_m for m = 5 (mod 6).

    Vertex m-1 and the pairs {i-1, i} (i odd) form the triangles; each two
    pairs span one 4-cycle.  Indices are used literally, no reduction mod m.
    """
    if not isinstance(m, int) or m < 5 or m % 6 != 5:
        raise NotApplicable(f"needs m = 5 (mod 6), got {m}")
    quads = [(i, i + 1 + 2 * s, i - 1, i + 2 + 2 * s)
             for i in range(1, m - 3, 2)
             for s in range((m - i) // 2 - 1)]
    triangles = [(m - 1, i - 1, i) for i in range(1, m - 1, 2)]
    return MixedDecomposition(
        m,
        tuple(sorted(canonical_cycle(c) for c in triangles)),
        tuple(sorted(canonical_cycle(c) for c in quads)),
    )


def c4_bipartite_even(a: int, b: int) -> Decomposition:
    """K_{a,b} with a, b even: each pair of side-0 pairs and side-1 pairs is a C_4."""
    if a < 2 or b < 2 or a % 2 or b % 2:
        raise NotApplicable(f"K_{{a,b}} into 4-cycles needs a, b even and >= 2; got {a}, {b}")
    cycles = [((0, i), (1, j), (0, i + 1), (1, j + 1))
              for i in range(0, a, 2) for j in range(0, b, 2)]
    return canonicalize(Decomposition(CompleteBipartite(a, b), 4, cycles))


@dataclass(frozen=True)
class DifferenceOrbit:
    """A base cycle over (side, index) labels, developed by index shifts mod n."""

    base_cycle: tuple
    modulus: int

    @property
    def translates(self) -> int:
        return self.modulus


def translate(cycle, t: int, n: int) -> tuple:
    return tuple((side, (i + t) % n) for side, i in cycle)


def develop(orbit: DifferenceOrbit) -> List[tuple]:
    return [translate(orbit.base_cycle, t, orbit.modulus) for t in range(orbit.translates)]


def knn_minus_factor_orbits(n: int) -> List[DifferenceOrbit]:
    """Base 4-cycles whose developments partition K_{n,n} - I, n = 1 (mod 4).

    The edge a_i b_j has difference j - i mod n; difference 0 is the removed
    factor.  Orbit j uses differences 2j-1, 2j, n-2j+1 and n-2j once each.
    """
    return [DifferenceOrbit(((0, 0), (1, 2 * j - 1), (0, n - 1), (1, n - 2 * j)), n)
            for j in range(1, (n - 1) // 4 + 1)]


def c4_knn_minus_factor(n: int) -> Decomposition:
    if not isinstance(n, int) or n < 5 or n % 4 != 1:
        raise NotApplicable(f"K_{{n,n}} - I into 4-cycles needs n = 1 (mod 4), n >= 5; got {n}")
    cycles = [c for orbit in knn_minus_factor_orbits(n) for c in develop(orbit)]
    return canonicalize(Decomposition(CompleteBipartiteMinusFactor(n), 4, cycles))


def even_cycle_pair_split(m: int) -> Tuple[tuple, tuple]:
    """The two m-cycles forming C_m x K_2 for even m.

    Walking the base cycle while alternating columns gives one cycle from
    each starting column; vertices are (row, col) with col in {0, 1}.
    """
    if not isinstance(m, int) or m < 4 or m % 2:
        raise NotApplicable(f"C_m x K_2 splits into two m-cycles only for even m >= 4; got {m}")
    first = tuple((r, r % 2) for r in range(m))
    second = tuple((r, 1 - r % 2) for r in range(m))
    return first, second


_memory_cache = {}


def _cache_path(cache_dir, m: int) -> Path:
    return Path(cache_dir) / f"km-minus-i-{m}.k3.json"


def triangles_km_minus_factor(m: int, budget=None, cache_dir=None) -> Decomposition:
    """Triangle decomposition of K_m - I, from cache or from the exact solver.

    With ``cache_dir`` set, solved systems are read from and written to
    ``<cache_dir>/km-minus-i-<m>.k3.json``; cached files are re-verified
    before use.
    """
    if not isinstance(m, int) or m < 6 or m % 6 not in (0, 2):
        raise NotApplicable(f"K_m - I into triangles needs m = 0 or 2 (mod 6), m >= 6; got {m}")
    from . import formats, solver

    family = CompleteMinusFactor(m)
    if m in _memory_cache:
        return _memory_cache[m]
    if cache_dir is not None:
        path = _cache_path(cache_dir, m)
        if path.exists():
            try:
                dec = formats.read_decomposition(path)
            except (ValueError, OSError) as exc:
                log.warning("ignoring unreadable cache file %s: %s", path, exc)
            else:
                if dec.family == family and dec.k == 3 and verify(dec).valid:
                    _memory_cache[m] = canonicalize(dec)
                    return _memory_cache[m]
                log.warning("ignoring cache file %s: does not verify", path)

    outcome = solver.solve(family, 3, budget)
    if outcome.status == solver.BUDGET_EXCEEDED:
        raise BudgetExceeded(
            f"no triangle system of K_{m} - I found within {outcome.nodes_explored} nodes")
    if outcome.status != solver.FOUND:
        raise RuntimeError(f"solver claims K_{m} - I has no triangle system")
    dec = outcome.decomposition
    _memory_cache[m] = dec
    if cache_dir is not None:
        formats.write_decomposition(dec, _cache_path(cache_dir, m))
    return dec
