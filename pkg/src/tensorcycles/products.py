"""Deciders and constructions for cycle decompositions of G x K_n.

Deciders return a :class:`Verdict` naming the clause that settled the
question.  Constructors follow the distributive identity

    (H_1 + ... + H_r) x K_n = (H_1 x K_n) + ... + (H_r x K_n)

so a cycle decomposition of the left factor lifts to the product once each
piece ``C_l x K_n`` is itself decomposed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Mapping, Union

from . import base
from .errors import (BadOrder, MissingPieceConstructor, NotApplicable,
                     NotDecomposable, VerificationFailed)
from .graphs import (Complete, CompleteBipartite, CompleteBipartiteMinusFactor,
                     CompleteMinusFactor, Cycle, GraphFamily, Tensor,
                     degree_profile, materialize, swap_coordinates)
from .verify import Decomposition, canonicalize, verify


@dataclass(frozen=True)
class Verdict:
    decomposable: bool
    clause: str
    k: int
    family: GraphFamily
    reason: str = ""

    def __bool__(self):
        return self.decomposable


def _check_orders(m, n):
    for name, v in (("m", m), ("n", n)):
        if not isinstance(v, int) or v < 2:
            raise BadOrder(f"{name} must be an integer >= 2, got {v!r}")


def decide_c4_kmxkn(m: int, n: int) -> Verdict:
    """4-cycle decomposability of K_m x K_n; first matching clause wins."""
    _check_orders(m, n)
    fam = Tensor(Complete(m), Complete(n))
    if n % 4 == 0 and m % 2 == 1:
        return Verdict(True, "T1.1-c1", 4, fam, f"n = {n} = 0 (mod 4) and m = {m} is odd")
    if m % 4 == 0 and n % 2 == 1:
        return Verdict(True, "T1.1-c2", 4, fam, f"m = {m} = 0 (mod 4) and n = {n} is odd")
    if m % 4 == 1 or n % 4 == 1:
        return Verdict(True, "T1.1-c3", 4, fam,
                       f"m = {m} = {m % 4} (mod 4), n = {n} = {n % 4} (mod 4)")
    return Verdict(False, "T1.1-none", 4, fam,
                   f"m = {m % 4}, n = {n % 4} (mod 4): no clause holds")


def decide_c6_kmxkn(m: int, n: int) -> Verdict:
    """Yes iff m or n = 1 or 3 (mod 6).

    The condition is sufficient but not necessary: exhaustive search finds
    6-cycle decompositions of K_4 x K_5, K_4 x K_11, K_5 x K_6 and K_5 x K_10
    (see ``fixtures/k4xk5_hexagons.json``), all answered "no" here.
    """
    _check_orders(m, n)
    fam = Tensor(Complete(m), Complete(n))
    if m % 6 in (1, 3):
        return Verdict(True, "T1.2-m", 6, fam, f"m = {m} = {m % 6} (mod 6)")
    if n % 6 in (1, 3):
        return Verdict(True, "T1.2-n", 6, fam, f"n = {n} = {n % 6} (mod 6)")
    return Verdict(False, "T1.2-none", 6, fam,
                   f"m = {m % 6}, n = {n % 6} (mod 6): neither is 1 or 3")


def decide_c6_km_minus_factor_xkn(m: int, n: int) -> Verdict:
    if not isinstance(m, int) or m < 6 or m % 2:
        raise BadOrder(f"m must be even and >= 6, got {m!r}")
    if not isinstance(n, int) or n < 2:
        raise BadOrder(f"n must be an integer >= 2, got {n!r}")
    fam = Tensor(CompleteMinusFactor(m), Complete(n))
    if m % 6 in (0, 2):
        return Verdict(True, "T1.3-yes", 6, fam, f"m = {m} = {m % 6} (mod 6)")
    return Verdict(False, "T1.3-no", 6, fam, f"m = {m} = 4 (mod 6)")


def generic_necessary(family: GraphFamily, k: int) -> Verdict:
    """Even degrees and k | |E|.  Passing says nothing about sufficiency."""
    edges = materialize(family)
    odd = sorted(d for d in degree_profile(edges) if d % 2)
    if odd:
        return Verdict(False, "generic-parity", k, family, f"vertices of odd degree {odd}")
    if len(edges) % k:
        return Verdict(False, "generic-divisibility", k, family,
                       f"{len(edges)} edges, {len(edges)} mod {k} = {len(edges) % k}")
    return Verdict(True, "generic-necessary", k, family,
                   f"all degrees even, {k} divides {len(edges)}")


# -- pieces over C_l x K_n -------------------------------------------------

def _relabel(cycles, mapping):
    return [tuple(mapping(v) for v in c) for c in cycles]


def c4_c3xkn(n: int) -> Decomposition:
    """4-cycles of C_3 x K_n for n = 0 or 1 (mod 4).

    Columns split into blocks of four, each carrying the C_3 x K_4 table.
    Edges between blocks form K_{4, n-4} pieces (one block's four vertices
    in one layer against the other blocks' columns in a later layer).  For
    n = 1 (mod 4) column 0 is added last; its edges form three K_{2, n-1}.
    """
    if not isinstance(n, int) or n < 4 or n % 4 not in (0, 1):
        raise NotApplicable(f"C_3 x K_n into 4-cycles needs n = 0 or 1 (mod 4), n >= 4; got {n}")
    offset = n % 4
    cols = list(range(offset, n))
    blocks = [cols[i:i + 4] for i in range(0, len(cols), 4)]
    table = base.c4_table_c3xk4().cycles
    cycles = []
    for block in blocks:
        cycles += _relabel(table, lambda v, b=block: (v[0], b[v[1]]))
    if len(blocks) > 1:
        piece = base.c4_bipartite_even(4, len(cols) - 4).cycles
        for r1, r2 in combinations(range(3), 2):
            for block in blocks:
                others = [c for c in cols if c not in block]
                cycles += _relabel(piece, lambda v, b=block, o=others, r1=r1, r2=r2:
                                   (r1, b[v[1]]) if v[0] == 0 else (r2, o[v[1]]))
    if offset:
        piece = base.c4_bipartite_even(2, n - 1).cycles
        for r1, r2 in combinations(range(3), 2):
            r3 = 3 - r1 - r2
            cycles += _relabel(piece, lambda v, r1=r1, r2=r2, r3=r3:
                               ((r1, r2)[v[1]], 0) if v[0] == 0 else (r3, cols[v[1]]))
    return canonicalize(Decomposition(Tensor(Cycle(3), Complete(n)), 4, cycles))


def _pairwise_even_split(m: int, n: int) -> Decomposition:
    """Two m-cycles on every column pair of C_m x K_n, m even."""
    if not isinstance(n, int) or n < 2:
        raise BadOrder(f"n must be an integer >= 2, got {n!r}")
    split = base.even_cycle_pair_split(m)
    cycles = []
    for i, j in combinations(range(n), 2):
        cols = (i, j)
        cycles += _relabel(split, lambda v, cols=cols: (v[0], cols[v[1]]))
    return canonicalize(Decomposition(Tensor(Cycle(m), Complete(n)), m, cycles))


def c4_c4xkn(n: int) -> Decomposition:
    return _pairwise_even_split(4, n)


def c6_c6xkn(n: int) -> Decomposition:
    return _pairwise_even_split(6, n)


def cm_cmxkn_even(m: int, n: int) -> Decomposition:
    """m-cycles of C_m x K_n for even m; odd m is not constructed here."""
    if not isinstance(m, int) or m < 4 or m % 2:
        raise NotApplicable(f"only even m >= 4 is constructed, got {m!r}")
    return _pairwise_even_split(m, n)


def c6_c3xkn(n: int) -> Decomposition:
    """One hexagon per column pair: the pair induces K_{3,3} - I, a 6-cycle."""
    if not isinstance(n, int) or n < 2:
        raise BadOrder(f"n must be an integer >= 2, got {n!r}")
    cycles = [((0, i), (1, j), (2, i), (0, j), (1, i), (2, j))
              for i, j in combinations(range(n), 2)]
    return canonicalize(Decomposition(Tensor(Cycle(3), Complete(n)), 6, cycles))


# -- lifting ---------------------------------------------------------------

PieceConstructor = Callable[[int], Decomposition]


def lift_left_decomposition(left_dec: Union[Decomposition, base.MixedDecomposition],
                            n: int,
                            pieces: Mapping[int, PieceConstructor]) -> Decomposition:
    """Lift a cycle decomposition of G to one of G x K_n.

    ``pieces[l](n)`` must decompose ``Cycle(l) x K_n``; its row r is mapped to
    the r-th vertex along each left cycle of length l.
    """
    if isinstance(left_dec, base.MixedDecomposition):
        left_dec = left_dec.as_decomposition()
    cert = verify(left_dec)
    if not cert.valid:
        raise VerificationFailed("left decomposition does not verify", cert)
    lengths = sorted({len(c) for c in left_dec.cycles})
    missing = [l for l in lengths if l not in pieces]
    if missing:
        raise MissingPieceConstructor(f"no piece constructor for cycle lengths {missing}")

    built: Dict[int, Decomposition] = {l: pieces[l](n) for l in lengths}
    ks = {built[l].k for l in lengths}
    k = ks.pop() if len(ks) == 1 else 0
    cycles = []
    for c in left_dec.cycles:
        cycles += _relabel(built[len(c)].cycles, lambda v, c=c: (c[v[0]], v[1]))
    dec = canonicalize(Decomposition(Tensor(left_dec.family, Complete(n)), k, cycles))
    cert = verify(dec)
    if not cert.valid:
        raise VerificationFailed("lifted decomposition does not verify", cert)
    return dec


def swap_factors(dec: Decomposition) -> Decomposition:
    """Carry a decomposition of G x H over to H x G."""
    fam = dec.family
    cycles = [tuple(swap_coordinates(v) for v in c) for c in dec.cycles]
    return canonicalize(Decomposition(Tensor(fam.right, fam.left), dec.k, cycles))


# -- main constructions ----------------------------------------------------

def _c4_odd_times_div4(m: int, n: int) -> Decomposition:
    """K_m x K_n with m odd and n = 0 (mod 4), lifting triangles (and 4-cycles)."""
    if m % 6 in (1, 3):
        return lift_left_decomposition(base.steiner_triples(m), n, {3: c4_c3xkn})
    return lift_left_decomposition(base.mixed_triangles_quads(m), n,
                                   {3: c4_c3xkn, 4: c4_c4xkn})


def _c4_by_column_pairs(m: int, n: int) -> Decomposition:
    """K_m x K_n with m = 1 (mod 4): every column pair is K_{m,m} - I."""
    piece = base.c4_knn_minus_factor(m).cycles
    cycles = []
    for i, j in combinations(range(n), 2):
        cols = (i, j)
        cycles += _relabel(piece, lambda v, cols=cols: (v[1], cols[v[0]]))
    return canonicalize(Decomposition(Tensor(Complete(m), Complete(n)), 4, cycles))


def construct_c4_kmxkn(m: int, n: int) -> Decomposition:
    verdict = decide_c4_kmxkn(m, n)
    if not verdict:
        raise NotDecomposable(f"K_{m} x K_{n} has no 4-cycle decomposition ({verdict.reason})")
    if verdict.clause == "T1.1-c1":
        return _c4_odd_times_div4(m, n)
    if verdict.clause == "T1.1-c2":
        return swap_factors(_c4_odd_times_div4(n, m))
    # both sides = 1 (mod 4): the smaller one carries K_{s,s} - I, ties to m
    if m % 4 == 1 and (n % 4 != 1 or m <= n):
        return _c4_by_column_pairs(m, n)
    return swap_factors(_c4_by_column_pairs(n, m))


def construct_c6_kmxkn(m: int, n: int) -> Decomposition:
    verdict = decide_c6_kmxkn(m, n)
    if not verdict:
        raise NotDecomposable(f"K_{m} x K_{n} has no 6-cycle decomposition ({verdict.reason})")
    if verdict.clause == "T1.2-m":
        return lift_left_decomposition(base.steiner_triples(m), n, {3: c6_c3xkn})
    return swap_factors(lift_left_decomposition(base.steiner_triples(n), m, {3: c6_c3xkn}))


def construct_c6_km_minus_factor_xkn(m: int, n: int, budget=None,
                                     cache_dir=None) -> Decomposition:
    verdict = decide_c6_km_minus_factor_xkn(m, n)
    if not verdict:
        raise NotDecomposable(
            f"(K_{m} - I) x K_{n} has no 6-cycle decomposition ({verdict.reason})")
    triangles = base.triangles_km_minus_factor(m, budget=budget, cache_dir=cache_dir)
    return lift_left_decomposition(triangles, n, {3: c6_c3xkn})


# -- dispatch by family ----------------------------------------------------

def decide(family: GraphFamily, k: int) -> Verdict:
    """Exact verdict where a known rule covers (family, k), else necessary conditions."""
    verdict = known_verdict(family, k)
    return verdict if verdict is not None else generic_necessary(family, k)


def known_verdict(family: GraphFamily, k: int):
    """Verdict backed by an if-and-only-if result, or None if none applies."""
    if isinstance(family, Tensor) and isinstance(family.right, Complete):
        left, n = family.left, family.right.m
        if isinstance(left, Complete):
            if k == 4:
                return decide_c4_kmxkn(left.m, n)
            if k == 6:
                return decide_c6_kmxkn(left.m, n)
        if isinstance(left, CompleteMinusFactor) and k == 6:
            return decide_c6_km_minus_factor_xkn(left.m, n)
        if isinstance(left, Cycle):
            if n < 2:
                raise BadOrder(f"n must be >= 2, got {n}")
            if left.m == 3 and k == 4:
                ok = n % 4 in (0, 1)
                return Verdict(ok, "c3xkn-c4", 4, family, f"n = {n} = {n % 4} (mod 4)")
            if left.m == 3 and k == 6:
                return Verdict(True, "c3xkn-c6", 6, family, "every column pair is a hexagon")
            if k == left.m:
                if left.m % 2 == 0:
                    return Verdict(True, "cmxkn-even", k, family,
                                   "every column pair is two disjoint m-cycles")
                # odd m: C_m x K_2 is a single 2m-cycle
                return Verdict(n >= 3, "cmxkn-odd", k, family,
                               f"odd m, n = {n}" + ("" if n >= 3 else ": C_m x K_2 is a 2m-cycle"))
        return None
    if isinstance(family, Complete) and k == 3:
        if family.m < 3:
            raise BadOrder(f"m must be >= 3, got {family.m}")
        ok = family.m % 6 in (1, 3)
        return Verdict(ok, "steiner", 3, family, f"m = {family.m} = {family.m % 6} (mod 6)")
    if isinstance(family, CompleteMinusFactor) and k == 3:
        if family.m < 4:
            raise BadOrder(f"m must be >= 4, got {family.m}")
        ok = family.m % 6 in (0, 2)
        return Verdict(ok, "km-minus-i-c3", 3, family, f"m = {family.m} = {family.m % 6} (mod 6)")
    if isinstance(family, CompleteBipartite) and k == 4:
        ok = family.a % 2 == 0 and family.b % 2 == 0
        return Verdict(ok, "bipartite-c4", 4, family, f"a = {family.a}, b = {family.b}")
    if isinstance(family, CompleteBipartiteMinusFactor) and k == 4:
        if family.n < 2:
            raise BadOrder(f"n must be >= 2, got {family.n}")
        ok = family.n % 4 == 1
        return Verdict(ok, "knn-minus-i-c4", 4, family, f"n = {family.n} = {family.n % 4} (mod 4)")
    return None


def construct(family: GraphFamily, k: int, budget=None, cache_dir=None) -> Decomposition:
    """Build a k-cycle decomposition of ``family`` by the matching construction.

    Raises NotDecomposable when the decider says no, and NotApplicable when
    no construction is implemented for (family, k).
    """
    verdict = known_verdict(family, k)
    if verdict is None:
        raise NotApplicable(f"no construction for {k}-cycles of {family}")
    if not verdict:
        raise NotDecomposable(f"no {k}-cycle decomposition: {verdict.reason}")
    if isinstance(family, Tensor):
        left, n = family.left, family.right.m
        if isinstance(left, Complete):
            return construct_c4_kmxkn(left.m, n) if k == 4 else construct_c6_kmxkn(left.m, n)
        if isinstance(left, CompleteMinusFactor):
            return construct_c6_km_minus_factor_xkn(left.m, n, budget, cache_dir)
        if left.m == 3 and k in (4, 6):
            return c4_c3xkn(n) if k == 4 else c6_c3xkn(n)
        return cm_cmxkn_even(left.m, n)
    if isinstance(family, Complete):
        return base.steiner_triples(family.m)
    if isinstance(family, CompleteMinusFactor):
        return base.triangles_km_minus_factor(family.m, budget=budget, cache_dir=cache_dir)
    if isinstance(family, CompleteBipartite):
        return base.c4_bipartite_even(family.a, family.b)
    return base.c4_knn_minus_factor(family.n)
