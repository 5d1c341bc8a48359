import pytest
from hypothesis import given, settings, strategies as st

from tensorcycles import base, formats, products
from tensorcycles.errors import (BadOrder, MissingPieceConstructor, NotApplicable,
                                 NotDecomposable)
from tensorcycles.graphs import (Complete, CompleteMinusFactor, Cycle, Tensor, edge,
                                 materialize, swap_coordinates)
from tensorcycles.products import (c4_c3xkn, c4_c4xkn, c6_c3xkn, c6_c6xkn, cm_cmxkn_even,
                                   construct_c4_kmxkn, construct_c6_km_minus_factor_xkn,
                                   construct_c6_kmxkn, decide_c4_kmxkn,
                                   decide_c6_km_minus_factor_xkn, decide_c6_kmxkn,
                                   generic_necessary, lift_left_decomposition)
from tensorcycles.verify import canonicalize, cycle_edges, verify


def edges_of_km_x_kn(m, n):
    return m * n * (m - 1) * (n - 1) // 2


@pytest.mark.parametrize("m, n, ok, clause", [
    (5, 4, True, "T1.1-c1"),  # also satisfies clause 3; the earliest clause wins
    (5, 6, True, "T1.1-c3"),
    (3, 2, False, "T1.1-none"),
    (3, 4, True, "T1.1-c1"),
    (7, 6, False, "T1.1-none"),
    (4, 3, True, "T1.1-c2"),
    (5, 8, True, "T1.1-c1"),
])
def test_decide_c4(m, n, ok, clause):
    v = decide_c4_kmxkn(m, n)
    assert (v.decomposable, v.clause, v.k) == (ok, clause, 4)


def test_decide_c4_7_6_fails_divisibility():
    assert edges_of_km_x_kn(7, 6) % 4 != 0
    assert generic_necessary(Tensor(Complete(7), Complete(6)), 4).clause == "generic-divisibility"


@pytest.mark.parametrize("m, n, ok", [(7, 2, True), (5, 11, False), (3, 5, True), (2, 9, True)])
def test_decide_c6(m, n, ok):
    assert decide_c6_kmxkn(m, n).decomposable is ok


@pytest.mark.parametrize("m, n, ok", [(6, 3, True), (10, 4, False), (8, 2, True)])
def test_decide_c6_minus_factor(m, n, ok):
    assert decide_c6_km_minus_factor_xkn(m, n).decomposable is ok


@pytest.mark.parametrize("args", [(5, 3), (4, 3), (6, 1)])
def test_decide_c6_minus_factor_bad_order(args):
    with pytest.raises(BadOrder):
        decide_c6_km_minus_factor_xkn(*args)


@pytest.mark.parametrize("decider", [decide_c4_kmxkn, decide_c6_kmxkn])
def test_bad_orders(decider):
    with pytest.raises(BadOrder):
        decider(1, 4)


@pytest.mark.parametrize("family, k, ok, clause", [
    (Tensor(Complete(3), Complete(3)), 4, False, "generic-divisibility"),
    (Tensor(Complete(4), Complete(4)), 4, False, "generic-parity"),
    (Cycle(6), 6, True, "generic-necessary"),
])
def test_generic_necessary(family, k, ok, clause):
    v = generic_necessary(family, k)
    assert (v.decomposable, v.clause) == (ok, clause)


@pytest.mark.parametrize("m", range(2, 31))
def test_c4_condition_equals_necessary_conditions(m):
    # every even-regular K_m x K_n with 4 | |E| is 4-cycle decomposable
    for n in range(2, 31):
        fam = Tensor(Complete(m), Complete(n))
        degree_even = (m - 1) * (n - 1) % 2 == 0
        divisible = edges_of_km_x_kn(m, n) % 4 == 0
        assert decide_c4_kmxkn(m, n).decomposable == (degree_even and divisible)


def test_commutativity_of_deciders():
    for m in range(2, 25):
        for n in range(2, 25):
            assert bool(decide_c4_kmxkn(m, n)) == bool(decide_c4_kmxkn(n, m))
            assert bool(decide_c6_kmxkn(m, n)) == bool(decide_c6_kmxkn(n, m))


def test_decider_implies_generic_necessary():
    for m in range(2, 16):
        for n in range(2, 16):
            fam = Tensor(Complete(m), Complete(n))
            for k, decider in ((4, decide_c4_kmxkn), (6, decide_c6_kmxkn)):
                if decider(m, n):
                    assert generic_necessary(fam, k)


def test_c6_condition_is_not_necessary(fixtures_dir):
    # the stated condition rejects K_4 x K_5, yet a decomposition exists
    dec = formats.read_decomposition(fixtures_dir / "k4xk5_hexagons.json")
    assert dec.family == Tensor(Complete(4), Complete(5))
    assert verify(dec).valid and len(dec) == 20
    assert not decide_c6_kmxkn(4, 5)


# -- pieces ----------------------------------------------------------------

@pytest.mark.parametrize("n, cycles", [(4, 9), (5, 15), (8, 42), (9, 54), (12, 99), (13, 117)])
def test_c4_c3xkn(n, cycles):
    dec = c4_c3xkn(n)
    cert = verify(dec)
    assert cert.valid and len(dec) == cycles and cert.edge_count == 3 * n * (n - 1)


def test_c4_c3xk4_is_table():
    assert c4_c3xkn(4) == base.c4_table_c3xk4()


@pytest.mark.parametrize("n", [2, 3, 6, 7, 10])
def test_c4_c3xkn_not_applicable(n):
    with pytest.raises(NotApplicable):
        c4_c3xkn(n)


@pytest.mark.parametrize("n, cycles", [(2, 2), (3, 6), (5, 20)])
def test_c4_c4xkn(n, cycles):
    dec = c4_c4xkn(n)
    assert len(dec) == cycles and verify(dec).valid
    if n == 3:
        assert verify(dec).edge_count == 24


def test_c6_c3xk7_matches_listed_example(fixtures_dir):
    listed = formats.read_decomposition(fixtures_dir / "c3xk7_hexagons.json")
    assert c6_c3xkn(7) == canonicalize(listed)


@pytest.mark.parametrize("n, cycles, edges", [(2, 1, 6), (4, 6, 36), (7, 21, 126)])
def test_c6_c3xkn(n, cycles, edges):
    cert = verify(c6_c3xkn(n))
    assert cert.valid and (cert.cycle_count, cert.edge_count) == (cycles, edges)


def test_c6_c6xk2_is_the_split():
    dec = c6_c6xkn(2)
    assert dec.cycles == tuple(sorted(canonicalize(
        type(dec)(dec.family, 6, base.even_cycle_pair_split(6))).cycles))


@pytest.mark.parametrize("n, cycles", [(3, 6), (4, 12)])
def test_c6_c6xkn(n, cycles):
    cert = verify(c6_c6xkn(n))
    assert cert.valid and cert.cycle_count == cycles
    if n == 3:
        assert cert.edge_count == 36


def test_cm_cmxkn_even():
    assert cm_cmxkn_even(4, 3).cycles == c4_c4xkn(3).cycles
    dec = cm_cmxkn_even(8, 2)
    assert len(dec) == 2 and verify(dec).valid
    for m in (4, 6, 8, 10):
        for n in (2, 3, 5):
            assert verify(cm_cmxkn_even(m, n)).valid
    with pytest.raises(NotApplicable):
        cm_cmxkn_even(5, 3)


# -- lifting ---------------------------------------------------------------

def test_lift_steiner_k7():
    dec = lift_left_decomposition(base.steiner_triples(7), 4, {3: c4_c3xkn})
    cert = verify(dec)
    assert cert.valid and dec.family == Tensor(Complete(7), Complete(4))
    assert cert.cycle_count == 7 * 9


def test_lift_mixed_k5():
    mixed = base.mixed_triangles_quads(5)
    assert (mixed.p, mixed.q) == (2, 1)
    dec = lift_left_decomposition(mixed, 4, {3: c4_c3xkn, 4: c4_c4xkn})
    assert verify(dec).valid and len(dec) == 2 * 9 + 1 * 12


def test_lift_missing_piece():
    with pytest.raises(MissingPieceConstructor):
        lift_left_decomposition(base.mixed_triangles_quads(5), 4, {3: c4_c3xkn})


def test_lift_edges_are_distributive():
    # lifted pieces, cycle by cycle, are exactly (edges of C) x K_n
    left = base.steiner_triples(9)
    n = 5
    dec = lift_left_decomposition(left, n, {3: c6_c3xkn})
    piece_edges = set()
    for c in left.cycles:
        expected = materialize(Tensor(Cycle(3), Complete(n))).edges
        relabeled = {edge((c[a[0]], a[1]), (c[b[0]], b[1])) for a, b in expected}
        assert not piece_edges & relabeled
        piece_edges |= relabeled
    lifted = {e for cyc in dec.cycles for e in cycle_edges(cyc)}
    assert lifted == piece_edges == materialize(dec.family).edges


# -- main constructions ----------------------------------------------------

@pytest.mark.parametrize("m, n, cycles", [(5, 4, 30), (3, 4, 9), (9, 4, 108), (11, 4, 165),
                                          (4, 3, 9), (5, 9, 180), (9, 5, 180), (5, 2, 5)])
def test_construct_c4(m, n, cycles):
    dec = construct_c4_kmxkn(m, n)
    cert = verify(dec)
    assert cert.valid and cert.cycle_count == cycles
    assert cert.edge_count == edges_of_km_x_kn(m, n)


def test_construct_c4_9x4_edge_count():
    assert verify(construct_c4_kmxkn(9, 4)).edge_count == 432


def test_construct_c4_rejects():
    with pytest.raises(NotDecomposable):
        construct_c4_kmxkn(3, 2)


@pytest.mark.parametrize("m, n, cycles", [(3, 7, 21), (7, 5, 70), (4, 9, 72), (2, 3, 1)])
def test_construct_c6(m, n, cycles):
    dec = construct_c6_kmxkn(m, n)
    cert = verify(dec)
    assert cert.valid and cert.cycle_count == cycles


def test_construct_c6_3x7_equals_piece():
    dec = construct_c6_kmxkn(3, 7)
    assert verify(dec).edge_count == 126
    # K_3 has the single triangle (0, 1, 2), so the lift is the piece itself
    assert [tuple((r, c) for r, c in cyc) for cyc in dec.cycles] == list(c6_c3xkn(7).cycles)


def test_construct_c6_7x5_edges():
    assert verify(construct_c6_kmxkn(7, 5)).edge_count == 420


def test_construct_c6_rejects():
    with pytest.raises(NotDecomposable):
        construct_c6_kmxkn(5, 11)


@pytest.mark.parametrize("m, n, cycles, edges", [(6, 3, 12, 72), (8, 2, 8, 48), (12, 4, 120, 720)])
def test_construct_c6_minus_factor(m, n, cycles, edges):
    dec = construct_c6_km_minus_factor_xkn(m, n)
    cert = verify(dec)
    assert cert.valid and (cert.cycle_count, cert.edge_count) == (cycles, edges)
    assert dec.family == Tensor(CompleteMinusFactor(m), Complete(n))


def test_construct_c6_minus_factor_rejects():
    with pytest.raises(NotDecomposable):
        construct_c6_km_minus_factor_xkn(10, 3)


@pytest.mark.parametrize("k, decider, constructor",
                         [(4, decide_c4_kmxkn, construct_c4_kmxkn),
                          (6, decide_c6_kmxkn, construct_c6_kmxkn)])
def test_soundness_grid(k, decider, constructor):
    for m in range(2, 11):
        for n in range(2, 11):
            if decider(m, n):
                dec = constructor(m, n)
                cert = verify(dec)
                assert cert.valid, (m, n)
                assert cert.cycle_count * k == edges_of_km_x_kn(m, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 14), st.integers(2, 14), st.sampled_from([4, 6]))
def test_swapped_construction_verifies(m, n, k):
    decider, constructor = ((decide_c4_kmxkn, construct_c4_kmxkn) if k == 4
                            else (decide_c6_kmxkn, construct_c6_kmxkn))
    if not decider(m, n):
        return
    swapped = products.swap_factors(constructor(m, n))
    assert swapped.family == Tensor(Complete(n), Complete(m))
    assert verify(swapped).valid


# -- dispatch --------------------------------------------------------------

@pytest.mark.parametrize("spec, k, ok", [
    ("km-x-kn 5 4", 4, True), ("km-x-kn 5 11", 6, False),
    ("km-minus-i-x-kn 6 3", 6, True), ("c3-x-kn 5", 4, True), ("c3-x-kn 6", 4, False),
    ("c3-x-kn 2", 6, True), ("c4-x-kn 3", 4, True), ("c6-x-kn 4", 6, True),
    ("cm-x-kn 8 3", 8, True), ("cm-x-kn 5 2", 5, False), ("cm-x-kn 5 3", 5, True),
    ("km 7", 3, True), ("km 8", 3, False), ("km-minus-i 8", 3, True),
    ("ka-b 4 6", 4, True), ("ka-b 3 4", 4, False), ("knn-minus-i 9", 4, True),
    ("knn-minus-i 7", 4, False),
])
def test_decide_dispatch(spec, k, ok):
    assert products.decide(formats.parse_family(spec), k).decomposable is ok


def test_decide_falls_back_to_generic():
    v = products.decide(formats.parse_family("km-x-kn 5 4"), 8)
    assert v.clause.startswith("generic")


@pytest.mark.parametrize("spec, k", [
    ("km-x-kn 5 4", 4), ("km-x-kn 4 9", 6), ("km-minus-i-x-kn 8 3", 6), ("c3-x-kn 9", 4),
    ("c3-x-kn 5", 6), ("c4-x-kn 4", 4), ("c6-x-kn 3", 6), ("cm-x-kn 10 3", 10),
    ("km 13", 3), ("km-minus-i 12", 3), ("ka-b 4 6", 4), ("knn-minus-i 13", 4),
])
def test_construct_dispatch(spec, k):
    family = formats.parse_family(spec)
    dec = products.construct(family, k)
    assert dec.family == family and dec.k == k and verify(dec).valid


@pytest.mark.parametrize("spec, k, error", [
    ("km-x-kn 3 2", 4, NotDecomposable),
    ("cm-x-kn 5 3", 5, NotApplicable),
    ("km-x-kn 5 4", 8, NotApplicable),
])
def test_construct_dispatch_errors(spec, k, error):
    with pytest.raises(error):
        products.construct(formats.parse_family(spec), k)
