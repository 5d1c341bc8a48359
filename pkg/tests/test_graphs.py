from collections import deque
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from tensorcycles.errors import BadColumn, InvalidFamily
from tensorcycles.graphs import (Complete, CompleteBipartite, CompleteBipartiteMinusFactor,
                                 CompleteMinusFactor, Cycle, Tensor, column_pair_subgraph,
                                 degree_profile, edge, materialize, swap_coordinates)


def brute_force_tensor_edges(left, right):
    """Test every vertex pair against the adjacency rule of the product."""
    le = {frozenset(e) for e in materialize(left).edges}
    re_ = {frozenset(e) for e in materialize(right).edges}
    verts = [(r, c) for r in left.vertices() for c in right.vertices()]
    return {edge(x, y) for x, y in combinations(verts, 2)
            if frozenset((x[0], y[0])) in le and frozenset((x[1], y[1])) in re_}


def components(edges):
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen, comps = set(), []
    for s in adj:
        if s in seen:
            continue
        comp, queue = set(), deque([s])
        while queue:
            x = queue.popleft()
            if x in comp:
                continue
            comp.add(x)
            queue.extend(adj[x] - comp)
        seen |= comp
        comps.append(comp)
    return comps


@pytest.mark.parametrize("family, count", [
    (Complete(4), 6),
    (Tensor(Complete(5), Complete(4)), 120),
    (Tensor(Cycle(3), Complete(4)), 36),
    (CompleteBipartiteMinusFactor(5), 20),
])
def test_materialize_counts(family, count):
    edges = materialize(family)
    assert len(edges) == count == family.edge_count()


def test_complete_minus_factor_removes_fixed_matching():
    edges = materialize(CompleteMinusFactor(6)).edges
    assert not {(0, 1), (2, 3), (4, 5)} & edges
    assert (1, 2) in edges and (0, 5) in edges


@pytest.mark.parametrize("bad", [
    lambda: CompleteMinusFactor(5),
    lambda: Complete(0),
    lambda: Cycle(2),
    lambda: CompleteBipartite(0, 3),
    lambda: Tensor(Complete(3), "K4"),
])
def test_invalid_families(bad):
    with pytest.raises(InvalidFamily):
        bad()


def test_materialize_rejects_non_family():
    with pytest.raises(InvalidFamily):
        materialize("K5")


def test_no_loops_and_canonical_edges():
    for fam in (Tensor(Complete(4), Complete(3)), CompleteBipartite(2, 3), Cycle(5)):
        for u, v in materialize(fam).edges:
            assert u < v


def test_column_pair_k3xk7_is_hexagon():
    sub = column_pair_subgraph(Tensor(Complete(3), Complete(7)), 0, 1)
    assert len(sub) == 6
    assert degree_profile(sub) == {2: 6}
    assert len(components(sub.edges)) == 1


def test_column_pair_c4xk3_is_two_squares():
    sub = column_pair_subgraph(Tensor(Cycle(4), Complete(3)), 0, 1)
    assert len(sub) == 8
    comps = components(sub.edges)
    assert sorted(len(c) for c in comps) == [4, 4]
    assert degree_profile(sub) == {2: 8}


def test_column_pair_odd_cycle_is_one_long_cycle():
    sub = column_pair_subgraph(Tensor(Cycle(5), Complete(3)), 1, 2)
    assert len(sub) == 10 and len(components(sub.edges)) == 1


def test_column_pair_complete_left_is_kmm_minus_i():
    sub = column_pair_subgraph(Tensor(Complete(5), Complete(4)), 1, 3)
    expected = {edge((x, 1), (y, 3)) for x in range(5) for y in range(5) if x != y}
    assert sub.edges == expected


@pytest.mark.parametrize("j, j2", [(0, 0), (2, 2), (0, 7), (-1, 1)])
def test_column_pair_bad_columns(j, j2):
    with pytest.raises(BadColumn):
        column_pair_subgraph(Tensor(Complete(3), Complete(7)), j, j2)


@pytest.mark.parametrize("family, profile", [
    (Tensor(Complete(5), Complete(4)), {12: 20}),
    (CompleteMinusFactor(6), {4: 6}),
    (Cycle(6), {2: 6}),
    (CompleteBipartite(2, 3), {2: 3, 3: 2}),
])
def test_degree_profile(family, profile):
    assert degree_profile(materialize(family)) == profile


small_families = st.one_of(
    st.builds(Complete, st.integers(1, 6)),
    st.builds(CompleteMinusFactor, st.sampled_from([2, 4, 6])),
    st.builds(CompleteBipartite, st.integers(1, 4), st.integers(1, 4)),
    st.builds(CompleteBipartiteMinusFactor, st.integers(1, 5)),
    st.builds(Cycle, st.integers(3, 7)),
)


@settings(max_examples=60, deadline=None)
@given(small_families, small_families)
def test_tensor_matches_brute_force(left, right):
    fam = Tensor(left, right)
    edges = materialize(fam).edges
    assert edges == brute_force_tensor_edges(left, right)
    assert len(edges) == 2 * left.edge_count() * right.edge_count()


@settings(max_examples=40, deadline=None)
@given(small_families, small_families)
def test_tensor_swap_is_edge_bijection(left, right):
    ab = materialize(Tensor(left, right)).edges
    ba = materialize(Tensor(right, left)).edges
    swapped = {edge(swap_coordinates(u), swap_coordinates(v)) for u, v in ab}
    assert swapped == ba


@pytest.mark.parametrize("left", [Complete(5), Cycle(4), Cycle(5), CompleteMinusFactor(6)])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_column_pairs_partition_product(left, n):
    fam = Tensor(left, Complete(n))
    seen = []
    for j, j2 in combinations(range(n), 2):
        seen.extend(column_pair_subgraph(fam, j, j2).edges)
    assert len(seen) == len(set(seen))
    assert set(seen) == materialize(fam).edges
