from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmmcert.seaweed import (MeanderGraph, Partition, SumMismatch, build_meander,
                             odd_partition_count, odd_partitions, parity_counts,
                             seaweed_index, verify_part2)
from cmmcert.series import expand_G

from oracles import odd_partitions_brute, seaweed_index_linear_algebra


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert str(Partition((5, 1))) == "{5,1}"
    assert Partition((3, 3, 1)).n == 7


def test_sum_mismatch():
    with pytest.raises(SumMismatch):
        build_meander(Partition((2, 1)), Partition((2,)))


@pytest.mark.parametrize("n", range(1, 51))
def test_gl_calibration(n):
    g = build_meander(Partition((n,)), Partition((n,)))
    assert seaweed_index(g) == n


def test_meander_of_five_one_against_six():
    g = build_meander(Partition((5, 1)), Partition((6,)))
    kinds = sorted(k for k, _ in g.components())
    assert seaweed_index(g) == 2 * kinds.count("cycle") + kinds.count("path")


def test_components_cover_vertices_once():
    g = build_meander(Partition((3, 3, 1)), Partition((7,)))
    seen = sorted(v for _, vs in g.components() for v in vs)
    assert seen == list(range(1, 8))


@pytest.mark.parametrize("n", range(1, 7))
def test_index_matches_linear_algebra_for_all_partition_pairs(n):
    for lam in partitions(n):
        for mu in partitions(n):
            got = seaweed_index(build_meander(Partition(lam), Partition(mu)))
            assert got == seaweed_index_linear_algebra(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", range(1, 25))
def test_odd_partitions_enumeration(n):
    ours = [p.parts for p in odd_partitions(n)]
    assert ours == list(odd_partitions_brute(n))
    assert len(ours) == odd_partition_count(n)


def test_odd_partitions_order_is_lexicographically_descending():
    ps = [p.parts for p in odd_partitions(9)]
    assert ps == sorted(ps, reverse=True)


def test_parity_counts_small():
    assert (parity_counts(6).e, parity_counts(6).o) == (1, 3)
    assert parity_counts(7).e + parity_counts(7).o == odd_partition_count(7)


def test_index_parity_matches_coefficients_to_60():
    rows = verify_part2(60)
    a = expand_G(60).coeffs
    assert [r.n for r in rows] == list(range(1, 61))
    assert all(r.match for r in rows)
    assert all(r.a == a[r.n] for r in rows)


def test_small_index_table():
    rows = verify_part2(7)
    assert [abs(r.e - r.o) for r in rows] == [1, 1, 0, 0, 1, 2, 1]


@given(st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.sampled_from(list(partitions(n)))))
def test_index_parity_equals_vertex_count_parity_for_paths(lam):
    # every path contributes 1, every cycle 2, so the index has the parity of #paths
    n = sum(lam)
    g = build_meander(Partition(lam), Partition((n,)))
    paths = sum(1 for k, _ in g.components() if k == "path")
    assert seaweed_index(g) % 2 == paths % 2
    assert isinstance(g, MeanderGraph)
