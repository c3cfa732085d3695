from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from src.combinat.lattice import (
    NcInterval,
    interval_elements,
    moebius_nc,
    moebius_partition_lattice,
    nc_join,
    nc_meet,
)
from src.combinat.partitions import (
    SetPartition,
    bell,
    catalan,
    enumerate_all_partitions,
    enumerate_nc,
    integer_partitions,
    is_noncrossing,
    iter_nc,
    refines,
)
from src.combinat.permutations import (
    Permutation,
    cayley_distance,
    is_geodesic,
    nc_to_permutation,
    permutation_to_nc,
)
from src.errors import SizeLimitError, UsageError

P = SetPartition.parse


def test_canonical_form_is_unique():
    assert SetPartition(4, ((4, 2), (3, 1))) == P("1,3/2,4")
    assert str(SetPartition(4, ((4, 2), (3, 1)))) == "1,3/2,4"
    with pytest.raises(UsageError):
        SetPartition(3, ((1, 2), (2, 3)))
    with pytest.raises(UsageError):
        SetPartition(3, ((1, 2),))


@pytest.mark.parametrize("text,expected", [("1,3/2,4", False), ("1,2/3,4", True), ("1,4/2,3", True), ("1,3/2/4", True)])
def test_is_noncrossing(text, expected):
    assert is_noncrossing(P(text)) is expected


def test_small_enumerations():
    assert [str(p) for p in enumerate_nc(1)] == ["1"]
    assert [str(p) for p in enumerate_nc(3)] == ["1,2,3", "1,2/3", "1,3/2", "1/2,3", "1/2/3"]
    nc4 = enumerate_nc(4)
    all4 = enumerate_all_partitions(4)
    assert len(nc4) == 14 and len(all4) == 15
    assert [p for p in all4 if p not in nc4] == [P("1,3/2,4")]
    assert [len(enumerate_all_partitions(n)) for n in (2, 3)] == [2, 5]


def test_catalan_counts_up_to_twelve():
    for n in range(1, 13):
        assert sum(1 for _ in iter_nc(n)) == catalan(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_nc_equals_filtered_partitions(n):
    everything = enumerate_all_partitions(n)
    assert len(everything) == bell(n)
    assert enumerate_nc(n) == [p for p in everything if is_noncrossing(p)]
    assert len(set(everything)) == len(everything)


def test_caps():
    with pytest.raises(SizeLimitError):
        enumerate_nc(15)
    with pytest.raises(SizeLimitError):
        enumerate_all_partitions(13)
    with pytest.raises(SizeLimitError):
        enumerate_nc(6, cap=5)
    with pytest.raises(UsageError):
        enumerate_nc(0)


def test_cap_from_env(monkeypatch):
    monkeypatch.setenv("FREECALC_NC_CAP", "4")
    with pytest.raises(SizeLimitError):
        enumerate_nc(5)


def test_refines():
    assert refines(SetPartition.singletons(4), P("1,3/2,4"))
    assert refines(P("1,3/2,4"), SetPartition.one_block(4))
    assert not refines(P("1,2/3"), P("1,3/2"))
    with pytest.raises(UsageError):
        refines(P("1/2"), P("1/2/3"))


def test_meet_and_join_examples():
    p = P("1,3/2/4")
    assert nc_meet(p, p) == p and nc_join(p, p) == p
    assert nc_join(P("1,3/2/4"), P("1/2,4/3")) == SetPartition.one_block(4)
    assert nc_meet(P("1,2,3"), P("1,2/3")) == P("1,2/3")
    with pytest.raises(UsageError):
        nc_join(P("1,3/2,4"), p)


def _brute_join(p, q, universe):
    uppers = [r for r in universe if refines(p, r) and refines(q, r)]
    return [r for r in uppers if all(refines(r, s) for s in uppers)]


@pytest.mark.parametrize("n", [4, 5])
def test_join_is_least_noncrossing_upper_bound(n):
    nc = enumerate_nc(n)
    for p, q in itertools.product(nc, repeat=2):
        assert [nc_join(p, q)] == _brute_join(p, q, nc)


@pytest.mark.parametrize("n", [*range(1, 6), pytest.param(6, marks=pytest.mark.slow)])
def test_lattice_axioms(n):
    nc = enumerate_nc(n)
    index = {p: i for i, p in enumerate(nc)}
    size = len(nc)
    join = [[index[nc_join(p, q)] for q in nc] for p in nc]
    meet = [[index[nc_meet(p, q)] for q in nc] for p in nc]
    for i, j in itertools.product(range(size), repeat=2):
        assert join[i][j] == join[j][i]
        assert meet[i][j] == meet[j][i]
        assert meet[i][join[i][j]] == i
        assert join[i][meet[i][j]] == i
    for i, j, k in itertools.product(range(size), repeat=3):
        assert join[join[i][j]][k] == join[i][join[j][k]]
        assert meet[meet[i][j]][k] == meet[i][meet[j][k]]


def test_moebius_anchor_values():
    assert moebius_nc(NcInterval(P("1,2"), P("1,2"))) == 1
    assert moebius_nc(NcInterval(SetPartition.singletons(2), SetPartition.one_block(2))) == -1
    assert moebius_nc(NcInterval(SetPartition.singletons(3), SetPartition.one_block(3))) == 2
    with pytest.raises(UsageError):
        NcInterval(P("1,2/3"), P("1,3/2"))


@pytest.mark.parametrize("n", range(1, 9))
def test_moebius_closed_form(n):
    value = moebius_nc(NcInterval(SetPartition.singletons(n), SetPartition.one_block(n)))
    assert value == (-1) ** (n - 1) * catalan(n - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_moebius_recursion_sums_to_delta(n):
    nc = enumerate_nc(n)
    for lower, upper in itertools.product(nc, repeat=2):
        if not refines(lower, upper):
            continue
        interval = NcInterval(lower, upper)
        total = sum(moebius_nc(NcInterval(lower, rho)) for rho in interval_elements(interval))
        assert total == (1 if lower == upper else 0)


def test_interval_elements():
    top = SetPartition.one_block(4)
    assert len(interval_elements(NcInterval(SetPartition.singletons(4), top))) == 14
    assert interval_elements(NcInterval(top, top)) == [top]
    assert sorted(map(str, interval_elements(NcInterval(P("1,2/3/4"), P("1,2,3/4"))))) == ["1,2,3/4", "1,2/3/4"]


def test_partition_lattice_moebius():
    for b in range(1, 9):
        assert moebius_partition_lattice(b) == (-1) ** (b - 1) * math.factorial(b - 1)


def test_bell_and_integer_partitions():
    assert [bell(n) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(integer_partitions(0)) == [()]


def test_nc_to_permutation_examples():
    assert nc_to_permutation(SetPartition.singletons(4)) == Permutation.identity(4)
    assert nc_to_permutation(SetPartition.one_block(5)) == Permutation.long_cycle(5)
    assert str(nc_to_permutation(P("1,3/2/4"))) == "3,2,1,4"
    with pytest.raises(UsageError):
        nc_to_permutation(P("1,3/2,4"))


def test_permutation_to_nc_examples():
    assert permutation_to_nc(Permutation.identity(4)) == SetPartition.singletons(4)
    assert permutation_to_nc(Permutation.from_cycles(4, [(1, 3), (2, 4)])) is None
    assert permutation_to_nc(Permutation.parse("3,2,1,4")) == P("1,3/2/4")


@pytest.mark.parametrize("n", [*range(1, 8), pytest.param(8, marks=pytest.mark.slow)])
def test_geodesic_bijection(n):
    images = {nc_to_permutation(p) for p in enumerate_nc(n)}
    geodesics = {Permutation(n, perm) for perm in itertools.permutations(range(1, n + 1))
                 if is_geodesic(Permutation(n, perm))}
    assert images == geodesics
    for p in enumerate_nc(n):
        assert permutation_to_nc(nc_to_permutation(p)) == p


def test_composition_convention():
    s = Permutation.from_cycles(3, [(1, 2)])
    t = Permutation.from_cycles(3, [(2, 3)])
    assert (s * t)(2) == s(t(2)) == 3
    assert s * s.inverse() == Permutation.identity(3)


def test_cayley_distance_examples():
    c = Permutation.long_cycle(5)
    tau = Permutation.from_cycles(5, [(2, 4)])
    e = Permutation.identity(5)
    assert cayley_distance(c, c) == 0
    assert cayley_distance(e, tau) == 1
    assert cayley_distance(e, c) == 4


@pytest.mark.parametrize("n", range(1, 6))
def test_cayley_distance_is_a_metric(n):
    perms = [Permutation(n, p) for p in itertools.permutations(range(1, n + 1))]
    dist = np.array([[cayley_distance(a, b) for b in perms] for a in perms])
    assert np.array_equal(dist, dist.T)
    assert np.array_equal(dist == 0, np.eye(len(perms), dtype=bool))
    # dist[a, b] <= dist[a, x] + dist[x, b] for every x
    for x in range(len(perms)):
        assert np.all(dist <= dist[:, x:x + 1] + dist[x:x + 1, :])
