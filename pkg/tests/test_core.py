import pytest
from hypothesis import given, strategies as st

from uglov import (
    Charge,
    Multipartition,
    Node,
    Partition,
    multipartition_sum,
    multipartitions_of,
    partitions_of,
)

from oracles import accel_asc, all_multipartitions, brute_addable, brute_removable

partition_rows = st.lists(st.integers(min_value=1, max_value=9), max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)
small_mp = st.lists(partition_rows, min_size=1, max_size=3).map(Multipartition)


def test_partition_validation():
    assert Partition((3, 1)) == (3, 1)
    assert Partition() == ()
    assert Partition((4, 4, 2)).rank == 10
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        Partition((2.5, 1))


def test_partition_strips_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition((0, 0)) == ()


def test_partition_part_is_one_based_and_padded():
    p = Partition((5, 3, 1))
    assert [p.part(i) for i in range(1, 6)] == [5, 3, 1, 0, 0]
    with pytest.raises(IndexError):
        p.part(0)


def test_partition_display_roundtrip():
    for p in [Partition(), Partition((5, 3, 1)), Partition((1, 1, 1))]:
        assert Partition.from_display(p.display()) == p
    assert Partition((5, 3, 1)).display() == "5.3.1"
    assert Partition().display() == "-"


def test_multipartition_basics():
    mp = Multipartition(((4,), (2, 1)))
    assert mp.level == 2
    assert mp.rank == 7
    assert mp.component(2) == (2, 1)
    assert mp.part(2, 1) == 2
    assert mp.part(1, 3) == 0
    assert Multipartition.empty(3) == Multipartition(((), (), ()))
    with pytest.raises(ValueError):
        Multipartition(())


def test_multipartition_display_roundtrip():
    mp = Multipartition(((5, 5, 3), (), (1,)))
    assert mp.display() == "5.5.3|-|1"
    assert Multipartition.from_display("5.5.3|-|1") == mp
    assert Multipartition.from_display("-").level == 1


def test_add_remove_node():
    mp = Multipartition(((4,), (2, 1)))
    grown = mp.add_node(Node(2, 1, 1))
    assert grown == Multipartition(((4, 1), (2, 1)))
    assert grown.remove_node(Node(2, 1, 1)) == mp
    with pytest.raises(ValueError):
        mp.add_node(Node(3, 1, 1))
    with pytest.raises(ValueError):
        mp.remove_node(Node(1, 4, 2))
    with pytest.raises(IndexError):
        mp.add_node(Node(1, 1, 5))


@given(small_mp)
def test_addable_nodes_match_brute_force(mp):
    assert sorted(mp.addable_nodes()) == brute_addable(mp)


@given(small_mp)
def test_removable_nodes_match_brute_force(mp):
    assert sorted(mp.removable_nodes()) == brute_removable(mp)


@given(small_mp)
def test_nodes_count_equals_rank(mp):
    nodes = list(mp.nodes())
    assert len(nodes) == mp.rank
    assert all(mp.contains(n) for n in nodes)


def test_charge_residue_and_content():
    c = Charge((2, 0), 4)
    assert c.shifted_content(Node(1, 4, 1)) == 3 + 2
    assert c.residue(Node(1, 4, 1)) == 1
    assert c.residue(Node(3, 1, 2)) == 2
    assert c.level == 2
    with pytest.raises(ValueError):
        Charge((0,), 1)
    with pytest.raises(ValueError):
        c.residue(Node(1, 1, 3))


def test_multipartition_sum():
    a = Multipartition(((3,), (1, 1)))
    b = Multipartition(((2, 2), ()))
    assert multipartition_sum(a, b) == Multipartition(((5, 2), (1, 1)))
    with pytest.raises(ValueError):
        multipartition_sum(a, Multipartition(((1,),)))


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (4, 5), (8, 22), (10, 42)])
def test_partitions_of_counts(n, count):
    got = list(partitions_of(n))
    assert len(got) == count
    assert len(set(got)) == count
    assert set(got) == set(accel_asc(n))


@pytest.mark.parametrize("n,level", [(0, 2), (3, 2), (4, 3), (5, 1)])
def test_multipartitions_of_matches_oracle(n, level):
    got = {tuple(tuple(p) for p in mp) for mp in multipartitions_of(n, level)}
    want = set(all_multipartitions(n, level))
    assert got == want


def test_partitions_of_respects_max_part():
    assert set(partitions_of(5, max_part=2)) == {(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)}
