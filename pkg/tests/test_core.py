import pytest
from hypothesis import given, strategies as st

from tripart.core import (
    COORD_LIMIT,
    Cell,
    Partition,
    PartitionError,
    bounding_partition,
    classify_wide_tall,
    complementary_corner_cells,
    conjugate,
    contains,
    corner_cells,
    format_partition,
    parse_partition,
    partitions_of,
    staircase,
)

parts = st.lists(st.integers(1, 30), max_size=12).map(lambda v: Partition(sorted(v, reverse=True)))


def test_parse_comma_list():
    assert parse_partition("8,6,5,3,1") == (8, 6, 5, 3, 1)


def test_parse_powers_and_whitespace():
    p = parse_partition(" 5^3, 2 ,1^2 ")
    assert p == (5, 5, 5, 2, 1, 1)


def test_parse_empty_is_empty_partition():
    assert parse_partition("") == ()


def test_bare_digit_string_is_one_part():
    assert parse_partition("86531") == (86531,)


@pytest.mark.parametrize("text", ["0", "3,0", "2^0", "a", "3,,1", "1,2", f"{COORD_LIMIT}"])
def test_parse_rejects(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


def test_format_uses_powers_for_long_runs():
    assert format_partition(parse_partition("5^576,4^3")) == "5^576,4,4,4"


@given(parts)
def test_format_parse_round_trip(p):
    assert parse_partition(format_partition(p)) == p


@given(parts)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


def test_size_height_width():
    p = Partition([8, 6, 5, 3, 1])
    assert (p.size, p.height, p.width) == (23, 5, 8)


def test_corner_cells_include_anchors():
    assert corner_cells(Partition([2, 2, 1])) == [(1, 1), (2, 1), (2, 2), (1, 3)]


def test_complementary_corner_cells():
    cc = complementary_corner_cells(Partition([8, 6, 5, 3, 1]))
    assert cc[0] == (9, 6)
    assert cc[1:] == [(9, 1), (7, 2), (6, 3), (4, 4), (2, 5), (1, 6)]
    assert complementary_corner_cells(Partition()) == [(1, 1)]


def test_remove_and_add_cells():
    p = Partition([3, 3, 1])
    assert p.remove_cell((3, 2)) == (3, 2, 1)
    with pytest.raises(PartitionError):
        p.remove_cell((3, 1))
    assert p.add_cell((1, 4)) == (3, 3, 1, 1)
    assert p.add_cell((2, 3)) == (3, 3, 2)
    with pytest.raises(PartitionError):
        p.add_cell((3, 3))


def test_contains():
    assert contains(Partition([3, 2]), Partition([2, 2]))
    assert not contains(Partition([3, 2]), Partition([1, 1, 1]))


def test_staircase_and_bounding():
    assert staircase(3) == (3, 2, 1)
    assert bounding_partition(5, 8) == (8, 7, 5, 4, 2)


def test_classify_wide_tall():
    assert classify_wide_tall(Partition([3, 2, 1])) == {"wide": True, "tall": True}
    assert classify_wide_tall(Partition([4, 2])) == {"wide": True, "tall": False}


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_cell_repr():
    assert repr(Cell(3, 4)) == "(3,4)"
