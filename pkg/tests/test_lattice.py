import itertools

import pytest

from oracles import triangular_up_to
from tripart.core import NotTriangularError, Partition, contains, partitions_of, staircase
from tripart.lattice import (
    MemoBudgetExceeded,
    count_subpartitions,
    covers_down,
    covers_up,
    diagonal,
    interior,
    interval,
    join,
    meet,
    mobius,
    mobius_reference,
    tyt_count_brute,
    tyt_count_two_row,
    tyt_enumerate,
)

P = Partition
E = P()


def test_covers_down_examples():
    assert covers_down(P([1])) == [E]
    assert sorted(covers_down(P([2, 1]))) == [P([1, 1]), P([2])]
    assert covers_down(P([6, 5, 4, 2, 1])) == [P([6, 5, 3, 2, 1])]
    assert covers_down(E) == []


def test_covers_up_examples():
    assert covers_up(E) == [P([1])]
    assert sorted(covers_up(P([1]))) == [P([1, 1]), P([2])]
    assert sorted(covers_up(P([7, 5, 4, 2, 1]))) == [P([7, 5, 4, 3, 1]), P([7, 6, 4, 2, 1])]


def test_join_worked_example():
    assert join(P([8, 6, 5, 3, 1]), P([4, 3, 3, 3, 2, 2, 1, 1, 1])) == P([8, 7, 6, 5, 4, 3, 2, 1, 1])


def test_meet_examples():
    p = P([8, 6, 5, 3, 1])
    assert meet(p, p) == p
    assert meet(p, E) == E
    assert meet(P([2]), P([1, 1])) == P([1])


def test_join_identity_and_idempotence():
    p = P([8, 6, 5, 3, 1])
    assert join(p, E) == p and join(p, p) == p


def test_mobius_examples():
    assert mobius(P([2, 1]), P([2, 1])) == 1
    assert mobius(P([1]), P([2, 1])) == 1
    assert mobius(E, P([2, 1])) == 0
    assert mobius_reference(E, P([1])) == -1
    assert mobius_reference(P([1]), P([2, 1])) == 1
    assert mobius_reference(E, P([3, 1])) == 0


def test_mobius_requires_containment():
    with pytest.raises(ValueError):
        mobius(P([2]), P([1, 1]))


def test_reference_guard():
    with pytest.raises(ValueError):
        mobius_reference(E, staircase(7))


def test_diagonal_and_interior():
    assert diagonal(P([1])) == [(1, 1)]
    assert diagonal(P([2, 1])) == [(1, 2), (2, 1)]
    assert diagonal(P([6, 5, 3, 2, 1])) == [(1, 5), (5, 2)]
    assert diagonal(P([3, 2, 1])) == [(1, 3), (2, 2), (3, 1)]
    assert interior(P([1])) == E
    assert interior(P([2, 1])) == P([1])
    assert interior(P([3, 1])) == P([2])


def test_subpartition_counts():
    assert count_subpartitions(E) == 1
    assert count_subpartitions(staircase(2)) == 5
    assert count_subpartitions(staircase(6)) == 83


def test_memo_cap_overflow_is_an_error():
    with pytest.raises(MemoBudgetExceeded):
        count_subpartitions(staircase(6), memo_cap=5)


def test_two_row_tableaux():
    assert tyt_count_two_row(2, 1) == 2
    assert tyt_count_two_row(3, 1) == 3
    assert tyt_count_two_row(5, 2) == 12
    with pytest.raises(NotTriangularError):
        tyt_count_two_row(3, 3)


def test_tableau_of_531_is_enumerated():
    shape = P([5, 3, 1])
    tabs = list(tyt_enumerate(shape))
    assert len(tabs) == tyt_count_brute(shape) >= 1
    for t in tabs:
        assert sorted(t.values()) == list(range(1, 10))


def test_not_triangular_inputs_rejected():
    with pytest.raises(NotTriangularError):
        join(P([8, 6, 3, 3, 1]), E)
    with pytest.raises(NotTriangularError):
        covers_up(P([8, 6, 3, 3, 1]))


def test_lattice_laws_small():
    tri = [p for p in triangular_up_to(7)]
    for p, q in itertools.product(tri, repeat=2):
        j, m = join(p, q), meet(p, q)
        assert j == join(q, p) and m == meet(q, p)
        assert join(p, meet(p, q)) == p and meet(p, join(p, q)) == p
        assert contains(j, p) and contains(j, q) and contains(p, m) and contains(q, m)
    for p, q, r in itertools.product(tri[:20], repeat=3):
        assert join(join(p, q), r) == join(p, join(q, r))
        assert meet(meet(p, q), r) == meet(p, meet(q, r))


def test_mobius_sums_to_zero():
    tri = triangular_up_to(9)
    for q in tri:
        for p in tri:
            if p != q and contains(q, p):
                assert sum(mobius(p, r) for r in interval(p, q)) == 0


def test_interior_polygon():
    for q in triangular_up_to(12):
        if not q:
            continue
        d = diagonal(q)
        inner = interior(q)
        if len(d) >= 2:
            assert len(interval(inner, q)) == 2 * len(d)


def test_join_irreducibility():
    tri = [p for p in triangular_up_to(10) if p]
    for p in tri:
        smaller = [q for q in tri if q != p and contains(p, q)]
        reducible = any(join(a, b) == p for a, b in itertools.combinations(smaller, 2))
        assert (len(covers_down(p)) == 1) == (not reducible), p


def test_subpartitions_match_enumeration():
    tri = triangular_up_to(14)
    for p in tri:
        assert count_subpartitions(p) == sum(1 for q in tri if contains(p, q))
