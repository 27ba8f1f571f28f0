import pytest

from oracles import member, partitions_of
from partineq import ClassParams, Partition
from partineq.counting import count_series, enumerate_class, enumerate_two_colored, inequality_scan
from partineq.errors import DomainError, ResourceError, UnsupportedPredicateError

I3 = ClassParams(3, 1, (2, 3), "I")


def test_enumerate_examples():
    assert enumerate_class(I3, 5) == sorted([Partition({1: 5}), Partition({1: 1, 4: 1})])
    assert enumerate_class(ClassParams(3, 1, (), "D"), 5) == [Partition({2: 1, 3: 1})]
    assert enumerate_class(ClassParams(3, 1, (), "D"), 1) == []
    assert enumerate_class(ClassParams(4, 1, (2, 3), "DV"), 4) == [Partition({4: 1})]


def test_enumerate_guards():
    with pytest.raises(UnsupportedPredicateError):
        enumerate_class(ClassParams(3, 1, (2,), "P"), 5)
    with pytest.raises(ResourceError):
        enumerate_class(ClassParams(3, 1, (), "D"), 200, max_results=10)


def test_count_examples():
    assert count_series(I3, 40)[5] == 2
    assert count_series(ClassParams(3, 1, (), "D"), 40)[5] == 1
    assert count_series(ClassParams(4, 1, (2, 3), "DV"), 10)[4] == 1
    assert count_series(ClassParams(3, 1, (2, 3), "P"), 11).counts == (1, 0, 2, 2, 3, 4, 6, 6, 10, 10, 13, 16)


def test_count_at_weight_bound():
    # frozen from the full enumeration at the bound (8448 members)
    assert count_series(I3, 33792)[33792] == 8448
    assert len(enumerate_class(I3, 33792)) == 8448


@pytest.mark.parametrize("params", [(3, 1, (2, 3)), (4, 2, (4,)), (5, 1, (3, 6)), (4, 1, ())])
def test_counts_against_all_partitions(params):
    L, s, V = params
    for kind in ("I", "D", "DV", "E", "S"):
        if kind == "DV" and not V or kind == "E" and len(V) < 2:
            continue
        c = ClassParams(L, s, V, kind)
        counts = count_series(c, 22).counts
        for n in range(23):
            brute = sum(member(d, L, s, V, kind) for d in partitions_of(n))
            assert counts[n] == brute, (c, n)


def test_empty_partition_handling():
    for kind in ("I", "D", "DV", "E", "S"):
        assert count_series(ClassParams(4, 1, (2, 3), kind), 5)[0] == 0
    assert count_series(ClassParams(4, 1, (2, 3), "P"), 5)[0] == 1


def test_two_colored_enumerator():
    c = ClassParams(3, 1, (2, 3), "P")
    pairs = enumerate_two_colored(c, 4)
    assert len(pairs) == 3
    assert all(g.weight + r.weight == 4 for g, r in pairs)


def test_monotone_sanity():
    for V in [(2, 3), (3, 5), (2, 4)]:
        d = count_series(ClassParams(4, 1, V, "D"), 120).counts
        dv = count_series(ClassParams(4, 1, V, "DV"), 120).counts
        e = count_series(ClassParams(4, 1, V, "E"), 120).counts
        assert all(x <= y for x, y in zip(dv, d))
        assert all(x <= y for x, y in zip(e, d))


def test_e_needs_two_parts():
    with pytest.raises(DomainError):
        count_series(ClassParams(3, 1, (2,), "E"), 5)


def test_scan_examples():
    rep = inequality_scan(I3, ClassParams(3, 1, (2, 3), "D"), 40)
    assert rep.signs[5] == 1
    same = inequality_scan(I3, I3, 40)
    assert set(same.signs) == {0}
    doc = rep.to_json()
    assert len(doc["signs"]) == 41 and doc["last_negative"] == 40


def test_csv_export():
    text = count_series(I3, 40).to_csv()
    lines = text.splitlines()
    assert lines[0] == "n,count" and len(lines) == 42
    assert lines[6] == "5,2"
