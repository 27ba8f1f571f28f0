from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import cns_formula, shell_order
from partineq import pairing as pr
from partineq.errors import DomainError


def test_cantor_examples():
    assert pr.cantor_pair(1, 1) == 1
    assert pr.cantor_pair(1, 2) == 2
    assert pr.cantor_pair(2, 1) == 3
    assert pr.cantor_unpair(1) == (1, 1)
    assert pr.cantor_unpair(3) == (2, 1)
    assert pr.cantor_unpair(15) == (5, 1)


def test_cantor_is_onto_first_integers():
    seen = {pr.cantor_pair(m, n) for m in range(1, 150) for n in range(1, 150) if m + n <= 150}
    assert set(range(1, 10 ** 4 + 1)) <= seen
    for v in range(1, 10 ** 4 + 1):
        assert pr.cantor_pair(*pr.cantor_unpair(v)) == v


def test_spiral_examples_and_roundtrip():
    assert pr.spiral_pair(1, 1) == 1
    assert pr.spiral_pair(2, 2) == 4
    assert pr.spiral_pair(1, 2) == 3
    for v in range(1, 10 ** 4 + 1):
        m, n = pr.spiral_unpair(v)
        assert pr.spiral_pair(m, n) == v
        assert (max(m, n) - 1) ** 2 < v <= max(m, n) ** 2


@pytest.mark.parametrize("fn", [pr.cantor_pair, pr.spiral_pair])
def test_pair_domain(fn):
    with pytest.raises(DomainError):
        fn(0, 1)


def test_cns_examples():
    assert pr.cns_rank((1, 1)) == 2
    assert pr.cns_rank((2, 1)) == 5
    assert pr.cns_rank((1, 2)) == 4
    assert pr.cns_unrank(2, 2) == (1, 1)
    assert pr.cns_unrank(5, 2) == (2, 1)
    assert pr.cns_unrank(3, 2) is None


def test_cns_rejects_zero_entries():
    # the bare formula collides here, which is why zeros are refused
    assert cns_formula((1, 0)) == cns_formula((0, 2)) == 1
    for m in [(1, 0), (0, 2)]:
        with pytest.raises(DomainError):
            pr.cns_rank(m)


def _compositions(total, t):
    if t == 1:
        yield (total,)
        return
    for first in range(1, total - t + 2):
        for rest in _compositions(total - first, t - 1):
            yield (first,) + rest


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_cns_injective_up_to_sum_24(t):
    seen = {}
    for total in range(t, 25):
        for m in _compositions(total, t):
            v = pr.cns_rank(m)
            assert v == cns_formula(m)
            assert v not in seen, (m, seen.get(v))
            seen[v] = m
            assert pr.cns_unrank(v, t) == m


def test_cns_image_gaps():
    assert [v for v in range(1, 21) if pr.cns_unrank(v, 2) is None] == [1, 3, 6, 10, 15]
    assert [v for v in range(1, 31) if pr.cns_unrank(v, 3) is None] == [1, 2, 4, 5, 7, 10, 11, 13, 16, 20, 21, 23, 26, 30]


def test_psi0_examples():
    assert pr.psi0_rank((1, 1)) == 1
    assert [pr.psi0_rank(m) for m in [(1, 2), (2, 1), (2, 2)]] == [2, 3, 4]
    assert pr.psi0_rank((7,)) == 7
    assert pr.psi_rank((0, 0)) == 1
    assert pr.psi_rank((1, 1)) == 4
    assert pr.psi_rank((11,)) == 12


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_psi0_matches_shell_order(t):
    h_max = 8 if t < 4 else 5
    for rank, m in enumerate(shell_order(t, h_max), start=1):
        assert pr.psi0_rank(m) == rank
        assert pr.psi0_unrank(rank, t) == m


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_psi0_box_roundtrip_and_shell_bound(t):
    for m in product(range(1, 9), repeat=t):
        v = pr.psi0_rank(m)
        h = max(m)
        assert (h - 1) ** t < v <= h ** t
        assert pr.psi0_unrank(v, t) == m


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_psi_box_roundtrip_and_shifted_shell_bound(t):
    for m in product(range(0, 8), repeat=t):
        v = pr.psi_rank(m)
        h = max(m)
        assert h ** t < v <= (h + 1) ** t
        assert v == pr.psi0_rank(tuple(x + 1 for x in m))
        assert pr.psi_unrank(v, t) == m


@given(st.lists(st.integers(0, 10 ** 12), min_size=1, max_size=6))
def test_psi_roundtrip_large(m):
    m = tuple(m)
    assert pr.psi_unrank(pr.psi_rank(m), len(m)) == m


@given(st.lists(st.integers(1, 10 ** 9), min_size=1, max_size=6))
def test_cns_roundtrip_large(m):
    m = tuple(m)
    assert pr.cns_unrank(pr.cns_rank(m), len(m)) == m
