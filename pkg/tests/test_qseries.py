import pytest
from hypothesis import given, strategies as st

from partineq import ClassParams
from partineq import qseries as qs
from partineq.counting import count_series
from partineq.errors import DomainError

coeffs = st.lists(st.integers(-50, 50), min_size=13, max_size=13)


def test_basic_arithmetic():
    a = qs.from_coeffs([1, 2, 3, 4], 6)
    assert qs.one(6) * a == a
    geo = qs.inv_pochhammer(1, 1, 8)
    assert (qs.one_minus_q_product([1], 8) * geo).coeff == qs.one(8).coeff
    assert qs.sub(a, a) == qs.zero(6)
    with pytest.raises(DomainError):
        qs.mul(qs.one(3), qs.one(4))


@given(coeffs, coeffs)
def test_mul_commutes(a, b):
    x, y = qs.from_coeffs(a, 12), qs.from_coeffs(b, 12)
    assert x * y == y * x


def test_pochhammer_examples():
    assert set(qs.inv_pochhammer(1, 1, 20).coeff) == {1}
    assert qs.inv_pochhammer(2, 3, 5)[5] == 1
    assert qs.inv_pochhammer(7, 2, 5)[0] == 1


def test_power_freq_examples():
    nz = lambda x: [n for n, c in enumerate(x.coeff) if c]
    assert nz(qs.power_freq_series(2, 2, 10)) == [0, 2, 8]
    assert set(qs.power_freq_series(1, 1, 10).coeff) == {1}
    assert nz(qs.power_freq_series(3, 3, 30)) == [0, 3, 24]


def test_h_examples():
    h = qs.h_series(3, 1, (2, 3), 40)
    assert h[5] == 1
    assert h[0] == 0
    assert qs.h_series(5, 2, (4,), 10)[0] == 0


def test_series_identities_small_grid():
    for L, s, V in [(3, 1, (2, 3)), (4, 2, (3, 6)), (5, 1, (4,))]:
        nmax = 120
        cnt = {k: count_series(ClassParams(L, s, V, k), nmax).counts for k in ("I", "D", "DV", "S", "P")}
        h, hp, hpp = (f(L, s, V, nmax) for f in (qs.h_series, qs.hprime_series, qs.hdoubleprime_series))
        for n in range(1, nmax + 1):
            assert h[n] == cnt["I"][n] - cnt["D"][n]
            assert hp[n] == cnt["I"][n] - cnt["DV"][n]
            assert hpp[n] == cnt["S"][n] - cnt["P"][n]
        assert hp == hpp * qs.one_minus_q_product(V, nmax)


def test_sign_scan():
    z = qs.sign_scan(qs.zero(10))
    assert z.last_negative is None and z.last_positive is None and z.terminal_sign is None
    ones = qs.sign_scan(qs.inv_pochhammer(1, 1, 10))
    assert ones.last_negative is None and ones.terminal_sign == 1 and ones.nonnegative_from == 0
    x = qs.from_coeffs([0, 1, -1, 0, -2, 0], 5)
    r = qs.sign_scan(x)
    assert (r.last_positive, r.last_negative, r.terminal_sign, r.nonpositive_from) == (1, 4, -1, 2)
    with pytest.raises(DomainError):
        qs.sign_scan(x, start=9)


def test_csv():
    lines = qs.h_series(3, 1, (2, 3), 5).to_csv().splitlines()
    assert lines[0] == "n,coeff" and lines[-1] == "5,1"
