import pytest
from hypothesis import given, settings, strategies as st

from partineq import ClassParams, Partition, bounds
from partineq.errors import BoundNotMetError, DomainError, MembershipError, NotInRangeError
from partineq.injections import classify_s_frequency, eta_constants, eta_t3, eta_t3_recover, in_v_set
from partineq.injections.t3 import CASE_SET
from partineq.injections.trace import T3_CASES
from partineq.injections.verify import check_one
from t3_instances import PARAMS, partitions

SMALL = ClassParams(6, 1, (7,), "DV")


def test_case_1_example():
    image, tr = eta_t3(Partition({7: 11}), SMALL)
    assert image == Partition({1: 1, 2: 2, 3: 24})
    assert tr.case_label == "1" and tr.aux["psi"] == 12 and tr.aux["j"] == 0
    back = eta_t3_recover(image, SMALL)
    assert back.aux["m"] == (11,) and back.preimage == Partition({7: 11})


def test_case_2b_iii_a_example():
    c = ClassParams(30000, 1, (2,), "DV")
    k = eta_constants(c)
    assert (k.F, k.helpers["alpha"], k.u0) == (24336, 196, 1)
    p = Partition({24336: 1})
    image, tr = eta_t3(p, c)
    assert tr.case_label == "2b.iii.A" and tr.aux["psi"] == 1
    assert image.freq(1) == 116 and in_v_set(4, 116, 1, 1)
    assert image.weight == p.weight
    assert eta_t3_recover(image, c).preimage == p


def test_classify_examples():
    assert classify_s_frequency(116, 1, 1) == ("2b.iii.A", 1, None)
    assert classify_s_frequency(541, 1, 1) == ("2a", 5, 2)
    assert classify_s_frequency(1, 1, 1)[0] == "1"
    with pytest.raises(NotInRangeError):
        classify_s_frequency(7 * 39 - 1, 1, 1)


@pytest.mark.parametrize("c", PARAMS, ids=lambda c: f"s{c.s}t{c.t}")
def test_every_case_is_reached(c):
    seen = set()
    for case, p in partitions(c).items():
        image, trace, problems = check_one("T3", p, c)
        assert problems == [], (case, problems)
        assert trace.case_label == case
        assert in_v_set(CASE_SET[case], image.freq(c.s), c.s, c.t)
        seen.add(case)
    assert seen == set(T3_CASES)


def test_case_1_s_frequency_always_in_v1():
    for s, t in [(1, 1), (2, 1), (1, 2)]:
        A, B = bounds.A(s, t), bounds.B(s, t)
        for psi in list(range(A, A + 3 * B)) + [10 ** 9 + r for r in range(50)]:
            j = (psi - A) // (B - A)
            assert in_v_set(1, psi + A * (j - 1) + 1, s, t)


def test_errors():
    with pytest.raises(MembershipError):
        eta_t3(Partition({4: 2, 5: 1}), ClassParams(10, 1, (4, 5), "DV"))
    with pytest.raises(DomainError):
        eta_t3(Partition({2: 1}), ClassParams(4, 1, (2, 3), "DV"))
    with pytest.raises(BoundNotMetError):
        eta_t3(Partition({7: 1}), SMALL)
    with pytest.raises(NotInRangeError):
        eta_t3_recover(Partition({1: 7 * 39 - 1}), SMALL)


def test_trace_json():
    _, tr = eta_t3(Partition({7: 11}), SMALL)
    doc = tr.to_json()
    assert doc["case_label"] == "1" and doc["aux"]["psi"] == "12" and doc["aux"]["m"] == ["11"]


BIG = ClassParams(250000, 1, (7,), "DV")


@settings(max_examples=200, deadline=None)
@given(
    st.integers(0, 200),
    st.dictionaries(st.integers(2, 250001).filter(lambda h: h != 7), st.integers(1, 400), max_size=5),
)
def test_random_members(m, rest):
    p = Partition({7: m, **rest})
    if not p.pairs:
        return
    try:
        _, _, problems = check_one("T3", p, BIG)
    except BoundNotMetError:
        return
    assert problems == []
