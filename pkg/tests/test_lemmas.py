import numpy as np

from partineq import bounds, lemmas
from partineq.injections import in_v_set


def test_cns_power_small():
    r = lemmas.cns_power_lemma(3, 6)
    assert r.ok and r.checked == 6 + 36 + 216


def test_ratio_power():
    r = lemmas.ratio_power_lemma()
    assert r.ok and r.checked == 12 * 12 * 2


def test_k2_regions_disjoint():
    r = lemmas.k2_regions_disjoint(30)
    assert r.ok and r.checked == sum(k - 2 for k in range(3, 31))


def test_vectorised_masks_match_scalar_predicate():
    for s, t in [(1, 1), (2, 1)]:
        B = bounds.B(s, t)
        n = np.arange(1, 60 * B, dtype=np.int64)
        masks = lemmas._v_masks(n, s, t)
        for i in range(8):
            expect = [in_v_set(i + 1, int(v), s, t) for v in n]
            assert masks[i].tolist() == expect


def test_every_integer_has_at_most_one_set():
    assert lemmas.v_sets_disjoint_scan(1, 1, 5000 * 39).ok


def test_block_probes():
    assert lemmas.v_sets_disjoint_blocks(1, 2, 2000).ok
    assert lemmas.v_sets_piecewise_constant(1, 2, [1, 2, 7, 14, 15]).ok


def test_scan_reports_overlaps(monkeypatch):
    real = lemmas._v_masks

    def sabotaged(n, s, t):
        m = real(n, s, t)
        m[7] |= m[6]            # let V_8 also claim everything in V_7
        return m

    monkeypatch.setattr(lemmas, "_v_masks", sabotaged)
    r = lemmas.v_sets_disjoint_scan(1, 1, 10 * 39)
    assert not r.ok and r.violations[0] == (6 * 39 - 11,)
