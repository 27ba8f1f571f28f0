"""Exhaustive exact checks of the numeric lemmas the maps depend on."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np

from . import bounds
from .injections.t1 import k2_regions
from .injections.t3 import in_v_set
from .pairing import cns_rank


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked,
                "violations": len(self.violations), "samples": [list(map(str, v)) for v in self.violations[:10]]}


def cns_power_lemma(t_max: int = 5, entry_max: int = 10) -> CheckResult:
    """sum m_i^t >= (t!/t^t) * cns_rank(m) for every m in [1, entry_max]^t, t <= t_max."""
    res = CheckResult("cns-power")
    for t in range(1, t_max + 1):
        coef = Fraction(factorial(t), t ** t)
        for m in product(range(1, entry_max + 1), repeat=t):
            res.checked += 1
            if sum(x ** t for x in m) < coef * cns_rank(m):
                res.violations.append(m)
    return res


def ratio_power_lemma(s_max: int = 12, t_max: int = 12, offsets=(0, 7)) -> CheckResult:
    """(1 + 1/h)^t <= 1 + 1/(2s) for h = 2st^2 + offset."""
    res = CheckResult("ratio-power")
    for s in range(1, s_max + 1):
        rhs = 1 + Fraction(1, 2 * s)
        for t in range(1, t_max + 1):
            for off in offsets:
                h = 2 * s * t * t + off
                res.checked += 1
                if (1 + Fraction(1, h)) ** t > rhs:
                    res.violations.append((s, t, h))
    return res


def k2_regions_disjoint(k_max: int = 30) -> CheckResult:
    """The four k_2-frequency intervals are pairwise disjoint for 2 <= k2 < k1 <= k_max."""
    res = CheckResult("k2-regions")
    for k1 in range(3, k_max + 1):
        for k2 in range(2, k1):
            res.checked += 1
            spans = [(lo, hi) for lo, hi in k2_regions(k1, k2).values() if lo < hi]
            if any(max(a[0], b[0]) < min(a[1], b[1]) for i, a in enumerate(spans) for b in spans[i + 1:]):
                res.violations.append((k1, k2))
    return res


# -- V_1..V_8 ----------------------------------------------------------------

def _v_masks(n: np.ndarray, s: int, t: int) -> np.ndarray:
    """Boolean matrix (8, len(n)): row i-1 is membership of n in V_i."""
    A, B = bounds.A(s, t), bounds.B(s, t)
    r = n % B
    q = -(-n // B)
    psi = q * B - n
    tail = (psi < A) & (n >= 1)
    rows = [(r >= 1) & (r <= B - A) & (n >= 1)]
    rows += [tail & (q == c) for c in range(1, 7)]
    rows.append(tail & (q % 7 == 0) & (q // 7 >= s + 1))
    return np.vstack(rows)


def v_sets_disjoint_scan(s: int, t: int, upto: int, chunk: int = 1 << 22) -> CheckResult:
    """Test every integer in [1, upto] against all eight membership predicates."""
    res = CheckResult(f"vsets-scan(s={s},t={t})")
    for lo in range(1, upto + 1, chunk):
        n = np.arange(lo, min(lo + chunk, upto + 1), dtype=np.int64)
        hits = _v_masks(n, s, t).sum(axis=0)
        res.checked += len(n)
        bad = n[hits > 1]
        res.violations.extend((int(x),) for x in bad[:10])
    return res


def v_sets_disjoint_blocks(s: int, t: int, blocks: int) -> CheckResult:
    """Disjointness on [1, blocks * B] via one probe per constant piece.

    Write n = qB - psi with 0 <= psi < B. Every predicate depends on n only
    through q and through whether psi is 0, in [1, A), or in [A, B). Within
    each block q the probes psi in {0, 1, A-1, A, B-1} therefore cover all
    integers of the block. ``v_sets_piecewise_constant`` checks that claim.
    """
    A, B = bounds.A(s, t), bounds.B(s, t)
    res = CheckResult(f"vsets-blocks(s={s},t={t})")
    offsets = sorted({0, 1, A - 1, A, B - 1})
    q = np.arange(1, blocks + 1, dtype=np.int64)
    for off in offsets:
        n = q * B - off
        hits = _v_masks(n, s, t).sum(axis=0)
        res.checked += len(n)
        bad = n[hits > 1]
        res.violations.extend((int(x),) for x in bad[:10])
    # independent scalar predicate on a thinned sample of the same probes
    for qq in range(1, blocks + 1, max(1, blocks // 2000)):
        for off in offsets:
            res.checked += 1
            if sum(in_v_set(i, qq * B - off, s, t) for i in range(1, 9)) > 1:
                res.violations.append((qq * B - off,))
    return res


def v_sets_piecewise_constant(s: int, t: int, block_ids) -> CheckResult:
    """Membership is constant on psi = 0, [1, A), [A, B) inside each listed block."""
    A, B = bounds.A(s, t), bounds.B(s, t)
    res = CheckResult(f"vsets-pieces(s={s},t={t})")
    psi = np.arange(0, B, dtype=np.int64)
    pieces = [(0, 1), (1, A), (A, B)]
    for q in block_ids:
        masks = _v_masks(q * B - psi, s, t)
        res.checked += B
        for lo, hi in pieces:
            seg = masks[:, lo:hi]
            if seg.size and not (seg == seg[:, :1]).all():
                res.violations.append((q, lo, hi))
    return res
