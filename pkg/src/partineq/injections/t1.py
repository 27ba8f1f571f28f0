"""Injection from I_{L,s,V} into D_{L,s} for |V| >= 2.

All parts s are removed and their weight, plus possibly 2k_1^5 + k_1^3 parts
of some i_0, is rewritten as x parts k_2 and y parts k_1, where k_1 > k_2 are
the two largest elements of V. The four cases put x into four disjoint
intervals, which is what makes the map invertible.
"""

from __future__ import annotations

from math import gcd

from ..errors import BoundNotMetError, DomainError, MembershipError, NotInRangeError, PreconditionError
from ..frobenius import solve_refined
from ..partitions import ClassParams, Partition, is_member
from .trace import MapTrace


def _setup(c: ClassParams):
    if c.kind != "I":
        raise DomainError("phi_t1 is defined on class I")
    if c.t < 2:
        raise DomainError("phi_t1 needs |V| >= 2")
    k1, k2 = c.ks[0], c.ks[1]
    return k1, k2, gcd(k1, k2), 2 * k1 ** 5 + k1 ** 3


def k2_regions(k1: int, k2: int) -> dict[str, tuple[int, int]]:
    """Half-open intervals holding the k_2-frequency of an image, per case."""
    d = gcd(k1, k2)
    return {
        "1a": (0, k1),
        "1b": (k1, d * k1),
        "2a": (d * k1, d * k1 + k1 ** 4),
        "2b": (d * k1 + k1 ** 4, d * k1 + 2 * k1 ** 4),
    }


def _refined(a, b, n, h):
    try:
        return solve_refined(a, b, n, h)
    except PreconditionError as exc:
        raise BoundNotMetError(str(exc)) from None


def phi_t1(p: Partition, c: ClassParams) -> tuple[Partition, MapTrace]:
    k1, k2, d, K = _setup(c)
    if not is_member(p, c):
        raise MembershipError(f"{p!r} is not in I_{{{c.L},{c.s},{c.V}}}")
    s = c.s
    f = p.freq(s)
    delta = {s: -f}
    aux = {"f": f, "d": d}
    if f > k1 ** 3:
        alpha = s * f % d
        aux["alpha_f"] = alpha
        if alpha == 0:
            case = "1a"
            x, y = _refined(k2, k1, s * f, 0)
        else:
            case = "1b"
            x, y = _refined(k2, k1, s * f - (k2 + alpha), alpha)
            delta[k2 + alpha] = 1
    else:
        i0 = next((i for i in range(s + 1, c.top + 1) if p.freq(i) >= K), None)
        if i0 is None:
            raise BoundNotMetError(f"f = {f} <= k1^3 and no part has frequency >= {K}")
        sigma = s * f + i0 * K
        beta = sigma % d
        aux.update(i0=i0, sigma=sigma, beta=beta)
        delta[i0] = -K
        if beta == 0:
            case = "2a"
            x, y = _refined(k2, k1, sigma, d + f - 1)
        else:
            case = "2b"
            x, y = _refined(k2, k1, sigma - (k2 + beta), d + k1 ** 3 + f - 1)
            # the part k2 + beta keeps the weight balanced
            delta[k2 + beta] = delta.get(k2 + beta, 0) + 1
    delta[k2] = delta.get(k2, 0) + x
    delta[k1] = delta.get(k1, 0) + y
    aux.update(x=x, y=y)
    return p.adjusted(delta), MapTrace("T1", case, aux)


def phi_t1_recover(image: Partition, c: ClassParams) -> MapTrace:
    """Read the case off the k_2-frequency and rebuild the preimage."""
    k1, k2, d, K = _setup(c)
    s = c.s
    if image.freq(s) or not is_member(image, c.with_kind("D")):
        raise NotInRangeError("image must lie in D_{L,s}")
    x, y = image.freq(k2), image.freq(k1)
    regions = k2_regions(k1, k2)
    case = next((name for name, (lo, hi) in regions.items() if lo <= x < hi), None)
    if case is None:
        raise NotInRangeError(f"k2-frequency {x} lies in no case region")
    total = k2 * x + k1 * y
    delta = {k2: -x, k1: -y}
    aux = {"d": d}
    if case in ("1a", "1b"):
        alpha = x // k1
        extra = 0 if case == "1a" else k2 + alpha
        if (total + extra) % s:
            raise NotInRangeError("weight of k1, k2 parts is not a multiple of s")
        f = (total + extra) // s
        if f <= k1 ** 3 or s * f % d != alpha:
            raise NotInRangeError(f"recovered f = {f} is inconsistent with case {case}")
        if extra:
            delta[extra] = -1
        aux.update(f=f, alpha_f=alpha)
    else:
        f = x // k1 - d + 1 if case == "2a" else x // k1 - d - k1 ** 3 + 1
        if not 1 <= f <= k1 ** 3:
            raise NotInRangeError(f"recovered f = {f} outside [1, k1^3]")
        if case == "2a":
            if (total - s * f) % K:
                raise NotInRangeError("i0 equation has no integral solution")
            i0 = (total - s * f) // K
        else:
            i0 = (total - s * f) // K + 1
        sigma = s * f + i0 * K
        beta = sigma % d
        if (case == "2a") != (beta == 0) or not s + 1 <= i0 <= c.top:
            raise NotInRangeError(f"recovered i0 = {i0}, beta = {beta} inconsistent with case {case}")
        if case == "2b":
            if total != sigma - (k2 + beta):
                raise NotInRangeError("k1, k2 weight does not match the case 2b equation")
            delta[k2 + beta] = delta.get(k2 + beta, 0) - 1
        delta[i0] = delta.get(i0, 0) + K
        aux.update(f=f, i0=i0, sigma=sigma, beta=beta)
    delta[s] = f
    aux.update(x=x, y=y)
    try:
        pre = image.adjusted(delta)
    except DomainError:
        raise NotInRangeError("image lacks the parts the preimage would give back") from None
    if not is_member(pre, c):
        raise NotInRangeError("rebuilt preimage is not in I_{L,s,V}")
    # the solver's choice of (x, y) must be the one the forward map makes
    fwd, _ = phi_t1(pre, c)
    if fwd != image:
        raise NotInRangeError("image is not the forward image of the rebuilt preimage")
    return MapTrace("T1", case, _ordered(aux, case), preimage=pre)


def _ordered(aux, case):
    keys = ["f", "d", "alpha_f"] if case in ("1a", "1b") else ["f", "d", "i0", "sigma", "beta"]
    return {k: aux[k] for k in keys + ["x", "y"]}
