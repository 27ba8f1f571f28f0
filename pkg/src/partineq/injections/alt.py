"""Injection from D_{L,s,V} into I_{L,s,V} for large k_t, via a binary mask.

The set of indices with m_i != 0 becomes the mask gamma = sum 2^(i-1); the
nonzero m_i are ranked with the combinatorial number system. The s-frequency
2^(t+4) * rank - (2 gamma - 1) carries both, since 2 gamma - 1 < 2^(t+1).
Whatever weight is left goes to parts s+1 and s+2.
"""

from __future__ import annotations

from .. import bounds
from .._intmath import exact_root
from ..errors import BoundNotMetError, DomainError, MembershipError, NoSolutionError, NotInRangeError, OutOfScopeError
from ..frobenius import solve_sylvester
from ..pairing import cns_rank, cns_unrank
from ..partitions import ClassParams, Partition, is_member
from .trace import MapTrace


def _check_params(c: ClassParams):
    if c.kind != "DV":
        raise DomainError("eta_alt is defined on class DV")
    if c.L < 2:
        raise DomainError("eta_alt needs L >= 2 for the parts s+1, s+2")
    need = bounds.alt_kt_bound(c.s, c.t)
    if c.V[0] < need:
        raise DomainError(f"smallest element of V is {c.V[0]}, needs >= {need}")


def encode(m: tuple[int, ...], t: int) -> tuple[int, int, int]:
    """(gamma, cns, s-frequency) for a tuple with at least one nonzero entry."""
    nz = [x for x in m if x]
    if not nz:
        raise OutOfScopeError("all m_i are zero; that case reuses an external construction and is not implemented")
    gamma = sum(1 << i for i, x in enumerate(m) if x)
    rank = cns_rank(nz)
    return gamma, rank, 2 ** (t + 4) * rank - (2 * gamma - 1)


def decode(sfreq: int, t: int) -> tuple[int, ...]:
    """Invert ``encode`` from the s-frequency alone."""
    mod = 2 ** (t + 4)
    odd = -sfreq % mod
    if odd % 2 == 0 or odd >= 2 ** (t + 1):
        raise NotInRangeError(f"s-frequency {sfreq} does not carry a mask")
    gamma = (odd + 1) // 2
    rank = (sfreq + odd) // mod
    idx = [i for i in range(t) if gamma >> i & 1]
    nz = cns_unrank(rank, len(idx)) if rank >= 1 else None
    if nz is None:
        raise NotInRangeError(f"{rank} is not a rank of a positive {len(idx)}-tuple")
    m = [0] * t
    for i, x in zip(idx, nz):
        m[i] = x
    return tuple(m)


def eta_alt(p: Partition, c: ClassParams) -> tuple[Partition, MapTrace]:
    _check_params(c)
    if not is_member(p, c):
        raise MembershipError(f"{p!r} is not in D_{{{c.L},{c.s},{c.V}}}")
    s, t = c.s, c.t
    m = []
    for k in c.ks:
        r = exact_root(p.freq(k), t)
        if r is None:
            raise MembershipError(f"frequency of {k} is not a perfect {t}-th power")
        m.append(r)
    m = tuple(m)
    gamma, rank, sfreq = encode(m, t)
    rest = sum(k * p.freq(k) for k in c.ks) - s * sfreq
    try:
        x, y = solve_sylvester(s + 1, s + 2, rest)
    except NoSolutionError as exc:
        raise BoundNotMetError(str(exc)) from None
    delta = {k: -p.freq(k) for k in c.ks}
    delta[s] = sfreq
    delta[s + 1] = x
    delta[s + 2] = y
    aux = {"m": m, "gamma": gamma, "cns": rank, "x": x, "y": y}
    return p.adjusted(delta), MapTrace("ALT", "2", aux)


def eta_alt_recover(image: Partition, c: ClassParams) -> MapTrace:
    _check_params(c)
    s, t = c.s, c.t
    if not is_member(image, c.with_kind("I")):
        raise NotInRangeError("image must lie in I_{L,s,V}")
    sfreq = image.freq(s)
    m = decode(sfreq, t)
    gamma, rank, _ = encode(m, t)
    rest = sum(k * mi ** t for k, mi in zip(c.ks, m)) - s * sfreq
    try:
        x, y = solve_sylvester(s + 1, s + 2, rest)
    except NoSolutionError:
        raise NotInRangeError("pair equation insoluble for the decoded tuple") from None
    delta = {k: mi ** t for k, mi in zip(c.ks, m)}
    delta[s] = -sfreq
    delta[s + 1] = -x
    delta[s + 2] = -y
    try:
        pre = image.adjusted(delta)
    except DomainError:
        raise NotInRangeError("image lacks the parts the preimage would give back") from None
    if not is_member(pre, c):
        raise NotInRangeError("rebuilt preimage is not in D_{L,s,V}")
    return MapTrace("ALT", "2", {"m": m, "gamma": gamma, "cns": rank, "x": x, "y": y}, preimage=pre)
