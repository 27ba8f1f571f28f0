"""Injection from D_{L,s,V} into I_{L,s,V} built on the cube-shell rank.

Frequencies of the V-parts are m_i^t. They are removed, and psi = psi(m) is
written into the frequency of s. Which of the eight sets V_1..V_8 that
frequency falls in tells the recovery which case produced it; the remaining
weight goes to a coprime pair of parts via the Frobenius solver.

Constants, with B = (39 s^2 t^3)^t and A = (12 s t^3)^t:

* case 1 (psi >= A): s-frequency psi + A(j - 1) + 1, always in V_1
* case 2a: 7 h_0 B - psi, removing 8sB parts of h_0 < F(s, t)
* cases 2b.*: cB - psi for c = 1..6, using the helper parts
  alpha_p, beta_p, gamma_p, delta_p and one part l_0 >= F(s, t)
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import bounds
from .._intmath import exact_root
from ..errors import BoundNotMetError, DomainError, MembershipError, NoSolutionError, NotInRangeError
from ..frobenius import solve_sylvester
from ..pairing import psi_rank, psi_unrank
from ..partitions import ClassParams, Partition, is_member
from .trace import MapTrace

# case label -> multiplier c of B in the s-frequency cB - psi, and the helper
# pair the case uses (None: the fixed pair s+2u0+1, s+2u0+2)
_CASE2B = {
    "2b.i": (1, None),
    "2b.ii": (2, None),
    "2b.iii.A": (3, ("alpha", "beta")),
    "2b.iii.B": (4, ("alpha", "delta")),
    "2b.iii.C": (5, ("gamma", "beta")),
    "2b.iii.D": (6, ("gamma", "delta")),
}


@dataclass(frozen=True)
class EtaConstants:
    s: int
    t: int
    A: int
    B: int
    F: int
    u0: int
    pair: tuple[int, int]
    p0: int
    helpers: dict

    @property
    def big(self) -> int:
        """Frequency threshold 8sB for the case-2a part h_0."""
        return 8 * self.s * self.B


def eta_constants(c: ClassParams) -> EtaConstants:
    s, t = c.s, c.t
    if c.kind != "DV":
        raise DomainError("eta_t3 is defined on class DV")
    if c.L < 2 * t + 2:
        raise DomainError(f"need L >= 2t + 2 = {2 * t + 2}, got L = {c.L}")
    V = set(c.V)
    A, B = bounds.A(s, t), bounds.B(s, t)
    u0 = next(u for u in range(t + 1) if not {s + 2 * u + 1, s + 2 * u + 2} & V)
    for p in range(1, t + 2):
        helpers = {
            "alpha": 5 * p * s * B + 1,
            "beta": 5 * p * s * B + 2,
            "gamma": 10 * p * s * B - 1,
            "delta": 15 * p * s * B - 2,
        }
        if not set(helpers.values()) & V:
            break
    return EtaConstants(s, t, A, B, bounds.F_st(s, t), u0, (s + 2 * u0 + 1, s + 2 * u0 + 2), p, helpers)


# -- the eight frequency sets ----------------------------------------------

def in_v_set(i: int, n: int, s: int, t: int) -> bool:
    """Direct membership of n in V_i (1 <= i <= 8)."""
    A, B = bounds.A(s, t), bounds.B(s, t)
    if n < 1:
        return False
    if i == 1:
        return 1 <= n % B <= B - A
    q = -(-n // B)
    psi = q * B - n
    if psi >= A:
        return False
    if 2 <= i <= 7:
        return q == i - 1
    if i == 8:
        return q % 7 == 0 and q // 7 >= s + 1
    raise DomainError(f"no set V_{i}")


def classify_s_frequency(n: int, s: int, t: int) -> tuple[str, int, int | None]:
    """Case label, psi and h_0 (case 2a only) encoded by an s-frequency."""
    A, B = bounds.A(s, t), bounds.B(s, t)
    if n < 1:
        raise NotInRangeError("s-frequency must be positive")
    r = n % B
    if 1 <= r <= B - A:
        j = n // B
        return "1", A + j * (B - A) + r - 1, None
    q = -(-n // B)
    psi = q * B - n
    if psi >= A:
        raise NotInRangeError(f"s-frequency {n} lies in no V_i")
    if q <= 6:
        return ("2b.i", "2b.ii", "2b.iii.A", "2b.iii.B", "2b.iii.C", "2b.iii.D")[q - 1], psi, None
    if q % 7 == 0 and q // 7 >= s + 1:
        return "2a", psi, q // 7
    raise NotInRangeError(f"s-frequency {n} lies in no V_i")


CASE_SET = {"1": 1, "2a": 8, "2b.i": 2, "2b.ii": 3, "2b.iii.A": 4, "2b.iii.B": 5, "2b.iii.C": 6, "2b.iii.D": 7}


# -- forward map ------------------------------------------------------------

def _m_vector(p: Partition, c: ClassParams) -> tuple[int, ...]:
    out = []
    for k in c.ks:
        m = exact_root(p.freq(k), c.t)
        if m is None:
            raise MembershipError(f"frequency of {k} is not a perfect {c.t}-th power")
        out.append(m)
    return tuple(out)


def _solve(a, b, n):
    try:
        return solve_sylvester(a, b, n)
    except NoSolutionError as exc:
        raise BoundNotMetError(str(exc)) from None


def _s_frequency(case: str, psi: int, k: EtaConstants, h0=None) -> int:
    if case == "1":
        j = (psi - k.A) // (k.B - k.A)
        return psi + k.A * (j - 1) + 1
    if case == "2a":
        return 7 * h0 * k.B - psi
    return _CASE2B[case][0] * k.B - psi


def _choose_case(p: Partition, c: ClassParams, k: EtaConstants, psi: int):
    """Case label plus (h0, l0) as the forward map decides them."""
    if psi >= k.A:
        return "1", None, None
    V = set(c.V)
    h0 = next((h for h, f in p.pairs if c.s + 1 <= h <= k.F - 1 and f >= k.big), None)
    if h0 is not None:
        return "2a", h0, None
    # l0 outside V, so that removing one part of it never touches a V-part
    l0 = next((h for h, _ in p.pairs if h >= k.F and h not in V), None)
    if l0 is None:
        raise BoundNotMetError("psi < A, no part below F(s,t) is frequent enough, and no part >= F(s,t) exists")
    fa, fb, fg, fd = (p.freq(k.helpers[n]) for n in ("alpha", "beta", "gamma", "delta"))
    if fa >= 1 and fg >= 1:
        return "2b.i", None, l0
    if fb >= 1 and fd >= 1:
        return "2b.ii", None, l0
    if fa == 0 and fb == 0:
        return "2b.iii.A", None, l0
    if fa == 0 and fd == 0:
        return "2b.iii.B", None, l0
    if fg == 0 and fb == 0:
        return "2b.iii.C", None, l0
    return "2b.iii.D", None, l0


def eta_t3(p: Partition, c: ClassParams) -> tuple[Partition, MapTrace]:
    k = eta_constants(c)
    if not is_member(p, c):
        raise MembershipError(f"{p!r} is not in D_{{{c.L},{c.s},{c.V}}}")
    s = c.s
    m = _m_vector(p, c)
    psi = psi_rank(m)
    weight_v = sum(ki * p.freq(ki) for ki in c.ks)
    case, h0, l0 = _choose_case(p, c, k, psi)
    sfreq = _s_frequency(case, psi, k, h0)

    delta = {ki: -p.freq(ki) for ki in c.ks}
    delta[s] = sfreq
    aux = {"psi": psi, "m": m, "u0": k.u0}
    helper_parts = None
    if case == "1":
        aux["j"] = (psi - k.A) // (k.B - k.A)
        rest = weight_v
    elif case == "2a":
        aux["h0"] = h0
        delta[h0] = -k.big
        rest = weight_v + h0 * k.big
    elif case in ("2b.i", "2b.ii"):
        names = ("alpha", "gamma") if case == "2b.i" else ("beta", "delta")
        for n in names:
            delta[k.helpers[n]] = -1
        aux.update(l0=l0, p0=k.p0)
        rest = weight_v + sum(k.helpers[n] for n in names)
    else:
        helper_parts = tuple(k.helpers[n] for n in _CASE2B[case][1])
        delta[l0] = -1
        aux.update(l0=l0, p0=k.p0)
        rest = weight_v + l0
    rest -= s * sfreq
    if rest < 0:
        raise BoundNotMetError(f"case {case}: s-frequency {sfreq} outweighs the removed parts")
    a, b = helper_parts or k.pair
    x, y = _solve(a, b, rest)
    for part, cnt in ((a, x), (b, y)):
        delta[part] = delta.get(part, 0) + cnt
    aux.update(x=x, y=y)
    image = p.adjusted(delta)
    if image.parts[-1] > c.top:
        raise BoundNotMetError(f"case {case} needs part {image.parts[-1]} > L + s = {c.top}")
    return image, MapTrace("T3", case, aux)


def eta_t3_recover(image: Partition, c: ClassParams) -> MapTrace:
    k = eta_constants(c)
    s = c.s
    if not is_member(image, c.with_kind("I")):
        raise NotInRangeError("image must lie in I_{L,s,V}")
    sfreq = image.freq(s)
    case, psi, h0 = classify_s_frequency(sfreq, s, c.t)
    if case == "1" and psi < k.A or case != "1" and psi >= k.A:
        raise NotInRangeError("psi inconsistent with case")
    m = psi_unrank(psi, c.t)
    weight_v = sum(ki * mi ** c.t for ki, mi in zip(c.ks, m))

    delta = {ki: mi ** c.t for ki, mi in zip(c.ks, m)}
    delta[s] = -sfreq
    aux = {"psi": psi, "m": m, "u0": k.u0}
    if case in ("1", "2a") or case in ("2b.i", "2b.ii"):
        a, b = k.pair
        if case == "1":
            aux["j"] = (psi - k.A) // (k.B - k.A)
            rest = weight_v
        elif case == "2a":
            aux["h0"] = h0
            delta[h0] = delta.get(h0, 0) + k.big
            rest = weight_v + h0 * k.big
        else:
            names = ("alpha", "gamma") if case == "2b.i" else ("beta", "delta")
            for n in names:
                delta[k.helpers[n]] = delta.get(k.helpers[n], 0) + 1
            rest = weight_v + sum(k.helpers[n] for n in names)
        rest -= s * sfreq
        if rest < 0:
            raise NotInRangeError("recovered V-weight is smaller than the s-weight")
        try:
            x, y = solve_sylvester(a, b, rest)
        except NoSolutionError:
            raise NotInRangeError("pair equation insoluble for the recovered psi") from None
        l0 = None
    else:
        a, b = (k.helpers[n] for n in _CASE2B[case][1])
        # the pair was empty before the map, so its frequencies are x and y
        x, y = image.freq(a), image.freq(b)
        l0 = s * sfreq + a * x + b * y - weight_v
        if l0 < k.F:
            raise NotInRangeError(f"recovered l0 = {l0} is below F(s,t) = {k.F}")
        delta[l0] = delta.get(l0, 0) + 1
    if case.startswith("2b"):
        aux.update(l0=l0, p0=k.p0)
    delta[a] = delta.get(a, 0) - x
    delta[b] = delta.get(b, 0) - y
    aux.update(x=x, y=y)
    try:
        pre = image.adjusted(delta)
    except DomainError:
        raise NotInRangeError("image lacks the parts the preimage would give back") from None
    if not is_member(pre, c):
        raise NotInRangeError("rebuilt preimage is not in D_{L,s,V}")
    if case in ("2b.i", "2b.ii"):
        # l0 is not encoded in these cases; it is whatever the preimage has
        aux["l0"] = next((h for h, _ in pre.pairs if h >= k.F and h not in c.V), None)
    try:
        fwd, fwd_trace = eta_t3(pre, c)
    except (BoundNotMetError, MembershipError) as exc:
        raise NotInRangeError(f"forward map fails on the rebuilt preimage: {exc}") from None
    if fwd != image or fwd_trace.case_label != case:
        raise NotInRangeError("image is not the forward image of the rebuilt preimage")
    return MapTrace("T3", case, aux, preimage=pre)
