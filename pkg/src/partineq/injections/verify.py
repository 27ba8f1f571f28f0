"""Run a map over a whole enumerated domain and check it is an injection there."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..counting import enumerate_class
from ..errors import BoundNotMetError, DomainError, NotInRangeError, OutOfScopeError
from ..partitions import ClassParams, Partition, is_member, serialize
from . import alt, t1, t3

MAPS = {
    "T1": (t1.phi_t1, t1.phi_t1_recover, "I"),
    "T3": (t3.eta_t3, t3.eta_t3_recover, "DV"),
    "ALT": (alt.eta_alt, alt.eta_alt_recover, "DV"),
}

SAMPLE_LIMIT = 20


@dataclass
class VerifyReport:
    map_id: str
    params: ClassParams
    n: int
    domain_size: int = 0
    mapped: int = 0
    per_case: Counter = field(default_factory=Counter)
    diagnostics: Counter = field(default_factory=Counter)
    diagnostic_samples: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    collisions: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and self.collisions == 0

    def to_json(self) -> dict:
        return {
            "map": self.map_id,
            "params": self.params.to_json(),
            "n": self.n,
            "domain_size": self.domain_size,
            "mapped": self.mapped,
            "per_case": dict(sorted(self.per_case.items())),
            "diagnostics": dict(sorted(self.diagnostics.items())),
            "diagnostic_samples": self.diagnostic_samples[:SAMPLE_LIMIT],
            "failures": len(self.failures),
            "failure_samples": self.failures[:SAMPLE_LIMIT],
            "collisions": self.collisions,
            "ok": self.ok,
        }


def _target(map_id: str, c: ClassParams) -> ClassParams:
    return ClassParams(c.L, c.s, c.V, "D" if map_id == "T1" else "I")


def _region_ok(map_id: str, image: Partition, case: str, c: ClassParams) -> bool:
    if map_id == "T1":
        k1, k2 = c.ks[0], c.ks[1]
        lo, hi = t1.k2_regions(k1, k2)[case]
        return lo <= image.freq(k2) < hi
    sfreq = image.freq(c.s)
    if map_id == "T3":
        return t3.in_v_set(t3.CASE_SET[case], sfreq, c.s, c.t)
    return sfreq % 2 == 1 and sfreq >= 7 * 2 ** (c.t + 1) + 1


def check_one(map_id: str, p: Partition, c: ClassParams):
    """Apply one map to p; return (image, trace, problems)."""
    forward, recover, _ = MAPS[map_id]
    image, trace = forward(p, c)
    problems = []
    if image.weight != p.weight:
        problems.append("weight changed")
    if not is_member(image, _target(map_id, c)):
        problems.append("image outside target class")
    if not _region_ok(map_id, image, trace.case_label, c):
        problems.append(f"marker outside the region of case {trace.case_label}")
    try:
        back = recover(image, c)
    except NotInRangeError as exc:
        problems.append(f"recovery failed: {exc}")
    else:
        if back.preimage != p:
            problems.append("recovery returned a different preimage")
        if not back.same_as(trace):
            problems.append("recovery trace differs from forward trace")
    return image, trace, problems


def verify_injection(c_domain: ClassParams, map_id: str, n: int) -> VerifyReport:
    map_id = map_id.upper()
    if map_id not in MAPS:
        raise DomainError(f"unknown map {map_id!r}")
    c = c_domain.with_kind(MAPS[map_id][2])
    domain = enumerate_class(c, n)
    report = VerifyReport(map_id, c, n, domain_size=len(domain))
    images: dict[Partition, Partition] = {}
    for p in domain:
        try:
            image, trace, problems = check_one(map_id, p, c)
        except (BoundNotMetError, OutOfScopeError) as exc:
            kind = type(exc).__name__
            report.diagnostics[kind] += 1
            if len(report.diagnostic_samples) < SAMPLE_LIMIT:
                report.diagnostic_samples.append({"partition": serialize(p), "error": kind, "detail": str(exc)})
            continue
        report.mapped += 1
        report.per_case[trace.case_label] += 1
        if problems:
            report.failures.append({"partition": serialize(p), "case": trace.case_label, "problems": problems})
        if image in images:
            report.collisions += 1
            report.failures.append({"partition": serialize(p), "case": trace.case_label,
                                    "problems": [f"same image as {serialize(images[image])}"]})
        else:
            images[image] = p
    return report
