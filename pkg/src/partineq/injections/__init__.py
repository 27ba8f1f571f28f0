"""The three constructive injections, their recoveries, and a domain-wide checker."""

from .alt import eta_alt, eta_alt_recover
from .t1 import phi_t1, phi_t1_recover, k2_regions
from .t3 import classify_s_frequency, eta_constants, eta_t3, eta_t3_recover, in_v_set
from .trace import MapTrace
from .verify import VerifyReport, verify_injection

__all__ = [
    "MapTrace",
    "VerifyReport",
    "classify_s_frequency",
    "eta_alt",
    "eta_alt_recover",
    "eta_constants",
    "eta_t3",
    "eta_t3_recover",
    "in_v_set",
    "phi_t1",
    "phi_t1_recover",
    "k2_regions",
    "verify_injection",
]
