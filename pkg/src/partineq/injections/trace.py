from __future__ import annotations

from dataclasses import dataclass, field

from ..partitions import Partition, serialize

T1_CASES = ("1a", "1b", "2a", "2b")
T3_CASES = ("1", "2a", "2b.i", "2b.ii", "2b.iii.A", "2b.iii.B", "2b.iii.C", "2b.iii.D")
ALT_CASES = ("2",)


@dataclass
class MapTrace:
    """Case label plus the auxiliary quantities a map computed on the way.

    ``aux`` values are ints or tuples of ints. ``preimage`` is only filled in
    by the recovery functions.
    """

    map_id: str
    case_label: str
    aux: dict = field(default_factory=dict)
    preimage: Partition | None = None

    def same_as(self, other: "MapTrace") -> bool:
        return (self.map_id, self.case_label, self.aux) == (other.map_id, other.case_label, other.aux)

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, (tuple, list)):
                return [str(x) for x in v]
            return None if v is None else str(v)

        out = {"map": self.map_id, "case_label": self.case_label,
               "aux": {k: enc(v) for k, v in self.aux.items()}}
        if self.preimage is not None:
            out["preimage"] = serialize(self.preimage)
        return out
