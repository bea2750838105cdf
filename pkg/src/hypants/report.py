"""Verdict records for individual checks."""

from __future__ import annotations

from dataclasses import dataclass, field

VERDICTS = ("pass", "fail", "assumed-constant")


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return value


@dataclass
class ClaimReport:
    """Outcome of one check.

    ``computed`` maps names to the numbers the check produced; ``provenance``
    labels the values that were taken from the literature rather than computed.
    """

    claim_id: str
    computed: dict = field(default_factory=dict)
    tolerance: float = 0.0
    verdict: str = "pass"
    anchor: str = ""
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    def to_dict(self) -> dict:
        out = {"id": self.claim_id, "anchor": self.anchor,
               "computed": _jsonable(self.computed),
               "tolerance": self.tolerance, "verdict": self.verdict}
        if self.provenance:
            out["provenance"] = dict(self.provenance)
        return out
