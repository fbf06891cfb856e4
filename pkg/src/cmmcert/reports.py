"""Verdicts and the report record every check returns."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .interval import Interval, Ordering, compare


class Verdict(enum.Enum):
    VERIFIED = "Verified"
    FAILED = "Failed"
    INDETERMINATE = "Indeterminate"
    SKIPPED = "Skipped"


def verdict_less(lhs: Interval, rhs) -> Verdict:
    """Verdict for the claim lhs < rhs."""
    o = compare(lhs, rhs)
    if o is Ordering.CERTAINLY_LESS:
        return Verdict.VERIFIED
    if o is Ordering.CERTAINLY_GREATER:
        return Verdict.FAILED
    return Verdict.INDETERMINATE


def verdict_greater(lhs: Interval, rhs) -> Verdict:
    """Verdict for the claim lhs > rhs."""
    o = compare(lhs, rhs)
    if o is Ordering.CERTAINLY_GREATER:
        return Verdict.VERIFIED
    if o is Ordering.CERTAINLY_LESS:
        return Verdict.FAILED
    return Verdict.INDETERMINATE


def combine(verdicts) -> Verdict:
    """Failed beats Indeterminate beats Verified; Skipped entries are ignored."""
    vs = [v for v in verdicts if v is not Verdict.SKIPPED]
    if any(v is Verdict.FAILED for v in vs):
        return Verdict.FAILED
    if any(v is Verdict.INDETERMINATE for v in vs):
        return Verdict.INDETERMINATE
    return Verdict.VERIFIED


@dataclass
class BoundReport:
    claim_id: str
    lhs: Interval
    rhs: Interval
    verdict: Verdict
    metadata: dict[str, Any] = field(default_factory=dict)
    relation: str = "<"
    advisory: bool = False

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.VERIFIED

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "relation": self.relation,
            "verdict": self.verdict.value,
            "advisory": self.advisory,
            "lhs": self.lhs.endpoints(),
            "rhs": self.rhs.endpoints(),
            "metadata": {k: _plain(v) for k, v in sorted(self.metadata.items())},
        }

    def summary(self) -> str:
        tag = " (advisory)" if self.advisory else ""
        return f"{self.verdict.value:13s} {self.claim_id}{tag}: {self.lhs}  {self.relation}  {self.rhs}"


def _plain(v):
    if isinstance(v, Interval):
        return v.endpoints()
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)
