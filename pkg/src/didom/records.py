"""Verification records: the persisted outcome of one claim-check."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Optional

from didom.core import Digraph

HOLDS = "holds"
FAILS = "fails"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"
TIMEOUT = "timeout"

VERDICTS = (HOLDS, FAILS, HYPOTHESIS_NOT_MET, TIMEOUT)


@dataclass
class VerificationRecord:
    """One claim checked on one instance.

    ``witnesses`` maps witness names to sorted vertex-index lists; ``extras``
    carries claim-specific scalars (slack, sandwich bounds, ...).
    """

    claim: str
    instance: str
    hypotheses_met: bool
    lhs: Optional[int]
    rhs: Optional[int]
    verdict: str
    witnesses: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    seed: Optional[int] = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self, include_timings: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "instance": self.instance,
            "hypotheses_met": self.hypotheses_met,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timings else None,
            "seed": self.seed,
        }
        if self.extras:
            out["extras"] = self.extras
        return out

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "VerificationRecord":
        raw = json.loads(line)
        return cls(
            claim=raw["claim"],
            instance=raw["instance"],
            hypotheses_met=raw["hypotheses_met"],
            lhs=raw["lhs"],
            rhs=raw["rhs"],
            verdict=raw["verdict"],
            witnesses=raw.get("witnesses") or {},
            elapsed_ms=raw.get("elapsed_ms") or 0.0,
            seed=raw.get("seed"),
            extras=raw.get("extras") or {},
        )


def digraph_descriptor(d: Digraph) -> str:
    """Stable inline descriptor: vertex count plus an arc-list digest."""
    payload = f"{d.n};" + ";".join(f"{u},{v}" for u, v in d.arcs())
    digest = hashlib.sha1(payload.encode("ascii")).hexdigest()[:12]
    return f"digraph:n={d.n},h={digest}"
