"""Proof steps, verdicts and verification certificates.

A certificate is a topologically ordered DAG of steps.  Each step is
either exact (decided by an equality engine or direct computation) or
axiom-backed, in which case it names the classical statements it rests
on.  The axiom ledger of a certificate is exactly the union of the
axioms cited by its steps, so a reader can see at a glance what has to
be trusted beyond the computations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    # A verified *non-existence*: the claim asked for a realization and the
    # certificate proves there is none.  Distinct from REFUTED so that the
    # exit status of a run can treat it as the expected outcome.
    REFUTED_REALIZATION = "REFUTED-realization"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    INCONCLUSIVE = "INCONCLUSIVE"


METHODS = (
    "exact-Bn",
    "relator",
    "mod-center",
    "square-rule",
    "invariant",
    "axiom",
    "arithmetic",
    "coset-enumeration",
)


@dataclass(frozen=True)
class AxiomId:
    """A named trusted statement with its classical source."""

    id: str
    statement: str
    source: str


@dataclass(frozen=True)
class ProofStep:
    id: str
    statement: str
    method: str
    ok: bool = True
    depends_on: tuple[str, ...] = ()
    axioms: tuple[str, ...] = ()
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown step method {self.method!r}")

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "method": self.method,
            "ok": self.ok,
            "depends_on": list(self.depends_on),
            "axioms": list(self.axioms),
            "data": self.data,
        }


@dataclass(frozen=True)
class VerificationCertificate:
    claim: str
    n: int
    verdict: Verdict
    steps: tuple[ProofStep, ...]
    flags: dict = field(default_factory=dict)
    axiom_ledger: tuple[AxiomId, ...] = ()

    def __post_init__(self):
        seen: set[str] = set()
        for step in self.steps:
            for dep in step.depends_on:
                if dep not in seen:
                    raise ValueError(
                        f"step {step.id} depends on {dep}, which does not precede it"
                    )
            seen.add(step.id)
        cited = sorted({a for step in self.steps for a in step.axioms})
        if [ax.id for ax in self.axiom_ledger] != cited:
            raise ValueError("axiom ledger must equal the union of step axioms")
        if self.verdict is Verdict.VERIFIED and not all(s.ok for s in self.steps):
            raise ValueError("a VERIFIED certificate cannot contain a failed step")

    def cited_axiom_ids(self) -> tuple[str, ...]:
        return tuple(ax.id for ax in self.axiom_ledger)

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "verdict": self.verdict.value,
            "flags": self.flags,
            "steps": [s.as_dict() for s in self.steps],
            "axioms": [
                {"id": a.id, "statement": a.statement, "source": a.source}
                for a in self.axiom_ledger
            ],
        }


def make_certificate(
    claim: str,
    n: int,
    verdict: Verdict,
    steps,
    flags: dict | None = None,
) -> VerificationCertificate:
    """Assemble a certificate, deriving the axiom ledger from the steps."""
    from .sphere import AXIOMS

    steps = tuple(steps)
    cited = sorted({a for step in steps for a in step.axioms})
    ledger = tuple(AXIOMS[a] for a in cited)
    return VerificationCertificate(claim, n, verdict, steps, flags or {}, ledger)


def to_json(obj, indent: int | None = 2) -> str:
    """Deterministic JSON: sorted keys, fixed layout, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=indent) + "\n"
