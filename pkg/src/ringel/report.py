"""Check records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

IDENTITY = "IDENTITY"  # exact symbolic or exact-arithmetic equality
REPLAY = "REPLAY"  # sampled evidence, not a proof
PASS = "PASS"
FAIL = "FAIL"

STATUSES = (IDENTITY, REPLAY, PASS, FAIL)


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status,
                "witness": {k: str(v) for k, v in self.witness.items()}}

    @classmethod
    def from_json(cls, data: dict) -> Check:
        return cls(data["name"], data["status"], dict(data.get("witness", {})))


def check(name: str, ok: bool, good: str = PASS, **witness) -> Check:
    return Check(name, good if ok else FAIL, {k: str(v) for k, v in witness.items()})


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)
