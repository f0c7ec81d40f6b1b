"""Generic pass/fail record shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    ok: bool
    kind: str
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"ok": self.ok, "kind": self.kind, **self.info}
