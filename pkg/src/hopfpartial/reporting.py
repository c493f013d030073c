"""Verification reports: named checks that never raise on failure.

Constructors of verified pipeline results call ``require`` and raise
``VerificationError``; the verify_* functions themselves only record.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import VerificationError


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    where: str = ""

    def as_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.where:
            d["detail"] = self.where
        return d


@dataclass
class VerificationReport:
    checks: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def add(self, name, passed, where=""):
        self.checks.append(Check(name, bool(passed), where))
        return passed

    def extend(self, other, prefix=""):
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.passed, c.where))
        return self

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def by_name(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def require(self, context):
        if not self.ok:
            names = ", ".join(c.name + (f" at {c.where}" if c.where else "") for c in self.failures())
            raise VerificationError(f"{context}: failed checks: {names}", report=self)
        return self

    def as_rows(self):
        return [c.as_dict() for c in self.checks]

    def __str__(self):
        bad = self.failures()
        if not bad:
            return f"ok ({len(self.checks)} checks)"
        return f"{len(bad)}/{len(self.checks)} checks failed: " + ", ".join(c.name for c in bad)
