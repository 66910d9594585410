from __future__ import annotations

from dataclasses import dataclass, field

from .carrier import ApartnessError


class CertificateFailure(ApartnessError):
    """A construction failed one of its own checks."""

    def __init__(self, certificate: "Certificate"):
        self.certificate = certificate
        names = ", ".join(c.name for c in certificate.failures())
        super().__init__(f"certificate checks failed: {names}")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass
class Certificate:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness=None) -> bool:
        self.checks.append(Check(name, bool(passed), None if passed else witness))
        return bool(passed)

    def extend(self, other: "Certificate", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def __getitem__(self, name: str) -> bool:
        for c in self.checks:
            if c.name == name:
                return c.passed
        raise KeyError(name)

    def require(self) -> "Certificate":
        if not self.ok:
            raise CertificateFailure(self)
        return self
