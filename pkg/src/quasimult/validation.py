"""Validation reports shared by the structural checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Violation:
    """One broken axiom: which rule, on which arguments, with what offending value."""

    axiom: str
    witness: tuple
    value: object = None

    def describe(self) -> str:
        parts = [f"{self.axiom} at {self.witness!r}"]
        if self.value is not None:
            parts.append(f"value {self.value}")
        return ": ".join(parts)


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, witness: tuple, value: object = None) -> None:
        self.violations.append(Violation(axiom, witness, value))

    def merge(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(v.describe() for v in self.violations)


class InternalConsistencyError(AssertionError):
    """A theorem-backed invariant failed at runtime; indicates an implementation bug."""
