"""Grading groups (finite products of cyclic groups) and bicharacters on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .validation import ValidationReport

GroupElement = tuple[int, ...]


class BicharacterTableError(ValueError):
    """The value table does not cover all of G x G (structural, not an axiom violation)."""


@dataclass(frozen=True)
class GradingGroup:
    """Z_{m_1} x ... x Z_{m_k}; elements are int tuples reduced componentwise."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not all(isinstance(m, int) and m >= 1 for m in self.orders):
            raise ValueError(f"cyclic orders must be positive integers, got {self.orders}")

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.orders)

    def reduce(self, g) -> GroupElement:
        if len(g) != len(self.orders):
            raise ValueError(f"element {g!r} has wrong length for orders {self.orders}")
        return tuple(int(x) % m for x, m in zip(g, self.orders))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.orders))

    def sum(self, elems) -> GroupElement:
        total = self.identity
        for g in elems:
            total = self.add(total, g)
        return total

    def elements(self) -> list[GroupElement]:
        return list(itertools.product(*(range(m) for m in self.orders)))

    def __len__(self) -> int:
        n = 1
        for m in self.orders:
            n *= m
        return n


@dataclass(frozen=True)
class Bicharacter:
    """Value table for a pairing G x G -> Q \\ {0}.

    ``kind`` records how the table was built ("trivial", "super", "explicit")
    so files round-trip; the semantics live entirely in ``table``.
    """

    group: GradingGroup
    table: dict[tuple[GroupElement, GroupElement], Fraction] = field(compare=True)
    kind: str = "explicit"

    @classmethod
    def trivial(cls, group: GradingGroup) -> "Bicharacter":
        els = group.elements()
        return cls(group, {(g, h): Fraction(1) for g in els for h in els}, kind="trivial")

    @classmethod
    def super(cls, group: GradingGroup) -> "Bicharacter":
        """Parity sign rule (-1)^{parity(g) parity(h)}; needs every cyclic order even."""
        if any(m % 2 for m in group.orders):
            raise ValueError("super bicharacter needs all cyclic orders even")
        els = group.elements()
        table = {}
        for g in els:
            for h in els:
                sign = -1 if (sum(g) % 2) and (sum(h) % 2) else 1
                table[(g, h)] = Fraction(sign)
        return cls(group, table, kind="super")

    def value(self, g: GroupElement, h: GroupElement) -> Fraction:
        key = (self.group.reduce(g), self.group.reduce(h))
        try:
            return self.table[key]
        except KeyError:
            raise BicharacterTableError(f"bicharacter table has no entry for {key}") from None


def validate_bicharacter(eps: Bicharacter, group: GradingGroup | None = None) -> ValidationReport:
    """Check the three pairing axioms over all of G; missing entries raise."""
    group = group or eps.group
    els = group.elements()
    for g in els:
        for h in els:
            eps.value(g, h)  # coverage check up front
    report = ValidationReport()
    for g in els:
        for h in els:
            gh = group.add(g, h)
            for k in els:
                if eps.value(k, gh) != eps.value(k, g) * eps.value(k, h):
                    report.add("multiplicative-right", (k, g, h), eps.value(k, gh))
                if eps.value(gh, k) != eps.value(g, k) * eps.value(h, k):
                    report.add("multiplicative-left", (g, h, k), eps.value(gh, k))
            prod = eps.value(g, h) * eps.value(h, g)
            if prod != 1:
                report.add("antisymmetry", (g, h), prod)
    return report
