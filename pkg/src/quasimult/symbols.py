"""The extended index alphabet and the pattern-level product table.

Alphabet symbols are either a basis index or the marker standing for the
whole distinguished subspace V, each available in a barred variant.  The
``SymbolicTable`` maps explicit position patterns (length-n tuples of
unbarred symbols) to what the product does: hit a single basis line, land
inside V, or vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .validation import ValidationReport


class Ext(NamedTuple):
    """Alphabet symbol: ``name`` is a basis id, or None for the V marker."""

    name: str | None
    barred: bool = False

    @property
    def is_index(self) -> bool:
        return self.name is not None


V_SYM = Ext(None, False)


def idx(name: str) -> Ext:
    return Ext(name, False)


def bar(x: Ext) -> Ext:
    return Ext(x.name, not x.barred)


def unbar(x: Ext) -> Ext:
    return Ext(x.name, False)


def ext_key(x: Ext):
    """Sort key putting indices (by id) before the V marker, unbarred first."""
    return (x.name is None, x.name or "", x.barred)


def fmt_ext(x: Ext) -> str:
    base = x.name if x.name is not None else "v"
    return base + "~" if x.barred else base


def fmt_pack(pack: Iterable[Ext]) -> str:
    return "(" + ",".join(fmt_ext(x) for x in pack) + ")"


# Pattern targets: value idx(j) means the product spans the j-th basis line,
# V_SYM means it lands inside V, an absent key means it is zero.
Pattern = tuple[Ext, ...]


@dataclass(frozen=True)
class SymbolicTable:
    arity: int
    index_ids: tuple[str, ...]
    patterns: dict[Pattern, Ext] = field(default_factory=dict)

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        if len(set(self.index_ids)) != len(self.index_ids):
            raise ValueError("duplicate index ids")

    def index_symbols(self) -> tuple[Ext, ...]:
        return tuple(idx(i) for i in self.index_ids)

    def symbols(self) -> tuple[Ext, ...]:
        return self.index_symbols() + (V_SYM,)

    def target(self, pattern: Pattern) -> Ext | None:
        return self.patterns.get(pattern)


def all_patterns(sym: SymbolicTable):
    import itertools

    return itertools.product(sym.symbols(), repeat=sym.arity)


def validate_quasi_mult(sym: SymbolicTable) -> ValidationReport:
    """Check the quasi-multiplicativity conditions on a pattern table.

    A table built by ``symbolic_of_concrete`` satisfies these by construction;
    hand-built tables may not.  Each pattern carries a single target, so the
    only checkable conditions are well-formedness and the ban on mixed
    patterns (some index slots, some V slots) landing inside V.
    """
    report = ValidationReport()
    known = set(sym.index_ids)
    for pattern, target in sym.patterns.items():
        if len(pattern) != sym.arity:
            report.add("pattern-arity", (pattern,), len(pattern))
            continue
        bad_entry = False
        for entry in pattern:
            if entry.barred or (entry.is_index and entry.name not in known):
                report.add("pattern-symbol", (pattern,), entry)
                bad_entry = True
        if bad_entry:
            continue
        if target.barred or (target.is_index and target.name not in known):
            report.add("target-symbol", (pattern,), target)
            continue
        has_index = any(p.is_index for p in pattern)
        has_v = any(not p.is_index for p in pattern)
        if has_index and has_v and not target.is_index:
            report.add("mixed-pattern-into-v", (pattern,), target)
    return report
