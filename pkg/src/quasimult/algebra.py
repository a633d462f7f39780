"""Concrete n-ary algebras: basis descriptors, structure constants, validators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .groups import Bicharacter, GradingGroup, GroupElement, validate_bicharacter
from .linalg import Vec, vec_add, vec_scale, vec_strip
from .perms import Perm, apply
from .symbols import Ext, Pattern, SymbolicTable, V_SYM, fmt_ext, idx
from .validation import ValidationReport

BasisEntry = tuple[str, GroupElement]


class QuasiMultViolation(ValueError):
    """A structure-constant entry breaks the quasi-multiplicative basis conditions."""

    def __init__(self, pattern: Pattern, detail: str):
        self.pattern = pattern
        self.detail = detail
        ids = ",".join(fmt_ext(x) for x in pattern)
        super().__init__(f"pattern ({ids}): {detail}")


@dataclass(frozen=True)
class ConcreteAlgebra:
    """L = V + W with structure constants over the combined homogeneous basis.

    Immutable after construction; ``create`` canonicalizes input (sorted basis
    ids, reduced degrees, stripped zero coefficients) so equal content compares
    equal.  Absent product keys mean zero.
    """

    arity: int
    group: GradingGroup
    bicharacter: Bicharacter
    w_basis: tuple[BasisEntry, ...]
    v_basis: tuple[BasisEntry, ...]
    products: dict[tuple[str, ...], dict[str, Fraction]]

    @classmethod
    def create(cls, arity, group, bicharacter, w_basis, v_basis, products) -> "ConcreteAlgebra":
        if arity < 2:
            raise ValueError("arity must be at least 2")
        if not w_basis:
            raise ValueError("the distinguished basis (w_basis) must be nonempty")
        w = tuple(sorted(((str(i), group.reduce(d)) for i, d in w_basis)))
        v = tuple(sorted(((str(i), group.reduce(d)) for i, d in v_basis)))
        ids = [i for i, _ in w] + [i for i, _ in v]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate basis ids: {dupes}")
        for i in ids:
            if not i or i == "v" or any(ch in i for ch in "~,;{} \t\n"):
                raise ValueError(f"basis id {i!r} is reserved or contains delimiter characters")
        known = set(ids)
        prods: dict[tuple[str, ...], dict[str, Fraction]] = {}
        for args, result in products.items():
            args = tuple(str(a) for a in args)
            if len(args) != arity:
                raise ValueError(f"product key {args} has length {len(args)}, expected {arity}")
            for a in args:
                if a not in known:
                    raise ValueError(f"product key {args} uses unknown basis id {a!r}")
            vec = vec_strip({str(b): Fraction(c) for b, c in result.items()})
            for b in vec:
                if b not in known:
                    raise ValueError(f"product {args} targets unknown basis id {b!r}")
            if vec:
                prods[args] = vec
        return cls(arity, group, bicharacter, w, v, prods)

    # -- basis helpers ------------------------------------------------------

    @property
    def w_ids(self) -> tuple[str, ...]:
        return tuple(i for i, _ in self.w_basis)

    @property
    def v_ids(self) -> tuple[str, ...]:
        return tuple(i for i, _ in self.v_basis)

    @property
    def all_ids(self) -> tuple[str, ...]:
        return self.w_ids + self.v_ids

    @property
    def dim(self) -> int:
        return len(self.w_basis) + len(self.v_basis)

    def degree_of(self, basis_id: str) -> GroupElement:
        for i, d in self.w_basis + self.v_basis:
            if i == basis_id:
                return d
        raise KeyError(basis_id)

    def degrees(self) -> dict[str, GroupElement]:
        return {i: d for i, d in self.w_basis + self.v_basis}

    def unit(self, basis_id: str) -> Vec:
        if basis_id not in self.all_ids:
            raise KeyError(basis_id)
        return {basis_id: Fraction(1)}

    def product_of_ids(self, args: tuple[str, ...]) -> Vec:
        return dict(self.products.get(args, {}))

    def symbolic(self) -> SymbolicTable:
        return symbolic_of_concrete(self)


def eval_product(alg: ConcreteAlgebra, sigma: Perm, args) -> Vec:
    """Multilinear expansion of the sigma-permuted n-ary product of vectors."""
    if len(args) != alg.arity:
        raise ValueError(f"expected {alg.arity} arguments, got {len(args)}")
    permuted = apply(sigma, tuple(args))
    out: Vec = {}
    for combo in itertools.product(*(tuple(v.items()) for v in permuted)):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        if not coeff:
            continue
        key = tuple(b for b, _ in combo)
        res = alg.products.get(key)
        if res:
            out = vec_add(out, vec_scale(coeff, res))
    return out


def validate_grading(alg: ConcreteAlgebra) -> ValidationReport:
    """Every product entry must output only basis vectors of the summed degree."""
    report = ValidationReport()
    degs = alg.degrees()
    for args in sorted(alg.products):
        expected = alg.group.sum(degs[a] for a in args)
        for b in sorted(alg.products[args]):
            if degs[b] != expected:
                report.add("grading", (args, b), f"degree sum {expected}, output degree {degs[b]}")
    return report


def _classify_support(alg: ConcreteAlgebra, pattern: Pattern, support: set[str]) -> Ext | None:
    w_ids = set(alg.w_ids)
    in_w = sorted(support & w_ids)
    in_v = sorted(support - w_ids)
    if not support:
        return None
    mixed_pattern = any(p.is_index for p in pattern) and any(not p.is_index for p in pattern)
    if in_w and in_v:
        raise QuasiMultViolation(pattern, f"support spans both W ({in_w}) and V ({in_v})")
    if in_w:
        if len(in_w) > 1:
            raise QuasiMultViolation(pattern, f"support on several basis lines {in_w}")
        return idx(in_w[0])
    if mixed_pattern:
        raise QuasiMultViolation(pattern, f"mixed pattern lands inside V ({in_v})")
    return V_SYM


def symbolic_of_concrete(alg: ConcreteAlgebra) -> SymbolicTable:
    """Abstract the structure constants into the pattern-level product table.

    V slots in a pattern range over the whole v-basis: the union of the fill
    supports decides the pattern target, and any fill escaping a single basis
    line (or, for mixed patterns, landing in V) is a violation.
    """
    table: dict[Pattern, Ext] = {}
    syms = tuple(idx(i) for i in alg.w_ids) + (V_SYM,)
    for pattern in itertools.product(syms, repeat=alg.arity):
        v_slots = [k for k, p in enumerate(pattern) if not p.is_index]
        support: set[str] = set()
        if not v_slots:
            support = set(alg.products.get(tuple(p.name for p in pattern), {}))
        elif alg.v_ids:
            for fill in itertools.product(alg.v_ids, repeat=len(v_slots)):
                key = list(p.name for p in pattern)
                for slot, vid in zip(v_slots, fill):
                    key[slot] = vid
                support |= set(alg.products.get(tuple(key), {}))
        target = _classify_support(alg, pattern, support)
        if target is not None:
            table[pattern] = target
    return SymbolicTable(alg.arity, alg.w_ids, table)


def validate_algebra(alg: ConcreteAlgebra) -> ValidationReport:
    """Full structural check: bicharacter axioms, grading, quasi-multiplicativity."""
    from .symbols import validate_quasi_mult

    report = validate_bicharacter(alg.bicharacter, alg.group)
    report.merge(validate_grading(alg))
    try:
        sym = symbolic_of_concrete(alg)
    except QuasiMultViolation as exc:
        pattern = "(" + ",".join(fmt_ext(x) for x in exc.pattern) + ")"
        report.add("quasi-multiplicativity", (pattern,), exc.detail)
    else:
        report.merge(validate_quasi_mult(sym))
    return report
