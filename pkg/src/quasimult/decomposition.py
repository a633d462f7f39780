"""Per-class ideals, the complement, and the structural checks around them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ConcreteAlgebra, eval_product
from .connections import ConnectionPartition, connection_classes
from .linalg import (
    Row,
    Vec,
    extend_independent,
    fmt_vec,
    from_row,
    in_span,
    intersection_dim,
    nullspace,
    rank,
    rref,
    to_row,
    vec_is_zero,
)
from .perms import all_perms
from .symbols import V_SYM, idx


@dataclass(frozen=True)
class IdealDescription:
    """Candidate or computed ideal: index subset plus an exact V-part basis.

    ``v_rows`` are reduced-row-echelon coordinates over the algebra's v-basis.
    """

    w_part: frozenset[str]
    v_rows: tuple[Row, ...]
    provenance: str = "computed"

    @property
    def v_dim(self) -> int:
        return len(self.v_rows)

    def describe(self, alg: ConcreteAlgebra) -> str:
        w = "{" + ",".join(sorted(self.w_part)) + "}"
        vs = "[" + "; ".join(fmt_vec(from_row(r, alg.v_ids), alg.v_ids) for r in self.v_rows) + "]"
        return f"W={w} V={vs}"


@dataclass(frozen=True)
class Decomposition:
    """One ideal per connection class plus a complement of the summed V-parts."""

    partition: ConnectionPartition
    ideals: tuple[IdealDescription, ...]
    u_rows: tuple[Row, ...]

    @property
    def u_dim(self) -> int:
        return len(self.u_rows)


@dataclass
class ClosureWitness:
    sigma: tuple[int, ...]
    args: tuple[str, ...]
    product: Vec

    def describe(self) -> str:
        return f"sigma={self.sigma} args=({', '.join(self.args)}) -> {self.product}"


def _embed_v_row(alg: ConcreteAlgebra, row: Row) -> Row:
    return tuple([Fraction(0)] * len(alg.w_ids)) + tuple(row)


def joint_rows(alg: ConcreteAlgebra, ideal: IdealDescription) -> list[Row]:
    rows = [to_row(alg.unit(i), alg.all_ids) for i in sorted(ideal.w_part)]
    rows.extend(_embed_v_row(alg, r) for r in ideal.v_rows)
    return rows


def _row_degree(alg: ConcreteAlgebra, vec: Vec):
    degs = {alg.degree_of(b) for b in vec}
    if len(degs) > 1:
        return None
    return degs.pop() if degs else alg.group.identity


def make_candidate(alg: ConcreteAlgebra, w_part, raw_v_rows, provenance: str = "candidate") -> IdealDescription:
    """Build a candidate ideal, rejecting malformed V-parts outright."""
    w = frozenset(str(i) for i in w_part)
    unknown = w - set(alg.w_ids)
    if unknown:
        raise ValueError(f"unknown w-basis ids in candidate: {sorted(unknown)}")
    raw = [tuple(Fraction(c) for c in row) for row in raw_v_rows]
    for row in raw:
        if len(row) != len(alg.v_ids):
            raise ValueError(f"v-part row has length {len(row)}, expected {len(alg.v_ids)}")
        if _row_degree(alg, from_row(row, alg.v_ids)) is None:
            raise ValueError(f"v-part row {row} is not homogeneous")
    rows, _ = rref(raw)
    if len(rows) != len(raw):
        raise ValueError("dependent V-part rows in candidate")
    return IdealDescription(w, tuple(rows), provenance)


def component_ideal(alg: ConcreteAlgebra, cls: frozenset[str],
                    partition: ConnectionPartition | None = None) -> IdealDescription:
    """The ideal attached to one connection class: its basis lines plus the
    V-vectors produced by in-class products."""
    sym = alg.symbolic()
    if partition is None:
        partition = connection_classes(sym)
    cls = frozenset(cls)
    if cls not in set(partition.classes):
        raise ValueError(f"{sorted(cls)} is not a class of the computed partition")
    v_vecs = []
    members = sorted(cls)
    for args in itertools.product(members, repeat=alg.arity):
        if sym.target(tuple(idx(a) for a in args)) == V_SYM:
            vec = alg.product_of_ids(args)
            if not vec_is_zero(vec):
                v_vecs.append(to_row(vec, alg.v_ids))
    rows, _ = rref(v_vecs)
    return IdealDescription(cls, tuple(rows), "computed")


def is_ideal(alg: ConcreteAlgebra, cand: IdealDescription) -> tuple[bool, ClosureWitness | None]:
    """Brute-force closure check of the candidate under products with all of L.

    The candidate must be graded (homogeneous V-part rows) and independent;
    malformed candidates raise.  Returns the first violating product otherwise.
    """
    if rank(cand.v_rows) != len(cand.v_rows):
        raise ValueError("dependent V-part rows in candidate")
    for row in cand.v_rows:
        if _row_degree(alg, from_row(row, alg.v_ids)) is None:
            raise ValueError(f"v-part row {row} is not homogeneous")
    basis_rows, pivots = rref(joint_rows(alg, cand))
    gens: list[tuple[str, Vec]] = [(i, alg.unit(i)) for i in sorted(cand.w_part)]
    gens.extend((fmt_vec(from_row(r, alg.v_ids), alg.v_ids), from_row(r, alg.v_ids)) for r in cand.v_rows)
    unit_args = [(i, alg.unit(i)) for i in alg.all_ids]
    for sigma in all_perms(alg.arity):
        for label, gen in gens:
            for tail in itertools.product(unit_args, repeat=alg.arity - 1):
                prod = eval_product(alg, sigma, [gen] + [v for _, v in tail])
                if vec_is_zero(prod):
                    continue
                if not in_span(to_row(prod, alg.all_ids), basis_rows, pivots):
                    names = (label,) + tuple(t for t, _ in tail)
                    return False, ClosureWitness(sigma, names, prod)
    return True, None


def cross_products_zero(alg: ConcreteAlgebra, a: IdealDescription,
                        b: IdealDescription) -> tuple[bool, ClosureWitness | None]:
    """Exhaustively test that products touching both ideals vanish."""
    gens_a = [(i, alg.unit(i)) for i in sorted(a.w_part)]
    gens_a.extend((fmt_vec(from_row(r, alg.v_ids), alg.v_ids), from_row(r, alg.v_ids)) for r in a.v_rows)
    gens_b = [(i, alg.unit(i)) for i in sorted(b.w_part)]
    gens_b.extend((fmt_vec(from_row(r, alg.v_ids), alg.v_ids), from_row(r, alg.v_ids)) for r in b.v_rows)
    unit_args = [(i, alg.unit(i)) for i in alg.all_ids]
    for sigma in all_perms(alg.arity):
        for la, ga in gens_a:
            for lb, gb in gens_b:
                for tail in itertools.product(unit_args, repeat=alg.arity - 2):
                    prod = eval_product(alg, sigma, [ga, gb] + [v for _, v in tail])
                    if not vec_is_zero(prod):
                        names = (la, lb) + tuple(t for t, _ in tail)
                        return False, ClosureWitness(sigma, names, prod)
    return True, None


def orthogonality_witness(alg: ConcreteAlgebra, cls_a: frozenset[str],
                          cls_b: frozenset[str]) -> tuple[bool, ClosureWitness | None]:
    """Orthogonality of the ideals attached to two distinct classes."""
    if frozenset(cls_a) == frozenset(cls_b):
        raise ValueError("orthogonality needs two distinct classes")
    partition = connection_classes(alg.symbolic())
    a = component_ideal(alg, frozenset(cls_a), partition)
    b = component_ideal(alg, frozenset(cls_b), partition)
    return cross_products_zero(alg, a, b)


def decompose(alg: ConcreteAlgebra) -> Decomposition:
    """Ideals for every connection class plus a deterministic complement in V.

    The complement extends the summed V-parts by the first v-basis vectors
    (in basis order) that grow the span.
    """
    partition = connection_classes(alg.symbolic())
    ideals = tuple(component_ideal(alg, cls, partition) for cls in partition.classes)
    summed: list[Row] = []
    for ideal in ideals:
        summed.extend(ideal.v_rows)
    sum_rows, _ = rref(summed)
    unit_rows = [to_row(alg.unit(i), alg.v_ids) for i in alg.v_ids]
    u_rows = tuple(extend_independent(sum_rows, unit_rows))
    return Decomposition(partition, ideals, u_rows)


def v_part_intersections(decomp: Decomposition) -> dict[tuple[int, int], int]:
    """Pairwise dimensions of V-part intersections, keyed by class positions."""
    dims = {}
    for (ia, a), (ib, b) in itertools.combinations(enumerate(decomp.ideals), 2):
        dims[(ia, ib)] = intersection_dim(a.v_rows, b.v_rows)
    return dims


def center(alg: ConcreteAlgebra) -> tuple[Row, ...]:
    """Exact solution set of `x multiplies everything to zero`, as RREF rows."""
    order = alg.all_ids
    units = [alg.unit(i) for i in order]
    constraints: list[list[Fraction]] = []
    for sigma in all_perms(alg.arity):
        for tail in itertools.product(units, repeat=alg.arity - 1):
            cols = [eval_product(alg, sigma, [u] + list(tail)) for u in units]
            outputs = set()
            for col in cols:
                outputs |= set(col)
            for out in sorted(outputs):
                constraints.append([col.get(out, Fraction(0)) for col in cols])
    return tuple(nullspace(constraints, len(order)))


def is_tight(alg: ConcreteAlgebra) -> tuple[bool, str | None]:
    """V must be zero or spanned by the V-valued products of basis tuples.

    The witness, when present, is a v-basis id outside the generated span.
    """
    if not alg.v_ids:
        return True, None
    sym = alg.symbolic()
    rows = []
    for args in itertools.product(alg.w_ids, repeat=alg.arity):
        if sym.target(tuple(idx(a) for a in args)) == V_SYM:
            vec = alg.product_of_ids(args)
            if not vec_is_zero(vec):
                rows.append(to_row(vec, alg.v_ids))
    basis, pivots = rref(rows)
    if len(basis) == len(alg.v_ids):
        return True, None
    for vid in alg.v_ids:
        if not in_span(to_row(alg.unit(vid), alg.v_ids), basis, pivots):
            return False, vid
    return True, None


def simplicity_obstruction(alg: ConcreteAlgebra) -> IdealDescription | None:
    """A proper nonzero ideal exhibited from a split partition, if any.

    A single class yields None, which does not certify simplicity.
    """
    partition = connection_classes(alg.symbolic())
    if len(partition.classes) < 2:
        return None
    for cls in partition.classes:
        ideal = component_ideal(alg, cls, partition)
        ok, _ = is_ideal(alg, ideal)
        if ok:
            return ideal
    return None
