"""Minimality: the transport-witness condition, the criterion, and a brute oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import ConcreteAlgebra, eval_product
from .connections import arg_packs, connection_classes, eval_mu
from .decomposition import (
    IdealDescription,
    center,
    component_ideal,
    decompose,
    is_ideal,
    is_tight,
    joint_rows,
)
from .linalg import (
    Row,
    Vec,
    coords_in_rref,
    from_row,
    intersection_dim,
    rref,
    to_row,
    vec_is_zero,
)
from .perms import all_perms
from .symbols import Ext, V_SYM, fmt_ext, fmt_pack, idx
from .validation import InternalConsistencyError


class OracleBoundExceeded(ValueError):
    """The brute-force candidate enumeration was asked to run past its bounds."""


@dataclass
class MuMembershipWitness:
    """A transport membership with no realizing product: the index, the tuple,
    and every candidate product that was evaluated."""

    index: str
    head: Ext
    tail: tuple[Ext, ...]
    products: list[tuple[tuple[int, ...], tuple[str, ...], Vec]] = field(default_factory=list)

    def describe(self) -> str:
        return f"index {self.index}, tuple ({fmt_ext(self.head)},{fmt_pack(self.tail)[1:-1]})"


@dataclass
class MinimalityVerdict:
    verdict: str                      # "minimal" | "not-minimal" | "hypotheses-not-met"
    method: str                       # "theorem" | "brute-force"
    witness_ideal: IdealDescription | None = None
    failed_hypotheses: list[str] = field(default_factory=list)
    mu_witness: MuMembershipWitness | None = None
    notes: str = ""


def _slot_fills(alg: ConcreteAlgebra, symbols: tuple[Ext, ...]):
    """All concrete argument lists for a symbol tuple: indices stay themselves
    (barred ones too, their phantom partner being zero), V slots run over the
    v-basis."""
    choices = []
    for s in symbols:
        if s.is_index:
            choices.append((s.name,))
        else:
            choices.append(tuple(alg.v_ids))
    if any(len(c) == 0 for c in choices):
        return
    yield from itertools.product(*choices)


def is_mu_quasi_multiplicative(alg: ConcreteAlgebra) -> tuple[bool, MuMembershipWitness | None]:
    """Every transport membership must be realized by an actual product.

    For each head symbol and homogeneous tail with index i in the transport
    set, some slot permutation and some V-fill has to produce a nonzero
    multiple of the i-th basis vector.  Returns the first failure.
    """
    sym = alg.symbolic()
    heads = [s for s in sym.symbols()] + [Ext(s.name, True) for s in sym.symbols()]
    packs = arg_packs(sym)
    perms = all_perms(alg.arity)
    for head in heads:
        for tail in packs:
            hits = sorted(x.name for x in eval_mu(sym, head, tail) if x.is_index)
            if not hits:
                continue
            symbols = (head,) + tail
            fills = list(_slot_fills(alg, symbols))
            for i in hits:
                witness = MuMembershipWitness(i, head, tail)
                found = False
                for sigma in perms:
                    for fill in fills:
                        prod = eval_product(alg, sigma, [alg.unit(a) for a in fill])
                        witness.products.append((sigma, fill, prod))
                        if not vec_is_zero(prod) and set(prod) == {i}:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    return False, witness
    return True, None


def minimal_by_theorem(alg: ConcreteAlgebra) -> MinimalityVerdict:
    """Criterion route: under the transport-witness and tightness hypotheses,
    minimality is exactly connectedness of the whole index set."""
    failed = []
    muqm_ok, mu_wit = is_mu_quasi_multiplicative(alg)
    if not muqm_ok:
        failed.append("mu-quasi-multiplicativity")
    tight_ok, tight_wit = is_tight(alg)
    if not tight_ok:
        failed.append("tightness")
    if failed:
        notes = ""
        if not tight_ok:
            notes = f"v-basis vector outside generated span: {tight_wit}"
        return MinimalityVerdict("hypotheses-not-met", "theorem",
                                 failed_hypotheses=failed, mu_witness=mu_wit, notes=notes)
    partition = connection_classes(alg.symbolic())
    if len(partition.classes) == 1:
        return MinimalityVerdict("minimal", "theorem")
    witness = component_ideal(alg, partition.classes[0], partition)
    return MinimalityVerdict("not-minimal", "theorem", witness_ideal=witness)


def _candidate_subspaces(alg: ConcreteAlgebra) -> list[tuple[Row, ...]]:
    """Distinct spans of subsets of the homogeneous generating family
    (product-generated V-vectors plus the v-basis), smallest first."""
    family: list[Row] = []
    sym = alg.symbolic()
    for args in itertools.product(alg.w_ids, repeat=alg.arity):
        if sym.target(tuple(idx(a) for a in args)) == V_SYM:
            vec = alg.product_of_ids(args)
            if not vec_is_zero(vec):
                family.append(to_row(vec, alg.v_ids))
    family.extend(to_row(alg.unit(i), alg.v_ids) for i in alg.v_ids)
    spans: dict[tuple[Row, ...], None] = {(): None}
    frontier = [()]
    while frontier:
        nxt = []
        for rows in frontier:
            for gen in family:
                grown, _ = rref(list(rows) + [gen])
                key = tuple(grown)
                if key not in spans:
                    spans[key] = None
                    nxt.append(key)
        frontier = nxt
    return sorted(spans, key=lambda rows: (len(rows), rows))


def minimal_brute_force(alg: ConcreteAlgebra, max_i: int = 6, max_v: int = 4) -> MinimalityVerdict:
    """Definition route: enumerate every inherited-basis candidate and test it.

    V-parts range over spans of subsets of a finite homogeneous generating
    family, which captures every class ideal; the verdict notes record that
    restriction.  The first proper nonzero ideal (subsets ordered by size then
    lexicographically, subspaces by dimension) is the witness.
    """
    if len(alg.w_ids) > max_i:
        raise OracleBoundExceeded(f"|I| = {len(alg.w_ids)} exceeds oracle bound {max_i}")
    if len(alg.v_ids) > max_v:
        raise OracleBoundExceeded(f"dim V = {len(alg.v_ids)} exceeds oracle bound {max_v}")
    notes = "oracle-complete over the generating family"
    subspaces = _candidate_subspaces(alg)
    w_ids = sorted(alg.w_ids)
    subsets = []
    for size in range(1, len(w_ids)):
        subsets.extend(itertools.combinations(w_ids, size))
    for subset in subsets:
        for rows in subspaces:
            cand = IdealDescription(frozenset(subset), rows, "candidate")
            ok, _ = is_ideal(alg, cand)
            if ok:
                return MinimalityVerdict("not-minimal", "brute-force", witness_ideal=cand, notes=notes)
    full = frozenset(w_ids)
    for rows in subspaces:
        if len(rows) == len(alg.v_ids):
            continue
        cand = IdealDescription(full, rows, "candidate")
        ok, _ = is_ideal(alg, cand)
        if ok:
            return MinimalityVerdict("not-minimal", "brute-force", witness_ideal=cand, notes=notes)
    return MinimalityVerdict("minimal", "brute-force", notes=notes)


def restrict_to_ideal(alg: ConcreteAlgebra, ideal: IdealDescription) -> ConcreteAlgebra:
    """The ideal as an algebra of its own, keeping degrees and the sign table.

    V-part rows that are plain v-basis vectors keep their ids; genuine
    combinations get fresh ``v<k>`` ids.  Structure constants are re-expressed
    in the inherited coordinates, which is possible exactly because the ideal
    is closed under products.
    """
    w_ids = sorted(ideal.w_part)
    unit_rows = {to_row(alg.unit(i), alg.v_ids): i for i in alg.v_ids}
    new_v: list[tuple[str, Row]] = []
    fresh = 0
    taken = set(w_ids)
    for row in ideal.v_rows:
        name = unit_rows.get(row)
        if name is None or name in taken:
            fresh += 1
            name = f"v{fresh}"
            while name in taken:
                name = "v" + name
        taken.add(name)
        new_v.append((name, row))
    degs = alg.degrees()
    v_entries = []
    for name, row in new_v:
        vec = from_row(row, alg.v_ids)
        row_degs = {degs[b] for b in vec}
        if len(row_degs) != 1:
            raise ValueError(f"v-part row {row} is not homogeneous")
        v_entries.append((name, row_degs.pop()))
    basis_vecs: dict[str, Vec] = {i: alg.unit(i) for i in w_ids}
    for name, row in new_v:
        basis_vecs[name] = from_row(row, alg.v_ids)
    v_names = [name for name, _ in new_v]
    _, v_pivots = rref(ideal.v_rows)
    local_order = w_ids + v_names
    w_set, v_set = set(w_ids), set(alg.v_ids)
    products = {}
    for args in itertools.product(local_order, repeat=alg.arity):
        vec = eval_product(alg, tuple(range(1, alg.arity + 1)), [basis_vecs[a] for a in args])
        if vec_is_zero(vec):
            continue
        if any(b not in w_set and b not in v_set for b in vec):
            raise InternalConsistencyError(f"product {args} escapes the ideal during restriction")
        result = {b: c for b, c in vec.items() if b in w_set}
        v_row = to_row({b: c for b, c in vec.items() if b in v_set}, alg.v_ids)
        coeffs = coords_in_rref(ideal.v_rows, v_pivots, v_row)
        if coeffs is None:
            raise InternalConsistencyError(f"product {args} escapes the ideal during restriction")
        result.update({name: c for name, c in zip(v_names, coeffs) if c})
        products[args] = result
    w_entries = [(i, degs[i]) for i in w_ids]
    return ConcreteAlgebra.create(alg.arity, alg.group, alg.bicharacter, w_entries, v_entries, products)


@dataclass
class ComponentCheck:
    cls: tuple[str, ...]
    theorem: MinimalityVerdict
    oracle: MinimalityVerdict | None
    oracle_skipped: str = ""


@dataclass
class MinimalDecompositionReport:
    status: str                       # "ok" | "hypotheses-not-met"
    failed_hypotheses: list[str] = field(default_factory=list)
    sum_direct: bool | None = None
    components: list[ComponentCheck] = field(default_factory=list)

    @property
    def all_minimal(self) -> bool:
        return self.status == "ok" and all(
            c.theorem.verdict == "minimal" and (c.oracle is None or c.oracle.verdict == "minimal")
            for c in self.components
        )


def minimal_decomposition_check(alg: ConcreteAlgebra, max_i: int = 6, max_v: int = 4) -> MinimalDecompositionReport:
    """Verify the final decomposition statement on a concrete algebra:
    centerless + tight + transport-witnessed implies a direct sum of minimal
    component ideals (each checked by both routes where bounds permit)."""
    failed = []
    if center(alg):
        failed.append("centerless")
    tight_ok, _ = is_tight(alg)
    if not tight_ok:
        failed.append("tightness")
    muqm_ok, _ = is_mu_quasi_multiplicative(alg)
    if not muqm_ok:
        failed.append("mu-quasi-multiplicativity")
    if failed:
        return MinimalDecompositionReport("hypotheses-not-met", failed_hypotheses=failed)
    decomp = decompose(alg)
    direct = True
    joints = [rref(joint_rows(alg, ideal))[0] for ideal in decomp.ideals]
    for a, b in itertools.combinations(range(len(joints)), 2):
        if intersection_dim(joints[a], joints[b]) != 0:
            direct = False
    report = MinimalDecompositionReport("ok", sum_direct=direct)
    for cls, ideal in zip(decomp.partition.classes, decomp.ideals):
        sub = restrict_to_ideal(alg, ideal)
        thm = minimal_by_theorem(sub)
        oracle = None
        skipped = ""
        if len(sub.w_ids) <= max_i and len(sub.v_ids) <= max_v:
            oracle = minimal_brute_force(sub, max_i, max_v)
        else:
            skipped = "oracle bounds exceeded"
        report.components.append(ComponentCheck(tuple(sorted(cls)), thm, oracle, skipped))
    return report
