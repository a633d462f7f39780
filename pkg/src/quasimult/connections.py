"""Transport maps over the extended alphabet and the connection partition.

The single-product relation ``eval_a`` reads the pattern table; ``eval_b``
inverts it through the barred alphabet; ``eval_mu`` unions both over all slot
permutations; ``eval_phi`` lifts the union to bar-closed subsets.  Chains of
argument packs then transport one index to another, and the reachability
closure partitions the index set.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .perms import Perm, all_perms, apply
from .symbols import Ext, SymbolicTable, V_SYM, bar, ext_key, unbar
from .validation import InternalConsistencyError

ArgPack = tuple[Ext, ...]
State = frozenset[Ext]


def _check_pack(pack: ArgPack, arity: int) -> bool:
    """Packs must be homogeneous in barring (all barred or all unbarred)."""
    if len(pack) != arity - 1:
        raise ValueError(f"argument pack must have length {arity - 1}, got {len(pack)}")
    return all(p.barred for p in pack) if pack[0].barred else not any(p.barred for p in pack)


def eval_a(sym: SymbolicTable, sigma: Perm, args: ArgPack) -> frozenset[Ext]:
    """Index reached by the sigma-permuted pattern; empty when the product dies.

    The V marker is only reported for all-index or all-V patterns: a mixed
    pattern landing inside V is forbidden by validation, so it contributes
    nothing here.
    """
    if any(a.barred for a in args):
        raise ValueError("eval_a takes unbarred symbols")
    pattern = apply(sigma, args)
    target = sym.target(pattern)
    if target is None:
        return frozenset()
    if target.is_index:
        return frozenset({target})
    if all(p.is_index for p in pattern) or not any(p.is_index for p in pattern):
        return frozenset({V_SYM})
    return frozenset()


def eval_b(sym: SymbolicTable, sigma: Perm, head: Ext, tail: ArgPack) -> frozenset[Ext]:
    """Reverse transport: which symbols reach ``head`` when multiplied into the tail.

    The candidate symbol occupies the head slot of the looked-up pattern and
    sigma permutes the assembled n-tuple.  With an index head every candidate
    (indices and the V marker) is tried; with a V head only all-index tails
    (candidates from I) or all-V tails (the V marker itself) can answer.
    """
    if head.barred:
        raise ValueError("eval_b head must be unbarred")
    if not all(t.barred for t in tail):
        raise ValueError("eval_b tail must be barred")
    unb = tuple(unbar(t) for t in tail)
    target = frozenset({head})
    out = set()
    if head.is_index:
        for cand in sym.index_symbols():
            if eval_a(sym, sigma, (cand,) + unb) == target:
                out.add(cand)
        if eval_a(sym, sigma, (V_SYM,) + unb) == target:
            out.add(V_SYM)
    elif all(t.is_index for t in tail):
        want = frozenset({V_SYM})
        for cand in sym.index_symbols():
            if eval_a(sym, sigma, (cand,) + unb) == want:
                out.add(cand)
    elif not any(t.is_index for t in tail):
        if eval_a(sym, sigma, (V_SYM,) * sym.arity) == frozenset({V_SYM}):
            out.add(V_SYM)
    return frozenset(out)


def eval_mu(sym: SymbolicTable, head: Ext, tail: ArgPack) -> frozenset[Ext]:
    """Union of the transport relations over every slot permutation."""
    if not _check_pack(tail, sym.arity):
        raise ValueError("argument pack mixes barred and unbarred symbols")
    perms = all_perms(sym.arity)
    tail_barred = tail[0].barred
    out: set[Ext] = set()
    if not head.barred and not tail_barred:
        for sigma in perms:
            out |= eval_a(sym, sigma, (head,) + tail)
    elif not head.barred and tail_barred:
        for sigma in perms:
            out |= eval_b(sym, sigma, head, tail)
    elif head.barred and not tail_barred:
        for k in range(len(tail)):
            rest = tuple(bar(t) for j, t in enumerate(tail) if j != k)
            new_tail = (head,) + rest
            for sigma in perms:
                out |= eval_b(sym, sigma, tail[k], new_tail)
    # barred head with barred tail stays empty
    return frozenset(out)


def eval_phi(sym: SymbolicTable, subset: frozenset[Ext], pack: ArgPack) -> State:
    """Bar-closed index set reached from ``subset`` through one argument pack."""
    if not subset:
        return frozenset()
    if any(j.name is None for j in subset):
        raise ValueError("phi operates on subsets of the (barred) index set only")
    reached: set[Ext] = set()
    for j in subset:
        reached |= eval_mu(sym, j, pack)
    reached.discard(V_SYM)
    return frozenset(reached) | frozenset(bar(x) for x in reached)


def arg_packs(sym: SymbolicTable) -> list[ArgPack]:
    """Every homogeneous pack, unbarred ones first, in canonical order."""
    syms = sorted(sym.symbols(), key=ext_key)
    unbarred = [tuple(p) for p in itertools.product(syms, repeat=sym.arity - 1)]
    return unbarred + [tuple(bar(x) for x in p) for p in unbarred]


@dataclass(frozen=True)
class ConnectionCertificate:
    """Replayable witness that ``start`` transports to ``end``.

    ``chain[m]`` is the set reached after applying ``packs[m]``; an empty
    chain is the by-convention self connection.
    """

    start: str
    end: str
    start_variant: Ext
    packs: tuple[ArgPack, ...]
    chain: tuple[State, ...]

    def replay(self, sym: SymbolicTable) -> bool:
        if self.start == self.end and not self.packs:
            return True
        if len(self.packs) != len(self.chain) or not self.packs:
            return False
        if unbar(self.start_variant).name != self.start:
            return False
        current: State = frozenset({self.start_variant})
        for pack, expected in zip(self.packs, self.chain):
            current = eval_phi(sym, current, pack)
            if not current or current != expected:
                return False
        return Ext(self.end, False) in current


class _Search:
    """Breadth-first closure over reachable phi-sets from one start index.

    ``mu_cache`` may be shared between searches over the same table within a
    single operation.
    """

    def __init__(self, sym: SymbolicTable, start: str,
                 mu_cache: dict[tuple[Ext, ArgPack], frozenset[Ext]] | None = None):
        self.sym = sym
        self.start = start
        self.packs = arg_packs(sym)
        self._mu = mu_cache if mu_cache is not None else {}
        self.parents: dict[State, tuple[State, ArgPack] | None] = {}
        self.roots: dict[State, Ext] = {}

    def _phi(self, state: State, pack: ArgPack) -> State:
        reached: set[Ext] = set()
        for j in state:
            key = (j, pack)
            got = self._mu.get(key)
            if got is None:
                got = self._mu[key] = eval_mu(self.sym, j, pack)
            reached |= got
        reached.discard(V_SYM)
        return frozenset(reached) | frozenset(bar(x) for x in reached)

    def run(self, stop_at: str | None = None) -> State | None:
        queue: deque[State] = deque()
        for variant in (Ext(self.start, False), Ext(self.start, True)):
            root: State = frozenset({variant})
            if root not in self.parents:
                self.parents[root] = None
                self.roots[root] = variant
                queue.append(root)
        while queue:
            state = queue.popleft()
            for pack in self.packs:
                nxt = self._phi(state, pack)
                if not nxt or nxt in self.parents:
                    continue
                self.parents[nxt] = (state, pack)
                self.roots[nxt] = self.roots[state]
                if stop_at is not None and Ext(stop_at, False) in nxt:
                    return nxt
                queue.append(nxt)
        return None

    def reached_ids(self) -> frozenset[str]:
        ids = {self.start}
        for state, parent in self.parents.items():
            if parent is None:
                continue
            ids |= {x.name for x in state if x.name is not None}
        return frozenset(ids)

    def certificate(self, final: State, end: str) -> ConnectionCertificate:
        packs: list[ArgPack] = []
        chain: list[State] = []
        state = final
        while True:
            parent = self.parents[state]
            if parent is None:
                break
            prev, pack = parent
            packs.append(pack)
            chain.append(state)
            state = prev
        packs.reverse()
        chain.reverse()
        return ConnectionCertificate(self.start, end, self.roots[final], tuple(packs), tuple(chain))


def find_connection(sym: SymbolicTable, i: str, j: str) -> ConnectionCertificate | None:
    """Shortest transport chain from i to j, or None when the closure misses j."""
    known = set(sym.index_ids)
    if i not in known or j not in known:
        raise KeyError(f"unknown index: {i if i not in known else j}")
    if i == j:
        return ConnectionCertificate(i, j, Ext(i, False), (), ())
    search = _Search(sym, i)
    final = search.run(stop_at=j)
    if final is None:
        return None
    return search.certificate(final, j)


@dataclass(frozen=True)
class ConnectionPartition:
    """Disjoint index classes covering I, canonically ordered by least member."""

    classes: tuple[frozenset[str], ...]
    certificates: dict[tuple[str, str], ConnectionCertificate] = field(default_factory=dict, compare=False)

    def class_of(self, i: str) -> frozenset[str]:
        for cls in self.classes:
            if i in cls:
                return cls
        raise KeyError(i)

    def describe(self) -> str:
        return "{" + ",".join("{" + ",".join(sorted(c)) + "}" for c in self.classes) + "}"


def connection_classes(sym: SymbolicTable) -> ConnectionPartition:
    """Reachability closure per index, verified to be an equivalence relation.

    Symmetry and transitivity are theorems; they are re-checked exhaustively
    here and a failure raises, since it can only mean an implementation bug.
    """
    reach: dict[str, frozenset[str]] = {}
    mu_cache: dict = {}
    for i in sym.index_ids:
        search = _Search(sym, i, mu_cache)
        search.run()
        reach[i] = search.reached_ids()
    for i in sym.index_ids:
        for j in reach[i]:
            if i not in reach[j]:
                raise InternalConsistencyError(f"connection relation not symmetric on ({i}, {j})")
            if not reach[j] <= reach[i]:
                raise InternalConsistencyError(f"connection relation not transitive through ({i}, {j})")
    blocks: list[frozenset[str]] = []
    seen: set[str] = set()
    for i in sorted(sym.index_ids):
        if i not in seen:
            blocks.append(reach[i])
            seen |= reach[i]
    covered = set().union(*blocks) if blocks else set()
    if covered != set(sym.index_ids) or sum(len(b) for b in blocks) != len(sym.index_ids):
        raise InternalConsistencyError("connection classes do not partition the index set")
    blocks.sort(key=lambda b: min(b))
    return ConnectionPartition(tuple(blocks))
