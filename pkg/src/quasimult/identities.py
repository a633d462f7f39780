"""Rewriting-identity schemes, their sign-decorated forms, and the checker.

A scheme is a family of multilinear identities; each side is a one-level
nested word over distinct variables.  Decorating a scheme with a bicharacter
attaches to every right-hand word the reordering factor of its variable
sequence relative to the left-hand side, resolved numerically once argument
degrees are known.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ConcreteAlgebra, eval_product
from .groups import Bicharacter
from .linalg import Vec, vec_add, vec_is_zero, vec_scale
from .perms import Perm, identity, is_perm

INNER = None  # marker inside an outer word


@dataclass(frozen=True)
class Word:
    """One-level nested product: ``outer`` holds variable numbers with None
    marking where the inner word (when present) is spliced in."""

    outer: tuple[int | None, ...]
    inner: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.inner is None) != (INNER not in self.outer):
            raise ValueError("inner word and marker must appear together")

    def var_sequence(self) -> tuple[int, ...]:
        seq: list[int] = []
        for s in self.outer:
            if s is INNER:
                seq.extend(self.inner)
            else:
                seq.append(s)
        return tuple(seq)


@dataclass(frozen=True)
class GltTerm:
    """One right-hand term of the rewriting family: coefficient, the two
    permutations, and the (outer, inner) insertion slots."""

    alpha: Fraction
    outer_perm: Perm
    inner_perm: Perm
    outer_slot: int
    inner_slot: int


@dataclass(frozen=True)
class Identity:
    label: str
    nvars: int
    lhs: Word
    rhs: tuple[tuple[Fraction, Word], ...]


@dataclass(frozen=True)
class IdentityScheme:
    arity: int
    identities: tuple[Identity, ...]
    name: str = "scheme"


def glt_identity(arity: int, pos: int, terms) -> Identity:
    """Build the identity for one outer position from term records.

    Variables 0..n-1 are the inner-product arguments of the left side,
    n..2n-2 the outer fillers.
    """
    n = arity
    if not 1 <= pos <= n:
        raise ValueError(f"outer position {pos} out of range for arity {n}")
    outer = []
    for r in range(1, n + 1):
        if r == pos:
            outer.append(INNER)
        else:
            y = r if r < pos else r - 1
            outer.append(n + y - 1)
    lhs = Word(tuple(outer), tuple(range(n)))
    rhs = []
    for term in terms:
        if len(term.outer_perm) != n or not is_perm(term.outer_perm):
            raise ValueError(f"bad outer permutation {term.outer_perm}")
        if len(term.inner_perm) != n - 1 or not is_perm(term.inner_perm):
            raise ValueError(f"bad inner permutation {term.inner_perm}")
        if not (1 <= term.outer_slot <= n and 1 <= term.inner_slot <= n):
            raise ValueError(f"slot pair {(term.outer_slot, term.inner_slot)} out of range")
        if term.alpha == 0:
            raise ValueError("zero coefficient in identity term")
        i, j = term.outer_slot, term.inner_slot
        t_outer = []
        for r in range(1, n + 1):
            t_outer.append(INNER if r == i else term.outer_perm[r - 1] - 1)
        t_inner = []
        for s in range(1, n + 1):
            if s == j:
                t_inner.append(term.outer_perm[i - 1] - 1)
            else:
                y = s if s < j else s - 1
                t_inner.append(n + term.inner_perm[y - 1] - 1)
        rhs.append((Fraction(term.alpha), Word(tuple(t_outer), tuple(t_inner))))
    return Identity(f"pos-{pos}", 2 * n - 1, lhs, tuple(rhs))


def exchange_identity(arity: int, pos: int) -> Identity:
    """Adjacent-slot exchange: swapping slots pos, pos+1 flips the sign (the
    bicharacter factor lands through colorization)."""
    n = arity
    if not 1 <= pos <= n - 1:
        raise ValueError(f"exchange position {pos} out of range for arity {n}")
    vars_ = list(range(n))
    swapped = vars_[:]
    swapped[pos - 1], swapped[pos] = swapped[pos], swapped[pos - 1]
    return Identity(
        f"exchange-{pos}", n,
        Word(tuple(vars_)), ((Fraction(-1), Word(tuple(swapped))),),
    )


def builtin_scheme(name: str, arity: int) -> IdentityScheme:
    """Built-in families: ``leibniz`` (binary), ``n_lie`` (derivation rule plus
    exchanges), ``antisymmetry`` (exchanges only)."""
    if name == "leibniz":
        if arity != 2:
            raise ValueError("the leibniz scheme is binary")
        terms = [
            GltTerm(Fraction(1), (1, 2), (1,), 1, 2),
            GltTerm(Fraction(1), (1, 2), (1,), 2, 2),
        ]
        return IdentityScheme(2, (glt_identity(2, 2, terms),), "leibniz")
    if name == "n_lie":
        if arity < 2:
            raise ValueError("n_lie needs arity at least 2")
        id_out, id_in = identity(arity), identity(arity - 1)
        terms = [GltTerm(Fraction(1), id_out, id_in, i, arity) for i in range(1, arity + 1)]
        idents = [glt_identity(arity, arity, terms)]
        idents.extend(exchange_identity(arity, p) for p in range(1, arity))
        return IdentityScheme(arity, tuple(idents), "n_lie")
    if name == "antisymmetry":
        if arity < 2:
            raise ValueError("antisymmetry needs arity at least 2")
        idents = tuple(exchange_identity(arity, p) for p in range(1, arity))
        return IdentityScheme(arity, idents, "antisymmetry")
    raise ValueError(f"unknown builtin scheme {name!r}")


def parse_scheme(text: str, name: str = "scheme") -> IdentityScheme:
    """Scheme file: {"arity": n, "identities": [{"pos": k, "terms": [...]}]}
    with terms carrying alpha (rational string), image-array permutations and
    the slot pair."""
    doc = json.loads(text)
    arity = int(doc["arity"])
    idents = []
    for ident in doc["identities"]:
        terms = [
            GltTerm(
                Fraction(str(t["alpha"])),
                tuple(int(x) for x in t["outer_perm"]),
                tuple(int(x) for x in t["inner_perm"]),
                int(t["slots"][0]),
                int(t["slots"][1]),
            )
            for t in ident["terms"]
        ]
        idents.append(glt_identity(arity, int(ident["pos"]), terms))
    return IdentityScheme(arity, tuple(idents), name)


def load_scheme(source: str, arity: int) -> IdentityScheme:
    """Builtin name or path to a scheme file."""
    if source in ("leibniz", "n_lie", "antisymmetry"):
        return builtin_scheme(source, arity)
    with open(source, "r", encoding="utf-8") as fh:
        scheme = parse_scheme(fh.read(), name=source)
    if scheme.arity != arity:
        raise ValueError(f"scheme arity {scheme.arity} does not match algebra arity {arity}")
    return scheme


# ---------------------------------------------------------------------------
# sign decoration
# ---------------------------------------------------------------------------

def epsilon_sigma(degrees, sigma: Perm, eps: Bicharacter) -> Fraction:
    """Reordering factor for shuffling a degree list into its sigma arrangement.

    The permutation is realized by adjacent swaps; each swap of current
    neighbours with degrees (g, h) contributes the pairing value at (g, h).
    The result does not depend on the chosen swap sequence.
    """
    if len(degrees) != len(sigma) or not is_perm(sigma):
        raise ValueError(f"permutation {sigma} does not fit {len(degrees)} degrees")
    seq = list(range(1, len(sigma) + 1))
    acc = Fraction(1)
    for r, want in enumerate(sigma):
        p = seq.index(want)
        while p > r:
            left, right = seq[p - 1], seq[p]
            acc *= eps.value(degrees[left - 1], degrees[right - 1])
            seq[p - 1], seq[p] = right, left
            p -= 1
    return acc


@dataclass(frozen=True)
class ColorScheme:
    """A scheme with, per right-hand word, the permutation of the left-hand
    variable sequence that the word realizes; its factor is resolved from
    concrete degrees at evaluation time."""

    scheme: IdentityScheme
    bicharacter: Bicharacter
    term_perms: tuple[tuple[Perm, ...], ...]


def colorize(scheme: IdentityScheme, eps: Bicharacter) -> ColorScheme:
    term_perms = []
    for ident in scheme.identities:
        source = ident.lhs.var_sequence()
        perms = []
        for _, word in ident.rhs:
            target = word.var_sequence()
            if sorted(target) != sorted(source):
                raise ValueError(f"word variables {target} do not match lhs {source}")
            perms.append(tuple(source.index(t) + 1 for t in target))
        term_perms.append(tuple(perms))
    return ColorScheme(scheme, eps, tuple(term_perms))


# ---------------------------------------------------------------------------
# checking
# ---------------------------------------------------------------------------

@dataclass
class IdentityViolation:
    identity: str
    assignment: tuple[str, ...]
    lhs: Vec
    rhs: Vec


@dataclass
class IdentityCheckReport:
    ok: bool
    checked: int
    violations: list[IdentityViolation] = field(default_factory=list)

    @property
    def first(self) -> IdentityViolation | None:
        return self.violations[0] if self.violations else None


def _eval_word(alg: ConcreteAlgebra, word: Word, vecs) -> Vec:
    ident = identity(alg.arity)
    if word.inner is not None:
        inner_vec = eval_product(alg, ident, [vecs[v] for v in word.inner])
        args = [inner_vec if s is INNER else vecs[s] for s in word.outer]
    else:
        args = [vecs[s] for s in word.outer]
    return eval_product(alg, ident, args)


def check_identity(alg: ConcreteAlgebra, colored: ColorScheme) -> IdentityCheckReport:
    """Evaluate every identity on every tuple of basis elements; exact compare.

    Violations are recorded in lexicographic tuple order (identities in scheme
    order), so the first one is deterministic.
    """
    scheme = colored.scheme
    if scheme.arity != alg.arity:
        raise ValueError(f"scheme arity {scheme.arity} does not match algebra arity {alg.arity}")
    eps = colored.bicharacter
    report = IdentityCheckReport(ok=True, checked=0)
    degs = alg.degrees()
    for ident, perms in zip(scheme.identities, colored.term_perms):
        source = ident.lhs.var_sequence()
        for assignment in itertools.product(alg.all_ids, repeat=ident.nvars):
            vecs = [alg.unit(a) for a in assignment]
            seq_degrees = [degs[assignment[v]] for v in source]
            lhs = _eval_word(alg, ident.lhs, vecs)
            rhs: Vec = {}
            for (alpha, word), perm in zip(ident.rhs, perms):
                factor = alpha * epsilon_sigma(seq_degrees, perm, eps)
                rhs = vec_add(rhs, vec_scale(factor, _eval_word(alg, word, vecs)))
            report.checked += 1
            if not vec_is_zero(vec_add(lhs, vec_scale(Fraction(-1), rhs))):
                report.ok = False
                report.violations.append(IdentityViolation(ident.label, assignment, lhs, rhs))
    return report
