"""Curated desk-scale algebras used by the test suites and shipped as files."""

from __future__ import annotations

from fractions import Fraction

from .algebra import ConcreteAlgebra
from .groups import Bicharacter, GradingGroup

_ONE = Fraction(1)


def _make(arity, orders, bich, w, v, products):
    group = GradingGroup(tuple(orders))
    eps = {"trivial": Bicharacter.trivial, "super": Bicharacter.super}[bich](group)
    prods = {tuple(args): {b: Fraction(c) for b, c in res.items()} for args, res in products.items()}
    return ConcreteAlgebra.create(arity, group, eps, w, v, prods)


def zero() -> ConcreteAlgebra:
    return _make(2, [1], "trivial", [("1", (0,)), ("2", (0,))], [], {})


def zero_u() -> ConcreteAlgebra:
    return _make(2, [1], "trivial", [("1", (0,)), ("2", (0,))], [("u", (0,))], {})


def sl2() -> ConcreteAlgebra:
    prods = {
        ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
        ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
        ("h", "f"): {"f": -2}, ("f", "h"): {"f": 2},
    }
    return _make(2, [1], "trivial", [("e", (0,)), ("f", (0,)), ("h", (0,))], [], prods)


def heisenberg() -> ConcreteAlgebra:
    prods = {("1", "2"): {"z": 1}, ("2", "1"): {"z": -1}}
    return _make(2, [1], "trivial", [("1", (0,)), ("2", (0,))], [("z", (0,))], prods)


def heisenberg_u() -> ConcreteAlgebra:
    prods = {("1", "2"): {"z": 1}, ("2", "1"): {"z": -1}}
    return _make(2, [1], "trivial", [("1", (0,)), ("2", (0,))], [("u", (0,)), ("z", (0,))], prods)


def two_block() -> ConcreteAlgebra:
    prods = {("1", "2"): {"z": 1}, ("2", "1"): {"z": -1}, ("3", "3"): {"3": 1}}
    return _make(2, [1], "trivial",
                 [("1", (0,)), ("2", (0,)), ("3", (0,))], [("z", (0,))], prods)


def grp2() -> ConcreteAlgebra:
    prods = {(a, b): {str((int(a) + int(b)) % 2): 1} for a in "01" for b in "01"}
    return _make(2, [2], "trivial", [("0", (0,)), ("1", (1,))], [], prods)


def grp2_double() -> ConcreteAlgebra:
    prods = {(a, b): {str((int(a) + int(b)) % 2): 1} for a in "01" for b in "01"}
    prods.update({(a, b): {str((int(a) + int(b)) % 2 + 2): 1} for a in "23" for b in "23"})
    return _make(2, [2], "trivial",
                 [("0", (0,)), ("1", (1,)), ("2", (0,)), ("3", (1,))], [], prods)


def super_pair() -> ConcreteAlgebra:
    prods = {("h", "q"): {"q": 1}, ("q", "h"): {"q": -1}}
    return _make(2, [2], "super", [("h", (0,)), ("q", (1,))], [], prods)


def super_perturbed() -> ConcreteAlgebra:
    prods = {("h", "q"): {"q": 1}, ("q", "h"): {"q": -1}, ("q", "q"): {"h": 1}}
    return _make(2, [2], "super", [("h", (0,)), ("q", (1,))], [], prods)


def so3() -> ConcreteAlgebra:
    prods = {
        ("1", "2"): {"z": 1}, ("2", "1"): {"z": -1},
        ("z", "1"): {"2": 1}, ("1", "z"): {"2": -1},
        ("z", "2"): {"1": -1}, ("2", "z"): {"1": 1},
    }
    return _make(2, [1], "trivial", [("1", (0,)), ("2", (0,))], [("z", (0,))], prods)


def so3_double() -> ConcreteAlgebra:
    prods = {
        ("1", "2"): {"z1": 1}, ("2", "1"): {"z1": -1},
        ("z1", "1"): {"2": 1}, ("1", "z1"): {"2": -1},
        ("z1", "2"): {"1": -1}, ("2", "z1"): {"1": 1},
        ("3", "4"): {"z2": 1}, ("4", "3"): {"z2": -1},
        ("z2", "3"): {"4": 1}, ("3", "z2"): {"4": -1},
        ("z2", "4"): {"3": -1}, ("4", "z2"): {"3": 1},
    }
    return _make(2, [1], "trivial",
                 [("1", (0,)), ("2", (0,)), ("3", (0,)), ("4", (0,))],
                 [("z1", (0,)), ("z2", (0,))], prods)


def bad_grading() -> ConcreteAlgebra:
    """grp2 with the degree of basis vector 0 flipped to 1; grading breaks."""
    prods = {(a, b): {str((int(a) + int(b)) % 2): 1} for a in "01" for b in "01"}
    return _make(2, [2], "trivial", [("0", (1,)), ("1", (1,))], [], prods)


def bad_quasimult() -> ConcreteAlgebra:
    """Heisenberg variant whose product has support in both W and V."""
    prods = {("1", "2"): {"1": 1, "z": 1}, ("2", "1"): {"z": -1}}
    return _make(2, [1], "trivial", [("1", (0,)), ("2", (0,))], [("z", (0,))], prods)


# name -> (builder, declared identity scheme reference)
FIXTURES: dict[str, tuple] = {
    "zero": (zero, None),
    "zero_u": (zero_u, None),
    "sl2": (sl2, "leibniz"),
    "heisenberg": (heisenberg, "leibniz"),
    "heisenberg_u": (heisenberg_u, "leibniz"),
    "two_block": (two_block, "leibniz"),
    "grp2": (grp2, "schemes/associativity.json"),
    "grp2_double": (grp2_double, "schemes/associativity.json"),
    "super": (super_pair, "leibniz"),
    "super_perturbed": (super_perturbed, "leibniz"),
    "so3": (so3, "leibniz"),
    "so3_double": (so3_double, "leibniz"),
}

NEGATIVE_FIXTURES: dict[str, tuple] = {
    "bad_grading": (bad_grading, None),
    "bad_quasimult": (bad_quasimult, None),
}
