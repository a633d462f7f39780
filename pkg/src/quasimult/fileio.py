"""Algebra documents: JSON grammar, canonical serialization, validated parsing."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import ConcreteAlgebra, validate_algebra
from .groups import Bicharacter, BicharacterTableError, GradingGroup
from .validation import ValidationReport


class AlgebraFileError(ValueError):
    """Base for document-level failures."""


class AlgebraSyntaxError(AlgebraFileError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        loc = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(f"{message}{loc}")


class AlgebraValidationError(AlgebraFileError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("algebra fails validation:\n" + report.describe())


def _rational(value) -> Fraction:
    if isinstance(value, bool):
        raise AlgebraSyntaxError(f"expected rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraSyntaxError(f"bad rational {value!r}: {exc}") from None
    raise AlgebraSyntaxError(f"expected rational string, got {value!r}")


def _degree(value, k: int) -> tuple[int, ...]:
    if not isinstance(value, list) or len(value) != k or not all(isinstance(x, int) for x in value):
        raise AlgebraSyntaxError(f"degree {value!r} must be a list of {k} integers")
    return tuple(value)


def _basis_list(doc, key: str, k: int) -> list[tuple[str, tuple[int, ...]]]:
    entries = doc.get(key, [])
    if not isinstance(entries, list):
        raise AlgebraSyntaxError(f"{key} must be a list")
    out = []
    seen = set()
    for entry in entries:
        if not isinstance(entry, dict) or "id" not in entry or "degree" not in entry:
            raise AlgebraSyntaxError(f"{key} entries need 'id' and 'degree', got {entry!r}")
        bid = str(entry["id"])
        if bid in seen:
            raise AlgebraSyntaxError(f"duplicate basis id {bid!r} in {key}")
        seen.add(bid)
        out.append((bid, _degree(entry["degree"], k)))
    return out


def _bicharacter(doc, group: GradingGroup) -> Bicharacter:
    spec = doc.get("bicharacter", "trivial")
    if spec == "trivial":
        return Bicharacter.trivial(group)
    if spec == "super":
        try:
            return Bicharacter.super(group)
        except ValueError as exc:
            raise AlgebraSyntaxError(str(exc)) from None
    if isinstance(spec, dict) and "entries" in spec:
        table = {}
        k = len(group.orders)
        for entry in spec["entries"]:
            g = group.reduce(_degree(entry["g"], k))
            h = group.reduce(_degree(entry["h"], k))
            value = _rational(entry["value"])
            if value == 0:
                raise AlgebraSyntaxError(f"bicharacter value at ({g}, {h}) must be nonzero")
            table[(g, h)] = value
        return Bicharacter(group, table, kind="explicit")
    raise AlgebraSyntaxError(f"bicharacter must be 'trivial', 'super' or an entry table, got {spec!r}")


def parse_document(text: str) -> tuple[ConcreteAlgebra, str | None]:
    """Parse and validate an algebra document; returns the declared scheme too."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise AlgebraSyntaxError("document must be a JSON object")
    for key in ("arity", "group", "w_basis"):
        if key not in doc:
            raise AlgebraSyntaxError(f"missing required field {key!r}")
    arity = doc["arity"]
    if not isinstance(arity, int) or arity < 2:
        raise AlgebraSyntaxError(f"arity must be an integer >= 2, got {arity!r}")
    orders = doc["group"]
    if not isinstance(orders, list) or not orders or not all(isinstance(m, int) and m >= 1 for m in orders):
        raise AlgebraSyntaxError(f"group must be a nonempty list of positive cyclic orders, got {orders!r}")
    group = GradingGroup(tuple(orders))
    k = len(group.orders)
    w_basis = _basis_list(doc, "w_basis", k)
    v_basis = _basis_list(doc, "v_basis", k)
    eps = _bicharacter(doc, group)
    products = {}
    entries = doc.get("products", [])
    if not isinstance(entries, list):
        raise AlgebraSyntaxError("products must be a list")
    for entry in entries:
        if not isinstance(entry, dict) or "args" not in entry or "result" not in entry:
            raise AlgebraSyntaxError(f"product entries need 'args' and 'result', got {entry!r}")
        args = tuple(str(a) for a in entry["args"])
        if args in products:
            raise AlgebraSyntaxError(f"duplicate product entry for args {list(args)}")
        result = {}
        for pair in entry["result"]:
            if not isinstance(pair, list) or len(pair) != 2:
                raise AlgebraSyntaxError(f"result entries are [basis_id, rational], got {pair!r}")
            bid = str(pair[0])
            if bid in result:
                raise AlgebraSyntaxError(f"duplicate result id {bid!r} for args {list(args)}")
            result[bid] = _rational(pair[1])
        products[args] = result
    try:
        alg = ConcreteAlgebra.create(arity, group, eps, w_basis, v_basis, products)
    except ValueError as exc:
        raise AlgebraSyntaxError(str(exc)) from None
    try:
        report = validate_algebra(alg)
    except BicharacterTableError as exc:
        raise AlgebraSyntaxError(str(exc)) from None
    if not report.ok:
        raise AlgebraValidationError(report)
    scheme = doc.get("identity_scheme")
    if scheme is not None and not isinstance(scheme, str):
        raise AlgebraSyntaxError(f"identity_scheme must be a string, got {scheme!r}")
    return alg, scheme


def parse_algebra(text: str) -> ConcreteAlgebra:
    return parse_document(text)[0]


def serialize(alg: ConcreteAlgebra, identity_scheme: str | None = None) -> str:
    """Canonical document: sorted keys, sorted basis ids, reduced rationals."""
    doc: dict = {
        "arity": alg.arity,
        "group": list(alg.group.orders),
        "w_basis": [{"id": i, "degree": list(d)} for i, d in alg.w_basis],
        "v_basis": [{"id": i, "degree": list(d)} for i, d in alg.v_basis],
    }
    eps = alg.bicharacter
    if eps.kind in ("trivial", "super"):
        doc["bicharacter"] = eps.kind
    else:
        doc["bicharacter"] = {
            "entries": [
                {"g": list(g), "h": list(h), "value": str(val)}
                for (g, h), val in sorted(eps.table.items())
            ]
        }
    doc["products"] = [
        {"args": list(args), "result": [[b, str(c)] for b, c in sorted(alg.products[args].items())]}
        for args in sorted(alg.products)
    ]
    if identity_scheme is not None:
        doc["identity_scheme"] = identity_scheme
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
