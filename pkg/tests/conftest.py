from __future__ import annotations

from pathlib import Path

from quasimult import ConcreteAlgebra, parse_document

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
DATA_DIR = Path(__file__).resolve().parent / "data"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.json"


def load_fixture(name: str) -> ConcreteAlgebra:
    alg, _ = parse_document(fixture_path(name).read_text())
    return alg


def relabel(alg: ConcreteAlgebra, mapping: dict[str, str]) -> ConcreteAlgebra:
    """The same algebra with renamed basis ids."""

    def m(i: str) -> str:
        return mapping.get(i, i)

    products = {
        tuple(m(a) for a in args): {m(b): c for b, c in res.items()}
        for args, res in alg.products.items()
    }
    return ConcreteAlgebra.create(
        alg.arity, alg.group, alg.bicharacter,
        [(m(i), d) for i, d in alg.w_basis],
        [(m(i), d) for i, d in alg.v_basis],
        products,
    )
