import random
from fractions import Fraction

from quasimult.linalg import (
    coords_in_rref,
    extend_independent,
    fmt_vec,
    from_row,
    in_span,
    intersection_dim,
    nullspace,
    rank,
    rref,
    to_row,
    vec_add,
    vec_scale,
)

F = Fraction


def _mat(rows):
    return [[F(x) for x in row] for row in rows]


def test_rref_known_values():
    rows, pivots = rref(_mat([[2, 4], [1, 2]]))
    assert rows == [(F(1), F(2))]
    assert pivots == [0]
    rows, pivots = rref(_mat([[0, 1, 1], [1, 0, 1], [1, 1, 2]]))
    assert pivots == [0, 1]
    assert rows == [(F(1), F(0), F(1)), (F(0), F(1), F(1))]


def test_rank_and_span_membership():
    basis, pivots = rref(_mat([[1, 2, 0], [0, 0, 3]]))
    assert rank(_mat([[1, 2, 0], [0, 0, 3], [1, 2, 3]])) == 2
    assert in_span([F(2), F(4), F(-3)], basis, pivots)
    assert not in_span([F(0), F(1), F(0)], basis, pivots)


def test_coords_in_rref_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        raw = [[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(5)] for _ in range(3)]
        basis, pivots = rref(raw)
        coeffs = [F(rng.randint(-2, 2)) for _ in basis]
        vec = [sum((c * row[j] for c, row in zip(coeffs, basis)), F(0)) for j in range(5)]
        got = coords_in_rref(basis, pivots, vec)
        assert got == coeffs


def test_nullspace_is_exact_kernel():
    rows = _mat([[1, 1, 0, 0], [0, 0, 1, -1]])
    null = nullspace(rows, 4)
    assert len(null) == 2
    for v in null:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0
    # kernel rank + row rank = dimension
    assert rank(rows) + len(null) == 4


def test_extend_independent_takes_first_growing_vectors():
    basis, _ = rref(_mat([[1, 0, 0]]))
    added = extend_independent(basis, _mat([[2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 5]]))
    assert added == [(F(0), F(1), F(0)), (F(0), F(0), F(5))]


def test_intersection_dim():
    a = [tuple(map(F, [1, 0, 0])), tuple(map(F, [0, 1, 0]))]
    b = [tuple(map(F, [0, 1, 0])), tuple(map(F, [0, 0, 1]))]
    assert intersection_dim(a, b) == 1
    assert intersection_dim(a, [tuple(map(F, [0, 0, 1]))]) == 0


def test_vec_helpers_and_formatting():
    order = ["a", "b"]
    v = vec_add({"a": F(1)}, {"a": F(-1), "b": F(1, 2)})
    assert v == {"b": F(1, 2)}
    assert vec_scale(F(0), {"a": F(3)}) == {}
    assert to_row(v, order) == (F(0), F(1, 2))
    assert from_row((F(0), F(1, 2)), order) == {"b": F(1, 2)}
    assert fmt_vec({"a": F(-1), "b": F(1, 2)}, order) == "-a + 1/2*b"
    assert fmt_vec({}, order) == "0"
