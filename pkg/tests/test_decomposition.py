import itertools
from fractions import Fraction

import pytest

from quasimult import (
    center,
    component_ideal,
    connection_classes,
    decompose,
    eval_product,
    generate_random,
    is_ideal,
    is_tight,
    make_candidate,
    orthogonality_witness,
    simplicity_obstruction,
)
from quasimult.algebra import ConcreteAlgebra
from quasimult.decomposition import IdealDescription, cross_products_zero, joint_rows, v_part_intersections
from quasimult.fixtures import (
    grp2_double,
    heisenberg,
    heisenberg_u,
    sl2,
    so3,
    so3_double,
    two_block,
    zero,
    zero_u,
)
from quasimult.generator import GeneratorParams
from quasimult.groups import Bicharacter, GradingGroup
from quasimult.linalg import rank, vec_is_zero

F = Fraction


def test_component_ideal_fixture_values():
    heis = heisenberg()
    ideal = component_ideal(heis, frozenset({"1", "2"}))
    assert ideal.w_part == {"1", "2"}
    assert ideal.v_rows == ((F(1),),)
    z = zero()
    ideal = component_ideal(z, frozenset({"1"}))
    assert ideal.w_part == {"1"} and ideal.v_rows == ()
    tb = two_block()
    ideal = component_ideal(tb, frozenset({"3"}))
    assert ideal.w_part == {"3"} and ideal.v_rows == ()
    with pytest.raises(ValueError):
        component_ideal(tb, frozenset({"1", "3"}))


def test_is_ideal_whole_algebra_and_heisenberg():
    heis = heisenberg()
    whole = make_candidate(heis, ["1", "2"], [[1]])
    assert is_ideal(heis, whole) == (True, None)
    small = make_candidate(heis, ["1"], [])
    ok, witness = is_ideal(heis, small)
    assert not ok
    assert witness.product == {"z": F(1)} or witness.product == {"z": F(-1)}
    good = make_candidate(heis, ["1"], [[1]])
    assert is_ideal(heis, good) == (True, None)


def test_candidate_malformation():
    heis_u = heisenberg_u()
    with pytest.raises(ValueError, match="dependent"):
        make_candidate(heis_u, ["1"], [[1, 0], [2, 0]])
    group = GradingGroup((2,))
    graded = ConcreteAlgebra.create(
        2, group, Bicharacter.trivial(group),
        [("1", (0,))], [("u", (0,)), ("z", (1,))], {},
    )
    with pytest.raises(ValueError, match="homogeneous"):
        make_candidate(graded, ["1"], [[1, 1]])


def test_decompose_fixture_values():
    d = decompose(two_block())
    assert d.partition.describe() == "{{1,2},{3}}"
    assert [(sorted(i.w_part), i.v_rows) for i in d.ideals] == [
        (["1", "2"], ((F(1),),)),
        (["3"], ()),
    ]
    assert d.u_rows == ()

    d = decompose(zero_u())
    assert d.u_rows == ((F(1),),)
    assert [(sorted(i.w_part), i.v_rows) for i in d.ideals] == [(["1"], ()), (["2"], ())]

    d = decompose(heisenberg_u())  # v-basis order is (u, z)
    assert d.u_rows == ((F(1), F(0)),)
    assert [(sorted(i.w_part), i.v_rows) for i in d.ideals] == [(["1", "2"], ((F(0), F(1)),))]


def test_decompose_span_identity():
    for alg in (two_block(), heisenberg_u(), zero_u(), grp2_double(), so3_double()):
        d = decompose(alg)
        rows = [tuple([F(0)] * len(alg.w_ids)) + tuple(r) for r in d.u_rows]
        total = len(d.u_rows)
        for ideal in d.ideals:
            rows.extend(joint_rows(alg, ideal))
            total += len(ideal.w_part) + ideal.v_dim
        assert rank(rows) == alg.dim
        assert total >= alg.dim


def test_orthogonality_on_fixtures():
    assert orthogonality_witness(two_block(), frozenset({"1", "2"}), frozenset({"3"})) == (True, None)
    assert orthogonality_witness(zero(), frozenset({"1"}), frozenset({"2"})) == (True, None)
    with pytest.raises(ValueError):
        orthogonality_witness(zero(), frozenset({"1"}), frozenset({"1"}))


def test_planted_cross_product_is_detected():
    """The witness search itself, pointed at an artificially split pair."""
    group = GradingGroup((1,))
    alg = ConcreteAlgebra.create(
        2, group, Bicharacter.trivial(group),
        [("1", (0,)), ("2", (0,)), ("3", (0,))], [],
        {("1", "3"): {"1": 1}},
    )
    a = IdealDescription(frozenset({"1"}), (), "candidate")
    b = IdealDescription(frozenset({"3"}), (), "candidate")
    ok, witness = cross_products_zero(alg, a, b)
    assert not ok
    assert witness.args == ("1", "3")
    assert witness.product == {"1": F(1)}
    # and the connection machinery indeed refuses to split 1 from 3
    partition = connection_classes(alg.symbolic())
    assert partition.class_of("1") == partition.class_of("3")


def test_center_fixture_values():
    z = zero()
    assert len(center(z)) == z.dim
    assert center(sl2()) == ()
    heis = heisenberg()
    rows = center(heis)
    assert rows == ((F(0), F(0), F(1)),)  # order (1, 2, z)
    assert center(so3()) == ()


def test_center_is_closed_under_products():
    for alg in (heisenberg(), two_block(), zero_u()):
        rows = center(alg)
        units = [alg.unit(i) for i in alg.all_ids]
        for row in rows:
            vec = {b: c for b, c in zip(alg.all_ids, row) if c}
            for sigma in ((1, 2), (2, 1)):
                for other in units:
                    assert vec_is_zero(eval_product(alg, sigma, [vec, other]))


def test_is_tight_fixture_values():
    assert is_tight(zero()) == (True, None)       # V = 0
    assert is_tight(heisenberg()) == (True, None)
    assert is_tight(heisenberg_u()) == (False, "u")
    assert is_tight(zero_u()) == (False, "u")


def test_simplicity_obstruction():
    ideal = simplicity_obstruction(two_block())
    assert ideal is not None
    assert is_ideal(two_block(), ideal)[0]
    assert simplicity_obstruction(sl2()) is None
    assert simplicity_obstruction(so3()) is None
    ideal = simplicity_obstruction(zero())
    assert ideal.w_part in ({"1"}, {"2"}) and ideal.v_rows == ()


def test_multiplicative_decomposition_property():
    """V = 0 regime: component ideals verify, cross products vanish, classes
    partition the index set."""
    for seed in range(80):
        n = 2 if seed % 2 else 3
        alg = generate_random(GeneratorParams(arity=n, n_indices=2 + seed % 5,
                                              density=(0.2, 0.4, 0.6)[seed % 3], seed=seed))
        d = decompose(alg)
        assert d.u_rows == ()
        covered = sorted(i for ideal in d.ideals for i in ideal.w_part)
        assert covered == sorted(alg.w_ids)
        for ideal in d.ideals:
            assert is_ideal(alg, ideal)[0]
        for a, b in itertools.combinations(d.ideals, 2):
            assert cross_products_zero(alg, a, b)[0]


def test_v_part_intersections_reported():
    d = decompose(so3_double())
    assert v_part_intersections(d) == {(0, 1): 0}
