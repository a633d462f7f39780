from fractions import Fraction

import pytest

from quasimult import (
    connection_classes,
    eval_mu,
    eval_product,
    generate_random,
    is_ideal,
    is_mu_quasi_multiplicative,
    is_tight,
    minimal_brute_force,
    minimal_by_theorem,
    minimal_decomposition_check,
    restrict_to_ideal,
    validate_algebra,
)
from quasimult.decomposition import component_ideal
from quasimult.fixtures import (
    grp2,
    grp2_double,
    heisenberg,
    heisenberg_u,
    sl2,
    so3,
    so3_double,
    two_block,
    zero,
)
from quasimult.generator import GeneratorParams
from quasimult.linalg import vec_is_zero
from quasimult.minimality import OracleBoundExceeded
from quasimult.symbols import Ext, V_SYM, idx

F = Fraction


def test_mu_qm_vacuous_on_zero_algebra():
    assert is_mu_quasi_multiplicative(zero()) == (True, None)


def test_mu_qm_on_group_table():
    ok, _ = is_mu_quasi_multiplicative(grp2())
    assert ok
    # spot instance: 0 sits in mu(1bar, (1)) and the square of e_1 realizes it
    sym = grp2().symbolic()
    assert idx("0") in eval_mu(sym, Ext("1", True), (idx("1"),))
    assert grp2().product_of_ids(("1", "1")) == {"0": F(1)}


def test_mu_qm_fails_on_sl2_with_genuine_witness():
    alg = sl2()
    ok, witness = is_mu_quasi_multiplicative(alg)
    assert not ok
    # the reported membership really holds and really has no realizing product
    sym = alg.symbolic()
    assert idx(witness.index) in eval_mu(sym, witness.head, witness.tail)
    for sigma, fill, prod in witness.products:
        assert vec_is_zero(prod) or set(prod) != {witness.index}
    # the documented instance: f lands in the transport set of (h, e-bar)
    # but both products of (h, e) are multiples of e alone
    assert idx("f") in eval_mu(sym, idx("h"), (Ext("e", True),))
    assert alg.product_of_ids(("h", "e")) == {"e": F(2)}
    assert alg.product_of_ids(("e", "h")) == {"e": F(-2)}


def test_mu_qm_fails_on_heisenberg():
    ok, witness = is_mu_quasi_multiplicative(heisenberg())
    assert not ok
    assert witness.index == "2"
    assert (witness.head, witness.tail) == (V_SYM, (Ext("1", True),))


def test_minimal_by_theorem_fixtures():
    assert minimal_by_theorem(grp2()).verdict == "minimal"
    assert minimal_by_theorem(so3()).verdict == "minimal"
    v = minimal_by_theorem(sl2())
    assert v.verdict == "hypotheses-not-met"
    assert v.failed_hypotheses == ["mu-quasi-multiplicativity"]
    v = minimal_by_theorem(two_block())
    assert v.verdict == "hypotheses-not-met"
    v = minimal_by_theorem(zero())
    assert v.verdict == "not-minimal"
    assert v.witness_ideal is not None and is_ideal(zero(), v.witness_ideal)[0]


def test_minimal_brute_force_fixtures():
    v = minimal_brute_force(heisenberg())
    assert v.verdict == "not-minimal"
    assert sorted(v.witness_ideal.w_part) == ["1"]
    assert v.witness_ideal.v_rows == ((F(1),),)
    assert is_ideal(heisenberg(), v.witness_ideal)[0]
    assert minimal_brute_force(grp2()).verdict == "minimal"
    assert minimal_brute_force(sl2()).verdict == "minimal"
    assert minimal_brute_force(so3()).verdict == "minimal"
    v = minimal_brute_force(two_block())
    assert v.verdict == "not-minimal"


def test_brute_force_single_generator_is_minimal():
    from quasimult.algebra import ConcreteAlgebra
    from quasimult.groups import Bicharacter, GradingGroup

    g = GradingGroup((1,))
    alg = ConcreteAlgebra.create(2, g, Bicharacter.trivial(g), [("1", (0,))], [], {})
    assert minimal_brute_force(alg).verdict == "minimal"


def test_oracle_bounds():
    alg = generate_random(GeneratorParams(arity=2, n_indices=7, density=0.2, seed=1))
    with pytest.raises(OracleBoundExceeded):
        minimal_brute_force(alg)
    assert minimal_brute_force(alg, max_i=8).verdict in ("minimal", "not-minimal")


def test_heisenberg_regression_story():
    """Connected + tight + no transport witnesses + non-minimal, all at once."""
    heis = heisenberg()
    assert connection_classes(heis.symbolic()).describe() == "{{1,2}}"
    assert is_tight(heis) == (True, None)
    assert not is_mu_quasi_multiplicative(heis)[0]
    assert minimal_brute_force(heis).verdict == "not-minimal"
    assert minimal_by_theorem(heis).verdict == "hypotheses-not-met"


def test_theorem_oracle_agreement_on_filtered_random_tables():
    agreements = 0
    nonzero_tables = 0
    for seed in range(150):
        n = 2 if seed % 2 else 3
        alg = generate_random(GeneratorParams(
            arity=n, n_indices=2 + seed % 4,
            density=(0.05, 0.1, 0.25, 0.4)[seed % 4], seed=seed))
        if not is_mu_quasi_multiplicative(alg)[0] or not is_tight(alg)[0]:
            continue
        thm = minimal_by_theorem(alg)
        oracle = minimal_brute_force(alg, max_i=8)
        assert thm.verdict == oracle.verdict, f"seed {seed}"
        agreements += 1
        nonzero_tables += bool(alg.products)
    assert agreements >= 20
    assert nonzero_tables >= 3


def test_restriction_soundness():
    heis = heisenberg()
    ideal = component_ideal(heis, frozenset({"1", "2"}))
    assert restrict_to_ideal(heis, ideal) == heis
    tb = two_block()
    sub = restrict_to_ideal(tb, component_ideal(tb, frozenset({"1", "2"})))
    assert sub == heisenberg()
    sub3 = restrict_to_ideal(tb, component_ideal(tb, frozenset({"3"})))
    assert sorted(sub3.w_ids) == ["3"] and sub3.v_ids == ()
    assert validate_algebra(sub3).ok
    so3d = so3_double()
    for cls in connection_classes(so3d.symbolic()).classes:
        sub = restrict_to_ideal(so3d, component_ideal(so3d, cls))
        assert validate_algebra(sub).ok
        assert sorted(sub.w_ids) == sorted(cls)
        assert minimal_by_theorem(sub).verdict == "minimal"


def test_restriction_keeps_products_exact():
    tb = two_block()
    sub = restrict_to_ideal(tb, component_ideal(tb, frozenset({"1", "2"})))
    assert eval_product(sub, (1, 2), [sub.unit("1"), sub.unit("2")]) == {"z": F(1)}


def test_minimal_decomposition_check_fixtures():
    for alg in (grp2(), so3()):
        report = minimal_decomposition_check(alg)
        assert report.status == "ok" and report.sum_direct and report.all_minimal
        assert len(report.components) == 1
    for alg in (grp2_double(), so3_double()):
        report = minimal_decomposition_check(alg)
        assert report.status == "ok" and report.sum_direct and report.all_minimal
        assert len(report.components) == 2
    report = minimal_decomposition_check(heisenberg())
    assert report.status == "hypotheses-not-met"
    assert "mu-quasi-multiplicativity" in report.failed_hypotheses
    assert "centerless" in report.failed_hypotheses
    report = minimal_decomposition_check(heisenberg_u())
    assert report.status == "hypotheses-not-met"
    assert "tightness" in report.failed_hypotheses
