import itertools
import random

import pytest

from conftest import relabel
from quasimult import (
    connection_classes,
    eval_a,
    eval_b,
    eval_mu,
    eval_phi,
    find_connection,
    generate_random,
)
from quasimult.connections import arg_packs
from quasimult.fixtures import heisenberg, sl2, so3, two_block, zero
from quasimult.generator import GeneratorParams
from quasimult.symbols import Ext, V_SYM, bar, idx

ID2 = (1, 2)
SW2 = (2, 1)


def B(name):
    return Ext(name, True)


VB = Ext(None, True)


# ---------------------------------------------------------------------------
# frozen fixture values
# ---------------------------------------------------------------------------

def test_eval_a_fixture_values():
    heis = heisenberg().symbolic()
    assert eval_a(heis, ID2, (idx("1"), idx("2"))) == {V_SYM}
    assert eval_a(heis, SW2, (idx("1"), idx("2"))) == {V_SYM}
    assert eval_a(heis, ID2, (idx("1"), idx("1"))) == frozenset()
    table = sl2().symbolic()
    assert eval_a(table, ID2, (idx("h"), idx("e"))) == {idx("e")}
    assert eval_a(table, SW2, (idx("h"), idx("e"))) == {idx("e")}
    assert eval_a(zero().symbolic(), ID2, (idx("1"), idx("2"))) == frozenset()


def test_eval_a_mixed_pattern_and_all_v():
    table = so3().symbolic()
    assert eval_a(table, ID2, (V_SYM, idx("1"))) == {idx("2")}
    assert eval_a(table, SW2, (V_SYM, idx("1"))) == {idx("2")}  # looks up (1, v)
    assert eval_a(table, ID2, (V_SYM, V_SYM)) == frozenset()


def test_eval_b_fixture_values():
    heis = heisenberg().symbolic()
    assert eval_b(heis, ID2, V_SYM, (B("2"),)) == {idx("1")}
    assert eval_b(heis, ID2, V_SYM, (B("1"),)) == {idx("2")}
    assert eval_b(heis, ID2, idx("1"), (VB,)) == frozenset()
    assert eval_b(zero().symbolic(), ID2, idx("1"), (VB,)) == frozenset()


def test_eval_b_all_v_products_inside_v():
    # one-dimensional V that squares into itself
    from quasimult.algebra import ConcreteAlgebra
    from quasimult.groups import Bicharacter, GradingGroup

    g = GradingGroup((1,))
    alg = ConcreteAlgebra.create(
        2, g, Bicharacter.trivial(g), [("1", (0,))], [("z", (0,))],
        {("z", "z"): {"z": 1}},
    )
    table = alg.symbolic()
    assert eval_b(table, ID2, V_SYM, (VB,)) == {V_SYM}


def test_eval_mu_fixture_values():
    heis = heisenberg().symbolic()
    assert eval_mu(heis, B("1"), (V_SYM,)) == {idx("2")}
    assert eval_mu(heis, B("1"), (B("2"),)) == frozenset()  # all barred
    table = sl2().symbolic()
    assert eval_mu(table, idx("h"), (idx("e"),)) == {idx("e")}
    assert eval_mu(table, idx("e"), (idx("f"),)) == {idx("h")}


def test_eval_mu_rejects_mixed_pack():
    table = two_block().symbolic()
    with pytest.raises(ValueError):
        eval_mu(table, idx("1"), (idx("2"), B("3")))


def test_eval_phi_fixture_values():
    heis = heisenberg().symbolic()
    assert eval_phi(heis, frozenset(), (V_SYM,)) == frozenset()
    assert eval_phi(heis, frozenset({B("1")}), (V_SYM,)) == {idx("2"), B("2")}
    assert eval_phi(zero().symbolic(), frozenset({idx("1")}), (idx("2"),)) == frozenset()


# ---------------------------------------------------------------------------
# connections and classes
# ---------------------------------------------------------------------------

def test_self_connection_is_empty_chain():
    table = heisenberg().symbolic()
    cert = find_connection(table, "1", "1")
    assert cert.packs == () and cert.chain == ()
    assert cert.replay(table)


def test_heisenberg_connection_certificate():
    table = heisenberg().symbolic()
    cert = find_connection(table, "1", "2")
    assert cert.start_variant == B("1")
    assert cert.packs == ((V_SYM,),)
    assert cert.chain == (frozenset({idx("2"), B("2")}),)
    assert cert.replay(table)


def test_two_block_has_no_cross_connection():
    table = two_block().symbolic()
    assert find_connection(table, "1", "3") is None
    assert find_connection(table, "3", "2") is None
    with pytest.raises(KeyError):
        find_connection(table, "1", "9")


def test_classes_fixture_partitions():
    assert connection_classes(zero().symbolic()).describe() == "{{1},{2}}"
    assert connection_classes(sl2().symbolic()).describe() == "{{e,f,h}}"
    assert connection_classes(two_block().symbolic()).describe() == "{{1,2},{3}}"


def test_certificates_replay_for_all_connected_pairs():
    for alg in (sl2(), two_block(), so3()):
        table = alg.symbolic()
        partition = connection_classes(table)
        for cls in partition.classes:
            for i, j in itertools.product(sorted(cls), repeat=2):
                cert = find_connection(table, i, j)
                assert cert is not None and cert.replay(table)
        for a, b in itertools.combinations(partition.classes, 2):
            for i, j in itertools.product(sorted(a), sorted(b)):
                assert find_connection(table, i, j) is None


# ---------------------------------------------------------------------------
# lemma properties on generated tables
# ---------------------------------------------------------------------------

def _mu_table(sym):
    heads = list(sym.symbols()) + [Ext(s.name, True) for s in sym.symbols()]
    packs = arg_packs(sym)
    return {(h, p): eval_mu(sym, h, p) for h in heads for p in packs}, packs


def _generated(seed):
    n = 2 if seed % 2 else 3
    k = 2 + seed % 3
    density = (0.15, 0.3, 0.5)[seed % 3]
    mode, dim_v = ("general", seed % 3) if seed % 5 == 0 else ("multiplicative", 0)
    return generate_random(GeneratorParams(arity=n, n_indices=k, dim_v=dim_v,
                                           mode=mode, density=density, seed=seed))


def test_mu_symmetry_lemmas_exhaustive():
    """Both transport symmetry statements, exhaustively over small tables."""
    for seed in range(60):
        sym = _generated(seed).symbolic()
        mu, packs = _mu_table(sym)
        indices = sym.index_symbols()
        for j in indices:
            for pack in packs:
                pbar = tuple(bar(x) for x in pack)
                for i in indices:
                    assert (i in mu[(j, pack)]) == (j in mu[(i, pbar)])
                    assert (i in mu[(bar(j), pack)]) == (j in mu[(bar(i), pack)])


def test_phi_bar_closure_exhaustive_small():
    for seed in range(40):
        sym = _generated(seed).symbolic()
        if len(sym.index_ids) > 3:
            continue
        packs = arg_packs(sym)
        universe = [idx(i) for i in sym.index_ids] + [B(i) for i in sym.index_ids]
        for r in range(len(universe) + 1):
            for subset in itertools.combinations(universe, r):
                J = frozenset(subset)
                for pack in packs:
                    image = eval_phi(sym, J, pack)
                    assert image == frozenset(bar(x) for x in image)


def test_phi_two_sided_lemma():
    """Membership through a bar-symmetric set matches the two one-sided probes."""
    rng = random.Random(99)
    for seed in range(40):
        sym = _generated(seed).symbolic()
        ids = sym.index_ids
        packs = arg_packs(sym)
        sym_subsets = []
        for r in range(len(ids) + 1):
            for combo in itertools.combinations(ids, r):
                sym_subsets.append(frozenset(idx(i) for i in combo) | frozenset(B(i) for i in combo))
        if len(sym_subsets) > 16:
            sym_subsets = rng.sample(sym_subsets, 16)
        for J in sym_subsets:
            for pack in rng.sample(packs, min(len(packs), 10)):
                pbar = tuple(bar(x) for x in pack)
                for i in ids:
                    lhs = idx(i) in eval_phi(sym, J, pack)
                    probe_a = eval_phi(sym, frozenset({idx(i)}), pbar) & J & frozenset(map(idx, ids))
                    probe_b = eval_phi(sym, frozenset({B(i)}), pack) & J & frozenset(map(idx, ids))
                    assert lhs == bool(probe_a or probe_b)


def test_connection_equivalence_on_generated_tables():
    for seed in range(40):
        sym = _generated(seed).symbolic()
        ids = sorted(sym.index_ids)
        present = {(i, j): find_connection(sym, i, j) is not None for i in ids for j in ids}
        for i in ids:
            assert present[(i, i)]
            for j in ids:
                assert present[(i, j)] == present[(j, i)]
                for k in ids:
                    if present[(i, j)] and present[(j, k)]:
                        assert present[(i, k)]
        partition = connection_classes(sym)
        for i in ids:
            for j in ids:
                assert present[(i, j)] == (partition.class_of(i) == partition.class_of(j))


def test_classes_invariant_under_relabeling():
    rng = random.Random(3)
    for seed in range(25):
        alg = _generated(seed)
        ids = list(alg.w_ids)
        new = [f"r{k}" for k in range(len(ids))]
        rng.shuffle(new)
        mapping = dict(zip(ids, new))
        relabeled = relabel(alg, mapping)
        p1 = connection_classes(alg.symbolic())
        p2 = connection_classes(relabeled.symbolic())
        mapped = {frozenset(mapping[i] for i in cls) for cls in p1.classes}
        assert mapped == set(p2.classes)
