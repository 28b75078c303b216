import itertools

import pytest
from hypothesis import given, strategies as st

from beauville.arith import euler_phi, units
from beauville.pgl2 import (
    ELLIPTIC,
    GENERIC,
    HYPERBOLIC,
    INVOLUTION,
    ClassKey,
    class_key,
    element_order,
    group,
    make_element,
    power,
)
from beauville.surfaces import (
    BeauvilleError,
    build_all_surfaces,
    galois_act_on_orbit,
    galois_orbit_table,
    genus,
    genus_closed_forms,
    sigma_key_set,
    verify_beauville,
)
from beauville.triples import GeneratingTriple

P = 19


@pytest.fixture(scope="module")
def records19():
    return build_all_surfaces(19, 18, 20)


def _kinds(keys):
    G = group(P)
    return {G.classes[G.class_index(k)].kind for k in keys}


def test_sigma_first(example_triples):
    keys = sigma_key_set(example_triples["X1"])
    assert _kinds(keys) == {HYPERBOLIC}
    assert ClassKey(INVOLUTION, det_square=False) in keys
    assert ClassKey(INVOLUTION, det_square=True) not in keys


def test_sigma_second(example_triples):
    keys = sigma_key_set(example_triples["Y1"])
    assert _kinds(keys) == {ELLIPTIC}
    assert ClassKey(INVOLUTION, det_square=True) in keys


def test_sigma_powers_of_c(example_triples):
    c = example_triples["X1"].c
    keys = {class_key(power(c, e)) for e in range(1, 18)}
    # one class per pair {c^e, c^-e}
    assert len(keys) == 9


def test_all_pairs_disjoint(example_triples):
    firsts = [example_triples[f"X{i}"] for i in (1, 2, 3)]
    seconds = [example_triples[f"Y{i}"] for i in (1, 2, 3, 4)]
    for x, y in itertools.product(firsts, seconds):
        assert not sigma_key_set(x) & sigma_key_set(y)
        s = verify_beauville(x, y)
        assert s.bitype == (2, 3, 18, 2, 4, 20)


def test_condition_3_failure(example_triples):
    x = example_triples["X1"]
    with pytest.raises(BeauvilleError) as err:
        verify_beauville(x, example_triples["X2"])
    assert err.value.condition == 3
    assert err.value.witness in sigma_key_set(x)
    with pytest.raises(BeauvilleError) as err:
        verify_beauville(x, x)
    assert err.value.condition == 3


def test_condition_2_failure():
    # a (2,3,6) triple: c of order 6, a an involution, b = (ca)^-1 of order 3
    G = group(P)
    c = G[int(G.index_of(G.elements_of_order(6)[0] @ [P**3, P**2, P, 1]))]
    t = next(
        GeneratingTriple(a, b, c, (2, 3, 6))
        for a in (make_element(P, *row) for row in G.elements_of_order(2))
        for b in [power(c * a, -1)]
        if element_order(b) == 3
    )
    with pytest.raises(BeauvilleError) as err:
        verify_beauville(t, t)
    assert err.value.condition == 2


def test_condition_1_failure(example_triples):
    x = example_triples["X1"]
    broken = GeneratingTriple(x.a, x.b, x.a, x.type)
    with pytest.raises(BeauvilleError) as err:
        verify_beauville(broken, example_triples["Y1"])
    assert err.value.condition == 1


def test_genus_values():
    assert genus(19, (2, 3, 18)) == 381 == 1 + 6840 // 18
    assert genus(19, (2, 4, 20)) == 685 == 1 + 6840 // 10


@pytest.mark.parametrize("p", [19, 43, 67])
def test_genus_closed_forms(p):
    g, h = genus_closed_forms(p)
    assert genus(p, (2, 3, p - 1)) == g
    assert genus(p, (2, 4, p + 1)) == h


def test_genus_non_integral():
    with pytest.raises(ValueError):
        genus(19, (2, 3, 7))


def test_build_p19(records19):
    assert len(records19) == 12 == euler_phi(180) // 4
    assert {(r.genus_1, r.genus_2) for r in records19} == {(381, 685)}
    assert {r.orbit_size for r in records19} == {12}
    assert {r.moduli_degree for r in records19} == {(euler_phi(18) // 2) * (euler_phi(20) // 2)}
    assert len({(r.orbit_key_1, r.orbit_key_2) for r in records19}) == 12
    assert all(r.bitype == "(2,3,18;2,4,20)" for r in records19)


def test_record_json(records19):
    data = records19[0].to_json()
    assert list(data) == ["p", "k", "l", "m", "bitype", "i", "j", "orbit_key_1", "orbit_key_2",
                          "genus_1", "genus_2", "orbit_size", "moduli_degree", "first_triple",
                          "second_triple"]
    assert data["first_triple"]["orbit_key"] == data["orbit_key_1"]


def test_build_rejects_inadmissible():
    with pytest.raises(ValueError):
        build_all_surfaces(19, 16, 20)


def test_sigma_sets_per_record(records19):
    for r in records19:
        s1, s2 = sigma_key_set(r.first_triple), sigma_key_set(r.second_triple)
        assert _kinds(s1) == {HYPERBOLIC} and _kinds(s2) == {ELLIPTIC}
        assert not s1 & s2


def test_galois_act_examples():
    k14 = class_key(make_element(P, 2, 0, 0, 1))
    assert galois_act_on_orbit(P, k14, 5) == class_key(make_element(P, 13, 0, 0, 1))
    assert galois_act_on_orbit(P, k14, 17) == k14
    assert galois_act_on_orbit(P, k14, 1) == k14
    with pytest.raises(ValueError):
        galois_act_on_orbit(P, k14, 3)


@given(st.sampled_from(units(18)), st.sampled_from(units(18)), st.sampled_from([12, 14, 18]))
def test_galois_action_composes(g, h, j):
    key = ClassKey(GENERIC, j=j)
    lhs = galois_act_on_orbit(P, galois_act_on_orbit(P, key, h), g)
    assert lhs == galois_act_on_orbit(P, key, g * h % 18)


def test_galois_table_p19(records19):
    table = galois_orbit_table(19, 18, 20, records19)
    assert table.regular and table.transitive and table.stabilizers_trivial
    assert len(table.coset_reps) == 12
    assert table.kernel == [1, 19, 161, 179]
    # complex conjugation fixes every surface
    assert 179 in table.kernel


def test_galois_first_coordinate_regular(records19):
    keys = sorted({r.orbit_key_1 for r in records19}, key=ClassKey.sort_key)
    images = {g: tuple(galois_act_on_orbit(P, k, g) for k in keys) for g in units(18)}
    distinct = set(images.values())
    assert len(distinct) == 3
    assert {images[g][0] for g in units(18)} == set(keys)


@pytest.mark.slow
def test_build_p43():
    recs = build_all_surfaces(43, 42, 44)
    assert len(recs) == 60 == euler_phi(924) // 4
    assert galois_orbit_table(43, 42, 44, recs).regular
