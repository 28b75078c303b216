import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beauville.pgl2 import (
    ELLIPTIC,
    GENERIC,
    HYPERBOLIC,
    IDENTITY,
    INVOLUTION,
    PARABOLIC,
    ClassKey,
    class_census,
    class_key,
    classify,
    conjugate,
    element_order,
    group,
    identity,
    in_psl,
    invert,
    make_element,
    multiply,
    parse_literal,
    power,
)
from oracles import conjugacy_classes, proj

P = 19
E = lambda *m: make_element(P, *m)  # noqa: E731

elements19 = st.integers(0, 6839).map(lambda i: group(19)[i])


def test_scalar_matrix_is_identity():
    assert E(2, 0, 0, 2) == identity(P)
    assert E(2, 0, 0, 2).entries == (1, 0, 0, 1)


def test_canonical_form_of_published_matrix():
    g = E(6, 12, 5, 13)
    assert g.m11 == 1
    assert all(make_element(P, *(s * x for x in (6, 12, 5, 13))) == g for s in range(1, P))


def test_singular_rejected():
    with pytest.raises(ValueError):
        E(1, 0, 0, 0)


def test_literal_roundtrip():
    g = parse_literal(P, "[[6, 12], [5, 13]]")
    assert parse_literal(P, g.literal()) == g
    with pytest.raises(ValueError):
        parse_literal(P, "[[1,2],[3]]")


def test_mismatched_fields():
    with pytest.raises(ValueError):
        multiply(identity(19), identity(23))


def test_group_axioms_on_examples(example_triples):
    x = example_triples["X1"]
    assert multiply(identity(P), x.a) == x.a
    assert multiply(x.a, x.b) == invert(x.c)
    assert invert(invert(x.b)) == x.b


@settings(max_examples=60)
@given(elements19, elements19, elements19)
def test_associativity_and_inverses(g, h, k):
    assert multiply(multiply(g, h), k) == multiply(g, multiply(h, k))
    assert multiply(g, invert(g)) == identity(P)


@pytest.mark.parametrize("m, order", [((2, 0, 0, 1), 18), ((1, 0, 0, 1), 1), ((1, 0, 0, -1), 2)])
def test_orders(m, order):
    assert element_order(E(*m)) == order


@pytest.mark.parametrize("m, kind", [
    ((2, 0, 0, 1), HYPERBOLIC),
    ((1, 1, 0, 1), PARABOLIC),
    ((0, 1, -1, 0), ELLIPTIC),
    ((1, 0, 0, 1), IDENTITY),
])
def test_classify(m, kind):
    assert classify(E(*m)) == kind


@pytest.mark.parametrize("m, expected", [((1, 0, 0, -1), False), ((0, 1, -1, 0), True), ((1, 0, 0, 1), True)])
def test_in_psl(m, expected):
    assert in_psl(E(*m)) is expected


def test_class_keys():
    # (2+1)^2 / 2 = 9 * 10 = 14 and 14^2 / 13 = 6 * 3 = 18 mod 19
    assert class_key(E(2, 0, 0, 1)) == ClassKey(GENERIC, j=14)
    assert class_key(E(13, 0, 0, 1)) == ClassKey(GENERIC, j=18)
    assert class_key(E(1, 0, 0, -1)) == ClassKey(INVOLUTION, det_square=False)
    assert class_key(E(1, 1, 0, 1)) == ClassKey(PARABOLIC)
    assert class_key(identity(P)) == ClassKey(IDENTITY)


def test_key_text_roundtrip():
    for c in group(P).classes:
        assert ClassKey.parse(str(c.key)) == c.key


@settings(max_examples=80)
@given(elements19, elements19)
def test_key_invariant_under_conjugation_and_inversion(g, x):
    assert class_key(g) == class_key(invert(g))
    assert class_key(conjugate(g, x)) == class_key(g)


@settings(max_examples=80)
@given(elements19)
def test_order_matches_kind(g):
    n = element_order(g)
    assert power(g, n) == identity(P)
    kind = classify(g)
    if kind == HYPERBOLIC:
        assert (P - 1) % n == 0
    elif kind == ELLIPTIC:
        assert (P + 1) % n == 0
    elif kind == PARABOLIC:
        assert n == P


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 19, 23])
def test_psl_membership_rule(p):
    """Semisimple elements of order m dividing p -/+ 1 lie in PSL2(p)
    exactly when (p -/+ 1)/m is even."""
    G = group(p)
    for g in G:
        kind = classify(g)
        n = element_order(g)
        if kind == HYPERBOLIC:
            assert in_psl(g) == (((p - 1) // n) % 2 == 0)
        elif kind == ELLIPTIC:
            assert in_psl(g) == (((p + 1) // n) % 2 == 0)
        elif kind == PARABOLIC:
            assert in_psl(g)
    assert sum(1 for g in G if in_psl(g)) == G.order // 2


def test_census_p5():
    census = class_census(5)
    assert len(census) == 7
    assert sorted(c.size for c in census) == [1, 10, 15, 20, 20, 24, 30]
    assert sum(c.size for c in census) == 120


def test_census_p19():
    census = class_census(19)
    assert len(census) == 21
    sizes = {c.key: c.size for c in census}
    assert sizes[ClassKey(INVOLUTION, det_square=False)] == 190
    assert sizes[ClassKey(INVOLUTION, det_square=True)] == 171
    assert sizes[ClassKey(PARABOLIC)] == 19**2 - 1
    assert sum(1 for c in census if c.order == 18) == 3


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23, 43])
def test_census_shape(p):
    census = class_census(p)
    assert len(census) == p + 2
    assert sum(c.size for c in census) == p * (p * p - 1)
    hyper = [c for c in census if c.key.tag == GENERIC and c.kind == HYPERBOLIC]
    ellip = [c for c in census if c.key.tag == GENERIC and c.kind == ELLIPTIC]
    invol = [c for c in census if c.key.tag == INVOLUTION]
    assert (len(hyper), len(ellip), len(invol)) == ((p - 3) // 2, (p - 1) // 2, 2)
    assert all(c.size == p * (p + 1) for c in hyper)
    assert all(c.size == p * (p - 1) for c in ellip)
    if p % 4 == 3:
        assert {c.key.det_square: c.size for c in invol} == {False: p * (p + 1) // 2, True: p * (p - 1) // 2}


@pytest.mark.parametrize("p", [5, 7, 11])
def test_keys_agree_with_exhaustive_conjugation(p):
    G = group(p)
    orbits = conjugacy_classes(p)
    key_of = {proj(g.entries, p): class_key(g) for g in G}
    assert len(key_of) == G.order
    partition_by_key = {}
    for e, k in key_of.items():
        partition_by_key.setdefault(k, set()).add(e)
    assert sorted(map(len, orbits)) == sorted(c.size for c in G.classes)
    assert {frozenset(o) for o in orbits} == {frozenset(s) for s in partition_by_key.values()}


def test_enumeration_is_exact(G19):
    assert len(G19.elements) == 6840
    assert len(np.unique(G19.codes)) == 6840
    assert all(G19[i] == make_element(P, *G19[i].entries) for i in range(0, 6840, 97))


def test_array_kernels_agree_with_scalar(G19):
    from beauville.pgl2 import encode, inv_arrays, key_codes, key_from_code, mul_arrays

    rng = np.random.default_rng(0)
    i, j = rng.integers(0, 6840, (2, 300))
    X, Y = G19.elements[i], G19.elements[j]
    prod = mul_arrays(X, Y, G19.field)
    for a, b, c in zip(i, j, prod):
        assert tuple(c) == multiply(G19[a], G19[b]).entries
    inv = encode(inv_arrays(X, G19.field), P)
    assert inv.tolist() == [invert(G19[a]).code for a in i]
    assert [key_from_code(k, P) for k in key_codes(X, G19.field)] == [class_key(G19[a]) for a in i]


def test_centralizer_of_involution(G19):
    a = E(1, 0, 0, -1)
    assert len(G19.centralizer(a)) == 2 * (P - 1)
    b = E(0, 1, -1, 0)
    assert len(G19.centralizer(b)) == 2 * (P + 1)
