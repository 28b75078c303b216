import pytest
from hypothesis import given, strategies as st

from beauville.field import FieldContext, field_context

F19 = field_context(19)


@pytest.mark.parametrize("p", [3, 5, 19, 101, 2_147_483_629])
def test_valid_contexts(p):
    assert field_context(p).p == p


@pytest.mark.parametrize("p", [4, 2, 1, 0, -7, 9, 91])
def test_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        FieldContext(p)


def test_rejects_huge_modulus():
    with pytest.raises(ValueError):
        FieldContext(2_147_483_659)


@pytest.mark.parametrize("x, inv", [(13, 3), (1, 1), (18, 18)])
def test_inverse_examples(x, inv):
    assert F19.inverse(x) == inv


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        F19.inverse(0)


def test_squares_mod_19():
    # {1,4,5,6,7,9,11,16,17} from squaring every residue
    assert {x for x in range(1, 19) if F19.is_square(x)} == {1, 4, 5, 6, 7, 9, 11, 16, 17}
    assert not F19.is_square(18)
    assert not F19.is_square(2)
    with pytest.raises(ValueError):
        F19.is_square(0)


@pytest.mark.parametrize("p", [3, 5, 7, 19, 43, 97])
def test_half_the_units_are_squares(p):
    F = field_context(p)
    assert sum(F.is_square(x) for x in range(1, p)) == (p - 1) // 2
    assert F.square_table.sum() == (p - 1) // 2


@pytest.mark.parametrize("p", [3, 5, 19, 43])
def test_inverse_table_matches_scalar(p):
    F = field_context(p)
    assert [int(F.inverse_table[x]) for x in range(1, p)] == [F.inverse(x) for x in range(1, p)]


@given(st.integers(1, 18))
def test_inverse_is_involution(x):
    assert F19.inverse(F19.inverse(x)) == x
    assert F19.mul(x, F19.inverse(x)) == 1


@given(st.integers(1, 18))
def test_square_class_flips_under_non_residue(x):
    n0 = F19.non_residue()
    assert F19.is_square(x) != F19.is_square(F19.mul(x, n0))


@given(st.integers(0, 18))
def test_sqrt(x):
    r = F19.sqrt(x)
    if x == 0 or F19.is_square(x):
        assert r * r % 19 == x
    else:
        assert r is None


def test_primitive_root():
    assert F19.primitive_root() == 2
