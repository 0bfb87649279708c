import pytest
from hypothesis import given, strategies as st

from nordcodes.errors import DivisionByZero, FieldTooLarge, NotPrime, ReduciblePolynomial
from nordcodes.field import Field, make_field


def test_default_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)  # t^2 + t + 1, the only choice
    assert make_field(2, 1).q == 2
    assert make_field(3, 2).q == 9


def test_gf4_arithmetic():
    F = make_field(2, 2)
    w = F(2)
    assert (w * w).index == 3  # w^2 = w + 1 forced by t^2+t+1
    for x in F.elements():
        assert (x + x).index == 0  # characteristic 2
    # inverse via exhaustive multiplication-table oracle
    inv_oracle = {
        a: next(b for b in range(1, 4) if F.mul(a, b) == 1) for a in range(1, 4)
    }
    assert w.inverse().index == inv_oracle[2] == 3


def test_enumerate():
    assert [e.index for e in make_field(2, 1).elements()] == [0, 1]
    assert len(make_field(2, 2).elements()) == 4
    assert len(make_field(3, 2).elements()) == 9


def test_validation_errors():
    with pytest.raises(NotPrime):
        Field(4, 1)
    with pytest.raises(ReduciblePolynomial):
        Field(2, 2, modulus=[1, 0, 1])  # (t+1)^2
    with pytest.raises(FieldTooLarge):
        Field(2, 17)
    with pytest.raises(DivisionByZero):
        make_field(2, 2).inv(0)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 4)])
def test_field_axioms_exhaustive(p, k):
    """Associativity, commutativity, distributivity and inverses, exhaustively."""
    F = make_field(p, k)
    q = F.q
    for a in range(q):
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in range(q):
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in range(1, q):
        inv = F.inv(a)
        assert F.mul(a, inv) == 1 and F.mul(inv, a) == 1


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2)])
def test_frobenius_is_additive(p, k):
    F = make_field(p, k)
    for a in range(F.q):
        for b in range(F.q):
            assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_gf256_axioms_sampled(a, b, c):
    F = make_field(2, 8)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_pow_matches_repeated_mul():
    F = make_field(3, 2)
    for a in range(1, F.q):
        acc = 1
        for e in range(1, 10):
            acc = F.mul(acc, a)
            assert F.pow(a, e) == acc
