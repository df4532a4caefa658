import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from srcover.galois import (
    FieldElement,
    FieldError,
    FieldSpec,
    Tower,
    field_arith,
    field_make,
    is_irreducible,
    linearized_to_matrix,
    parse_field,
    tower_for,
)
from srcover.space import mat_rank


def _polymulmod(a, b, mod, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus (oracle)."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    k = len(mod) - 1
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
    return (prod + [0] * k)[:k]


def _coeffs(v, p, k):
    return [(v // p**i) % p for i in range(k)]


def _has_factor(mod, p):
    """Trial division by every monic polynomial of degree 1..k//2 (oracle for irreducibility)."""
    k = len(mod) - 1
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            div = list(tail) + [1]
            rem = list(mod)
            for d in range(k, deg - 1, -1):
                c = rem[d]
                if c:
                    for i in range(deg + 1):
                        rem[d - deg + i] = (rem[d - deg + i] - c * div[i]) % p
            if not any(rem[:deg]):
                return True
    return False


def test_gf4_modulus():
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert str(field_make(2, 2)) == "2^2/111"


def test_prime_field_modulus_is_x():
    assert field_make(2, 1).modulus == (0, 1)
    assert field_make(5).order == 5


def test_gf16_modulus_is_smallest_irreducible():
    # enumerate monic quartics in increasing integer order, first without a factor wins
    for tail in range(16):
        mod = _coeffs(tail, 2, 4) + [1]
        if not _has_factor(mod, 2):
            break
    assert field_make(2, 4).modulus == tuple(mod) == (1, 1, 0, 0, 1)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)])
def test_irreducibility_matches_trial_division(p, k):
    for tail in range(p**k):
        mod = _coeffs(tail, p, k) + [1]
        assert is_irreducible(tuple(mod), p) == (not _has_factor(mod, p))


def test_bad_parameters():
    with pytest.raises(FieldError):
        field_make(4, 1)
    with pytest.raises(FieldError):
        field_make(2, 17)
    with pytest.raises(FieldError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_omega_squared(gf4):
    w = gf4.element(2)
    assert w * w == w + gf4.element(1)
    assert field_arith(w, w, "mul").value == 3


def test_char_two():
    F = field_make(2)
    one = F.element(1)
    assert (one + one).value == 0
    assert field_arith(one, one, "add").value == 0


def test_gf16_inverses():
    F = field_make(2, 4)
    for g in range(1, 16):
        e = F.element(g)
        assert (e * e.inverse()).value == 1
        assert field_arith(e, None, "inv") == e.inverse()
    with pytest.raises(FieldError):
        F.element(0).inverse()


@pytest.mark.parametrize("p,k", [(2, 3), (2, 4), (3, 2), (5, 2), (7, 1)])
def test_mul_matches_schoolbook(p, k):
    F = field_make(p, k)
    for a in range(F.order):
        for b in range(F.order):
            want = _polymulmod(_coeffs(a, p, k), _coeffs(b, p, k), list(F.modulus), p)
            assert _coeffs(F.mul(a, b), p, k) == want


def test_mixed_fields_rejected():
    a = field_make(2, 2).element(1)
    b = field_make(2, 3).element(1)
    with pytest.raises(FieldError):
        a + b


def test_element_serialisation(gf4):
    assert gf4.element_str(2) == "01"
    assert gf4.parse_element("01") == 2
    assert parse_field(str(field_make(3, 2))) == field_make(3, 2)


def test_expand_basis_coordinates(gf4):
    T = tower_for(field_make(2), 2)
    assert T.expand(2) == (0, 1)
    assert T.expand(1) == (1, 0)


def test_expand_round_trip_gf16():
    T = tower_for(field_make(2), 4)
    assert all(T.recompose(T.expand(a)) == a for a in range(16))
    assert len({T.expand(a) for a in range(16)}) == 16


def test_expand_rejects_foreign_element():
    T = tower_for(field_make(2), 2)
    with pytest.raises(FieldError):
        T.expand(field_make(2, 3).element(1))


@pytest.mark.parametrize("base,m", [((2, 1), 2), ((2, 1), 4), ((2, 2), 2), ((3, 1), 2), ((2, 2), 3)])
def test_expand_is_linear(base, m):
    B = field_make(*base)
    T = tower_for(B, m)
    E = T.ext
    for a in range(E.order):
        for b in range(E.order):
            lhs = T.expand(E.add(a, b))
            rhs = tuple(B.add(x, y) for x, y in zip(T.expand(a), T.expand(b)))
            assert lhs == rhs


def test_tower_over_nonprime_base_embeds_subfield():
    T = tower_for(field_make(2, 2), 2)
    E = T.ext
    img = {T.embed(a) for a in range(4)}
    # the embedded GF(4) is closed under the extension's operations
    assert all(E.mul(a, b) in img and E.add(a, b) in img for a in img for b in img)


def test_linearized_identity_and_zero():
    T = tower_for(field_make(2), 3)
    assert np.array_equal(linearized_to_matrix([1, 0, 0], T), np.eye(3, dtype=np.int64))
    assert not linearized_to_matrix([0, 0, 0], T).any()
    with pytest.raises(FieldError):
        linearized_to_matrix([1, 0], T)


def test_frobenius_matrix():
    T = tower_for(field_make(2), 2)
    M = linearized_to_matrix([0, 1], T)
    assert M.tolist() == [[1, 1], [0, 1]]
    assert mat_rank(M) == 2


@given(st.lists(st.integers(0, 15), min_size=2, max_size=2), st.lists(st.integers(0, 15), min_size=2, max_size=2))
def test_linearized_additive(c, d):
    T = tower_for(field_make(2, 2), 2)
    E = T.ext
    s = [E.add(x, y) for x, y in zip(c, d)]
    lhs = linearized_to_matrix(s, T)
    rhs = T.base.add_table[linearized_to_matrix(c, T), linearized_to_matrix(d, T)]
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("base,m", [((2, 1), 2), ((2, 1), 3), ((2, 1), 4), ((3, 1), 2), ((2, 2), 2), ((2, 1), 8)])
def test_multiplication_maps_are_invertible(base, m):
    B = field_make(*base)
    T = tower_for(B, m)
    for a in range(1, T.ext.order):
        assert mat_rank(linearized_to_matrix([a] + [0] * (m - 1), T), B) == m


@given(st.integers(1, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms_gf256(a, b, c):
    F = field_make(2, 8)
    x, y, z = (FieldElement(F, v) for v in (a, b, c))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x / x == F.element(1)
    assert x ** 255 == F.element(1)
