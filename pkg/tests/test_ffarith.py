import pytest

from tmc.ffarith import (FieldError, build_field, element_order, factorize, frobenius_degree,
                         is_irreducible, is_prime, is_square, lambda_reduced, multiplicative_order,
                         prime_power, prime_to_part, root_of_unity)


def test_prime_field_modulus_is_x():
    F = build_field(7, 1)
    assert F.modulus == (0, 1)
    assert F.q == 7


def test_small_extension_moduli():
    F8 = build_field(2, 3)
    assert F8.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    F9 = build_field(3, 2)
    assert F9.modulus == (1, 0, 1)  # x^2 + 1
    assert is_irreducible(F8.modulus, 2) and is_irreducible(F9.modulus, 3)


def test_build_field_rejects_bad_input():
    with pytest.raises(FieldError):
        build_field(6, 1)
    with pytest.raises(FieldError):
        build_field(5, 0)


def test_build_field_is_deterministic():
    assert build_field(5, 3) == build_field(5, 3)
    build_field.cache_clear()
    assert build_field(5, 3).modulus == build_field(5, 3).modulus


def test_arithmetic_examples():
    F = build_field(7)
    assert F(3) ** 5 == F(5)
    assert F(3) + 0 == F(3)
    for x in range(1, 7):
        assert F(x) * F(x).inverse() == 1
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()


def test_field_axioms_in_extension():
    F = build_field(3, 3)
    elems = [F(F.coeffs(c)) for c in range(F.q)]
    a, b, c = elems[5], elems[17], elems[23]
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    assert a / b * b == a


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldError):
        build_field(5)(1) + build_field(7)(1)


def test_element_order():
    F = build_field(7)
    assert element_order(F(1)) == 1
    assert element_order(F(3)) == 6
    assert element_order(F(2)) == 3


def test_root_of_unity():
    F7 = build_field(7)
    assert root_of_unity(F7, 2) == F7(6)
    assert root_of_unity(F7, 3) in (F7(2), F7(4))
    F8 = build_field(2, 3)
    assert element_order(root_of_unity(F8, 7)) == 7
    with pytest.raises(FieldError):
        root_of_unity(F7, 5)


def test_root_of_unity_in_large_field():
    # too large to factor q - 1 comfortably; uses the smooth-order root
    F = build_field(89, multiplicative_order(89, 59))
    assert F.q > 1 << 16
    z = root_of_unity(F, 59)
    assert z ** 59 == 1 and z != 1


def test_is_square():
    assert is_square(build_field(13)(-1))
    assert not is_square(build_field(7)(-1))
    assert is_square(build_field(7)(0))
    F4 = build_field(2, 2)
    assert all(is_square(F4(F4.coeffs(c))) for c in range(4))


def test_sqrt_roundtrip():
    F = build_field(5, 2)
    for c in range(1, F.q):
        if F.is_square(c):
            r = F.sqrt(c)
            assert F.mul(r, r) == c


def test_frobenius_degree():
    F = build_field(2, 3)
    assert frobenius_degree(F(1)) == 1
    assert frobenius_degree(root_of_unity(F, 7)) == 3
    F81 = build_field(3, 4)
    z5 = root_of_unity(F81, 5)
    assert frobenius_degree(z5 + z5.inverse()) == 2


def test_frobenius_matrix_path_matches_powering():
    F = build_field(97, 4)  # above the table limit
    for c in (98, 12345, 5 * 97 ** 3 + 1):
        assert F.frobenius(c) == F.pow(c, 97)


def test_lambda_reduced():
    F13 = build_field(13)
    assert lambda_reduced(F13, 2) == F13(-2)
    F7 = build_field(7)
    assert lambda_reduced(F7, 14, 7) == F7(-2)
    lam = lambda_reduced(F13, 7).code
    # minimal polynomial of lambda_7: x^3 + x^2 - 2x - 1
    assert (lam ** 3 + lam ** 2 - 2 * lam - 1) % 13 == 0


def test_integer_helpers():
    assert is_prime(97) and not is_prime(91) and not is_prime(1)
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert prime_power(49) == (7, 2) and prime_power(12) is None
    assert prime_to_part(84, 2) == 21
    assert multiplicative_order(2, 7) == 3
