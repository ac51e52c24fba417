import pytest

from tmc.cycgalois import (CyclotomicReduction, beta_admissible, dFE_coprime, field_tower,
                           frobenius_residue_degrees, kronecker_split_test, order_condition,
                           prime_classes, prime_splitting)
from tmc.triples import Triple


@pytest.mark.parametrize("triple,degE,degF", [
    ((2, 3, 7), 3, 3),
    ((2, 4, 6), 1, 4),
    ((2, 3, 8), 2, 4),
    ((3, 3, 4), 2, 2),
])
def test_field_degrees(triple, degE, degF):
    tower = field_tower(Triple.of(*triple))
    assert (tower.degE, tower.degF) == (degE, degF)
    assert tower.H_F <= tower.H_E


def test_field_tower_rejects_infinite_entries():
    with pytest.raises(ValueError):
        field_tower((2, 3, None))


def test_splitting_examples():
    s = prime_splitting(Triple(2, 3, 7), 13)
    assert (s.eE, s.fE, s.gE, s.qE, s.pxl) == (1, 1, 3, 13, 1)
    s = prime_splitting(Triple(2, 3, 7), 2)
    assert (s.fE, s.qE, s.gE) == (3, 8, 1)
    s = prime_splitting(Triple(2, 3, 8), 7)
    assert (s.qE, s.pxl, s.gE) == (7, -1, 2)
    s = prime_splitting(Triple(2, 3, 12), 5)
    assert (s.qE, s.pxl) == (25, 1)


def test_efg_multiply_to_degree():
    for t in [(2, 3, 7), (2, 5, 11), (3, 4, 12), (5, 5, 10)]:
        for p in (2, 3, 5, 7, 11, 13):
            s = prime_splitting(Triple.of(*t), p)
            assert s.eE * s.fE * s.gE == s.degE
            assert s.eF * s.fF * s.gF == s.degF


def test_prime_classes_count_matches_gE():
    for t, p in [((2, 3, 7), 13), ((2, 3, 7), 43), ((2, 5, 11), 11), ((2, 3, 8), 7)]:
        assert len(prime_classes(Triple.of(*t), p)) == prime_splitting(Triple.of(*t), p).gE


@pytest.mark.parametrize("triple,p,sign", [((2, 3, 7), 13, 1), ((2, 3, 8), 7, -1), ((2, 3, 8), 17, 1)])
def test_kronecker_split_test(triple, p, sign):
    t = Triple.of(*triple)
    assert kronecker_split_test(t, p) == sign == prime_splitting(t, p).pxl


def test_kronecker_split_test_domain():
    with pytest.raises(ValueError):
        kronecker_split_test(Triple(2, 3, 7), 7)


def test_kronecker_agrees_with_subgroup_model():
    for t in [(2, 3, 7), (2, 3, 8), (2, 4, 5), (3, 3, 4), (2, 5, 6), (4, 4, 5)]:
        t = Triple.of(*t)
        for p in (11, 13, 17, 19, 23, 29, 31, 37, 41):
            if (2 * t.a * t.b * t.c) % p:
                assert kronecker_split_test(t, p) == prime_splitting(t, p).pxl


def test_beta_admissible():
    assert beta_admissible(Triple(2, 3, 7), 13)
    assert beta_admissible(Triple(2, 3, 7), 7)
    assert beta_admissible(Triple(2, 3, 12), 5)
    assert not beta_admissible(Triple(2, 3, 49), 7)  # order condition


def test_order_condition():
    assert order_condition(Triple(2, 3, 7), 7)
    assert not order_condition(Triple(2, 3, 49), 7)


def test_dFE_coprime():
    assert dFE_coprime(Triple(2, 3, 7), 29)
    assert dFE_coprime(Triple(2, 3, 8), 3)
    assert dFE_coprime(Triple(3, 3, 4), 3)


def test_reduction_lambda_values():
    red = CyclotomicReduction(Triple(2, 3, 7), 7)
    F = red.field
    assert red.lam(14) == F.from_int(-2)  # zeta_7 -> 1 above 7
    assert red.lam(4) == 0


def test_frobenius_oracle_spot_checks():
    for t, p in [((2, 3, 7), 2), ((2, 3, 7), 13), ((2, 3, 12), 5), ((4, 6, 6), 3), ((2, 3, 8), 3)]:
        t = Triple.of(*t)
        s = prime_splitting(t, p)
        assert frobenius_residue_degrees(t, p) == (s.fE, s.fF)
