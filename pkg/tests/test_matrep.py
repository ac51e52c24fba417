import pytest

from tmc.ffarith import build_field
from tmc.matrep import (H1Cosets, ProjMatrix, RepresentationError, build_representation,
                        expected_h1_cycle_type, expected_p1_cycle_type, h1_cycle_type,
                        order_locally_maximal, p1_cycle_type, projective_order, sigma2_is_split)
from tmc.triples import Triple

F7 = build_field(7)


def pm(rows, F=F7):
    return ProjMatrix.from_ints(F, rows)


def test_projmatrix_scalar_identification():
    M = pm([[1, 2], [3, 5]])
    assert M == pm([[3, 6], [9, 15]])
    assert hash(M) == hash(pm([[2, 4], [6, 10]]))
    assert (M * M.inverse()).is_identity()
    with pytest.raises(RepresentationError):
        pm([[1, 2], [2, 4]])


def test_projective_order_examples():
    assert projective_order(pm([[1, 0], [0, 1]])) == 1
    assert projective_order(pm([[1, 1], [0, 1]])) == 7
    assert projective_order(pm([[3, 0], [0, 1]])) == 6


def test_p1_cycle_types_examples():
    # order 3 split, unipotent, order 4 non-split over F_7
    assert p1_cycle_type(pm([[2, 0], [0, 1]])) == [1, 1, 3, 3]
    assert p1_cycle_type(pm([[1, 1], [0, 1]])) == [1, 7]
    M = pm([[1, -1], [1, 1]])  # eigenvalues 1 +- i, ratio i of order 4
    assert projective_order(M) == 4
    assert p1_cycle_type(M) == [4, 4]


def test_expected_p1_closed_forms():
    assert expected_p1_cycle_type(3, 7, 7) == [1, 1, 3, 3]
    assert expected_p1_cycle_type(7, 7, 7) == [1, 7]
    assert expected_p1_cycle_type(4, 7, 7) == [4, 4]
    assert expected_p1_cycle_type(2, 7, 7, split=False) == [2, 2, 2, 2]
    with pytest.raises(ValueError):
        expected_p1_cycle_type(2, 7, 7)


def test_h1_cycle_types_examples():
    U = pm([[1, 1], [0, 1]])
    assert h1_cycle_type(U, 1) == [1, 1, 1] + [7] * 3
    assert h1_cycle_type(U, -1) == [1] * 6 + [7] * 6
    S = pm([[2, 0], [0, 4]])  # det 1, order 3
    assert h1_cycle_type(S, 1) == [3] * 8
    assert expected_h1_cycle_type(7, 7, 7, 1) == [1, 1, 1] + [7] * 3


def test_h1_coset_space_sizes():
    assert len(H1Cosets(F7, 7, 1).points()) == 24
    assert len(H1Cosets(F7, 7, -1).points()) == 48
    F8 = build_field(2, 3)
    assert len(H1Cosets(F8, 8, 1).points()) == 63


@pytest.mark.parametrize("triple,p", [((2, 3, 7), 13), ((2, 3, 7), 7), ((2, 3, 7), 2),
                                      ((2, 3, 8), 7), ((2, 3, 12), 5), ((3, 4, 4), 13),
                                      ((2, 4, 6), 13), ((3, 3, 5), 2)])
def test_build_representation_orders(triple, p):
    rep = build_representation(Triple.of(*triple), p)
    assert rep.orders() == tuple(triple)
    assert (rep.M_a * rep.M_b * rep.M_c).is_identity()
    sub = set(rep.field.subfield(rep.field.r // (rep.field.r // _log(rep.q, p))))
    assert all(x in sub for X in rep.X for x in X)
    assert order_locally_maximal(rep)


def _log(q, p):
    r = 0
    while q > 1:
        q //= p
        r += 1
    return r


def test_order_collapse_is_rejected():
    with pytest.raises(RepresentationError):
        build_representation(Triple(2, 3, 49), 7)


def test_order_locally_maximal_examples():
    assert order_locally_maximal(Triple(2, 3, 7), 13)
    assert order_locally_maximal(Triple(2, 3, 7), 7)


def test_sigma2_split_examples():
    assert sigma2_is_split(build_representation(Triple(2, 3, 8), 7))
    assert not sigma2_is_split(build_representation(Triple(2, 6, 6), 7))
    assert sigma2_is_split(build_representation(Triple(2, 3, 7), 13))  # PSL and 13 = 1 mod 4
    with pytest.raises(ValueError):
        sigma2_is_split(build_representation(Triple(3, 4, 4), 13))
    with pytest.raises(ValueError):
        sigma2_is_split(build_representation(Triple(2, 3, 7), 2))


def test_every_embedding_gives_a_representation():
    from tmc.cycgalois import prime_classes
    for i in prime_classes(Triple(2, 3, 7), 43):
        assert build_representation(Triple(2, 3, 7), 43, i).orders() == (2, 3, 7)
