from fractions import Fraction

import pytest

from tmc.genus import (GenusError, GenusInput, chi_bound, coset_index_h1, genus_from_cycles,
                       genus_galois, genus_x0, genus_x0_display, genus_x1, q_bound,
                       round_half_down, x0_ramification, x1_ramification)
from tmc.triples import Triple


def test_genus_galois():
    assert genus_galois((2, 3, 7), 168) == 3
    assert genus_galois((2, 3, 6), 72) == 1
    assert genus_galois((2, 3, 7), 504) == 7
    with pytest.raises(GenusError):
        genus_galois((2, 3, 7), 100)


def test_genus_x0_examples():
    inp = GenusInput(Triple(2, 3, 7), 7, 7, 1)
    assert x0_ramification(inp) == (4, 2, 1)
    assert genus_x0(inp) == 0
    assert genus_x0(GenusInput(Triple(2, 3, 7), 3, 27, 1)) == 1
    assert genus_x0(GenusInput(Triple(2, 4, 6), 13, 13, -1)) == 0


def test_split_flag_consistency():
    assert genus_x0(GenusInput(Triple(2, 3, 8), 7, 7, -1, split2=True)) == 0
    with pytest.raises(GenusError):
        genus_x0(GenusInput(Triple(2, 3, 8), 7, 7, -1, split2=False))


def test_not_q_admissible():
    with pytest.raises(GenusError):
        genus_x0(GenusInput(Triple(2, 3, 7), 11, 11, 1))
    with pytest.raises(GenusError):
        genus_x1(GenusInput(Triple(2, 3, 7), 11, 11, 1))


def test_bad_pxl():
    with pytest.raises(GenusError):
        GenusInput(Triple(2, 3, 7), 7, 7, 0)


def test_genus_x1_examples():
    inp = GenusInput(Triple(2, 3, 7), 7, 7, 1)
    assert x1_ramification(inp) == (12, 8, 3)
    assert genus_x1(inp) == 0
    assert genus_x1(GenusInput(Triple(2, 3, 8), 7, 7, -1)) >= 0
    assert coset_index_h1(7, 1) == 24 and coset_index_h1(7, -1) == 48 and coset_index_h1(8, 1) == 63


def test_display_formula_and_rounding():
    assert round_half_down(Fraction(3, 2)) == 1
    assert round_half_down(Fraction(7, 8)) == 1
    assert round_half_down(Fraction(5, 2)) == 2
    for t, p, q, pxl in [((2, 3, 7), 7, 7, 1), ((2, 3, 7), 13, 13, 1), ((2, 4, 6), 13, 13, -1),
                         ((3, 3, 4), 3, 9, 1), ((2, 3, 8), 17, 17, 1)]:
        inp = GenusInput(Triple.of(*t), p, q, pxl)
        assert genus_x0_display(inp) == genus_x0(inp)


def test_genus_from_cycles():
    # X_0(2,3,7;7): degree 8, cycle types from the closed forms
    assert genus_from_cycles(8, [[2, 2, 2, 2], [1, 1, 3, 3], [1, 7]]) == 0


def test_bounds():
    assert q_bound(0) == 85 and q_bound(2) == 253
    assert chi_bound(43, 0) == Fraction(1, 21)
    assert chi_bound(85, 0) == Fraction(1, 42)
    assert chi_bound(3, 2) == 3
    with pytest.raises(ValueError):
        q_bound(-1)
    with pytest.raises(ValueError):
        chi_bound(1, 0)
