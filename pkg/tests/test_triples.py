from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from tmc.triples import (INFINITY, Triple, chi, delta_mod_delta2, divisors, generate_candidates,
                         nonhyperbolic_reduction, q_admissible)


def test_chi_values():
    assert chi((2, 3, 7)) == Fraction(-1, 42)
    assert chi((2, 3, 6)) == 0
    assert chi((2, 2, 2)) == Fraction(1, 2)
    assert chi((2, 3, INFINITY)) == Fraction(-1, 6)


def test_triple_normalizes_and_validates():
    assert Triple.of(7, 2, 3) == Triple(2, 3, 7)
    assert Triple.of((3, 2, 7)).chi == Fraction(-1, 42)
    with pytest.raises(ValueError):
        Triple(3, 2, 7)
    with pytest.raises(ValueError):
        Triple.of(1, 2, 3)


def test_q_admissible():
    assert q_admissible((2, 3, 7), 13, 13)
    assert not q_admissible((2, 3, 7), 11, 11)
    assert q_admissible((2, 3, 7), 8, 2)


def test_candidates_examples():
    c7 = generate_candidates(7, 7, 0)
    assert Triple(2, 3, 7) in c7 and Triple(2, 6, 7) in c7
    assert Triple(2, 3, 5) not in generate_candidates(7, 7, 2)
    assert Triple(3, 3, 5) in generate_candidates(4, 2, 0)
    # 2/(q-1) < 1/42 leaves nothing
    assert generate_candidates(97, 97, 0) == []


@pytest.mark.parametrize("q,p", [(4, 2), (7, 7), (9, 3), (13, 13), (16, 2), (25, 5), (29, 29)])
@pytest.mark.parametrize("g0", [0, 1, 2])
def test_candidates_match_brute_force(q, p, g0):
    bound = Fraction(2 * (g0 + 1), q - 1)
    brute = set()
    for t in combinations_with_replacement(range(2, q + 2), 3):
        if chi(t) < 0 and -chi(t) <= bound and q_admissible(t, q, p):
            brute.add(Triple(*t))
    got = generate_candidates(q, p, g0)
    assert set(got) == brute
    assert got == sorted(got) and len(got) == len(set(got))


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_delta_mod_delta2():
    assert delta_mod_delta2((2, 3, 7)) == 0
    assert delta_mod_delta2((2, 3, 8)) == 1
    assert delta_mod_delta2((2, 4, 6)) == 2


def test_reduction_catalog():
    rec = nonhyperbolic_reduction((2, 4, 6), 2, 2)
    assert rec is not None and rec.family == 1 and rec.genus == 0
    assert nonhyperbolic_reduction((3, 9, 27), 3, 3).family == 2
    assert nonhyperbolic_reduction((2, 3, 7), 13, 13) is None
    # unordered input and the infinite marker
    assert nonhyperbolic_reduction((6, 2, 4), 2, 2).family == 1
    assert nonhyperbolic_reduction((3, INFINITY, INFINITY), 3, 3) is not None
