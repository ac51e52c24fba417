"""Genus formulas for X(a,b,c;p), X_0(a,b,c;p), X_1(a,b,c;p) and the search bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .triples import Triple, chi, q_admissible


class GenusError(ValueError):
    """Inconsistent input: inadmissible triple or a non-integral genus."""


@dataclass(frozen=True)
class GenusInput:
    triple: Triple
    p: int
    q: int
    pxl: int
    split2: bool | None = None

    def __post_init__(self):
        if self.pxl not in (1, -1):
            raise GenusError(f"pxl must be +1 or -1, got {self.pxl}")


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise GenusError(f"non-integral {what}: {value}")
    return int(value)


def genus_galois(triple, group_order: int) -> int:
    """1 - (#G/2) chi(a,b,c) for a Galois Belyi map with group of the given order."""
    return _integral(1 - Fraction(group_order, 2) * chi(triple), "genus")


def pxl_order(q: int, pxl: int) -> int:
    """Order of PSL2(F_q) (pxl = +1) or PGL2(F_q) (pxl = -1)."""
    n = q * (q - 1) * (q + 1)
    return n // 2 if pxl == 1 and q % 2 else n


def orbit_count_x0(s: int, q: int, p: int) -> int:
    """k_s for s >= 3 or s = p: the number of nontrivial orbits on P^1(F_q)."""
    if s == p:
        return q // s
    if (q - 1) % s == 0:
        return (q - 1) // s
    if (q + 1) % s == 0:
        return (q + 1) // s
    raise GenusError(f"order {s} impossible in PGL2(F_{q})")


def round_half_down(x: Fraction) -> int:
    """Nearest integer, halves rounded down (3/2 -> 1, 7/8 -> 1)."""
    n = x.numerator // x.denominator
    frac = x - n
    return n + 1 if frac > Fraction(1, 2) else n


def x0_ramification(inp: GenusInput) -> tuple[int, int, int]:
    """(k_a, k_b, k_c) orbit counts for X_0 -> P^1, with k_2 fixed by integrality."""
    t, q, p = inp.triple, inp.q, inp.p
    if not q_admissible(t, q, p):
        raise GenusError(f"{t} is not {q}-admissible")
    ks = []
    for s in t:
        if s == 2 and q % 2:
            ks.append(None)
        else:
            ks.append(orbit_count_x0(s, q, p))
    if ks[0] is not None:
        return tuple(ks)
    # a = 2, q odd: k_2 in {(q-1)/2, (q+1)/2}, exactly one makes g integral
    rest = sum(k * (s - 1) for k, s in zip(ks[1:], tuple(t)[1:]))
    options = [k for k in ((q - 1) // 2, (q + 1) // 2) if (k + rest) % 2 == 0]
    if len(options) != 1:
        raise GenusError(f"ambiguous k_2 for {t} over F_{q}")
    k2 = options[0]
    if inp.split2 is not None and inp.split2 != (k2 == (q - 1) // 2):
        raise GenusError(f"sigma_2 split={inp.split2} contradicts integrality for {t}, q={q}")
    return (k2,) + tuple(ks[1:])


def genus_x0(inp: GenusInput) -> int:
    """Genus of X_0(a,b,c;p) by Riemann-Hurwitz for the degree q+1 cover."""
    ks = x0_ramification(inp)
    twice = -2 * (inp.q + 1) + sum(k * (s - 1) for k, s in zip(ks, inp.triple))
    return _integral(Fraction(twice + 2, 2), "X_0 genus")


def genus_x0_display(inp: GenusInput) -> int:
    """-q + 1/2 sum round(q/s)(s-1) + eps, with eps in {0, 1/2} fixed by integrality."""
    base = -inp.q + Fraction(1, 2) * sum(round_half_down(Fraction(inp.q, s)) * (s - 1) for s in inp.triple)
    for eps in (Fraction(0), Fraction(1, 2)):
        if (base + eps).denominator == 1:
            return int(base + eps)
    raise GenusError("no epsilon gives an integral genus")


def coset_index_h1(q: int, pxl: int) -> int:
    """[G : H_1]."""
    return (q * q - 1) // 2 if pxl == 1 and q % 2 else q * q - 1


def x1_ramification(inp: GenusInput) -> tuple[int, int, int]:
    t, q, p = inp.triple, inp.q, inp.p
    if not q_admissible(t, q, p):
        raise GenusError(f"{t} is not {q}-admissible")
    psl_odd = inp.pxl == 1 and q % 2 == 1
    ks = []
    for s in t:
        if s == p:
            ks.append((q * q - q) // (2 * p) if psl_odd else (q * q - q) // p)
        else:
            ks.append((q * q - 1) // (2 * s) if psl_odd else (q * q - 1) // s)
    return tuple(ks)


def genus_x1(inp: GenusInput) -> int:
    """Genus of X_1(a,b,c;p)."""
    ks = x1_ramification(inp)
    value = -coset_index_h1(inp.q, inp.pxl) + 1 + Fraction(1, 2) * sum(k * (s - 1) for k, s in zip(ks, inp.triple))
    return _integral(value, "X_1 genus")


def genus_from_cycles(degree: int, cycle_types) -> int:
    """Riemann-Hurwitz genus of a degree-n cover of P^1 branched over three points.

    ``cycle_types`` holds, for each branch point, the orbit lengths of the
    monodromy element.
    """
    twice = -2 * degree + sum(length - 1 for ct in cycle_types for length in ct)
    return _integral(Fraction(twice + 2, 2), "genus")


def q_bound(g0: int) -> int:
    """Largest residue field size that can carry a genus <= g0 curve X_0."""
    if g0 < 0:
        raise ValueError("genus bound must be >= 0")
    return 84 * (g0 + 1) + 1


def chi_bound(q: int, g0: int) -> Fraction:
    """Upper bound 2(g0+1)/(q-1) on |chi(a,b,c)|."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return Fraction(2 * (g0 + 1), q - 1)
