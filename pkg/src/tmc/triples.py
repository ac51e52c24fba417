"""Hyperbolic triples (a, b, c), q-admissibility and candidate generation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .ffarith import factorize

INFINITY = None  # symbolic marker for an infinite entry (catalog only)


@dataclass(frozen=True, order=True)
class Triple:
    """A signature a <= b <= c with integer entries >= 2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 2:
            raise ValueError(f"triple entries must be >= 2: {tuple(self)}")
        if not self.a <= self.b <= self.c:
            raise ValueError(f"triple must be sorted; use Triple.of{tuple(self)}")

    @classmethod
    def of(cls, *entries: int) -> Triple:
        if len(entries) == 1:
            entries = tuple(entries[0])
        a, b, c = sorted(entries)
        return cls(a, b, c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"

    @property
    def chi(self) -> Fraction:
        return chi(self)

    @property
    def is_hyperbolic(self) -> bool:
        return chi(self) < 0

    @property
    def lcm(self) -> int:
        from math import lcm
        return lcm(self.a, self.b, self.c)


def chi(triple) -> Fraction:
    """1/a + 1/b + 1/c - 1, with None (infinity) contributing 0."""
    return sum((Fraction(1, s) for s in triple if s is not INFINITY), Fraction(0)) - 1


def q_admissible(triple, q: int, p: int) -> bool:
    """Each entry divides q - 1 or q + 1, or equals p."""
    return all(s == p or (q - 1) % s == 0 or (q + 1) % s == 0 for s in triple)


def divisors(n: int) -> list[int]:
    divs = [1]
    for ell, e in factorize(n):
        divs = [d * ell ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def generate_candidates(q: int, p: int, g0: int) -> list[Triple]:
    """Sorted q-admissible hyperbolic triples with |chi| <= 2(g0 + 1)/(q - 1)."""
    bound = Fraction(2 * (g0 + 1), q - 1)
    orders = sorted({d for d in divisors(q - 1) + divisors(q + 1) if d >= 2} | {p})
    out = []
    for a, b in combinations_with_replacement(orders, 2):
        rest = Fraction(1, a) + Fraction(1, b) - 1
        for c in orders:
            if c < b:
                continue
            x = -(rest + Fraction(1, c))
            if x <= 0:
                continue
            if x > bound:
                # |chi| grows with c
                break
            out.append(Triple(a, b, c))
    return sorted(out)


def delta_mod_delta2(triple) -> int:
    """Rank of the elementary abelian 2-group Delta / Delta^(2)."""
    odd = sum(1 for s in triple if s is not INFINITY and s % 2 == 1)
    if odd >= 2:
        return 0
    return 1 if odd == 1 else 2


# ---------------------------------------------------------------------------
# catalog of hyperbolic triples whose reduction is a non-hyperbolic triple

@dataclass(frozen=True)
class ReductionRecord:
    family: int
    pattern: str
    p: int
    q: int
    pxl: int
    field: str
    genus: int = 0


def _split(n, ell):
    """(k, u) with n = ell^k * u and ell not dividing u."""
    k = 0
    while n % ell == 0:
        n //= ell
        k += 1
    return k, n


# Each family: number, pattern, prime ell, shapes, exponent condition, p, q, PXL, E.
# A shape lists (unit, exponent label) per slot; a unit of None is an infinite slot.
_I = (INFINITY, None)
_FAMILIES = [
    (1, "(2^ka,2^kb,3*2^kc)", 2,
     [[(1, "a"), (1, "b"), (3, "c")], [(3, "c"), _I, _I], [(1, "a"), (3, "c"), _I]],
     lambda k: k.get("a", 1) >= 1 and ("b" not in k or k["a"] < k["b"]), 2, 2, 1, "Q"),
    (2, "(3^ka,3^kb,3^kc)", 3,
     [[(1, "a"), (1, "b"), (1, "c")], [(1, "a"), _I, _I], [(1, "a"), (1, "b"), _I], [_I, _I, _I]],
     lambda k: all(v >= 1 for v in k.values())
     and k.get("a", 1) <= k.get("b", k.get("a", 1))
     and ("c" not in k or k["b"] < k["c"]), 3, 3, 1, "Q"),
    (3, "(2*3^ka,3^kb,3^kc)", 3,
     [[(2, "a"), (1, "b"), (1, "c")], [(2, "a"), (1, "b"), _I], [(2, "a"), _I, _I]],
     lambda k: k.get("b", 1) >= 1 and k.get("b", 0) <= k.get("c", k.get("b", 0)), 3, 3, 1, "Q"),
    (4, "(2*3^ka,3^kb,4*3^kc)", 3,
     [[(2, "a"), (1, "b"), (4, "c")], [(2, "a"), (4, "b"), _I]],
     lambda k: k.get("b", 1) >= 1, 3, 3, -1, "Q"),
    (5, "(2^ka,3*2^kb,5*2^kc)", 2,
     [[(1, "a"), (3, "b"), (5, "c")], [(3, "b"), (5, "c"), _I]],
     lambda k: k.get("a", 1) >= 1, 2, 4, 1, "Q(sqrt5)"),
    (6, "(2*5^ka,3*5^kb,5^kc)", 5,
     [[(2, "a"), (3, "b"), (1, "c")], [(2, "a"), (3, "b"), _I]],
     lambda k: k.get("c", 1) >= 1, 5, 5, 1, "Q(sqrt5)"),
]


def _match(entries, shape, ell):
    ks = {}
    for s, (unit, label) in zip(entries, shape):
        if unit is INFINITY:
            if s is not INFINITY:
                return None
            continue
        if s is INFINITY:
            return None
        k, u = _split(s, ell)
        if u != unit:
            return None
        ks[label] = k
    return ks


def nonhyperbolic_reduction(entries, p: int, q: int) -> ReductionRecord | None:
    """Look up (entries; p, q) in the catalog of reductions to non-hyperbolic triples.

    ``entries`` may contain :data:`INFINITY` and is matched as an unordered
    triple.  Families other than the first also require ka*kb*kc != 1 over the
    exponents present.
    """
    from itertools import permutations
    from math import prod

    entries = tuple(entries)
    for family, pattern, ell, shapes, cond, fp, fq, pxl, field in _FAMILIES:
        if (fp, fq) != (p, q):
            continue
        for shape in shapes:
            for perm in set(permutations(entries)):
                ks = _match(perm, shape, ell)
                if ks is None or not cond(ks):
                    continue
                if family > 2 and len(ks) == 3 and prod(ks.values()) == 1:
                    continue
                return ReductionRecord(family, pattern, p, q, pxl, field)
    return None
