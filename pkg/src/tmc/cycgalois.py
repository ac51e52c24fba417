"""Splitting of rational primes in the fields E(a,b,c) and F(a,b,c).

Both fields sit inside Q(zeta_{2m})^+ with m = lcm(a, b, c), so everything is
read off from subgroups of G = (Z/2mZ)^x (all subgroups considered here
contain -1).  sigma_k sends zeta_{2m} to zeta_{2m}^k; it fixes lambda_{2s} iff
k = +-1 mod 2s, fixes lambda_s iff k = +-1 mod s, and when k = s +- 1 mod 2s
it negates lambda_{2s}.

For a prime p write 2m = p^v m'.  Inertia at p is the kernel of reduction
G -> (Z/m'Z)^x and the decomposition group is the preimage of <p>.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .ffarith import (FieldSpec, build_field, is_prime, lcm, multiplicative_order,
                      prime_to_part)
from .triples import Triple


@dataclass(frozen=True)
class FieldTowerData:
    triple: Triple
    m: int
    H_E: frozenset
    H_F: frozenset
    degE: int
    degF: int

    @property
    def modulus(self) -> int:
        return 2 * self.m

    @property
    def units(self) -> tuple[int, ...]:
        return _units(2 * self.m)


@dataclass(frozen=True)
class PrimeSplitting:
    p: int
    eE: int
    fE: int
    gE: int
    eF: int
    fF: int
    gF: int
    degE: int
    degF: int

    @property
    def qE(self) -> int:
        return self.p ** self.fE

    @property
    def qF(self) -> int:
        return self.p ** self.fF

    @property
    def pxl(self) -> int:
        """+1 when the image is PSL2 (p splits completely in F|E), else -1."""
        return 1 if (self.eF == self.eE and self.fF == self.fE) else -1

    @property
    def unramified_in_F_over_E(self) -> bool:
        return self.eF == self.eE


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n) if gcd(k, n) == 1) if n > 1 else (0,)


def _pm1(k: int, n: int) -> bool:
    return (k - 1) % n == 0 or (k + 1) % n == 0


def _flip(k: int, s: int) -> bool:
    """sigma_k negates lambda_{2s} (given k = +-1 mod s)."""
    return not _pm1(k, 2 * s)


def _check(triple) -> Triple:
    if not isinstance(triple, Triple):
        if any(s is None for s in triple):
            raise ValueError("infinite entries are not supported")
        triple = Triple.of(*triple)
    return triple


@lru_cache(maxsize=None)
def field_tower(triple) -> FieldTowerData:
    """Fixing groups and degrees of E(a,b,c) and F(a,b,c)."""
    triple = _check(triple)
    m = triple.lcm
    n = 2 * m
    G = _units(n)
    H_F = frozenset(k for k in G if all(_pm1(k, 2 * s) for s in triple))
    has_two = 2 in tuple(triple)
    H_E = []
    for k in G:
        if not all(_pm1(k, s) for s in triple):
            continue
        # lambda_4 = 0 kills the product generator when a = 2
        if not has_two and sum(_flip(k, s) for s in triple) % 2:
            continue
        H_E.append(k)
    H_E = frozenset(H_E)
    return FieldTowerData(triple, m, H_E, H_F, len(G) // len(H_E), len(G) // len(H_F))


def _local_groups(n: int, p: int):
    """Inertia and decomposition subgroups of (Z/nZ)^x at p."""
    m1 = prime_to_part(n, p)
    G = _units(n)
    inertia = frozenset(k for k in G if k % m1 == 1 % m1)
    powers = set()
    x = 1 % m1
    while True:
        powers.add(x)
        x = x * p % m1
        if x in powers:
            break
    decomp = frozenset(k for k in G if k % m1 in powers)
    return inertia, decomp


def _product(A, B, n) -> frozenset:
    return frozenset(a * b % n for a in A for b in B)


def _efg(H, inertia, decomp, n):
    G = _units(n)
    IH = _product(inertia, H, n)
    DH = _product(decomp, H, n)
    e = len(IH) // len(H)
    f = len(DH) // len(IH)
    g = len(G) // len(DH)
    return e, f, g


@lru_cache(maxsize=None)
def prime_splitting(triple, p: int) -> PrimeSplitting:
    """Ramification index, residue degree and number of primes above p in E and F."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    tower = field_tower(triple)
    n = tower.modulus
    inertia, decomp = _local_groups(n, p)
    eE, fE, gE = _efg(tower.H_E, inertia, decomp, n)
    eF, fF, gF = _efg(tower.H_F, inertia, decomp, n)
    return PrimeSplitting(p, eE, fE, gE, eF, fF, gF, tower.degE, tower.degF)


def prime_classes(triple, p: int) -> list[int]:
    """One unit i mod 2m per prime of E above p.

    Reducing zeta_{2m} -> z^i for a fixed reduction z runs through the primes
    above p; i and j give the same prime of E iff they agree modulo the
    decomposition group times the fixing group of E.
    """
    tower = field_tower(triple)
    n = tower.modulus
    _, decomp = _local_groups(n, p)
    DH = _product(decomp, tower.H_E, n)
    seen, reps = set(), []
    for i in _units(n):
        if i in seen:
            continue
        reps.append(i)
        seen.update(i * d % n for d in DH)
    return reps


def dFE_coprime(triple, p: int) -> bool:
    """True iff primes of E above p are unramified in F."""
    triple = _check(triple)
    if (2 * triple.a * triple.b * triple.c) % p:
        return True
    return prime_splitting(triple, p).unramified_in_F_over_E


# ---------------------------------------------------------------------------
# reductions of cyclotomic quantities at a prime above p

class CyclotomicReduction:
    """Reductions of zeta_{2m}-expressions at the primes above p.

    Works in F_{p^R} where R is a multiple of the residue degree of E and of
    the order of p modulo the prime-to-p part of 2m, so the residue fields of
    E and F and all needed roots of unity live in one field.  ``z`` is the
    fixed reduction of zeta_{2m}; ``embedding`` i replaces it by z^i.
    """

    def __init__(self, triple, p: int, degree: int | None = None):
        self.triple = _check(triple)
        self.p = p
        self.m = self.triple.lcm
        self.splitting = prime_splitting(self.triple, p)
        n1 = prime_to_part(2 * self.m, p)
        R = lcm(multiplicative_order(p, n1), self.splitting.fE, self.splitting.fF)
        if degree is not None:
            if degree % R:
                raise ValueError(f"degree {degree} is not a multiple of {R}")
            R = degree
        self.field: FieldSpec = build_field(p, R)
        self.n1 = n1
        self.z = self.field.root_of_unity(n1)

    def zeta(self, k: int, i: int = 1) -> int:
        """Reduction of zeta_{2m}^(k*i)."""
        return self.field.pow(self.z, k * i)

    def lam(self, s: int, i: int = 1) -> int:
        """Reduction of lambda_s = zeta_s + 1/zeta_s under embedding i."""
        F = self.field
        w = self.zeta(2 * self.m // s, i)
        return F.add(w, F.inv(w))

    def beta(self, i: int = 1) -> int:
        """lambda_{2a}^2 + lambda_{2b}^2 + lambda_{2c}^2 + lambda_{2a}lambda_{2b}lambda_{2c} - 4."""
        F = self.field
        la, lb, lc = (self.lam(2 * s, i) for s in self.triple)
        acc = F.add(F.add(F.mul(la, la), F.mul(lb, lb)), F.mul(lc, lc))
        acc = F.add(acc, F.mul(F.mul(la, lb), lc))
        return F.sub(acc, F.from_int(4))

    def E_generators(self, i: int = 1) -> list[int]:
        F = self.field
        a, b, c = self.triple
        gens = [self.lam(s, i) for s in self.triple]
        if a != 2:
            gens.append(F.mul(F.mul(self.lam(2 * a, i), self.lam(2 * b, i)), self.lam(2 * c, i)))
        return gens

    def F_generators(self, i: int = 1) -> list[int]:
        return [self.lam(2 * s, i) for s in self.triple]


def frobenius_residue_degrees(triple, p: int) -> tuple[int, int]:
    """(fE, fF) read off from Frobenius degrees of reduced elements.

    The elements are the lambda generators of each field together with the
    Gaussian periods of its largest subfield unramified at p (trace of
    zeta_{m'}^j down to that subfield).  Trace is surjective in unramified
    extensions, so the periods generate the residue field even when the
    lambda generators are divisible by p.  Only finite-field arithmetic is
    used; the decomposition group is never consulted.
    """
    triple = _check(triple)
    tower = field_tower(triple)
    n = 2 * triple.lcm
    n1 = prime_to_part(n, p)
    F, powers = _unit_powers(p, n1)

    def lam(s):
        k = n // s
        return F.add(powers[k % n1], powers[-k % n1])

    a, b, c = triple
    gens_E = [lam(s) for s in triple]
    if a != 2:
        gens_E.append(F.mul(F.mul(lam(2 * a), lam(2 * b)), lam(2 * c)))
    gens_F = [lam(2 * s) for s in triple]
    fE = lcm(_degree(F, gens_E), _period_degree(p, n1, frozenset(h % n1 for h in tower.H_E)))
    fF = lcm(_degree(F, gens_F), _period_degree(p, n1, frozenset(h % n1 for h in tower.H_F)))
    return fE, fF


@lru_cache(maxsize=None)
def _unit_powers(p: int, n1: int):
    """F_{p^R} containing the n1-th roots of unity, and the powers of a fixed one."""
    F = build_field(p, multiplicative_order(p, n1))
    z = F.root_of_unity(n1)
    powers = [1]
    for _ in range(n1 - 1):
        powers.append(F.mul(powers[-1], z))
    return F, powers


def _degree(F: FieldSpec, elements) -> int:
    f = 1
    for x in elements:
        f = lcm(f, F.frobenius_degree(x))
        if f == F.r:
            break
    return f


@lru_cache(maxsize=None)
def _period_degree(p: int, n1: int, image: frozenset) -> int:
    """Residue degree generated by the periods sum_{h in image} zeta_{n1}^(j h)."""
    F, powers = _unit_powers(p, n1)
    hs = sorted(image)

    def periods():
        for j in range(n1):
            acc = 0
            for h in hs:
                acc = F.add(acc, powers[j * h % n1])
            yield acc

    return _degree(F, periods())


def kronecker_split_test(triple, p: int) -> int:
    """+1 iff lambda_s + 2 is a square in the residue field of E for s = a, b, c.

    Only valid for p coprime to 2abc.
    """
    triple = _check(triple)
    if (2 * triple.a * triple.b * triple.c) % p == 0:
        raise ValueError(f"p = {p} divides 2abc; use prime_splitting")
    red = CyclotomicReduction(triple, p)
    F = red.field
    fE = red.splitting.fE
    # (F_{q})^x squares inside F_{p^R}: x^((q-1)/2) == 1 for x in F_q
    qE = p ** fE
    for s in triple:
        if s == 2:
            continue  # lambda_4 = 0 already lies in E
        v = F.add(red.lam(s), F.from_int(2))
        if v == 0:
            raise AssertionError("lambda_s + 2 vanishes at a prime coprime to 2abc")
        if F.pow(v, (qE - 1) // 2) != 1:
            return -1
    return 1


def order_condition(triple, p: int) -> bool:
    """Whenever p divides an entry s, s = p (else the reduction of delta_s has smaller order)."""
    return all(s % p or s == p for s in _check(triple))


def beta_admissible(triple, p: int, *, count: bool = False):
    """Is there a prime of E above p not dividing beta(a,b,c)?

    Follows the residue-field check: immediate for p coprime to 2abc;
    otherwise evaluate beta at every embedding zeta_{2m} -> z^i and require
    the order condition.  With ``count=True`` return the number of primes of
    E above p that pass instead of a boolean.
    """
    triple = _check(triple)
    split = prime_splitting(triple, p)
    if (2 * triple.a * triple.b * triple.c) % p:
        return split.gE if count else True
    if not order_condition(triple, p):
        return 0 if count else False
    red = CyclotomicReduction(triple, p)
    good = [i for i in prime_classes(triple, p) if red.beta(i) != 0]
    return len(good) if count else bool(good)
