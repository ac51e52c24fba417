"""Finite fields F_{p^r} with deterministic moduli.

Elements are encoded as integers ``c0 + c1*p + ... + c_{r-1}*p^(r-1)`` where
``c_i`` are the coefficients of the residue class modulo the defining
polynomial.  :class:`FieldSpec` works directly on these codes (fast path used
by the matrix layer); :class:`FieldElement` wraps a code with operator
overloading for readable call sites and tests.

Fields of order up to ``TABLE_LIMIT`` get exp/log tables built lazily, which
turns multiplication and inversion into lookups.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import count
from math import gcd

TABLE_LIMIT = 1 << 16  # covers F_{q^2} for every q <= 253


class FieldError(ValueError):
    """Raised for invalid field construction or arithmetic."""


# ---------------------------------------------------------------------------
# integers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization, returned as ((prime, exponent), ...)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, r) with q = p^r, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    return f[0]


def prime_to_part(n: int, p: int) -> int:
    """Largest divisor of n coprime to p."""
    while n % p == 0:
        n //= p
    return n


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)^x; n = 1 gives 1."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


# ---------------------------------------------------------------------------
# polynomials over Z/pZ, coefficient lists low -> high

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim(list(f))
    inv_lead = pow(g[-1], -1, p)
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _trim(f)
    return f


def _pmulmod(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _pmod(out, m, p)


def _ppowmod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(f, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over Z/pZ by the gcd test."""
    f = list(modulus)
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        return False
    if r == 1:
        return True
    if f[0] == 0:
        return False
    # Frobenius as a matrix: row i holds x^(i p) mod f
    xp = _ppowmod([0, 1], p, f, p)
    rows, acc = [], [1]
    for _ in range(r):
        rows.append(acc + [0] * (r - len(acc)))
        acc = _pmulmod(acc, xp, f, p)
    xpk = [0, 1] + [0] * (r - 2)
    for _ in range(1, r // 2 + 1):
        out = [0] * r
        for c, row in zip(xpk, rows):
            if c:
                out = [(u + c * v) % p for u, v in zip(out, row)]
        xpk = out
        diff = list(xpk)
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# fields

@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^r} = F_p[x]/(modulus).

    ``modulus`` holds the r+1 coefficients of a monic irreducible polynomial,
    constant term first.
    """

    p: int
    r: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.r

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.r})"

    # -- encoding -----------------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + c % self.p
        return a

    def from_int(self, n: int) -> int:
        """Image of the rational integer n."""
        return n % self.p

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        return FieldElement(self, self.encode(value))

    def elements(self):
        return range(self.q)

    # -- arithmetic on codes --------------------------------------------------
    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.r == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.r == 1:
            return -a % p
        if p == 2:
            return a
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += (-x % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _polymul(self, a: int, b: int) -> int:
        prod = _pmulmod(list(self.coeffs(a)), list(self.coeffs(b)), list(self.modulus), self.p)
        return self.encode(prod)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.r == 1:
            return a * b % self.p
        t = _tables(self)
        if t is None:
            return self._polymul(a, b)
        exp, log = t
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.r == 1:
            return pow(a, -1, self.p)
        t = _tables(self)
        if t is None:
            return self.pow(a, self.q - 2)
        exp, log = t
        return exp[(-log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.r == 1:
            return pow(a, e, self.p)
        t = _tables(self)
        if t is not None:
            exp, log = t
            return exp[(log[a] * e) % (self.q - 1)]
        # square-and-multiply
        result, base = 1, a
        while e:
            if e & 1:
                result = self._polymul(result, base)
            base = self._polymul(base, base)
            e >>= 1
        return result

    # -- structure ----------------------------------------------------------
    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        for ell, e in factorize(n) if n > 1 else ():
            for _ in range(e):
                if self.pow(a, n // ell) == 1:
                    n //= ell
                else:
                    break
        return n

    @property
    def generator(self) -> int:
        return _generator(self)

    def root_of_unity(self, n: int) -> int:
        """A primitive n-th root of unity (deterministic choice)."""
        if n < 1 or (self.q - 1) % n:
            raise FieldError(f"{n} does not divide {self.q - 1}")
        return _root_of_unity(self, n)

    def _root_of_unity(self, n: int) -> int:
        if _tables(self) is not None or self.r == 1:
            return self.pow(self.generator, (self.q - 1) // n)
        # q - 1 is too big to factor; use a root of smooth order M with n | M
        bound = 128
        while bound < n:
            bound *= 2
        omega, M = _smooth_root(self, bound)
        return self.pow(omega, M // n)

    def frobenius(self, a: int) -> int:
        """a^p, via a cached F_p-linear matrix for large fields."""
        if self.r == 1 or _tables(self) is not None:
            return self.pow(a, self.p)
        cols = _frobenius_columns(self)
        out = [0] * self.r
        for c, col in zip(self.coeffs(a), cols):
            if c:
                out = [(x + c * y) % self.p for x, y in zip(out, col)]
        return self.encode(out)

    def frobenius_degree(self, a: int) -> int:
        """Degree over F_p of the subfield generated by a."""
        d, x = 1, self.frobenius(a)
        while x != a:
            x = self.frobenius(x)
            d += 1
        return d

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a: int) -> int:
        """Some square root of a square a (smallest code among the two)."""
        if a == 0:
            return 0
        if not self.is_square(a):
            raise FieldError("not a square")
        t = _tables(self)
        if t is not None and self.p != 2:
            exp, log = t
            root = exp[log[a] // 2]
            return min(root, self.neg(root))
        if self.p == 2:
            return self.pow(a, self.q // 2)
        for x in self.elements():
            if self.mul(x, x) == a:
                return x
        raise AssertionError("unreachable")

    def subfield(self, d: int) -> list[int]:
        """Codes of the unique subfield of order p^d, in increasing order."""
        if self.r % d:
            raise FieldError(f"no subfield of degree {d} in {self!r}")
        sub_order = self.p ** d
        gamma = self.pow(self.generator, (self.q - 1) // (sub_order - 1))
        out, x = [0], 1
        for _ in range(sub_order - 1):
            out.append(x)
            x = self.mul(x, gamma)
        return sorted(out)

    def in_subfield(self, a: int, d: int) -> bool:
        return self.pow(a, self.p ** d) == a


@lru_cache(maxsize=None)
def _tables(spec: FieldSpec):
    if spec.q > TABLE_LIMIT or spec.r == 1:
        return None
    n = spec.q - 1
    g = _generator_slow(spec)
    exp = [0] * n
    log = [0] * spec.q
    x = 1
    for i in range(n):
        exp[i] = x
        log[x] = i
        x = spec._polymul(x, g)
    return exp, log


def _order_slow(spec: FieldSpec, a: int) -> int:
    n = spec.q - 1
    pw = lambda x, e: spec.encode(_ppowmod(list(spec.coeffs(x)), e, list(spec.modulus), spec.p))
    for ell, e in factorize(n) if n > 1 else ():
        for _ in range(e):
            if pw(a, n // ell) == 1:
                n //= ell
            else:
                break
    return n


@lru_cache(maxsize=None)
def _smooth_root(spec: FieldSpec, bound: int) -> tuple[int, int]:
    """(omega, M): M is the largest divisor of q - 1 dividing lcm(1..bound), omega of order M."""
    n, M, primes = spec.q - 1, 1, []
    for ell in range(2, bound + 1):
        if not is_prime(ell) or n % ell:
            continue
        primes.append(ell)
        k = ell
        while k * ell <= bound and n % (k * ell) == 0:
            k *= ell
        M *= k
    # codes below p are prime-field elements and rarely work; start at x
    for a in range(spec.p, spec.q):
        x = spec.pow(a, n // M)
        if all(spec.pow(x, M // ell) != 1 for ell in primes):
            return x, M
    raise AssertionError("multiplicative group is cyclic")


@lru_cache(maxsize=None)
def _root_of_unity(spec: FieldSpec, n: int) -> int:
    return spec._root_of_unity(n)


@lru_cache(maxsize=None)
def _frobenius_columns(spec: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """Coefficient vectors of x^(i p) for i < r."""
    x = spec.encode([0, 1] + [0] * (spec.r - 2))
    xp = spec.pow(x, spec.p)
    cols, acc = [], 1
    for _ in range(spec.r):
        cols.append(spec.coeffs(acc))
        acc = spec.mul(acc, xp)
    return tuple(cols)


@lru_cache(maxsize=None)
def _generator_slow(spec: FieldSpec) -> int:
    for a in range(1, spec.q):
        if _order_slow(spec, a) == spec.q - 1:
            return a
    raise AssertionError("multiplicative group is cyclic")


@lru_cache(maxsize=None)
def _generator(spec: FieldSpec) -> int:
    if spec.r > 1 and _tables(spec) is not None:
        return _generator_slow(spec)
    for a in range(1, spec.q):
        if spec.order_of(a) == spec.q - 1:
            return a
    raise AssertionError("multiplicative group is cyclic")


@lru_cache(maxsize=None)
def build_field(p: int, r: int = 1) -> FieldSpec:
    """F_{p^r} with a deterministic irreducible monic modulus.

    Up to ``TABLE_LIMIT`` elements the modulus is the smallest candidate
    x^r + c_{r-1}x^{r-1} + ... + c_0 by the integer code of (c_0, ..., c_{r-1});
    r = 1 always gives the modulus x.  Larger fields draw candidates from a
    generator seeded with (p, r), since sparse low-code polynomials of high
    degree are often all reducible.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if r < 1:
        raise FieldError(f"extension degree must be >= 1, got {r}")
    if p ** r <= TABLE_LIMIT:
        codes = range(p ** r)
    else:
        rng = random.Random(p * 1000003 + r)
        codes = (rng.randrange(p ** r) for _ in count())
    for code in codes:
        coeffs = []
        c = code
        for _ in range(r):
            c, d = divmod(c, p)
            coeffs.append(d)
        modulus = tuple(coeffs) + (1,)
        if is_irreducible(modulus, p):
            return FieldSpec(p, r, modulus)
    raise AssertionError(f"no irreducible polynomial of degree {r} over F_{p}")


# ---------------------------------------------------------------------------
# element wrapper

@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError(f"field mismatch: {self.spec!r} vs {other.spec!r}")
            return other.code
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def _wrap(self, code: int) -> FieldElement:
        return FieldElement(self.spec, code)

    def __add__(self, other):
        return self._wrap(self.spec.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.spec.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.spec.sub(self._other(other), self.code))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.code))

    def __mul__(self, other):
        return self._wrap(self.spec.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.spec.div(self.code, self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.spec.div(self._other(other), self.code))

    def __pow__(self, e: int):
        return self._wrap(self.spec.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.spec.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.spec.r == 1:
            return f"{self.code} (mod {self.spec.p})"
        terms = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(reversed(terms)) or "0") + f" in {self.spec!r}"


def element_order(x: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    return x.spec.order_of(x.code)


def root_of_unity(spec: FieldSpec, n: int) -> FieldElement:
    """A deterministic element of exact order n (a power of the fixed generator)."""
    return FieldElement(spec, spec.root_of_unity(n))


def is_square(x: FieldElement) -> bool:
    return x.spec.is_square(x.code)


def frobenius_degree(x: FieldElement) -> int:
    """Degree over F_p of the subfield generated by x."""
    return x.spec.frobenius_degree(x.code)


def lambda_reduced(spec: FieldSpec, n: int, p: int | None = None) -> FieldElement:
    """Reduction of 2cos(2pi/n) = zeta_n + 1/zeta_n at a prime above p.

    The p-power part of zeta_n reduces to 1, so only the prime-to-p part of
    n matters.
    """
    p = spec.p if p is None else p
    if p != spec.p:
        raise FieldError(f"prime {p} is not the characteristic of {spec!r}")
    n1 = prime_to_part(n, p)
    if (spec.q - 1) % n1 == 0:
        w = root_of_unity(spec, n1)
        return w + w.inverse()
    if (spec.q + 1) % n1:
        raise FieldError(f"lambda_{n} does not reduce into {spec!r}")
    # zeta lives in the quadratic extension; pull lambda back through its
    # minimal polynomial over F_p
    K = build_field(p, 2 * spec.r)
    w = K.root_of_unity(n1)
    lam = K.add(w, K.inv(w))
    poly = _minimal_polynomial(K, lam)
    for c in range(spec.q):
        acc = 0
        for coef in reversed(poly):
            acc = spec.add(spec.mul(acc, c), spec.from_int(coef))
        if acc == 0:
            return FieldElement(spec, c)
    raise AssertionError("minimal polynomial has no root in the residue field")


def _minimal_polynomial(K: FieldSpec, a: int) -> list[int]:
    """Coefficients over F_p (constant first) of the minimal polynomial of a."""
    conj, x = [a], K.frobenius(a)
    while x != a:
        conj.append(x)
        x = K.frobenius(x)
    poly = [1]  # product of (X - c) with coefficients in K
    for c in conj:
        shifted = [0] + poly
        scaled = [K.mul(K.neg(c), t) for t in poly] + [0]
        poly = [K.add(u, v) for u, v in zip(shifted, scaled)]
    if any(t >= K.p for t in poly):
        raise AssertionError("minimal polynomial is not defined over F_p")
    return poly


def lcm(*values: int) -> int:
    return reduce(lambda x, y: x * y // gcd(x, y), values, 1)
