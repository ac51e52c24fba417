"""Matrix images of triangle group generators over residue fields.

The representation is built over F_q = Z_E / p from data that lives in E:
the generators are rescaled so that traces and determinants are in E,

    X_s = lambda_{2s} delta_s                     (s != 2)
    X_a = lambda_{2b} lambda_{2c} delta_a         (a = 2)

so that tr X_s = det X_s = lambda_s + 2, and tr(X_a X_b) is
-lambda_{2a}lambda_{2b}lambda_{2c} (resp. -(lambda_b+2)(lambda_c+2) when
a = 2).  A pair of 2x2 matrices over F_q with these five invariants is unique
up to conjugacy when beta != 0, and its projective image is the reduction of
the triangle group.  Everything happens inside one field F_{p^R} containing
F_q; matrix entries always lie in the subfield F_q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .cycgalois import CyclotomicReduction, order_condition, prime_classes
from .ffarith import FieldSpec, prime_to_part
from .triples import Triple

Mat = tuple  # (a, b, c, d) field codes for [[a, b], [c, d]]


class RepresentationError(ValueError):
    """The requested representation does not exist or has the wrong orders."""


# ---------------------------------------------------------------------------
# raw 2x2 arithmetic on code tuples

def mat_mul(F: FieldSpec, X: Mat, Y: Mat) -> Mat:
    a, b, c, d = X
    e, f, g, h = Y
    m, s = F.mul, F.add
    return (s(m(a, e), m(b, g)), s(m(a, f), m(b, h)), s(m(c, e), m(d, g)), s(m(c, f), m(d, h)))


def mat_det(F: FieldSpec, X: Mat) -> int:
    a, b, c, d = X
    return F.sub(F.mul(a, d), F.mul(b, c))


def mat_trace(F: FieldSpec, X: Mat) -> int:
    return F.add(X[0], X[3])


def mat_scale(F: FieldSpec, lam: int, X: Mat) -> Mat:
    return tuple(F.mul(lam, x) for x in X)


def mat_inv(F: FieldSpec, X: Mat) -> Mat:
    a, b, c, d = X
    dinv = F.inv(mat_det(F, X))
    return (F.mul(d, dinv), F.mul(F.neg(b), dinv), F.mul(F.neg(c), dinv), F.mul(a, dinv))


def is_scalar(X: Mat) -> bool:
    return X[1] == 0 and X[2] == 0 and X[0] == X[3]


def normalize(F: FieldSpec, X: Mat) -> Mat:
    """Scale so that the first nonzero entry is 1."""
    for x in X:
        if x:
            return mat_scale(F, F.inv(x), X)
    raise RepresentationError("zero matrix")


# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProjMatrix:
    """An element of PGL2 over a finite field, compared up to scalars."""

    field: FieldSpec
    entries: Mat

    def __post_init__(self):
        if mat_det(self.field, self.entries) == 0:
            raise RepresentationError("singular matrix")

    @classmethod
    def from_ints(cls, F: FieldSpec, rows) -> ProjMatrix:
        (a, b), (c, d) = rows
        return cls(F, tuple(F.from_int(x) if isinstance(x, int) else x for x in (a, b, c, d)))

    @cached_property
    def normalized(self) -> Mat:
        return normalize(self.field, self.entries)

    def __eq__(self, other):
        return isinstance(other, ProjMatrix) and self.field == other.field and self.normalized == other.normalized

    def __hash__(self):
        return hash((self.field, self.normalized))

    def __mul__(self, other: ProjMatrix) -> ProjMatrix:
        return ProjMatrix(self.field, mat_mul(self.field, self.entries, other.entries))

    def inverse(self) -> ProjMatrix:
        return ProjMatrix(self.field, mat_inv(self.field, self.entries))

    def __pow__(self, n: int) -> ProjMatrix:
        F = self.field
        X = self.entries if n >= 0 else mat_inv(F, self.entries)
        n = abs(n)
        out = (1, 0, 0, 1)
        while n:
            if n & 1:
                out = mat_mul(F, out, X)
            X = mat_mul(F, X, X)
            n >>= 1
        return ProjMatrix(F, out)

    @property
    def det(self) -> int:
        return mat_det(self.field, self.entries)

    @property
    def trace(self) -> int:
        return mat_trace(self.field, self.entries)

    def is_identity(self) -> bool:
        return is_scalar(self.entries)


def projective_order(M: ProjMatrix, bound: int | None = None) -> int:
    """Least n >= 1 with M^n scalar."""
    F = M.field
    bound = bound or F.q + 1
    X = M.entries
    acc = X
    for n in range(1, bound + 1):
        if is_scalar(acc):
            return n
        acc = mat_mul(F, acc, X)
    raise RepresentationError(f"projective order exceeds {bound}")


# ---------------------------------------------------------------------------
# permutation actions

def _p1_points(sub: list[int]):
    return [(1, 0)] + [(x, 1) for x in sub]


def _p1_normalize(F: FieldSpec, v):
    x, z = v
    if z:
        return (F.div(x, z), 1)
    return (1, 0)


def cycle_type(perm: dict) -> list[int]:
    """Sorted orbit lengths of a permutation given as a dict."""
    seen, lengths = set(), []
    for start in perm:
        if start in seen:
            continue
        n, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        lengths.append(n)
    return sorted(lengths)


def p1_permutation(M: ProjMatrix, q: int) -> dict:
    F = M.field
    a, b, c, d = M.entries
    out = {}
    for x, z in _p1_points(subfield_elements(F, q)):
        out[(x, z)] = _p1_normalize(F, (F.add(F.mul(a, x), F.mul(b, z)), F.add(F.mul(c, x), F.mul(d, z))))
    return out


def p1_cycle_type(M: ProjMatrix, q: int | None = None) -> list[int]:
    """Orbit lengths of M on P^1(F_q); q defaults to the size of M's working field."""
    return cycle_type(p1_permutation(M, q or M.field.q))


def subfield_elements(F: FieldSpec, q: int) -> list[int]:
    d = 0
    while F.p ** d != q:
        d += 1
        if d > F.r:
            raise ValueError(f"{q} is not a subfield order of {F!r}")
    return _subfield_cache(F, d)


_SUBFIELDS: dict = {}


def _subfield_cache(F, d):
    key = (F, d)
    if key not in _SUBFIELDS:
        _SUBFIELDS[key] = F.subfield(d)
    return _SUBFIELDS[key]


def _is_square_in(F: FieldSpec, x: int, q: int) -> bool:
    if x == 0 or q % 2 == 0:
        return True
    return F.pow(x, (q - 1) // 2) == 1


class H1Cosets:
    """G / H_1 for G = PSL2(F_q) (pxl = +1) or PGL2(F_q) (pxl = -1).

    A coset is stored as (first column up to sign, determinant class), the
    determinant class being 1 or a fixed non-square mu.  For q even both
    groups agree and the coset is just the first column.
    """

    def __init__(self, F: FieldSpec, q: int, pxl: int):
        self.F, self.q, self.pxl = F, q, pxl
        self.sub = subfield_elements(F, q)
        self.odd = q % 2 == 1
        self.mu = None
        if self.odd:
            self.mu = next(x for x in self.sub if x and not _is_square_in(F, x, q))
        self.psl = pxl == 1 and self.odd

    def _canon(self, v, d):
        F = self.F
        x, z = v
        if not self.odd:
            # characteristic 2: PSL = PGL = SL, rescale to determinant 1
            lam = F.inv(F.sqrt(d))
            return ((F.mul(lam, x), F.mul(lam, z)), 1)
        if self.psl:
            if not _is_square_in(F, d, self.q):
                raise RepresentationError("element is not in PSL2")
            cls = 1
        else:
            cls = 1 if _is_square_in(F, d, self.q) else self.mu
        lam = F.inv(F.sqrt(F.div(d, cls)))
        x, z = F.mul(lam, x), F.mul(lam, z)
        w = min((x, z), (F.neg(x), F.neg(z)))
        return (w, cls)

    def points(self):
        F = self.F
        vecs = [(x, z) for x in self.sub for z in self.sub if x or z]
        classes = [1] if (self.psl or not self.odd) else [1, self.mu]
        return sorted({self._canon(v, c) for v in vecs for c in classes})

    def permutation(self, M: ProjMatrix) -> dict:
        F = self.F
        a, b, c, d = M.entries
        det = mat_det(F, M.entries)
        out = {}
        for (x, z), cls in self.points():
            v = (F.add(F.mul(a, x), F.mul(b, z)), F.add(F.mul(c, x), F.mul(d, z)))
            out[((x, z), cls)] = self._canon(v, F.mul(det, cls))
        return out


def expected_p1_cycle_type(s: int, q: int, p: int, split: bool | None = None) -> list[int]:
    """Closed-form orbit lengths on P^1(F_q) of an element of order s.

    For s = 2 and q odd both q - 1 and q + 1 are even; pass ``split``.
    """
    if s == 1:
        return [1] * (q + 1)
    if s == p:
        kind = "unipotent"
    elif (q - 1) % s == 0 and (q + 1) % s == 0:
        if split is None:
            raise ValueError("order 2 in odd characteristic: split flag required")
        kind = "split" if split else "nonsplit"
    elif (q - 1) % s == 0:
        kind = "split"
    elif (q + 1) % s == 0:
        kind = "nonsplit"
    else:
        raise ValueError(f"no element of order {s} in PGL2(F_{q})")
    if kind == "split":
        return sorted([1, 1] + [s] * ((q - 1) // s))
    if kind == "unipotent":
        return sorted([1] + [p] * (q // p))
    return [s] * ((q + 1) // s)


def expected_h1_cycle_type(s: int, q: int, p: int, pxl: int) -> list[int]:
    """Closed-form orbit lengths on G / H_1 of an element of order s."""
    psl_odd = pxl == 1 and q % 2 == 1
    index = (q * q - 1) // 2 if psl_odd else q * q - 1
    if s == 1:
        return [1] * index
    if s != p:
        return [s] * (index // s)
    if psl_odd:
        return sorted([1] * ((q - 1) // 2) + [p] * ((q * q - q) // (2 * p)))
    return sorted([1] * (q - 1) + [p] * ((q * q - q) // p))


def h1_cycle_type(M: ProjMatrix, pxl: int, q: int | None = None) -> list[int]:
    """Orbit lengths of M acting by left multiplication on G / H_1."""
    return cycle_type(H1Cosets(M.field, q or M.field.q, pxl).permutation(M))


# ---------------------------------------------------------------------------

@dataclass
class TripleRep:
    """Matrices X_a, X_b, X_c over F_q with X_a X_b X_c scalar."""

    triple: Triple
    p: int
    q: int
    pxl: int
    embedding: int
    field: FieldSpec
    X: tuple  # GL2 lifts (code tuples) for a, b, c
    invariants: dict = field(default_factory=dict)

    @property
    def M_a(self) -> ProjMatrix:
        return ProjMatrix(self.field, self.X[0])

    @property
    def M_b(self) -> ProjMatrix:
        return ProjMatrix(self.field, self.X[1])

    @property
    def M_c(self) -> ProjMatrix:
        return ProjMatrix(self.field, self.X[2])

    @property
    def generators(self) -> tuple[ProjMatrix, ProjMatrix, ProjMatrix]:
        return (self.M_a, self.M_b, self.M_c)

    def orders(self) -> tuple[int, int, int]:
        return tuple(projective_order(M) for M in self.generators)


def rep_invariants(red: CyclotomicReduction, i: int) -> dict:
    """Reduced (tr X_a, det X_a, tr X_b, det X_b, tr X_a X_b) under embedding i."""
    F = red.field
    a, b, c = red.triple
    two = F.from_int(2)
    lam = {s: red.lam(s, i) for s in {a, b, c, 2 * a, 2 * b, 2 * c}}
    shifted = {s: F.add(lam[s], two) for s in (a, b, c)}
    if a == 2:
        ta, da = 0, F.mul(shifted[b], shifted[c])
        tab = F.neg(da)
    else:
        ta = da = shifted[a]
        tab = F.neg(F.mul(F.mul(lam[2 * a], lam[2 * b]), lam[2 * c]))
    return {"tr_a": ta, "det_a": da, "tr_b": shifted[b], "det_b": shifted[b], "tr_ab": tab}


def _realize(F: FieldSpec, sub: list[int], ta, da, tb, db, tab) -> tuple[Mat, Mat]:
    """A pair (X, Y) over the subfield with prescribed tr/det of X, Y and tr(XY)."""
    X = (0, F.neg(da), 1, ta)
    for w in sub:
        B = F.add(tb, F.mul(ta, w))
        C = F.add(F.add(F.mul(tab, w), F.mul(da, F.mul(w, w))), db)
        for u in sub:
            if F.add(F.sub(F.mul(u, u), F.mul(B, u)), C) == 0:
                Y = (F.sub(tb, u), F.sub(F.add(tab, F.mul(da, w)), F.mul(ta, u)), w, u)
                return X, Y
    raise RepresentationError("no realization over F_q")


def build_representation(triple, p: int, embedding: int | None = None) -> TripleRep:
    """Matrices over F_q realizing the reduction of Delta(a,b,c) at a prime above p.

    ``embedding`` is a unit i mod 2m selecting the prime (see
    :func:`tmc.cycgalois.prime_classes`); the default is the first class.
    Raises :class:`RepresentationError` when the reduction is not
    irreducible or some generator loses its order.
    """
    triple = triple if isinstance(triple, Triple) else Triple.of(*triple)
    red = CyclotomicReduction(triple, p)
    split = red.splitting
    q = split.qE
    F = red.field
    i = prime_classes(triple, p)[0] if embedding is None else embedding
    inv = rep_invariants(red, i)
    if inv["det_a"] == 0 or inv["det_b"] == 0:
        raise RepresentationError("degenerate generator (lambda_{2s} reduces to 0)")
    if red.beta(i) == 0:
        raise RepresentationError(f"beta vanishes at the prime above {p}: reducible image")
    sub = subfield_elements(F, q)
    subset = set(sub)
    if not all(v in subset for v in inv.values()):
        raise AssertionError("invariants must lie in the residue field of E")
    Xa, Xb = _realize(F, sub, inv["tr_a"], inv["det_a"], inv["tr_b"], inv["det_b"], inv["tr_ab"])
    Xc = mat_inv(F, mat_mul(F, Xa, Xb))
    rep = TripleRep(triple, p, q, split.pxl, i, F, (Xa, Xb, Xc), inv)
    orders = rep.orders()
    if orders != tuple(triple):
        raise RepresentationError(f"projective orders {orders} != {tuple(triple)}")
    return rep


def sigma2_is_split(rep: TripleRep) -> bool:
    """Does the order-2 generator have two fixed points on P^1(F_q)?"""
    if rep.triple.a != 2:
        raise ValueError("sigma_2 is only defined when a = 2")
    if rep.q % 2 == 0:
        raise ValueError("split/non-split is only meaningful for odd q")
    ct = p1_cycle_type(rep.M_a, rep.q)
    fixed = ct.count(1)
    if fixed not in (0, 2):
        raise AssertionError(f"order-2 element with {fixed} fixed points")
    return fixed == 2


# ---------------------------------------------------------------------------
# local maximality of Lambda = Z_E<Delta^(2)>

def delta2_generators(rep: TripleRep) -> list[Mat]:
    """Images of d_s^-1 d_t^2 d_s and d_s d_t d_s^-1 d_t^-1 as matrices of determinant 1."""
    F = rep.field
    out = []
    for S in rep.X:
        Sinv = mat_inv(F, S)
        for T in rep.X:
            T2 = mat_scale(F, F.inv(mat_det(F, T)), mat_mul(F, T, T))
            out.append(mat_mul(F, mat_mul(F, Sinv, T2), S))
            out.append(mat_mul(F, mat_mul(F, mat_mul(F, S, T), Sinv), mat_inv(F, T)))
    return out


def _reduce(F: FieldSpec, basis: list[tuple[int, Mat]], v: Mat) -> Mat:
    """Eliminate v against an echelon basis of (pivot, vector) pairs."""
    v = list(v)
    for piv, b in basis:
        if v[piv]:
            c = v[piv]
            v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, b)]
    return tuple(v)


def _insert(F: FieldSpec, basis, v: Mat) -> bool:
    v = _reduce(F, basis, v)
    for piv, x in enumerate(v):
        if x:
            inv = F.inv(x)
            v = tuple(F.mul(inv, y) for y in v)
            # keep basis fully reduced
            new = []
            for p2, b in basis:
                if b[piv]:
                    c = b[piv]
                    b = tuple(F.sub(y, F.mul(c, z)) for y, z in zip(b, v))
                new.append((p2, b))
            basis[:] = new + [(piv, v)]
            return True
    return False


def algebra_span(F: FieldSpec, gens: list[Mat]) -> list[Mat]:
    """F_q-basis of the algebra generated by gens (entries in F_q) and 1."""
    basis: list = []
    elems: list[Mat] = []
    for g in [(1, 0, 0, 1)] + list(gens):
        if _insert(F, basis, g):
            elems.append(g)
    changed = True
    while changed and len(elems) < 4:
        changed = False
        for x in list(elems):
            for g in gens:
                y = mat_mul(F, x, g)
                if _insert(F, basis, y):
                    elems.append(y)
                    changed = True
    return elems


def _det(F: FieldSpec, A: list[list[int]]) -> int:
    A = [list(row) for row in A]
    n = len(A)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = F.neg(det)
        det = F.mul(det, A[col][col])
        inv = F.inv(A[col][col])
        for r in range(col + 1, n):
            if A[r][col]:
                c = F.mul(A[r][col], inv)
                A[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(A[r], A[col])]
    return det


def gram_determinant(F: FieldSpec, basis: list[Mat]) -> int:
    return _det(F, [[mat_trace(F, mat_mul(F, x, y)) for y in basis] for x in basis])


def order_locally_maximal(rep, p: int | None = None) -> bool:
    """Is Lambda tensor F_q a 4-dimensional algebra with nondegenerate trace form?

    Equivalent to the prime not dividing the reduced discriminant of Lambda.
    Accepts a built :class:`TripleRep`, or a triple and a prime.
    """
    if not isinstance(rep, TripleRep):
        rep = build_representation(rep, p)
    F = rep.field
    basis = algebra_span(F, delta2_generators(rep))
    return len(basis) == 4 and gram_determinant(F, basis) != 0


# ---------------------------------------------------------------------------

@dataclass
class PrimeVerdict:
    embedding: int
    ok: bool
    reason: str = ""
    rep: TripleRep | None = None


def check_prime(triple, p: int, embedding: int) -> PrimeVerdict:
    """Order and local-maximality checks at the prime of E selected by ``embedding``."""
    if not order_condition(triple, p):
        s = next(s for s in triple if s % p == 0 and s != p)
        reduced = prime_to_part(s, p) * p
        return PrimeVerdict(embedding, False, f"order(delta_{s}) = {reduced} != {s}")
    try:
        rep = build_representation(triple, p, embedding)
    except RepresentationError as exc:
        return PrimeVerdict(embedding, False, f"representation: {exc}")
    if not order_locally_maximal(rep):
        return PrimeVerdict(embedding, False, "discrd(Lambda): order not maximal at p", rep)
    return PrimeVerdict(embedding, True, "", rep)


def orbit_summary(lengths) -> dict:
    return dict(sorted(Counter(lengths).items()))
