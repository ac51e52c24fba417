"""Enumeration of low-genus curves X_0(a,b,c;p) and X_1(a,b,c;p).

A record stands for one pair (triple, p).  Since E is Galois over Q the
primes of E above p are conjugate, and ``num_primes`` counts how many of them
are admissible; the number of curves is the sum of ``num_primes``.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cycgalois import beta_admissible, dFE_coprime, prime_classes, prime_splitting
from .ffarith import prime_power
from .genus import GenusInput, genus_x0, genus_x1, q_bound
from .matrep import check_prime, sigma2_is_split
from .triples import Triple, generate_candidates, nonhyperbolic_reduction


class InvariantError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True, order=True)
class CurveRecord:
    genus: int
    triple: Triple
    p: int
    q: int
    pxl: int
    num_primes: int
    deg_E: int
    family: str = "x0"
    split2: bool | None = None

    @property
    def key(self):
        return (self.family, self.triple, self.p)

    def row(self) -> dict:
        a, b, c = self.triple
        return {"family": self.family, "a": a, "b": b, "c": c, "p": self.p, "q": self.q,
                "pxl": self.pxl, "num_primes": self.num_primes, "deg_E": self.deg_E,
                "genus": self.genus}


def sort_key(rec: CurveRecord):
    a, b, c = rec.triple
    return (rec.genus, a, b, c, rec.p, rec.q)


@dataclass
class AdmissibilityReport:
    triple: Triple
    p: int
    admissible: bool
    num_primes: int
    reasons: list
    verdicts: list

    @property
    def first_failure(self) -> str:
        return self.reasons[0] if self.reasons else ""


def admissibility(triple, p: int) -> AdmissibilityReport:
    """Run every admissibility check at each prime of E above p."""
    triple = triple if isinstance(triple, Triple) else Triple.of(*triple)
    if not triple.is_hyperbolic:
        raise ValueError(f"{triple} is not hyperbolic")
    if not dFE_coprime(triple, p):
        return AdmissibilityReport(triple, p, False, 0, ["d_{F|E}: p ramifies in F over E"], [])
    verdicts = [check_prime(triple, p, i) for i in prime_classes(triple, p)]
    good = sum(v.ok for v in verdicts)
    reasons = sorted({v.reason for v in verdicts if not v.ok})
    return AdmissibilityReport(triple, p, good > 0, good, reasons, verdicts)


def is_admissible(triple, p: int) -> bool:
    """True iff some prime above p passes the discriminant and order checks."""
    try:
        return admissibility(triple, p).admissible
    except ValueError:
        return False


def prime_powers_upto(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if prime_power(q) is not None]


def _records_for_q(args) -> list[CurveRecord]:
    q, g0 = args
    p, _ = prime_power(q)
    out = []
    for t in generate_candidates(q, p, g0):
        if not beta_admissible(t, p):
            continue
        split = prime_splitting(t, p)
        if split.qE != q:
            continue
        g = genus_x0(GenusInput(t, p, q, split.pxl))
        if g > g0:
            continue
        report = admissibility(t, p)
        if not report.admissible:
            continue
        split2 = None
        if t.a == 2 and q % 2:
            rep = next(v.rep for v in report.verdicts if v.ok)
            split2 = sigma2_is_split(rep)
            # integrality and the explicit fixed-point count must agree
            try:
                genus_x0(GenusInput(t, p, q, split.pxl, split2))
            except ValueError as exc:
                raise InvariantError(str(exc)) from exc
        out.append(CurveRecord(g, t, p, q, split.pxl, report.num_primes, split.degE, "x0", split2))
    return out


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("TMC_THREADS", "1") or 1)
    return max(1, workers)


def enumerate_x0(g0: int, *, workers: int | None = None) -> list[CurveRecord]:
    """All admissible (triple, p) with genus X_0(a,b,c;p) <= g0."""
    if g0 < 0:
        raise ValueError("genus bound must be >= 0")
    jobs = [(q, g0) for q in prime_powers_upto(q_bound(g0))]
    n = _workers(workers)
    if n == 1:
        chunks = map(_records_for_q, jobs)
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            chunks = list(pool.map(_records_for_q, jobs))
    records = [r for chunk in chunks for r in chunk]
    return sorted(records, key=sort_key)


def x1_record(rec: CurveRecord) -> CurveRecord:
    g = genus_x1(GenusInput(rec.triple, rec.p, rec.q, rec.pxl))
    return CurveRecord(g, rec.triple, rec.p, rec.q, rec.pxl, rec.num_primes, rec.deg_E, "x1", rec.split2)


def enumerate_x1(g0: int, *, workers: int | None = None, x0_records=None) -> list[CurveRecord]:
    """Curves X_1 of genus <= g0; each covers an X_0 of genus <= g0."""
    base = enumerate_x0(g0, workers=workers) if x0_records is None else x0_records
    out = [x1_record(r) for r in base]
    return sorted((r for r in out if r.genus <= g0), key=sort_key)


def curve_counts(records) -> dict[int, int]:
    """Number of curves (primes of E, not rows) per genus."""
    counts = Counter()
    for r in records:
        counts[r.genus] += r.num_primes
    return dict(sorted(counts.items()))


def row_counts(records) -> dict[int, int]:
    return dict(sorted(Counter(r.genus for r in records).items()))


# ---------------------------------------------------------------------------
# reductions to non-hyperbolic triples, reported separately

@dataclass(frozen=True)
class ReductionRow:
    triple: Triple
    p: int
    q: int
    pxl: int
    family_id: int
    pattern: str
    field: str
    genus: int = 0


def reduction_rows(g0: int) -> list[ReductionRow]:
    """Catalogued finite triples whose reduction is not hyperbolic.

    Entries are capped at the X_0 bound 84(g0+1)+1 so the list is finite;
    every such curve has genus 0.
    """
    candidates = _catalog_shaped_triples(q_bound(g0))
    rows = []
    for p, q in ((2, 2), (3, 3), (2, 4), (5, 5)):
        for t in candidates:
            rec = nonhyperbolic_reduction(tuple(t), p, q)
            if rec is not None:
                rows.append(ReductionRow(t, p, q, rec.pxl, rec.family, rec.pattern, rec.field))
    return sorted(rows, key=lambda r: (r.triple, r.p))


def _catalog_shaped_triples(limit: int) -> list[Triple]:
    """Hyperbolic triples with entries u * ell^k (u <= 5, ell in {2, 3, 5}) up to ``limit``."""
    shapes = sorted({u * ell ** k for u in (1, 2, 3, 4, 5) for ell in (2, 3, 5)
                     for k in range(0, 8) if 2 <= u * ell ** k <= limit})
    out = []
    for i, a in enumerate(shapes):
        for j in range(i, len(shapes)):
            b = shapes[j]
            for c in shapes[j:]:
                t = Triple(a, b, c)
                if t.is_hyperbolic:
                    out.append(t)
    return out


def records_as_dicts(records) -> list[dict]:
    return [r.row() for r in records]
