"""Oracle suites shared by the test-suite and ``tmc check``.

Each suite returns a list of failure strings; an empty list means it passed.
"""

from __future__ import annotations

import csv
from importlib import resources
from itertools import combinations_with_replacement

from .cycgalois import frobenius_residue_degrees, prime_splitting
from .enumeration import CurveRecord, curve_counts, enumerate_x0, enumerate_x1
from .ffarith import is_prime
from .genus import (GenusInput, chi_bound, coset_index_h1, genus_from_cycles, genus_galois,
                    genus_x0, genus_x0_display, genus_x1, pxl_order, q_bound)
from .matrep import (expected_h1_cycle_type, expected_p1_cycle_type, h1_cycle_type,
                     p1_cycle_type, projective_order, sigma2_is_split)
from .triples import Triple

HEADLINE_X0 = {0: 69, 1: 248, 2: 453}
HEADLINE_X1 = {0: 6, 1: 9, 2: 11}
GOLDEN_COLUMNS = ("a", "b", "c", "p", "q", "pxl", "num_primes")


def load_golden(genus: int, path=None) -> set[tuple[int, ...]]:
    """Golden rows (a, b, c, p, q, pxl, num_primes) for X_0 of the given genus."""
    if path is None:
        path = resources.files("tmc") / "data" / f"x0_genus{genus}.csv"
    with open(path, newline="") as fh:
        return {tuple(int(row[k]) for k in GOLDEN_COLUMNS) for row in csv.DictReader(fh)}


def golden_key(rec: CurveRecord) -> tuple[int, ...]:
    return (*rec.triple, rec.p, rec.q, rec.pxl, rec.num_primes)


def golden_diff(records, genus: int, path=None) -> list[str]:
    gold = load_golden(genus, path)
    mine = {golden_key(r) for r in records if r.genus == genus and r.family == "x0"}
    out = [f"genus {genus}: missing row {row}" for row in sorted(gold - mine)]
    out += [f"genus {genus}: extra row {row}" for row in sorted(mine - gold)]
    return out


def count_failures(counts: dict, expected: dict, label: str) -> list[str]:
    return [f"{label} genus {g}: {counts.get(g, 0)} curves, expected {n}"
            for g, n in expected.items() if counts.get(g, 0) != n]


def cycle_failures(records) -> list[str]:
    """Brute-force orbit structures against the closed forms and genus formulas.

    Every admissible prime of every record is visited.
    """
    out = []
    for rec in records:
        t, p, q = rec.triple, rec.p, rec.q
        from .enumeration import admissibility
        for v in admissibility(t, p).verdicts:
            if not v.ok:
                continue
            gens = v.rep.generators
            tag = f"{t} p={p} i={v.embedding}"
            if tuple(projective_order(M) for M in gens) != tuple(t):
                out.append(f"{tag}: generator orders")
            p1 = [p1_cycle_type(M, q) for M in gens]
            h1 = [h1_cycle_type(M, rec.pxl, q) for M in gens]
            split2 = sigma2_is_split(v.rep) if t.a == 2 and q % 2 else None
            for s, ct, ht in zip(t, p1, h1):
                exp = expected_p1_cycle_type(s, q, p, split2 if s == 2 else None)
                if ct != exp:
                    out.append(f"{tag}: P1 cycle type of order {s}: {ct} != {exp}")
                if ht != expected_h1_cycle_type(s, q, p, rec.pxl):
                    out.append(f"{tag}: G/H1 cycle type of order {s}")
            inp = GenusInput(t, p, q, rec.pxl, split2)
            if genus_from_cycles(q + 1, p1) != genus_x0(inp):
                out.append(f"{tag}: X0 genus differs from Riemann-Hurwitz")
            if genus_from_cycles(coset_index_h1(q, rec.pxl), h1) != genus_x1(inp):
                out.append(f"{tag}: X1 genus differs from Riemann-Hurwitz")
            if genus_x0_display(inp) != genus_x0(inp):
                out.append(f"{tag}: display formula differs")
    return out


def epsilon_failures(records) -> list[str]:
    """Integrality choice of k_2 vs fixed points of sigma_2, and the q mod 4 rule for PSL."""
    out = []
    for rec in records:
        t, q = rec.triple, rec.q
        if t.a != 2 or q % 2 == 0:
            continue
        from .enumeration import admissibility
        for v in admissibility(t, rec.p).verdicts:
            if not v.ok:
                continue
            split = sigma2_is_split(v.rep)
            try:
                genus_x0(GenusInput(t, rec.p, q, rec.pxl, split))
            except ValueError as exc:
                out.append(f"{t} p={rec.p}: {exc}")
            if rec.pxl == 1 and split != (q % 4 == 1):
                out.append(f"{t} p={rec.p}: PSL and split={split} but q = {q % 4} mod 4")
    return out


def bound_failures(records, g0: int) -> list[str]:
    out = []
    for r in records:
        if r.q > q_bound(g0):
            out.append(f"{r.triple} p={r.p}: q = {r.q} > {q_bound(g0)}")
        if abs(r.triple.chi) > chi_bound(r.q, g0):
            out.append(f"{r.triple} p={r.p}: |chi| above 2(g0+1)/(q-1)")
        if r.genus > g0:
            out.append(f"{r.triple} p={r.p}: genus {r.genus} > {g0}")
    return out


def residue_degree_failures(max_m: int = 60, max_p: int = 100) -> list[str]:
    """Subgroup model vs Frobenius degrees of reduced generators."""
    out = []
    primes = [p for p in range(2, max_p + 1) if is_prime(p)]
    for a, b, c in combinations_with_replacement(range(2, max_m + 1), 3):
        t = Triple(a, b, c)
        if not t.is_hyperbolic or t.lcm > max_m:
            continue
        for p in primes:
            s = prime_splitting(t, p)
            if frobenius_residue_degrees(t, p) != (s.fE, s.fF):
                out.append(f"{t} p={p}: residue degrees disagree")
    return out


def galois_failures(max_q: int = 6, g0: int = 2) -> list[str]:
    """No Galois curve X(a,b,c;p) of genus <= g0; Klein quartic check.

    84(g - 1) >= #G rules out q >= 7, and then every entry is an element
    order of PXL2(F_q), so at most q + 1 <= 7.  The remaining triples are run
    through the arithmetic: residue field, admissibility and PSL/PGL image.
    """
    out = []
    if genus_galois((2, 3, 7), 168) != 3:
        out.append("genus_galois((2,3,7), 168) != 3")
    if min(pxl_order(q, 1) for q in range(max_q + 1, max_q + 4) if _prime_power(q)) <= 84 * (g0 - 1):
        out.append(f"group order bound does not exclude q > {max_q}")
    from .enumeration import is_admissible
    for a, b, c in combinations_with_replacement(range(2, max_q + 2), 3):
        t = Triple(a, b, c)
        if not t.is_hyperbolic:
            continue
        for p in (2, 3, 5):
            split = prime_splitting(t, p)
            if split.qE > max_q or not is_admissible(t, p):
                continue
            g = genus_galois(t, pxl_order(split.qE, split.pxl))
            if g <= g0:
                out.append(f"Galois curve {t} p={p} of genus {g}")
    return out


def _prime_power(q: int) -> bool:
    return any(is_prime(p) and _is_power(q, p) for p in range(2, q + 1))


def _is_power(q: int, p: int) -> bool:
    while q % p == 0:
        q //= p
    return q == 1


def run_suite(level: str = "quick", golden_dir=None) -> dict[str, list[str]]:
    """All named suites; ``full`` adds the genus-2 counts and the full residue-degree grid."""
    from pathlib import Path

    paths = [None, None] if golden_dir is None else [Path(golden_dir) / f"x0_genus{g}.csv" for g in (0, 1)]
    g0 = 2 if level == "full" else 1
    x0 = enumerate_x0(g0)
    x1 = enumerate_x1(g0, x0_records=x0)
    want0 = {g: n for g, n in HEADLINE_X0.items() if g <= g0}
    want1 = {g: n for g, n in HEADLINE_X1.items() if g <= g0}
    x0_low = [r for r in x0 if r.genus <= 1]
    return {
        "headline_counts": count_failures(curve_counts(x0), want0, "X0")
        + count_failures(curve_counts(x1), want1, "X1"),
        "golden_tables": golden_diff(x0, 0, paths[0]) + golden_diff(x0, 1, paths[1]),
        "cycle_structure": cycle_failures(x0_low),
        "epsilon": epsilon_failures(x0),
        "bounds": bound_failures(x0, g0),
        "residue_degrees": residue_degree_failures(60 if level == "full" else 24,
                                                   100 if level == "full" else 50),
        "galois_case": galois_failures(),
    }
