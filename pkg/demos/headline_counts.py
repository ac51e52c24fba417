"""Reproduce the X_0 / X_1 counts up to genus 2 and show the largest levels.

Run:  python demos/headline_counts.py
"""

import time

from tmc.enumeration import curve_counts, enumerate_x0, enumerate_x1, row_counts

start = time.perf_counter()
x0 = enumerate_x0(2)
x1 = enumerate_x1(2, x0_records=x0)
print(f"enumerated in {time.perf_counter() - start:.1f} s")

print("genus   X0 curves (rows)   X1 curves")
c0, r0, c1 = curve_counts(x0), row_counts(x0), curve_counts(x1)
for g in range(3):
    print(f"{g:>5}   {c0[g]:>9} ({r0[g]:>3})   {c1[g]:>9}")

print("\nlargest residue fields per genus:")
for g in range(3):
    top = max((r for r in x0 if r.genus == g), key=lambda r: r.q)
    print(f"  genus {g}: {top.triple} over F_{top.q} (p = {top.p})")

print("\nall genus-0 X1 curves:")
for r in x1:
    if r.genus == 0:
        print(f"  X1{tuple(r.triple)}; p = {r.p}, q = {r.q}, {r.num_primes} prime(s)")
