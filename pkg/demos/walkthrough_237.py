"""Follow the (2,3,7) triangle group through every stage of the pipeline.

Run:  python demos/walkthrough_237.py
"""

from tmc.cycgalois import field_tower, prime_splitting
from tmc.enumeration import admissibility
from tmc.genus import GenusInput, genus_from_cycles, genus_x0, genus_x1, x0_ramification
from tmc.matrep import h1_cycle_type, orbit_summary, p1_cycle_type
from tmc.triples import Triple

t = Triple(2, 3, 7)
tower = field_tower(t)
print(f"{t}: chi = {t.chi}, [E:Q] = {tower.degE}, [F:Q] = {tower.degF}")

for p in (2, 7, 13, 29, 43):
    s = prime_splitting(t, p)
    report = admissibility(t, p)
    line = f"  p = {p:>2}: q = {s.qE:>2}, {'PSL' if s.pxl == 1 else 'PGL'}, {s.gE} prime(s) above p"
    if not report.admissible:
        print(line + f", rejected ({report.first_failure})")
        continue
    inp = GenusInput(t, p, s.qE, s.pxl)
    print(line + f", X0 genus {genus_x0(inp)}, X1 genus {genus_x1(inp)}")

# At p = 7 look at the actual matrices and their orbits.
rep = next(v.rep for v in admissibility(t, 7).verdicts if v.ok)
print("\nover F_7 (orbit length: count):")
for s, M in zip(t, rep.generators):
    p1 = orbit_summary(p1_cycle_type(M, 7))
    h1 = orbit_summary(h1_cycle_type(M, 1, 7))
    print(f"  order {s}: on P^1 {p1}, on G/H1 {h1}")
cycles = [p1_cycle_type(M, 7) for M in rep.generators]
print(f"  orbit counts k = {x0_ramification(GenusInput(t, 7, 7, 1))}")
print(f"  Riemann-Hurwitz on 8 points: genus {genus_from_cycles(8, cycles)}")
