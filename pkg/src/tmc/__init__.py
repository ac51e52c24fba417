"""Enumeration of Borel-type triangular modular curves of prime level.

Modules:

- ``ffarith``: finite fields with deterministic moduli
- ``cycgalois``: splitting of primes in the trace fields E and F
- ``triples``: hyperbolic triples, q-admissibility, candidates
- ``matrep``: matrix images over residue fields and coset actions
- ``genus``: genus formulas and search bounds
- ``enumeration``: the X_0 / X_1 pipelines
- ``cli``: the ``tmc`` command
"""

from .enumeration import (CurveRecord, admissibility, curve_counts, enumerate_x0, enumerate_x1,
                          is_admissible)
from .genus import genus_galois, genus_x0, genus_x1
from .triples import Triple

__version__ = "0.1.0"

__all__ = ["CurveRecord", "Triple", "admissibility", "curve_counts", "enumerate_x0",
           "enumerate_x1", "genus_galois", "genus_x0", "genus_x1", "is_admissible",
           "__version__"]
