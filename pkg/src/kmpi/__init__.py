"""Exact root combinatorics of rank-2 Kac-Moody algebras.

The package computes positive real roots, classifies lattice vectors,
enumerates pi-systems over bounded index windows, derives their Cartan
matrices, and confronts every closed-form classification claim with an
independent brute-force check.  All arithmetic is exact (arbitrary-precision
integers and rationals).
"""

from .root_core import (
    GCM2,
    RootClass,
    RootIndex,
    RootVec,
    SequenceTable,
    apply_weyl_word,
    bilinear_scaled,
    classify_root,
    coefficient_sequences,
    enumerate_finite_roots,
    make_gcm,
    pairing,
    positive_real_root,
    simple_reflection,
)
from .pi_systems import (
    DerivedGCM,
    PiSystem,
    SignedRoot,
    derived_gcm,
    enumerate_pi_systems,
    enumerate_real_roots,
    is_linearly_independent,
    is_pi_system,
)
from .verifier import CHECK_IDS, CheckReport, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "GCM2",
    "RootClass",
    "RootIndex",
    "RootVec",
    "SequenceTable",
    "apply_weyl_word",
    "bilinear_scaled",
    "classify_root",
    "coefficient_sequences",
    "enumerate_finite_roots",
    "make_gcm",
    "pairing",
    "positive_real_root",
    "simple_reflection",
    "DerivedGCM",
    "PiSystem",
    "SignedRoot",
    "derived_gcm",
    "enumerate_pi_systems",
    "enumerate_real_roots",
    "is_linearly_independent",
    "is_pi_system",
    "CHECK_IDS",
    "CheckReport",
    "run_all",
    "run_check",
]
