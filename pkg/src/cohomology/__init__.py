"""
Sheaf cohomology on P^n and on the quadric threefold.
"""

from src.cohomology.bott import BottQuery, IndexOutOfRange, bott, tangent_coh
from src.cohomology.bundles import (
    A, DEFINING_SEQUENCES, E_P, G_P, O, PHI, SPINOR, BundleSequence, DirectSum, Dual, Line,
    PullbackN, StandardBundle, Twist,
)
from src.cohomology.tables import (
    CohomologyTable, Provenance, UnsupportedBundle, UnsupportedPair, coh_A,
    coh_A_dual, coh_ep, coh_gp, coh_line, coh_phi, coh_phi_dual, coh_spinor,
    cohomology, serre_dual_check,
)
from src.cohomology.pairs import coh_pair, pair_catalogue
