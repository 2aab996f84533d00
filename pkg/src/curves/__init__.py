"""
Curve numerics: Chern classes from curves, trisecants, α and del Pezzo classes.
"""

from src.curves.curve import (
    CurveData, alpha, alpha_bounds, c3_from_curve, trisecant, trisecant_note,
)
from src.curves.delpezzo import (
    DelPezzoClass, brute_force_classes, cremona, delpezzo_classes,
)
