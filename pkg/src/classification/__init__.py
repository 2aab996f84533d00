"""
Classification tables of globally generated bundles with c1 ≤ 2.
"""

from src.classification.classifier import (
    ClassificationEntry, InvalidC1, OutOfCatalogue, as_frame, classify,
    decomposable_sums, entries_for, higher_rank_table, rank3_table,
)
from src.classification.reference import RankTableLine, rank_table_check
