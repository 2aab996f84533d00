"""
Reference data loading for the bundled published tables.
"""

from src.data.loader import (
    DataLoader, ReferenceDataError, load_file, load_reference,
)
