"""
Reference data loading module.

This module contains loaders that read the bundled reference files (the
published rank table and the ledger of published values) from YAML.
Keyed files come back as plain mappings; a list of records under a key can
be pulled out as a pandas DataFrame.
"""

import logging
import os
from typing import Any, Dict, Optional

import pandas as pd
import yaml

logger = logging.getLogger(__name__)

DEFAULT_REFERENCE_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
    'data', 'reference',
)


class ReferenceDataError(ValueError):
    """Raised when a reference file is malformed or lacks a required key."""
    pass


class BaseLoader:
    """Base class for all reference loaders."""

    def __init__(self, file_path: str):
        """
        Initialize the loader with a file path.

        Args:
            file_path (str): Path to the reference file

        Raises:
            FileNotFoundError: If the file does not exist
        """
        if not os.path.exists(file_path):
            logger.error(f"File not found: {file_path}")
            raise FileNotFoundError(f"File not found: {file_path}")

        self.file_path = file_path
        logger.debug(f"Initialized loader for {file_path}")

    def read(self) -> Dict[str, Any]:
        """
        Read the raw mapping stored in the file.

        Raises:
            NotImplementedError: If the subclass does not implement this method
        """
        raise NotImplementedError("Subclasses must implement read method")

    def load(self, key: Optional[str] = None):
        """
        Load the file contents.

        Args:
            key (str, optional): Top-level key holding a list of records

        Returns:
            The full mapping when key is None, else a DataFrame of the records

        Raises:
            ReferenceDataError: If the key is missing or does not hold records
        """
        data = self.read()
        if key is None:
            return data
        if key not in data:
            logger.error(f"Key '{key}' missing from {self.file_path}")
            raise ReferenceDataError(f"Key '{key}' missing from {self.file_path}")
        records = data[key]
        if not isinstance(records, list):
            raise ReferenceDataError(f"Key '{key}' in {self.file_path} does not hold a list of records")
        df = pd.DataFrame(records)
        logger.debug(f"Loaded '{key}' from {self.file_path} with shape {df.shape}")
        return df


class YAMLLoader(BaseLoader):
    """Loader for YAML reference files."""

    def read(self) -> Dict[str, Any]:
        try:
            with open(self.file_path, 'r') as file:
                data = yaml.safe_load(file)
        except yaml.YAMLError as e:
            logger.error(f"Error parsing YAML data: {str(e)}")
            raise ReferenceDataError(f"Error parsing YAML data: {str(e)}")

        if not data:
            logger.warning(f"Empty YAML data in {self.file_path}")
            return {}
        if not isinstance(data, dict):
            raise ReferenceDataError(f"{self.file_path} must hold a mapping")
        return data


class DataLoader:
    """Factory class for loading reference files by extension."""

    def __init__(self):
        self.loaders = {
            'yml': YAMLLoader,
            'yaml': YAMLLoader,
        }

    def load_data(self, file_path: str, key: Optional[str] = None):
        """
        Load a reference file based on its extension.

        Args:
            file_path (str): Path to the reference file
            key (str, optional): Top-level key holding a list of records

        Returns:
            A mapping, or a DataFrame when key is given

        Raises:
            ValueError: If the file extension is not supported or loading fails
        """
        file_extension = file_path.split('.')[-1].lower()
        if file_extension not in self.loaders:
            logger.error(f"Unsupported file extension: {file_extension}")
            raise ValueError(f"Unsupported file extension: {file_extension}")

        loader = self.loaders[file_extension](file_path)
        return loader.load(key)


def load_file(file_path: str, key: Optional[str] = None):
    """Load a reference file based on its extension."""
    return DataLoader().load_data(file_path, key)


def load_reference(name: str, key: Optional[str] = None, reference_dir: Optional[str] = None):
    """
    Load one of the bundled reference files by stem name.

    Args:
        name (str): File stem, e.g. 'rank_table' or 'ledger'
        key (str, optional): Top-level key holding a list of records
        reference_dir (str, optional): Directory to read from

    Returns:
        A mapping, or a DataFrame when key is given
    """
    reference_dir = reference_dir or DEFAULT_REFERENCE_DIR
    return load_file(os.path.join(reference_dir, f"{name}.yml"), key)
