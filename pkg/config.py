"""
Configuration settings for the quadric bundle calculator.

This module defines configuration profiles. Profiles differ in log level and
in the sizes of the random batteries run by verify-paper.
"""

import os
import logging

logger = logging.getLogger(__name__)


class Config:
    """Base configuration."""
    # Logging settings
    LOG_LEVEL = logging.WARNING
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # Random batteries
    RANDOM_SEED = 20240611
    CHI_BATTERY_SIZE = 10000
    TWIST_BATTERY_SIZE = 1000
    TENSOR_BATTERY_SIZE = 1000

    # Sweep ranges
    SERRE_TWIST_RANGE = 10
    CHI_TWIST_RANGE = 10
    BOTT_TWIST_RANGE = 12

    # Del Pezzo brute-force agreement
    DELPEZZO_MAX_DEGREE = 10
    DELPEZZO_MAX_GENUS = 6
    DELPEZZO_BRUTE_FORCE_BOX = 20

    REFERENCE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'reference')


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True
    LOG_LEVEL = logging.DEBUG


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True

    # Smaller batteries keep the unit tests fast
    CHI_BATTERY_SIZE = 200
    TWIST_BATTERY_SIZE = 100
    TENSOR_BATTERY_SIZE = 50
    DELPEZZO_MAX_DEGREE = 8
    DELPEZZO_MAX_GENUS = 4


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False
    LOG_LEVEL = logging.ERROR


config_by_name = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': Config
}


def get_config(name=None):
    """
    Get a configuration profile.

    Args:
        name (str, optional): Profile name; falls back to QUADRIC_PROFILE, then 'default'

    Returns:
        Config class for the profile

    Raises:
        ValueError: If the profile name is unknown
    """
    name = name or os.environ.get('QUADRIC_PROFILE', 'default')
    if name not in config_by_name:
        logger.error(f"Unknown configuration profile: {name}")
        raise ValueError(f"Unknown profile '{name}'; known: {', '.join(sorted(config_by_name))}")
    return config_by_name[name]
