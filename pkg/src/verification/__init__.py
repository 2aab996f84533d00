"""
Checks of the library against published values and invariant batteries.
"""

from src.verification.suites import (
    SECTIONS, CheckResult, CheckSuite, UnknownSection, VerificationReport,
    get_suite, run_verification,
)
