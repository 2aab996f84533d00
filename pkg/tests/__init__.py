"""
Test package for the quadric bundle calculator.

This package contains tests for the intersection, cohomology, curves,
classification, verification and command-line components.
"""
