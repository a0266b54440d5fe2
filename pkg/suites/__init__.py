"""
Verification suites driven by `main.py verify`
"""

from .base import VerificationSuite, DEFAULT_SETTINGS, all_passed
from .invariance import IsotopySuite, SelfVirtualizationSuite, MagnusSuite
from .local_move_suites import VnSuite, TwoNSuite, PrimeSuite
from .classification import CountingSuite, NormalFormSuite, CalibrationSuite, ImplicationSuite

SUITES = {
    suite.name: suite
    for suite in (
        IsotopySuite,
        TwoNSuite,
        VnSuite,
        PrimeSuite,
        CountingSuite,
        NormalFormSuite,
        CalibrationSuite,
        ImplicationSuite,
        MagnusSuite,
        SelfVirtualizationSuite,
    )
}

__all__ = [
    'VerificationSuite',
    'DEFAULT_SETTINGS',
    'all_passed',
    'IsotopySuite',
    'SelfVirtualizationSuite',
    'MagnusSuite',
    'VnSuite',
    'TwoNSuite',
    'PrimeSuite',
    'CountingSuite',
    'NormalFormSuite',
    'CalibrationSuite',
    'ImplicationSuite',
    'SUITES',
]
