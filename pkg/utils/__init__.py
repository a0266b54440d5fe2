"""
Utility modules shared across the package
"""

from .validation import (
    validate_code,
    require_valid,
    validate_index_sequence,
    is_non_repeated,
    validate_position,
    validate_site,
    validate_modulus,
)

__all__ = [
    'validate_code',
    'require_valid',
    'validate_index_sequence',
    'is_non_repeated',
    'validate_position',
    'validate_site',
    'validate_modulus',
]
