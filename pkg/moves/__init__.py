"""
Local moves on welded string link diagrams
"""

from .local_moves import (
    Direction,
    insert_2n,
    delete_2n,
    apply_Vn,
    vn_sites,
    virtualize_crossing,
    is_self_crossing,
    self_crossings,
)

__all__ = [
    'Direction',
    'insert_2n',
    'delete_2n',
    'apply_Vn',
    'vn_sites',
    'virtualize_crossing',
    'is_self_crossing',
    'self_crossings',
]
