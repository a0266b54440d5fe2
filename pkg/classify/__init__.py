"""
Classification up to sv, 2n+sv and V^n+sv equivalence
"""

from .equivalence import (
    equivalent_sv,
    equivalent_2n_sv,
    equivalent_Vn_sv,
    vlk_differences,
    fingerprint,
)
from .counting import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    count_sm,
    count_wm,
    order_Vn_group,
    count_basis_sequences,
    iter_exponent_tables,
    representative,
    enumerate_representatives,
    fingerprint_report,
)

__all__ = [
    'equivalent_sv',
    'equivalent_2n_sv',
    'equivalent_Vn_sv',
    'vlk_differences',
    'fingerprint',
    'BudgetExceeded',
    'DEFAULT_BUDGET',
    'count_sm',
    'count_wm',
    'order_Vn_group',
    'count_basis_sequences',
    'iter_exponent_tables',
    'representative',
    'enumerate_representatives',
    'fingerprint_report',
]
