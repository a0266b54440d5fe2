"""
Evaluator module for welded Milnor invariants
"""

from .wirtinger import WirtingerData, wirtinger
from .milnor import (
    eta,
    longitude,
    longitude_series,
    milnor,
    iter_sequences,
    InvariantTable,
    invariant_table,
    MilnorEvaluator,
)
from .report import (
    format_sequence,
    format_table_tsv,
    find_differences,
    describe_differences,
)

__all__ = [
    'WirtingerData',
    'wirtinger',
    'eta',
    'longitude',
    'longitude_series',
    'milnor',
    'iter_sequences',
    'InvariantTable',
    'invariant_table',
    'MilnorEvaluator',
    'format_sequence',
    'format_table_tsv',
    'find_differences',
    'describe_differences',
]
