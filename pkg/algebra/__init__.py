"""
Free group words and Magnus expansions
"""

from .free_group import (
    Gen,
    Word,
    IDENTITY,
    multiply,
    invert,
    conjugate,
    power,
    commutator,
    meridian_word,
)
from .magnus import (
    TruncSeries,
    series_mul,
    magnus_expand,
    coefficient,
    generator_series,
)

__all__ = [
    'Gen',
    'Word',
    'IDENTITY',
    'multiply',
    'invert',
    'conjugate',
    'power',
    'commutator',
    'meridian_word',
    'TruncSeries',
    'series_mul',
    'magnus_expand',
    'coefficient',
    'generator_series',
]
