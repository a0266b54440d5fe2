"""
Welded string link diagrams as Gauss codes
"""

from .gauss_code import (
    DiagramFormatError,
    Role,
    Passage,
    GaussCode,
    identity,
    stack,
    stack_all,
    canonical_relabel,
    insert_blocks,
    remove_crossings,
    dumps,
    loads,
    load_code,
    save_code,
)
from .reidemeister import (
    Move,
    MoveSite,
    CrossingSite,
    reidemeister,
    scramble,
    r1_sites,
    r2_sites,
    r3_sites,
    oc_sites,
)
from .braids import braid_to_code, pure_generator

__all__ = [
    'DiagramFormatError',
    'Role',
    'Passage',
    'GaussCode',
    'identity',
    'stack',
    'stack_all',
    'canonical_relabel',
    'insert_blocks',
    'remove_crossings',
    'dumps',
    'loads',
    'load_code',
    'save_code',
    'Move',
    'MoveSite',
    'CrossingSite',
    'reidemeister',
    'scramble',
    'r1_sites',
    'r2_sites',
    'r3_sites',
    'oc_sites',
    'braid_to_code',
    'pure_generator',
]
