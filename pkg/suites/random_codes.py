"""
Seeded random inputs for the verification suites
"""

from typing import List

import numpy as np

from algebra.free_group import Word, meridian_word
from diagram.braids import braid_to_code, pure_generator
from diagram.gauss_code import GaussCode, Passage, Role
from diagram.reidemeister import MoveSite


def trial_rng(seed: int, *trial: int) -> np.random.Generator:
    """Independent generator per (seed, trial...) so each report line is reproducible alone"""
    return np.random.default_rng([seed, *trial])


def random_sign(rng: np.random.Generator) -> int:
    return 1 if rng.integers(0, 2) else -1


def random_code(rng: np.random.Generator, m: int, max_crossings: int) -> GaussCode:
    """
    Random welded diagram

    Each crossing picks its over and under strands independently (self
    crossings included) and drops both passages at random positions.
    """
    count = int(rng.integers(0, max_crossings + 1))
    rows: List[List[Passage]] = [[] for _ in range(m)]
    for cid in range(1, count + 1):
        sign = random_sign(rng)
        for role in (Role.OVER, Role.UNDER):
            row = rows[int(rng.integers(0, m))]
            row.insert(int(rng.integers(0, len(row) + 1)), Passage(cid, role, sign))
    return GaussCode.of(m, rows)


def random_classical_code(rng: np.random.Generator, m: int, factors: int) -> GaussCode:
    """Pure braid built from random A_ij^+-1 factors"""
    word: List[int] = []
    if m >= 2:
        for _ in range(factors):
            i = int(rng.integers(1, m))
            j = int(rng.integers(i + 1, m + 1))
            word.extend(pure_generator(i, j, random_sign(rng)))
    return braid_to_code(m, word)


def random_meridian_word(rng: np.random.Generator, m: int, length: int) -> Word:
    word = Word()
    for _ in range(length):
        word = word * meridian_word(int(rng.integers(1, m + 1)), random_sign(rng))
    return word


def random_two_strand_site(rng: np.random.Generator, code: GaussCode) -> MoveSite:
    """Random gaps on two distinct strands (code.m >= 2)"""
    a, b = (int(v) + 1 for v in rng.choice(code.m, size=2, replace=False))
    pos_a = int(rng.integers(0, len(code.strand(a)) + 1))
    pos_b = int(rng.integers(0, len(code.strand(b)) + 1))
    return MoveSite(a, pos_a, b, pos_b)


def with_self_crossing(rng: np.random.Generator, code: GaussCode) -> GaussCode:
    """Add one crossing whose passages both lie on a random strand"""
    strand = int(rng.integers(0, code.m))
    cid = code.max_id() + 1
    sign = random_sign(rng)
    rows = [list(s) for s in code.strands]
    row = rows[strand]
    for role in (Role.OVER, Role.UNDER):
        row.insert(int(rng.integers(0, len(row) + 1)), Passage(cid, role, sign))
    return GaussCode.of(code.m, rows)
