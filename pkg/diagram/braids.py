"""
Classical string links from pure braid words
"""

from typing import List, Sequence

from diagram.gauss_code import GaussCode, Passage, Role


def braid_to_code(m: int, word: Sequence[int]) -> GaussCode:
    """
    Gauss code of a pure braid

    Letter +k is sigma_k (the strand at position k passes over the strand at
    position k+1, sign +1); -k is its inverse (the right strand passes over,
    sign -1). sigma_1^2 is the positive full twist.

    Args:
        m: Number of strands
        word: Braid letters, each +-k with 1 <= k < m

    Returns:
        Classical Gauss code

    Raises:
        ValueError: if a letter is out of range or the braid is not pure
    """
    at_position = list(range(1, m + 1))
    rows: List[List[Passage]] = [[] for _ in range(m)]
    for cid, letter in enumerate(word, start=1):
        k = abs(letter)
        if letter == 0 or k >= m:
            raise ValueError(f"Braid letter {letter} outside +-1..{m - 1}")
        left, right = at_position[k - 1], at_position[k]
        if letter > 0:
            over, under, sign = left, right, 1
        else:
            over, under, sign = right, left, -1
        rows[over - 1].append(Passage(cid, Role.OVER, sign))
        rows[under - 1].append(Passage(cid, Role.UNDER, sign))
        at_position[k - 1], at_position[k] = right, left
    if at_position != list(range(1, m + 1)):
        raise ValueError(f"Braid word {list(word)} is not pure")
    return GaussCode.of(m, rows)


def pure_generator(i: int, j: int, exp: int = 1) -> List[int]:
    """Braid word of A_ij^exp: strand j makes a full turn around strand i"""
    if not 1 <= i < j:
        raise ValueError(f"Pure braid generator needs 1 <= i < j, got ({i}, {j})")
    down = list(range(j - 1, i, -1))
    core = [i, i] if exp > 0 else [-i, -i]
    word = down + core + [-k for k in reversed(down)]
    return word * abs(exp) if exp else []
