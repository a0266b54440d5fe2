"""
Wirtinger presentation data of a welded string link diagram
Arcs break only at under-passages; virtual crossings are invisible here
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from algebra.free_group import Gen, Word
from diagram.gauss_code import GaussCode, Role
from utils.validation import require_valid

Arc = Tuple[int, int]


@dataclass(frozen=True)
class WirtingerData:
    """
    Arc labels and relator letters of a diagram

    Strand i carries arcs a_i1 .. a_i r(i). At its j-th under-passage the
    letter u_ij = (over arc)^sign, and a_i,j+1 = u_ij^-1 a_ij u_ij.
    """

    m: int
    r: Tuple[int, ...]
    u: Dict[Tuple[int, int], Tuple[Arc, int]]

    def arc_count(self, i: int) -> int:
        return self.r[i - 1]

    def letter(self, i: int, j: int) -> Word:
        """u_ij as a one-letter Wirtinger word"""
        (k, l), exp = self.u[(i, j)]
        return Word.gen(Gen.wirtinger(k, l), exp)

    def v(self, i: int, j: int) -> Word:
        """v_ij = u_i1 u_i2 ... u_ij"""
        word = Word()
        for l in range(1, j + 1):
            word = word * self.letter(i, l)
        return word

    def self_count(self, i: int) -> int:
        """Signed count of strand-i arcs among u_i1 .. u_i,r(i)-1"""
        total = 0
        for j in range(1, self.r[i - 1]):
            (k, _), exp = self.u[(i, j)]
            if k == i:
                total += exp
        return total

    def framing_exponent(self, i: int) -> int:
        """Exponent s of a_i1^s making the longitude l_i zero-framed"""
        return -self.self_count(i)


def wirtinger(code: GaussCode) -> WirtingerData:
    """
    Label arcs and read off the relator letters

    Args:
        code: Valid Gauss code

    Returns:
        WirtingerData with r(i) = 1 + number of under-passages on strand i

    Raises:
        ValueError: if the code is invalid
    """
    require_valid(code)

    over_arc: Dict[int, Arc] = {}
    for i, strand in enumerate(code.strands, start=1):
        arc = 1
        for p in strand:
            if p.role is Role.OVER:
                over_arc[p.crossing_id] = (i, arc)
            else:
                arc += 1

    r: List[int] = []
    u: Dict[Tuple[int, int], Tuple[Arc, int]] = {}
    for i, strand in enumerate(code.strands, start=1):
        j = 0
        for p in strand:
            if p.role is Role.UNDER:
                j += 1
                u[(i, j)] = (over_arc[p.crossing_id], p.sign)
        r.append(j + 1)
    return WirtingerData(code.m, tuple(r), u)
