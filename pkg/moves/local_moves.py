"""
Local moves as Gauss-code rewrites
2n-move (n full twists), V^n-move, crossing and self-crossing virtualization
"""

from enum import Enum
from typing import List

from diagram.gauss_code import GaussCode, Passage, Role, insert_blocks, remove_crossings
from diagram.reidemeister import MoveSite
from utils.validation import require_valid, validate_modulus, validate_site


class Direction(str, Enum):
    CLASSICALIZE = "classicalize"
    VIRTUALIZE = "virtualize"


def _check_two_strand_site(code: GaussCode, site: MoveSite):
    is_valid, msg = validate_site(code, site)
    if not is_valid:
        raise ValueError(f"Invalid move site: {msg}")
    if site.strand_a == site.strand_b:
        raise ValueError(f"Move needs two distinct strands, got strand {site.strand_a} twice")


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}")


def _block(code: GaussCode, strand: int, pos: int, length: int):
    row = code.strands[strand - 1]
    if pos + length > len(row):
        return None
    return row[pos:pos + length]


def insert_2n(code: GaussCode, site: MoveSite, n: int, sign: int = 1) -> GaussCode:
    """
    Insert n full twists between two parallel strands

    Strand_a reads over, under, over, ... and strand_b under, over, under, ...
    through 2n new crossings of the given sign.

    Args:
        code: Valid Gauss code
        site: Gaps on two distinct strands
        n: Number of full twists, >= 1
        sign: Common crossing sign

    Returns:
        Code with 2n more crossings
    """
    require_valid(code)
    _check_two_strand_site(code, site)
    _check_sign(sign)
    is_valid, msg = validate_modulus(n)
    if not is_valid:
        raise ValueError(msg)
    base = code.max_id()
    on_a: List[Passage] = []
    on_b: List[Passage] = []
    for t in range(2 * n):
        cid = base + t + 1
        role = Role.OVER if t % 2 == 0 else Role.UNDER
        on_a.append(Passage(cid, role, sign))
        on_b.append(Passage(cid, role.flip(), sign))
    return insert_blocks(code, [(site.strand_a, site.pos_a, on_a), (site.strand_b, site.pos_b, on_b)])


def delete_2n(code: GaussCode, site: MoveSite, n: int) -> GaussCode:
    """
    Remove n full twists starting at the site's positions

    Raises:
        ValueError: if the 2n passages there do not form the twist block
    """
    require_valid(code)
    _check_two_strand_site(code, site)
    block_a = _block(code, site.strand_a, site.pos_a, 2 * n)
    block_b = _block(code, site.strand_b, site.pos_b, 2 * n)
    if block_a is None or block_b is None:
        raise ValueError(f"No room for {2 * n} passages at site {site}")
    signs = {p.sign for p in block_a}
    for t, (pa, pb) in enumerate(zip(block_a, block_b)):
        expected = Role.OVER if t % 2 == 0 else Role.UNDER
        if pa.crossing_id != pb.crossing_id or pa.role is not expected or len(signs) != 1:
            raise ValueError(f"Site {site} does not hold {n} full twists")
    return remove_crossings(code, [p.crossing_id for p in block_a])


def _classicalize(code: GaussCode, n: int, site: MoveSite, sign: int) -> GaussCode:
    base = code.max_id()
    ids = [base + t for t in range(1, n + 1)]
    overs = [Passage(c, Role.OVER, sign) for c in ids]
    unders = [Passage(c, Role.UNDER, sign) for c in ids]
    return insert_blocks(code, [(site.strand_a, site.pos_a, overs), (site.strand_b, site.pos_b, unders)])


def _is_vn_block(code: GaussCode, n: int, site: MoveSite) -> bool:
    overs = _block(code, site.strand_a, site.pos_a, n)
    unders = _block(code, site.strand_b, site.pos_b, n)
    if overs is None or unders is None:
        return False
    if any(p.role is not Role.OVER for p in overs) or any(p.role is not Role.UNDER for p in unders):
        return False
    if [p.crossing_id for p in overs] != [p.crossing_id for p in unders]:
        return False
    return len({p.sign for p in overs}) == 1


def apply_Vn(
    code: GaussCode,
    n: int,
    direction: Direction,
    site: MoveSite,
    sign: int = 1,
) -> GaussCode:
    """
    V^n-move between n classical crossings and n virtual ones

    The block is n crossings with strand_a over strand_b, all of one sign and
    consecutive on both strands in the same order.

    Args:
        code: Valid Gauss code
        n: Block size, >= 1
        direction: classicalize inserts the block, virtualize removes it
        site: Block start on strand_a (overs) and strand_b (unders)
        sign: Sign of an inserted block

    Returns:
        Rewritten code

    Raises:
        ValueError: if the site is invalid or the block is missing
    """
    require_valid(code)
    _check_two_strand_site(code, site)
    is_valid, msg = validate_modulus(n)
    if not is_valid:
        raise ValueError(msg)
    direction = Direction(direction)
    if direction is Direction.CLASSICALIZE:
        _check_sign(sign)
        return _classicalize(code, n, site, sign)
    if not _is_vn_block(code, n, site):
        raise ValueError(f"Site {site} does not hold a V^{n} block")
    overs = _block(code, site.strand_a, site.pos_a, n)
    return remove_crossings(code, [p.crossing_id for p in overs])


def vn_sites(code: GaussCode, n: int) -> List[MoveSite]:
    """Every site where a V^n block can be virtualized"""
    where = code.locate()
    found = []
    for a, row in enumerate(code.strands, start=1):
        for pos, p in enumerate(row):
            if p.role is not Role.OVER:
                continue
            b, pos_b = where[p.crossing_id][Role.UNDER]
            site = MoveSite(a, pos, b, pos_b)
            if a != b and _is_vn_block(code, n, site):
                found.append(site)
    return found


def _locate(code: GaussCode, crossing_id: int):
    where = code.locate()
    if crossing_id not in where:
        raise ValueError(f"Unknown crossing id {crossing_id}")
    return where[crossing_id]


def virtualize_crossing(code: GaussCode, crossing_id: int) -> GaussCode:
    """Replace a classical crossing by a virtual one (drop both passages)"""
    _locate(code, crossing_id)
    return remove_crossings(code, [crossing_id])


def is_self_crossing(code: GaussCode, crossing_id: int) -> bool:
    """True iff both passages of the crossing lie on one strand"""
    roles = _locate(code, crossing_id)
    return roles[Role.OVER][0] == roles[Role.UNDER][0]


def self_crossings(code: GaussCode) -> List[int]:
    where = code.locate()
    return [c for c in sorted(where) if where[c][Role.OVER][0] == where[c][Role.UNDER][0]]
