"""
Welded Reidemeister rewrites on Gauss codes
R1, R2, R3 and the overcrossings-commute move OC, plus randomized scrambling
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple, Union

import numpy as np

from diagram.gauss_code import (
    GaussCode,
    Passage,
    Role,
    insert_blocks,
    remove_crossings,
)
from utils.validation import require_valid, validate_site


class Move(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    OC = "OC"


@dataclass(frozen=True)
class MoveSite:
    """Insertion gaps on two strands (the disk where a local move happens)"""

    strand_a: int
    pos_a: int
    strand_b: int
    pos_b: int


@dataclass(frozen=True)
class CrossingSite:
    """Existing crossings a rewrite acts on"""

    crossing_ids: Tuple[int, ...]


Site = Union[MoveSite, CrossingSite]


def _adjacent(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    return a[0] == b[0] and abs(a[1] - b[1]) == 1


def r1_sites(code: GaussCode) -> List[int]:
    """Crossings forming a kink: both passages adjacent on one strand"""
    where = code.locate()
    return [c for c in sorted(where) if _adjacent(where[c][Role.OVER], where[c][Role.UNDER])]


def _r2_match(code: GaussCode, where, c1: int, c2: int) -> bool:
    signs = code.signs()
    if c1 == c2 or signs[c1] != -signs[c2]:
        return False
    return (
        _adjacent(where[c1][Role.UNDER], where[c2][Role.UNDER])
        and _adjacent(where[c1][Role.OVER], where[c2][Role.OVER])
    )


def r2_sites(code: GaussCode) -> List[Tuple[int, int]]:
    """Pairs of opposite-sign crossings whose overs and unders are both adjacent"""
    where = code.locate()
    found = set()
    for s in code.strands:
        for p, nxt in zip(s, s[1:]):
            if p.role is Role.UNDER and nxt.role is Role.UNDER:
                if _r2_match(code, where, p.crossing_id, nxt.crossing_id):
                    found.add(tuple(sorted((p.crossing_id, nxt.crossing_id))))
    return sorted(found)


def oc_sites(code: GaussCode) -> List[Tuple[int, int]]:
    found = []
    for s in code.strands:
        for p, nxt in zip(s, s[1:]):
            if p.role is Role.OVER and nxt.role is Role.OVER:
                found.append((p.crossing_id, nxt.crossing_id))
    return sorted(found)


def _r3_roles(code: GaussCode, where, x: int, y: int, z: int) -> bool:
    """
    True if x = top over middle, y = middle over bottom, z = top over bottom
    form an R3 triangle
    """
    if len({x, y, z}) != 3:
        return False
    signs = code.signs()
    if signs[x] != signs[z]:
        return False
    if not _adjacent(where[x][Role.OVER], where[z][Role.OVER]):
        return False
    x_under, y_over = where[x][Role.UNDER], where[y][Role.OVER]
    if not _adjacent(x_under, y_over):
        return False
    z_under, y_under = where[z][Role.UNDER], where[y][Role.UNDER]
    if z_under[0] != y_under[0]:
        return False
    # middle read as (under x, over y) pairs with bottom (under z, under y)
    if y_over[1] == x_under[1] + 1:
        return y_under[1] == z_under[1] + 1
    return y_under[1] == z_under[1] - 1


def r3_sites(code: GaussCode) -> List[Tuple[int, int, int]]:
    """All (x, y, z) triples matching the R3 pattern"""
    where = code.locate()
    found = set()
    for first, second in oc_sites(code):
        for x, z in ((first, second), (second, first)):
            sx, px = where[x][Role.UNDER]
            strand = code.strands[sx - 1]
            for npos in (px - 1, px + 1):
                if 0 <= npos < len(strand) and strand[npos].role is Role.OVER:
                    y = strand[npos].crossing_id
                    if _r3_roles(code, where, x, y, z):
                        found.add((x, y, z))
    return sorted(found)


def _swap(rows: List[List[Passage]], a: Tuple[int, int], b: Tuple[int, int]):
    row = rows[a[0] - 1]
    row[a[1]], row[b[1]] = row[b[1]], row[a[1]]


def _new_ids(code: GaussCode, count: int) -> List[int]:
    base = code.max_id()
    return [base + k for k in range(1, count + 1)]


def _insert_r1(code: GaussCode, site: MoveSite, sign: int, over_first: bool) -> GaussCode:
    if site.strand_a != site.strand_b or site.pos_a != site.pos_b:
        raise ValueError("R1 insertion needs a single gap: strand_a == strand_b and pos_a == pos_b")
    (c,) = _new_ids(code, 1)
    kink = [Passage(c, Role.OVER, sign), Passage(c, Role.UNDER, sign)]
    if not over_first:
        kink.reverse()
    return insert_blocks(code, [(site.strand_a, site.pos_a, kink)])


def _insert_r2(code: GaussCode, site: MoveSite, sign: int, crossed: bool) -> GaussCode:
    c1, c2 = _new_ids(code, 2)
    overs = [Passage(c1, Role.OVER, sign), Passage(c2, Role.OVER, -sign)]
    if crossed:
        overs.reverse()
    unders = [Passage(c1, Role.UNDER, sign), Passage(c2, Role.UNDER, -sign)]
    return insert_blocks(code, [(site.strand_a, site.pos_a, overs), (site.strand_b, site.pos_b, unders)])


def reidemeister(
    code: GaussCode,
    move: Move,
    site: Site,
    sign: int = 1,
    over_first: bool = True,
    crossed: bool = False,
) -> GaussCode:
    """
    Apply one welded Reidemeister rewrite

    A MoveSite inserts (R1: a kink at one gap; R2: overs on strand_a, unders on
    strand_b). A CrossingSite deletes (R1, R2) or rewrites in place (R3, OC).

    Args:
        code: Valid Gauss code
        move: R1, R2, R3 or OC
        site: Where the move happens
        sign: Sign of the inserted kink, or of the first R2 crossing
        over_first: R1 insertion reads over before under along the strand
        crossed: R2 insertion lists the over passages in reverse order

    Returns:
        Rewritten code
    """
    require_valid(code)
    move = Move(move)
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}")

    if isinstance(site, MoveSite):
        is_valid, msg = validate_site(code, site)
        if not is_valid:
            raise ValueError(f"Invalid move site: {msg}")
        if move is Move.R1:
            return _insert_r1(code, site, sign, over_first)
        if move is Move.R2:
            return _insert_r2(code, site, sign, crossed)
        raise ValueError(f"{move.value} acts on existing crossings, pass a CrossingSite")

    ids = tuple(site.crossing_ids)
    where = code.locate()
    unknown = [c for c in ids if c not in where]
    if unknown:
        raise ValueError(f"Unknown crossing ids {unknown}")

    if move is Move.R1:
        if len(ids) != 1 or ids[0] not in r1_sites(code):
            raise ValueError(f"Site {ids} does not match the R1 pattern")
        return remove_crossings(code, ids)

    if move is Move.R2:
        if len(ids) != 2 or not _r2_match(code, where, *ids):
            raise ValueError(f"Site {ids} does not match the R2 pattern")
        return remove_crossings(code, ids)

    rows = [list(s) for s in code.strands]
    if move is Move.OC:
        if len(ids) != 2 or ids[0] == ids[1]:
            raise ValueError(f"Site {ids} does not match the OC pattern")
        a, b = where[ids[0]][Role.OVER], where[ids[1]][Role.OVER]
        if not _adjacent(a, b):
            raise ValueError(f"Site {ids} does not match the OC pattern")
        _swap(rows, a, b)
        return GaussCode.of(code.m, rows)

    # R3: try every role assignment of the three crossings
    if len(ids) != 3:
        raise ValueError(f"Site {ids} does not match the R3 pattern")
    for x, y, z in ((ids[0], ids[1], ids[2]), (ids[0], ids[2], ids[1]),
                    (ids[1], ids[0], ids[2]), (ids[1], ids[2], ids[0]),
                    (ids[2], ids[0], ids[1]), (ids[2], ids[1], ids[0])):
        if _r3_roles(code, where, x, y, z):
            _swap(rows, where[x][Role.OVER], where[z][Role.OVER])
            _swap(rows, where[x][Role.UNDER], where[y][Role.OVER])
            _swap(rows, where[z][Role.UNDER], where[y][Role.UNDER])
            return GaussCode.of(code.m, rows)
    raise ValueError(f"Site {ids} does not match the R3 pattern")


def _random_gap(code: GaussCode, rng: np.random.Generator, strand: int) -> int:
    return int(rng.integers(0, len(code.strands[strand - 1]) + 1))


def random_rewrite(code: GaussCode, rng: np.random.Generator) -> Tuple[str, GaussCode]:
    """
    Apply one applicable random rewrite

    Returns:
        Tuple of (rewrite label, new code)
    """
    options: List[Tuple[str, Sequence]] = [("R1+", ()), ("R2+", ())]
    for label, sites in (("R1-", r1_sites(code)), ("R2-", r2_sites(code)),
                         ("R3", r3_sites(code)), ("OC", oc_sites(code))):
        if sites:
            options.append((label, sites))

    label, sites = options[int(rng.integers(0, len(options)))]
    sign = 1 if rng.integers(0, 2) else -1
    if label == "R1+":
        strand = int(rng.integers(1, code.m + 1))
        pos = _random_gap(code, rng, strand)
        site = MoveSite(strand, pos, strand, pos)
        return label, reidemeister(code, Move.R1, site, sign=sign, over_first=bool(rng.integers(0, 2)))
    if label == "R2+":
        a = int(rng.integers(1, code.m + 1))
        b = int(rng.integers(1, code.m + 1))
        site = MoveSite(a, _random_gap(code, rng, a), b, _random_gap(code, rng, b))
        return label, reidemeister(code, Move.R2, site, sign=sign, crossed=bool(rng.integers(0, 2)))

    chosen = sites[int(rng.integers(0, len(sites)))]
    ids = chosen if isinstance(chosen, tuple) else (chosen,)
    move = {"R1-": Move.R1, "R2-": Move.R2, "R3": Move.R3, "OC": Move.OC}[label]
    return label, reidemeister(code, move, CrossingSite(ids))


def scramble(code: GaussCode, steps: int, seed: int) -> GaussCode:
    """
    Apply `steps` random welded Reidemeister rewrites

    Args:
        code: Valid Gauss code
        steps: Number of rewrites
        seed: RNG seed; equal inputs give identical output

    Returns:
        A code welded-isotopic to the input
    """
    require_valid(code)
    rng = np.random.default_rng(seed)
    for _ in range(steps):
        _, code = random_rewrite(code, rng)
    return code
