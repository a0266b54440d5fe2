"""
Gauss codes for welded string link diagrams
Per-strand passage sequences; virtual crossings are not stored
"""

import json
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple


class DiagramFormatError(ValueError):
    """Raised when diagram text does not match the JSON diagram format"""


class Role(str, Enum):
    OVER = "o"
    UNDER = "u"

    def flip(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


@dataclass(frozen=True)
class Passage:
    """One pass of a strand through a classical crossing"""

    crossing_id: int
    role: Role
    sign: int

    def with_id(self, crossing_id: int) -> "Passage":
        return Passage(crossing_id, self.role, self.sign)


@dataclass(frozen=True)
class GaussCode:
    """
    m-strand welded string link diagram

    strands[i - 1] lists the passages met along strand i, bottom to top.
    """

    m: int
    strands: Tuple[Tuple[Passage, ...], ...]

    @staticmethod
    def of(m: int, strands: Iterable[Iterable[Passage]]) -> "GaussCode":
        return GaussCode(m, tuple(tuple(s) for s in strands))

    def strand(self, i: int) -> Tuple[Passage, ...]:
        return self.strands[i - 1]

    def crossing_ids(self) -> List[int]:
        return sorted({p.crossing_id for s in self.strands for p in s})

    def crossing_count(self) -> int:
        return len(self.crossing_ids())

    def max_id(self) -> int:
        return max((p.crossing_id for s in self.strands for p in s), default=0)

    def locate(self) -> Dict[int, Dict[Role, Tuple[int, int]]]:
        """Map crossing id -> role -> (strand, position); strands are 1-based"""
        where: Dict[int, Dict[Role, Tuple[int, int]]] = {}
        for i, s in enumerate(self.strands, start=1):
            for pos, p in enumerate(s):
                where.setdefault(p.crossing_id, {})[p.role] = (i, pos)
        return where

    def signs(self) -> Dict[int, int]:
        return {p.crossing_id: p.sign for s in self.strands for p in s}


def identity(m: int) -> GaussCode:
    """The trivial string link 1_m"""
    if m < 1:
        raise ValueError(f"Strand count must be >= 1, got {m}")
    return GaussCode(m, tuple(() for _ in range(m)))


def relabel(code: GaussCode, mapping: Dict[int, int]) -> GaussCode:
    return GaussCode(
        code.m,
        tuple(tuple(p.with_id(mapping[p.crossing_id]) for p in s) for s in code.strands),
    )


def shift_ids(code: GaussCode, offset: int) -> GaussCode:
    return relabel(code, {c: c + offset for c in code.crossing_ids()})


def canonical_relabel(code: GaussCode) -> GaussCode:
    """Renumber crossings 1, 2, ... by first appearance, strand-major"""
    mapping: Dict[int, int] = {}
    for s in code.strands:
        for p in s:
            if p.crossing_id not in mapping:
                mapping[p.crossing_id] = len(mapping) + 1
    return relabel(code, mapping)


def stack(a: GaussCode, b: GaussCode) -> GaussCode:
    """
    Stacking product a * b (a below b)

    Args:
        a: Lower string link
        b: Upper string link, same strand count

    Returns:
        Code whose strand i is strand i of a followed by strand i of b
    """
    if a.m != b.m:
        raise ValueError(f"Cannot stack {a.m}-strand code with {b.m}-strand code")
    shifted = shift_ids(b, a.max_id())
    return GaussCode(a.m, tuple(sa + sb for sa, sb in zip(a.strands, shifted.strands)))


def stack_all(m: int, codes: Sequence[GaussCode]) -> GaussCode:
    result = identity(m)
    for c in codes:
        result = stack(result, c)
    return result


def insert_blocks(
    code: GaussCode,
    blocks: Sequence[Tuple[int, int, Sequence[Passage]]],
) -> GaussCode:
    """
    Insert passage blocks at gaps of the original code

    Args:
        code: Code to extend
        blocks: (strand, gap position, passages) triples; positions refer to
            the original strands, and blocks sharing a gap keep list order

    Returns:
        Extended code (not validated)
    """
    pending: Dict[int, Dict[int, List[Passage]]] = {}
    for strand, pos, passages in blocks:
        if strand < 1 or strand > code.m:
            raise ValueError(f"Strand {strand} outside 1..{code.m}")
        if pos < 0 or pos > len(code.strands[strand - 1]):
            raise ValueError(f"Position {pos} outside strand {strand}")
        pending.setdefault(strand, {}).setdefault(pos, []).extend(passages)
    strands = []
    for i, s in enumerate(code.strands, start=1):
        at = pending.get(i)
        if not at:
            strands.append(s)
            continue
        row: List[Passage] = []
        for pos in range(len(s) + 1):
            row.extend(at.get(pos, ()))
            if pos < len(s):
                row.append(s[pos])
        strands.append(tuple(row))
    return GaussCode(code.m, tuple(strands))


def remove_crossings(code: GaussCode, ids: Iterable[int]) -> GaussCode:
    drop = set(ids)
    return GaussCode(
        code.m,
        tuple(tuple(p for p in s if p.crossing_id not in drop) for s in code.strands),
    )


# JSON diagram format: {"m": int, "strands": [[{"id", "role", "sign"}, ...], ...]}

def to_dict(code: GaussCode) -> dict:
    return {
        "m": code.m,
        "strands": [
            [{"id": p.crossing_id, "role": p.role.value, "sign": p.sign} for p in s]
            for s in code.strands
        ],
    }


def from_dict(data) -> GaussCode:
    if not isinstance(data, dict) or set(data) != {"m", "strands"}:
        raise DiagramFormatError("Diagram must be an object with exactly the keys 'm' and 'strands'")
    m, strands = data["m"], data["strands"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise DiagramFormatError(f"'m' must be a positive integer, got {m!r}")
    if not isinstance(strands, list) or len(strands) != m:
        raise DiagramFormatError(f"'strands' must be a list of {m} passage lists")
    parsed = []
    for i, s in enumerate(strands, start=1):
        if not isinstance(s, list):
            raise DiagramFormatError(f"Strand {i} must be a list of passages")
        row = []
        for entry in s:
            if not isinstance(entry, dict) or set(entry) != {"id", "role", "sign"}:
                raise DiagramFormatError(
                    f"Strand {i}: passage must have exactly 'id', 'role', 'sign', got {entry!r}"
                )
            cid, role, sign = entry["id"], entry["role"], entry["sign"]
            if not isinstance(cid, int) or isinstance(cid, bool) or cid < 1:
                raise DiagramFormatError(f"Strand {i}: crossing id must be a positive integer, got {cid!r}")
            if role not in ("o", "u"):
                raise DiagramFormatError(f"Strand {i}: role must be 'o' or 'u', got {role!r}")
            if sign not in (1, -1) or isinstance(sign, bool):
                raise DiagramFormatError(f"Strand {i}: sign must be 1 or -1, got {sign!r}")
            row.append(Passage(cid, Role(role), sign))
        parsed.append(tuple(row))
    return GaussCode(m, tuple(parsed))


def dumps(code: GaussCode) -> str:
    return json.dumps(to_dict(code))


def loads(text: str) -> GaussCode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramFormatError(f"Invalid JSON: {e}") from e
    return from_dict(data)


def load_code(path: str) -> GaussCode:
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise DiagramFormatError(f"Cannot read diagram file {path}: {e}") from e
    return loads(text)


def save_code(code: GaussCode, path: str):
    with open(path, 'w') as f:
        f.write(dumps(code) + "\n")
