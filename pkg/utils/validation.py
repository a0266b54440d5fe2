"""
Global validation utilities
Gauss code, index sequence and move site checks shared by all modules
"""

from collections import defaultdict
from typing import Dict, List, Sequence, Tuple


def validate_code(code) -> Tuple[bool, List[str]]:
    """
    Check every GaussCode invariant

    Args:
        code: GaussCode to check

    Returns:
        Tuple of (is_valid, violations); each violation names the crossing id
    """
    violations: List[str] = []
    if code.m < 1:
        violations.append(f"strand count must be >= 1, got {code.m}")
    if len(code.strands) != code.m:
        violations.append(f"expected {code.m} strands, got {len(code.strands)}")

    roles: Dict[int, List[str]] = defaultdict(list)
    signs: Dict[int, set] = defaultdict(set)
    for s in code.strands:
        for p in s:
            if not isinstance(p.crossing_id, int) or p.crossing_id < 1:
                violations.append(f"crossing id must be a positive integer, got {p.crossing_id!r}")
                continue
            if p.role not in ("o", "u"):
                violations.append(f"crossing {p.crossing_id}: unknown role {p.role!r}")
            if p.sign not in (1, -1):
                violations.append(f"crossing {p.crossing_id}: sign must be +1 or -1, got {p.sign!r}")
            roles[p.crossing_id].append(p.role)
            signs[p.crossing_id].add(p.sign)

    for cid in sorted(roles):
        found = sorted(getattr(r, "value", r) for r in roles[cid])
        if len(found) != 2:
            violations.append(f"crossing {cid}: appears {len(found)} times, expected exactly 2")
        elif found != ["o", "u"]:
            violations.append(f"crossing {cid}: needs one over and one under passage, got {found}")
        if len(signs[cid]) > 1:
            violations.append(f"crossing {cid}: passages carry different signs")

    return len(violations) == 0, violations


def require_valid(code):
    """Raise ValueError listing the violations if code is not valid"""
    is_valid, violations = validate_code(code)
    if not is_valid:
        raise ValueError("Invalid Gauss code: " + "; ".join(violations))


def validate_index_sequence(seq: Sequence[int], m: int, min_len: int = 2) -> Tuple[bool, str]:
    """
    Validate an invariant index sequence I = j_1 ... j_k i

    Returns:
        Tuple of (is_valid, error_message)
    """
    if len(seq) < min_len:
        return False, f"Sequence {tuple(seq)} shorter than {min_len}"
    bad = [v for v in seq if not isinstance(v, int) or v < 1 or v > m]
    if bad:
        return False, f"Sequence entries {bad} outside 1..{m}"
    return True, ""


def is_non_repeated(seq: Sequence[int]) -> bool:
    return len(set(seq)) == len(seq)


def validate_position(code, strand: int, pos: int) -> Tuple[bool, str]:
    if strand < 1 or strand > code.m:
        return False, f"Strand {strand} outside 1..{code.m}"
    length = len(code.strands[strand - 1])
    if pos < 0 or pos > length:
        return False, f"Position {pos} outside 0..{length} on strand {strand}"
    return True, ""


def validate_site(code, site) -> Tuple[bool, str]:
    """Both insertion positions of a MoveSite must lie within their strands"""
    for strand, pos in ((site.strand_a, site.pos_a), (site.strand_b, site.pos_b)):
        is_valid, msg = validate_position(code, strand, pos)
        if not is_valid:
            return False, msg
    return True, ""


def validate_modulus(n: int) -> Tuple[bool, str]:
    if not isinstance(n, int) or n < 1:
        return False, f"Modulus must be a positive integer, got {n!r}"
    return True, ""
