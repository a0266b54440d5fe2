"""
Equivalence predicates decided by non-repeated welded Milnor invariants
"""

import hashlib
from typing import Dict, Optional, Tuple

from diagram.gauss_code import GaussCode
from evaluator.milnor import InvariantTable, MilnorEvaluator
from evaluator.report import find_differences
from utils.validation import validate_modulus


def _tables(
    a: GaussCode, b: GaussCode, evaluator: Optional[MilnorEvaluator]
) -> Tuple[InvariantTable, InvariantTable]:
    if a.m != b.m:
        raise ValueError(f"Cannot compare {a.m}-strand and {b.m}-strand links")
    evaluator = evaluator or MilnorEvaluator()
    return evaluator.non_repeated(a), evaluator.non_repeated(b)


def _check_n(n: int):
    is_valid, msg = validate_modulus(n)
    if not is_valid:
        raise ValueError(msg)


def vlk_differences(code: GaussCode, evaluator: Optional[MilnorEvaluator] = None) -> Dict[Tuple[int, int], int]:
    """mu(ij) - mu(ji) for every pair i < j"""
    evaluator = evaluator or MilnorEvaluator()
    table = evaluator.non_repeated(code)
    return {
        (i, j): table.vlk_difference(i, j)
        for i in range(1, code.m + 1)
        for j in range(i + 1, code.m + 1)
    }


def equivalent_sv(a: GaussCode, b: GaussCode, evaluator: Optional[MilnorEvaluator] = None) -> bool:
    """All non-repeated invariants agree exactly"""
    ta, tb = _tables(a, b, evaluator)
    return not find_differences(ta, tb)


def equivalent_Vn_sv(a: GaussCode, b: GaussCode, n: int, evaluator: Optional[MilnorEvaluator] = None) -> bool:
    """All non-repeated invariants agree mod n"""
    _check_n(n)
    ta, tb = _tables(a, b, evaluator)
    return not find_differences(ta, tb, modulus=n)


def equivalent_2n_sv(a: GaussCode, b: GaussCode, n: int, evaluator: Optional[MilnorEvaluator] = None) -> bool:
    """
    (2n+sv)-equivalence test

    Args:
        a: First link
        b: Second link, same strand count
        n: Modulus, >= 1
        evaluator: Shared evaluator

    Returns:
        True iff all non-repeated invariants agree mod n and every
        mu(ij) - mu(ji) agrees exactly
    """
    _check_n(n)
    ta, tb = _tables(a, b, evaluator)
    if find_differences(ta, tb, modulus=n):
        return False
    m = a.m
    return all(
        ta.vlk_difference(i, j) == tb.vlk_difference(i, j)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
    )


def fingerprint(table: InvariantTable, n: int) -> str:
    """sha256 of the mod-n table, rows in table order"""
    reduced = table.reduced_mod(n)
    text = ";".join(f"{','.join(map(str, s))}={reduced[s]}" for s in reduced.sequences())
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
