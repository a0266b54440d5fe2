"""
Counting formulas and the complete list of (V^n+sv) representatives
"""

import itertools
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Tuple

from arrows.normal_form import ExponentKey, all_basis_keys, build_product
from arrows.w_tree import s_k
from classify.equivalence import fingerprint
from diagram.gauss_code import GaussCode
from evaluator.milnor import MilnorEvaluator
from utils.validation import validate_modulus

DEFAULT_BUDGET = 10_000


class BudgetExceeded(ValueError):
    """Raised when an enumeration would exceed the configured budget"""


def _check_m(m: int):
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"Strand count must be a positive integer, got {m!r}")


def count_sm(m: int) -> int:
    """s_m = sum over r = 2..m of (r-2)! C(m, r)"""
    _check_m(m)
    return sum(factorial(r - 2) * comb(m, r) for r in range(2, m + 1))


def count_wm(m: int) -> int:
    """w_m = sum over r = 2..m of (r-2)! r C(m, r)"""
    _check_m(m)
    return sum(factorial(r - 2) * r * comb(m, r) for r in range(2, m + 1))


def order_Vn_group(m: int, n: int) -> int:
    """Order n^w_m of the group of (V^n+sv) classes"""
    is_valid, msg = validate_modulus(n)
    if not is_valid:
        raise ValueError(msg)
    return n ** count_wm(m)


def count_basis_sequences(m: int) -> int:
    """Number of (k, i, I) with I in S_k(i); equals w_m"""
    _check_m(m)
    return sum(len(s_k(m, i, k)) for k in range(1, m) for i in range(1, m + 1))


def iter_exponent_tables(m: int, n: int) -> Iterator[Dict[ExponentKey, int]]:
    """Every y-table with entries in [0, n), canonical key order, last key fastest"""
    keys = all_basis_keys(m)
    for values in itertools.product(range(n), repeat=len(keys)):
        yield dict(zip(keys, values))


def _check_budget(m: int, n: int, budget: int) -> int:
    total = order_Vn_group(m, n)
    if total > budget:
        raise BudgetExceeded(
            f"(m={m}, n={n}) has {total} representatives, over the enumeration budget {budget}"
        )
    return total


def representative(m: int, y_table: Dict[ExponentKey, int]) -> GaussCode:
    return build_product(m, [(key, y_table.get(key, 0)) for key in all_basis_keys(m)])


def enumerate_representatives(m: int, n: int, budget: int = DEFAULT_BUDGET) -> List[GaussCode]:
    """
    All products of W_Ii^y with 0 <= y < n, in canonical order

    Args:
        m: Strand count
        n: Modulus
        budget: Maximum number of representatives to build

    Returns:
        n^w_m Gauss codes

    Raises:
        BudgetExceeded: if n^w_m > budget
    """
    _check_budget(m, n, budget)
    return [representative(m, y) for y in iter_exponent_tables(m, n)]


def fingerprint_report(
    m: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
    evaluator: Optional[MilnorEvaluator] = None,
) -> Tuple[str, int, int]:
    """
    Fingerprint every representative by its mod-n non-repeated invariants

    Returns:
        Tuple of (TSV text with summary line, distinct classes, expected n^w_m)
    """
    expected = _check_budget(m, n, budget)
    evaluator = evaluator or MilnorEvaluator()
    lines = ["y_table\tfingerprint_hash"]
    seen = set()
    for y in iter_exponent_tables(m, n):
        code = representative(m, y)
        digest = fingerprint(evaluator.non_repeated(code), n)
        seen.add(digest)
        lines.append(f"{','.join(str(v) for v in y.values())}\t{digest}")
        # representatives are never revisited
        evaluator.clear_cache()
    lines.append(f"classes={len(seen)} expected={expected}")
    return "\n".join(lines) + "\n", len(seen), expected
