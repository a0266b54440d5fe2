"""
Normal forms of welded string links up to sv, 2n+sv and V^n+sv equivalence
Products of generator links W_Ii with exponents peeled from Milnor invariants
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from arrows.w_tree import generator_power, s_k
from diagram.gauss_code import GaussCode, identity, stack, stack_all
from evaluator.milnor import MilnorEvaluator
from utils.validation import validate_modulus

# (k, head strand i, index sequence I)
ExponentKey = Tuple[int, int, Tuple[int, ...]]

SV = "sv"
TWO_N_SV = "2n-sv"
VN_SV = "vn-sv"
RELATIONS = (SV, TWO_N_SV, VN_SV)


@dataclass
class NormalForm:
    """Representative diagram plus the exponent of every W_Ii factor"""

    code: GaussCode
    exponents: Dict[ExponentKey, int] = field(default_factory=dict)
    relation: str = SV
    n: Optional[int] = None

    def exponent(self, seq, i: int) -> int:
        seq = tuple(seq)
        return self.exponents.get((len(seq), i, seq), 0)


def basis_keys(m: int, k: int) -> List[ExponentKey]:
    """Canonical factor order within one degree: i ascending, then I lexicographic"""
    return [(k, i, seq) for i in range(1, m + 1) for seq in s_k(m, i, k)]


def all_basis_keys(m: int) -> List[ExponentKey]:
    keys: List[ExponentKey] = []
    for k in range(1, m):
        keys.extend(basis_keys(m, k))
    return keys


def build_product(m: int, factors: List[Tuple[ExponentKey, int]]) -> GaussCode:
    """Stack W_Ii^x over (key, x) pairs in the given order, skipping x = 0"""
    pieces = [generator_power(m, seq, i, x) for (_, i, seq), x in factors if x]
    return stack_all(m, pieces)


def normal_form_sv(code: GaussCode, evaluator: Optional[MilnorEvaluator] = None) -> NormalForm:
    """
    sv-normal form sigma_1 * ... * sigma_m-1

    For each degree k the exponent of W_Ii is mu(Ii) of the input minus
    mu(Ii) of the product built so far.

    Args:
        code: Valid Gauss code
        evaluator: Shared evaluator (a private one is used otherwise)

    Returns:
        NormalForm whose non-repeated invariants equal the input's
    """
    evaluator = evaluator or MilnorEvaluator()
    m = code.m
    target = evaluator.non_repeated(code)
    partial = identity(m)
    exponents: Dict[ExponentKey, int] = {}
    for k in range(1, m):
        current = evaluator.non_repeated(partial)
        factors = []
        for key in basis_keys(m, k):
            _, i, seq = key
            x = target[seq + (i,)] - current[seq + (i,)]
            exponents[key] = x
            factors.append((key, x))
        partial = stack(partial, build_product(m, factors))
    return NormalForm(partial, exponents, SV, None)


def _peel_mod(
    code: GaussCode,
    first: List[Tuple[ExponentKey, int]],
    n: int,
    evaluator: MilnorEvaluator,
) -> Tuple[GaussCode, Dict[ExponentKey, int]]:
    """
    Stack degree-1 factors, then peel degrees 2..m-1 mod n against the prefix

    Each degree-k exponent is mu(Ii) of the input minus mu(Ii) of the
    product built so far, reduced into [0, n).
    """
    m = code.m
    target = evaluator.non_repeated(code)
    exponents: Dict[ExponentKey, int] = dict(first)
    partial = build_product(m, first)
    for k in range(2, m):
        current = evaluator.non_repeated(partial)
        factors = []
        for key in basis_keys(m, k):
            _, i, seq = key
            y = (target[seq + (i,)] - current[seq + (i,)]) % n
            exponents[key] = y
            factors.append((key, y))
        partial = stack(partial, build_product(m, factors))
    return partial, exponents


def normal_form_2n_sv(code: GaussCode, n: int, evaluator: Optional[MilnorEvaluator] = None) -> NormalForm:
    """
    (2n+sv)-normal form tau_1 * ... * tau_m-1

    tau_1 is a product over pairs i < j of W_ji^y * W_ij^z with
    y = x_ji mod n and z = x_ij + (y - x_ji), which keeps mu(ij) - mu(ji).
    Higher degrees are peeled mod n against tau_1 * ... * tau_k-1.

    Args:
        code: Valid Gauss code
        n: Modulus, >= 1
        evaluator: Shared evaluator

    Returns:
        NormalForm with y and z exponents
    """
    is_valid, msg = validate_modulus(n)
    if not is_valid:
        raise ValueError(msg)
    evaluator = evaluator or MilnorEvaluator()
    m = code.m
    target = evaluator.non_repeated(code)
    first: List[Tuple[ExponentKey, int]] = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            x_ji, x_ij = target[(j, i)], target[(i, j)]
            y = x_ji % n
            first.extend([((1, i, (j,)), y), ((1, j, (i,)), x_ij + (y - x_ji))])
    rep, exponents = _peel_mod(code, first, n, evaluator)
    return NormalForm(rep, exponents, TWO_N_SV, n)


def normal_form_Vn_sv(code: GaussCode, n: int, evaluator: Optional[MilnorEvaluator] = None) -> NormalForm:
    """
    (V^n+sv)-normal form with every exponent in [0, n)

    Degree 1 reduces mu(ji) mod n; higher degrees are peeled mod n against
    the product built so far, in canonical factor order.

    Args:
        code: Valid Gauss code
        n: Modulus, >= 1
        evaluator: Shared evaluator

    Returns:
        NormalForm with y exponents
    """
    is_valid, msg = validate_modulus(n)
    if not is_valid:
        raise ValueError(msg)
    evaluator = evaluator or MilnorEvaluator()
    target = evaluator.non_repeated(code)
    first = [(key, target[key[2] + (key[1],)] % n) for key in basis_keys(code.m, 1)]
    rep, exponents = _peel_mod(code, first, n, evaluator)
    return NormalForm(rep, exponents, VN_SV, n)


def normal_form(
    code: GaussCode,
    relation: str,
    n: Optional[int] = None,
    evaluator: Optional[MilnorEvaluator] = None,
) -> NormalForm:
    """Dispatch on the relation name: sv, 2n-sv or vn-sv (n ignored for sv)"""
    if relation == SV:
        return normal_form_sv(code, evaluator)
    if relation not in RELATIONS:
        raise ValueError(f"Unknown relation '{relation}', expected one of {', '.join(RELATIONS)}")
    if n is None:
        raise ValueError(f"Relation {relation} needs a modulus n")
    if relation == TWO_N_SV:
        return normal_form_2n_sv(code, n, evaluator)
    return normal_form_Vn_sv(code, n, evaluator)


def format_exponents_tsv(nf: NormalForm) -> str:
    """
    Exponent table as TSV with columns k, i, I, exponent

    Zero exponents are omitted; rows follow the canonical factor order.
    """
    lines = ["k\ti\tI\texponent"]
    for key in sorted(nf.exponents, key=lambda t: (t[0], t[1], t[2])):
        x = nf.exponents[key]
        if x:
            k, i, seq = key
            lines.append(f"{k}\t{i}\t{','.join(str(v) for v in seq)}\t{x}")
    return "\n".join(lines) + "\n"
