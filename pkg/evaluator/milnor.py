"""
Welded Milnor invariants
Milnor's eta_q recursion on Wirtinger data, preferred longitudes and mu^w(I)

Two pipelines compute the same numbers. The word pipeline (eta, longitude)
builds meridian words and Magnus-expands them. The series pipeline runs the
recursion on truncated Magnus series directly, since E is a homomorphism, and
is the one invariant tables use.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.free_group import IDENTITY, Word, conjugate, meridian_word, power
from algebra.magnus import TruncSeries, coefficient, generator_series, series_mul
from diagram.gauss_code import GaussCode
from evaluator.wirtinger import WirtingerData, wirtinger
from utils.validation import is_non_repeated, validate_index_sequence

IndexSeq = Tuple[int, ...]


def eta(data: WirtingerData, q: int) -> Dict[Tuple[int, int], Word]:
    """
    eta_q images of every arc generator, with a_i1 read as the meridian alpha_i

    Args:
        data: Wirtinger data
        q: Recursion depth, >= 1

    Returns:
        Map (i, j) -> meridian word of eta_q(a_ij)
    """
    if q < 1:
        raise ValueError(f"Recursion depth q must be >= 1, got {q}")
    level = {
        (i, j): meridian_word(i)
        for i in range(1, data.m + 1)
        for j in range(1, data.arc_count(i) + 1)
    }
    for _ in range(q - 1):
        nxt: Dict[Tuple[int, int], Word] = {}
        for i in range(1, data.m + 1):
            alpha = meridian_word(i)
            prefix = IDENTITY
            nxt[(i, 1)] = alpha
            for j in range(1, data.arc_count(i)):
                arc, exp = data.u[(i, j)]
                prefix = prefix * power(level[arc], exp)
                nxt[(i, j + 1)] = conjugate(alpha, prefix)
        level = nxt
    return level


def longitude(data: WirtingerData, i: int, q: int, framing_shift: int = 0) -> Word:
    """
    Preferred i-th longitude phi(eta_q(a_i1^s v_i,r(i)-1)) as a meridian word

    Args:
        data: Wirtinger data
        i: Strand index
        q: Recursion depth
        framing_shift: Added to the zero-framing exponent s

    Returns:
        Meridian word
    """
    if i < 1 or i > data.m:
        raise ValueError(f"Strand index {i} outside 1..{data.m}")
    level = eta(data, q)
    word = power(meridian_word(i), data.framing_exponent(i) + framing_shift)
    for j in range(1, data.arc_count(i)):
        arc, exp = data.u[(i, j)]
        word = word * power(level[arc], exp)
    return word


def _series_power(s: TruncSeries, s_inv: TruncSeries, n: int) -> TruncSeries:
    base = s if n >= 0 else s_inv
    result = TruncSeries.one(s.m, s.q, s.reduced)
    for _ in range(abs(n)):
        result = series_mul(result, base)
    return result


def _series_levels(
    data: WirtingerData, q: int, trunc: int, reduced: bool
) -> Tuple[Dict[Tuple[int, int], TruncSeries], Dict[Tuple[int, int], TruncSeries]]:
    """E(eta_q(a_ij)) and E(eta_q(a_ij)^-1) for every arc, truncated at trunc"""
    m = data.m
    alpha = {i: generator_series(m, trunc, i, 1, reduced) for i in range(1, m + 1)}
    alpha_inv = {i: generator_series(m, trunc, i, -1, reduced) for i in range(1, m + 1)}
    arcs = [(i, j) for i in range(1, m + 1) for j in range(1, data.arc_count(i) + 1)]
    fwd = {arc: alpha[arc[0]] for arc in arcs}
    inv = {arc: alpha_inv[arc[0]] for arc in arcs}
    for _ in range(q - 1):
        nxt_fwd, nxt_inv = {}, {}
        for i in range(1, m + 1):
            prefix = TruncSeries.one(m, trunc, reduced)
            prefix_inv = TruncSeries.one(m, trunc, reduced)
            nxt_fwd[(i, 1)], nxt_inv[(i, 1)] = alpha[i], alpha_inv[i]
            for j in range(1, data.arc_count(i)):
                arc, exp = data.u[(i, j)]
                step, step_inv = (fwd[arc], inv[arc]) if exp == 1 else (inv[arc], fwd[arc])
                prefix = series_mul(prefix, step)
                prefix_inv = series_mul(step_inv, prefix_inv)
                nxt_fwd[(i, j + 1)] = series_mul(series_mul(prefix_inv, alpha[i]), prefix)
                nxt_inv[(i, j + 1)] = series_mul(series_mul(prefix_inv, alpha_inv[i]), prefix)
        fwd, inv = nxt_fwd, nxt_inv
    return fwd, inv


def longitude_series(
    data: WirtingerData,
    q: int,
    trunc: Optional[int] = None,
    reduced: bool = False,
    framing_shift: int = 0,
) -> Dict[int, TruncSeries]:
    """
    Magnus expansions of all preferred longitudes

    Args:
        data: Wirtinger data
        q: eta recursion depth
        trunc: Truncation degree, defaults to q - 1
        reduced: Work modulo monomials with a repeated variable
        framing_shift: Added to every zero-framing exponent

    Returns:
        Map strand i -> E(lambda_i)
    """
    if q < 1:
        raise ValueError(f"Recursion depth q must be >= 1, got {q}")
    trunc = q - 1 if trunc is None else trunc
    fwd, inv = _series_levels(data, q, trunc, reduced)
    out: Dict[int, TruncSeries] = {}
    for i in range(1, data.m + 1):
        s = data.framing_exponent(i) + framing_shift
        result = _series_power(fwd[(i, 1)], inv[(i, 1)], s)
        for j in range(1, data.arc_count(i)):
            arc, exp = data.u[(i, j)]
            result = series_mul(result, fwd[arc] if exp == 1 else inv[arc])
        out[i] = result
    return out


def _check_sequence(m: int, seq: Sequence[int]) -> IndexSeq:
    seq = tuple(seq)
    is_valid, msg = validate_index_sequence(seq, m)
    if not is_valid:
        raise ValueError(f"Invalid index sequence: {msg}")
    return seq


def milnor(code: GaussCode, seq: Sequence[int], q: Optional[int] = None, framing_shift: int = 0) -> int:
    """
    Welded Milnor invariant mu^w(j_1 ... j_k i)

    Args:
        code: Valid Gauss code
        seq: Index sequence, last entry i is the longitude strand
        q: eta recursion depth, at least len(seq) (defaults to len(seq))
        framing_shift: Added to the zero-framing exponent

    Returns:
        Coefficient of X_j1 ... X_jk in E(lambda_i)
    """
    seq = _check_sequence(code.m, seq)
    q = len(seq) if q is None else q
    if q < len(seq):
        raise ValueError(f"Recursion depth {q} is below sequence length {len(seq)}")
    data = wirtinger(code)
    series = longitude_series(data, q, len(seq) - 1, is_non_repeated(seq), framing_shift)
    return coefficient(series[seq[-1]], seq[:-1])


def iter_sequences(m: int, max_len: int, non_repeated_only: bool = False) -> Iterator[IndexSeq]:
    """Index sequences of length 2..max_len, by length then lexicographic"""
    for length in range(2, max_len + 1):
        if non_repeated_only:
            yield from itertools.permutations(range(1, m + 1), length)
        else:
            yield from itertools.product(range(1, m + 1), repeat=length)


@dataclass
class InvariantTable:
    """mu^w(I) for every sequence I of length 2..L"""

    m: int
    L: int
    values: Dict[IndexSeq, int] = field(default_factory=dict)
    non_repeated_only: bool = False

    def __getitem__(self, seq: Sequence[int]) -> int:
        return self.values[tuple(seq)]

    def __len__(self) -> int:
        return len(self.values)

    def sequences(self) -> List[IndexSeq]:
        return sorted(self.values, key=lambda s: (len(s), s))

    def reduced_mod(self, n: int) -> "InvariantTable":
        """Copy with every value reduced into [0, n)"""
        if n < 1:
            raise ValueError(f"Modulus must be >= 1, got {n}")
        return InvariantTable(self.m, self.L, {k: v % n for k, v in self.values.items()}, self.non_repeated_only)

    def vlk_difference(self, i: int, j: int) -> int:
        """mu(ij) - mu(ji)"""
        return self[(i, j)] - self[(j, i)]


def table_from_series(
    m: int, L: int, series: Dict[int, TruncSeries], non_repeated_only: bool
) -> InvariantTable:
    values = {
        seq: coefficient(series[seq[-1]], seq[:-1])
        for seq in iter_sequences(m, L, non_repeated_only)
    }
    return InvariantTable(m, L, values, non_repeated_only)


def _effective_length(m: int, L: int, non_repeated_only: bool) -> int:
    if L < 2:
        raise ValueError(f"Maximum sequence length must be >= 2, got {L}")
    # no non-repeated sequence is longer than m
    return min(L, m) if non_repeated_only else L


def invariant_table(code: GaussCode, L: int, non_repeated_only: bool = False) -> InvariantTable:
    """
    All mu^w(I) with 2 <= |I| <= L

    Args:
        code: Valid Gauss code
        L: Maximum sequence length
        non_repeated_only: Restrict to sequences with pairwise distinct entries

    Returns:
        InvariantTable
    """
    depth = _effective_length(code.m, L, non_repeated_only)
    if depth < 2:
        return InvariantTable(code.m, L, {}, non_repeated_only)
    series = longitude_series(wirtinger(code), depth, depth - 1, non_repeated_only)
    table = table_from_series(code.m, depth, series, non_repeated_only)
    table.L = L
    return table


class MilnorEvaluator:
    """Computes invariant tables with memoization per diagram"""

    def __init__(self, verbose: bool = False):
        """
        Initialize an empty evaluator

        Args:
            verbose: Print a one-line summary on construction
        """
        self.verbose = verbose
        self._cache: Dict[Tuple[GaussCode, int, bool], InvariantTable] = {}
        if verbose:
            print("Initialized Milnor evaluator (series pipeline, exact integers)")

    def table(self, code: GaussCode, L: int, non_repeated_only: bool = False) -> InvariantTable:
        """
        Invariant table of a diagram (with caching)

        Args:
            code: Valid Gauss code
            L: Maximum sequence length
            non_repeated_only: Restrict to non-repeated sequences

        Returns:
            InvariantTable (shared with the cache, do not mutate)
        """
        key = (code, L, non_repeated_only)
        if key not in self._cache:
            self._cache[key] = invariant_table(code, L, non_repeated_only)
        return self._cache[key]

    def milnor(self, code: GaussCode, seq: Sequence[int]) -> int:
        seq = _check_sequence(code.m, seq)
        non_repeated = is_non_repeated(seq)
        return self.table(code, len(seq), non_repeated)[seq]

    def non_repeated(self, code: GaussCode) -> InvariantTable:
        """All non-repeated invariants, lengths 2..m"""
        return self.table(code, max(code.m, 2), True)

    def clear_cache(self):
        """Clear the memoization cache"""
        self._cache.clear()

    def get_cache_size(self) -> int:
        """Get number of cached tables"""
        return len(self._cache)
