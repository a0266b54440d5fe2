"""
Truncated noncommutative power series and the Magnus expansion
Exact integer coefficients in Z<<X_1..X_m>>, sparse, cut at degree q
"""

from typing import Dict, Iterable, Optional, Tuple

from algebra.free_group import MERIDIAN, Word

Monomial = Tuple[int, ...]


def _has_repeat(mono: Monomial) -> bool:
    return len(set(mono)) != len(mono)


class TruncSeries:
    """
    Element of Z<<X_1..X_m>> modulo monomials of degree > q

    With reduced=True the ring is further divided by the ideal spanned by
    monomials with a repeated variable, which leaves every non-repeated
    coefficient exact.
    """

    __slots__ = ("m", "q", "reduced", "coeffs")

    def __init__(
        self,
        m: int,
        q: int,
        coeffs: Optional[Dict[Monomial, int]] = None,
        reduced: bool = False,
    ):
        if m < 1:
            raise ValueError(f"Variable count must be >= 1, got {m}")
        if q < 0:
            raise ValueError(f"Truncation degree must be >= 0, got {q}")
        self.m = m
        self.q = q
        self.reduced = reduced
        clean: Dict[Monomial, int] = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if len(mono) > q:
                raise ValueError(f"Monomial {mono} exceeds truncation degree {q}")
            if any(v < 1 or v > m for v in mono):
                raise ValueError(f"Monomial {mono} uses a variable outside 1..{m}")
            if reduced and _has_repeat(mono):
                continue
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if clean[mono] == 0:
                    del clean[mono]
        self.coeffs = clean

    @classmethod
    def one(cls, m: int, q: int, reduced: bool = False) -> "TruncSeries":
        return cls(m, q, {(): 1}, reduced)

    @classmethod
    def variable(cls, m: int, q: int, i: int, reduced: bool = False) -> "TruncSeries":
        coeffs = {(): 1}
        if q >= 1:
            coeffs[(i,)] = 1
        return cls(m, q, coeffs, reduced)

    def _same_ring(self, other: "TruncSeries"):
        if (self.m, self.q, self.reduced) != (other.m, other.q, other.reduced):
            raise ValueError(
                f"Series ring mismatch: (m={self.m}, q={self.q}, reduced={self.reduced}) "
                f"vs (m={other.m}, q={other.q}, reduced={other.reduced})"
            )

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.m == other.m
            and self.q == other.q
            and self.reduced == other.reduced
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def terms(self, degree: Optional[int] = None) -> Dict[Monomial, int]:
        if degree is None:
            return dict(self.coeffs)
        return {k: c for k, c in self.coeffs.items() if len(k) == degree}

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mono in sorted(self.coeffs, key=lambda k: (len(k), k)):
            c = self.coeffs[mono]
            if mono:
                parts.append(f"{c:+d}*" + "*".join(f"X{v}" for v in mono))
            else:
                parts.append(f"{c:+d}")
        return " ".join(parts)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Noncommutative product with all terms of degree > q dropped

    Args:
        a: Left factor
        b: Right factor, same m, q and reduced flag

    Returns:
        Truncated product
    """
    a._same_ring(b)
    q = a.q
    by_degree: Dict[int, list] = {}
    for mono, c in b.coeffs.items():
        by_degree.setdefault(len(mono), []).append((mono, c))
    out: Dict[Monomial, int] = {}
    for ma, ca in a.coeffs.items():
        room = q - len(ma)
        for d in range(room + 1):
            for mb, cb in by_degree.get(d, ()):
                mono = ma + mb
                if a.reduced and _has_repeat(mono):
                    continue
                out[mono] = out.get(mono, 0) + ca * cb
    result = TruncSeries(a.m, q, reduced=a.reduced)
    result.coeffs = {k: c for k, c in out.items() if c}
    return result


def generator_series(m: int, q: int, i: int, exp: int, reduced: bool = False) -> TruncSeries:
    """E(alpha_i) = 1 + X_i and E(alpha_i^-1) = 1 - X_i + X_i^2 - ..."""
    if i < 1 or i > m:
        raise ValueError(f"Generator index {i} out of range 1..{m}")
    if exp == 1:
        return TruncSeries.variable(m, q, i, reduced)
    if exp != -1:
        raise ValueError(f"Letter exponent must be +1 or -1, got {exp}")
    coeffs = {(i,) * d: (-1) ** d for d in range(q + 1)}
    return TruncSeries(m, q, coeffs, reduced)


def magnus_expand(w: Word, m: int, q: int, reduced: bool = False) -> TruncSeries:
    """
    Magnus expansion E(w) truncated at degree q

    Args:
        w: Word over meridian generators alpha_1..alpha_m
        m: Number of variables
        q: Truncation degree
        reduced: Drop monomials with a repeated variable

    Returns:
        E(w) as a TruncSeries
    """
    if w.kind not in (None, MERIDIAN):
        raise ValueError(f"Magnus expansion needs a meridian word, got {w.kind}")
    cache: Dict[Tuple[int, int], TruncSeries] = {}
    result = TruncSeries.one(m, q, reduced)
    for gen, exp in w.letters:
        key = (gen.index[0], exp)
        if key not in cache:
            cache[key] = generator_series(m, q, key[0], exp, reduced)
        result = series_mul(result, cache[key])
    return result


def coefficient(s: TruncSeries, monomial: Iterable[int]) -> int:
    """Stored coefficient of a monomial, 0 if absent"""
    mono = tuple(monomial)
    if len(mono) > s.q:
        raise ValueError(f"Monomial {mono} is longer than truncation degree {s.q}")
    return s.coeffs.get(mono, 0)
