"""
Free groups on indexed generators
Reduced words over Wirtinger generators a_ij or meridians alpha_i
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

WIRTINGER = "wirtinger"
MERIDIAN = "meridian"


@dataclass(frozen=True, order=True)
class Gen:
    """A free generator: a Wirtinger arc a_ij or a meridian alpha_i"""

    kind: str
    index: Tuple[int, ...]

    def __post_init__(self):
        if self.kind == WIRTINGER:
            if len(self.index) != 2:
                raise ValueError(f"Wirtinger generator needs (i, j), got {self.index}")
        elif self.kind == MERIDIAN:
            if len(self.index) != 1:
                raise ValueError(f"Meridian generator needs (i,), got {self.index}")
        else:
            raise ValueError(f"Unknown generator kind: {self.kind}")
        if any(k < 1 for k in self.index):
            raise ValueError(f"Generator indices must be >= 1, got {self.index}")

    @staticmethod
    def wirtinger(i: int, j: int) -> "Gen":
        return Gen(WIRTINGER, (i, j))

    @staticmethod
    def meridian(i: int) -> "Gen":
        return Gen(MERIDIAN, (i,))

    @property
    def strand(self) -> int:
        return self.index[0]

    def __str__(self) -> str:
        if self.kind == MERIDIAN:
            return f"x{self.index[0]}"
        return f"a{self.index[0]}_{self.index[1]}"


Letter = Tuple[Gen, int]


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"Letter exponent must be +1 or -1, got {exp}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """
    Freely reduced word, stored as +-1 letters

    Construct through Word.of() (or the module functions) so that the
    letters are reduced; the raw constructor trusts its input.
    """

    letters: Tuple[Letter, ...] = ()

    @staticmethod
    def of(letters: Iterable[Letter]) -> "Word":
        return Word(_reduce(letters))

    @staticmethod
    def gen(g: Gen, exp: int = 1) -> "Word":
        return Word(((g, exp),))

    @property
    def kind(self):
        """Alphabet kind of the word, or None for the empty word"""
        return self.letters[0][0].kind if self.letters else None

    def is_empty(self) -> bool:
        return not self.letters

    def is_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(self.letters, self.letters[1:])
        )

    def exponent_sum(self, g: Gen) -> int:
        return sum(exp for gen, exp in self.letters if gen == g)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^-1" for g, e in self.letters)


IDENTITY = Word()


def multiply(u: Word, v: Word) -> Word:
    """
    Freely reduced concatenation u*v

    Args:
        u: Left factor
        v: Right factor (same alphabet kind as u)

    Returns:
        Reduced product
    """
    if u.kind is not None and v.kind is not None and u.kind != v.kind:
        raise ValueError(f"Cannot multiply {u.kind} word by {v.kind} word")
    # u and v are reduced, so cancellation only happens at the seam
    left = list(u.letters)
    k = 0
    while k < len(v.letters) and left:
        gen, exp = v.letters[k]
        if left[-1][0] == gen and left[-1][1] == -exp:
            left.pop()
            k += 1
        else:
            break
    return Word(tuple(left) + v.letters[k:])


def invert(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.letters)))


def conjugate(x: Word, by: Word) -> Word:
    """Return by^-1 * x * by"""
    return multiply(multiply(invert(by), x), by)


def power(w: Word, n: int) -> Word:
    if n < 0:
        return power(invert(w), -n)
    result = IDENTITY
    for _ in range(n):
        result = multiply(result, w)
    return result


def commutator(u: Word, v: Word) -> Word:
    """Return u v u^-1 v^-1"""
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def meridian_word(i: int, exp: int = 1) -> Word:
    return Word.gen(Gen.meridian(i), exp)
