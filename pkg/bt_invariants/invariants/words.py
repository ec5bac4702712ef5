"""
Braid words and singular braid words
"""

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Tuple, Union

from ..permutations import Perm, from_word
from .base import MalformedWordError

SIGMA = 's'
TAU = 't'


@dataclass(frozen=True)
class BraidWord:
    """Word in sigma_i^{+-1}: letter +i is sigma_i, -i its inverse."""

    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise MalformedWordError(f"Strand count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, 'letters', tuple(self.letters))
        for letter in self.letters:
            if not isinstance(letter, int) or letter == 0 or abs(letter) > self.n - 1:
                raise MalformedWordError(f"Letter {letter!r} is not a generator of B_{self.n}")

    @property
    def exponent(self) -> int:
        """Algebraic sum of the exponents."""
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: 'BraidWord') -> 'BraidWord':
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.n != self.n:
            raise MalformedWordError(f"Cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> 'BraidWord':
        return BraidWord(self.n, tuple(-letter for letter in reversed(self.letters)))

    def embed(self, m: int) -> 'BraidWord':
        if m < self.n:
            raise MalformedWordError(f"Cannot embed B_{self.n} into B_{m}")
        return BraidWord(m, self.letters)

    def permutation(self) -> Perm:
        return from_word([abs(letter) for letter in self.letters], self.n)

    def to_singular(self) -> 'SingularBraidWord':
        return SingularBraidWord(self.n, tuple(
            SingularLetter(SIGMA, abs(letter), 1 if letter > 0 else -1) for letter in self.letters))


class SingularLetter(NamedTuple):
    kind: str
    index: int
    sign: int = 1


LetterLike = Union[SingularLetter, Tuple[str, int, int], Tuple[str, int]]


@dataclass(frozen=True)
class SingularBraidWord:
    """Word in sigma_i^{+-1} and the singular crossings tau_i (always exponent +1)."""

    n: int
    letters: Tuple[SingularLetter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise MalformedWordError(f"Strand count must be a positive integer, got {self.n!r}")
        normalized = []
        for raw in self.letters:
            letter = SingularLetter(*raw)
            if letter.kind not in (SIGMA, TAU):
                raise MalformedWordError(f"Unknown letter kind {letter.kind!r}")
            if not 1 <= letter.index <= self.n - 1:
                raise MalformedWordError(f"Letter index {letter.index} out of range for SB_{self.n}")
            if letter.sign not in (1, -1) or (letter.kind == TAU and letter.sign != 1):
                raise MalformedWordError(f"Invalid exponent {letter.sign} for {letter.kind}{letter.index}")
            normalized.append(letter)
        object.__setattr__(self, 'letters', tuple(normalized))

    @classmethod
    def from_tokens(cls, n: int, tokens: Sequence[Union[int, str]]) -> 'SingularBraidWord':
        """Build from ints (signed sigma) and strings like 't2'."""
        letters = []
        for token in tokens:
            if isinstance(token, str) and token.startswith(TAU):
                letters.append(SingularLetter(TAU, int(token[1:]), 1))
            else:
                value = int(token)
                letters.append(SingularLetter(SIGMA, abs(value), 1 if value > 0 else -1))
        return cls(n, tuple(letters))

    @property
    def exponent(self) -> int:
        """Sum of exponents, each tau counting +1."""
        return sum(letter.sign for letter in self.letters)

    @property
    def tau_count(self) -> int:
        return sum(1 for letter in self.letters if letter.kind == TAU)

    def is_classical(self) -> bool:
        return self.tau_count == 0

    def to_braid(self) -> BraidWord:
        if not self.is_classical():
            raise MalformedWordError("Word contains singular crossings")
        return BraidWord(self.n, tuple(letter.sign * letter.index for letter in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: 'SingularBraidWord') -> 'SingularBraidWord':
        if not isinstance(other, SingularBraidWord):
            return NotImplemented
        if other.n != self.n:
            raise MalformedWordError(f"Cannot concatenate words on {self.n} and {other.n} strands")
        return SingularBraidWord(self.n, self.letters + other.letters)

    def embed(self, m: int) -> 'SingularBraidWord':
        if m < self.n:
            raise MalformedWordError(f"Cannot embed SB_{self.n} into SB_{m}")
        return SingularBraidWord(m, self.letters)

    def permutation(self) -> Perm:
        return from_word([letter.index for letter in self.letters], self.n)


AnyWord = Union[BraidWord, SingularBraidWord]
