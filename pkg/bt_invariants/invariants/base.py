"""
Base interface for link invariants computed from braid words
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Union

from ..scalars import RatFunc, SqrtExt, sqrt_pow

if TYPE_CHECKING:
    from .words import BraidWord, SingularBraidWord


class MalformedWordError(ValueError):
    """A braid word with a letter outside the generators of its braid group."""


class SpecializationError(ValueError):
    """A substitution makes a denominator vanish identically."""


class GuardExceededError(ValueError):
    """Input beyond the configured size guard of a computation."""


def jones_normalize(D: SqrtExt, n: int, exponent: int, trace_value: RatFunc) -> SqrtExt:
    """D^(n-1) * sqrt(R)^exponent * trace_value, R the radicand of D."""
    return D ** (n - 1) * sqrt_pow(exponent, D.radicand, D.symbol) * trace_value


class LinkInvariant(ABC):
    """Base class for invariant adapters"""

    name = "unknown"
    display_name = "Unknown Invariant"
    accepts_singular = False

    @abstractmethod
    def evaluate(self, word: Union['BraidWord', 'SingularBraidWord']) -> SqrtExt:
        """
        Compute the invariant of the closure of ``word``

        Args:
            word: Braid word (or singular braid word when supported)

        Returns:
            SqrtExt value over the invariant's scalar field
        """
        pass

    def check_word(self, word) -> None:
        from .words import SingularBraidWord

        if isinstance(word, SingularBraidWord) and not self.accepts_singular:
            if not word.is_classical():
                raise MalformedWordError(f"{self.display_name} is not defined on singular crossings")

    def __repr__(self) -> str:
        return f'{type(self).__name__}(name={self.name!r})'
