"""
The three-parameter link invariant

    Delta(alpha) = D^(n-1) * sqrt(L)^e(alpha) * rho_n(pi_bar(alpha))

with D = -(1 - Lu) / (sqrt(L)(1-u)B) and e(alpha) the exponent sum of the word.
"""

import logging
from fractions import Fraction
from typing import Mapping, Optional, Union

from ..scalars import DivisionByZero, D_const, RatFunc, SqrtExt
from ..trace import markov_trace
from .base import LinkInvariant, SpecializationError, jones_normalize
from .representations import pi_bar, pi_bar_sqrtL
from .words import BraidWord

logger = logging.getLogger(__name__)


def normalization_factor(n: int) -> SqrtExt:
    """D^(n-1)."""
    return D_const() ** (n - 1)


def delta_bar(word: BraidWord) -> SqrtExt:
    value = jones_normalize(D_const(), word.n, word.exponent, markov_trace(pi_bar(word)))
    logger.debug("delta n=%d len=%d -> %s", word.n, len(word), value)
    return value


def delta_bar_sqrtL_rep(word: BraidWord) -> SqrtExt:
    """Same invariant through the rescaled generators sqrt(L) T_i."""
    return normalization_factor(word.n) * pi_bar_sqrtL(word).trace()


def substitute_ext(value: SqrtExt, replacements: Mapping[str, Union[Fraction, RatFunc]],
                   symbol: Optional[str] = None) -> SqrtExt:
    """Apply a substitution of Q(u, A, B) componentwise and to the radicand."""
    def apply(f: RatFunc) -> RatFunc:
        return f.substitute(replacements)

    try:
        return value.map_components(apply, apply(value.radicand), symbol or value.symbol)
    except DivisionByZero as e:
        raise SpecializationError(str(e)) from e


def delta_two_parameter(word: BraidWord, m: int) -> SqrtExt:
    """Delta with B -> 1/m."""
    if not isinstance(m, int) or m < 1:
        raise SpecializationError(f"B -> 1/m needs a positive integer m, got {m!r}")
    return substitute_ext(delta_bar(word), {'B': Fraction(1, m)})


class DeltaInvariant(LinkInvariant):
    name = 'delta'
    display_name = 'Delta (trace of the bt-algebra)'

    def evaluate(self, word) -> SqrtExt:
        self.check_word(word)
        return delta_bar(_as_braid(word))


class DeltaSqrtLInvariant(LinkInvariant):
    name = 'delta-sqrtL'
    display_name = 'Delta (rescaled generators)'

    def evaluate(self, word) -> SqrtExt:
        self.check_word(word)
        return delta_bar_sqrtL_rep(_as_braid(word))


def _as_braid(word) -> BraidWord:
    return word if isinstance(word, BraidWord) else word.to_braid()
