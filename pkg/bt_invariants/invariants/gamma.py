"""
Invariant of singular links: D^(n-1) * sqrt(L)^eps(omega) * rho_n(sb_rep(omega))
"""

import logging

from ..scalars import D_const, SqrtExt
from ..trace import markov_trace
from .base import LinkInvariant, jones_normalize
from .representations import sb_rep
from .words import BraidWord, SingularBraidWord

logger = logging.getLogger(__name__)


def gamma_bar(word: SingularBraidWord) -> SqrtExt:
    return jones_normalize(D_const(), word.n, word.exponent, markov_trace(sb_rep(word)))


class GammaInvariant(LinkInvariant):
    name = 'gamma'
    display_name = 'Gamma (singular links)'
    accepts_singular = True

    def evaluate(self, word) -> SqrtExt:
        if isinstance(word, BraidWord):
            word = word.to_singular()
        return gamma_bar(word)
