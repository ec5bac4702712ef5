"""
Images of braid words in E_n

pi_bar:        sigma_i -> T_i
pi_bar_sqrtL:  sigma_i -> sqrt(L) T_i, carried as a pair (even, odd) over {1, sqrt(L)}
sb_rep:        sigma_i -> T_i, tau_i -> E_i (1 + T_i)
"""

import logging
from functools import lru_cache
from typing import NamedTuple

from ..btalgebra import BtElement, gen_E, gen_T, gen_T_inv, mul, unit, zero
from ..config import RELATION_CHECK_MAX
from ..reports import Report
from ..scalars import L_const, RatFunc, SqrtExt
from ..trace import markov_trace
from .words import TAU, BraidWord, SingularBraidWord

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _sigma(index: int, sign: int, n: int) -> BtElement:
    return gen_T(index, n) if sign > 0 else gen_T_inv(index, n)


@lru_cache(maxsize=None)
def _tau(index: int, n: int) -> BtElement:
    tie = gen_E(index, n)
    return tie + mul(tie, gen_T(index, n))


def pi_bar(word: BraidWord) -> BtElement:
    """Normalised product of the T_i^{+-1} images."""
    result = unit(word.n)
    for letter in word.letters:
        result = mul(result, _sigma(abs(letter), 1 if letter > 0 else -1, word.n))
    return result


def sb_rep(word: SingularBraidWord) -> BtElement:
    result = unit(word.n)
    for letter in word.letters:
        image = _tau(letter.index, word.n) if letter.kind == TAU else _sigma(letter.index, letter.sign, word.n)
        result = mul(result, image)
    return result


class SqrtLElement(NamedTuple):
    """even + sqrt(L) * odd with even, odd in E_n."""

    even: BtElement
    odd: BtElement

    def __mul__(self, other: 'SqrtLElement') -> 'SqrtLElement':
        L = L_const()
        return SqrtLElement(
            mul(self.even, other.even) + mul(self.odd, other.odd).scale(L),
            mul(self.even, other.odd) + mul(self.odd, other.even),
        )

    def trace(self) -> SqrtExt:
        return SqrtExt(markov_trace(self.even), markov_trace(self.odd))


def pi_bar_sqrtL(word: BraidWord) -> SqrtLElement:
    """Image under sigma_i -> sqrt(L) T_i; sigma_i^-1 -> T_i^-1 sqrt(L) / L."""
    n = word.n
    inverse_L: RatFunc = L_const().inverse()
    result = SqrtLElement(unit(n), zero(n))
    for letter in word.letters:
        if letter > 0:
            image = SqrtLElement(zero(n), gen_T(letter, n))
        else:
            image = SqrtLElement(zero(n), gen_T_inv(-letter, n).scale(inverse_L))
        result = result * image
    return result


def check_singular_relations(n: int) -> Report:
    """Relations of the singular braid monoid on the images of sigma_i and tau_i."""
    if not 2 <= n <= RELATION_CHECK_MAX:
        raise ValueError(f"Relation checks support 2 <= n <= {RELATION_CHECK_MAX}, got {n}")
    sigma = {i: _sigma(i, 1, n) for i in range(1, n)}
    tie = {i: _tau(i, n) for i in range(1, n)}
    report = Report(name='singular_relations', n=n)
    for i in range(1, n):
        report.record('sigma_tau_commute', (i,), mul(sigma[i], tie[i]) == mul(tie[i], sigma[i]))
        for j in range(1, n):
            if abs(i - j) > 1:
                report.record('tau_far_commute', (i, j), mul(tie[i], tie[j]) == mul(tie[j], tie[i]))
                report.record('sigma_tau_far_commute', (i, j),
                              mul(sigma[i], tie[j]) == mul(tie[j], sigma[i]))
            elif abs(i - j) == 1:
                left = mul(mul(sigma[i], sigma[j]), tie[i])
                right = mul(mul(tie[j], sigma[i]), sigma[j])
                report.record('sigma_sigma_tau', (i, j), left == right)
    logger.info("Singular relation suite n=%d: %s", n, 'pass' if report.passed else 'FAIL')
    return report
