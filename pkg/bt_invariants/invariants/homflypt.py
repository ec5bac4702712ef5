"""
Homflypt polynomial, two ways.

homflypt_specialize sends A -> z, B -> 1 in a value of Delta. homflypt_oracle
computes the polynomial independently in the Hecke algebra H_n(u)
(h_i^2 = u + (u-1) h_i) with the Ocneanu trace of parameter z:

    X(alpha) = D_lambda^(n-1) * sqrt(lambda)^e(alpha) * tau_n(pi(alpha)),
    lambda = (z + 1 - u) / (uz)
"""

import logging
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from sympy.polys.fields import FracElement

from ..config import HOMFLYPT_MAX_STRANDS, HOMFLYPT_SQRT_SYMBOL
from ..permutations import Perm, canonical_factor, decode, restrict, reduced_word
from ..scalars import (
    DivisionByZero,
    HOMFLYPT_FIELD,
    RatFunc,
    SqrtExt,
    gens,
    homflypt_D_const,
    lambda_const,
)
from .base import GuardExceededError, LinkInvariant, SpecializationError, jones_normalize
from .words import BraidWord

logger = logging.getLogger(__name__)

_u, _z = (gen._frac for gen in gens(HOMFLYPT_FIELD))


def homflypt_specialize(value: SqrtExt) -> SqrtExt:
    """A -> z and B -> 1, componentwise; the radicand L becomes lambda."""
    z = RatFunc.variable('z', HOMFLYPT_FIELD)
    replacements = {'A': z, 'B': 1}

    def apply(f: RatFunc) -> RatFunc:
        return f.substitute(replacements, HOMFLYPT_FIELD)

    try:
        return value.map_components(apply, apply(value.radicand), HOMFLYPT_SQRT_SYMBOL)
    except DivisionByZero as e:
        raise SpecializationError(f"B -> 1 is a pole of {value}") from e


class HeckeElement:
    """Linear combination of h_w over Q(u, z)."""

    __slots__ = ('n', '_terms')

    def __init__(self, n: int, terms: Optional[Mapping[Perm, FracElement]] = None):
        self.n = n
        self._terms: Dict[Perm, FracElement] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> 'HeckeElement':
        return cls(n, {Perm.identity(n): HOMFLYPT_FIELD.one})

    @classmethod
    def generator(cls, i: int, n: int) -> 'HeckeElement':
        return cls(n, {Perm.identity(n).times_generator(i): HOMFLYPT_FIELD.one})

    @classmethod
    def generator_inverse(cls, i: int, n: int) -> 'HeckeElement':
        """u^-1 h_i + (u^-1 - 1)."""
        inv_u = HOMFLYPT_FIELD.one / _u
        return cls(n, {
            Perm.identity(n).times_generator(i): inv_u,
            Perm.identity(n): inv_u - 1,
        })

    def items(self):
        return self._terms.items()

    def __mul__(self, other: 'HeckeElement') -> 'HeckeElement':
        result: Dict[Perm, FracElement] = {}
        for x, left in self._terms.items():
            for v, right in other._terms.items():
                for w, value in _hecke_basis_product(x, v):
                    result[w] = result.get(w, HOMFLYPT_FIELD.zero) + left * right * value
        return HeckeElement(self.n, result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))


@lru_cache(maxsize=65536)
def _hecke_basis_product(x: Perm, v: Perm) -> Tuple[Tuple[Perm, FracElement], ...]:
    terms: Dict[Perm, FracElement] = {x: HOMFLYPT_FIELD.one}
    for i in reduced_word(v):
        step: Dict[Perm, FracElement] = {}
        for w, coeff in terms.items():
            shifted = w.times_generator(i)
            if w.has_descent(i):
                step[shifted] = step.get(shifted, HOMFLYPT_FIELD.zero) + coeff * _u
                step[w] = step.get(w, HOMFLYPT_FIELD.zero) + coeff * (_u - 1)
            else:
                step[shifted] = step.get(shifted, HOMFLYPT_FIELD.zero) + coeff
        terms = {w: c for w, c in step.items() if c}
    return tuple(terms.items())


def _hecke_word(w: Perm) -> HeckeElement:
    return HeckeElement(w.n, {w: HOMFLYPT_FIELD.one})


def _hecke_run(i: int, k: int, n: int) -> HeckeElement:
    """h_i h_{i-1} ... h_k, the unit when k > i."""
    result = HeckeElement.one(n)
    for j in range(i, k - 1, -1):
        result = result * HeckeElement.generator(j, n)
    return result


@lru_cache(maxsize=65536)
def _ocneanu_basis(w: Perm) -> FracElement:
    if w.n == 1:
        return HOMFLYPT_FIELD.one
    ks = canonical_factor(w)
    k = ks[-1]
    if k == 0:
        return _ocneanu_basis(restrict(w))
    n = w.n - 1
    reduced = _hecke_word(decode(ks[:-1])) * _hecke_run(n - 1, k, n)
    total = HOMFLYPT_FIELD.zero
    for v, coeff in reduced.items():
        total += coeff * _ocneanu_basis(v)
    return total * _z


def ocneanu_trace(h: HeckeElement) -> RatFunc:
    total = HOMFLYPT_FIELD.zero
    for w, coeff in h.items():
        total += coeff * _ocneanu_basis(w)
    return RatFunc(total)


def hecke_image(word: BraidWord) -> HeckeElement:
    result = HeckeElement.one(word.n)
    for letter in word.letters:
        if letter > 0:
            result = result * HeckeElement.generator(letter, word.n)
        else:
            result = result * HeckeElement.generator_inverse(-letter, word.n)
    return result


def homflypt_oracle(word: BraidWord) -> SqrtExt:
    if word.n > HOMFLYPT_MAX_STRANDS:
        raise GuardExceededError(
            f"Homflypt oracle supports at most {HOMFLYPT_MAX_STRANDS} strands, got {word.n}")
    D = homflypt_D_const()
    if D.radicand != lambda_const():
        raise SpecializationError("Homflypt normalization is not over lambda")
    return jones_normalize(D, word.n, word.exponent, ocneanu_trace(hecke_image(word)))


class HomflyptInvariant(LinkInvariant):
    name = 'homflypt'
    display_name = 'Homflypt (Hecke algebra, Ocneanu trace)'

    def evaluate(self, word) -> SqrtExt:
        self.check_word(word)
        return homflypt_oracle(word if isinstance(word, BraidWord) else word.to_braid())
