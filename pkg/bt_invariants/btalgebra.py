"""
Elements of the bt-algebra E_n(u) in the basis {T_w E_I}.

Terms are keyed by (w, I) with the ties on the right. Products are normalised
generator by generator along a reduced word of the right factor, using

    E_K T_i = T_i E_{s_i(K)}
    T_x T_i = T_{x s_i}                                       if x(i) < x(i+1)
    T_x T_i = T_{x s_i} + (u-1) T_{x s_i} E_i + (u-1) T_x E_i  otherwise

and E_I E_J = E_{I*J} for the trailing ties.
"""

import logging
import random
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from sympy.polys.fields import FracElement

from .config import MAX_LEVEL, PRODUCT_CACHE_SIZE, RANDOM_ELEMENT_TERMS
from .partitions import (
    SetPartition,
    act,
    act_transposition,
    bell_number,
    bottom,
    embed_partition,
    enumerate_partitions,
    join,
    join_adjacent,
    join_pair,
)
from .permutations import Perm, all_perms, canonical_factor, embed as embed_perm, reduced_word
from .scalars import TRACE_FIELD, U, RatFunc, Rational

logger = logging.getLogger(__name__)

BasisLabel = Tuple[Perm, SetPartition]
Scalar = Union[RatFunc, Rational]

_U_MINUS_ONE: FracElement = U._frac - 1


def check_level(n: int, allow_large: bool = False) -> None:
    if n < 1:
        raise ValueError(f"Level n must be >= 1, got {n}")
    if n > MAX_LEVEL and not allow_large:
        raise ValueError(
            f"Level {n} exceeds MAX_LEVEL={MAX_LEVEL} (dimension {dimension(n)}); "
            f"pass allow_large=True to override")


def _to_frac(value: Scalar) -> FracElement:
    if isinstance(value, RatFunc):
        return value._frac
    return RatFunc.constant(value)._frac


def _accumulate(target: Dict[BasisLabel, FracElement], key: BasisLabel, coeff: FracElement) -> None:
    total = target.get(key)
    target[key] = coeff if total is None else total + coeff


class BtElement:
    """Finite combination sum c_{w,I} T_w E_I; immutable."""

    __slots__ = ('_n', '_terms')

    def __init__(self, n: int, terms: Optional[Mapping[BasisLabel, FracElement]] = None):
        self._n = n
        self._terms: Dict[BasisLabel, FracElement] = {
            key: coeff for key, coeff in (terms or {}).items() if coeff
        }

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[BasisLabel, Scalar]) -> 'BtElement':
        for w, I in terms:
            if w.n != n or I.n != n:
                raise ValueError(f"Basis label ({w}, {I}) does not live at level {n}")
        return cls(n, {key: _to_frac(coeff) for key, coeff in terms.items()})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[BasisLabel, RatFunc]:
        return {key: RatFunc(coeff) for key, coeff in self._terms.items()}

    def raw_items(self) -> Iterable[Tuple[BasisLabel, FracElement]]:
        return self._terms.items()

    def coefficient(self, w: Perm, I: SetPartition) -> RatFunc:
        return RatFunc(self._terms.get((w, I), TRACE_FIELD.zero))

    def labels(self) -> List[BasisLabel]:
        return sorted(self._terms, key=_label_order)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check_same_level(self, other: 'BtElement') -> None:
        if self._n != other._n:
            raise ValueError(f"Elements live at different levels: {self._n} and {other._n}")

    def _lift(self, other) -> Optional['BtElement']:
        if isinstance(other, BtElement):
            self._check_same_level(other)
            return other
        if isinstance(other, (RatFunc, int, Fraction)):
            return unit(self._n, allow_large=True).scale(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(terms, key, coeff)
        return BtElement(self._n, terms)

    __radd__ = __add__

    def __neg__(self) -> 'BtElement':
        return BtElement(self._n, {key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, scalar: Scalar) -> 'BtElement':
        factor = _to_frac(scalar)
        return BtElement(self._n, {key: coeff * factor for key, coeff in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, BtElement):
            return mul(self, other)
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'BtElement':
        if exponent < 0:
            raise ValueError("Negative powers of general elements are not supported")
        result = unit(self._n, allow_large=True)
        for _ in range(exponent):
            result = mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BtElement):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        return ' + '.join(
            f'({RatFunc(self._terms[key])}) * T{key[0]} * E{key[1]}' for key in self.labels())

    def __repr__(self) -> str:
        return f'BtElement(n={self._n}, terms={len(self._terms)})'


def _label_order(label: BasisLabel):
    w, I = label
    return canonical_factor(w), I.labels


def dimension(n: int) -> int:
    """Bell(n) * n!"""
    factorial = 1
    for k in range(2, n + 1):
        factorial *= k
    return bell_number(n) * factorial


def basis_labels(n: int) -> List[BasisLabel]:
    return [(w, I) for w in all_perms(n) for I in enumerate_partitions(n)]


def basis_element(w: Perm, I: SetPartition, coeff: Scalar = 1, allow_large: bool = False) -> BtElement:
    if w.n != I.n:
        raise ValueError(f"Permutation of {w.n} points with a partition of {I.n} points")
    check_level(w.n, allow_large)
    return BtElement(w.n, {(w, I): _to_frac(coeff)})


def unit(n: int, allow_large: bool = False) -> BtElement:
    check_level(n, allow_large)
    return BtElement(n, {(Perm.identity(n), bottom(n)): TRACE_FIELD.one})


def zero(n: int) -> BtElement:
    return BtElement(n)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"Generator index {i} out of range 1..{n - 1}")


def gen_T(i: int, n: int, allow_large: bool = False) -> BtElement:
    _check_index(i, n)
    check_level(n, allow_large)
    return BtElement(n, {(Perm.identity(n).times_generator(i), bottom(n)): TRACE_FIELD.one})


def gen_E(i: int, n: int, allow_large: bool = False) -> BtElement:
    _check_index(i, n)
    check_level(n, allow_large)
    return BtElement(n, {(Perm.identity(n), join_adjacent(bottom(n), i)): TRACE_FIELD.one})


def gen_T_inv(i: int, n: int, allow_large: bool = False) -> BtElement:
    """T_i + (u^-1 - 1) E_i + (u^-1 - 1) E_i T_i."""
    _check_index(i, n)
    check_level(n, allow_large)
    s_i = Perm.identity(n).times_generator(i)
    tie = join_adjacent(bottom(n), i)
    c = TRACE_FIELD.one / U._frac - 1
    return BtElement(n, {
        (s_i, bottom(n)): TRACE_FIELD.one,
        (Perm.identity(n), tie): c,
        (s_i, tie): c,
    })


def t_word(w: Perm) -> BtElement:
    """T_w."""
    return BtElement(w.n, {(w, bottom(w.n)): TRACE_FIELD.one})


def e_partition(I: SetPartition) -> BtElement:
    """E_I."""
    return BtElement(I.n, {(Perm.identity(I.n), I): TRACE_FIELD.one})


def e_pair(i: int, j: int, n: int) -> BtElement:
    """E_{i,j}, the tie between strands i and j."""
    if not 1 <= i < j <= n:
        raise ValueError(f"e_pair needs 1 <= i < j <= n, got ({i}, {j}) with n={n}")
    return e_partition(join_pair(bottom(n), i, j))


def t_run(i: int, k: int, n: int) -> BtElement:
    """T_i T_{i-1} ... T_k; the unit when k = 0 or k > i."""
    if k == 0 or k > i:
        return unit(n, allow_large=True)
    result = unit(n, allow_large=True)
    for j in range(i, k - 1, -1):
        result = mul(result, gen_T(j, n, allow_large=True))
    return result


# Generator words: ('T', i) is T_i, ('T-', i) is T_i^-1, ('E', i) is E_i.
Letter = Tuple[str, int]
T_LETTER, T_INV_LETTER, E_LETTER = 'T', 'T-', 'E'


def pair_letters(a: int, b: int) -> List[Letter]:
    """E_{a,b} = T_a ... T_{b-2} E_{b-1} T_{b-2}^-1 ... T_a^-1."""
    if not 1 <= a < b:
        raise ValueError(f"pair_letters needs 1 <= a < b, got ({a}, {b})")
    return ([(T_LETTER, t) for t in range(a, b - 1)] + [(E_LETTER, b - 1)]
            + [(T_INV_LETTER, t) for t in range(b - 2, a - 1, -1)])


def tie_letters(I: SetPartition) -> List[Letter]:
    """E_I as a chain of pair ties along each block."""
    letters: List[Letter] = []
    for block in I.nontrivial_blocks():
        for a, b in zip(block, block[1:]):
            letters.extend(pair_letters(a, b))
    return letters


def basis_letters(w: Perm, I: SetPartition) -> List[Letter]:
    """T_w E_I along the reduced word of w."""
    return [(T_LETTER, i) for i in reduced_word(w)] + tie_letters(I)


def letter_element(letter: Letter, n: int) -> BtElement:
    kind, i = letter
    if kind == T_LETTER:
        return gen_T(i, n, allow_large=True)
    if kind == T_INV_LETTER:
        return gen_T_inv(i, n, allow_large=True)
    if kind == E_LETTER:
        return gen_E(i, n, allow_large=True)
    raise ValueError(f"Unknown generator letter {letter!r}")


def word_element(letters: Iterable[Letter], n: int) -> BtElement:
    """Normal form of a word in the defining generators."""
    return product((letter_element(letter, n) for letter in letters), n)


def random_letters(rng: random.Random, n: int, length: int) -> List[Letter]:
    kinds = (T_LETTER, T_INV_LETTER, E_LETTER)
    return [(rng.choice(kinds), rng.randint(1, n - 1)) for _ in range(length)]


def e_word_product(I: SetPartition) -> BtElement:
    """E_I built as a product of conjugated E_{i,j} factors, one chain per block."""
    return word_element(tie_letters(I), I.n)


def _generator_step(terms: Mapping[BasisLabel, FracElement], i: int,
                    drop_descent_tie: bool = False) -> Dict[BasisLabel, FracElement]:
    """Right-multiply a term map by T_i; ``drop_descent_tie`` omits (u-1) T_x E_i."""
    result: Dict[BasisLabel, FracElement] = {}
    for (x, K), coeff in terms.items():
        moved = act_transposition(K, i)
        y = x.times_generator(i)
        _accumulate(result, (y, moved), coeff)
        if x.has_descent(i):
            tied = join_adjacent(moved, i)
            split = coeff * _U_MINUS_ONE
            _accumulate(result, (y, tied), split)
            if not drop_descent_tie:
                _accumulate(result, (x, tied), split)
    return {key: coeff for key, coeff in result.items() if coeff}


def _expand_basis_product(x: Perm, K: SetPartition, v: Perm, J: SetPartition,
                          drop_descent_tie: bool = False
                          ) -> Tuple[Tuple[BasisLabel, FracElement], ...]:
    terms: Dict[BasisLabel, FracElement] = {(x, K): TRACE_FIELD.one}
    for i in reduced_word(v):
        terms = _generator_step(terms, i, drop_descent_tie)
    joined: Dict[BasisLabel, FracElement] = {}
    for (w, I), coeff in terms.items():
        _accumulate(joined, (w, join(I, J)), coeff)
    return tuple((key, coeff) for key, coeff in joined.items() if coeff)


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _basis_product(x: Perm, K: SetPartition, v: Perm, J: SetPartition
                   ) -> Tuple[Tuple[BasisLabel, FracElement], ...]:
    return _expand_basis_product(x, K, v, J)


def product_cache_info():
    return _basis_product.cache_info()


def _multiply(a: BtElement, b: BtElement, basis_product) -> BtElement:
    if a.n != b.n:
        raise ValueError(f"Cannot multiply elements of levels {a.n} and {b.n}")
    result: Dict[BasisLabel, FracElement] = {}
    for (x, K), left in a.raw_items():
        for (v, J), right in b.raw_items():
            coeff = left * right
            for key, value in basis_product(x, K, v, J):
                _accumulate(result, key, coeff * value)
    return BtElement(a.n, result)


def mul(a: BtElement, b: BtElement) -> BtElement:
    """Normal form of the product a * b."""
    return _multiply(a, b, _basis_product)


def mul_dropping_descent_tie(a: BtElement, b: BtElement) -> BtElement:
    """Uncached product with a broken descent rule, for negative controls."""
    return _multiply(a, b, partial(_expand_basis_product, drop_descent_tie=True))


def product(factors: Iterable[BtElement], n: int) -> BtElement:
    result = unit(n, allow_large=True)
    for factor in factors:
        result = mul(result, factor)
    return result


def cubic_check(i: int, n: int, shift: int = 0,
                multiply: Callable[[BtElement, BtElement], BtElement] = mul) -> bool:
    """T_i^3 - u T_i^2 - T_i + u == 0; ``shift`` perturbs u for negative controls."""
    T = gen_T(i, n)
    u = U + shift
    T2 = multiply(T, T)
    return (multiply(T2, T) - T2.scale(u) - T + unit(n).scale(u)).is_zero()


def embed(a: BtElement, m: int) -> BtElement:
    """a viewed in E_m."""
    if m < a.n:
        raise ValueError(f"Cannot embed level {a.n} into level {m}")
    return BtElement(m, {
        (embed_perm(w, m), embed_partition(I, m)): coeff for (w, I), coeff in a.raw_items()
    })


def conjugate_partition(w: Perm, I: SetPartition) -> BtElement:
    """E_{w(I)}, the conjugate T_w E_I T_w^-1."""
    return e_partition(act(w, I))


def random_basis_label(rng: random.Random, n: int) -> BasisLabel:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Perm(images), SetPartition([rng.randrange(n) for _ in range(n)])


def random_element(rng: random.Random, n: int, terms: int = RANDOM_ELEMENT_TERMS,
                   coefficient_range: int = 3) -> BtElement:
    """Small random element with nonzero integer coefficients."""
    result: Dict[BasisLabel, FracElement] = {}
    for _ in range(terms):
        coeff = rng.choice([c for c in range(-coefficient_range, coefficient_range + 1) if c])
        _accumulate(result, random_basis_label(rng, n), TRACE_FIELD(coeff))
    return BtElement(n, result)


def iter_basis(n: int) -> Iterator[BtElement]:
    for w, I in basis_labels(n):
        yield BtElement(n, {(w, I): TRACE_FIELD.one})
