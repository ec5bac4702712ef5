"""
Coloured tensor representation of E_n(u).

A state is a row of n (colour, index) pairs. E_i projects onto states whose
colours agree at positions i and i+1. T_i swaps neighbours of different
colours and acts by the Hecke R-matrix on neighbours of the same colour:

    v_a v_a -> u v_a v_a
    v_a v_b -> v_b v_a                          a < b
    v_a v_b -> (u-1) v_a v_b + u v_b v_a        a > b

(indices a, b). Elements act on the left; nothing here goes through the
basis product, so the action is an independent reading of a normal form.
"""

import itertools
import logging
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from sympy.polys.fields import FracElement

from .btalgebra import E_LETTER, T_INV_LETTER, T_LETTER, BtElement, Letter
from .partitions import SetPartition
from .permutations import reduced_word
from .scalars import TRACE_FIELD, U

logger = logging.getLogger(__name__)

Site = Tuple[int, int]
State = Tuple[Site, ...]
Vector = Dict[State, FracElement]

_U: FracElement = U._frac
_U_MINUS_ONE: FracElement = _U - 1
_INV_SHIFT: FracElement = TRACE_FIELD.one / _U - 1


def _add(target: Vector, state: State, coeff: FracElement) -> None:
    total = target.get(state, TRACE_FIELD.zero) + coeff
    if total:
        target[state] = total
    else:
        target.pop(state, None)


def _swap(state: State, i: int) -> State:
    sites = list(state)
    sites[i - 1], sites[i] = sites[i], sites[i - 1]
    return tuple(sites)


class ColoredTensorRep:
    """
    Left action of E_n(u) on the span of coloured states.

    With ``colours >= n`` every set partition of {1..n} is the level set of
    some colouring, so the images of distinct E_I are distinct projectors.
    ``indices=1`` keeps the action monomial; larger values bring in the
    non-diagonal part of the R-matrix.
    """

    def __init__(self, n: int, colours: Optional[int] = None, indices: int = 1):
        if n < 1:
            raise ValueError(f"Level must be positive, got {n}")
        if indices < 1:
            raise ValueError(f"Need at least one index per colour, got {indices}")
        self.n = n
        self.colours = n if colours is None else colours
        self.indices = indices
        if self.colours < 1:
            raise ValueError(f"Need at least one colour, got {self.colours}")

    def __repr__(self) -> str:
        return f"ColoredTensorRep(n={self.n}, colours={self.colours}, indices={self.indices})"

    @property
    def dimension(self) -> int:
        return (self.colours * self.indices) ** self.n

    def states(self) -> Iterator[State]:
        sites = list(itertools.product(range(self.colours), range(self.indices)))
        return itertools.product(sites, repeat=self.n)

    def colouring_states(self) -> Iterator[State]:
        """States with index 0 at every site, one per colouring."""
        for colours in itertools.product(range(self.colours), repeat=self.n):
            yield tuple((c, 0) for c in colours)

    def _check_index(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise ValueError(f"Generator index {i} out of range for n={self.n}")

    def apply_T(self, i: int, vector: Vector) -> Vector:
        self._check_index(i)
        result: Vector = {}
        for state, coeff in vector.items():
            (colour_a, a), (colour_b, b) = state[i - 1], state[i]
            if colour_a != colour_b or a < b:
                _add(result, _swap(state, i), coeff)
            elif a == b:
                _add(result, state, coeff * _U)
            else:
                _add(result, state, coeff * _U_MINUS_ONE)
                _add(result, _swap(state, i), coeff * _U)
        return result

    def apply_E(self, i: int, vector: Vector) -> Vector:
        self._check_index(i)
        return {state: coeff for state, coeff in vector.items()
                if state[i - 1][0] == state[i][0]}

    def apply_T_inv(self, i: int, vector: Vector) -> Vector:
        """T_i^-1 = T_i + (1/u - 1) E_i + (1/u - 1) E_i T_i."""
        result = dict(self.apply_T(i, vector))
        for part in (self.apply_E(i, vector), self.apply_E(i, self.apply_T(i, vector))):
            for state, coeff in part.items():
                _add(result, state, coeff * _INV_SHIFT)
        return result

    def apply_partition(self, I: SetPartition, vector: Vector) -> Vector:
        """E_I: keep states whose colours are constant on every block of I."""
        if I.n != self.n:
            raise ValueError(f"Partition of {I.n} points on a level {self.n} representation")
        blocks = I.nontrivial_blocks()
        return {state: coeff for state, coeff in vector.items()
                if all(len({state[e - 1][0] for e in block}) == 1 for block in blocks)}

    def apply_letter(self, letter: Letter, vector: Vector) -> Vector:
        kind, i = letter
        if kind == T_LETTER:
            return self.apply_T(i, vector)
        if kind == T_INV_LETTER:
            return self.apply_T_inv(i, vector)
        if kind == E_LETTER:
            return self.apply_E(i, vector)
        raise ValueError(f"Unknown generator letter {letter!r}")

    def apply_word(self, letters: Sequence[Letter], vector: Vector) -> Vector:
        """Action of the product of ``letters``; the rightmost letter acts first."""
        for letter in reversed(letters):
            vector = self.apply_letter(letter, vector)
        return vector

    def apply_element(self, x: BtElement, vector: Vector) -> Vector:
        """Sum over terms c T_w E_I of c T_w (E_I v)."""
        if x.n != self.n:
            raise ValueError(f"Element of level {x.n} on a level {self.n} representation")
        result: Vector = {}
        for (w, I), coeff in x.raw_items():
            image = self.apply_partition(I, vector)
            for i in reversed(reduced_word(w)):
                image = self.apply_T(i, image)
            for state, value in image.items():
                _add(result, state, coeff * value)
        return result

    def element_matches_word(self, x: BtElement, letters: Sequence[Letter],
                             states: Optional[Iterable[State]] = None) -> bool:
        """True iff x and the word act alike on every state (all states by default)."""
        for state in self.states() if states is None else states:
            basis: Vector = {state: TRACE_FIELD.one}
            if self.apply_element(x, basis) != self.apply_word(letters, basis):
                logger.debug("Action mismatch on state %s", state)
                return False
        return True

    def elements_match(self, x: BtElement, y: BtElement,
                       states: Optional[Iterable[State]] = None) -> bool:
        for state in self.states() if states is None else states:
            basis: Vector = {state: TRACE_FIELD.one}
            if self.apply_element(x, basis) != self.apply_element(y, basis):
                return False
        return True


def colouring_partition(state: State) -> SetPartition:
    """Level sets of the colours of a state."""
    return SetPartition([colour for colour, _ in state])
