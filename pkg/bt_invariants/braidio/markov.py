"""
Markov moves, random words and invariance suites
"""

import logging
import random
from typing import Callable, Optional, Union

from ..config import CONJUGATIONS_PER_WORD, DEFAULT_MARKOV_COUNT, DEFAULT_SEED, MAX_RANDOM_WORD_LENGTH
from ..invariants import BraidWord, SingularBraidWord, SingularLetter, delta_bar, gamma_bar
from ..invariants.words import SIGMA, TAU
from ..reports import Report
from ..scalars import SqrtExt
from .parser import render_word

logger = logging.getLogger(__name__)

Word = Union[BraidWord, SingularBraidWord]


def _compatible(w: Word, g: BraidWord) -> BraidWord:
    if g.n > w.n:
        raise ValueError(f"Cannot conjugate a word on {w.n} strands by one on {g.n} strands")
    return g.embed(w.n)


def markov_conjugate(w: Word, g: BraidWord) -> Word:
    """g w g^-1."""
    g = _compatible(w, g)
    if isinstance(w, SingularBraidWord):
        return g.to_singular() + w + g.inverse().to_singular()
    return g + w + g.inverse()


def markov_stabilize(w: Word, sign: int) -> Word:
    """Embed into n+1 strands and append sigma_n^sign."""
    if sign not in (1, -1):
        raise ValueError(f"Stabilization sign must be +1 or -1, got {sign}")
    n = w.n
    if isinstance(w, SingularBraidWord):
        return SingularBraidWord(n + 1, w.letters + (SingularLetter(SIGMA, n, sign),))
    return BraidWord(n + 1, w.letters + (sign * n,))


def closure_components(w: Word) -> int:
    """Number of components of the closure (cycles of the underlying permutation)."""
    return len(w.permutation().cycles())


def random_braid(rng: random.Random, n: int, max_length: int = MAX_RANDOM_WORD_LENGTH,
                 min_length: int = 0) -> BraidWord:
    if n == 1:
        return BraidWord(1)
    size = rng.randint(min_length, max_length)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(size)))


def random_singular_word(rng: random.Random, n: int,
                         max_length: int = MAX_RANDOM_WORD_LENGTH) -> SingularBraidWord:
    """Random word with at least one singular crossing; needs n >= 2."""
    if n < 2:
        raise ValueError("Singular words need at least 2 strands")
    size = rng.randint(1, max(1, max_length))
    letters = []
    for _ in range(size):
        index = rng.randint(1, n - 1)
        if rng.random() < 0.3:
            letters.append(SingularLetter(TAU, index, 1))
        else:
            letters.append(SingularLetter(SIGMA, index, rng.choice((1, -1))))
    if not any(letter.kind == TAU for letter in letters):
        letters[rng.randrange(size)] = SingularLetter(TAU, rng.randint(1, n - 1), 1)
    return SingularBraidWord(n, tuple(letters))


def markov_invariance_suite(n_max: int, count: int = DEFAULT_MARKOV_COUNT, seed: int = DEFAULT_SEED,
                            singular: bool = False, max_length: int = MAX_RANDOM_WORD_LENGTH,
                            conjugations: int = CONJUGATIONS_PER_WORD,
                            invariant: Optional[Callable[[Word], SqrtExt]] = None) -> Report:
    """
    Compare the invariant of random words against conjugates and stabilizations.

    Args:
        n_max: Largest strand count of the random words
        count: Number of random words
        seed: Seed for the word generator
        singular: Use singular words (at least one tau) and the singular invariant
        max_length: Longest random word
        conjugations: Random conjugations per word
        invariant: Override of the invariant under test

    Returns:
        Report with checks 'conjugation', 'stabilize_positive', 'stabilize_negative'
    """
    low = 2 if singular else 1
    if n_max < low:
        raise ValueError(f"Markov suite needs n_max >= {low}")
    rng = random.Random(seed)
    if invariant is None:
        invariant = gamma_bar if singular else delta_bar
    report = Report(name='markov_singular' if singular else 'markov', n=n_max, seed=seed)

    for index in range(count):
        n = rng.randint(low, n_max)
        word = random_singular_word(rng, n, max_length) if singular else random_braid(rng, n, max_length)
        value = invariant(word)
        text = render_word(word)
        for _ in range(conjugations):
            g = random_braid(rng, n, max(1, max_length // 2), min_length=1 if n > 1 else 0)
            report.record('conjugation', (index,), invariant(markov_conjugate(word, g)) == value, text)
        for sign, check in ((1, 'stabilize_positive'), (-1, 'stabilize_negative')):
            report.record(check, (index,), invariant(markov_stabilize(word, sign)) == value, text)
        logger.debug("markov word %d: %s", index, text)

    logger.info("Markov suite (%s) n<=%d count=%d seed=%d: %s", report.name, n_max, count, seed,
                'pass' if report.passed else 'FAIL')
    return report
