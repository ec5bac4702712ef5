"""
Defining relations of E_n and derived identities, checked as element identities
"""

import logging
import random
from functools import reduce
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .btalgebra import (
    E_LETTER,
    T_LETTER,
    BtElement,
    Letter,
    basis_element,
    basis_labels,
    cubic_check,
    e_partition,
    e_word_product,
    gen_E,
    gen_T,
    gen_T_inv,
    mul,
    mul_dropping_descent_tie,
    pair_letters,
    product,
    random_letters,
    t_run,
    t_word,
    tie_letters,
    unit,
    word_element,
)
from .colored_rep import ColoredTensorRep
from .config import (
    CHECK_WORD_LENGTH,
    DEFAULT_SEED,
    RELATION_CHECK_MAX,
    REPRESENTATION_WORDS,
    TOP_GENERATOR_WORDS,
)
from .partitions import SetPartition, act, enumerate_partitions
from .permutations import (
    Perm,
    all_perms,
    canonical_factor,
    factor_word,
    from_word,
    reduced_word,
    reduced_words,
    theta,
)
from .reports import Report
from .scalars import U

logger = logging.getLogger(__name__)

RELATION_IDS = (
    'far_commutation',
    'braid',
    'quadratic',
    'ties_commute',
    'tie_idempotent',
    'tie_braid_commute',
    'tie_far_commute',
    'tie_adjacent',
    'tie_transfer',
    'inverse',
    'conjugate_inverse',
    'cubic',
)

RUN_IDENTITY_IDS = ('run_commutation', 'run_triple', 'run_split', 'run_tie_transfer')

# (prefix, middle, suffix) generator words
Spelling = Tuple[List[Letter], List[Letter], List[Letter]]


class _Generators:
    """Cached T_i, E_i, T_i^-1 at one level."""

    def __init__(self, n: int, multiply: Callable[[BtElement, BtElement], BtElement] = mul):
        self.n = n
        self.multiply = multiply
        self.T = {i: gen_T(i, n) for i in range(1, n)}
        self.E = {i: gen_E(i, n) for i in range(1, n)}
        self.T_inv = {i: gen_T_inv(i, n) for i in range(1, n)}
        self.one = unit(n)

    def run(self, i: int, k: int) -> BtElement:
        if self.multiply is mul:
            return t_run(i, k, self.n)
        factors = [self.T[j] for j in range(i, k - 1, -1)] if k else []
        return self.prod(*factors)

    def prod(self, *factors: BtElement) -> BtElement:
        if self.multiply is mul:
            return product(factors, self.n)
        return reduce(self.multiply, factors, self.one)


def _pairs(n: int, predicate: Callable[[int, int], bool]) -> Iterable[Tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, n) if predicate(i, j)]


def check_relations(n: int, mutate_rewriting: bool = False) -> Report:
    """
    Evaluate every defining relation of E_n for all valid indices.

    Args:
        n: Level, 2 <= n <= RELATION_CHECK_MAX
        mutate_rewriting: Multiply with a rewriting step that loses the
            (u-1) T_x E_i term at descents (negative control)

    Returns:
        Report with one result per relation instance
    """
    if not 2 <= n <= RELATION_CHECK_MAX:
        raise ValueError(f"Relation checks support 2 <= n <= {RELATION_CHECK_MAX}, got {n}")
    g = _Generators(n, multiply=mul_dropping_descent_tie if mutate_rewriting else mul)
    T, E, T_inv, p = g.T, g.E, g.T_inv, g.prod
    report = Report(name='relations', n=n)
    u_minus_one = U - 1

    for i, j in _pairs(n, lambda a, b: abs(a - b) > 1):
        report.record('far_commutation', (i, j), p(T[i], T[j]) == p(T[j], T[i]))
        report.record('tie_far_commute', (i, j), p(E[i], T[j]) == p(T[j], E[i]))

    for i, j in _pairs(n, lambda a, b: abs(a - b) == 1):
        report.record('braid', (i, j), p(T[i], T[j], T[i]) == p(T[j], T[i], T[j]))
        left = p(E[i], E[j], T[i])
        report.record('tie_adjacent', (i, j),
                      left == p(T[i], E[i], E[j]) and left == p(E[j], T[i], E[j]))
        report.record('tie_transfer', (i, j), p(E[i], T[j], T[i]) == p(T[j], T[i], E[j]))
        report.record('conjugate_inverse', (i, j),
                      p(T[i], T[j], T_inv[i]) == p(T_inv[j], T[i], T[j]))

    for i, j in _pairs(n, lambda a, b: True):
        report.record('ties_commute', (i, j), p(E[i], E[j]) == p(E[j], E[i]))

    for i in range(1, n):
        expected = g.one + (E[i] + p(E[i], T[i])).scale(u_minus_one)
        report.record('quadratic', (i,), p(T[i], T[i]) == expected)
        report.record('tie_idempotent', (i,), p(E[i], E[i]) == E[i])
        report.record('tie_braid_commute', (i,), p(E[i], T[i]) == p(T[i], E[i]))
        report.record('inverse', (i,),
                      p(T[i], T_inv[i]) == g.one and p(T_inv[i], T[i]) == g.one)
        report.record('cubic', (i,), cubic_check(i, n, multiply=g.multiply))

    report.extend(check_run_identities(n, generators=g))
    _log_summary(report)
    return report


def check_run_identities(n: int, generators: Optional[_Generators] = None) -> Report:
    """Commutation of descent runs T_{i,k} with generators, ties and each other."""
    g = generators or _Generators(n)
    T, E, run, p = g.T, g.E, g.run, g.prod
    report = Report(name='run_identities', n=n)
    u_minus_one = U - 1

    for i in range(1, n):
        for k in range(1, i + 1):
            for j in range(1, i + 1):
                left = p(run(i, k), T[j])
                if j == k:
                    head = run(i, k + 1)
                    right = head + p(head, E[k], g.one + T[k]).scale(u_minus_one)
                elif j == k - 1:
                    right = run(i, j)
                elif j <= k - 2:
                    right = p(T[j], run(i, k))
                else:
                    right = p(T[j - 1], run(i, k))
                report.record('run_commutation', (i, k, j), left == right)

    for i in range(2, n):
        for r in range(1, i):
            for s in range(1, i + 1):
                left = p(T[i], run(i - 1, r), run(i, s))
                if r < s:
                    right = p(run(i - 1, s - 1), run(i, r))
                else:
                    right = p(run(i - 1, r), run(i, r), run(r, s))
                report.record('run_triple', (i, r, s), left == right)

        for r in range(1, i):
            for s in range(1, r + 1):
                left = p(run(i - 1, r), run(i, r), run(r, s))
                head = p(run(i - 1, r), run(i, r + 1))
                right = (p(head, run(r - 1, s))
                         + p(head, E[r], run(r - 1, s)).scale(u_minus_one)
                         + p(head, E[r], run(r, s)).scale(u_minus_one))
                report.record('run_split', (i, r, s), left == right)

    partitions = enumerate_partitions(n)
    for i in range(1, n):
        for j in range(1, i + 1):
            cycle = theta(i, j, n)
            for I in partitions:
                left = p(run(i, j), e_partition(I))
                right = p(e_partition(act(cycle, I)), run(i, j))
                report.record('run_tie_transfer', (i, j), left == right, str(I))
    return report


def check_tie_conjugation(n: int) -> Report:
    """T_w E_I = E_{w(I)} T_w for every w and I."""
    report = Report(name='tie_conjugation', n=n)
    partitions = enumerate_partitions(n)
    for w in all_perms(n):
        T_w = t_word(w)
        for I in partitions:
            passed = mul(T_w, e_partition(I)) == mul(e_partition(act(w, I)), T_w)
            report.record('tie_conjugation', w.images, passed, str(I))
    return report


def check_matsumoto(n: int) -> Report:
    """T_w does not depend on the reduced word used to build it."""
    report = Report(name='matsumoto', n=n)
    for w in all_perms(n):
        expected = t_word(w)
        for word in reduced_words(w):
            built = product((gen_T(i, n) for i in word), n)
            report.record('matsumoto', w.images, built == expected and from_word(word, n) == w,
                          ' '.join(map(str, word)))
    return report


def check_tie_products(n: int, rep: Optional[ColoredTensorRep] = None) -> Report:
    """
    E_I E_J = E_{I*J}, read through the coloured tensor representation.

    The normal form of E_I E_J must act like the word of conjugated pair ties
    spelling E_I followed by the one spelling E_J. The representation only
    knows the generators, so the check does not share the union-find join
    that produced the normal form.
    """
    rep = rep or ColoredTensorRep(n)
    report = Report(name='tie_products', n=n)
    partitions = enumerate_partitions(n)
    words = {I: tie_letters(I) for I in partitions}
    for I in partitions:
        E_I = e_partition(I)
        passed = e_word_product(I) == E_I and rep.element_matches_word(E_I, words[I])
        report.record('tie_expansion', (), passed, str(I))
        for J in partitions:
            product_IJ = mul(E_I, e_partition(J))
            passed = rep.element_matches_word(product_IJ, words[I] + words[J])
            report.record('tie_join', (), passed, f'{I} * {J}')
    return report


def check_representation(n: int, count: int = REPRESENTATION_WORDS, seed: int = DEFAULT_SEED,
                         length: int = CHECK_WORD_LENGTH,
                         rep: Optional[ColoredTensorRep] = None) -> Report:
    """Normal forms of random generator words act like the words themselves."""
    rep = rep or ColoredTensorRep(n)
    report = Report(name='representation', n=n, seed=seed)
    rng = random.Random(seed)
    for index in range(count):
        letters = random_letters(rng, n, length)
        passed = rep.element_matches_word(word_element(letters, n), letters)
        report.record('word_action', (index,), passed, _render_letters(letters))
    return report


def _render_letters(letters: Iterable[Letter]) -> str:
    return ' '.join(f'{kind}{i}' for kind, i in letters)


def _without_top(I: SetPartition) -> SetPartition:
    """I with n cut out of its block."""
    labels = list(I.labels)
    labels[-1] = max(labels) + 1
    return SetPartition(labels)


def top_generator_word(w: Perm, I: SetPartition) -> Spelling:
    """
    Spell T_w E_I as prefix * middle * suffix.

    prefix and suffix use generators of index < n-1 only, and middle is one of
    1, T_{n-1}, E_{n-1} or T_{n-1} E_{n-1}.

    Args:
        w: Permutation of {1..n}, n >= 2
        I: Set partition of {1..n}

    Returns:
        (prefix, middle, suffix) generator words
    """
    n = w.n
    if n < 2 or I.n != n:
        raise ValueError(f"top_generator_word needs a basis label at level n >= 2, got {w}, {I}")
    top = n - 1
    ks = canonical_factor(w)
    k = ks[-1]
    head: List[Letter] = [(T_LETTER, i) for i in factor_word(ks[:-1])]
    tail = list(range(top - 1, k - 1, -1)) if k else []
    run: List[Letter] = [(T_LETTER, i) for i in tail]
    rest = _without_top(I)
    ties = tie_letters(rest)
    block = I.block_of(n)

    if len(block) == 1:
        if not k:
            return head + ties, [], []
        return head, [(T_LETTER, top)], run + ties
    partner = max(e for e in block if e != n)
    if not k:
        pair = pair_letters(partner, n)
        split = pair.index((E_LETTER, top))
        return head + ties + pair[:split], [pair[split]], pair[split + 1:]
    # E_{j,n} slides left through the run to E_{r(j),n}, then through T_{n-1}.
    moved = from_word(tail, n)(partner)
    if moved == top:
        return head, [(T_LETTER, top), (E_LETTER, top)], run + ties
    return head + pair_letters(moved, top), [(T_LETTER, top)], run + ties


def check_top_generator(n: int, count: int = TOP_GENERATOR_WORDS, seed: int = DEFAULT_SEED,
                        length: int = CHECK_WORD_LENGTH) -> Report:
    """
    Every element needs at most one of T_{n-1}, E_{n-1}, T_{n-1} E_{n-1}.

    Each basis element is spelled through top_generator_word and the spelling
    is multiplied back out. Normal forms of random words are then checked term
    by term.
    """
    if not 2 <= n <= RELATION_CHECK_MAX:
        raise ValueError(f"Top generator checks support 2 <= n <= {RELATION_CHECK_MAX}, got {n}")
    top = n - 1
    report = Report(name='top_generator', n=n, seed=seed)
    spelled: Dict[Tuple[Perm, SetPartition], Spelling] = {}
    for w, I in basis_labels(n):
        prefix, middle, suffix = spelled[(w, I)] = top_generator_word(w, I)
        below = all(i < top for _, i in prefix + suffix)
        passed = below and word_element(prefix + middle + suffix, n) == basis_element(w, I)
        report.record('rewrite_matches', w.images, passed, str(I))

    middles = ([], [(T_LETTER, top)], [(E_LETTER, top)], [(T_LETTER, top), (E_LETTER, top)])
    rng = random.Random(seed)
    for index in range(count):
        letters = random_letters(rng, n, length)
        x = word_element(letters, n)
        passed = all(reduced_word(w).count(top) <= 1 and spelled[(w, I)][1] in middles
                     for (w, I), _ in x.raw_items())
        report.record('top_generator_count', (index,), passed, _render_letters(letters))
    _log_summary(report)
    return report


def _log_summary(report: Report) -> None:
    for check, (ok, total) in report.by_check().items():
        logger.debug("%s n=%s: %d/%d", check, report.n, ok, total)
    logger.info("Relation suite n=%s: %s", report.n, 'pass' if report.passed else 'FAIL')


def failing_relations(report: Report) -> List[str]:
    return [check for check, (ok, total) in report.by_check().items() if ok != total]
