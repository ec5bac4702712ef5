"""
Braid word text format

    n=<int>; <token> <token> ...

token := <int> (sigma_i) | -<int> (sigma_i^-1) | t<int> (singular crossing tau_i)
"""

import re
from typing import List, Optional, Tuple, Union

from ..invariants.words import SIGMA, TAU, BraidWord, SingularBraidWord, SingularLetter

_HEADER_RE = re.compile(r'\s*n\s*=\s*(\d+)\s*;')
_TOKEN_RE = re.compile(r'\S+')
_SIGMA_TOKEN_RE = re.compile(r'(-?)(\d+)')
_TAU_TOKEN_RE = re.compile(r't(\d+)')


class WordParseError(ValueError):
    """Base class for braid word text errors; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BraidSyntaxError(WordParseError):
    """Text does not match the word grammar."""


class IndexOutOfRangeError(WordParseError):
    """A generator index outside 1..n-1."""

    def __init__(self, token: str, n: int, position: Optional[int] = None):
        self.token = token
        super().__init__(f"Token {token!r} is not a generator for n={n}", position)


class TauInClassicalContextError(WordParseError):
    """A singular crossing where only classical braids are accepted."""

    def __init__(self, token: str, position: Optional[int] = None):
        self.token = token
        super().__init__(f"Singular crossing {token!r} in a classical braid word", position)


def _split_header(text: str) -> Tuple[int, str, int]:
    match = _HEADER_RE.match(text)
    if not match:
        raise BraidSyntaxError("Expected 'n=<int>;' header", 0)
    n = int(match.group(1))
    if n < 1:
        raise BraidSyntaxError("Strand count must be at least 1", match.start(1))
    return n, text[match.end():], match.end()


def parse_tokens(n: int, body: str, singular: bool = False, offset: int = 0) -> List[SingularLetter]:
    """Parse the token list of a word on n strands; positions are shifted by ``offset``."""
    letters: List[SingularLetter] = []
    for match in _TOKEN_RE.finditer(body):
        token, position = match.group(0), offset + match.start()
        sigma = _SIGMA_TOKEN_RE.fullmatch(token)
        tau = _TAU_TOKEN_RE.fullmatch(token)
        if sigma:
            index = int(sigma.group(2))
            letter = SingularLetter(SIGMA, index, -1 if sigma.group(1) else 1)
        elif tau:
            if not singular:
                raise TauInClassicalContextError(token, position)
            index = int(tau.group(1))
            letter = SingularLetter(TAU, index, 1)
        else:
            raise BraidSyntaxError(f"Unexpected token {token!r}", position)
        if not 1 <= index <= n - 1:
            raise IndexOutOfRangeError(token, n, position)
        letters.append(letter)
    return letters


def parse_braid(text: str) -> BraidWord:
    n, body, offset = _split_header(text)
    letters = parse_tokens(n, body, singular=False, offset=offset)
    return BraidWord(n, tuple(letter.sign * letter.index for letter in letters))


def parse_singular(text: str) -> SingularBraidWord:
    n, body, offset = _split_header(text)
    return SingularBraidWord(n, tuple(parse_tokens(n, body, singular=True, offset=offset)))


def parse_word(text: str) -> Union[BraidWord, SingularBraidWord]:
    """Classical word when the text has no tau tokens, singular otherwise."""
    word = parse_singular(text)
    return word.to_braid() if word.is_classical() else word


def render_tokens(word: Union[BraidWord, SingularBraidWord]) -> str:
    if isinstance(word, BraidWord):
        return ' '.join(str(letter) for letter in word.letters)
    tokens = []
    for letter in word.letters:
        if letter.kind == TAU:
            tokens.append(f't{letter.index}')
        else:
            tokens.append(str(letter.sign * letter.index))
    return ' '.join(tokens)


def render_word(word: Union[BraidWord, SingularBraidWord]) -> str:
    """Inverse of the parsers: `n=2; 1 -1 t1`."""
    tokens = render_tokens(word)
    return f'n={word.n};' + (f' {tokens}' if tokens else '')
