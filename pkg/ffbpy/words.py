"""Words over ``{x0, ..., xm}`` and the two word-level products.

Words are tuples of letter indices. The text syntax writes letters as
``x0``, ``x1``, ... without separators; the empty word is ``e``.
"""
from typing import Text, Tuple, Optional, Dict, Iterable
from fractions import Fraction
from functools import lru_cache

from .common import Word, LinearCombination, FormatError, _REGEX_LETTER, _REGEX_WORD, _format_fraction

EMPTY_WORD: Word = ()


def parse_word(text: Text, m: Optional[int] = None) -> Word:
    """Parses ``"x0x1x2"`` into ``(0, 1, 2)``; ``"e"`` is the empty word.

    :param m: Optional. Largest admissible letter index.
    """
    if not isinstance(text, str):
        raise TypeError('parameter "text" must be a string')
    text = text.strip()
    if not _REGEX_WORD.match(text):
        raise FormatError('malformed word: "%s"' % text)
    if text == 'e':
        return EMPTY_WORD
    word = tuple(int(index) for index in _REGEX_LETTER.findall(text))
    if m is not None:
        for letter in word:
            if letter > m:
                raise FormatError('letter x%d is outside of the alphabet x0..x%d' % (letter, m))
    return word


def format_word(word: Word) -> Text:
    if len(word) == 0:
        return 'e'
    return ''.join('x%d' % letter for letter in word)


def word_key(word: Word) -> Tuple[int, Word]:
    """Canonical order: shorter words first, then lexicographic."""
    return (len(word), word)


def letter_count(word: Word, letter: int) -> int:
    return word.count(letter)


class WordPolynomial(LinearCombination[Word]):
    """Polynomial in noncommuting letters, a finite sum of words."""
    __slots__ = ()

    @staticmethod
    def _sort_key(key: Word):
        return word_key(key)

    @classmethod
    def unit(cls) -> 'WordPolynomial':
        return cls._wrap({EMPTY_WORD: Fraction(1)})

    @classmethod
    def of(cls, *words: Word) -> 'WordPolynomial':
        """Sum of the given words, each with coefficient one."""
        terms: Dict[Word, Fraction] = {}
        for word in words:
            terms[word] = terms.get(word, Fraction(0)) + 1
        return cls._wrap(terms)

    @classmethod
    def parse(cls, text: Text) -> 'WordPolynomial':
        """Parses ``"2 x1x1x2 + x1x2x1 - 1/2 e"``."""
        terms: Dict[Word, Fraction] = {}
        tokens = text.replace('-', ' - ').replace('+', ' + ').split()
        sign = 1
        coefficient: Optional[Fraction] = None
        for token in tokens:
            if token == '+':
                continue
            if token == '-':
                sign = -sign
                continue
            if token[0].isdigit():
                coefficient = Fraction(token)
                continue
            word = parse_word(token)
            value = sign * (coefficient if coefficient is not None else Fraction(1))
            terms[word] = terms.get(word, Fraction(0)) + value
            sign = 1
            coefficient = None
        if coefficient is not None:
            raise FormatError('dangling coefficient in "%s"' % text)
        return cls._wrap(terms)

    def __str__(self) -> str:
        return _format_terms((format_word(w), c) for w, c in self.items())

    def __matmul__(self, other: 'WordPolynomial') -> 'WordPolynomial':
        return catenate(self, other)


class WordTensorPolynomial(LinearCombination[Tuple[Word, Word]]):
    """Element of ``R<X> ⊗ R<X>`` with basis pairs of words."""
    __slots__ = ()

    @staticmethod
    def _sort_key(key: Tuple[Word, Word]):
        return (word_key(key[0]), word_key(key[1]))

    def __str__(self) -> str:
        return _format_terms(('%s⊗%s' % (format_word(u), format_word(v)), c) for (u, v), c in self.items())


def _format_terms(terms: Iterable[Tuple[Text, Fraction]]) -> Text:
    parts = []
    for text, coefficient in terms:
        sign = '-' if coefficient < 0 else '+'
        magnitude = abs(coefficient)
        body = text if magnitude == 1 else '%s %s' % (_format_fraction(magnitude), text)
        if len(parts) == 0:
            parts.append(body if sign == '+' else '-' + body)
        else:
            parts.append('%s %s' % (sign, body))
    if len(parts) == 0:
        return '0'
    return ' '.join(parts)


@lru_cache(maxsize=None)
def _shuffle_table(u: Word, v: Word) -> Tuple[Tuple[Word, int], ...]:
    # (x_i u')⧢(x_j v') = x_i(u'⧢x_j v') + x_j(x_i u'⧢v')
    if len(u) == 0:
        return ((v, 1),)
    if len(v) == 0:
        return ((u, 1),)
    counts: Dict[Word, int] = {}
    head = u[:1]
    for word, count in _shuffle_table(u[1:], v):
        key = head + word
        counts[key] = counts.get(key, 0) + count
    head = v[:1]
    for word, count in _shuffle_table(u, v[1:]):
        key = head + word
        counts[key] = counts.get(key, 0) + count
    return tuple(counts.items())


@lru_cache(maxsize=None)
def _adjoint_table(word: Word) -> Tuple[Tuple[Tuple[Word, Word], int], ...]:
    # ⧢*(x_i w) = (x_i⊗1 + 1⊗x_i)⧢*(w)
    if len(word) == 0:
        return (((EMPTY_WORD, EMPTY_WORD), 1),)
    counts: Dict[Tuple[Word, Word], int] = {}
    head = word[:1]
    for (left, right), count in _adjoint_table(word[1:]):
        for key in ((head + left, right), (left, head + right)):
            counts[key] = counts.get(key, 0) + count
    return tuple(counts.items())


def shuffle_words(u: Word, v: Word) -> WordPolynomial:
    """Shuffle product of two words: every interleaving, counted with multiplicity."""
    return WordPolynomial._wrap({word: Fraction(count) for word, count in _shuffle_table(tuple(u), tuple(v))})


def shuffle(p: WordPolynomial, q: WordPolynomial) -> WordPolynomial:
    """Bilinear extension of :func:`shuffle_words`."""
    terms: Dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            ab = a * b
            for word, count in _shuffle_table(u, v):
                terms[word] = terms.get(word, Fraction(0)) + ab * count
    return WordPolynomial._wrap(terms)


def shuffle_adjoint(word: Word) -> WordTensorPolynomial:
    """The unshuffling coproduct ⧢* of a single word.

    It is the adjoint of the shuffle: ``<p⧢q, w> = <p⊗q, ⧢*(w)>``.
    """
    return WordTensorPolynomial._wrap({pair: Fraction(count) for pair, count in _adjoint_table(tuple(word))})


def shuffle_adjoint_polynomial(p: WordPolynomial) -> WordTensorPolynomial:
    terms: Dict[Tuple[Word, Word], Fraction] = {}
    for word, a in p.terms.items():
        for pair, count in _adjoint_table(word):
            terms[pair] = terms.get(pair, Fraction(0)) + a * count
    return WordTensorPolynomial._wrap(terms)


def catenate(p: WordPolynomial, q: WordPolynomial) -> WordPolynomial:
    """Catenation product; ``WordPolynomial.unit()`` is its unit."""
    terms: Dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            key = u + v
            terms[key] = terms.get(key, Fraction(0)) + a * b
    return WordPolynomial._wrap(terms)


def tensor_catenate(s: WordTensorPolynomial, t: WordTensorPolynomial) -> WordTensorPolynomial:
    """Componentwise catenation on ``R<X> ⊗ R<X>``."""
    terms: Dict[Tuple[Word, Word], Fraction] = {}
    for (u1, u2), a in s.terms.items():
        for (v1, v2), b in t.terms.items():
            key = (u1 + v1, u2 + v2)
            terms[key] = terms.get(key, Fraction(0)) + a * b
    return WordTensorPolynomial._wrap(terms)


def pairing(p: WordPolynomial, q: WordPolynomial) -> Fraction:
    """The bilinear form ``<p, q>`` making words orthonormal."""
    if len(p) > len(q):
        p, q = q, p
    total = Fraction(0)
    for word, a in p.terms.items():
        total += a * q.coefficient(word)
    return total


def tensor_pairing(p: WordPolynomial, q: WordPolynomial, t: WordTensorPolynomial) -> Fraction:
    """``<p ⊗ q, t>``"""
    total = Fraction(0)
    for (u, v), c in t.terms.items():
        total += c * p.coefficient(u) * q.coefficient(v)
    return total


def reverse_antipode(word: Word) -> WordPolynomial:
    """Antipode of the shuffle Hopf algebra: ``(-1)^|w|`` times the reversed word."""
    return WordPolynomial._wrap({tuple(reversed(word)): Fraction((-1) ** len(word))})


def words_up_to(m: int, length: int) -> Iterable[Word]:
    """All words over ``x0..xm`` of length at most ``length`` in canonical order."""
    current = [EMPTY_WORD]
    for _ in range(length + 1):
        for word in current:
            yield word
        current = [word + (letter,) for word in current for letter in range(m + 1)]
