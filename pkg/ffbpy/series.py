"""Truncated vector-valued noncommutative formal power series.

A :class:`Series` with truncation order ``N`` stands for its class modulo all
words longer than ``N``. Every binary operation returns a series truncated at
the smaller of the two orders.
"""
from typing import Text, Sequence, Mapping, Tuple, Dict, List, Iterator, NamedTuple, Union, Optional
from fractions import Fraction
from types import MappingProxyType
import math
import logging

from .constants import ULTRAMETRIC_SIGMA
from .common import (
    Word, AnyRational, Alphabet, FormatError, DimensionError, TruncationError,
    _check_alphabet, _check_non_negative, _convert_any_rational_to_fraction, _format_fraction,
)
from .words import WordPolynomial, parse_word, format_word, word_key, _shuffle_table

logger = logging.getLogger(__name__)

Coefficients = Dict[Word, Fraction]


class Series:
    """Formal power series ``c: X* -> Q^ell`` known up to words of length ``truncation``.

    :param components: One mapping word -> coefficient per output component.
    :param m: Number of input letters, the alphabet being ``x0..xm``.
    :param truncation: Longest word length represented.
    """
    __slots__ = ('_m', '_truncation', '_components', '_hash')

    def __init__(self, components: Sequence[Mapping[Word, AnyRational]], m: int, truncation: int):
        _check_alphabet(m)
        _check_non_negative(truncation, 'truncation')
        if len(components) == 0:
            raise DimensionError('a series needs at least one component')
        cleaned: List[Coefficients] = []
        for index, component in enumerate(components):
            terms: Coefficients = {}
            for word, coefficient in component.items():
                word = tuple(word)
                for letter in word:
                    if not isinstance(letter, int) or letter < 0 or letter > m:
                        raise DimensionError('component %d: letter %s is outside of x0..x%d' % (index + 1, letter, m))
                if len(word) > truncation:
                    raise TruncationError('component %d: word %s is longer than the truncation %d' % (index + 1, format_word(word), truncation))
                value = _convert_any_rational_to_fraction(coefficient)
                if value != 0:
                    terms[word] = value
            cleaned.append(terms)
        self._m = m
        self._truncation = truncation
        self._components: Tuple[Coefficients, ...] = tuple(cleaned)
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, components: Sequence[Coefficients], m: int, truncation: int) -> 'Series':
        """Internal constructor; drops zeros and words beyond the truncation."""
        obj = cls.__new__(cls)
        obj._m = m
        obj._truncation = truncation
        obj._components = tuple(
            {w: v for w, v in component.items() if v != 0 and len(w) <= truncation}
            for component in components
        )
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, m: int, ell: int, truncation: int) -> 'Series':
        _check_alphabet(m)
        _check_non_negative(truncation, 'truncation')
        if ell < 1:
            raise DimensionError('a series needs at least one component')
        return cls._wrap([{} for _ in range(ell)], m, truncation)

    @classmethod
    def constant(cls, values: Sequence[AnyRational], m: int, truncation: int) -> 'Series':
        return cls([{(): value} for value in values], m, truncation)

    @classmethod
    def from_polynomials(cls, polynomials: Sequence[WordPolynomial], m: int, truncation: int) -> 'Series':
        """Builds a series from polynomials, dropping words beyond the truncation."""
        return cls([
            {w: c for w, c in polynomial.terms.items() if len(w) <= truncation}
            for polynomial in polynomials
        ], m, truncation)

    @classmethod
    def from_mapping(cls, terms: Mapping[Tuple[int, Word], AnyRational], m: int, ell: int, truncation: int) -> 'Series':
        """Builds a series from ``{(component, word): coefficient}``, components counted from one."""
        if ell < 1:
            raise DimensionError('a series needs at least one component')
        components: List[Dict[Word, AnyRational]] = [{} for _ in range(ell)]
        for (i, word), value in terms.items():
            if i < 1 or i > ell:
                raise DimensionError('component %d is outside of 1..%d' % (i, ell))
            components[i - 1][tuple(word)] = value
        return cls(components, m, truncation)

    @classmethod
    def from_text(cls, components: Sequence[Text], m: int, truncation: int) -> 'Series':
        """Shorthand for tests and examples: ``Series.from_text(['4 x0 + x1'], 2, 3)``."""
        return cls.from_polynomials([WordPolynomial.parse(text) for text in components], m, truncation)

    @property
    def m(self) -> int:
        return self._m

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self._m)

    @property
    def ell(self) -> int:
        return len(self._components)

    @property
    def truncation(self) -> int:
        return self._truncation

    @property
    def components(self) -> Tuple[Mapping[Word, Fraction], ...]:
        return tuple(MappingProxyType(component) for component in self._components)

    def coefficient(self, i: int, word: Word) -> Fraction:
        """``(c_i, word)`` with ``i`` counted from one."""
        if i < 1 or i > self.ell:
            raise DimensionError('component %d does not exist, the series has %d' % (i, self.ell))
        word = tuple(word)
        if len(word) > self._truncation:
            raise TruncationError('word %s is longer than the truncation %d' % (format_word(word), self._truncation))
        return self._components[i - 1].get(word, Fraction(0))

    def component(self, i: int) -> 'Series':
        if i < 1 or i > self.ell:
            raise DimensionError('component %d does not exist, the series has %d' % (i, self.ell))
        return Series._wrap([self._components[i - 1]], self._m, self._truncation)

    def components_of(self, indices: Sequence[int]) -> 'Series':
        """The components ``indices`` (counted from one) in the given order."""
        if len(indices) == 0:
            raise DimensionError('a series needs at least one component')
        return Series._wrap([self.component(i)._components[0] for i in indices], self._m, self._truncation)

    def polynomial(self, i: int) -> WordPolynomial:
        return WordPolynomial._wrap(self.component(i)._components[0])

    def support(self) -> Iterator[Tuple[int, Word, Fraction]]:
        """Nonzero coefficients as ``(component, word, value)`` in canonical order."""
        for index, component in enumerate(self._components):
            for word in sorted(component, key=word_key):
                yield index + 1, word, component[word]

    def truncate(self, truncation: int) -> 'Series':
        _check_non_negative(truncation, 'truncation')
        if truncation > self._truncation:
            raise TruncationError('cannot raise the truncation from %d to %d' % (self._truncation, truncation))
        return Series._wrap(self._components, self._m, truncation)

    def is_zero(self) -> bool:
        return all(len(component) == 0 for component in self._components)

    def _check_compatible(self, other: 'Series', operation: Text):
        if not isinstance(other, Series):
            raise TypeError('%s: operand must be a Series, got "%s"' % (operation, type(other)))
        if self._m != other._m:
            raise DimensionError('%s: alphabets differ (m=%d and m=%d)' % (operation, self._m, other._m))
        if self.ell != other.ell:
            raise DimensionError('%s: component counts differ (%d and %d)' % (operation, self.ell, other.ell))

    def __add__(self, other: 'Series') -> 'Series':
        return add(self, other)

    def __sub__(self, other: 'Series') -> 'Series':
        return add(self, scale(-1, other))

    def __neg__(self) -> 'Series':
        return scale(-1, self)

    def __mul__(self, k: AnyRational) -> 'Series':
        if isinstance(k, Series):
            return NotImplemented
        return scale(k, self)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self._m == other._m
            and self._truncation == other._truncation
            and self._components == other._components
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._m, self._truncation, tuple(frozenset(c.items()) for c in self._components)))
        return self._hash

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        parts = [str(WordPolynomial._wrap(component)) for component in self._components]
        return 'Series(m=%d, N=%d, [%s])' % (self._m, self._truncation, '; '.join(parts))


def add(c: Series, d: Series) -> Series:
    """Coefficientwise sum, truncated at the smaller order."""
    c._check_compatible(d, 'add')
    truncation = min(c.truncation, d.truncation)
    components = []
    for left, right in zip(c._components, d._components):
        terms = dict(left)
        for word, value in right.items():
            terms[word] = terms.get(word, Fraction(0)) + value
        components.append(terms)
    return Series._wrap(components, c.m, truncation)


def scale(k: AnyRational, c: Series) -> Series:
    k = _convert_any_rational_to_fraction(k)
    return Series._wrap([{w: k * v for w, v in component.items()} for component in c._components], c.m, c.truncation)


def _shuffle_dicts(a: Coefficients, b: Coefficients, truncation: int) -> Coefficients:
    """Shuffle of two coefficient tables, keeping words of length <= truncation."""
    result: Coefficients = {}
    if len(a) == 0 or len(b) == 0:
        return result
    if len(a) > len(b):
        a, b = b, a
    for u, x in a.items():
        room = truncation - len(u)
        if room < 0:
            continue
        for v, y in b.items():
            if len(v) > room:
                continue
            xy = x * y
            for word, count in _shuffle_table(u, v):
                result[word] = result.get(word, Fraction(0)) + xy * count
    return result


def shuffle_series(c: Series, d: Series) -> Series:
    """Shuffle product, the generating series of the pointwise product ``F_c F_d``.

    Multi-component operands are shuffled componentwise.
    """
    c._check_compatible(d, 'shuffle')
    truncation = min(c.truncation, d.truncation)
    components = [_shuffle_dicts(left, right, truncation) for left, right in zip(c._components, d._components)]
    return Series._wrap(components, c.m, truncation)


def order(c: Series) -> Union[int, float]:
    """Length of the shortest word with a nonzero coefficient; ``math.inf`` for zero."""
    lengths = [len(word) for component in c._components for word in component]
    if len(lengths) == 0:
        return math.inf
    return min(lengths)


def distance(c: Series, d: Series) -> Fraction:
    """Ultrametric distance ``sigma^order(c - d)``."""
    difference = order(add(c, scale(-1, d)))
    if difference == math.inf:
        return Fraction(0)
    return ULTRAMETRIC_SIGMA ** int(difference)


def is_linear(c: Series) -> bool:
    """True when every nonzero word has the form ``x0^k x_j`` with ``j != 0``."""
    for component in c._components:
        for word in component:
            if len(word) == 0 or word[-1] == 0 or any(letter != 0 for letter in word[:-1]):
                return False
    return True


class GrowthConstants(NamedTuple):
    """Constants of the bound ``|(c, η)| <= K M^|η| |η|!`` (local) or ``K M^|η|`` (global)."""
    K: float
    M: float


def growth_constants(K: float, M: float) -> GrowthConstants:
    for name, value in (('K', K), ('M', M)):
        if not isinstance(value, (int, float, Fraction)) or isinstance(value, bool):
            raise TypeError('parameter "%s" must be a number' % name)
        if value <= 0:
            raise ValueError('parameter "%s" must be positive: %s' % (name, value))
    return GrowthConstants(float(K), float(M))


def satisfies_growth_bound(c: Series, constants: GrowthConstants, mode: Text = 'local') -> bool:
    """Checks the growth bound on every stored coefficient.

    :param mode: ``'local'`` includes the ``|η|!`` factor, ``'global'`` does not.
    """
    if mode not in ('local', 'global'):
        raise ValueError('parameter "mode" must be "local" or "global": %s' % mode)
    for _, word, value in c.support():
        bound = constants.K * constants.M ** len(word)
        if mode == 'local':
            bound *= math.factorial(len(word))
        if abs(float(value)) > bound * (1 + 1e-12):
            return False
    return True


def fliess_radius(M: float, m: int) -> float:
    """Radius ``1/(M(m+1))`` inside which ``F_c`` converges for inputs bounded in L1."""
    if M <= 0:
        raise ValueError('parameter "M" must be positive: %s' % M)
    _check_alphabet(m)
    return 1.0 / (M * (m + 1))


def format_series(c: Series) -> Text:
    """Canonical text form; header then one line per nonzero coefficient."""
    lines = ['fps m=%d l=%d N=%d' % (c.m, c.ell, c.truncation)]
    for index, word, value in c.support():
        lines.append('%d %s %s' % (index, _format_fraction(value), format_word(word)))
    return '\n'.join(lines) + '\n'


def _parse_header(line: Text) -> Tuple[int, int, int]:
    fields = line.split()
    if len(fields) != 4 or fields[0] != 'fps':
        raise FormatError('malformed header: "%s"' % line)
    values = {}
    for field in fields[1:]:
        name, _, value = field.partition('=')
        if name not in ('m', 'l', 'N') or not value.isdigit():
            raise FormatError('malformed header field: "%s"' % field)
        values[name] = int(value)
    if len(values) != 3:
        raise FormatError('malformed header: "%s"' % line)
    if values['m'] < 1 or values['l'] < 1:
        raise FormatError('header needs m >= 1 and l >= 1: "%s"' % line)
    return values['m'], values['l'], values['N']


def parse_series(text: Text) -> Series:
    """Parses the line format written by :func:`format_series`.

    Blank lines are ignored. Repeated ``(component, word)`` pairs are rejected.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if len(line) != 0]
    if len(lines) == 0:
        raise FormatError('empty series text')
    m, ell, truncation = _parse_header(lines[0])
    components: List[Coefficients] = [{} for _ in range(ell)]
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 3:
            raise FormatError('line %d: expected "<component> <rational> <word>": "%s"' % (number, line))
        if not fields[0].isdigit():
            raise FormatError('line %d: malformed component index "%s"' % (number, fields[0]))
        index = int(fields[0])
        if index < 1 or index > ell:
            raise FormatError('line %d: component %d is outside of 1..%d' % (number, index, ell))
        value = _convert_any_rational_to_fraction(fields[1])
        word = parse_word(fields[2], m)
        if len(word) > truncation:
            raise FormatError('line %d: word %s is longer than N=%d' % (number, fields[2], truncation))
        if word in components[index - 1]:
            raise FormatError('line %d: duplicate coefficient for component %d word %s' % (number, index, fields[2]))
        components[index - 1][word] = value
    return Series._wrap(components, m, truncation)


def read_series(path: Text) -> Series:
    with open(path, encoding='utf-8') as f:
        return parse_series(f.read())


def write_series(c: Series, path: Text):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(format_series(c))
