from typing import Text, Union, NamedTuple, Tuple, TypedDict, Generic, TypeVar, Hashable, Mapping, Optional, Iterator, Any, List
from types import MappingProxyType
from fractions import Fraction
import re

from .constants import DEFAULT_INVERSE_METHOD, INVERSE_METHODS, DEFAULT_CONCURRENCY

_REGEX_RATIONAL = re.compile(r'^[+-]?\d+(/\d+)?$')
_REGEX_LETTER = re.compile(r'x(\d+)')
_REGEX_WORD = re.compile(r'^(e|(x\d+)+)$')

Word = Tuple[int, ...]
"""A word is a tuple of letter indices, ``()`` being the empty word."""

AnyRational = Union[int, Text, Fraction]


class FormatError(ValueError):
    """Raised when text, JSON or CSV input does not follow its documented format."""


class DimensionError(ValueError):
    """Raised when alphabets or component counts of operands do not fit together."""


class TruncationError(ValueError):
    """Raised when an operation needs coefficients an operand does not carry."""


class ConvergenceError(RuntimeError):
    """Raised when a fixed-point iteration does not settle within its step budget."""


class Alphabet(NamedTuple):
    """Alphabet ``{x0, x1, ..., xm}``.

    ``x0`` is the drift letter, ``x1..xm`` correspond to the input channels.
    """
    m: int

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(range(self.m + 1))


def _check_alphabet(m: int, argname: Text = 'm') -> Alphabet:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError('parameter "%s" must be an integer' % argname)
    if m < 1:
        raise ValueError('parameter "%s" must be positive: %d' % (argname, m))
    return Alphabet(m)


def _check_non_negative(value: int, argname: Text) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError('parameter "%s" must be an integer' % argname)
    if value < 0:
        raise ValueError('parameter "%s" must not be negative: %d' % (argname, value))
    return value


def _convert_any_rational_to_fraction(value: AnyRational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('type "%s" is not supported for AnyRational' % type(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _REGEX_RATIONAL.match(text):
            raise FormatError('not a rational number: "%s"' % value)
        return Fraction(text)
    raise TypeError('type "%s" is not supported for AnyRational' % type(value))


def _format_fraction(value: Fraction) -> Text:
    # integers print without denominator, the rest as p/q
    if value.denominator == 1:
        return '%d' % value.numerator
    return '%d/%d' % (value.numerator, value.denominator)


def _format_float(value: float, digits: int) -> Text:
    return '%.*g' % (digits, value)


class _ComputeSetting(TypedDict):
    """Settings for :class:`ffbpy.session.Session`"""
    max_degree: int
    method: Text
    concurrency: int


def _check_method(method: Text) -> Text:
    if not isinstance(method, str):
        raise TypeError('parameter "method" must be a string')
    # the command line spells it without underscore
    if method == 'fixedpoint':
        method = 'fixed_point'
    if method not in INVERSE_METHODS:
        raise ValueError('parameter "method" must be one of %s: %s' % (', '.join(INVERSE_METHODS), method))
    return method


def _setup_compute_setting(
    max_degree: int,
    method: Text = DEFAULT_INVERSE_METHOD,
    concurrency: int = DEFAULT_CONCURRENCY,
) -> _ComputeSetting:
    if max_degree is None:
        raise TypeError('parameter "max_degree" must be specified')
    _check_non_negative(max_degree, 'max_degree')
    method = _check_method(method)
    if isinstance(concurrency, bool) or not isinstance(concurrency, int):
        raise TypeError('parameter "concurrency" must be an integer')
    if concurrency < 1:
        raise ValueError('parameter "concurrency" must be positive')

    return {
        'max_degree': max_degree,
        'method': method,
        'concurrency': concurrency,
    }


K = TypeVar('K', bound=Hashable)


class LinearCombination(Generic[K]):
    """Finite formal sum of hashable basis keys with exact rational coefficients.

    Zero coefficients are never stored. Instances are immutable; iteration
    follows the canonical order given by :meth:`_sort_key`.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[K, AnyRational]] = None):
        cleaned = {}
        if terms is not None:
            for key, coefficient in terms.items():
                if not isinstance(coefficient, (Fraction, int)) or isinstance(coefficient, bool):
                    coefficient = _convert_any_rational_to_fraction(coefficient)
                if coefficient != 0:
                    cleaned[key] = Fraction(coefficient)
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, terms: Mapping[K, Fraction]):
        """Wraps an already cleaned dict without copying or converting it."""
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v != 0}
        obj._hash = None
        return obj

    @staticmethod
    def _sort_key(key: K) -> Any:
        return key

    @property
    def terms(self) -> Mapping[K, Fraction]:
        return MappingProxyType(self._terms)

    def keys(self) -> List[K]:
        return sorted(self._terms, key=self._sort_key)

    def items(self) -> Iterator[Tuple[K, Fraction]]:
        for key in self.keys():
            yield key, self._terms[key]

    def coefficient(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return len(self._terms) != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            if isinstance(other, int) and other == 0:
                return not self._terms
            return NotImplemented
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        result = dict(self._terms)
        for key, coefficient in other._terms.items():
            result[key] = result.get(key, 0) + coefficient
        return type(self)._wrap(result)

    def __neg__(self):
        return type(self)._wrap({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, LinearCombination):
            return NotImplemented
        scalar = _convert_any_rational_to_fraction(scalar)
        return type(self)._wrap({k: v * scalar for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return '%s(%s)' % (type(self).__name__, str(self))
