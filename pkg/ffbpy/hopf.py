"""Coordinate maps of the output feedback group and their Hopf algebra.

The coordinate map ``a[i,η]`` reads the coefficient ``(c_i, η)`` of a series.
Polynomials in coordinate maps form a commutative graded connected Hopf
algebra whose coproduct is dual to the group product and whose antipode
evaluates the group inverse: ``a[i,η](c⁻¹) = (S a[i,η])(c)``.

Text forms::

    a[1,x0x1]                     coordinate map
    a[1,x1]·a[1,e]                monomial, factors by descending degree
    -a[1,x0] + a[1,x1]·a[1,e]     polynomial
    a[1,x1]⊗a[1,e]                tensor
"""
from typing import Text, NamedTuple, Tuple, Dict, List, Iterator, Callable, Optional, Union
from fractions import Fraction
from math import comb
from multiprocessing import Pool
from threading import RLock
import logging

from .constants import DEFAULT_CONCURRENCY
from .common import (
    Word, LinearCombination, FormatError, DimensionError, TruncationError,
    _check_alphabet, _check_non_negative,
)
from .words import format_word, parse_word, word_key, _adjoint_table, _format_terms
from .series import Series, Coefficients

logger = logging.getLogger(__name__)


class CoordinateMap(NamedTuple):
    """``a[component, word]``: the map ``c -> (c_component, word)``."""
    component: int
    word: Word

    @property
    def degree(self) -> int:
        return coord_degree(self)

    @classmethod
    def parse(cls, text: Text) -> 'CoordinateMap':
        """Parses ``"a[1,x0x2]"``."""
        text = text.strip()
        if not text.startswith('a[') or not text.endswith(']') or ',' not in text:
            raise FormatError('malformed coordinate map: "%s"' % text)
        component, word = text[2:-1].split(',', 1)
        if not component.strip().isdigit():
            raise FormatError('malformed component in "%s"' % text)
        return cls(int(component), parse_word(word))

    def __str__(self) -> str:
        return 'a[%d,%s]' % (self.component, format_word(self.word))


def coord_degree(a: CoordinateMap) -> int:
    """``2|η|_x0 + (number of other letters) + 1``"""
    zeros = a.word.count(0)
    return 2 * zeros + (len(a.word) - zeros) + 1


def _factor_key(a: CoordinateMap):
    return (-coord_degree(a), a.component, word_key(a.word))


def _theta(letter: int, a: CoordinateMap) -> CoordinateMap:
    # left shift by one letter
    return CoordinateMap(a.component, (letter,) + a.word)


class HopfMonomial(NamedTuple):
    """Commutative product of coordinate maps; no factors is the unit ``1``."""
    factors: Tuple[CoordinateMap, ...]

    @classmethod
    def of(cls, *maps: CoordinateMap) -> 'HopfMonomial':
        return cls(tuple(sorted(maps, key=_factor_key)))

    @classmethod
    def unit(cls) -> 'HopfMonomial':
        return _UNIT

    @property
    def degree(self) -> int:
        return sum(coord_degree(a) for a in self.factors)

    def times(self, other: 'HopfMonomial') -> 'HopfMonomial':
        if len(other.factors) == 0:
            return self
        if len(self.factors) == 0:
            return other
        return HopfMonomial(tuple(sorted(self.factors + other.factors, key=_factor_key)))

    def __str__(self) -> str:
        if len(self.factors) == 0:
            return '1'
        return '·'.join(str(a) for a in self.factors)


_UNIT = HopfMonomial(())


def _monomial_key(p: HopfMonomial):
    return (len(p.factors), tuple(_factor_key(a) for a in p.factors))


class HopfPolynomial(LinearCombination[HopfMonomial]):
    """Element of the Hopf algebra, a rational combination of monomials."""
    __slots__ = ()

    @staticmethod
    def _sort_key(key: HopfMonomial):
        return _monomial_key(key)

    @classmethod
    def unit(cls) -> 'HopfPolynomial':
        return cls._wrap({_UNIT: Fraction(1)})

    @classmethod
    def of(cls, a: CoordinateMap) -> 'HopfPolynomial':
        return cls._wrap({HopfMonomial((a,)): Fraction(1)})

    @property
    def degree(self) -> int:
        return max((p.degree for p in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({p.degree for p in self._terms}) <= 1

    def __mul__(self, other):
        if not isinstance(other, HopfPolynomial):
            return LinearCombination.__mul__(self, other)
        terms: Dict[HopfMonomial, Fraction] = {}
        for p, x in self._terms.items():
            for q, y in other._terms.items():
                key = p.times(q)
                terms[key] = terms.get(key, Fraction(0)) + x * y
        return HopfPolynomial._wrap(terms)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return _format_terms((str(p), c) for p, c in self.items())


class HopfTensor(LinearCombination[Tuple[HopfMonomial, ...]]):
    """Element of a tensor power of the Hopf algebra; keys are monomial tuples."""
    __slots__ = ()

    @staticmethod
    def _sort_key(key: Tuple[HopfMonomial, ...]):
        return tuple(_monomial_key(p) for p in key)

    @property
    def arity(self) -> int:
        for key in self._terms:
            return len(key)
        return 0

    def apply_slot(self, k: int, f: Callable[[HopfMonomial], 'HopfTensor']) -> 'HopfTensor':
        """Replaces slot ``k`` by ``f`` of its monomial, raising the arity by ``arity(f) - 1``."""
        terms: Dict[Tuple[HopfMonomial, ...], Fraction] = {}
        for key, x in self._terms.items():
            if k < 0 or k >= len(key):
                raise IndexError('slot %d does not exist in a tensor of arity %d' % (k, len(key)))
            for inner, y in f(key[k])._terms.items():
                new_key = key[:k] + inner + key[k + 1:]
                terms[new_key] = terms.get(new_key, Fraction(0)) + x * y
        return HopfTensor._wrap(terms)

    def multiply(self) -> HopfPolynomial:
        """The product map applied across all slots."""
        terms: Dict[HopfMonomial, Fraction] = {}
        for key, x in self._terms.items():
            product = _UNIT
            for p in key:
                product = product.times(p)
            terms[product] = terms.get(product, Fraction(0)) + x
        return HopfPolynomial._wrap(terms)

    def __str__(self) -> str:
        return _format_terms(('⊗'.join(str(p) for p in key), c) for key, c in self.items())


_Table = Dict[Tuple[CoordinateMap, HopfMonomial], Fraction]


def _insert(p: HopfMonomial, a: CoordinateMap) -> HopfMonomial:
    return HopfMonomial(tuple(sorted(p.factors + (a,), key=_factor_key)))


class HopfAlgebra:
    """The Hopf algebra of coordinate maps over ``m`` inputs with its memo tables.

    The tables are shared between calls and guarded by a lock.
    """

    def __init__(self, m: int):
        _check_alphabet(m)
        self._m = m
        self._lock = RLock()
        self._tilde: Dict[CoordinateMap, _Table] = {}
        self._antipode: Dict[CoordinateMap, Dict[HopfMonomial, Fraction]] = {}

    @property
    def m(self) -> int:
        return self._m

    def cache_sizes(self) -> Tuple[int, int]:
        return len(self._tilde), len(self._antipode)

    def _check_map(self, a: CoordinateMap):
        if not isinstance(a, CoordinateMap):
            raise TypeError('expected a CoordinateMap, got "%s"' % type(a))
        if a.component < 1 or a.component > self._m:
            raise DimensionError('component %d is outside of 1..%d' % (a.component, self._m))
        for letter in a.word:
            if letter < 0 or letter > self._m:
                raise DimensionError('letter x%d is outside of x0..x%d' % (letter, self._m))

    def shuffle_coproduct(self, a: CoordinateMap, j: int) -> HopfTensor:
        """``a[i,η] -> Σ a[i,ξ]⊗a[j,ν]`` over the unshuffles ``ξ⊗ν`` of ``η``."""
        self._check_map(a)
        if j < 1 or j > self._m:
            raise DimensionError('component %d is outside of 1..%d' % (j, self._m))
        terms = {}
        for (left, right), count in _adjoint_table(a.word):
            key = (HopfMonomial((CoordinateMap(a.component, left),)), HopfMonomial((CoordinateMap(j, right),)))
            terms[key] = Fraction(count)
        return HopfTensor._wrap(terms)

    def _tilde_table(self, a: CoordinateMap) -> _Table:
        table = self._tilde.get(a)
        if table is not None:
            return table
        with self._lock:
            if len(a.word) == 0:
                table = {(a, _UNIT): Fraction(1)}
            elif a.word[0] != 0:
                letter = a.word[0]
                inner = self._tilde_table(CoordinateMap(a.component, a.word[1:]))
                table = {(_theta(letter, left), right): x for (left, right), x in inner.items()}
            else:
                table = self._tilde_x0(a)
            self._tilde[a] = table
        return table

    def _tilde_x0(self, a: CoordinateMap) -> _Table:
        # tildeΔ∘θ0 = (θ0⊗id)∘tildeΔ + Σ_j (θ_j⊗μ)∘(tildeΔ⊗id)∘Δ⧢^j
        eta = a.word[1:]
        table: _Table = {}
        for (left, right), x in self._tilde_table(CoordinateMap(a.component, eta)).items():
            key = (_theta(0, left), right)
            table[key] = table.get(key, Fraction(0)) + x
        for (xi, nu), count in _adjoint_table(eta):
            inner = self._tilde_table(CoordinateMap(a.component, xi))
            for j in range(1, self._m + 1):
                extra = CoordinateMap(j, nu)
                for (left, right), x in inner.items():
                    key = (_theta(j, left), _insert(right, extra))
                    table[key] = table.get(key, Fraction(0)) + x * count
        return {key: x for key, x in table.items() if x != 0}

    def tilde_coproduct(self, a: CoordinateMap) -> HopfTensor:
        """The coproduct dual to the modified composition product."""
        self._check_map(a)
        return HopfTensor._wrap({(HopfMonomial((left,)), right): x for (left, right), x in self._tilde_table(a).items()})

    def _reduced_table(self, a: CoordinateMap) -> _Table:
        return {key: x for key, x in self._tilde_table(a).items() if key != (a, _UNIT)}

    def reduced_coproduct(self, a: CoordinateMap) -> HopfTensor:
        """``tildeΔ a - a⊗1``"""
        self._check_map(a)
        return HopfTensor._wrap({(HopfMonomial((left,)), right): x for (left, right), x in self._reduced_table(a).items()})

    def coproduct_map(self, a: CoordinateMap) -> HopfTensor:
        """``tildeΔ a + 1⊗a``, dual to the group product."""
        self._check_map(a)
        terms = {(HopfMonomial((left,)), right): x for (left, right), x in self._tilde_table(a).items()}
        key = (_UNIT, HopfMonomial((a,)))
        terms[key] = terms.get(key, Fraction(0)) + 1
        return HopfTensor._wrap(terms)

    def coproduct_monomial(self, p: HopfMonomial) -> HopfTensor:
        result: Dict[Tuple[HopfMonomial, ...], Fraction] = {(_UNIT, _UNIT): Fraction(1)}
        for a in p.factors:
            factor = self.coproduct_map(a)
            product: Dict[Tuple[HopfMonomial, ...], Fraction] = {}
            for (l1, r1), x in result.items():
                for (l2, r2), y in factor._terms.items():
                    key = (l1.times(l2), r1.times(r2))
                    product[key] = product.get(key, Fraction(0)) + x * y
            result = product
        return HopfTensor._wrap(result)

    def coproduct(self, p: Union[HopfPolynomial, HopfMonomial, CoordinateMap]) -> HopfTensor:
        """The coproduct on all of the algebra; multiplicative with ``Δ1 = 1⊗1``."""
        p = _as_polynomial(p)
        terms: Dict[Tuple[HopfMonomial, ...], Fraction] = {}
        for monomial, x in p._terms.items():
            for key, y in self.coproduct_monomial(monomial)._terms.items():
                terms[key] = terms.get(key, Fraction(0)) + x * y
        return HopfTensor._wrap(terms)

    def _antipode_table(self, a: CoordinateMap) -> Dict[HopfMonomial, Fraction]:
        table = self._antipode.get(a)
        if table is not None:
            return table
        with self._lock:
            # S a = -a - Σ S(a')·a''
            table = {HopfMonomial((a,)): Fraction(-1)}
            for (left, right), x in self._reduced_table(a).items():
                for p, y in self._antipode_table(left).items():
                    key = p.times(right)
                    table[key] = table.get(key, Fraction(0)) - x * y
            table = {key: x for key, x in table.items() if x != 0}
            self._antipode[a] = table
            if len(self._antipode) & (len(self._antipode) - 1) == 0:
                logger.debug('antipode table for m=%d holds %d entries', self._m, len(self._antipode))
        return table

    def antipode(self, a: CoordinateMap) -> HopfPolynomial:
        self._check_map(a)
        return HopfPolynomial._wrap(dict(self._antipode_table(a)))

    def antipode_polynomial(self, p: Union[HopfPolynomial, HopfMonomial, CoordinateMap]) -> HopfPolynomial:
        """The antipode extended as an algebra morphism."""
        p = _as_polynomial(p)
        total = HopfPolynomial()
        for monomial, x in p._terms.items():
            image = HopfPolynomial.unit()
            for a in monomial.factors:
                image = image * self.antipode(a)
            total = total + image * x
        return total

    def convolve_identity(self, p: Union[HopfPolynomial, HopfMonomial, CoordinateMap], side: Text = 'left') -> HopfPolynomial:
        """``μ∘(S⊗id)∘Δ`` for ``side='left'``, ``μ∘(id⊗S)∘Δ`` for ``'right'``; equals ``ε(p)·1``."""
        if side not in ('left', 'right'):
            raise ValueError('parameter "side" must be "left" or "right": %s' % side)
        slot = 0 if side == 'left' else 1

        def lifted(q: HopfMonomial) -> HopfTensor:
            return HopfTensor._wrap({(s,): y for s, y in self.antipode_polynomial(q)._terms.items()})

        return self.coproduct(p).apply_slot(slot, lifted).multiply()


def _as_polynomial(p: Union[HopfPolynomial, HopfMonomial, CoordinateMap]) -> HopfPolynomial:
    if isinstance(p, HopfPolynomial):
        return p
    if isinstance(p, CoordinateMap):
        return HopfPolynomial.of(p)
    if isinstance(p, HopfMonomial):
        return HopfPolynomial._wrap({p: Fraction(1)})
    raise TypeError('type "%s" is not an element of the Hopf algebra' % type(p))


_ALGEBRAS: Dict[int, HopfAlgebra] = {}
_ALGEBRAS_LOCK = RLock()


def hopf_algebra(m: int) -> HopfAlgebra:
    """The shared :class:`HopfAlgebra` for ``m`` inputs."""
    _check_alphabet(m)
    with _ALGEBRAS_LOCK:
        algebra = _ALGEBRAS.get(m)
        if algebra is None:
            algebra = HopfAlgebra(m)
            _ALGEBRAS[m] = algebra
        return algebra


def shuffle_coproduct(a: CoordinateMap, j: int, m: int) -> HopfTensor:
    return hopf_algebra(m).shuffle_coproduct(a, j)


def tilde_coproduct(a: CoordinateMap, m: int) -> HopfTensor:
    return hopf_algebra(m).tilde_coproduct(a)


def reduced_coproduct(a: CoordinateMap, m: int) -> HopfTensor:
    return hopf_algebra(m).reduced_coproduct(a)


def coproduct(p: Union[HopfPolynomial, HopfMonomial, CoordinateMap], m: int) -> HopfTensor:
    return hopf_algebra(m).coproduct(p)


def antipode(a: CoordinateMap, m: int) -> HopfPolynomial:
    return hopf_algebra(m).antipode(a)


def counit(p: Union[HopfPolynomial, HopfMonomial, CoordinateMap]) -> Fraction:
    """Coefficient of the unit monomial."""
    return _as_polynomial(p).coefficient(_UNIT)


def _coordinate_value(a: CoordinateMap, c: Series) -> Fraction:
    if a.component < 1 or a.component > c.ell:
        raise DimensionError('component %d is outside of 1..%d' % (a.component, c.ell))
    if len(a.word) > c.truncation:
        raise TruncationError('word %s is longer than the truncation %d' % (format_word(a.word), c.truncation))
    return c._components[a.component - 1].get(a.word, Fraction(0))


def _monomial_value(p: HopfMonomial, c: Series) -> Fraction:
    value = Fraction(1)
    for a in p.factors:
        value *= _coordinate_value(a, c)
        if value == 0:
            break
    return value


def eval_hopf(p: Union[HopfPolynomial, HopfMonomial, CoordinateMap], c: Series) -> Fraction:
    """Substitutes ``a[j,ξ] -> (c_j, ξ)``."""
    p = _as_polynomial(p)
    return sum((x * _monomial_value(q, c) for q, x in p._terms.items()), Fraction(0))


def eval_tensor(t: HopfTensor, *series: Series) -> Fraction:
    """Evaluates slot ``k`` of every term against ``series[k]``."""
    total = Fraction(0)
    for key, x in t._terms.items():
        if len(key) != len(series):
            raise DimensionError('tensor of arity %d evaluated against %d series' % (len(key), len(series)))
        value = x
        for q, c in zip(key, series):
            value *= _monomial_value(q, c)
        total += value
    return total


def _words_of_weight(weight: int, m: int) -> Iterator[Word]:
    # x0 weighs 2, the other letters 1
    if weight == 0:
        yield ()
        return
    if weight >= 2:
        for rest in _words_of_weight(weight - 2, m):
            yield (0,) + rest
    for letter in range(1, m + 1):
        for rest in _words_of_weight(weight - 1, m):
            yield (letter,) + rest


def enumerate_coordinate_maps(k: int, m: int) -> List[CoordinateMap]:
    """All coordinate maps of degree ``k`` in canonical factor order."""
    _check_non_negative(k, 'k')
    _check_alphabet(m)
    if k == 0:
        return []
    maps = [CoordinateMap(i, word) for i in range(1, m + 1) for word in _words_of_weight(k - 1, m)]
    return sorted(maps, key=_factor_key)


def enumerate_monomials(k: int, m: int) -> List[HopfMonomial]:
    """All monomials of degree ``k``; ``[1]`` for ``k = 0``."""
    _check_non_negative(k, 'k')
    _check_alphabet(m)
    pool: List[CoordinateMap] = []
    for degree in range(k, 0, -1):
        pool.extend(enumerate_coordinate_maps(degree, m))
    result: List[HopfMonomial] = []

    def extend(start: int, remaining: int, chosen: List[CoordinateMap]):
        if remaining == 0:
            result.append(HopfMonomial(tuple(chosen)))
            return
        for index in range(start, len(pool)):
            a = pool[index]
            degree = coord_degree(a)
            if degree <= remaining:
                chosen.append(a)
                extend(index, remaining - degree, chosen)
                chosen.pop()

    extend(0, k, [])
    return result


def _index_slots(a: CoordinateMap) -> int:
    # the component plus one per letter other than x0
    return len(a.word) - a.word.count(0) + 1


def basis_dimensions(k: int, m: int, labelled: bool = True) -> Tuple[int, int]:
    """``(dim V_k, dim H_k)`` by enumeration; ``V_0`` is spanned by the unit.

    With ``labelled`` the monomials are counted as the tabulated bases write
    them: a monomial pattern such as ``a[i1,e]·a[i2,e]`` counts once per
    assignment of its index labels, repeated factors included. Patterns are
    the coordinate maps for a single input, ``x1`` standing for any input
    letter. Without ``labelled`` the distinct monomials are counted.
    """
    _check_non_negative(k, 'k')
    _check_alphabet(m)
    if k == 0:
        return 1, 1
    maps = len(enumerate_coordinate_maps(k, m))
    if not labelled:
        return maps, len(enumerate_monomials(k, m))
    monomials = 0
    for pattern in enumerate_monomials(k, 1):
        monomials += m ** sum(_index_slots(a) for a in pattern.factors)
    return maps, monomials


def table_dimensions(k: int, m: int) -> Tuple[int, int]:
    """Closed-form ``(dim V_k, dim H_k)`` in the labelled count of :func:`basis_dimensions`.

    A pattern with ``z`` letters ``x0`` and ``s`` other letters has degree
    ``2z + s + 1`` and ``s + 1`` labels; ``H`` is generated by
    ``Π 1/(1 - m^(s+1) t^(2z+s+1))`` over all patterns.
    """
    _check_non_negative(k, 'k')
    _check_alphabet(m)
    if k == 0:
        return 1, 1
    # (degree, labels) -> number of patterns
    patterns: Dict[Tuple[int, int], int] = {}
    for z in range(0, k // 2 + 1):
        for s in range(0, k - 2 * z):
            degree = 2 * z + s + 1
            if degree <= k:
                patterns[(degree, s + 1)] = patterns.get((degree, s + 1), 0) + comb(z + s, z)
    maps = sum(count * m ** labels for (degree, labels), count in patterns.items() if degree == k)
    # log H = Σ_p Σ_r m^(labels r) t^(degree r) / r, so n h_n = Σ_j b_j h_(n-j)
    weighted = [0] * (k + 1)
    for (degree, labels), count in patterns.items():
        for r in range(1, k // degree + 1):
            weighted[degree * r] += count * degree * m ** (labels * r)
    monomials = [1] + [0] * k
    for n in range(1, k + 1):
        monomials[n] = sum(weighted[j] * monomials[n - j] for j in range(1, n + 1)) // n
    return maps, monomials[k]


def _maps_by_degree(m: int, truncation: int) -> Dict[int, List[CoordinateMap]]:
    levels: Dict[int, List[CoordinateMap]] = {}
    for degree in range(1, 2 * truncation + 2):
        maps = [a for a in enumerate_coordinate_maps(degree, m) if len(a.word) <= truncation]
        if len(maps) != 0:
            levels[degree] = maps
    return levels


def _evaluate_level(m: int, maps: List[CoordinateMap], components: Tuple[Coefficients, ...], inverse: Dict[CoordinateMap, Fraction]) -> List[Fraction]:
    algebra = hopf_algebra(m)
    values = []
    for a in maps:
        value = -components[a.component - 1].get(a.word, Fraction(0))
        for (left, right), x in algebra._reduced_table(a).items():
            inner = inverse[left]
            if inner == 0:
                continue
            product = x * inner
            for factor in right.factors:
                product *= components[factor.component - 1].get(factor.word, Fraction(0))
                if product == 0:
                    break
            value -= product
        values.append(value)
    return values


def _runner_evaluate_level(params: Tuple) -> List[Fraction]:
    return _evaluate_level(*params)


def antipode_inverse(c: Series, truncation: Optional[int] = None, concurrency: int = DEFAULT_CONCURRENCY) -> Series:
    """Group inverse assembled coefficientwise as ``(c⁻¹_i, η) = (S a[i,η])(c)``.

    The antipode recursion runs on numbers: the left factors of the reduced
    coproduct are coefficients of ``c⁻¹`` of lower degree, already known when
    the degrees are processed in increasing order.

    :param truncation: Optional. Defaults to the truncation of ``c``.
    :param concurrency: Number of worker processes per degree level.
    """
    if not isinstance(c, Series):
        raise TypeError('parameter "c" must be a Series')
    if c.ell != c.m:
        raise DimensionError('inverse needs a square series, got m=%d and l=%d' % (c.m, c.ell))
    if truncation is None:
        truncation = c.truncation
    _check_non_negative(truncation, 'truncation')
    if truncation > c.truncation:
        raise TruncationError('cannot invert to N=%d a series truncated at %d' % (truncation, c.truncation))
    if isinstance(concurrency, bool) or not isinstance(concurrency, int) or concurrency < 1:
        raise ValueError('parameter "concurrency" must be a positive integer')

    inverse: Dict[CoordinateMap, Fraction] = {}
    components = c._components
    pool = Pool(processes=concurrency) if concurrency > 1 else None
    try:
        for degree, maps in sorted(_maps_by_degree(c.m, truncation).items()):
            if pool is None:
                values = _evaluate_level(c.m, maps, components, inverse)
            else:
                chunks = [maps[k::concurrency] for k in range(concurrency)]
                results = pool.map(_runner_evaluate_level, [(c.m, chunk, components, inverse) for chunk in chunks])
                values = [None] * len(maps)
                for k, chunk_values in enumerate(results):
                    values[k::concurrency] = chunk_values
            inverse.update(zip(maps, values))
            logger.debug('antipode inverse: degree %d done, %d coordinate maps', degree, len(maps))
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    result: List[Coefficients] = [{} for _ in range(c.m)]
    for a, value in inverse.items():
        if value != 0:
            result[a.component - 1][a.word] = value
    logger.debug('antipode tables for m=%d: %d coproducts, %d antipodes', c.m, *hopf_algebra(c.m).cache_sizes())
    return Series._wrap(result, c.m, truncation)
