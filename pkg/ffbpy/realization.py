"""Control-affine state-space realizations as truncated Taylor data.

A realization ``ż = g0(z) + Σ_j g_j(z) u_j, y = h(z)`` started at ``z0`` has
the generating series ``(c_i, η) = L_{g_η} h_i (z0)``, the Lie derivatives
being taken along the letters of ``η`` from left to right. All fields are
stored in local coordinates ``w = z - z0``, so evaluation at ``z0`` is the
constant term.
"""
from typing import Text, Sequence, Mapping, Tuple, Dict, List, Optional, Any, Union
from fractions import Fraction
from math import comb, factorial
from multiprocessing import Pool
import json
import math
import os
import logging

from .constants import FIXTURE_DIRECTORY, DEFAULT_CONCURRENCY
from .common import (
    Word, AnyRational, FormatError, DimensionError, TruncationError,
    _check_non_negative, _convert_any_rational_to_fraction, _format_fraction,
)
from .series import Series, Coefficients

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class TaylorField:
    """Multivariate power series in ``n`` variables known up to total degree ``degree``.

    :param terms: Mapping exponent tuple -> coefficient.
    """
    __slots__ = ('_n', '_degree', '_terms')

    def __init__(self, n: int, degree: int, terms: Optional[Mapping[Exponent, AnyRational]] = None):
        _check_non_negative(n, 'n')
        _check_non_negative(degree, 'degree')
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, value in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != n or any(not isinstance(e, int) or e < 0 for e in exponent):
                raise ValueError('exponent %s does not fit %d variables' % (exponent, n))
            value = _convert_any_rational_to_fraction(value)
            if sum(exponent) <= degree and value != 0:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + value
        self._n = n
        self._degree = degree
        self._terms = {e: v for e, v in cleaned.items() if v != 0}

    @classmethod
    def _wrap(cls, n: int, degree: int, terms: Dict[Exponent, Fraction]) -> 'TaylorField':
        obj = cls.__new__(cls)
        obj._n = n
        obj._degree = degree
        obj._terms = {e: v for e, v in terms.items() if v != 0 and sum(e) <= degree}
        return obj

    @classmethod
    def constant(cls, n: int, degree: int, value: AnyRational) -> 'TaylorField':
        return cls(n, degree, {(0,) * n: value})

    @classmethod
    def variable(cls, n: int, degree: int, k: int) -> 'TaylorField':
        """The local coordinate ``w_k`` (counted from zero)."""
        if k < 0 or k >= n:
            raise ValueError('variable %d is outside of 0..%d' % (k, n - 1))
        exponent = [0] * n
        exponent[k] = 1
        return cls(n, degree, {tuple(exponent): 1})

    @property
    def n(self) -> int:
        return self._n

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._n, Fraction(0))

    def is_zero(self) -> bool:
        return len(self._terms) == 0

    def _check(self, other: 'TaylorField'):
        if not isinstance(other, TaylorField):
            raise TypeError('operand must be a TaylorField, got "%s"' % type(other))
        if other._n != self._n:
            raise DimensionError('fields in %d and %d variables' % (self._n, other._n))

    def __add__(self, other: 'TaylorField') -> 'TaylorField':
        self._check(other)
        terms = dict(self._terms)
        for e, v in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + v
        return TaylorField._wrap(self._n, min(self._degree, other._degree), terms)

    def __neg__(self) -> 'TaylorField':
        return TaylorField._wrap(self._n, self._degree, {e: -v for e, v in self._terms.items()})

    def __sub__(self, other: 'TaylorField') -> 'TaylorField':
        return self + (-other)

    def __mul__(self, other: Union['TaylorField', AnyRational]) -> 'TaylorField':
        if not isinstance(other, TaylorField):
            k = _convert_any_rational_to_fraction(other)
            return TaylorField._wrap(self._n, self._degree, {e: k * v for e, v in self._terms.items()})
        self._check(other)
        degree = min(self._degree, other._degree)
        terms: Dict[Exponent, Fraction] = {}
        for e1, v1 in self._terms.items():
            room = degree - sum(e1)
            if room < 0:
                continue
            for e2, v2 in other._terms.items():
                if sum(e2) > room:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + v1 * v2
        return TaylorField._wrap(self._n, degree, terms)

    def __rmul__(self, k: AnyRational) -> 'TaylorField':
        return self.__mul__(k)

    def derivative(self, k: int) -> 'TaylorField':
        """``∂/∂w_k``; known up to one degree less."""
        if self._degree < 1:
            raise TruncationError('cannot differentiate a field known only to degree 0')
        if k < 0 or k >= self._n:
            raise ValueError('variable %d is outside of 0..%d' % (k, self._n - 1))
        terms: Dict[Exponent, Fraction] = {}
        for e, v in self._terms.items():
            if e[k] != 0:
                lowered = e[:k] + (e[k] - 1,) + e[k + 1:]
                terms[lowered] = v * e[k]
        return TaylorField._wrap(self._n, self._degree - 1, terms)

    def truncate(self, degree: int) -> 'TaylorField':
        _check_non_negative(degree, 'degree')
        if degree > self._degree:
            raise TruncationError('cannot raise the degree from %d to %d' % (self._degree, degree))
        return TaylorField._wrap(self._n, degree, self._terms)

    def embed(self, n_total: int, offset: int) -> 'TaylorField':
        """The same field over ``n_total`` variables, its own starting at ``offset``."""
        if offset < 0 or offset + self._n > n_total:
            raise DimensionError('cannot place %d variables at %d among %d' % (self._n, offset, n_total))
        before, after = (0,) * offset, (0,) * (n_total - offset - self._n)
        return TaylorField._wrap(n_total, self._degree, {before + e + after: v for e, v in self._terms.items()})

    def shift(self, offsets: Sequence[AnyRational]) -> 'TaylorField':
        """``p(w + offsets)``, the table read as a polynomial."""
        if len(offsets) != self._n:
            raise DimensionError('%d offsets for %d variables' % (len(offsets), self._n))
        terms = dict(self._terms)
        for k, offset in enumerate(offsets):
            s = _convert_any_rational_to_fraction(offset)
            if s == 0:
                continue
            shifted: Dict[Exponent, Fraction] = {}
            for e, v in terms.items():
                for j in range(e[k] + 1):
                    key = e[:k] + (j,) + e[k + 1:]
                    shifted[key] = shifted.get(key, Fraction(0)) + v * comb(e[k], j) * s ** (e[k] - j)
            terms = shifted
        return TaylorField._wrap(self._n, self._degree, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaylorField):
            return NotImplemented
        return self._n == other._n and self._degree == other._degree and self._terms == other._terms

    def __repr__(self) -> str:
        parts = ['%s*w^%s' % (_format_fraction(v), e) for e, v in sorted(self._terms.items())]
        return 'TaylorField(n=%d, degree=%d, %s)' % (self._n, self._degree, ' + '.join(parts) or '0')


VectorField = List[TaylorField]


class Realization:
    """``ż = g0 + Σ g_j u_j, y = h`` about ``z0``.

    :param g: ``m + 1`` vector fields, the drift first, each a list of ``n`` fields.
    :param h: ``l`` output fields.
    :param z0: Expansion center and initial state.
    """

    def __init__(self, g: Sequence[Sequence[TaylorField]], h: Sequence[TaylorField], z0: Sequence[AnyRational]):
        if len(g) < 2:
            raise DimensionError('a realization needs a drift and at least one input field')
        if len(h) < 1:
            raise DimensionError('a realization needs at least one output')
        n = len(z0)
        for j, field in enumerate(g):
            if len(field) != n:
                raise DimensionError('g%d has %d entries, the state has %d' % (j, len(field), n))
            for entry in field:
                if not isinstance(entry, TaylorField) or entry.n != n:
                    raise DimensionError('g%d entries must be TaylorFields in %d variables' % (j, n))
        for i, entry in enumerate(h):
            if not isinstance(entry, TaylorField) or entry.n != n:
                raise DimensionError('h%d must be a TaylorField in %d variables' % (i + 1, n))
        self._g: Tuple[Tuple[TaylorField, ...], ...] = tuple(tuple(field) for field in g)
        self._h: Tuple[TaylorField, ...] = tuple(h)
        self._z0: Tuple[Fraction, ...] = tuple(_convert_any_rational_to_fraction(v) for v in z0)

    @property
    def n(self) -> int:
        return len(self._z0)

    @property
    def m(self) -> int:
        return len(self._g) - 1

    @property
    def ell(self) -> int:
        return len(self._h)

    @property
    def g(self) -> Tuple[Tuple[TaylorField, ...], ...]:
        return self._g

    @property
    def h(self) -> Tuple[TaylorField, ...]:
        return self._h

    @property
    def z0(self) -> Tuple[Fraction, ...]:
        return self._z0

    @property
    def degree(self) -> int:
        """Number of Lie derivatives the data supports."""
        return min(
            min(entry.degree for entry in self._h),
            min(entry.degree for field in self._g for entry in field) + 1,
        )

    def __repr__(self) -> str:
        return 'Realization(n=%d, m=%d, l=%d, degree=%d)' % (self.n, self.m, self.ell, self.degree)


def lie_derivative(g: Sequence[TaylorField], h: TaylorField) -> TaylorField:
    """``L_g h = Σ_k (∂h/∂w_k) g_k``"""
    if len(g) != h.n:
        raise DimensionError('vector field with %d entries for %d variables' % (len(g), h.n))
    if h.degree < 1:
        raise TruncationError('Lie derivative of a field known only to degree 0')
    result = TaylorField._wrap(h.n, h.degree - 1, {})
    for k, entry in enumerate(g):
        if entry.is_zero():
            continue
        partial = h.derivative(k)
        if partial.is_zero():
            continue
        result = result + partial * entry
    return result


def _component_coefficients(R: Realization, i: int, truncation: int) -> Coefficients:
    coefficients: Coefficients = {}
    stack: List[Tuple[Word, TaylorField]] = [((), R.h[i].truncate(truncation))]
    while stack:
        word, f = stack.pop()
        value = f.constant_term()
        if value != 0:
            coefficients[word] = value
        if len(word) == truncation or f.is_zero():
            continue
        for letter, field in enumerate(R.g):
            child = lie_derivative(field, f)
            if not child.is_zero():
                stack.append((word + (letter,), child.truncate(truncation - len(word) - 1)))
    logger.debug('output %d: %d nonzero coefficients up to length %d', i + 1, len(coefficients), truncation)
    return coefficients


def _runner_component_coefficients(params: Tuple) -> Coefficients:
    return _component_coefficients(*params)


def _check_degree(R: Realization, truncation: int):
    if R.degree < truncation:
        raise TruncationError('realization carries %d Lie derivatives, %d requested' % (R.degree, truncation))


def series_from_realization(R: Realization, truncation: int, concurrency: int = DEFAULT_CONCURRENCY) -> Series:
    """Generating series up to words of length ``truncation``.

    Words sharing a prefix share its Lie derivative; a field reached after
    ``k`` letters is only kept up to degree ``truncation - k``.

    :param concurrency: Number of worker processes, one task per output.
    """
    if not isinstance(R, Realization):
        raise TypeError('parameter "R" must be a Realization')
    _check_non_negative(truncation, 'truncation')
    _check_degree(R, truncation)
    if concurrency > 1:
        with Pool(processes=concurrency) as pool:
            components = pool.map(_runner_component_coefficients, [(R, i, truncation) for i in range(R.ell)])
    else:
        components = [_component_coefficients(R, i, truncation) for i in range(R.ell)]
    return Series._wrap(components, R.m, truncation)


def drift_coefficients(R: Realization, order: int) -> List[List[Fraction]]:
    """``(c_i, x0^k)`` for ``k = 0..order`` and every output, along the drift only."""
    _check_non_negative(order, 'order')
    _check_degree(R, order)
    result = []
    for i in range(R.ell):
        f = R.h[i].truncate(order)
        values = [f.constant_term()]
        for k in range(1, order + 1):
            f = lie_derivative(R.g[0], f).truncate(order - k)
            values.append(f.constant_term())
        result.append(values)
    return result


def closed_loop_realization(plant: Realization, controller: Realization) -> Realization:
    """Realization of the plant with the controller in its feedback path.

    The state is ``(z_p, z_c)``; the plant input is ``u + h_c(z_c)``, the
    controller input is ``h_p(z_p)`` and the output is ``h_p(z_p)``.
    """
    if plant.ell != controller.m or controller.ell != plant.m:
        raise DimensionError(
            'feedback needs plant outputs = controller inputs and controller outputs = plant inputs, got %d/%d and %d/%d'
            % (plant.ell, controller.m, controller.ell, plant.m))
    n_p, n = plant.n, plant.n + controller.n
    g_p = [[entry.embed(n, 0) for entry in field] for field in plant.g]
    g_c = [[entry.embed(n, n_p) for entry in field] for field in controller.g]
    h_p = [entry.embed(n, 0) for entry in plant.h]
    h_c = [entry.embed(n, n_p) for entry in controller.h]

    drift_p = list(g_p[0])
    for j in range(1, plant.m + 1):
        drift_p = [entry + g_p[j][k] * h_c[j - 1] for k, entry in enumerate(drift_p)]
    drift_c = list(g_c[0])
    for j in range(1, controller.m + 1):
        drift_c = [entry + g_c[j][k] * h_p[j - 1] for k, entry in enumerate(drift_c)]

    degree = min(entry.degree for field in g_p + g_c for entry in field)
    zero = TaylorField._wrap(n, degree, {})
    g = [drift_p + drift_c]
    for j in range(1, plant.m + 1):
        g.append(g_p[j] + [zero] * controller.n)
    return Realization(g, h_p, plant.z0 + controller.z0)


def inverse_realization(R: Realization) -> Realization:
    """Realization of the group inverse of ``δ + c``: ``(g0 - Σ g_j h_j, g_1..g_m, -h)``."""
    if R.m != R.ell:
        raise DimensionError('inverse needs as many outputs as inputs, got m=%d and l=%d' % (R.m, R.ell))
    drift = list(R.g[0])
    for j in range(1, R.m + 1):
        drift = [entry - R.g[j][k] * R.h[j - 1] for k, entry in enumerate(drift)]
    return Realization([drift] + [list(field) for field in R.g[1:]], [-entry for entry in R.h], R.z0)


def linear_realization(
    A: Sequence[Sequence[AnyRational]],
    B: Sequence[Sequence[AnyRational]],
    C: Sequence[Sequence[AnyRational]],
    z0: Optional[Sequence[AnyRational]] = None,
    degree: int = 2,
) -> Realization:
    """``ż = Az + Bu, y = Cz``; ``B`` is ``n x m`` and ``C`` is ``l x n``."""
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise DimensionError('A must be a nonempty square matrix')
    if len(B) != n or len(C) == 0 or any(len(row) != n for row in C):
        raise DimensionError('B needs %d rows and C needs %d columns' % (n, n))
    m = len(B[0])
    if m == 0 or any(len(row) != m for row in B):
        raise DimensionError('B rows must share a nonzero width')
    z0 = tuple(z0) if z0 is not None else (0,) * n
    if len(z0) != n:
        raise DimensionError('z0 has %d entries, the state has %d' % (len(z0), n))

    def affine(row: Sequence[AnyRational]) -> TaylorField:
        terms: Dict[Exponent, Fraction] = {}
        for k, value in enumerate(row):
            value = _convert_any_rational_to_fraction(value)
            unit = [0] * n
            unit[k] = 1
            terms[tuple(unit)] = value
            terms[(0,) * n] = terms.get((0,) * n, Fraction(0)) + value * _convert_any_rational_to_fraction(z0[k])
        return TaylorField(n, degree, terms)

    g = [[affine(row) for row in A]]
    for j in range(m):
        g.append([TaylorField.constant(n, degree, B[k][j]) for k in range(n)])
    return Realization(g, [affine(row) for row in C], z0)


def _float_to_fraction(value: float, what: Text) -> Fraction:
    fraction = Fraction(value)
    logger.debug('%s: binary64 value %r taken exactly', what, value)
    return fraction


def _read_rational(value: Any, what: Text) -> Fraction:
    if isinstance(value, bool):
        raise FormatError('%s: expected a number, got %r' % (what, value))
    if isinstance(value, float):
        if not math.isfinite(value):
            raise FormatError('%s: not a finite number' % what)
        return _float_to_fraction(value, what)
    try:
        return _convert_any_rational_to_fraction(value)
    except (TypeError, ValueError):
        raise FormatError('%s: expected a number or "p/q", got %r' % (what, value))


def _builtin_coefficients(name: Text, center: Fraction, degree: int) -> List[Fraction]:
    """Coefficients of ``f(center + w)`` in powers of ``w``."""
    exp_series = [Fraction(1, factorial(j)) for j in range(degree + 1)]
    cos_series = [Fraction((-1) ** (j // 2), factorial(j)) if j % 2 == 0 else Fraction(0) for j in range(degree + 1)]
    sin_series = [Fraction((-1) ** (j // 2), factorial(j)) if j % 2 == 1 else Fraction(0) for j in range(degree + 1)]
    if center == 0:
        return {'exp': exp_series, 'cos': cos_series, 'sin': sin_series}[name]
    x = float(center)
    if name == 'exp':
        scale = _float_to_fraction(math.exp(x), 'exp(%s)' % center)
        return [scale * v for v in exp_series]
    cos_x = _float_to_fraction(math.cos(x), 'cos(%s)' % center)
    sin_x = _float_to_fraction(math.sin(x), 'sin(%s)' % center)
    if name == 'cos':
        # cos(x + w) = cos x cos w - sin x sin w
        return [cos_x * a - sin_x * b for a, b in zip(cos_series, sin_series)]
    return [sin_x * a + cos_x * b for a, b in zip(cos_series, sin_series)]


_BUILTINS = ('cos', 'sin', 'exp')


def _parse_exponent(key: Text, n: int, what: Text) -> Exponent:
    parts = key.split(',')
    if len(parts) != n or not all(part.strip().isdigit() for part in parts):
        raise FormatError('%s: multi-index "%s" must list %d non-negative integers' % (what, key, n))
    return tuple(int(part) for part in parts)


def _parse_field(data: Any, n: int, z0: Tuple[Fraction, ...], degree: int, what: Text) -> TaylorField:
    if isinstance(data, (int, float, str)) and not isinstance(data, bool):
        return TaylorField.constant(n, degree, _read_rational(data, what))
    if not isinstance(data, dict):
        raise FormatError('%s: a field is a number, {"taylor": ...} or {"builtin": ...}' % what)
    if 'taylor' in data:
        table = data['taylor']
        if not isinstance(table, dict):
            raise FormatError('%s: "taylor" must map multi-indices to coefficients' % what)
        terms = {_parse_exponent(key, n, what): _read_rational(value, what) for key, value in table.items()}
        center = data.get('center', [0] * n)
        if not isinstance(center, list) or len(center) != n:
            raise FormatError('%s: "center" must list %d numbers' % (what, n))
        center = [_read_rational(v, what) for v in center]
        polynomial = TaylorField(n, max([degree] + [sum(e) for e in terms]), terms)
        return polynomial.shift([a - b for a, b in zip(z0, center)]).truncate(degree)
    if 'builtin' in data:
        name = data['builtin']
        if name not in _BUILTINS:
            raise FormatError('%s: unknown builtin "%s", expected one of %s' % (what, name, ', '.join(_BUILTINS)))
        var = data.get('var')
        if isinstance(var, bool) or not isinstance(var, int) or var < 1 or var > n:
            raise FormatError('%s: "var" must be a state index in 1..%d' % (what, n))
        scale = _read_rational(data.get('scale', 1), what)
        coefficients = _builtin_coefficients(name, z0[var - 1], degree)
        terms = {}
        for j, value in enumerate(coefficients):
            exponent = [0] * n
            exponent[var - 1] = j
            terms[tuple(exponent)] = scale * value
        return TaylorField(n, degree, terms)
    raise FormatError('%s: a field needs a "taylor" or "builtin" entry' % what)


def _read_count(data: Mapping, key: Text, minimum: int) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise FormatError('"%s" must be an integer >= %d' % (key, minimum))
    return value


def parse_realization(data: Mapping, degree: int) -> Realization:
    """Builds a realization from its JSON object, every field expanded to ``degree``.

    ``{"n", "m", "l", "z0", "g": [[field] * n] * (m + 1), "h": [field] * l}``
    """
    _check_non_negative(degree, 'degree')
    if not isinstance(data, dict):
        raise FormatError('a realization is a JSON object')
    n = _read_count(data, 'n', 1)
    m = _read_count(data, 'm', 1)
    ell = _read_count(data, 'l', 1)
    z0 = data.get('z0', [0] * n)
    if not isinstance(z0, list) or len(z0) != n:
        raise FormatError('"z0" must list %d numbers' % n)
    z0 = tuple(_read_rational(v, 'z0') for v in z0)
    g = data.get('g')
    if not isinstance(g, list) or len(g) != m + 1 or any(not isinstance(field, list) or len(field) != n for field in g):
        raise FormatError('"g" must list %d vector fields of %d entries' % (m + 1, n))
    h = data.get('h')
    if not isinstance(h, list) or len(h) != ell:
        raise FormatError('"h" must list %d fields' % ell)
    fields = [
        [_parse_field(entry, n, z0, degree, 'g%d[%d]' % (j, k + 1)) for k, entry in enumerate(field)]
        for j, field in enumerate(g)
    ]
    outputs = [_parse_field(entry, n, z0, degree, 'h[%d]' % (i + 1)) for i, entry in enumerate(h)]
    return Realization(fields, outputs, z0)


def load_realization(path: Text, degree: int) -> Realization:
    with open(path, encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError('%s: %s' % (path, e))
    return parse_realization(data, degree)


def load_fixture(name: Text, degree: int) -> Realization:
    """One of the shipped realizations: ``axle``, ``pi_controller``, ``small_angle_axle``."""
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)), FIXTURE_DIRECTORY, '%s.json' % name)
    if not os.path.isfile(path):
        raise ValueError('no shipped realization named "%s"' % name)
    return load_realization(path, degree)


def _json_rational(value: Fraction) -> Union[int, Text]:
    if value.denominator == 1:
        return value.numerator
    return _format_fraction(value)


def _field_to_json(field: TaylorField, z0: Tuple[Fraction, ...]) -> Dict:
    table = {
        ','.join(str(e) for e in exponent): _json_rational(value)
        for exponent, value in sorted(field._terms.items(), key=lambda item: (sum(item[0]), item[0]))
    }
    return {'taylor': table, 'center': [_json_rational(v) for v in z0]}


def realization_to_json(R: Realization) -> Dict:
    """JSON object of ``R`` with every field as a Taylor table about ``z0``."""
    return {
        'n': R.n,
        'm': R.m,
        'l': R.ell,
        'z0': [_json_rational(v) for v in R.z0],
        'g': [[_field_to_json(entry, R.z0) for entry in field] for field in R.g],
        'h': [_field_to_json(entry, R.z0) for entry in R.h],
    }
