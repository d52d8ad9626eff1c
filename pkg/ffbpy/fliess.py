"""Numerical evaluation of Fliess operators.

``F_c[u](t) = Σ (c, η) E_η[u](t, t0)`` with the iterated integrals
``E_∅ = 1`` and ``E_{x_i η}[u](t) = ∫_{t0}^t u_i(τ) E_η[u](τ) dτ``, ``u_0 = 1``.
Integrals use the composite trapezoid rule on a uniform grid.
"""
from typing import Text, Sequence, Callable, Tuple, Dict, List, Optional, Iterable, NamedTuple
from fractions import Fraction
from math import factorial, lgamma, log
import warnings
import logging

import numpy as np

from .constants import DEFAULT_FIT_FROM, FLOAT_SIGNIFICANT_DIGITS
from .common import Word, FormatError, DimensionError, TruncationError, _check_non_negative
from .series import Series, GrowthConstants, fliess_radius

logger = logging.getLogger(__name__)


class SampledSignal:
    """Input ``u = (u_1..u_m)`` sampled on a uniform grid over ``[t0, t1]``.

    :param values: Array of shape ``(samples, m)``.
    """

    def __init__(self, t0: float, t1: float, values: np.ndarray):
        values = np.asarray(values, dtype=float)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2 or values.shape[0] < 2 or values.shape[1] < 1:
            raise ValueError('values must have shape (samples >= 2, m >= 1), got %s' % (values.shape,))
        if not t1 > t0:
            raise ValueError('t1 must be greater than t0: %s, %s' % (t0, t1))
        if not np.all(np.isfinite(values)):
            raise ValueError('values must be finite')
        self._t0 = float(t0)
        self._t1 = float(t1)
        self._values = values

    @classmethod
    def from_function(cls, f: Callable[[float], Sequence[float]], t0: float, t1: float, samples: int, m: int) -> 'SampledSignal':
        grid = np.linspace(t0, t1, samples)
        values = np.array([np.asarray(f(t), dtype=float).reshape(-1) for t in grid])
        if values.shape[1] != m:
            raise DimensionError('input function returns %d channels, expected %d' % (values.shape[1], m))
        return cls(t0, t1, values)

    @classmethod
    def zero(cls, t0: float, t1: float, samples: int, m: int) -> 'SampledSignal':
        return cls(t0, t1, np.zeros((samples, m)))

    @classmethod
    def read_csv(cls, path: Text) -> 'SampledSignal':
        """Reads columns ``t,u1..um`` with a header line; the times must be uniform."""
        with open(path, encoding='utf-8') as f:
            header = f.readline().strip().split(',')
        if len(header) < 2 or header[0] != 't' or header[1:] != ['u%d' % j for j in range(1, len(header))]:
            raise FormatError('%s: header must be "t,u1,...,um"' % path)
        try:
            data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
        except ValueError as e:
            raise FormatError('%s: %s' % (path, e))
        if data.shape[1] != len(header) or data.shape[0] < 2:
            raise FormatError('%s: expected at least two rows of %d columns' % (path, len(header)))
        t = data[:, 0]
        steps = np.diff(t)
        if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-6, atol=0):
            raise FormatError('%s: times must form a uniform increasing grid' % path)
        return cls(t[0], t[-1], data[:, 1:])

    @property
    def t0(self) -> float:
        return self._t0

    @property
    def t1(self) -> float:
        return self._t1

    @property
    def m(self) -> int:
        return self._values.shape[1]

    @property
    def samples(self) -> int:
        return self._values.shape[0]

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def step(self) -> float:
        return (self._t1 - self._t0) / (self.samples - 1)

    def grid(self) -> np.ndarray:
        return np.linspace(self._t0, self._t1, self.samples)

    def channel(self, i: int) -> np.ndarray:
        """``u_i`` on the grid, ``u_0`` being the constant one."""
        if i == 0:
            return np.ones(self.samples)
        if i < 0 or i > self.m:
            raise DimensionError('channel %d is outside of 0..%d' % (i, self.m))
        return self._values[:, i - 1]

    def l1_norms(self) -> np.ndarray:
        """Trapezoid ``∫|u_i|`` over the interval, per channel."""
        magnitudes = np.abs(self._values)
        return (magnitudes[1:] + magnitudes[:-1]).sum(axis=0) * self.step / 2


def _cumulative_trapezoid(f: np.ndarray, step: float) -> np.ndarray:
    return np.concatenate(([0.0], np.cumsum((f[1:] + f[:-1]) * (step / 2))))


def iterated_integrals(words: Iterable[Word], u: SampledSignal) -> Dict[Word, np.ndarray]:
    """``E_η[u]`` on the grid for every word and all of its suffixes.

    Suffixes made only of ``x0`` are integrated exactly.
    """
    t = u.grid() - u.t0
    table: Dict[Word, np.ndarray] = {(): np.ones(u.samples)}
    pending = set()
    for word in words:
        word = tuple(word)
        for start in range(len(word)):
            pending.add(word[start:])
    for word in sorted(pending, key=len):
        if word in table:
            continue
        if all(letter == 0 for letter in word):
            table[word] = t ** len(word) / factorial(len(word))
            continue
        table[word] = _cumulative_trapezoid(u.channel(word[0]) * table[word[1:]], u.step)
    return table


def iterated_integral(word: Word, u: SampledSignal, t: float) -> float:
    """``E_η[u](t, t0)``, interpolated linearly between grid points."""
    if t < u.t0 or t > u.t1:
        raise ValueError('t=%s is outside of [%s, %s]' % (t, u.t0, u.t1))
    word = tuple(word)
    for letter in word:
        if letter > u.m:
            raise DimensionError('letter x%d needs input channel %d, the signal has %d' % (letter, letter, u.m))
    values = iterated_integrals([word], u)[word]
    return float(np.interp(t, u.grid(), values))


def check_convergence_domain(u: SampledSignal, growth: GrowthConstants, m: int) -> bool:
    """Reports whether ``max(R, T) < 1/(M(m+1))``; warns when it is not."""
    R = float(np.max(u.l1_norms()))
    T = u.t1 - u.t0
    radius = fliess_radius(growth.M, m)
    if max(R, T) < radius:
        return True
    message = 'max(R, T) = %.*g exceeds the convergence radius %.*g' % (
        FLOAT_SIGNIFICANT_DIGITS, max(R, T), FLOAT_SIGNIFICANT_DIGITS, radius)
    logger.warning(message)
    warnings.warn(message, RuntimeWarning)
    return False


def eval_fliess(c: Series, u: SampledSignal, growth: Optional[GrowthConstants] = None) -> np.ndarray:
    """``F_c[u]`` on the grid of ``u`` as an array of shape ``(samples, l)``.

    :param growth: Optional. Growth constants of ``c``; a violated convergence
        domain is reported with a :class:`RuntimeWarning`.
    """
    if not isinstance(c, Series):
        raise TypeError('parameter "c" must be a Series')
    if u.m != c.m:
        raise DimensionError('series reads %d inputs, the signal has %d' % (c.m, u.m))
    if growth is not None:
        check_convergence_domain(u, growth, c.m)
    words = [word for component in c._components for word in component]
    table = iterated_integrals(words, u)
    y = np.zeros((u.samples, c.ell))
    for index, component in enumerate(c._components):
        for word, value in component.items():
            y[:, index] += float(value) * table[word]
    return y


class TaylorResponse(NamedTuple):
    """``y(t) = Σ_k coefficients[k] (t - t0)^k``"""
    coefficients: Tuple[Fraction, ...]

    def as_floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.coefficients])

    def evaluate(self, t) -> np.ndarray:
        # numpy wants the leading coefficient first
        return np.polyval(self.as_floats()[::-1], np.asarray(t, dtype=float))


def natural_response_taylor(c: Series, order: Optional[int] = None) -> List[TaylorResponse]:
    """Zero-input response of every component as exact Taylor coefficients ``(c_i, x0^k)/k!``."""
    if not isinstance(c, Series):
        raise TypeError('parameter "c" must be a Series')
    if order is None:
        order = c.truncation
    _check_non_negative(order, 'order')
    if order > c.truncation:
        raise TruncationError('order %d exceeds the truncation %d' % (order, c.truncation))
    responses = []
    for component in c._components:
        responses.append(TaylorResponse(tuple(
            component.get((0,) * k, Fraction(0)) / factorial(k) for k in range(order + 1)
        )))
    return responses


def natural_response(c: Series, t: Sequence[float], order: Optional[int] = None) -> np.ndarray:
    """Floats of :func:`natural_response_taylor` at times ``t``, shape ``(len(t), l)``."""
    responses = natural_response_taylor(c, order)
    return np.stack([response.evaluate(t) for response in responses], axis=-1)


class GrowthFit(NamedTuple):
    """Least-squares line through the log-transformed coefficients."""
    slope: float
    intercept: float
    r_squared: float
    M: float
    orders: Tuple[int, ...]


def _log_abs(value: Fraction) -> float:
    # big rationals stay out of float range until the logarithm
    value = abs(Fraction(value))
    return log(value.numerator) - log(value.denominator)


def growth_transform(coefficients: Sequence[Fraction], mode: Text, start: int, stop: Optional[int]) -> Tuple[np.ndarray, np.ndarray]:
    """``(orders, ln|c_k|)`` for the global mode or ``(orders, ln(|c_k|/k!))`` for the local one."""
    if mode not in ('local', 'global'):
        raise ValueError('parameter "mode" must be "local" or "global": %s' % mode)
    _check_non_negative(start, 'start')
    if stop is None:
        stop = len(coefficients) - 1
    orders, values = [], []
    for k in range(start, min(stop, len(coefficients) - 1) + 1):
        if coefficients[k] == 0:
            continue
        value = _log_abs(coefficients[k])
        if mode == 'local':
            value -= lgamma(k + 1)
        orders.append(k)
        values.append(value)
    return np.array(orders, dtype=int), np.array(values)


def growth_fit(
    coefficients: Sequence[Fraction],
    mode: Text = 'global',
    start: int = DEFAULT_FIT_FROM,
    stop: Optional[int] = None,
) -> GrowthFit:
    """Fits ``ln|c_k| ~ slope k + intercept`` over the orders ``start..stop``.

    :param coefficients: ``coefficients[k]`` belongs to words of length ``k``.
    :returns: The line, its squared Pearson correlation and ``M = exp(slope)``.
    """
    orders, values = growth_transform(coefficients, mode, start, stop)
    if len(orders) < 3:
        raise ValueError('growth fit needs at least 3 nonzero coefficients, got %d' % len(orders))
    x = orders.astype(float)
    design = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, values, rcond=None)
    if np.ptp(values) == 0:
        r_squared = 1.0
    else:
        r_squared = float(np.corrcoef(x, values)[0, 1] ** 2)
    logger.debug('growth fit (%s) over orders %d..%d: slope %.6f', mode, orders[0], orders[-1], slope)
    return GrowthFit(float(slope), float(intercept), r_squared, float(np.exp(slope)), tuple(int(k) for k in orders))


_CSV_FORMAT = '%%.%dg' % FLOAT_SIGNIFICANT_DIGITS


def _format_row(values: Iterable[float]) -> Text:
    return ','.join(_CSV_FORMAT % v for v in values)


def format_trace_csv(t: np.ndarray, y: np.ndarray) -> Text:
    """CSV text with columns ``t,y1..yl``."""
    y = np.asarray(y).reshape(len(t), -1)
    header = ','.join(['t'] + ['y%d' % i for i in range(1, y.shape[1] + 1)])
    lines = [header] + [_format_row([ti] + list(row)) for ti, row in zip(t, y)]
    return '\n'.join(lines) + '\n'


def write_trace_csv(path: Text, t: np.ndarray, y: np.ndarray):
    y = np.asarray(y).reshape(len(t), -1)
    header = ','.join(['t'] + ['y%d' % i for i in range(1, y.shape[1] + 1)])
    np.savetxt(path, np.column_stack([t, y]), delimiter=',', header=header, comments='', fmt=_CSV_FORMAT)


def write_fit_csv(path: Text, orders: Sequence[int], values: Sequence[float], fit: GrowthFit):
    """Columns ``order,value,fitted``; ``value`` is the log-transformed coefficient."""
    orders = np.asarray(orders, dtype=float)
    fitted = fit.slope * orders + fit.intercept
    np.savetxt(path, np.column_stack([orders, values, fitted]), delimiter=',', header='order,value,fitted', comments='', fmt=_CSV_FORMAT)
