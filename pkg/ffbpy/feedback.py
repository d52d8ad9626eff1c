"""The output feedback group and the feedback product.

Series of the form ``δ + c``, ``δ`` standing for the identity operator, form
a group under ``(δ + c)∘(δ + d) = δ + d + cõd``. The closed loop
``y = F_c[u + F_d[y]]`` has the generating series ``c@d = cõ(-d∘c)⁻¹``.
"""
from typing import Text, NamedTuple, Optional, Union
import math
import logging

from .constants import DEFAULT_INVERSE_METHOD, DEFAULT_CONCURRENCY
from .common import DimensionError, _check_alphabet, _check_method, _check_non_negative
from .series import Series, is_linear, scale
from .composition import compose, mod_compose, comp_inverse_fixed_point
from .hopf import antipode_inverse

logger = logging.getLogger(__name__)


class DeltaSeries:
    """``δ + proper_part``; the ``δ`` is implicit.

    :param proper_part: Square series (as many components as inputs).
    """
    __slots__ = ('_proper_part',)

    def __init__(self, proper_part: Series):
        if not isinstance(proper_part, Series):
            raise TypeError('parameter "proper_part" must be a Series')
        if proper_part.ell != proper_part.m:
            raise DimensionError('δ + c needs a square c, got m=%d and l=%d' % (proper_part.m, proper_part.ell))
        self._proper_part = proper_part

    @classmethod
    def identity(cls, m: int, truncation: int) -> 'DeltaSeries':
        return cls(Series.zero(m, m, truncation))

    @property
    def proper_part(self) -> Series:
        return self._proper_part

    @property
    def m(self) -> int:
        return self._proper_part.m

    @property
    def truncation(self) -> int:
        return self._proper_part.truncation

    def is_identity(self) -> bool:
        return self._proper_part.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeltaSeries):
            return NotImplemented
        return self._proper_part == other._proper_part

    def __hash__(self) -> int:
        return hash(('δ', self._proper_part))

    def __repr__(self) -> str:
        return 'DeltaSeries(δ + %r)' % (self._proper_part,)


AnySeries = Union[Series, DeltaSeries]


def _inverse(c: Series, truncation: int, method: Text, concurrency: int) -> Series:
    method = _check_method(method)
    logger.debug('inverting with %s at N=%d', method, truncation)
    if method == 'fixed_point':
        return comp_inverse_fixed_point(c, truncation)
    return antipode_inverse(c, truncation, concurrency)


def _common_truncation(truncation: Optional[int], *series: Series) -> int:
    bound = min(c.truncation for c in series)
    if truncation is None:
        return bound
    _check_non_negative(truncation, 'truncation')
    return min(truncation, bound)


def group_product(c: DeltaSeries, d: DeltaSeries) -> DeltaSeries:
    """``(δ + c)∘(δ + d) = δ + d + cõd``"""
    if not isinstance(c, DeltaSeries) or not isinstance(d, DeltaSeries):
        raise TypeError('group_product: operands must be DeltaSeries')
    if c.m != d.m:
        raise DimensionError('group_product: alphabets differ (m=%d and m=%d)' % (c.m, d.m))
    return DeltaSeries(d.proper_part + mod_compose(c.proper_part, d.proper_part))


def group_inverse(
    c: AnySeries,
    method: Text = DEFAULT_INVERSE_METHOD,
    truncation: Optional[int] = None,
    concurrency: int = DEFAULT_CONCURRENCY,
) -> AnySeries:
    """Inverse in the feedback group.

    A :class:`Series` is read as the proper part ``c`` and ``c⁻¹`` is returned;
    a :class:`DeltaSeries` gives a :class:`DeltaSeries`.

    :param method: ``'antipode'`` or ``'fixed_point'``; both give the same series.
    """
    if isinstance(c, DeltaSeries):
        return DeltaSeries(group_inverse(c.proper_part, method, truncation, concurrency))
    if not isinstance(c, Series):
        raise TypeError('parameter "c" must be a Series or DeltaSeries')
    return _inverse(c, _common_truncation(truncation, c), method, concurrency)


def loop_inverse(
    c: Series,
    d: Series,
    method: Text = DEFAULT_INVERSE_METHOD,
    truncation: Optional[int] = None,
    concurrency: int = DEFAULT_CONCURRENCY,
) -> Series:
    """``(-d∘c)⁻¹``, the series the plant sees in place of its input."""
    _check_loop(c, d)
    truncation = _common_truncation(truncation, c, d)
    return _inverse(scale(-1, compose(d, c)).truncate(truncation), truncation, method, concurrency)


def _check_loop(c: Series, d: Series):
    if not isinstance(c, Series) or not isinstance(d, Series):
        raise TypeError('feedback operands must be Series or DeltaSeries')
    if c.ell != d.m or d.ell != c.m:
        raise DimensionError(
            'feedback needs l_c = m_d and l_d = m_c, got l_c=%d m_d=%d l_d=%d m_c=%d' % (c.ell, d.m, d.ell, c.m))


def feedback_product(
    c: AnySeries,
    d: AnySeries,
    truncation: Optional[int] = None,
    method: Text = DEFAULT_INVERSE_METHOD,
    concurrency: int = DEFAULT_CONCURRENCY,
) -> AnySeries:
    """Generating series ``c@d`` of the plant ``c`` closed by the feedback ``d``.

    Either operand may carry a direct feedthrough ``δ``:

    - ``c@(δ + d') = cõ(-c - d'∘c)⁻¹``, so ``c@δ = (-c)⁻¹``
    - ``(δ + c')@d = δ + e + c'õe`` with ``e = (-dõc')⁻¹``, so ``δ@d = δ + (-d)⁻¹``

    Feedthrough on both sides is an algebraic loop and is rejected.
    """
    if isinstance(c, DeltaSeries) and isinstance(d, DeltaSeries):
        raise ValueError('feedback of two δ-series is an algebraic loop')
    if isinstance(c, DeltaSeries):
        inner = c.proper_part
        if not isinstance(d, Series):
            raise TypeError('parameter "d" must be a Series or DeltaSeries')
        if d.m != inner.m or d.ell != inner.m:
            raise DimensionError('δ + c feedback needs d square over the same inputs')
        truncation = _common_truncation(truncation, inner, d)
        e = _inverse(scale(-1, mod_compose(d, inner)).truncate(truncation), truncation, method, concurrency)
        return DeltaSeries(e + mod_compose(inner, e))
    if isinstance(d, DeltaSeries):
        inner = d.proper_part
        _check_loop(c, inner)
        truncation = _common_truncation(truncation, c, inner)
        loop = scale(-1, c + compose(inner, c)).truncate(truncation)
        return mod_compose(c, _inverse(loop, truncation, method, concurrency))
    e = loop_inverse(c, d, method, truncation, concurrency)
    return mod_compose(c, e)


def linear_closed_form(c: Series, d: Series, truncation: Optional[int] = None, method: Text = DEFAULT_INVERSE_METHOD) -> Series:
    """``c + (-c∘d)⁻¹∘c``, equal to ``c@d`` when ``c`` is linear."""
    _check_loop(c, d)
    if not is_linear(c):
        raise ValueError('the closed form needs a linear c (words x0^k x_j only)')
    truncation = _common_truncation(truncation, c, d)
    inverse = _inverse(scale(-1, compose(c, d)).truncate(truncation), truncation, method, DEFAULT_CONCURRENCY)
    return (c + compose(inverse, c)).truncate(truncation)


class RadiusReport(NamedTuple):
    """Growth amplification of an inverse and the resulting convergence radius."""
    amplification: float
    geometric_constant: float
    radius: float


def _check_growth(K: float, M: float, m: int):
    for name, value in (('K', K), ('M', M)):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise TypeError('parameter "%s" must be a number' % name)
        if not value > 0 or math.isinf(value):
            raise ValueError('parameter "%s" must be positive and finite: %s' % (name, value))
    _check_alphabet(m)


def amplification_local(K: float, m: int) -> float:
    """``1/(1 - mK ln(1 + 1/(mK)))``"""
    _check_growth(K, 1, m)
    mk = m * K
    return 1.0 / (1.0 - mk * math.log1p(1.0 / mk))


def amplification_global(K: float, m: int) -> float:
    """``1/ln(1 + 1/(mK))``"""
    _check_growth(K, 1, m)
    return 1.0 / math.log1p(1.0 / (m * K))


def _report(amplification: float, M: float, m: int) -> RadiusReport:
    constant = amplification * M
    return RadiusReport(amplification, constant, 1.0 / (constant * (m + 1)))


def radius_local_inverse(K: float, M: float, m: int) -> RadiusReport:
    """Smallest geometric growth constant of ``c⁻¹`` for a locally convergent ``c``."""
    _check_growth(K, M, m)
    return _report(amplification_local(K, m), M, m)


def radius_global_inverse(K: float, M: float, m: int) -> RadiusReport:
    """Smallest geometric growth constant of ``c⁻¹`` for a globally convergent ``c``."""
    _check_growth(K, M, m)
    return _report(amplification_global(K, m), M, m)
