"""Composition products of series and the fixed-point composition inverse.

Both products are computed by folding every word of ``c`` from its last
letter to its first, each letter ``x_i`` acting on the running series ``e``:

- :func:`compose`: ``x_i . e -> x0 (d_i ⧢ e)`` with ``d_0 = 1``
- :func:`mod_compose`: ``x_i . e -> x_i e + x0 (d_i ⧢ e)`` with ``d_0 = 0``

Words of ``c`` sharing a suffix share the folded image of that suffix.
"""
from typing import Dict, List, Optional, Text
from fractions import Fraction
import logging

from .common import Word, DimensionError, TruncationError, ConvergenceError, _check_non_negative
from .series import Series, Coefficients, _shuffle_dicts, order, scale

logger = logging.getLogger(__name__)

_UNIT: Coefficients = {(): Fraction(1)}


def _suffix_budgets(c: Series, truncation: int) -> Dict[Word, int]:
    """Maps each suffix of a word of ``c`` to the longest image word still needed.

    Every letter prepends at least one letter to the image, so a suffix that is
    always preceded by ``p`` or more letters only matters up to ``truncation - p``.
    """
    budgets: Dict[Word, int] = {}
    for component in c._components:
        for word in component:
            if len(word) > truncation:
                continue
            for start in range(len(word) + 1):
                suffix = word[start:]
                budget = truncation - start
                if budgets.get(suffix, -1) < budget:
                    budgets[suffix] = budget
    return budgets


def _fold_images(c: Series, d: Series, truncation: int, modified: bool) -> Dict[Word, Coefficients]:
    budgets = _suffix_budgets(c, truncation)
    images: Dict[Word, Coefficients] = {(): _UNIT}
    # shorter suffixes first so the tail image is always ready
    for suffix in sorted(budgets, key=len):
        if len(suffix) == 0:
            continue
        budget = budgets[suffix]
        letter, tail = suffix[0], images[suffix[1:]]
        image: Coefficients = {}
        if letter == 0:
            # both products send x0 to left multiplication by x0
            for word, value in tail.items():
                if len(word) < budget:
                    image[(0,) + word] = value
        else:
            for word, value in _shuffle_dicts(d._components[letter - 1], tail, budget - 1).items():
                image[(0,) + word] = value
            if modified:
                for word, value in tail.items():
                    if len(word) < budget:
                        key = (letter,) + word
                        image[key] = image.get(key, Fraction(0)) + value
        images[suffix] = {w: v for w, v in image.items() if v != 0}
    return images


def _assemble(c: Series, images: Dict[Word, Coefficients], truncation: int) -> List[Coefficients]:
    components: List[Coefficients] = []
    for component in c._components:
        result: Coefficients = {}
        for word, coefficient in component.items():
            if len(word) > truncation:
                continue
            for image_word, value in images[word].items():
                result[image_word] = result.get(image_word, Fraction(0)) + coefficient * value
        components.append(result)
    return components


def compose(c: Series, d: Series) -> Series:
    """Composition product ``c∘d``, the generating series of ``F_c∘F_d``.

    ``c`` is read over an alphabet with one input letter per component of ``d``;
    the result lives over the alphabet of ``d`` and has the components of ``c``.
    """
    if not isinstance(c, Series) or not isinstance(d, Series):
        raise TypeError('compose: operands must be Series')
    if c.m != d.ell:
        raise DimensionError('compose: c has %d input letters but d has %d components' % (c.m, d.ell))
    truncation = min(c.truncation, d.truncation)
    images = _fold_images(c, d, truncation, modified=False)
    return Series._wrap(_assemble(c, images, truncation), d.m, truncation)


def mod_compose(c: Series, d: Series) -> Series:
    """Modified composition product ``cõd``, the generating series of ``F_c∘(I + F_d)``."""
    if not isinstance(c, Series) or not isinstance(d, Series):
        raise TypeError('mod_compose: operands must be Series')
    if c.m != d.m:
        raise DimensionError('mod_compose: alphabets differ (m=%d and m=%d)' % (c.m, d.m))
    if d.ell != c.m:
        raise DimensionError('mod_compose: d needs %d components, got %d' % (c.m, d.ell))
    truncation = min(c.truncation, d.truncation)
    images = _fold_images(c, d, truncation, modified=True)
    return Series._wrap(_assemble(c, images, truncation), c.m, truncation)


def comp_inverse_fixed_point(c: Series, truncation: Optional[int] = None) -> Series:
    """Group inverse of ``δ + c`` by iterating ``e -> (-c)õe`` from ``e = -c``.

    The map is a contraction in the ultrametric, so the increment's order grows
    by at least one per step and the iteration settles within ``truncation + 1``
    steps.

    :param truncation: Optional. Defaults to the truncation of ``c``.
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
    minus_c = scale(-1, c.truncate(truncation))
    current = minus_c
    for step in range(1, truncation + 3):
        following = mod_compose(minus_c, current)
        increment = order(following - current)
        logger.debug('fixed point step %d: increment order %s', step, increment)
        if increment > truncation:
            return following
        current = following
    raise ConvergenceError('fixed point iteration did not settle in %d steps' % (truncation + 2))
