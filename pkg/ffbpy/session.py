from typing import Text, List, Optional, Union

from .constants import DEFAULT_INVERSE_METHOD, DEFAULT_CONCURRENCY, TAYLOR_DEGREE_MARGIN
from .common import _setup_compute_setting, _ComputeSetting
from .series import Series, shuffle_series
from .composition import compose, mod_compose
from .feedback import AnySeries, RadiusReport, group_inverse, feedback_product, radius_local_inverse, radius_global_inverse
from .realization import Realization, series_from_realization, closed_loop_realization, load_realization
from .fliess import TaylorResponse, natural_response_taylor


class Session:
    def __init__(self,
        max_degree: int,
        method: Text = DEFAULT_INVERSE_METHOD,
        concurrency: int = DEFAULT_CONCURRENCY,
    ):
        """Create :class:`Session` instance by given parameters.

        :param max_degree: Longest word length kept in every result.
        :param method: How group inverses are computed, ``'antipode'`` or ``'fixed_point'``.
        :param concurrency: Number of worker processes for the parallel operations.
        """
        self._setting = _setup_compute_setting(max_degree, method, concurrency)

    @property
    def setting(self) -> _ComputeSetting:
        return self._setting

    def _cap(self, c: Series) -> Series:
        return c.truncate(min(c.truncation, self._setting['max_degree']))

    def shuffle(self, c: Series, d: Series) -> Series:
        return shuffle_series(self._cap(c), self._cap(d))

    def compose(self, c: Series, d: Series) -> Series:
        return compose(self._cap(c), self._cap(d))

    def mod_compose(self, c: Series, d: Series) -> Series:
        return mod_compose(self._cap(c), self._cap(d))

    def invert(self, c: AnySeries) -> AnySeries:
        """Feedback group inverse with the session's method."""
        return group_inverse(c, self._setting['method'], self._setting['max_degree'], self._setting['concurrency'])

    def feedback(self, c: AnySeries, d: AnySeries) -> AnySeries:
        """Generating series of ``c`` closed by ``d``."""
        return feedback_product(c, d, self._setting['max_degree'], self._setting['method'], self._setting['concurrency'])

    def load(self, path: Text) -> Realization:
        """Reads a realization JSON file at the working Taylor degree."""
        return load_realization(path, self._setting['max_degree'] + TAYLOR_DEGREE_MARGIN)

    def realize(self, realization: Union[Realization, Text]) -> Series:
        if not isinstance(realization, Realization):
            realization = self.load(realization)
        return series_from_realization(realization, self._setting['max_degree'], self._setting['concurrency'])

    def closed_loop(self, plant: Union[Realization, Text], controller: Union[Realization, Text]) -> Series:
        """Series of the closed loop computed from the realizations, the oracle for :meth:`feedback`."""
        if not isinstance(plant, Realization):
            plant = self.load(plant)
        if not isinstance(controller, Realization):
            controller = self.load(controller)
        return self.realize(closed_loop_realization(plant, controller))

    def respond(self, c: Series, order: Optional[int] = None) -> List[TaylorResponse]:
        if order is None:
            order = min(c.truncation, self._setting['max_degree'])
        return natural_response_taylor(c, order)

    def radius(self, K: float, M: float, m: int, mode: Text = 'local') -> RadiusReport:
        if mode == 'local':
            return radius_local_inverse(K, M, m)
        if mode == 'global':
            return radius_global_inverse(K, M, m)
        raise ValueError('parameter "mode" must be "local" or "global": %s' % mode)
