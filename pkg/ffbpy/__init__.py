from .session import Session
from .common import Word, Alphabet, AnyRational, FormatError, DimensionError, TruncationError, ConvergenceError
from .words import WordPolynomial, WordTensorPolynomial, parse_word, format_word, shuffle, shuffle_adjoint, catenate
from .series import Series, GrowthConstants, parse_series, format_series, read_series, write_series, shuffle_series, order, distance
from .composition import compose, mod_compose, comp_inverse_fixed_point
from .hopf import CoordinateMap, HopfMonomial, HopfPolynomial, HopfTensor, HopfAlgebra, hopf_algebra, antipode, antipode_inverse, eval_hopf
from .feedback import DeltaSeries, RadiusReport, group_product, group_inverse, feedback_product, radius_local_inverse, radius_global_inverse
from .realization import TaylorField, Realization, series_from_realization, closed_loop_realization, inverse_realization, load_realization, load_fixture
from .fliess import SampledSignal, TaylorResponse, eval_fliess, iterated_integral, natural_response_taylor, growth_fit
