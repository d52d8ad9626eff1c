from fractions import Fraction

ULTRAMETRIC_SIGMA = Fraction(1, 2)
TAYLOR_DEGREE_MARGIN = 2
DEFAULT_INVERSE_METHOD = 'antipode'
INVERSE_METHODS = ('antipode', 'fixed_point')
DEFAULT_CONCURRENCY = 1
FLOAT_SIGNIFICANT_DIGITS = 9
DEFAULT_FIT_FROM = 3
RADIUS_RELATIVE_TOLERANCE = 1e-9
RADIUS_PRINTED_TOLERANCE = 5e-3
FIXTURE_DIRECTORY = 'fixtures'
