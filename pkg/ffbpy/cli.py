"""Command line front end, installed as ``ffbpy``.

Exit codes: 1 for malformed input, 2 for dimension or truncation failures,
3 when ``reproduce-axle`` finds a disagreement.
"""
from typing import Text, Optional, List, Tuple, Callable
from fractions import Fraction
import functools
import json
import logging
import sys

import click

from .constants import (
    DEFAULT_CONCURRENCY, DEFAULT_FIT_FROM, FLOAT_SIGNIFICANT_DIGITS, RADIUS_PRINTED_TOLERANCE, TAYLOR_DEGREE_MARGIN,
)
from .common import (
    FormatError, DimensionError, TruncationError, ConvergenceError,
    _check_method, _format_fraction, _format_float,
)
from .words import parse_word, format_word
from .series import Series, read_series, format_series, shuffle_series
from .composition import compose, mod_compose
from .hopf import CoordinateMap, antipode, basis_dimensions, table_dimensions
from .feedback import group_inverse, feedback_product, radius_local_inverse, radius_global_inverse
from .realization import (
    load_realization, load_fixture, series_from_realization, closed_loop_realization, realization_to_json,
)
from .fliess import SampledSignal, eval_fliess, natural_response_taylor, growth_fit, growth_transform, format_trace_csv, write_trace_csv, write_fit_csv

logger = logging.getLogger(__name__)

_METHODS = click.Choice(['antipode', 'fixedpoint', 'fixed_point'])
_MODES = click.Choice(['local', 'global'])


def _exit_codes(f: Callable) -> Callable:
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        logger.info('%s started', f.__name__)
        try:
            result = f(*args, **kwargs)
        except (DimensionError, TruncationError, ConvergenceError) as e:
            click.echo('error: %s' % e, err=True)
            sys.exit(2)
        except (FormatError, TypeError, ValueError) as e:
            click.echo('error: %s' % e, err=True)
            sys.exit(1)
        logger.info('%s finished', f.__name__)
        return result
    return wrapper


def _emit(text: Text, output: Optional[Text]):
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


_output_option = click.option('-o', '--output', type=click.Path(dir_okay=False), default=None,
                              help='Write the result to this file instead of stdout.')


class _Group(click.Group):
    """Reports click's own usage and file errors with exit code 1."""

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(1)
        except click.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


@click.group(cls=_Group)
@click.option('--verbose', is_flag=True, help='Log debug records to stderr.')
def cli(verbose: bool):
    """Truncated noncommutative power series and the output feedback group."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG)


@cli.command()
@click.argument('a', type=click.Path(exists=True, dir_okay=False))
@click.argument('b', type=click.Path(exists=True, dir_okay=False))
@_output_option
@_exit_codes
def shuffle(a: Text, b: Text, output: Optional[Text]):
    """Shuffle product of two series files."""
    _emit(format_series(shuffle_series(read_series(a), read_series(b))), output)


@cli.command(name='compose')
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.argument('d', type=click.Path(exists=True, dir_okay=False))
@_output_option
@_exit_codes
def compose_command(c: Text, d: Text, output: Optional[Text]):
    """Composition product C∘D."""
    _emit(format_series(compose(read_series(c), read_series(d))), output)


@cli.command()
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.argument('d', type=click.Path(exists=True, dir_okay=False))
@_output_option
@_exit_codes
def modcompose(c: Text, d: Text, output: Optional[Text]):
    """Modified composition product CõD."""
    _emit(format_series(mod_compose(read_series(c), read_series(d))), output)


@cli.command()
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.option('--method', type=_METHODS, default='antipode', show_default=True)
@click.option('--max-degree', type=int, default=None, help='Defaults to the truncation of C.')
@click.option('--concurrency', type=int, default=DEFAULT_CONCURRENCY, show_default=True)
@_output_option
@_exit_codes
def invert(c: Text, method: Text, max_degree: Optional[int], concurrency: int, output: Optional[Text]):
    """Feedback group inverse of δ + C."""
    _emit(format_series(group_inverse(read_series(c), _check_method(method), max_degree, concurrency)), output)


@cli.command(name='antipode')
@click.option('--m', 'm', type=int, required=True, help='Number of inputs.')
@click.option('--component', type=int, required=True)
@click.option('--word', type=str, required=True, help='For example x0x1, or e for the empty word.')
@_exit_codes
def antipode_command(m: int, component: int, word: Text):
    """Antipode of the coordinate map a[COMPONENT,WORD]."""
    click.echo(str(antipode(CoordinateMap(component, parse_word(word, m)), m)))


@cli.command(name='hopf-dims')
@click.option('--m', 'm', type=int, required=True)
@click.option('--max-k', type=int, required=True)
@_exit_codes
def hopf_dims(m: int, max_k: int):
    """Dimensions of the graded pieces, enumerated and from the closed form."""
    click.echo('k dim_V dim_H closed_V closed_H')
    for k in range(max_k + 1):
        counted, closed = basis_dimensions(k, m), table_dimensions(k, m)
        click.echo('%d %d %d %d %d' % (k, counted[0], counted[1], closed[0], closed[1]))


@cli.command()
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.argument('d', type=click.Path(exists=True, dir_okay=False))
@click.option('--max-degree', type=int, default=None)
@click.option('--method', type=_METHODS, default='antipode', show_default=True)
@click.option('--concurrency', type=int, default=DEFAULT_CONCURRENCY, show_default=True)
@_output_option
@_exit_codes
def feedback(c: Text, d: Text, max_degree: Optional[int], method: Text, concurrency: int, output: Optional[Text]):
    """Feedback product C@D."""
    result = feedback_product(read_series(c), read_series(d), max_degree, _check_method(method), concurrency)
    _emit(format_series(result), output)


@cli.command()
@click.argument('r', type=click.Path(exists=True, dir_okay=False))
@click.option('--max-degree', type=int, required=True)
@click.option('--concurrency', type=int, default=DEFAULT_CONCURRENCY, show_default=True)
@_output_option
@_exit_codes
def realize(r: Text, max_degree: int, concurrency: int, output: Optional[Text]):
    """Generating series of a realization JSON file."""
    realization = load_realization(r, max_degree + TAYLOR_DEGREE_MARGIN)
    _emit(format_series(series_from_realization(realization, max_degree, concurrency)), output)


@cli.command(name='closed-loop')
@click.argument('plant', type=click.Path(exists=True, dir_okay=False))
@click.argument('controller', type=click.Path(exists=True, dir_okay=False))
@click.option('--max-degree', type=int, default=None, help='Print the closed-loop series instead of the realization.')
@click.option('--taylor-degree', type=int, default=6, show_default=True, help='Expansion degree of the printed realization.')
@_output_option
@_exit_codes
def closed_loop(plant: Text, controller: Text, max_degree: Optional[int], taylor_degree: int, output: Optional[Text]):
    """Realization of PLANT with CONTROLLER in its feedback path."""
    degree = taylor_degree if max_degree is None else max_degree + TAYLOR_DEGREE_MARGIN
    loop = closed_loop_realization(load_realization(plant, degree), load_realization(controller, degree))
    if max_degree is None:
        _emit(json.dumps(realization_to_json(loop), indent=2) + '\n', output)
    else:
        _emit(format_series(series_from_realization(loop, max_degree)), output)


@cli.command()
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.option('--order', type=int, default=None, help='Defaults to the truncation of C.')
@_exit_codes
def respond(c: Text, order: Optional[int]):
    """Exact Taylor coefficients of the zero-input response, one "<output> <power> <value>" per line."""
    for index, response in enumerate(natural_response_taylor(read_series(c), order), start=1):
        for k, value in enumerate(response.coefficients):
            click.echo('%d %d %s' % (index, k, _format_fraction(value)))


@cli.command()
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='CSV with columns t,u1..um on a uniform grid.')
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None, help='Write the trace here.')
@_exit_codes
def simulate(c: Text, input_path: Text, csv_path: Optional[Text]):
    """Evaluates the Fliess operator of C on a sampled input."""
    u = SampledSignal.read_csv(input_path)
    y = eval_fliess(read_series(c), u)
    if csv_path is None:
        click.echo(format_trace_csv(u.grid(), y), nl=False)
    else:
        write_trace_csv(csv_path, u.grid(), y)


@cli.command()
@click.option('--mode', type=_MODES, required=True)
@click.option('--K', 'K', type=float, required=True)
@click.option('--M', 'M', type=float, required=True)
@click.option('--inputs', type=int, required=True)
@_exit_codes
def radius(mode: Text, K: float, M: float, inputs: int):
    """Growth amplification of the group inverse and its convergence radius."""
    report = radius_local_inverse(K, M, inputs) if mode == 'local' else radius_global_inverse(K, M, inputs)
    for name, value in zip(report._fields, report):
        click.echo('%s %s' % (name, _format_float(value, FLOAT_SIGNIFICANT_DIGITS)))


@cli.command()
@click.argument('c', type=click.Path(exists=True, dir_okay=False))
@click.option('--component', type=int, default=1, show_default=True)
@click.option('--mode', type=_MODES, default='global', show_default=True)
@click.option('--from', 'start', type=int, default=DEFAULT_FIT_FROM, show_default=True)
@click.option('--to', 'stop', type=int, default=None)
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None, help='Write order,value,fitted here.')
@_exit_codes
def growthfit(c: Text, component: int, mode: Text, start: int, stop: Optional[int], csv_path: Optional[Text]):
    """Fits the growth of the coefficients (C_COMPONENT, x0^k)."""
    series = read_series(c)
    coefficients = [series.coefficient(component, (0,) * k) for k in range(series.truncation + 1)]
    fit = growth_fit(coefficients, mode, start, stop)
    for name in ('slope', 'intercept', 'r_squared', 'M'):
        click.echo('%s %s' % (name, _format_float(getattr(fit, name), FLOAT_SIGNIFICANT_DIGITS)))
    if csv_path is not None:
        orders, values = growth_transform(coefficients, mode, start, stop)
        write_fit_csv(csv_path, orders, values, fit)


_AXLE_LOOP_COEFFICIENTS = {
    1: {'x0': 4, 'x1': 1, 'x0x0x0': -1592, 'x0x0x0x0x0': 617616},
    2: {'x0x0': 80, 'x0x0x0x0': -31520, 'x0x0x0x0x0': 3200, 'x0x0x0x0x0x0': 11841600},
}
_AXLE_RESPONSE = {
    1: {1: Fraction(4), 3: Fraction(-796, 3), 5: Fraction(25734, 5), 6: Fraction(-4000, 9), 7: Fraction(-13528798, 315)},
    2: {2: Fraction(40), 4: Fraction(-3940, 3), 5: Fraction(80, 3), 6: Fraction(49340, 3)},
}
_AXLE_PLANT = {
    1: {'x1': 1, 'x1x2x2': -1, 'x1x2x2x2x2': 1, 'x1x2x2x2x2x2x2': -1},
    2: {'x1x2': 1, 'x1x2x2x2': -1, 'x1x2x2x2x2x2': 1},
}


def _golden(series: Series, table, name: Text) -> Tuple[Text, bool]:
    failures = []
    skipped = 0
    for i, coefficients in table.items():
        for word, expected in coefficients.items():
            word = parse_word(word)
            if len(word) > series.truncation:
                skipped += 1
            elif series.coefficient(i, word) != expected:
                failures.append('(%d, %s) = %s' % (i, format_word(word), series.coefficient(i, word)))
    if skipped:
        logger.info('%s: %d reference coefficients lie beyond N=%d', name, skipped, series.truncation)
    for failure in failures:
        logger.warning('%s: unexpected %s', name, failure)
    return name, len(failures) == 0


def reproduce_axle(max_degree: int, antipode_degree: int, concurrency: int = DEFAULT_CONCURRENCY) -> List[Tuple[Text, bool]]:
    """Runs the differential axle under PI control through every route; returns ``(check, passed)`` pairs."""
    degree = max_degree + TAYLOR_DEGREE_MARGIN
    plant, controller = load_fixture('axle', degree), load_fixture('pi_controller', degree)
    c = series_from_realization(plant, max_degree)
    d = series_from_realization(controller, max_degree)
    checks = [_golden(c, _AXLE_PLANT, 'plant series')]
    expected_d = Series.from_text(['4 e + 2 x1', '20 e + 10 x2'], 2, max_degree)
    checks.append(('controller series', d == expected_d))

    loop = feedback_product(c, d, max_degree, 'fixed_point')
    checks.append(_golden(loop, _AXLE_LOOP_COEFFICIENTS, 'closed-loop coefficients'))
    oracle = series_from_realization(closed_loop_realization(plant, controller), max_degree, concurrency)
    checks.append(('feedback product = closed-loop realization', loop == oracle))

    small = min(antipode_degree, max_degree)
    by_antipode = feedback_product(c.truncate(small), d.truncate(small), small, 'antipode', concurrency)
    checks.append(('antipode route = fixed point route', by_antipode == loop.truncate(small)))

    responses = natural_response_taylor(loop)
    matched = all(
        responses[i - 1].coefficients[k] == value
        for i, powers in _AXLE_RESPONSE.items() for k, value in powers.items() if k <= max_degree
    )
    checks.append(('natural response', matched))

    report = radius_global_inverse(20, 1, 2)
    checks.append(('global inverse growth constant 40.50', abs(report.geometric_constant - 40.50) < RADIUS_PRINTED_TOLERANCE))
    return checks


@cli.command(name='reproduce-axle')
@click.option('--max-degree', type=int, default=7, show_default=True)
@click.option('--antipode-degree', type=int, default=5, show_default=True,
              help='Truncation for the antipode route.')
@click.option('--concurrency', type=int, default=DEFAULT_CONCURRENCY, show_default=True)
@_exit_codes
def reproduce_axle_command(max_degree: int, antipode_degree: int, concurrency: int):
    """Differential axle under PI control, every route cross-checked."""
    checks = reproduce_axle(max_degree, antipode_degree, concurrency)
    for name, passed in checks:
        click.echo('%s %s' % ('PASS' if passed else 'FAIL', name))
    if not all(passed for _, passed in checks):
        sys.exit(3)


def main():
    cli()
