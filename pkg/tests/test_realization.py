from fractions import Fraction
import json
import math
import numpy as np
import pytest
import ffbpy
from ffbpy.words import parse_word
from ffbpy.series import Series
from ffbpy.fliess import SampledSignal, eval_fliess, natural_response_taylor, growth_fit
from ffbpy.feedback import feedback_product, group_inverse
from ffbpy.realization import (
    TaylorField, Realization, lie_derivative, series_from_realization, drift_coefficients,
    closed_loop_realization, inverse_realization, linear_realization,
    parse_realization, load_realization, load_fixture, realization_to_json,
)

S = Series.from_text


@pytest.fixture(scope='module')
def axle():
    return load_fixture('axle', 7)


@pytest.fixture(scope='module')
def controller():
    return load_fixture('pi_controller', 7)


def test_taylor_field_arithmetic():
    w0 = TaylorField.variable(2, 3, 0)
    w1 = TaylorField.variable(2, 3, 1)
    one = TaylorField.constant(2, 3, 1)
    p = (w0 + one) * (w0 - one)
    assert p == w0 * w0 - one
    assert p.constant_term() == -1
    assert (w0 * w0 * w0 * w1).is_zero()
    assert (2 * w1).terms == {(0, 1): 2}
    assert p.derivative(0) == (w0 * 2).truncate(2)
    with pytest.raises(ffbpy.TruncationError):
        one.truncate(0).derivative(0)
    with pytest.raises(ffbpy.TruncationError):
        one.truncate(4)
    with pytest.raises(ffbpy.DimensionError):
        w0 + TaylorField.variable(1, 3, 0)


def test_taylor_field_shift_embed():
    w = TaylorField.variable(1, 3, 0)
    shifted = (w * w).shift([1])
    assert shifted.terms == {(2,): 1, (1,): 2, (0,): 1}
    assert w.embed(3, 1).terms == {(0, 1, 0): 1}
    with pytest.raises(ffbpy.DimensionError):
        w.embed(1, 1)


def test_lie_derivative():
    w0 = TaylorField.variable(2, 3, 0)
    w1 = TaylorField.variable(2, 3, 1)
    # rotation field (-w1, w0) applied to w0 * w1
    result = lie_derivative([-w1, w0], w0 * w1)
    assert result == (w0 * w0 - w1 * w1).truncate(2)
    with pytest.raises(ffbpy.DimensionError):
        lie_derivative([w0], w0)


def test_axle_series(axle):
    assert axle.n == 3
    assert axle.m == 2
    assert axle.ell == 2
    c = series_from_realization(axle, 5)
    assert c == S(['x1 - x1x2x2 + x1x2x2x2x2', 'x1x2 - x1x2x2x2'], 2, 5)


def test_pi_controller(controller):
    d = series_from_realization(controller, 3)
    assert d == S(['4 e + 2 x1', '20 e + 10 x2'], 2, 3)


def test_small_angle_axle():
    R = load_fixture('small_angle_axle', 6)
    assert series_from_realization(R, 4) == S(['x1', 'x1x2'], 2, 4)


def test_realization_degree(axle):
    with pytest.raises(ffbpy.TruncationError):
        series_from_realization(axle, 8)
    with pytest.raises(TypeError):
        series_from_realization('axle', 3)


def test_linear_realization():
    R = linear_realization([[-1]], [[1]], [[1]], z0=[1], degree=6)
    c = series_from_realization(R, 4)
    assert c == S(['e - x0 + x0x0 - x0x0x0 + x0x0x0x0 + x1 - x0x1 + x0x0x1 - x0x0x0x1'], 1, 4)
    assert drift_coefficients(R, 4) == [[1, -1, 1, -1, 1]]
    with pytest.raises(ffbpy.DimensionError):
        linear_realization([[1, 0]], [[1]], [[1]])


def test_parallel_series(axle):
    assert series_from_realization(axle, 4, concurrency=2) == series_from_realization(axle, 4)


def test_closed_loop_matches_feedback(axle, controller):
    loop = closed_loop_realization(axle, controller)
    assert loop.n == 5
    assert loop.m == 2
    oracle = series_from_realization(loop, 4)
    c = series_from_realization(axle, 4)
    d = series_from_realization(controller, 4)
    assert feedback_product(c, d) == oracle
    assert feedback_product(c, d, method='fixed_point') == oracle
    assert oracle.coefficient(1, (0,)) == 4
    assert oracle.coefficient(2, (0, 0)) == 80


def test_closed_loop_full_degree(axle, controller):
    loop = closed_loop_realization(axle, controller)
    oracle = series_from_realization(loop, 6)
    c = series_from_realization(axle, 6)
    d = series_from_realization(controller, 6)
    assert feedback_product(c, d, method='fixed_point') == oracle
    expected = {
        (1, 'x0'): 4, (1, 'x1'): 1, (1, 'x0x0x0'): -1592, (1, 'x0x0x0x0x0'): 617616,
        (2, 'x0x0'): 80, (2, 'x0x0x0x0'): -31520, (2, 'x0x0x0x0x0'): 3200, (2, 'x0x0x0x0x0x0'): 11841600,
    }
    for (i, word), value in expected.items():
        assert oracle.coefficient(i, parse_word(word)) == value
    y1, y2 = natural_response_taylor(oracle)
    for k, value in {1: 4, 3: Fraction(-796, 3), 5: Fraction(25734, 5), 6: Fraction(-4000, 9)}.items():
        assert y1.coefficients[k] == value
    for k, value in {2: 40, 4: Fraction(-3940, 3), 5: Fraction(80, 3), 6: Fraction(49340, 3)}.items():
        assert y2.coefficients[k] == value


def test_natural_response_matches_quadrature(axle, controller):
    loop = series_from_realization(closed_loop_realization(axle, controller), 5)
    u = SampledSignal.zero(0.0, 0.2, 80001, 2)
    y = eval_fliess(loop, u)
    for index, response in enumerate(natural_response_taylor(loop)):
        np.testing.assert_allclose(y[:, index], response.evaluate(u.grid()), rtol=0, atol=1e-8)


def test_closed_loop_growth():
    loop = closed_loop_realization(load_fixture('axle', 9), load_fixture('pi_controller', 9))
    for coefficients in drift_coefficients(loop, 9):
        fit = growth_fit(coefficients, 'global', 3, 9)
        assert 0.7 * 22.549 <= fit.M <= 1.3 * 22.549


def test_linear_closed_loop():
    plant = linear_realization([[0, 1], [-2, -3]], [[0], [1]], [[1, 0]], degree=7)
    controller = linear_realization([[-1]], [[1]], [[-2]], degree=7)
    oracle = series_from_realization(closed_loop_realization(plant, controller), 5)
    c = series_from_realization(plant, 5)
    d = series_from_realization(controller, 5)
    assert feedback_product(c, d) == oracle
    with pytest.raises(ffbpy.DimensionError):
        closed_loop_realization(plant, linear_realization([[0]], [[1]], [[1], [1]]))


def test_inverse_realization(axle):
    c = series_from_realization(axle, 4)
    assert series_from_realization(inverse_realization(axle), 4) == group_inverse(c, 'antipode')
    with pytest.raises(ffbpy.DimensionError):
        inverse_realization(linear_realization([[0]], [[1, 1]], [[1]]))


def test_json_round_trip(controller, tmp_path):
    data = realization_to_json(controller)
    assert data['z0'] == [2, 2]
    path = str(tmp_path / 'controller.json')
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f)
    again = load_realization(path, 7)
    assert again.z0 == controller.z0
    assert again.g == controller.g
    assert again.h == controller.h


def test_parse_realization_fields():
    data = {
        'n': 1, 'm': 1, 'l': 1, 'z0': [1],
        'g': [[{'builtin': 'exp', 'var': 1, 'scale': '1/2'}], ['1/3']],
        'h': [{'taylor': {'2': 1}, 'center': [0]}],
    }
    R = parse_realization(data, 4)
    assert R.g[1][0].constant_term() == Fraction(1, 3)
    assert R.g[0][0].constant_term() == Fraction(math.exp(1.0)) / 2
    # z^2 about 1 is 1 + 2w + w^2
    assert R.h[0].terms == {(0,): 1, (1,): 2, (2,): 1}


@pytest.mark.parametrize('data', [
    [],
    {'n': 0, 'm': 1, 'l': 1, 'g': [[], []], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0]], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], [1]], 'h': []},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], [True]], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], ['one']], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], [{'builtin': 'tan', 'var': 1}]], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], [{'builtin': 'cos', 'var': 2}]], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], [{'taylor': {'1,0': 1}}]], 'h': [1]},
    {'n': 1, 'm': 1, 'l': 1, 'g': [[0], [{'spline': 1}]], 'h': [1]},
])
def test_parse_realization_error(data):
    with pytest.raises(ffbpy.FormatError):
        parse_realization(data, 3)


def test_load_errors(tmp_path):
    path = str(tmp_path / 'broken.json')
    with open(path, 'w', encoding='utf-8') as f:
        f.write('{"n": 1,')
    with pytest.raises(ffbpy.FormatError):
        load_realization(path, 3)
    with pytest.raises(ValueError):
        load_fixture('unicycle', 3)


def test_realization_checks():
    field = TaylorField.constant(1, 2, 1)
    with pytest.raises(ffbpy.DimensionError):
        Realization([[field]], [field], [0])
    with pytest.raises(ffbpy.DimensionError):
        Realization([[field], [field]], [field], [0, 0])
