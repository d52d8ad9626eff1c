from fractions import Fraction
import math
import numpy as np
import pytest
import ffbpy
from ffbpy.series import Series, GrowthConstants
from ffbpy.fliess import (
    SampledSignal, iterated_integrals, iterated_integral, check_convergence_domain, eval_fliess,
    natural_response_taylor, natural_response, growth_transform, growth_fit,
    format_trace_csv, write_trace_csv, write_fit_csv,
)

S = Series.from_text


@pytest.fixture
def unit_step():
    return SampledSignal.from_function(lambda t: [1.0], 0.0, 1.0, 101, 1)


@pytest.fixture
def cosine():
    return SampledSignal.from_function(lambda t: [math.cos(t)], 0.0, 1.0, 2001, 1)


def test_sampled_signal(unit_step):
    assert unit_step.m == 1
    assert unit_step.samples == 101
    assert unit_step.step == pytest.approx(0.01)
    np.testing.assert_allclose(unit_step.channel(0), 1.0)
    np.testing.assert_allclose(unit_step.l1_norms(), [1.0])
    with pytest.raises(ffbpy.DimensionError):
        unit_step.channel(2)
    with pytest.raises(ValueError):
        SampledSignal(1.0, 0.0, np.zeros((3, 1)))
    with pytest.raises(ValueError):
        SampledSignal(0.0, 1.0, np.zeros((1, 1)))
    with pytest.raises(ffbpy.DimensionError):
        SampledSignal.from_function(lambda t: [0.0, 0.0], 0.0, 1.0, 11, 1)


def test_iterated_integrals_step(unit_step):
    t = unit_step.grid()
    table = iterated_integrals([(1, 1), (0, 1), (0, 0, 0)], unit_step)
    np.testing.assert_allclose(table[(1,)], t, atol=1e-12)
    np.testing.assert_allclose(table[(1, 1)], t ** 2 / 2, atol=1e-12)
    np.testing.assert_allclose(table[(0, 1)], t ** 2 / 2, atol=1e-12)
    np.testing.assert_allclose(table[(0, 0, 0)], t ** 3 / 6, atol=1e-15)
    assert iterated_integral((1, 1), unit_step, 0.5) == pytest.approx(0.125)


def test_iterated_integral_cosine(cosine):
    assert iterated_integral((1,), cosine, 1.0) == pytest.approx(math.sin(1.0), abs=1e-6)
    # x0 x1: ∫_0^t sin(τ) dτ
    assert iterated_integral((0, 1), cosine, 1.0) == pytest.approx(1 - math.cos(1.0), abs=1e-6)
    with pytest.raises(ValueError):
        iterated_integral((1,), cosine, 2.0)
    with pytest.raises(ffbpy.DimensionError):
        iterated_integral((2,), cosine, 0.5)


def test_eval_fliess(cosine):
    c = S(['e + x0 + x1', '2 x0x0 - x1'], 1, 3)
    y = eval_fliess(c, cosine)
    t = cosine.grid()
    assert y.shape == (2001, 2)
    np.testing.assert_allclose(y[:, 0], 1 + t + np.sin(t), atol=1e-6)
    np.testing.assert_allclose(y[:, 1], t ** 2 - np.sin(t), atol=1e-6)
    with pytest.raises(ffbpy.DimensionError):
        eval_fliess(S(['x1'], 2, 2), cosine)


def test_eval_fliess_linear_system():
    # ż = -z + u, y = z from rest; the response to a unit step is 1 - exp(-t)
    c = S(['x1 - x0x1 + x0x0x1 - x0x0x0x1 + x0x0x0x0x1 - x0x0x0x0x0x1'], 1, 6)
    u = SampledSignal.from_function(lambda t: [1.0], 0.0, 0.5, 501, 1)
    y = eval_fliess(c, u)
    np.testing.assert_allclose(y[:, 0], 1 - np.exp(-u.grid()), atol=1e-5)


def test_convergence_domain(unit_step):
    assert check_convergence_domain(unit_step, GrowthConstants(1.0, 0.1), 1)
    with pytest.warns(RuntimeWarning):
        assert not check_convergence_domain(unit_step, GrowthConstants(1.0, 10.0), 1)
    with pytest.warns(RuntimeWarning):
        eval_fliess(S(['x1'], 1, 2), unit_step, GrowthConstants(1.0, 10.0))


def test_natural_response_taylor():
    c = S(['4 x0 + x1 - 1592 x0x0x0', '80 x0x0'], 2, 4)
    y1, y2 = natural_response_taylor(c)
    assert y1.coefficients == (0, 4, 0, Fraction(-796, 3), 0)
    assert y2.coefficients == (0, 0, 40, 0, 0)
    assert len(natural_response_taylor(c, 2)[0].coefficients) == 3
    with pytest.raises(ffbpy.TruncationError):
        natural_response_taylor(c, 5)


def test_natural_response():
    c = S(['e + x0 + x0x0'], 1, 2)
    y = natural_response(c, [0.0, 1.0, 2.0])
    np.testing.assert_allclose(y[:, 0], [1.0, 2.5, 5.0])


def test_growth_fit_global():
    coefficients = [Fraction(3 * 2 ** k) for k in range(10)]
    fit = growth_fit(coefficients)
    assert fit.slope == pytest.approx(math.log(2))
    assert fit.intercept == pytest.approx(math.log(3))
    assert fit.M == pytest.approx(2)
    assert fit.r_squared == pytest.approx(1)
    assert fit.orders == tuple(range(3, 10))


def test_growth_fit_local():
    coefficients = [Fraction(math.factorial(k) * 5 ** k, 7) for k in range(12)]
    fit = growth_fit(coefficients, 'local', start=1, stop=8)
    assert fit.M == pytest.approx(5)
    assert fit.orders == tuple(range(1, 9))


def test_growth_fit_huge_rationals():
    coefficients = [Fraction(10 ** (400 + k), 3) for k in range(8)]
    fit = growth_fit(coefficients, start=0)
    assert fit.slope == pytest.approx(math.log(10))


def test_growth_fit_errors():
    with pytest.raises(ValueError):
        growth_fit([Fraction(1)] * 4)
    with pytest.raises(ValueError):
        growth_fit([Fraction(1)] * 10, mode='uniform')
    orders, values = growth_transform([Fraction(0), Fraction(1), Fraction(0), Fraction(-2)], 'global', 0, None)
    assert list(orders) == [1, 3]
    assert values[1] == pytest.approx(math.log(2))


def test_format_trace_csv():
    text = format_trace_csv(np.array([0.0, 0.5]), np.array([[1.0, -2.0], [1.5, 1e-10]]))
    assert text == 't,y1,y2\n0,1,-2\n0.5,1.5,1e-10\n'


def test_write_csv(tmp_path):
    path = str(tmp_path / 'trace.csv')
    write_trace_csv(path, np.array([0.0, 0.25]), np.array([1.0, 0.125]))
    with open(path, encoding='utf-8') as f:
        assert f.read().splitlines() == ['t,y1', '0,1', '0.25,0.125']
    fit = growth_fit([Fraction(2 ** k) for k in range(6)])
    path = str(tmp_path / 'fit.csv')
    write_fit_csv(path, [3, 4, 5], [3 * math.log(2), 4 * math.log(2), 5 * math.log(2)], fit)
    with open(path, encoding='utf-8') as f:
        lines = f.read().splitlines()
    assert lines[0] == 'order,value,fitted'
    assert len(lines) == 4


def test_read_csv(tmp_path):
    path = tmp_path / 'u.csv'
    path.write_text('t,u1,u2\n0,1,0\n0.5,1,1\n1,1,2\n', encoding='utf-8')
    u = SampledSignal.read_csv(str(path))
    assert u.m == 2
    assert u.t1 == 1.0
    np.testing.assert_allclose(u.channel(2), [0, 1, 2])


@pytest.mark.parametrize('text', [
    'time,u1\n0,1\n1,1\n',
    't,u2\n0,1\n1,1\n',
    't,u1\n0,1\n',
    't,u1\n0,1\n0.3,1\n1,1\n',
    't,u1\n0,1\n1,x\n',
])
def test_read_csv_error(tmp_path, text):
    path = tmp_path / 'u.csv'
    path.write_text(text, encoding='utf-8')
    with pytest.raises(ffbpy.FormatError):
        SampledSignal.read_csv(str(path))


def test_quadrature_second_order():
    errors = []
    for samples in (51, 101, 201):
        u = SampledSignal.from_function(lambda t: [math.cos(t)], 0.0, 1.0, samples, 1)
        errors.append(abs(iterated_integral((1,), u, 1.0) - math.sin(1.0)))
    for coarse, fine in zip(errors, errors[1:]):
        assert 3.5 < coarse / fine < 4.5
