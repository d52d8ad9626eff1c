from fractions import Fraction
import math
import random
import pytest
import ffbpy
from ffbpy.words import words_up_to
from ffbpy.series import (
    Series, shuffle_series, order, distance, is_linear, growth_constants, satisfies_growth_bound,
    fliess_radius, format_series, parse_series, read_series, write_series,
)

controller_text = '''fps m=2 l=2 N=2
1 4 e
1 2 x1
2 20 e
2 10 x2
'''


def random_series(rng, m, truncation, density=0.4, shortest=0):
    """One component whose words have length at least ``shortest``, with a nonzero coefficient there."""
    terms = {}
    for word in words_up_to(m, truncation):
        if len(word) >= shortest and rng.random() < density:
            terms[word] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    terms[tuple(rng.randint(0, m) for _ in range(shortest))] = rng.randint(1, 5)
    return Series([terms], m, truncation)


@pytest.fixture
def controller():
    return Series.from_text(['4 e + 2 x1', '20 e + 10 x2'], 2, 2)


def test_create_series():
    c = Series([{(1,): 3, (0, 2): '1/2'}], 2, 3)
    assert c.m == 2
    assert c.ell == 1
    assert c.alphabet.letters == (0, 1, 2)
    assert c.coefficient(1, (0, 2)) == Fraction(1, 2)
    assert c.coefficient(1, (2, 2)) == 0


def test_invalid_series():
    with pytest.raises(ffbpy.DimensionError):
        Series([], 1, 2)
    with pytest.raises(ffbpy.DimensionError):
        Series([{(3,): 1}], 2, 2)
    with pytest.raises(ffbpy.TruncationError):
        Series([{(1, 1, 1): 1}], 1, 2)
    with pytest.raises(ValueError):
        Series([{(): 1}], 0, 2)
    with pytest.raises(ValueError):
        Series([{(): 1}], 1, -1)
    c = Series.from_text(['x1'], 1, 2)
    with pytest.raises(ffbpy.DimensionError):
        c.coefficient(2, (1,))
    with pytest.raises(ffbpy.TruncationError):
        c.coefficient(1, (1, 1, 1))


def test_from_text_drops_long_words():
    c = Series.from_text(['x1 + x1x1x1'], 1, 2)
    assert list(c.support()) == [(1, (1,), Fraction(1))]


def test_arithmetic_mixed_truncation():
    c = Series.from_text(['x1 + x1x1x1'], 1, 3)
    d = Series.from_text(['2 x1 + x0x1'], 1, 2)
    total = c + d
    assert total.truncation == 2
    assert total == Series.from_text(['3 x1 + x0x1'], 1, 2)
    assert c - c == Series.zero(1, 1, 3)
    assert (2 * c).coefficient(1, (1, 1, 1)) == 2
    assert -c == c * -1
    with pytest.raises(ffbpy.DimensionError):
        c + Series.from_text(['x1'], 2, 3)
    with pytest.raises(ffbpy.TruncationError):
        d.truncate(3)


def test_shuffle_series():
    c = Series.from_text(['x1'], 1, 3)
    assert shuffle_series(c, c) == Series.from_text(['2 x1x1'], 1, 3)
    one = Series.constant([1], 1, 3)
    d = Series.from_text(['x0 - x1x0 + 2 x1x1x0'], 1, 3)
    assert shuffle_series(one, d) == d
    # words beyond the truncation vanish
    assert shuffle_series(d, d).is_zero() is False
    assert all(len(word) <= 3 for _, word, _ in shuffle_series(d, d).support())
    assert shuffle_series(c, d) == shuffle_series(d, c)


def test_order_and_distance():
    c = Series.from_text(['x1'], 2, 4)
    d = Series.from_text(['x1 + x1x2'], 2, 4)
    assert order(c) == 1
    assert order(Series.zero(2, 1, 4)) == math.inf
    assert distance(c, c) == 0
    assert distance(c, d) == Fraction(1, 4)
    assert distance(c, d) == distance(d, c)


def test_is_linear(controller):
    assert is_linear(Series.from_text(['x1 + 3 x0x1', '-x0x0x2'], 2, 3))
    assert not is_linear(controller)
    assert not is_linear(Series.from_text(['x1x2'], 2, 3))
    assert not is_linear(Series.from_text(['x1x0'], 2, 3))


def test_growth_bound():
    constants = growth_constants(1, 2)
    c = Series.from_text(['x1 + 4 x1x1 + 8 x1x1x1'], 1, 3)
    assert satisfies_growth_bound(c, constants, 'local')
    assert satisfies_growth_bound(c, constants, 'global')
    d = Series.from_text(['x1 + 8 x1x1'], 1, 3)
    assert satisfies_growth_bound(d, constants, 'local')
    assert not satisfies_growth_bound(d, constants, 'global')
    with pytest.raises(ValueError):
        growth_constants(0, 1)
    with pytest.raises(ValueError):
        satisfies_growth_bound(c, constants, 'uniform')
    assert fliess_radius(2, 1) == pytest.approx(0.25)


def test_format_series(controller):
    assert format_series(controller) == controller_text
    assert str(Series.zero(1, 2, 0)) == 'fps m=1 l=2 N=0\n'
    assert str(Series.from_text(['-1/3 x0x1'], 1, 2)) == 'fps m=1 l=1 N=2\n1 -1/3 x0x1\n'


def test_parse_series(controller):
    assert parse_series(controller_text) == controller
    assert parse_series('\nfps m=2 l=2 N=2\n\n2 10 x2\n1 2 x1\n1 4 e\n2 20 e\n') == controller
    assert parse_series(format_series(controller)) == controller


@pytest.mark.parametrize('text', [
    '',
    'fps m=2 l=2\n',
    'series m=2 l=2 N=2\n',
    'fps m=0 l=1 N=2\n',
    'fps m=1 l=1 N=2\n1 1\n',
    'fps m=1 l=1 N=2\n2 1 x1\n',
    'fps m=1 l=1 N=2\n1 1 x2\n',
    'fps m=1 l=1 N=2\n1 1 x1x1x1\n',
    'fps m=1 l=1 N=2\n1 0.5 x1\n',
    'fps m=1 l=1 N=2\n1 1 x1\n1 2 x1\n',
    'fps m=1 l=1 N=2\n1 1 y1\n',
])
def test_parse_series_error(text):
    with pytest.raises(ffbpy.FormatError):
        parse_series(text)


def test_read_write_series(tmp_path, controller):
    path = str(tmp_path / 'controller.fps')
    write_series(controller, path)
    with open(path, encoding='utf-8') as f:
        assert f.read() == controller_text
    assert read_series(path) == controller


def test_from_mapping():
    c = Series.from_mapping({(1, (1,)): 2, (2, (0, 2)): '1/2', (2, ()): 3}, 2, 2, 3)
    assert c == Series.from_text(['2 x1', '3 e + 1/2 x0x2'], 2, 3)
    assert Series.from_mapping({}, 1, 2, 3) == Series.zero(1, 2, 3)
    with pytest.raises(ffbpy.DimensionError):
        Series.from_mapping({(3, (1,)): 1}, 2, 2, 3)
    with pytest.raises(ffbpy.DimensionError):
        Series.from_mapping({(0, (1,)): 1}, 2, 2, 3)
    with pytest.raises(ffbpy.DimensionError):
        Series.from_mapping({}, 2, 0, 3)


def test_components_of(controller):
    swapped = controller.components_of([2, 1])
    assert swapped == Series.from_text(['20 e + 10 x2', '4 e + 2 x1'], 2, 2)
    assert controller.components_of([1]) == controller.component(1)
    assert controller.components_of([1, 1]).ell == 2
    with pytest.raises(ffbpy.DimensionError):
        controller.components_of([])
    with pytest.raises(ffbpy.DimensionError):
        controller.components_of([3])


@pytest.mark.parametrize('seed', range(10))
def test_distance_ultrametric(seed):
    rng = random.Random(seed)
    base = random_series(rng, 1, 5)
    c, d, e = (base + random_series(rng, 1, 5, shortest=rng.randint(0, 5)) for _ in range(3))
    assert distance(c, e) <= max(distance(c, d), distance(d, e))
    assert distance(c, d) == distance(d, c)
    assert distance(c, d) <= 1


@pytest.mark.parametrize('seed', range(10))
def test_shuffle_order_additive(seed):
    rng = random.Random(100 + seed)
    c = random_series(rng, 1, 6, shortest=rng.randint(0, 3))
    d = random_series(rng, 1, 6, shortest=rng.randint(0, 3))
    assert order(shuffle_series(c, d)) == order(c) + order(d)


@pytest.mark.parametrize('seed', range(5))
def test_shuffle_algebra(seed):
    rng = random.Random(200 + seed)
    m = rng.randint(1, 2)
    truncation = 5 if m == 1 else 4
    c, d, e = (random_series(rng, m, truncation) for _ in range(3))
    assert shuffle_series(c, d) == shuffle_series(d, c)
    assert shuffle_series(shuffle_series(c, d), e) == shuffle_series(c, shuffle_series(d, e))
    assert shuffle_series(c, d + e) == shuffle_series(c, d) + shuffle_series(c, e)
    assert shuffle_series(c * 3, d) == shuffle_series(c, d) * 3


@pytest.mark.parametrize('seed', range(10))
def test_format_parse_random(seed):
    rng = random.Random(300 + seed)
    m, truncation = rng.randint(1, 3), rng.randint(0, 4)
    c = Series([random_series(rng, m, truncation).components[0] for _ in range(rng.randint(1, 3))], m, truncation)
    text = format_series(c)
    assert parse_series(text) == c
    assert format_series(parse_series(text)) == text
