import os
import pytest
import ffbpy

fixtures = os.path.join(os.path.dirname(os.path.abspath(ffbpy.__file__)), 'fixtures')
axle_path = os.path.join(fixtures, 'axle.json')
controller_path = os.path.join(fixtures, 'pi_controller.json')


def test_without_max_degree():
    with pytest.raises(TypeError):
        ffbpy.Session()
    with pytest.raises(TypeError):
        ffbpy.Session(None)


def test_invalid_setting():
    with pytest.raises(ValueError):
        ffbpy.Session(3, method='newton')
    with pytest.raises(ValueError):
        ffbpy.Session(3, concurrency=0)
    with pytest.raises(ValueError):
        ffbpy.Session(-1)
    with pytest.raises(TypeError):
        ffbpy.Session(3, concurrency='2')


def test_create_session():
    session = ffbpy.Session(4, method='fixedpoint')
    assert session.setting == {'max_degree': 4, 'method': 'fixed_point', 'concurrency': 1}


def test_products_capped():
    session = ffbpy.Session(2)
    c = ffbpy.Series.from_text(['x1 + x1x1x1'], 1, 5)
    assert session.shuffle(c, c) == ffbpy.Series.from_text(['2 x1x1'], 1, 2)
    assert session.compose(c, c).truncation == 2
    assert session.mod_compose(c, c) == ffbpy.Series.from_text(['x1 + x0x1'], 1, 2)


def test_invert_and_feedback():
    session = ffbpy.Session(4)
    c = ffbpy.Series.from_text(['x1'], 1, 6)
    assert session.invert(c) == ffbpy.Series.from_text(['-x1 + x0x1 - x0x0x1 + x0x0x0x1'], 1, 4)
    inverse = session.invert(ffbpy.DeltaSeries(c))
    assert isinstance(inverse, ffbpy.DeltaSeries)
    d = ffbpy.Series.from_text(['-x1'], 1, 6)
    assert session.feedback(c, d) == ffbpy.Series.from_text(['x1 - x0x0x1'], 1, 4)


def test_realizations():
    session = ffbpy.Session(4, method='fixed_point')
    plant = session.load(axle_path)
    assert plant.degree == 6
    c = session.realize(plant)
    d = session.realize(controller_path)
    assert d == ffbpy.Series.from_text(['4 e + 2 x1', '20 e + 10 x2'], 2, 4)
    assert session.closed_loop(axle_path, controller_path) == session.feedback(c, d)


def test_respond():
    session = ffbpy.Session(3)
    c = ffbpy.Series.from_text(['4 x0 - 1592 x0x0x0', '80 x0x0'], 2, 5)
    y1, y2 = session.respond(c)
    assert len(y1.coefficients) == 4
    assert y2.coefficients[2] == 40
    assert len(session.respond(c, 5)[0].coefficients) == 6


def test_radius():
    session = ffbpy.Session(3)
    assert session.radius(20, 1, 2, 'global').geometric_constant == pytest.approx(40.50, abs=5e-3)
    assert session.radius(1, 1, 1).amplification == pytest.approx(3.2589, abs=1e-4)
    with pytest.raises(ValueError):
        session.radius(1, 1, 1, 'uniform')
