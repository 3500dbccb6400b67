import random

import pytest

from figrelabel.core.exceptions import SingularMatrix
from figrelabel.domain.entities.geometry import (
    IDENTITY,
    Matrix,
    Point,
    concat_matrix,
    dtransform_delta,
    idtransform_delta,
    invert,
    itransform_point,
    multiply,
    rotation,
    scaling,
    transform_point,
    translation,
)
from figrelabel.services.ps_vm import PsMachine


def _random_ctm(rng: random.Random) -> Matrix:
    m = rotation(rng.uniform(0, 360))
    m = multiply(scaling(rng.uniform(0.5, 4) * rng.choice((1, -1)), rng.uniform(0.5, 4)), m)
    m = multiply(Matrix(1, 0, rng.uniform(-1, 1), 1, 0, 0), m)
    return m.with_translation(rng.uniform(-500, 500), rng.uniform(-500, 500))


def test_transform_point_examples():
    assert transform_point(IDENTITY, Point(10, 20)) == (10, 20)
    assert transform_point(Matrix(2, 0, 0, 2, 0, 0), Point(36, 25)) == (72, 50)
    assert transform_point(Matrix(1, 0, 0, 1, 5, -7), Point(0, 0)) == (5, -7)


def test_idtransform_delta_examples():
    assert idtransform_delta(IDENTITY, Point(3, 4)) == (3, 4)
    assert idtransform_delta(Matrix(2, 0, 0, 2, 100, 100), Point(72, 50)) == (36, 25)
    assert idtransform_delta(Matrix(0, 1, -1, 0, 0, 0), Point(0, 1)) == (1, 0)


def test_idtransform_singular():
    with pytest.raises(SingularMatrix):
        idtransform_delta(Matrix(1, 2, 2, 4, 0, 0), Point(1, 1))
    with pytest.raises(SingularMatrix):
        invert(Matrix(0, 0, 0, 0, 1, 1))


def test_concat_examples():
    m = Matrix(3, 1, -2, 5, 7, 11)
    assert concat_matrix(IDENTITY, m) == m

    ctm = concat_matrix(concat_matrix(IDENTITY, translation(5, 0)), scaling(2, 2))
    assert transform_point(ctm, Point(1, 1)) == (7, 2)

    ctm = concat_matrix(concat_matrix(IDENTITY, rotation(90)), rotation(90))
    x, y = transform_point(ctm, Point(1, 0))
    assert x == pytest.approx(-1, abs=1e-9)
    assert y == pytest.approx(0, abs=1e-9)


def test_transform_itransform_identity():
    rng = random.Random(1)
    for _ in range(1000):
        m = _random_ctm(rng)
        p = Point(rng.uniform(-500, 500), rng.uniform(-500, 500))
        back = itransform_point(m, transform_point(m, p))
        assert back.x == pytest.approx(p.x, abs=1e-9)
        assert back.y == pytest.approx(p.y, abs=1e-9)


def test_idtransform_ignores_translation_bit_for_bit():
    rng = random.Random(2)
    for _ in range(1000):
        m = _random_ctm(rng)
        d = Point(rng.uniform(-100, 100), rng.uniform(-100, 100))
        moved = m.with_translation(rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4))
        assert idtransform_delta(moved, d) == idtransform_delta(m, d)


def test_dtransform_inverts_idtransform():
    rng = random.Random(3)
    for _ in range(200):
        m = _random_ctm(rng)
        d = Point(rng.uniform(-100, 100), rng.uniform(-100, 100))
        back = dtransform_delta(m, idtransform_delta(m, d))
        assert back.x == pytest.approx(d.x, abs=1e-9)
        assert back.y == pytest.approx(d.y, abs=1e-9)


def test_rotate_there_and_back():
    rng = random.Random(4)
    for _ in range(1000):
        theta = rng.uniform(-720, 720)
        m = multiply(rotation(theta), rotation(-theta))
        for got, want in zip(m.values(), IDENTITY.values()):
            assert got == pytest.approx(want, abs=1e-9)


def test_quarter_turns_are_exact():
    assert rotation(90).values() == (0.0, 1.0, -1.0, 0.0, 0.0, 0.0)
    assert rotation(-270) == rotation(90)
    assert rotation(180).values() == (-1.0, 0.0, -0.0, -1.0, 0.0, 0.0)


def test_invert_round_trip():
    rng = random.Random(5)
    for _ in range(200):
        m = _random_ctm(rng)
        product = multiply(m, invert(m))
        for got, want in zip(product.values(), IDENTITY.values()):
            assert got == pytest.approx(want, abs=1e-9)


def test_gsave_grestore_restores_exactly():
    rng = random.Random(6)
    ops = ["3 4 translate", "1.5 0.25 scale", "33.3 rotate", "[1 0.2 0.1 1 4 5] concat", "7 9 moveto", "newpath"]
    for _ in range(100):
        setup = f"{rng.uniform(-50, 50)} {rng.uniform(-50, 50)} moveto {rng.uniform(0, 90)} rotate"
        body = " ".join(rng.choice(ops) for _ in range(rng.randint(1, 6)))
        machine = PsMachine().run(setup.encode())
        before = (machine.gstate.ctm, machine.gstate.device_point)
        machine.run(f"gsave {body} grestore".encode())
        assert (machine.gstate.ctm, machine.gstate.device_point) == before
