from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypernum import (AMBIENT_ZERO, ZERO, AmbientElem, amb_add, ambient_trace, assoc_at, c_mass, defect,
                      embed_real, hyper, iota, is_obstruction_witness, obstruction_witness, p_lambda, pi)

from conftest import hypers, positive, rationals

F = Fraction
masses = st.builds(F, st.integers(0, 400), st.integers(1, 24))
elems = st.builds(AmbientElem, rationals, masses)


def test_c_mass_examples():
    assert c_mass(1, -1) == 2
    assert c_mass(F(7, 2), 0) == 0
    assert c_mass(3, 5) == 0


@given(rationals, rationals, rationals)
def test_c_mass_basic(r1, r2, lam):
    assert c_mass(r1, r2) >= 0
    assert c_mass(r1, r2) == c_mass(r2, r1)
    assert c_mass(lam * r1, lam * r2) == abs(lam) * c_mass(r1, r2)


@given(rationals, rationals)
def test_c_mass_vanishing(r1, r2):
    vanishes = r1 == 0 or r2 == 0 or (r1 > 0) == (r2 > 0)
    assert (c_mass(r1, r2) == 0) == vanishes


@given(masses, masses)
def test_c_mass_opposite_signs(a, b):
    assert c_mass(a, -b) == a + b - abs(a - b) == 2 * min(a, b)


@given(rationals, rationals, rationals)
def test_cocycle(x, y, z):
    assert c_mass(x, y) + c_mass(x + y, z) == c_mass(y, z) + c_mass(x, y + z)


def test_amb_add_examples():
    one, minus_one = AmbientElem(1, 0), AmbientElem(-1, 0)
    assert amb_add(one, minus_one) == AmbientElem(0, 2)
    u = AmbientElem(F(-5, 3), 4)
    assert amb_add(AMBIENT_ZERO, u) == u
    w = AmbientElem(0, 1)
    assert (one + minus_one) + w == one + (minus_one + w) == AmbientElem(0, 3)


def test_negative_mass_rejected():
    with pytest.raises(ValueError):
        AmbientElem(0, -1)


@given(elems, elems, elems)
def test_monoid_laws(u, v, w):
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert u + AMBIENT_ZERO == u
    assert pi(u + v) == pi(u) + pi(v)


@given(st.lists(elems, min_size=4, max_size=4))
def test_all_bracketings_of_four_agree(us):
    a, b, c, d = us
    shapes = [((a + b) + c) + d, (a + (b + c)) + d, (a + b) + (c + d), a + ((b + c) + d), a + (b + (c + d))]
    assert len(set(shapes)) == 1


def test_pi_examples():
    assert pi(AmbientElem(5, 7)) == 5
    assert pi(AmbientElem(0, 3)) == 0
    assert pi(AMBIENT_ZERO) == 0


def test_iota_examples():
    assert iota(hyper("-", 3)) == AmbientElem(-3, 0)
    assert iota(hyper("L", 2)) == AmbientElem(0, 2)
    assert iota(ZERO) == AMBIENT_ZERO


@given(rationals)
def test_iota_on_classical_line(r):
    assert iota(embed_real(r)) == AmbientElem(r, 0)
    assert pi(iota(embed_real(r))) == r


@given(hypers(), hypers())
def test_iota_injective(x, y):
    assert (iota(x) == iota(y)) == (x == y)


def test_p_lambda_examples():
    assert p_lambda(AMBIENT_ZERO) == ZERO
    assert p_lambda(AmbientElem(0, 2)) == hyper("L", 2)
    assert p_lambda(AmbientElem(-3, 1)) == hyper("L", 4)


@pytest.mark.parametrize("abc,U,right,left", [
    ((1, 1, 1), (0, 3), 3, 1),
    ((2, 1, 4), (1, 6), 7, 5),
])
def test_ambient_trace_examples(abc, U, right, left):
    t = ambient_trace(*abc)
    assert t.U == AmbientElem(*U)
    assert t.right_read == hyper("L", right)
    assert t.left_read == hyper("L", left)
    assert t.defect == 2
    # cross-check against direct bracketing
    r = assoc_at(hyper("+", abc[0]), hyper("-", abc[1]), hyper("L", abc[2]))
    assert t.left_read in r.left and t.right_read in r.right


@given(positive, positive, positive)
def test_ambient_trace_random(a, b, c):
    t = ambient_trace(a, b, c)
    assert t.U == AmbientElem(a - b, c + c_mass(a, -b))
    assert t.right_read.mag == a + b + c
    assert t.left_read.mag == c + abs(a - b)
    assert t.defect == c_mass(a, -b) == defect(a, b, c)


def test_ambient_trace_rejects_nonpositive():
    with pytest.raises(ValueError):
        ambient_trace(1, 0, 1)


def test_obstruction_witness():
    x, y, z = obstruction_witness()
    assert (x, y, z) == (hyper("+", 1), hyper("-", 1), hyper("L", 1))
    r = assoc_at(x, y, z)
    assert r.left & r.right == type(r.left)()
    assert is_obstruction_witness(hyper("+", 2), hyper("-", 2), hyper("L", 2))


@given(rationals, rationals, rationals)
def test_classical_triples_are_not_witnesses(r, s, t):
    assert not is_obstruction_witness(embed_real(r), embed_real(s), embed_real(t))
