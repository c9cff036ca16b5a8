import random

import pytest
from hypothesis import given, strategies as st

from qgr.hopf import (
    TensorElement,
    antihomomorphism_residual,
    antipode,
    coproduct,
    counit,
    homomorphism_residual,
    hopf_axiom_residuals,
    iterated_coproduct,
    tensor,
)
from qgr.presentation import Algebra, random_element
from qgr.scalars import ONE, ZERO, R, S

ALGS = {(n, k): Algebra(n, k) for n in (2, 3) for k in ("gl", "sl")}


@st.composite
def element(draw):
    alg = ALGS[draw(st.sampled_from(sorted(ALGS)))]
    return random_element(alg, random.Random(draw(st.integers(0, 10**6))), max_len=3)


@st.composite
def element_pair(draw):
    alg = ALGS[draw(st.sampled_from(sorted(ALGS)))]
    rng = random.Random(draw(st.integers(0, 10**6)))
    return random_element(alg, rng), random_element(alg, rng)


def test_generator_coproducts(gl3):
    assert coproduct(gl3.e(1)) == tensor(gl3.e(1), gl3.one()) + tensor(gl3.omega(1), gl3.e(1))
    assert coproduct(gl3.f(1)) == tensor(gl3.one(), gl3.f(1)) + tensor(gl3.f(1), gl3.omega_p(1))
    assert coproduct(gl3.a(1)) == tensor(gl3.a(1), gl3.a(1))


def test_coproduct_respects_commutator():
    sl2 = ALGS[(2, "sl")]
    e, f = sl2.e(1), sl2.f(1)
    lhs = coproduct(e * f)
    rhs = coproduct(f * e) + coproduct((sl2.omega(1) - sl2.omega_p(1)).scale((R - S).inverse()))
    assert lhs == rhs


def test_counit_values(gl2):
    assert counit(gl2.e(1) * gl2.f(1)) == ZERO
    assert counit(gl2.a(1) * gl2.b(2, -1)) == ONE
    assert counit(gl2.one()) == ONE


def test_antipode_values(gl3):
    assert antipode(gl3.e(1)) == (gl3.omega(1, -1) * gl3.e(1)).scale(-ONE)
    assert antipode(gl3.f(1)) == (gl3.f(1) * gl3.omega_p(1, -1)).scale(-ONE)
    assert antipode(gl3.a(1)) == gl3.a(1, -1)
    assert antipode(gl3.e(1) * gl3.f(2)) == gl3.f(2) * gl3.omega_p(2, -1) * gl3.omega(1, -1) * gl3.e(1)


def test_iterated_coproduct(gl3):
    e, f, one = gl3.e(1), gl3.f(2), gl3.one()
    w, wp = gl3.omega(1), gl3.omega_p(2)
    assert iterated_coproduct(e, 3) == tensor(e, one, one) + tensor(w, e, one) + tensor(w, w, e)
    assert iterated_coproduct(f, 3) == tensor(one, one, f) + tensor(one, f, wp) + tensor(f, wp, wp)
    assert iterated_coproduct(one, 3) == tensor(one, one, one)


@pytest.mark.parametrize("key", sorted(ALGS))
def test_axioms_on_generators(key):
    alg = ALGS[key]
    for g in alg.generators():
        res = hopf_axiom_residuals(alg.word([g]))
        assert all(v.is_zero() for v in res.values()), g


@given(element())
def test_axioms_random(x):
    res = hopf_axiom_residuals(x)
    assert all(v.is_zero() for v in res.values())


@given(element_pair())
def test_coproduct_is_multiplicative(pair):
    x, y = pair
    assert homomorphism_residual(x, y).is_zero()


@given(element_pair())
def test_antipode_reverses_products(pair):
    x, y = pair
    assert antihomomorphism_residual(x, y).is_zero()


def test_broken_antipode_detected(gl2, monkeypatch):
    import qgr.hopf as hopf

    real = hopf._antipode_letter_e

    def wrong(alg, i):
        return real(alg, i).scale(R)

    monkeypatch.setattr(hopf, "_antipode_letter_e", wrong)
    alg = Algebra(2, "gl")
    res = hopf.hopf_axiom_residuals(alg.e(1))
    assert not res["antipode_left"].is_zero()


def test_tensor_rank_mismatch(gl2):
    with pytest.raises(ValueError):
        tensor(gl2.e(1), gl2.f(1)) + tensor(gl2.e(1), gl2.f(1), gl2.one())
    assert isinstance(tensor(gl2.e(1)), TensorElement)
