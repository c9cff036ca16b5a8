import random

import pytest
from hypothesis import given, strategies as st

from qgr.pairing import presentation_check
from qgr.presentation import (
    Algebra,
    Generator,
    build_algebra,
    normal_form,
    omega_lambda,
    random_element,
    relation_residuals,
    relations,
)
from qgr.scalars import ONE, R, S


def test_generator_inventory():
    sl2 = build_algebra(2, "sl")
    kinds = sorted({g.kind for g in sl2.generators()})
    assert kinds == ["E", "F", "W", "Winv", "Wp", "Wpinv"]
    gl3 = build_algebra(3, "gl")
    gens = gl3.generators()
    assert sum(g.kind == "E" for g in gens) == 2
    assert sum(g.kind == "F" for g in gens) == 2
    assert sum(g.kind in ("A", "B") for g in gens) == 6
    assert sum(g.kind in ("Ainv", "Binv") for g in gens) == 6
    with pytest.raises(ValueError):
        build_algebra(1, "sl")
    with pytest.raises(ValueError):
        Algebra(2, "so")


def test_commutation_examples(gl3, gl2):
    sl2 = Algebra(2, "sl")
    assert gl3.a(1) * gl3.e(1) == (gl3.e(1) * gl3.a(1)).scale(R)
    comm = sl2.e(1) * sl2.f(1) - sl2.f(1) * sl2.e(1)
    assert comm == (sl2.omega(1) - sl2.omega_p(1)).scale((R - S).inverse())
    assert sl2.omega(1) * sl2.e(1) == (sl2.e(1) * sl2.omega(1)).scale(R / S)
    assert gl3.e(1) * gl3.f(2) == gl3.f(2) * gl3.e(1)
    comm = gl2.e(1) * gl2.f(1) - gl2.f(1) * gl2.e(1)
    assert comm == (gl2.a(1) * gl2.b(2) - gl2.a(2) * gl2.b(1)).scale((R - S).inverse())
    assert gl2.one() * gl2.e(1) == gl2.e(1)
    assert gl2.a(1) * gl2.a(1, -1) == gl2.one()


def test_text_form(gl3):
    assert str(gl3.e(1)) == "(1) * e[1]"
    assert str(gl3.f(2) * gl3.e(1)) == "(1) * f[2] * e[1]"
    assert str(gl3.a(1) * gl3.e(1)) == "(1) * t[1 0 0 0 0 0] * e[1]"
    assert str(gl3.zero()) == "0"


def test_omega_lambda(gl2):
    assert omega_lambda(gl2, (1, 0)) == gl2.omega(1)
    assert omega_lambda(gl2, (1, 0)) == gl2.a(1) * gl2.b(2)
    assert omega_lambda(gl2, (0, 0)) == gl2.one()
    # eps_1 = alpha_1 + alpha_2 with alpha_2 = eps_2
    assert omega_lambda(gl2, (1, 1)) == gl2.omega(1) * gl2.a(2)
    with pytest.raises(ValueError):
        omega_lambda(Algebra(2, "sl"), (1, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("kind", ["gl", "sl"])
def test_commutation_relations_vanish(n, kind):
    for name, res in relation_residuals(Algebra(n, kind)):
        if name.startswith(("R5", "R6", "R7")):
            continue
        assert res.is_zero(), name


def test_serre_residual_is_nonzero_but_radical(gl3):
    res = dict(relation_residuals(gl3))
    first = res["R6a i=1"]
    assert len(first.terms) == 3
    rep = presentation_check(gl3, pair_height=4)
    assert rep["pass"] and rep["checked"] > 0


def test_serre_negative_control(gl3, monkeypatch):
    """A wrong Serre coefficient must leave the radical."""
    import qgr.presentation as pres

    real = pres.relations

    def broken(alg):
        out = []
        for name, expr in real(alg):
            if name == "R6a i=1":
                expr = [(c * (R if k == 1 else ONE), w) for k, (c, w) in enumerate(expr)]
            out.append((name, expr))
        return out

    monkeypatch.setattr(pres, "relations", broken)
    rep = presentation_check(Algebra(3, "gl"), pair_height=4)
    assert not rep["pass"]
    assert [f["relation"] for f in rep["failures"]] == ["R6a i=1"]


def test_gl_to_sl_restriction(gl3):
    """omega_j = a_j b_{j+1}, omega'_j = a_{j+1} b_j satisfy the sl-type relations inside gl."""
    sl3 = Algebra(3, "sl")
    images = {}
    for j in (1, 2):
        images[Generator("W", j)] = gl3.omega(j)
        images[Generator("Winv", j)] = gl3.omega(j, -1)
        images[Generator("Wp", j)] = gl3.omega_p(j)
        images[Generator("Wpinv", j)] = gl3.omega_p(j, -1)
        images[Generator("E", j)] = gl3.e(j)
        images[Generator("F", j)] = gl3.f(j)
    assert gl3.omega(1) == gl3.a(1) * gl3.b(2)
    assert gl3.omega_p(1) == gl3.a(2) * gl3.b(1)
    for name, expr in relations(sl3):
        if name.startswith(("R5", "R6", "R7")):
            continue
        total = gl3.zero()
        for c, word in expr:
            x = gl3.one()
            for g in word:
                x = x * images[g]
            total = total + x.scale(c)
        assert total.is_zero(), name


def _elements(n, kind):
    alg = Algebra(n, kind)

    @st.composite
    def strat(draw):
        seed = draw(st.integers(0, 10**6))
        return random_element(alg, random.Random(seed), max_len=3)

    return alg, strat()


_alg2, _el2 = _elements(2, "gl")
_alg3, _el3 = _elements(3, "sl")


@given(_el2, _el2, _el2)
def test_associativity_gl2(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(_el3, _el3, _el3)
def test_associativity_sl3(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(_el3, _el3)
def test_distributivity(x, y):
    e = _alg3.e(1)
    assert (x + y) * e == x * e + y * e


def test_normal_form_of_raw_expression(gl2):
    G = Generator
    x = normal_form(gl2, [(ONE, [G("E", 1), G("F", 1)])])
    assert x == gl2.e(1) * gl2.f(1)


def test_mixed_handles_rejected():
    with pytest.raises(ValueError):
        Algebra(2, "gl").e(1) * Algebra(3, "gl").e(1)
