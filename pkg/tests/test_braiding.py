import itertools
from fractions import Fraction

import pytest

from qgr.braiding import (
    apply_R,
    build_R,
    casimir,
    casimir_element,
    dual_basis_coproduct_check,
    ftilde_scalar,
    ftilde_theta_exchange_check,
    g_weight,
    hexagon_check,
    intertwining_check,
    qybe_check,
    theta,
    theta_coproduct_check,
    theta_identities_check,
    twisted_theta_legs_check,
    two_rho,
    unitriangularity_check,
)
from qgr.cat_o import verma
from qgr.hopf import tensor
from qgr.pairing import f_form
from qgr.presentation import Algebra
from qgr.scalars import ONE, R, S


def test_theta_small(gl2):
    assert theta(gl2, (0,)) == tensor(gl2.one(), gl2.one())
    assert theta(gl2, (1,)) == tensor(gl2.f(1), gl2.e(1)).scale(S - R)
    assert theta(gl2, (-1,)).is_zero()


def test_ftilde(gl3):
    e1, e2 = (1, 0, 0), (0, 1, 0)
    assert ftilde_scalar(gl3, e1, e2) == S.inverse()
    assert ftilde_scalar(gl3, e1, (0, 0, 0)) == ONE
    lam, mu, nu = (1, 0, 0), (0, 2, 1), (1, -1, 0)
    both = tuple(a + b for a, b in zip(lam, mu))
    assert f_form(gl3, nu, both) == f_form(gl3, nu, lam) * f_form(gl3, nu, mu)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("kind", ["gl", "sl"])
def test_algebra_level_identities(n, kind):
    alg = Algebra(n, kind)
    assert theta_identities_check(alg, 3)["pass"]
    assert dual_basis_coproduct_check(alg, 2)["pass"]
    assert theta_coproduct_check(alg, 2)["pass"]


def _mods(alg, weights, depth):
    return [verma(alg, w, depth) for w in weights]


def test_R_on_highest_pair(gl2):
    M, Mp = _mods(gl2, [(1, 0), (2, 0)], 4)
    out = apply_R(Mp, M, {(0, 0): ONE})
    assert out == {(0, 0): f_form(gl2, M.lam.eps, Mp.lam.eps)}


@pytest.mark.parametrize("kind", ["gl", "sl"])
def test_braid_checks_n2(kind):
    alg = Algebra(2, kind)
    mods = _mods(alg, [(1, 0), (2, 0)], 4)
    for Mp, M in itertools.product(mods, repeat=2):
        R_ = build_R(Mp, M, 2)
        assert intertwining_check(R_)["pass"]
        assert unitriangularity_check(R_)["pass"]
    for triple in itertools.product(mods, repeat=3):
        assert qybe_check(*triple, 2)["pass"]
        assert hexagon_check(*triple, 2)["pass"]
        assert twisted_theta_legs_check(*triple, 2)["pass"]
        assert ftilde_theta_exchange_check(*triple, 2)["pass"]


def test_braid_checks_n3(gl3):
    mods = _mods(gl3, [(1, 0, 0), (1, 1, 0)], 3)
    for Mp, M in itertools.product(mods, repeat=2):
        assert intertwining_check(build_R(Mp, M, 1))["pass"]
    for triple in itertools.product(mods, repeat=3):
        assert qybe_check(*triple, 1)["pass"]
        assert hexagon_check(*triple, 1)["pass"]


@pytest.mark.parametrize("u0,v0", [(2, 3), (Fraction(1, 2), 5), (3, Fraction(-2, 7))])
def test_specialized_qybe(u0, v0):
    u0, v0 = Fraction(u0), Fraction(v0)
    alg = Algebra(2, "gl", r=u0 * u0, s=v0 * v0, sqrt_rs=u0 / v0)
    M = verma(alg, (1, 0), 3)
    assert qybe_check(M, M, M, 1)["pass"]
    assert hexagon_check(M, M, M, 1)["pass"]


def test_budget_guard(gl2):
    M = verma(gl2, (1, 0), 3)
    with pytest.raises(ValueError, match="budget"):
        build_R(M, M, 2)


def test_wrong_ftilde_breaks_everything(gl2, monkeypatch):
    import qgr.braiding as br

    monkeypatch.setattr(br, "f_form", lambda alg, lam, mu: f_form(alg, mu, lam))
    alg = Algebra(2, "gl")
    M, N = _mods(alg, [(1, 0), (2, 0)], 4)
    assert not br.intertwining_check(br.build_R(M, N, 2))["pass"]
    assert not br.qybe_check(M, N, M, 2)["pass"]
    assert not br.hexagon_check(M, N, M, 2)["pass"]


def test_theta_zero_only_breaks_intertwining(gl2, monkeypatch):
    import qgr.braiding as br

    alg = Algebra(2, "gl")
    ops = br._ops(alg)
    real = ops.theta_pair
    monkeypatch.setattr(ops, "theta_pair", lambda Mv, Mu, kv, ku, max_h=None: real(Mv, Mu, kv, ku, 0))
    M, N = _mods(alg, [(1, 0), (2, 0)], 4)
    assert not br.intertwining_check(br.build_R(M, N, 2))["pass"]
    assert not br.hexagon_check(M, N, M, 2)["pass"]


def test_casimir_examples(gl2):
    om = casimir_element(gl2, 1)
    assert om == gl2.one() - (gl2.f(1) * gl2.omega_p(1, -1) * gl2.e(1)).scale(S - R)
    assert two_rho(3) == (2, 0, -2)
    assert g_weight(gl2, (0, 0)) == ONE
    assert g_weight(gl2, (1, 0)) == R / S
    M = verma(gl2, (1, 0), 3)
    assert M.apply_element(casimir_element(gl2, 3), {0: ONE}) == {0: ONE}


@pytest.mark.parametrize("n,kind,lam,depth", [(2, "gl", (1, 0), 4), (2, "gl", (2, -1), 4), (2, "sl", (3, 0), 4), (3, "gl", (1, 0, 0), 3), (3, "gl", (2, 1, 0), 3)])
def test_casimir_scalar(n, kind, lam, depth):
    rep = casimir(verma(Algebra(n, kind), lam, depth))
    assert rep["pass"], rep["failures"][:3]


def test_casimir_needs_root():
    alg = Algebra(2, "gl", r=4, s=9)
    with pytest.raises(ValueError):
        g_weight(alg, (1, 0))
