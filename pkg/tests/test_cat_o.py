import pytest
from hypothesis import given, strategies as st

from qgr.cat_o import (
    Weight,
    act,
    character_injectivity_check,
    module_relation_audit,
    verma,
    weight_character,
    word_depth_need,
)
from qgr.presentation import Algebra, Generator
from qgr.scalars import ONE, R, S

G = Generator


def test_weight_character(gl2):
    sl2 = Algebra(2, "sl")
    ch = weight_character(sl2, (1, 0))
    assert ch["w1"] == R and ch["wp1"] == S
    assert all(v == ONE for v in weight_character(gl2, (0, 0)).values())


def test_weight_conversions():
    w = Weight((2, 1, -1))
    assert Weight.from_alpha(w.alpha) == w
    assert w + (1, 0, 0) == Weight((3, 1, -1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_characters_separate_root_lattice(n):
    rep = character_injectivity_check(n, 3)
    assert rep["pass"] and rep["checked"] == 7 ** (n - 1)


def test_highest_vector(gl2):
    M = verma(gl2, (1, 0), 4)
    v = {0: ONE}
    assert act(M, G("E", 1), v) == {}
    lam = M.lam.eps
    comm = M.apply_word([G("E", 1), G("F", 1)], v)
    # (lambda(omega) - lambda(omega')) / (r - s)
    expect = (gl2.torus_char(gl2.omega_torus(1), lam) - gl2.torus_char(gl2.omega_torus(1, True), lam)) / (R - S)
    assert comm == {0: expect}
    assert expect == ONE


def test_e_f_on_triple_weight(gl2):
    M = verma(gl2, (3, 0), 2)
    out = M.apply_word([G("E", 1), G("F", 1)], {0: ONE})
    assert out == {0: (R ** 3 - S ** 3) / (R - S)}


def test_torus_acts_by_weight(gl3):
    M = verma(gl3, (2, 1, 0), 3)
    for k in range(M.dim):
        mu = M.weight(k)
        for i in (1, 2, 3):
            assert act(M, G("A", i), {k: ONE}) == {k: R ** mu[i - 1]}
            assert act(M, G("B", i), {k: ONE}) == {k: S ** mu[i - 1]}


def test_module_dimensions(gl3):
    M = verma(gl3, (1, 0, 0), 3)
    # Kostant counts of heights 0..3 in rank 2: 1, 2, 4, 6
    assert M.dim == 1 + 2 + 4 + 6


@pytest.mark.parametrize(
    "n,kind,lam,depth",
    [(2, "gl", (1, 0), 4), (3, "gl", (2, 1, 0), 3), (3, "sl", (1, 0, 0), 3), (4, "gl", (1, 0, 0, 0), 3)],
)
def test_relation_audit(n, kind, lam, depth):
    M = verma(Algebra(n, kind), lam, depth)
    rep = module_relation_audit(M)
    assert rep["pass"], rep["failures"][:3]
    assert rep["checked"] > 0


def test_corrupted_module_fails(gl2):
    M = verma(gl2, (1, 0), 3)
    col = M.actions["e1"][1]
    row = next(iter(col))
    col[row] = col[row] * R
    rep = module_relation_audit(M)
    assert not rep["pass"]
    assert any(f["relation"].startswith("R4") for f in rep["failures"])


def test_depth_need():
    assert word_depth_need([G("E", 1), G("F", 1)]) == 1
    assert word_depth_need([G("F", 1), G("F", 2), G("E", 1)]) == 1
    assert word_depth_need([G("F", 1), G("F", 2)]) == 2
    assert word_depth_need([G("F", 1), G("E", 1), G("E", 1)]) == 0


def test_bad_inputs(gl2):
    with pytest.raises(ValueError):
        verma(gl2, (1, 0), 0)
    with pytest.raises(ValueError):
        verma(gl2, (1, 0, 0), 2)


@given(st.lists(st.integers(-2, 3), min_size=2, max_size=2))
def test_audit_random_weights(lam):
    M = verma(Algebra(2, "gl"), lam, 3)
    assert module_relation_audit(M)["pass"]


def test_to_json_shape(gl2):
    d = verma(gl2, (1, 0), 2).to_json()
    assert set(d) == {"lambda", "depth", "basis", "action"}
    assert d["basis"][0] == {"word": [], "weight": [1, 0]}
    assert sorted(d["action"]) == ["a1", "a2", "b1", "b2", "e1", "f1"]
