"""Coproduct, counit and antipode on the presented algebras."""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .presentation import Algebra, Element, key_text
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "TensorElement",
    "tensor",
    "coproduct",
    "counit",
    "antipode",
    "iterated_coproduct",
    "hopf_axiom_residuals",
    "homomorphism_residual",
    "antihomomorphism_residual",
    "coproduct_left",
    "coproduct_right",
]


class TensorElement:
    """Sum of pure tensors of normal-form monomials; ``terms`` maps leg-key tuples to coefficients."""

    __slots__ = ("alg", "rank", "terms")

    def __init__(self, alg: Algebra, rank: int, terms: dict):
        self.alg = alg
        self.rank = rank
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def __add__(self, other: "TensorElement"):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return TensorElement(self.alg, self.rank, out)

    def __neg__(self):
        return TensorElement(self.alg, self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return TensorElement(self.alg, self.rank, {k: v * c for k, v in self.terms.items()})

    def _check(self, other):
        if self.rank != other.rank:
            raise ValueError("tensor rank mismatch")
        if not self.alg.same_structure(other.alg):
            raise ValueError("mixed algebra handles")

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            c = as_scalar(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        alg = self.alg
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                legs = [alg.mul_keys(a, b) for a, b in zip(k1, k2)]
                c12 = c1 * c2
                for combo in product(*(leg.items() for leg in legs)):
                    c = c12
                    for _, cl in combo:
                        c = c * cl
                    key = tuple(k for k, _ in combo)
                    out[key] = out.get(key, ZERO) + c
        return TensorElement(alg, self.rank, out)

    def __rmul__(self, other):
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def sorted_terms(self):
        from .presentation import _key_order

        return sorted(self.terms.items(), key=lambda kv: tuple(_key_order(k) for k in kv[0]))

    def legs(self, key) -> tuple[Element, ...]:
        return tuple(Element(self.alg, {k: ONE}) for k in key)

    def map_legs(self, fns) -> "TensorElement":
        """Apply a linear map (monomial key -> Element) to each leg."""
        out: dict = {}
        for key, c in self.terms.items():
            images = [fn(k).terms for fn, k in zip(fns, key)]
            for combo in product(*(im.items() for im in images)):
                cc = c
                for _, ci in combo:
                    cc = cc * ci
                kk = tuple(k for k, _ in combo)
                out[kk] = out.get(kk, ZERO) + cc
        return TensorElement(self.alg, self.rank, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            legs = [key_text(k) or "1" for k in key]
            parts.append(f"{c} * " + " ⊗ ".join(legs))
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorElement[{self}]"


def tensor(*xs: Element) -> TensorElement:
    alg = xs[0].alg
    out: dict = {}
    for combo in product(*(x.terms.items() for x in xs)):
        c = ONE
        for _, ci in combo:
            c = c * ci
        key = tuple(k for k, _ in combo)
        out[key] = out.get(key, ZERO) + c
    return TensorElement(alg, len(xs), out)


# -- coproduct ----------------------------------------------------------------


def _one_key(alg):
    return ((), alg.zero_torus, ())


def _delta_e(alg: Algebra, i: int) -> TensorElement:
    one = _one_key(alg)
    return TensorElement(alg, 2, {(((), alg.zero_torus, (i,)), one): ONE, (((), alg.omega_torus(i), ()), ((), alg.zero_torus, (i,))): ONE})


def _delta_f(alg: Algebra, i: int) -> TensorElement:
    one = _one_key(alg)
    return TensorElement(alg, 2, {(one, ((i,), alg.zero_torus, ())): ONE, (((i,), alg.zero_torus, ()), ((), alg.omega_torus(i, primed=True), ())): ONE})


def _delta_word(alg: Algebra, word: tuple, letter_fn, cache: dict) -> TensorElement:
    if word in cache:
        return cache[word]
    if not word:
        out = TensorElement(alg, 2, {(_one_key(alg), _one_key(alg)): ONE})
    else:
        out = _delta_word(alg, word[:-1], letter_fn, cache) * letter_fn(alg, word[-1])
    cache[word] = out
    return out


def _caches(alg: Algebra) -> dict:
    c = getattr(alg, "_hopf_caches", None)
    if c is None:
        c = {"dE": {}, "dF": {}, "dkey": {}, "S": {}}
        alg._hopf_caches = c
    return c


def coproduct_key(alg: Algebra, key) -> TensorElement:
    caches = _caches(alg)
    hit = caches["dkey"].get(key)
    if hit is not None:
        return hit
    F, T, E = key
    dF = _delta_word(alg, F, _delta_f, caches["dF"])
    dT = TensorElement(alg, 2, {(((), T, ()), ((), T, ())): ONE})
    dE = _delta_word(alg, E, _delta_e, caches["dE"])
    out = dF * dT * dE
    caches["dkey"][key] = out
    return out


def coproduct(x: Element) -> TensorElement:
    alg = x.alg
    out = TensorElement(alg, 2, {})
    for key, c in x.terms.items():
        out = out + coproduct_key(alg, key).scale(c)
    return out


def iterated_coproduct(x: Element, k: int = 3) -> TensorElement:
    """(Delta ⊗ 1) Delta for k = 3; plain Delta for k = 2."""
    if k == 2:
        return coproduct(x)
    if k != 3:
        raise ValueError("only k in {2, 3} is supported")
    return coproduct_left(coproduct(x))


def coproduct_left(t: TensorElement) -> TensorElement:
    """(Delta ⊗ 1) applied to a rank-2 tensor."""
    alg = t.alg
    out: dict = {}
    for (k1, k2), c in t.terms.items():
        for (a, b), c1 in coproduct_key(alg, k1).terms.items():
            key = (a, b, k2)
            out[key] = out.get(key, ZERO) + c * c1
    return TensorElement(alg, 3, out)


def coproduct_right(t: TensorElement) -> TensorElement:
    """(1 ⊗ Delta) applied to a rank-2 tensor."""
    alg = t.alg
    out: dict = {}
    for (k1, k2), c in t.terms.items():
        for (a, b), c1 in coproduct_key(alg, k2).terms.items():
            key = (k1, a, b)
            out[key] = out.get(key, ZERO) + c * c1
    return TensorElement(alg, 3, out)


def counit_key(key) -> Scalar:
    F, _T, E = key
    return ZERO if (F or E) else ONE


def counit(x: Element) -> Scalar:
    out = ZERO
    for key, c in x.terms.items():
        if not key[0] and not key[2]:
            out = out + c
    return out


# -- antipode -------------------------------------------------------------------


def _antipode_letter_e(alg: Algebra, i: int) -> Element:
    return -(alg.omega(i, -1) * alg.e(i))


def _antipode_letter_f(alg: Algebra, i: int) -> Element:
    return -(alg.f(i) * alg.omega_p(i, -1))


def antipode_key(alg: Algebra, key) -> Element:
    cache = _caches(alg)["S"]
    hit = cache.get(key)
    if hit is not None:
        return hit
    F, T, E = key
    out = alg.one()
    for i in reversed(E):
        out = out * _antipode_letter_e(alg, i)
    out = out * alg.torus(tuple(-x for x in T))
    for i in reversed(F):
        out = out * _antipode_letter_f(alg, i)
    cache[key] = out
    return out


def antipode(x: Element) -> Element:
    alg = x.alg
    out = alg.zero()
    for key, c in x.terms.items():
        out = out + antipode_key(alg, key).scale(c)
    return out


# -- axiom residuals ------------------------------------------------------------


def hopf_axiom_residuals(x: Element) -> dict[str, Element | TensorElement]:
    """Residuals of coassociativity, counit and antipode axioms at x (all zero when they hold)."""
    alg = x.alg
    d = coproduct(x)
    res: dict = {}
    res["coassociativity"] = coproduct_left(d) - coproduct_right(d)
    left = alg.zero()
    right = alg.zero()
    for (k1, k2), c in d.terms.items():
        e1, e2 = counit_key(k1), counit_key(k2)
        if not e1.is_zero():
            left = left + Element(alg, {k2: c * e1})
        if not e2.is_zero():
            right = right + Element(alg, {k1: c * e2})
    res["counit_left"] = left - x
    res["counit_right"] = right - x
    s_left = alg.zero()
    s_right = alg.zero()
    for (k1, k2), c in d.terms.items():
        s_left = s_left + (antipode_key(alg, k1) * Element(alg, {k2: c}))
        s_right = s_right + (Element(alg, {k1: c}) * antipode_key(alg, k2))
    eps = alg.scalar(counit(x))
    res["antipode_left"] = s_left - eps
    res["antipode_right"] = s_right - eps
    return res


def homomorphism_residual(x: Element, y: Element) -> TensorElement:
    return coproduct(x * y) - coproduct(x) * coproduct(y)


def antihomomorphism_residual(x: Element, y: Element) -> Element:
    return antipode(x * y) - antipode(y) * antipode(x)


def grouplike(alg: Algebra, t: Sequence[int]) -> TensorElement:
    k = ((), tuple(t), ())
    return TensorElement(alg, 2, {(k, k): ONE})
