"""Cross multiplication in the Drinfel'd double of the Borel parts and its comparison with the full algebra."""

from __future__ import annotations

import random
from typing import Callable

from .hopf import antipode, coproduct, coproduct_key, coproduct_left, iterated_coproduct
from .pairing import pair_words
from .presentation import Algebra, Element, Generator, key_text
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "DoubleElement",
    "cross_product",
    "phi",
    "lower_generators",
    "upper_generators",
    "verify_double_iso",
    "double_coalgebra_residual",
]


class DoubleElement:
    """sum c * (a ⊗ b) with a in the upper Borel part and b in the lower Borel part."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (ka, kb), c in sorted(self.terms.items(), key=lambda kv: (key_text(kv[0][0]), key_text(kv[0][1]))):
            parts.append(f"{c} * {key_text(ka) or '1'} ⊗ {key_text(kb) or '1'}")
        return " + ".join(parts)

    __repr__ = __str__


def _single(alg, key) -> Element:
    return Element(alg, {key: ONE})


def cross_product(b: Element, a: Element, pair: Callable | None = None) -> DoubleElement:
    """(1 ⊗ b)(a ⊗ 1) = sum (S(b_(1)), a_(1)) (b_(3), a_(3)) a_(2) ⊗ b_(2).

    ``pair`` defaults to the algebra's Hopf pairing; tests pass a perturbed one.
    """
    alg = a.alg
    pair = pair or pair_words
    db = iterated_coproduct(b, 3)
    da = iterated_coproduct(a, 3)
    s_cache: dict = {}
    p_cache: dict = {}

    def pv(kb, ka, apply_s):
        key = (kb, ka, apply_s)
        if key not in p_cache:
            y = _single(alg, kb)
            if apply_s:
                if kb not in s_cache:
                    s_cache[kb] = antipode(y)
                y = s_cache[kb]
            p_cache[key] = pair(y, _single(alg, ka))
        return p_cache[key]

    out: dict = {}
    for (b1, b2, b3), cb in db.terms.items():
        for (a1, a2, a3), ca in da.terms.items():
            left = pv(b1, a1, True)
            if left.is_zero():
                continue
            right = pv(b3, a3, False)
            if right.is_zero():
                continue
            k = (a2, b2)
            out[k] = out.get(k, ZERO) + cb * ca * left * right
    return DoubleElement(alg, out)


def phi(x: DoubleElement) -> Element:
    """a ⊗ b -> a b in the full algebra."""
    alg = x.alg
    out = alg.zero()
    for (ka, kb), c in x.terms.items():
        out = out + (_single(alg, ka) * _single(alg, kb)).scale(c)
    return out


def lower_generators(alg: Algebra) -> list[tuple[str, Element]]:
    n = alg.n
    out = [(f"f{i}", alg.f(i)) for i in range(1, n)]
    out += [(f"wp{i}", alg.omega_p(i)) for i in range(1, n)]
    out += [(f"wp{i}^-1", alg.omega_p(i, -1)) for i in range(1, n)]
    if alg.kind == "gl":
        out += [(f"b{n}", alg.b(n)), (f"b{n}^-1", alg.b(n, -1))]
    return out


def upper_generators(alg: Algebra) -> list[tuple[str, Element]]:
    n = alg.n
    out = [(f"e{i}", alg.e(i)) for i in range(1, n)]
    out += [(f"w{i}", alg.omega(i)) for i in range(1, n)]
    out += [(f"w{i}^-1", alg.omega(i, -1)) for i in range(1, n)]
    if alg.kind == "gl":
        out += [(f"a{n}", alg.a(n)), (f"a{n}^-1", alg.a(n, -1))]
    return out


def double_coalgebra_residual(b: Element, a: Element) -> bool:
    """Check Delta(phi(a ⊗ b)) = (phi ⊗ phi)(Delta_D(a ⊗ b)) with the tensor coalgebra on the double."""
    alg = a.alg
    lhs = coproduct(a * b)
    da, db = coproduct(a), coproduct(b)
    rhs = None
    for (a1, a2), ca in da.terms.items():
        for (b1, b2), cb in db.terms.items():
            from .hopf import tensor

            t = tensor(_single(alg, a1) * _single(alg, b1), _single(alg, a2) * _single(alg, b2)).scale(ca * cb)
            rhs = t if rhs is None else rhs + t
    return (lhs - rhs).is_zero()


def _random_word(alg, gens, rng, max_len):
    x = alg.one()
    for _ in range(rng.randint(1, max_len)):
        x = x * rng.choice(gens)[1]
    return x


def verify_double_iso(
    n: int,
    kind: str = "gl",
    alg: Algebra | None = None,
    pair: Callable | None = None,
    random_words: int = 0,
    seed: int = 0,
    max_len: int = 3,
) -> dict:
    """Compare phi(cross_product(b, a)) with b*a for all generator pairs (and optional random words).

    Returns {"pass": bool, "residuals": {label: text}, "checked": count}.
    """
    alg = alg or Algebra(n, kind)
    lows, ups = lower_generators(alg), upper_generators(alg)
    cases = [(f"({bl},{al})", b, a) for bl, b in lows for al, a in ups]
    rng = random.Random(seed)
    for k in range(random_words):
        b = _random_word(alg, lows, rng, max_len)
        a = _random_word(alg, ups, rng, max_len)
        cases.append((f"random{k}", b, a))
    residuals = {}
    coalg_fail = []
    for label, b, a in cases:
        res = phi(cross_product(b, a, pair)) - b * a
        if not res.is_zero():
            residuals[label] = str(res)
    for bl, b in lows:
        for al, a in ups:
            if not double_coalgebra_residual(b, a):
                coalg_fail.append(f"({bl},{al})")
    return {
        "pass": not residuals and not coalg_fail,
        "residuals": residuals,
        "coalgebra_failures": coalg_fail,
        "checked": len(cases),
    }
