"""Presented algebras U_{r,s}(gl_n), U_{r,s}(sl_n) and their straightening engine.

Elements are kept in the triangular normal form ``F-word * torus * E-word``.
Torus monomials are exponent vectors; F- and E-words are raw index tuples
(their Serre relations are handled by the pairing quotient, see
:mod:`qgr.pairing`).
"""

from __future__ import annotations

import threading
from typing import Iterable, NamedTuple, Sequence

from .scalars import ONE, R, S, U, V, ZERO, Scalar, as_scalar, int_power

__all__ = [
    "RootData",
    "Generator",
    "Algebra",
    "Element",
    "build_algebra",
    "normal_form",
    "multiply",
    "relations",
    "relation_residuals",
    "random_element",
    "omega_lambda",
    "eps_to_alpha",
    "alpha_to_eps",
]


class RootData:
    """Type A_{n-1} inside R^n with the extra convention alpha_n = eps_n."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"n must be >= 2 (got {n}); the root system would be empty")
        self.n = n

    def alpha(self, j: int) -> tuple[int, ...]:
        """eps-coordinates of alpha_j (1 <= j <= n)."""
        n = self.n
        vec = [0] * n
        vec[j - 1] = 1
        if j < n:
            vec[j] = -1
        return tuple(vec)

    def eps(self, i: int) -> tuple[int, ...]:
        vec = [0] * self.n
        vec[i - 1] = 1
        return tuple(vec)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(x, y))

    def eps_alpha(self, i: int, j: int) -> int:
        """<eps_i, alpha_j>."""
        return self.alpha(j)[i - 1]

    def root_to_eps(self, zeta: Sequence[int]) -> tuple[int, ...]:
        """eps-coordinates of sum_j zeta_j alpha_j, j < n."""
        n = self.n
        vec = [0] * n
        for j, c in enumerate(zeta):
            vec[j] += c
            vec[j + 1] -= c
        return tuple(vec)

    def positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots eps_i - eps_j as alpha-coordinate vectors of length n-1."""
        out = []
        for i in range(self.n - 1):
            for j in range(i + 1, self.n):
                out.append(tuple(1 if i <= k < j else 0 for k in range(self.n - 1)))
        return out


def eps_to_alpha(eps: Sequence[int]) -> tuple[int, ...]:
    """alpha_k = sum_{i <= k} eps_i, with alpha_n = eps_n."""
    out, acc = [], 0
    for c in eps:
        acc += c
        out.append(acc)
    return tuple(out)


def alpha_to_eps(alpha: Sequence[int]) -> tuple[int, ...]:
    out, prev = [], 0
    for c in alpha:
        out.append(c - prev)
        prev = c
    return tuple(out)


class Generator(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


_GL_KINDS = {"E", "F", "A", "Ainv", "B", "Binv"}
_SL_KINDS = {"E", "F", "W", "Winv", "Wp", "Wpinv"}


class Algebra:
    """Handle for U_{r,s}(gl_n) (kind 'gl') or U_{r,s}(sl_n) (kind 'sl').

    ``r`` and ``s`` default to the symbolic u**2, v**2.  Passing rational
    values builds a specialized copy with identical structure; ``sqrt_rs`` is
    a square root of r/s (needed only by the Casimir weight function).
    """

    def __init__(self, n: int, kind: str = "gl", r=None, s=None, sqrt_rs=None):
        if kind not in ("gl", "sl"):
            raise ValueError(f"kind must be 'gl' or 'sl', not {kind!r}")
        self.roots = RootData(n)
        self.n = n
        self.kind = kind
        self.symbolic = r is None and s is None
        self.r = R if r is None else as_scalar(r)
        self.s = S if s is None else as_scalar(s)
        if self.r == self.s:
            raise ValueError("r = s is excluded")
        if self.r.is_zero() or self.s.is_zero():
            raise ValueError("r and s must be nonzero")
        if sqrt_rs is None and self.symbolic:
            sqrt_rs = U / V
        self.sqrt_rs = None if sqrt_rs is None else as_scalar(sqrt_rs)
        self.r_minus_s_inv = (self.r - self.s).inverse()

        # each torus generator g acts on weight w by r^{R_g.w} s^{S_g.w}
        rd = self.roots
        if kind == "gl":
            self.torus_names = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)]
            zero = (0,) * n
            self._char_r = [rd.eps(i) for i in range(1, n + 1)] + [zero] * n
            self._char_s = [zero] * n + [rd.eps(i) for i in range(1, n + 1)]
        else:
            self.torus_names = [f"w{i}" for i in range(1, n)] + [f"wp{i}" for i in range(1, n)]
            self._char_r = [rd.eps(i) for i in range(1, n)] + [rd.eps(i + 1) for i in range(1, n)]
            self._char_s = [rd.eps(i + 1) for i in range(1, n)] + [rd.eps(i) for i in range(1, n)]
        self.torus_size = len(self.torus_names)
        self.zero_torus = (0,) * self.torus_size

        self._lock = threading.RLock()
        self._rs_cache: dict = {}
        self._char_cache: dict = {}
        self._straighten_cache: dict = {}
        self._ef_cache: dict = {}

    # -- bookkeeping ------------------------------------------------------

    def __repr__(self):
        tag = "" if self.symbolic else f", r={self.r}, s={self.s}"
        return f"Algebra(n={self.n}, kind={self.kind!r}{tag})"

    def same_structure(self, other: "Algebra") -> bool:
        return (
            self is other
            or (self.n == other.n and self.kind == other.kind and self.r == other.r and self.s == other.s)
        )

    def rs(self, a: int, b: int) -> Scalar:
        """r**a * s**b."""
        key = (a, b)
        val = self._rs_cache.get(key)
        if val is None:
            if self.symbolic:
                val = Scalar.monomial(2 * a, 2 * b)
            else:
                val = int_power(self.r, a) * int_power(self.s, b)
            self._rs_cache[key] = val
        return val

    def torus_unit(self, g: int, k: int = 1) -> tuple[int, ...]:
        t = [0] * self.torus_size
        t[g] = k
        return tuple(t)

    def omega_torus(self, i: int, primed: bool = False) -> tuple[int, ...]:
        """Exponent vector of omega_i (or omega'_i)."""
        n = self.n
        if not 1 <= i < n:
            raise ValueError(f"omega index {i} out of range for n={n}")
        if self.kind == "sl":
            return self.torus_unit(i - 1 + (n - 1 if primed else 0))
        t = [0] * self.torus_size
        if primed:  # a_{i+1} b_i
            t[i] += 1
            t[n + i - 1] += 1
        else:  # a_i b_{i+1}
            t[i - 1] += 1
            t[n + i] += 1
        return tuple(t)

    def torus_char_exponents(self, t: Sequence[int], weight: Sequence[int]) -> tuple[int, int]:
        pr = ps = 0
        for k, cr, cs in zip(t, self._char_r, self._char_s):
            if k:
                pr += k * sum(a * b for a, b in zip(cr, weight))
                ps += k * sum(a * b for a, b in zip(cs, weight))
        return pr, ps

    def torus_char(self, t: Sequence[int], weight: Sequence[int]) -> Scalar:
        """Value of the torus monomial t on a weight vector of weight ``weight`` (eps-coords)."""
        key = (tuple(t), tuple(weight))
        val = self._char_cache.get(key)
        if val is None:
            val = self._char_cache[key] = self.rs(*self.torus_char_exponents(t, weight))
        return val

    def content(self, word: Sequence[int]) -> tuple[int, ...]:
        c = [0] * (self.n - 1)
        for i in word:
            c[i - 1] += 1
        return tuple(c)

    def word_weight(self, word: Sequence[int]) -> tuple[int, ...]:
        return self.roots.root_to_eps(self.content(word))

    def neg_word_weight(self, word: Sequence[int]) -> tuple[int, ...]:
        return tuple(-x for x in self.word_weight(word))

    # -- generators -------------------------------------------------------

    def check_generator(self, g: Generator) -> None:
        kinds = _GL_KINDS if self.kind == "gl" else _SL_KINDS
        if g.kind not in kinds:
            raise ValueError(f"generator kind {g.kind} not available in {self.kind}_{self.n}")
        hi = self.n if g.kind in ("A", "Ainv", "B", "Binv") else self.n - 1
        if not 1 <= g.index <= hi:
            raise ValueError(f"generator index out of range: {g}")

    def generator_key(self, g: Generator):
        self.check_generator(g)
        n, i = self.n, g.index
        if g.kind == "E":
            return ((), self.zero_torus, (i,))
        if g.kind == "F":
            return ((i,), self.zero_torus, ())
        offset = {"A": 0, "Ainv": 0, "B": n, "Binv": n, "W": 0, "Winv": 0, "Wp": n - 1, "Wpinv": n - 1}[g.kind]
        sign = -1 if g.kind.endswith("inv") else 1
        return ((), self.torus_unit(offset + i - 1, sign), ())

    def generators(self) -> list[Generator]:
        n = self.n
        out = [Generator("E", i) for i in range(1, n)] + [Generator("F", i) for i in range(1, n)]
        if self.kind == "gl":
            for k in ("A", "Ainv", "B", "Binv"):
                out += [Generator(k, i) for i in range(1, n + 1)]
        else:
            for k in ("W", "Winv", "Wp", "Wpinv"):
                out += [Generator(k, i) for i in range(1, n)]
        return out

    def gen(self, kind: str, index: int) -> "Element":
        return Element(self, {self.generator_key(Generator(kind, index)): ONE})

    def e(self, i: int) -> "Element":
        return self.gen("E", i)

    def f(self, i: int) -> "Element":
        return self.gen("F", i)

    def a(self, i: int, k: int = 1) -> "Element":
        if self.kind != "gl":
            raise ValueError("a_i exists only in the gl-type algebra")
        return self.torus(self.torus_unit(i - 1, k))

    def b(self, i: int, k: int = 1) -> "Element":
        if self.kind != "gl":
            raise ValueError("b_i exists only in the gl-type algebra")
        return self.torus(self.torus_unit(self.n + i - 1, k))

    def omega(self, i: int, k: int = 1) -> "Element":
        return self.torus(tuple(k * x for x in self.omega_torus(i)))

    def omega_p(self, i: int, k: int = 1) -> "Element":
        return self.torus(tuple(k * x for x in self.omega_torus(i, primed=True)))

    def torus(self, t: Sequence[int]) -> "Element":
        return Element(self, {((), tuple(t), ()): ONE})

    def one(self) -> "Element":
        return Element(self, {((), self.zero_torus, ()): ONE})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return self.one() * as_scalar(c)

    def fword(self, word: Sequence[int]) -> "Element":
        return Element(self, {(tuple(word), self.zero_torus, ()): ONE})

    def eword(self, word: Sequence[int]) -> "Element":
        return Element(self, {((), self.zero_torus, tuple(word)): ONE})

    def word(self, letters: Iterable[Generator]) -> "Element":
        out = self.one()
        for g in letters:
            out = out * Element(self, {self.generator_key(g): ONE})
        return out

    # -- straightening ----------------------------------------------------

    def _ef(self, i: int, fw: tuple[int, ...]) -> dict:
        """e_i * f_{fw} as {(F, T, E): coeff} with E in {(), (i,)}."""
        key = (i, fw)
        cached = self._ef_cache.get(key)
        if cached is not None:
            return cached
        z = self.zero_torus
        if not fw:
            out = {((), z, (i,)): ONE}
        else:
            j, rest = fw[0], fw[1:]
            out = {}
            for (F, T, E), c in self._ef(i, rest).items():
                out[((j,) + F, T, E)] = c
            if i == j:
                w_rest = self.neg_word_weight(rest)
                for t, sign in ((self.omega_torus(i), 1), (self.omega_torus(i, primed=True), -1)):
                    c = self.r_minus_s_inv * self.torus_char(t, w_rest)
                    if sign < 0:
                        c = -c
                    k = (rest, t, ())
                    val = out.get(k, ZERO) + c
                    if val.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = val
        self._ef_cache[key] = out
        return out

    def straighten(self, ew: tuple[int, ...], fw: tuple[int, ...]) -> dict:
        """e_{ew} * f_{fw} in normal form, as {(F, T, E): coeff}."""
        z = self.zero_torus
        if not ew or not fw:
            return {(fw, z, ew): ONE}
        key = (ew, fw)
        cached = self._straighten_cache.get(key)
        if cached is not None:
            return cached
        head, i = ew[:-1], ew[-1]
        out: dict = {}
        for (Fa, Ta, Ea), ca in self._ef(i, fw).items():
            for (Fb, Tb, Eb), cb in self.straighten(head, Fa).items():
                # Eb * Ta = char(Ta, wt Eb)^{-1} Ta * Eb
                c = ca * cb
                if Eb and any(Ta):
                    c = c / self.torus_char(Ta, self.word_weight(Eb))
                T = tuple(x + y for x, y in zip(Tb, Ta))
                k = (Fb, T, Eb + Ea)
                val = out.get(k, ZERO) + c
                if val.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = val
        self._straighten_cache[key] = out
        return out

    def mul_keys(self, k1, k2) -> dict:
        F1, T1, E1 = k1
        F2, T2, E2 = k2
        out: dict = {}
        t1_nontrivial = any(T1)
        t2_nontrivial = any(T2)
        for (F, T, E), c in self.straighten(E1, F2).items():
            if t1_nontrivial and F:
                c = c * self.torus_char(T1, self.neg_word_weight(F))
            if t2_nontrivial and E:
                c = c / self.torus_char(T2, self.word_weight(E))
            key = (F1 + F, tuple(a + b + d for a, b, d in zip(T1, T, T2)), E + E2)
            out[key] = out.get(key, ZERO) + c
        return out


def build_algebra(n: int, kind: str = "gl", **kw) -> Algebra:
    return Algebra(n, kind, **kw)


def _key_order(key):
    F, T, E = key
    return (len(F), F, T, len(E), E)


class Element:
    """Finite linear combination of normal-form monomials ``F * T * E``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    # -- helpers ----------------------------------------------------------

    def _check(self, other: "Element"):
        if not self.alg.same_structure(other.alg):
            raise ValueError("mixed algebra handles")

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _key_order(kv[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, key) -> Scalar:
        return self.terms.get(key, ZERO)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.alg.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = as_scalar(c)
        if c.is_zero():
            return Element(self.alg, {})
        return Element(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = as_scalar(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        alg = self.alg
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c12 = c1 * c2
                for k, c in alg.mul_keys(k1, k2).items():
                    out[k] = out.get(k, ZERO) + c12 * c
        return Element(alg, out)

    def __rmul__(self, other):
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def is_grouplike_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (F, _T, E), _c = next(iter(self.terms.items()))
        return not F and not E

    def inverse(self) -> "Element":
        """Inverse of a scalar multiple of a torus monomial."""
        if not self.is_grouplike_monomial():
            raise ValueError("only scalar multiples of torus monomials are inverted")
        (F, T, E), c = next(iter(self.terms.items()))
        return Element(self.alg, {((), tuple(-x for x in T), ()): c.inverse()})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg.same_structure(other.alg) and self.terms == other.terms
        c = as_scalar(other)
        if c is NotImplemented:
            return False
        return self.terms == self.alg.scalar(c).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- text -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(term_text(c, k) for k, c in self.sorted_terms())

    def __repr__(self):
        return f"Element[{self}]"


def key_text(key) -> str:
    F, T, E = key
    parts = []
    if F:
        parts.append("f[" + " ".join(map(str, F)) + "]")
    if any(T):
        parts.append("t[" + " ".join(map(str, T)) + "]")
    if E:
        parts.append("e[" + " ".join(map(str, E)) + "]")
    return " * ".join(parts)


def term_text(c: Scalar, key) -> str:
    body = key_text(key)
    return f"{c} * {body}" if body else str(c)


def multiply(x: Element, y: Element) -> Element:
    return x * y


def normal_form(alg: Algebra, expr: Iterable) -> Element:
    """Normal form of a raw expression ``[(coeff, [Generator, ...]), ...]``."""
    out = alg.zero()
    for coeff, letters in expr:
        out = out + alg.word(letters).scale(coeff)
    return out


def omega_lambda(alg: Algebra, lam_alpha: Sequence[int], primed: bool = False) -> Element:
    """omega_lambda = omega_1^{l_1} ... omega_{n-1}^{l_{n-1}} a_n^{l_n} (b_n when primed).

    ``lam_alpha`` is in alpha-coordinates including alpha_n = eps_n.
    """
    n = alg.n
    lam = tuple(lam_alpha)
    if len(lam) != n:
        raise ValueError(f"weight needs {n} alpha-coordinates")
    t = [0] * alg.torus_size
    for j in range(1, n):
        for idx, x in enumerate(alg.omega_torus(j, primed)):
            t[idx] += lam[j - 1] * x
    if lam[n - 1]:
        if alg.kind == "sl":
            raise ValueError("weight lies outside the root lattice; sl-type has no a_n, b_n")
        g = (2 * n - 1) if primed else (n - 1)
        t[g] += lam[n - 1]
    return alg.torus(t)


# -- defining relations -----------------------------------------------------


def relations(alg: Algebra) -> list[tuple[str, list]]:
    """All defining relations as raw expressions ``[(coeff, [Generator, ...])]`` equal to 0."""
    n, r, s = alg.n, alg.r, alg.s
    rd = alg.roots
    G = Generator
    out: list[tuple[str, list]] = []
    one = ONE

    def pw(x, k):
        return int_power(x, k)

    if alg.kind == "gl":
        tor = [("A", i) for i in range(1, n + 1)] + [("B", i) for i in range(1, n + 1)]
        for x in range(len(tor)):
            for y in range(x + 1, len(tor)):
                gx, gy = G(*tor[x]), G(*tor[y])
                out.append((f"R1 [{gx},{gy}]", [(one, [gx, gy]), (-one, [gy, gx])]))
        for k, i in tor:
            g, gi = G(k, i), G(k + "inv", i)
            out.append((f"R1 {g}*{gi}", [(one, [g, gi]), (-one, [])]))
            out.append((f"R1 {gi}*{g}", [(one, [gi, g]), (-one, [])]))
        for i in range(1, n + 1):
            for j in range(1, n):
                p = rd.eps_alpha(i, j)
                out.append((f"R2 a{i} e{j}", [(one, [G("A", i), G("E", j)]), (-pw(r, p), [G("E", j), G("A", i)])]))
                out.append((f"R2 a{i} f{j}", [(one, [G("A", i), G("F", j)]), (-pw(r, -p), [G("F", j), G("A", i)])]))
                out.append((f"R3 b{i} e{j}", [(one, [G("B", i), G("E", j)]), (-pw(s, p), [G("E", j), G("B", i)])]))
                out.append((f"R3 b{i} f{j}", [(one, [G("B", i), G("F", j)]), (-pw(s, -p), [G("F", j), G("B", i)])]))
        for i in range(1, n):
            for j in range(1, n):
                expr = [(one, [G("E", i), G("F", j)]), (-one, [G("F", j), G("E", i)])]
                if i == j:
                    c = (r - s).inverse()
                    expr += [(-c, [G("A", i), G("B", i + 1)]), (c, [G("A", i + 1), G("B", i)])]
                out.append((f"R4 e{i} f{j}", expr))
    else:
        tor = [("W", i) for i in range(1, n)] + [("Wp", i) for i in range(1, n)]
        for x in range(len(tor)):
            for y in range(x + 1, len(tor)):
                gx, gy = G(*tor[x]), G(*tor[y])
                out.append((f"R1' [{gx},{gy}]", [(one, [gx, gy]), (-one, [gy, gx])]))
        for k, i in tor:
            g, gi = G(k, i), G(k + "inv", i)
            out.append((f"R1' {g}*{gi}", [(one, [g, gi]), (-one, [])]))
            out.append((f"R1' {gi}*{g}", [(one, [gi, g]), (-one, [])]))
        for i in range(1, n):
            for j in range(1, n):
                c = pw(r, rd.eps_alpha(i, j)) * pw(s, rd.eps_alpha(i + 1, j))
                cp = pw(r, rd.eps_alpha(i + 1, j)) * pw(s, rd.eps_alpha(i, j))
                w, wp, e, f = G("W", i), G("Wp", i), G("E", j), G("F", j)
                out.append((f"R2' w{i} e{j}", [(one, [w, e]), (-c, [e, w])]))
                out.append((f"R2' w{i} f{j}", [(one, [w, f]), (-c.inverse(), [f, w])]))
                out.append((f"R3' wp{i} e{j}", [(one, [wp, e]), (-cp, [e, wp])]))
                out.append((f"R3' wp{i} f{j}", [(one, [wp, f]), (-cp.inverse(), [f, wp])]))
        for i in range(1, n):
            for j in range(1, n):
                expr = [(one, [G("E", i), G("F", j)]), (-one, [G("F", j), G("E", i)])]
                if i == j:
                    c = (r - s).inverse()
                    expr += [(-c, [G("W", i)]), (c, [G("Wp", i)])]
                out.append((f"R4' e{i} f{j}", expr))
    out.extend(serre_relations(alg))
    return out


def serre_relations(alg: Algebra) -> list[tuple[str, list]]:
    """Serre-type relations, including commutation of distant root vectors."""
    n, r, s = alg.n, alg.r, alg.s
    G = Generator
    one = ONE
    out = []
    for i in range(1, n):
        for j in range(i + 2, n):
            for k in ("E", "F"):
                out.append((f"R5 [{k.lower()}{i},{k.lower()}{j}]", [(one, [G(k, i), G(k, j)]), (-one, [G(k, j), G(k, i)])]))
    for i in range(1, n - 1):
        e, e1 = G("E", i), G("E", i + 1)
        out.append((f"R6a i={i}", [(one, [e, e, e1]), (-(r + s), [e, e1, e]), (r * s, [e1, e, e])]))
        out.append((f"R6b i={i}", [(one, [e, e1, e1]), (-(r + s), [e1, e, e1]), (r * s, [e1, e1, e])]))
        f, f1 = G("F", i), G("F", i + 1)
        ri, si = r.inverse(), s.inverse()
        out.append((f"R7a i={i}", [(one, [f, f, f1]), (-(ri + si), [f, f1, f]), (ri * si, [f1, f, f])]))
        out.append((f"R7b i={i}", [(one, [f, f1, f1]), (-(ri + si), [f1, f, f1]), (ri * si, [f1, f1, f])]))
    return out


def relation_residuals(alg: Algebra) -> list[tuple[str, Element]]:
    return [(name, normal_form(alg, expr)) for name, expr in relations(alg)]


def random_element(alg: Algebra, rng, max_len: int = 3, max_terms: int = 3) -> Element:
    """Small random linear combination of generator words (for property checks)."""
    gens = alg.generators()
    x = alg.zero()
    for _ in range(rng.randint(1, max_terms)):
        word = [rng.choice(gens) for _ in range(rng.randint(1, max_len))]
        c = rng.choice([-2, -1, 1, 2, 3])
        x = x + alg.word(word).scale(Scalar.from_int(c))
    return x
