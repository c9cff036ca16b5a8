"""Hopf pairing between the lower and upper Borel parts, p-maps, f-form and dual bases.

The positive part U+ (and U-) is never given a PBW basis.  Instead each
graded piece is modelled as span(words) modulo the radical of the pairing:
a Gram matrix of word values is computed and a deterministic set of
representative words is chosen on which it is invertible.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .presentation import Algebra, Element, Generator
from .scalars import ONE, ZERO, Scalar, int_power

__all__ = [
    "PairingContext",
    "GradedBasis",
    "DualPair",
    "get_context",
    "pair_generators",
    "pair_words",
    "pair_elements",
    "torus_pairing",
    "p_map",
    "p_map_minus",
    "f_form",
    "f_form_via_torus",
    "graded_basis",
    "dual_bases",
    "words_of_content",
    "kostant_partition_count",
    "oracle_pair_letters",
    "oracle_p_map",
    "oracle_p_map_minus",
    "contents_up_to",
    "presentation_check",
]

DEFAULT_MAX_HEIGHT = 6


def words_of_content(zeta: Sequence[int]) -> list[tuple[int, ...]]:
    """All index words with content zeta, in lexicographic order."""
    letters = []
    for j, c in enumerate(zeta):
        letters += [j + 1] * c
    return sorted(set(permutations(letters)))


def contents_up_to(n: int, height: int, min_height: int = 0) -> list[tuple[int, ...]]:
    """All zeta in Q+ (n-1 coordinates) with min_height <= height(zeta) <= height."""
    out = []

    def rec(prefix, left):
        if len(prefix) == n - 1:
            if sum(prefix) >= min_height:
                out.append(tuple(prefix))
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    rec([], height)
    return sorted(out, key=lambda z: (sum(z), tuple(-c for c in z)))


def kostant_partition_count(n: int, zeta: Sequence[int]) -> int:
    """Number of multisets of positive roots of A_{n-1} summing to zeta (brute force)."""
    roots = []
    for i in range(n - 1):
        for j in range(i + 1, n):
            roots.append(tuple(1 if i <= k < j else 0 for k in range(n - 1)))

    def rec(idx, rem):
        if all(c == 0 for c in rem):
            return 1
        if idx == len(roots):
            return 0
        total = 0
        root = roots[idx]
        cur = tuple(rem)
        while all(c >= 0 for c in cur):
            total += rec(idx + 1, cur)
            cur = tuple(a - b for a, b in zip(cur, root))
        return total

    return rec(0, tuple(zeta))


# -- generator table and torus bicharacter ---------------------------------------


def _lower_torus_coords(alg: Algebra, t: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of t over (omega'_1..omega'_{n-1}, b_n) (gl) or omega'_j (sl)."""
    n = alg.n
    t = tuple(t)
    if alg.kind == "sl":
        if any(t[: n - 1]):
            raise ValueError("torus monomial is not in the lower Borel part")
        return t[n - 1 :] + (0,)
    a, b = t[:n], t[n:]
    c = [b[j] for j in range(n - 1)] + [b[n - 1]]
    # omega'_j = a_{j+1} b_j
    if a[0] != 0 or any(a[j + 1] != b[j] for j in range(n - 1)):
        raise ValueError("torus monomial is not in the lower Borel part")
    return tuple(c)


def _upper_torus_coords(alg: Algebra, t: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of t over (omega_1..omega_{n-1}, a_n) (gl) or omega_j (sl)."""
    n = alg.n
    t = tuple(t)
    if alg.kind == "sl":
        if any(t[n - 1 :]):
            raise ValueError("torus monomial is not in the upper Borel part")
        return t[: n - 1] + (0,)
    a, b = t[:n], t[n:]
    # omega_j = a_j b_{j+1}
    if b[0] != 0 or any(b[j + 1] != a[j] for j in range(n - 1)):
        raise ValueError("torus monomial is not in the upper Borel part")
    return tuple(a)


def _torus_table_exponents(alg: Algebra, i: int, j: int) -> tuple[int, int]:
    """(r, s) exponents of (g'_i, g_j); index n stands for b_n / a_n."""
    rd = alg.roots
    n = alg.n
    if i < n and j < n:
        return rd.eps_alpha(j, i), rd.eps_alpha(j + 1, i)
    if i == n and j < n:
        return 0, -rd.eps_alpha(n, j)
    if i < n and j == n:
        return rd.eps_alpha(n, i), 0
    return 0, 0


def torus_pairing(alg: Algebra, t_lower: Sequence[int], t_upper: Sequence[int]) -> Scalar:
    cl = _lower_torus_coords(alg, t_lower)
    cu = _upper_torus_coords(alg, t_upper)
    pr = ps = 0
    for i, ci in enumerate(cl, start=1):
        if not ci:
            continue
        for j, cj in enumerate(cu, start=1):
            if cj:
                er, es = _torus_table_exponents(alg, i, j)
                pr += ci * cj * er
                ps += ci * cj * es
    return alg.rs(pr, ps)


_LOWER_KINDS = {"F", "Wp", "Wpinv", "Bn", "Bninv"}
_UPPER_KINDS = {"E", "W", "Winv", "An", "Aninv"}


def pair_generators(alg: Algebra, y: Generator, x: Generator) -> Scalar:
    """Generator table of the pairing.

    Lower generators: F(i), Wp(i), Wpinv(i) and B(n)/Binv(n) (gl only).
    Upper generators: E(j), W(j), Winv(j) and A(n)/Ainv(n) (gl only).
    """
    y, x = _pairing_letter(alg, y, lower=True), _pairing_letter(alg, x, lower=False)
    return _pair_letters_table(alg, y, x)


def _pairing_letter(alg: Algebra, g: Generator, lower: bool) -> Generator:
    n = alg.n
    kind = g.kind
    if kind in ("B", "Binv", "A", "Ainv"):
        if alg.kind != "gl" or g.index != n:
            raise ValueError(f"{g} is not a generator of the Borel parts being paired")
        kind = {"B": "Bn", "Binv": "Bninv", "A": "An", "Ainv": "Aninv"}[kind]
    allowed = _LOWER_KINDS if lower else _UPPER_KINDS
    if kind not in allowed:
        side = "lower" if lower else "upper"
        raise ValueError(f"{g} is not a {side} Borel generator")
    if kind in ("F", "E", "W", "Winv", "Wp", "Wpinv") and not 1 <= g.index < n:
        raise ValueError(f"generator index out of range: {g}")
    return Generator(kind, g.index)


def _pair_letters_table(alg: Algebra, y: Generator, x: Generator) -> Scalar:
    if y.kind == "F" or x.kind == "E":
        if y.kind == "F" and x.kind == "E" and y.index == x.index:
            return (alg.s - alg.r).inverse()
        return ZERO
    n = alg.n
    i = n if y.kind.startswith("Bn") else y.index
    j = n if x.kind.startswith("An") else x.index
    sign = (-1 if y.kind.endswith("inv") else 1) * (-1 if x.kind.endswith("inv") else 1)
    er, es = _torus_table_exponents(alg, i, j)
    return alg.rs(sign * er, sign * es)


# -- independent oracle: expansion down to the generator table -------------------


def _delta_upper_letter(alg, g: Generator):
    if g.kind == "E":
        return [((g,), ()), ((Generator("W", g.index),), (g,))]
    return [((g,), (g,))]


def _delta_lower_letter(alg, g: Generator):
    if g.kind == "F":
        return [((), (g,)), ((g,), (Generator("Wp", g.index),))]
    return [((g,), (g,))]


def _counit_letters(x) -> Scalar:
    return ZERO if any(g.kind in ("E", "F") for g in x) else ONE


def oracle_pair_letters(alg: Algebra, y: Sequence[Generator], x: Sequence[Generator], _memo=None) -> Scalar:
    """Pairing of letter words computed only from the Hopf pairing axioms and the generator table.

    Letters are normalized Borel generators (see :func:`pair_generators`); W(j)
    stands for omega_j and Wp(i) for omega'_i in both gl and sl type.  The rules
    are (yy', x) = sum (y, x_(1)) (y', x_(2)) and (y, xx') = sum (y_(2), x) (y_(1), x').
    Exponential in word length; intended for small test cases.
    """
    memo = {} if _memo is None else _memo
    y, x = tuple(y), tuple(x)
    key = (y, x)
    if key in memo:
        return memo[key]
    if not y:
        val = _counit_letters(x)
    elif not x:
        val = _counit_letters(y)
    elif len(y) == 1 and len(x) == 1:
        val = _pair_letters_table(alg, y[0], x[0])
    elif len(y) >= 2:
        head, rest = y[:1], y[1:]
        val = ZERO
        for x1, x2 in _expand_delta(alg, x, _delta_upper_letter):
            a = oracle_pair_letters(alg, head, x1, memo)
            if a.is_zero():
                continue
            val = val + a * oracle_pair_letters(alg, rest, x2, memo)
    else:
        head, rest = x[:1], x[1:]
        val = ZERO
        for y1, y2 in _expand_delta(alg, y, _delta_lower_letter):
            a = oracle_pair_letters(alg, y2, head, memo)
            if a.is_zero():
                continue
            val = val + a * oracle_pair_letters(alg, y1, rest, memo)
    memo[key] = val
    return val


def _expand_delta(alg, word, letter_rule):
    out = [((), ())]
    for g in word:
        out = [(a + b, c + d) for a, c in out for b, d in letter_rule(alg, g)]
    return out


# -- p-maps -------------------------------------------------------------------------


class PairingContext:
    """Memo tables for pairing values, p-maps, Gram data and radical reductions of one algebra."""

    def __init__(self, alg: Algebra, max_height: int = DEFAULT_MAX_HEIGHT):
        self.alg = alg
        self.max_height = max_height
        self.s_minus_r_inv = (alg.s - alg.r).inverse()
        self._lock = threading.RLock()
        self._p_e: dict = {}
        self._p_f: dict = {}
        self._pair_a: dict = {}
        self._pair_b: dict = {}
        self._bases: dict = {}
        self._reduce_e: dict = {}
        self._reduce_f: dict = {}

    # -- p-maps on words --

    def p_e(self, i: int, word: tuple, primed: bool) -> dict:
        """p_i (or p'_i) of an E-word, as {word: coeff}."""
        key = (i, word, primed)
        hit = self._p_e.get(key)
        if hit is not None:
            return hit
        alg, rd = self.alg, self.alg.roots
        out: dict = {}
        if word:
            j, rest = word[0], word[1:]
            if primed:
                if j == i:
                    out[rest] = ONE
                c = alg.rs(-rd.eps_alpha(i + 1, j), -rd.eps_alpha(i, j))
                for w, cw in self.p_e(i, rest, True).items():
                    _acc(out, (j,) + w, c * cw)
            else:
                if j == i:
                    zr = alg.word_weight(rest)
                    out[rest] = alg.rs(zr[i - 1], zr[i])
                for w, cw in self.p_e(i, rest, False).items():
                    _acc(out, (j,) + w, cw)
        self._p_e[key] = out
        return out

    def p_f(self, i: int, word: tuple, primed: bool) -> dict:
        """p_i (or p'_i) of an F-word, as {word: coeff}."""
        key = (i, word, primed)
        hit = self._p_f.get(key)
        if hit is not None:
            return hit
        alg, rd = self.alg, self.alg.roots
        out: dict = {}
        if word:
            j, rest = word[0], word[1:]
            if primed:
                if j == i:
                    zr = alg.word_weight(rest)
                    out[rest] = alg.rs(-zr[i], -zr[i - 1])
                for w, cw in self.p_f(i, rest, True).items():
                    _acc(out, (j,) + w, cw)
            else:
                if j == i:
                    out[rest] = ONE
                c = alg.rs(rd.eps_alpha(i, j), rd.eps_alpha(i + 1, j))
                for w, cw in self.p_f(i, rest, False).items():
                    _acc(out, (j,) + w, c * cw)
        self._p_f[key] = out
        return out

    # -- word pairing --

    def pair_fe(self, fw: tuple, ew: tuple) -> Scalar:
        """(f_fw, e_ew) by peeling the leading f through p'-maps of the E-word."""
        if sorted(fw) != sorted(ew):
            return ZERO
        if not fw:
            return ONE
        key = (fw, ew)
        hit = self._pair_a.get(key)
        if hit is not None:
            return hit
        i, rest = fw[0], fw[1:]
        val = ZERO
        for w, c in self.p_e(i, ew, True).items():
            val = val + c * self.pair_fe(rest, w)
        val = val * self.s_minus_r_inv
        self._pair_a[key] = val
        return val

    def pair_fe_mirror(self, fw: tuple, ew: tuple) -> Scalar:
        """(f_fw, e_ew) by peeling the leading e through p-maps of the F-word."""
        if sorted(fw) != sorted(ew):
            return ZERO
        if not ew:
            return ONE
        key = (fw, ew)
        hit = self._pair_b.get(key)
        if hit is not None:
            return hit
        i, rest = ew[0], ew[1:]
        val = ZERO
        for w, c in self.p_f(i, fw, False).items():
            val = val + c * self.pair_fe_mirror(w, rest)
        val = val * self.s_minus_r_inv
        self._pair_b[key] = val
        return val

    def pair_fe_right(self, fw: tuple, ew: tuple) -> Scalar:
        """(f_fw, e_ew) peeling the trailing f (via p_i on E) as a third route."""
        if sorted(fw) != sorted(ew):
            return ZERO
        if not fw:
            return ONE
        i, head = fw[-1], fw[:-1]
        val = ZERO
        for w, c in self.p_e(i, ew, False).items():
            val = val + c * self.pair_fe_right(head, w)
        return val * self.s_minus_r_inv

    def pair_elements(self, y: Element, x: Element) -> Scalar:
        """Pairing of y in the lower Borel part with x in the upper Borel part."""
        alg = self.alg
        if not alg.same_structure(y.alg) or not alg.same_structure(x.alg):
            raise ValueError("mixed algebra handles")
        total = ZERO
        for (F, Tl, E0), cy in y.terms.items():
            if E0:
                raise ValueError("left argument must lie in the lower Borel part")
            for (F0, T, E), cx in x.terms.items():
                if F0:
                    raise ValueError("right argument must lie in the upper Borel part")
                v = self.pair_fe(F, E)
                if v.is_zero():
                    continue
                # T E = char(T, wt E) E T
                c = alg.torus_char(T, alg.word_weight(E)) if E and any(T) else ONE
                total = total + cy * cx * c * v * torus_pairing(alg, Tl, T)
        return total

    # -- graded pieces --

    def _check_height(self, zeta):
        h = sum(zeta)
        if h > self.max_height:
            raise ValueError(f"height {h} exceeds the configured cutoff {self.max_height}")
        if any(c < 0 for c in zeta):
            raise ValueError("zeta must lie in Q+")
        if len(zeta) != self.alg.n - 1:
            raise ValueError(f"zeta needs {self.alg.n - 1} coordinates")

    def graded_basis(self, zeta: Sequence[int]) -> "GradedBasis":
        zeta = tuple(zeta)
        self._check_height(zeta)
        with self._lock:
            hit = self._bases.get(zeta)
            if hit is not None:
                return hit
            words = words_of_content(zeta)
            gram = [[self.pair_fe(fw, ew) for ew in words] for fw in words]
            cols = _independent_columns(gram)
            sub_rows = [[row[c] for c in cols] for row in gram]
            rows = _independent_columns(_transpose(sub_rows))
            g_sub = [[gram[a][b] for b in cols] for a in rows]
            g_inv = _invert(g_sub)
            basis = GradedBasis(zeta, words, gram, len(cols), tuple(rows), tuple(cols), g_sub, g_inv)
            self._bases[zeta] = basis
            return basis

    def dual_bases(self, zeta: Sequence[int]) -> "DualPair":
        gb = self.graded_basis(zeta)
        alg = self.alg
        u = [alg.eword(gb.words[c]) for c in gb.cols]
        v = []
        for j in range(gb.rank):
            terms = {}
            for a, row_idx in enumerate(gb.rows):
                c = gb.gram_inv[j][a]
                if not c.is_zero():
                    terms[(gb.words[row_idx], alg.zero_torus, ())] = c
            v.append(Element(alg, terms))
        return DualPair(tuple(zeta), u, v)

    def reduce_eword(self, ew: tuple) -> dict:
        """Coordinates of an E-word over the representative E-words of its content."""
        hit = self._reduce_e.get(ew)
        if hit is not None:
            return hit
        gb = self.graded_basis(self.alg.content(ew))
        rhs = [self.pair_fe(gb.words[a], ew) for a in gb.rows]
        out = {}
        for k, c in enumerate(gb.cols):
            val = ZERO
            for a in range(gb.rank):
                if not rhs[a].is_zero():
                    val = val + gb.gram_inv[k][a] * rhs[a]
            if not val.is_zero():
                out[gb.words[c]] = val
        self._reduce_e[ew] = out
        return out

    def reduce_fword(self, fw: tuple) -> dict:
        """Coordinates of an F-word over the representative F-words of its content."""
        hit = self._reduce_f.get(fw)
        if hit is not None:
            return hit
        gb = self.graded_basis(self.alg.content(fw))
        lhs = [self.pair_fe(fw, gb.words[c]) for c in gb.cols]
        out = {}
        for a, row_idx in enumerate(gb.rows):
            val = ZERO
            for k in range(gb.rank):
                if not lhs[k].is_zero():
                    val = val + lhs[k] * gb.gram_inv[k][a]
            if not val.is_zero():
                out[gb.words[row_idx]] = val
        self._reduce_f[fw] = out
        return out

    def reduce(self, x: Element) -> Element:
        """Normal form modulo the pairing radical on both the F- and E-parts."""
        out: dict = {}
        for (F, T, E), c in x.terms.items():
            fr = self.reduce_fword(F) if F else {F: ONE}
            er = self.reduce_eword(E) if E else {E: ONE}
            for fw, cf in fr.items():
                for ew, ce in er.items():
                    _acc(out, (fw, T, ew), c * cf * ce)
        return Element(self.alg, out)


def _acc(d: dict, k, c):
    val = d.get(k, ZERO) + c
    if val.is_zero():
        d.pop(k, None)
    else:
        d[k] = val


# -- small exact linear algebra over the scalar field ----------------------------


def _transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def _independent_columns(m) -> list[int]:
    """Greedy maximal set of linearly independent columns, scanned left to right."""
    if not m:
        return []
    nrows = len(m)
    basis: list[tuple[int, list]] = []  # (pivot row, reduced column)
    chosen = []
    for c in range(len(m[0])):
        col = [m[r][c] for r in range(nrows)]
        for piv, vec in basis:
            if not col[piv].is_zero():
                f = col[piv] / vec[piv]
                col = [a - f * b for a, b in zip(col, vec)]
        piv = next((r for r in range(nrows) if not col[r].is_zero()), None)
        if piv is not None:
            basis.append((piv, col))
            chosen.append(c)
    return chosen


def _invert(m):
    k = len(m)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(k)] for i, row in enumerate(m)]
    for col in range(k):
        piv = next(r for r in range(col, k) if not aug[r][col].is_zero())
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


@dataclass(frozen=True)
class GradedBasis:
    zeta: tuple
    words: list
    gram: list = field(repr=False)
    rank: int
    rows: tuple  # representative F-words (indices into words)
    cols: tuple  # representative E-words
    gram_sub: list = field(repr=False)
    gram_inv: list = field(repr=False)

    @property
    def representatives(self) -> tuple:
        return self.cols


@dataclass(frozen=True)
class DualPair:
    zeta: tuple
    u_list: list
    v_list: list


# -- module-level API ------------------------------------------------------------------

_CONTEXTS: dict = {}
_CONTEXTS_LOCK = threading.Lock()


def get_context(alg: Algebra) -> PairingContext:
    with _CONTEXTS_LOCK:
        ctx = getattr(alg, "_pairing_context", None)
        if ctx is None:
            ctx = PairingContext(alg)
            alg._pairing_context = ctx
        return ctx


def pair_words(y: Element, x: Element) -> Scalar:
    return get_context(y.alg).pair_elements(y, x)


pair_elements = pair_words


def _homogeneous_eword_terms(x: Element, side: str):
    content = None
    for (F, T, E), c in x.terms.items():
        word = E if side == "E" else F
        other = F if side == "E" else E
        if other or any(T):
            raise ValueError(f"p_map expects an element of U{'+' if side == 'E' else '-'}")
        cz = x.alg.content(word)
        if content is not None and cz != content:
            raise ValueError("p_map expects a homogeneous element")
        content = cz
        yield word, c


def p_map(x: Element, i: int, primed: bool = False) -> Element:
    """p_i(x) or p'_i(x) for homogeneous x in U+."""
    ctx = get_context(x.alg)
    out: dict = {}
    for word, c in _homogeneous_eword_terms(x, "E"):
        for w, cw in ctx.p_e(i, word, primed).items():
            _acc(out, ((), x.alg.zero_torus, w), c * cw)
    return Element(x.alg, out)


def p_map_minus(y: Element, i: int, primed: bool = False) -> Element:
    """p_i(y) or p'_i(y) for homogeneous y in U-."""
    ctx = get_context(y.alg)
    out: dict = {}
    for word, c in _homogeneous_eword_terms(y, "F"):
        for w, cw in ctx.p_f(i, word, primed).items():
            _acc(out, (w, y.alg.zero_torus, ()), c * cw)
    return Element(y.alg, out)


def oracle_p_map(x: Element, i: int, primed: bool = False) -> Element:
    """Read p_i / p'_i off the coproduct of x directly."""
    from .hopf import coproduct

    alg = x.alg
    zeta = None
    for (F, T, E) in x.terms:
        zeta = alg.content(E)
    if zeta is None or zeta[i - 1] == 0:
        return alg.zero()
    rest = list(zeta)
    rest[i - 1] -= 1
    t_rest = _omega_zeta(alg, rest)
    out: dict = {}
    d = coproduct(x)
    ei = ((), alg.zero_torus, (i,))
    for (k1, k2), c in d.terms.items():
        if primed:
            # e_i omega_{zeta - alpha_i} (x) p'_i(x)
            if k1 == ((), t_rest, (i,)) and not any(k2[1]) and not k2[0]:
                _acc(out, k2, c * alg.torus_char(t_rest, alg.word_weight((i,))))
        else:
            # p_i(x) omega_i (x) e_i
            if k2 == ei and k1[1] == alg.omega_torus(i) and not k1[0]:
                E = k1[2]
                _acc(out, ((), alg.zero_torus, E), c * alg.torus_char(alg.omega_torus(i), alg.word_weight(E)))
    return Element(alg, out)


def oracle_p_map_minus(y: Element, i: int, primed: bool = False) -> Element:
    """Read p_i / p'_i of y in U- off its coproduct."""
    from .hopf import coproduct

    alg = y.alg
    zeta = None
    for (F, T, E) in y.terms:
        zeta = alg.content(F)
    if zeta is None or zeta[i - 1] == 0:
        return alg.zero()
    rest = list(zeta)
    rest[i - 1] -= 1
    tp_rest = _omega_zeta(alg, rest, primed=True)
    tp_i = alg.omega_torus(i, primed=True)
    out: dict = {}
    for (k1, k2), c in coproduct(y).terms.items():
        if primed:
            # f_i (x) p'_i(y) omega'_i ; normal form already has torus on the right
            if k1 == ((i,), alg.zero_torus, ()) and k2[1] == tp_i and not k2[2]:
                _acc(out, (k2[0], alg.zero_torus, ()), c)
        else:
            # p_i(y) (x) f_i omega'_{zeta - alpha_i}
            if k2 == ((i,), tp_rest, ()) and not any(k1[1]) and not k1[2]:
                _acc(out, k1, c)
    return Element(alg, out)


def _omega_zeta(alg: Algebra, zeta: Sequence[int], primed: bool = False) -> tuple:
    t = [0] * alg.torus_size
    for j, c in enumerate(zeta, start=1):
        if c:
            for idx, x in enumerate(alg.omega_torus(j, primed)):
                t[idx] += c * x
    return tuple(t)


def graded_basis(alg: Algebra, zeta: Sequence[int], sign: str = "+") -> GradedBasis:
    """Gram data of U+_zeta / U-_{-zeta}; ``sign`` only selects which representatives are reported."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    return get_context(alg).graded_basis(zeta)


def dual_bases(alg: Algebra, zeta: Sequence[int]) -> DualPair:
    return get_context(alg).dual_bases(zeta)


# -- f-form --------------------------------------------------------------------------


def f_form(alg: Algebra, lam: Sequence[int], mu: Sequence[int]) -> Scalar:
    """f(lambda, mu) for weights in eps-coordinates: prod f(eps_i, eps_j)^{lambda_i mu_j}."""
    pr = ps = 0
    for i, li in enumerate(lam):
        if not li:
            continue
        for j, mj in enumerate(mu):
            if i < j:
                ps -= li * mj
            elif i > j:
                pr += li * mj
    return alg.rs(pr, ps)


def f_form_via_torus(alg: Algebra, lam: Sequence[int], mu: Sequence[int]) -> Scalar:
    """f(lambda, mu) = (omega'_mu, omega_lambda)^{-1}, evaluated through the torus bicharacter."""
    from .presentation import eps_to_alpha, omega_lambda

    if alg.kind != "gl":
        raise ValueError("needs the gl-type torus (a_n, b_n)")
    wl = omega_lambda(alg, eps_to_alpha(lam))
    wmu = omega_lambda(alg, eps_to_alpha(mu), primed=True)
    (kl,) = wl.terms
    (km,) = wmu.terms
    return torus_pairing(alg, km[1], kl[1]).inverse()


# -- presentation check -------------------------------------------------------------


def presentation_check(alg: Algebra, pair_height: int = 4) -> dict:
    """Defining relations: the commutation ones must vanish in normal form, the
    Serre-type ones must lie in the pairing radical.

    A Serre residual rho is tested inside the two-sided ideal it generates: for
    every pair of words p, q (same side) with height(p rho q) <= pair_height,
    p rho q pairs to zero with every opposite word of matching content.
    """
    from .presentation import normal_form, relations

    ctx = get_context(alg)
    failures = []
    checked = 0
    for name, expr in relations(alg):
        res = normal_form(alg, expr)
        if not name.startswith(("R5", "R6", "R7")):
            checked += 1
            if not res.is_zero():
                failures.append({"relation": name, "residual": str(res)})
            continue
        side = "E" if all(g.kind == "E" for _c, w in expr for g in w) else "F"
        terms = {}
        for (F, T, E), c in res.terms.items():
            terms[E if side == "E" else F] = c
        h = sum(alg.content(next(iter(terms)))) if terms else 0
        bad = False
        for extra in range(pair_height - h + 1):
            for cz in contents_up_to(alg.n, extra, min_height=extra):
                for pq in words_of_content(cz):
                    for cut in range(len(pq) + 1):
                        p, q = pq[:cut], pq[cut:]
                        zeta = alg.content(p + next(iter(terms)) + q) if terms else None
                        if zeta is None:
                            continue
                        for opp in words_of_content(zeta):
                            val = ZERO
                            for w, c in terms.items():
                                full = p + w + q
                                val = val + c * (ctx.pair_fe(opp, full) if side == "E" else ctx.pair_fe(full, opp))
                            checked += 1
                            if not val.is_zero():
                                bad = True
        if bad:
            failures.append({"relation": name, "residual": str(res)})
    return {"pass": not failures, "failures": failures, "checked": checked}
