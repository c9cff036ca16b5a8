"""Weights, torus characters and truncated Verma modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .pairing import contents_up_to, get_context
from .presentation import Algebra, Element, Generator, alpha_to_eps, eps_to_alpha, relations
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "Weight",
    "WeightModule",
    "weight_character",
    "character_injectivity_check",
    "verma",
    "act",
    "module_relation_audit",
    "word_depth_need",
]


@dataclass(frozen=True)
class Weight:
    """Integral weight stored in eps-coordinates."""

    eps: tuple

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(int(x) for x in self.eps))

    @classmethod
    def from_alpha(cls, alpha: Sequence[int]) -> "Weight":
        return cls(alpha_to_eps(alpha))

    @classmethod
    def coerce(cls, w) -> "Weight":
        return w if isinstance(w, Weight) else cls(tuple(w))

    @property
    def alpha(self) -> tuple:
        return eps_to_alpha(self.eps)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.eps, Weight.coerce(other).eps)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.eps, Weight.coerce(other).eps)))

    def __len__(self):
        return len(self.eps)

    def __iter__(self):
        return iter(self.eps)


def weight_character(alg: Algebra, lam) -> dict[str, Scalar]:
    """Values of the weight character on each torus generator."""
    lam = Weight.coerce(lam).eps
    return {name: alg.torus_char(alg.torus_unit(g), lam) for g, name in enumerate(alg.torus_names)}


def character_injectivity_check(n: int, bound: int = 3) -> dict:
    """Look for distinct root-lattice points whose characters agree on all omega_j, omega'_j."""
    alg = Algebra(n, "sl")
    seen: dict = {}
    collisions = []
    count = 0
    for zeta in product(range(-bound, bound + 1), repeat=n - 1):
        w = alg.roots.root_to_eps(zeta)
        sig = tuple(alg.torus_char(alg.torus_unit(g), w) for g in range(alg.torus_size))
        count += 1
        if sig in seen:
            collisions.append([list(seen[sig]), list(zeta)])
        else:
            seen[sig] = zeta
    return {"pass": not collisions, "collisions": collisions, "checked": count, "n": n, "bound": bound}


def word_depth_need(word: Sequence[Generator]) -> int:
    """Largest depth increase seen while applying a word right to left."""
    need = cur = 0
    for g in reversed(word):
        if g.kind == "F":
            cur += 1
        elif g.kind == "E":
            cur -= 1
        need = max(need, cur)
    return need


@dataclass(eq=False)
class WeightModule:
    """Truncated highest-weight module.

    ``basis`` is a list of (content, F-word) pairs; vector k is f_word . v_lambda.
    ``actions`` maps generator labels 'e<i>', 'f<i>' to sparse column tables
    {column: {row: coeff}}; the torus acts diagonally and is evaluated on demand.
    """

    alg: Algebra
    lam: Weight
    depth: int
    basis: list
    index: dict
    actions: dict = field(repr=False)
    _key_cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def content(self, k: int) -> tuple:
        return self.basis[k][0]

    def vector_depth(self, k: int) -> int:
        return sum(self.basis[k][0])

    def weight(self, k: int) -> tuple:
        zeta_eps = self.alg.roots.root_to_eps(self.basis[k][0])
        return tuple(a - b for a, b in zip(self.lam.eps, zeta_eps))

    def basis_vector(self, k: int) -> dict:
        return {k: ONE}

    def torus_value(self, t: Sequence[int], k: int) -> Scalar:
        return self.alg.torus_char(t, self.weight(k))

    # -- applying operators --

    def apply_gen(self, g: Generator, vec: dict) -> dict:
        alg = self.alg
        if g.kind in ("E", "F"):
            table = self.actions[f"{g.kind.lower()}{g.index}"]
            out: dict = {}
            for k, c in vec.items():
                for row, a in table.get(k, {}).items():
                    _acc(out, row, c * a)
            return out
        t = alg.generator_key(g)[1]
        return self.apply_torus(t, vec)

    def apply_torus(self, t: Sequence[int], vec: dict) -> dict:
        return {k: c * self.torus_value(t, k) for k, c in vec.items()}

    def apply_word(self, word: Sequence[Generator], vec: dict) -> dict:
        for g in reversed(list(word)):
            vec = self.apply_gen(g, vec)
            if not vec:
                break
        return vec

    def apply_key(self, key, k: int) -> dict:
        """Action of one normal-form monomial on basis vector k (cached)."""
        ck = (key, k)
        hit = self._key_cache.get(ck)
        if hit is not None:
            return hit
        F, T, E = key
        w = {k: ONE}
        for i in reversed(E):
            w = self.apply_gen(Generator("E", i), w)
            if not w:
                break
        if w and any(T):
            w = self.apply_torus(T, w)
        if w:
            for i in reversed(F):
                w = self.apply_gen(Generator("F", i), w)
                if not w:
                    break
        self._key_cache[ck] = w
        return w

    def apply_element(self, x: Element, vec: dict) -> dict:
        """Action of an algebra element (normal form F T E, applied E first)."""
        out: dict = {}
        for (F, T, E), c in x.terms.items():
            w = vec
            for i in reversed(E):
                w = self.apply_gen(Generator("E", i), w)
                if not w:
                    break
            if not w:
                continue
            if any(T):
                w = self.apply_torus(T, w)
            for i in reversed(F):
                w = self.apply_gen(Generator("F", i), w)
                if not w:
                    break
            for k, v in w.items():
                _acc(out, k, c * v)
        return out

    def to_json(self) -> dict:
        action = {}
        for name in sorted(self.actions):
            trip = []
            for col in sorted(self.actions[name]):
                for row in sorted(self.actions[name][col]):
                    trip.append([row, col, str(self.actions[name][col][row])])
            action[name] = trip
        for g, name in enumerate(self.alg.torus_names):
            t = self.alg.torus_unit(g)
            action[name] = [[k, k, str(self.torus_value(t, k))] for k in range(self.dim)]
        return {
            "lambda": list(self.lam.eps),
            "depth": self.depth,
            "basis": [{"word": list(w), "weight": list(self.weight(k))} for k, (_z, w) in enumerate(self.basis)],
            "action": action,
        }


def _acc(d: dict, k, c):
    val = d.get(k, ZERO) + c
    if val.is_zero():
        d.pop(k, None)
    else:
        d[k] = val


def verma(alg: Algebra, lam, depth: int) -> WeightModule:
    """Verma module of highest weight lam, truncated at depth (height of lam - weight) <= depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    lam = Weight.coerce(lam)
    if len(lam) != alg.n:
        raise ValueError(f"weight needs {alg.n} eps-coordinates")
    ctx = get_context(alg)
    basis = []
    for zeta in contents_up_to(alg.n, depth):
        if sum(zeta) == 0:
            basis.append((zeta, ()))
            continue
        gb = ctx.graded_basis(zeta)
        for a in gb.rows:
            basis.append((zeta, gb.words[a]))
    index = {w: k for k, (_z, w) in enumerate(basis)}
    actions = {}
    for i in range(1, alg.n):
        fcols, ecols = {}, {}
        for k, (zeta, w) in enumerate(basis):
            # f_i
            if sum(zeta) < depth:
                col = {}
                for fw, c in ctx.reduce_fword((i,) + w).items():
                    _acc(col, index[fw], c)
                if col:
                    fcols[k] = col
            # e_i: straighten e_i f_w, drop terms still carrying e_i, evaluate torus on lambda
            col = {}
            for (F, T, E), c in alg._ef(i, w).items():
                if E:
                    continue
                c = c * alg.torus_char(T, lam.eps)
                if F:
                    for fw, cf in ctx.reduce_fword(F).items():
                        _acc(col, index[fw], c * cf)
                else:
                    _acc(col, index[()], c)
            if col:
                ecols[k] = col
        actions[f"f{i}"] = fcols
        actions[f"e{i}"] = ecols
    return WeightModule(alg, lam, depth, basis, index, actions)


def act(M: WeightModule, word, vec: dict) -> dict:
    """Apply a generator word (list of Generators, or a single Generator) right to left."""
    if isinstance(word, Generator):
        word = [word]
    return M.apply_word(list(word), vec)


def module_relation_audit(M: WeightModule) -> dict:
    """Apply every defining relation to every basis vector where truncation cannot interfere."""
    failures = []
    checked = 0
    for name, expr in relations(M.alg):
        need = max((word_depth_need(w) for _c, w in expr), default=0)
        for k in range(M.dim):
            if M.vector_depth(k) + need > M.depth:
                continue
            out: dict = {}
            for c, w in expr:
                for j, v in M.apply_word(w, {k: ONE}).items():
                    _acc(out, j, c * v)
            checked += 1
            if out:
                failures.append({"relation": name, "vector": list(M.basis[k][1])})
    return {"pass": not failures, "failures": failures, "checked": checked}
