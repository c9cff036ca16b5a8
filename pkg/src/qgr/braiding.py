"""Quasi-R-matrix Theta, the braiding Theta∘f~∘P on truncated Verma modules, and the Casimir.

Multi-leg module vectors are dicts {(k_1, ..., k_m): coeff}; the list of
modules sitting on the legs is carried alongside as a "layout" tuple.
Every operator here preserves total depth (sum of leg depths), so results
are exact as long as the total depth stays within each module's cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .cat_o import WeightModule, Weight
from .hopf import TensorElement, antipode, coproduct, tensor
from .pairing import contents_up_to, f_form, get_context
from .presentation import Algebra, Element, Generator
from .scalars import ONE, ZERO, Scalar, int_power

__all__ = [
    "theta",
    "ftilde_scalar",
    "BraidMap",
    "build_R",
    "apply_R",
    "intertwining_check",
    "theta_identities_check",
    "qybe_check",
    "hexagon_check",
    "dual_basis_coproduct_check",
    "twisted_theta_legs_check",
    "theta_coproduct_check",
    "ftilde_theta_exchange_check",
    "casimir_element",
    "g_weight",
    "two_rho",
    "casimir",
    "reduce_tensor",
    "unitriangularity_check",
]


def _acc(d: dict, k, c):
    val = d.get(k, ZERO) + c
    if val.is_zero():
        d.pop(k, None)
    else:
        d[k] = val


def _in_q_plus(zeta) -> bool:
    return all(c >= 0 for c in zeta)


# -- algebra level --------------------------------------------------------------------


def theta(alg: Algebra, zeta: Sequence[int]) -> TensorElement:
    """Theta_zeta = sum_k v_k ⊗ u_k; zero outside Q+."""
    zeta = tuple(zeta)
    if not _in_q_plus(zeta):
        return TensorElement(alg, 2, {})
    if sum(zeta) == 0:
        return tensor(alg.one(), alg.one())
    dp = get_context(alg).dual_bases(zeta)
    out = TensorElement(alg, 2, {})
    for v, u in zip(dp.v_list, dp.u_list):
        out = out + tensor(v, u)
    return out


def ftilde_scalar(alg: Algebra, lam, mu) -> Scalar:
    return f_form(alg, Weight.coerce(lam).eps, Weight.coerce(mu).eps)


def reduce_tensor(t: TensorElement) -> TensorElement:
    """Reduce each leg modulo the pairing radical."""
    ctx = get_context(t.alg)
    cache: dict = {}

    def red(key):
        if key not in cache:
            cache[key] = ctx.reduce(Element(t.alg, {key: ONE}))
        return cache[key]

    return t.map_legs([red] * t.rank)


def _leg(t: TensorElement, fn_or_none):
    return t


def _embed(t: TensorElement, rank: int, positions: Sequence[int]) -> TensorElement:
    """Place the legs of t at the given positions of a rank-``rank`` tensor, 1 elsewhere."""
    alg = t.alg
    one = ((), alg.zero_torus, ())
    out = {}
    for key, c in t.terms.items():
        full = [one] * rank
        for pos, k in zip(positions, key):
            full[pos] = k
        out[tuple(full)] = c
    return TensorElement(alg, rank, out)


def _omega_zeta(alg: Algebra, zeta, primed=False) -> Element:
    x = alg.one()
    for j, c in enumerate(zeta, start=1):
        if c:
            x = x * (alg.omega_p(j, c) if primed else alg.omega(j, c))
    return x


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _alpha(n, i):
    return tuple(1 if k == i - 1 else 0 for k in range(n - 1))


def theta_identities_check(alg: Algebra, max_height: int) -> dict:
    """Torus commutation and the e/f exchange identities for Theta_zeta, height(zeta) <= max_height."""
    failures = []
    checked = 0
    n = alg.n
    if alg.kind == "gl":
        tori = [(f"a{i}", alg.a(i)) for i in range(1, n + 1)] + [(f"b{i}", alg.b(i)) for i in range(1, n + 1)]
    else:
        tori = [(f"w{i}", alg.omega(i)) for i in range(1, n)] + [(f"wp{i}", alg.omega_p(i)) for i in range(1, n)]
    one = alg.one()
    for zeta in contents_up_to(n, max_height):
        th = theta(alg, zeta)
        for name, g in tori:
            gg = tensor(g, g)
            checked += 1
            if not reduce_tensor(gg * th - th * gg).is_zero():
                failures.append(f"torus {name} zeta={list(zeta)}")
        for i in range(1, n):
            th_m = theta(alg, _sub(zeta, _alpha(n, i)))
            e, f = alg.e(i), alg.f(i)
            w, wp = alg.omega(i), alg.omega_p(i)
            lhs = tensor(e, one) * th + tensor(w, e) * th_m
            rhs = th * tensor(e, one) + th_m * tensor(wp, e)
            checked += 1
            if not reduce_tensor(lhs - rhs).is_zero():
                failures.append(f"e{i} zeta={list(zeta)}")
            lhs = tensor(one, f) * th + tensor(f, wp) * th_m
            rhs = th * tensor(one, f) + th_m * tensor(f, w)
            checked += 1
            if not reduce_tensor(lhs - rhs).is_zero():
                failures.append(f"f{i} zeta={list(zeta)}")
    return {"pass": not failures, "failures": failures, "checked": checked}


def _pair_products(alg, gamma):
    """All (zeta, i, j) data for the coproduct expansion over 0 <= zeta <= gamma."""
    ctx = get_context(alg)
    for zeta in product(*(range(c + 1) for c in gamma)):
        rest = _sub(gamma, zeta)
        d_rest = _dual(alg, rest)
        d_zeta = _dual(alg, zeta)
        yield zeta, rest, d_rest, d_zeta


def _dual(alg, zeta):
    if sum(zeta) == 0:
        return [alg.one()], [alg.one()]
    dp = get_context(alg).dual_bases(zeta)
    return dp.u_list, dp.v_list


def dual_basis_coproduct_check(alg: Algebra, max_height: int) -> dict:
    """Coproducts of U+ and U- words expanded in dual bases."""
    from .pairing import pair_words, words_of_content

    failures = []
    checked = 0
    for gamma in contents_up_to(alg.n, max_height, 1):
        for w in words_of_content(gamma):
            x = alg.eword(w)
            rhs = TensorElement(alg, 2, {})
            for zeta, rest, (u_r, v_r), (u_z, v_z) in _pair_products(alg, gamma):
                wz = _omega_zeta(alg, zeta)
                for ui, vi in zip(u_r, v_r):
                    for uj, vj in zip(u_z, v_z):
                        c = pair_words(vi * vj, x)
                        if not c.is_zero():
                            rhs = rhs + tensor(ui * wz, uj).scale(c)
            checked += 1
            if not reduce_tensor(coproduct(x) - rhs).is_zero():
                failures.append(f"Delta(e{list(w)})")
            y = alg.fword(w)
            rhs = TensorElement(alg, 2, {})
            for zeta, rest, (u_r, v_r), (u_z, v_z) in _pair_products(alg, gamma):
                wzp = _omega_zeta(alg, zeta, primed=True)
                for ui, vi in zip(u_r, v_r):
                    for uj, vj in zip(u_z, v_z):
                        c = pair_words(y, ui * uj)
                        if not c.is_zero():
                            rhs = rhs + tensor(vj, vi * wzp).scale(c)
            checked += 1
            if not reduce_tensor(coproduct(y) - rhs).is_zero():
                failures.append(f"Delta(f{list(w)})")
    return {"pass": not failures, "failures": failures, "checked": checked}


def _delta_legs(t: TensorElement, leg: int) -> TensorElement:
    """Apply Delta to one leg of a rank-2 tensor, giving rank 3."""
    from .hopf import coproduct_left, coproduct_right

    return coproduct_left(t) if leg == 0 else coproduct_right(t)


def theta_coproduct_check(alg: Algebra, max_height: int) -> dict:
    """(Delta⊗1)(Theta_gamma) and (1⊗Delta)(Theta_gamma) as sums of leg-placed Thetas."""
    failures = []
    checked = 0
    n = alg.n
    for gamma in contents_up_to(n, max_height):
        th = theta(alg, gamma)
        rhs1 = TensorElement(alg, 3, {})
        rhs2 = TensorElement(alg, 3, {})
        for zeta in product(*(range(c + 1) for c in gamma)):
            rest = _sub(gamma, zeta)
            th_r, th_z = theta(alg, rest), theta(alg, zeta)
            mid_p = tensor(alg.one(), _omega_zeta(alg, zeta, primed=True), alg.one())
            mid = tensor(alg.one(), _omega_zeta(alg, zeta), alg.one())
            rhs1 = rhs1 + _embed(th_r, 3, (1, 2)) * _embed(th_z, 3, (0, 2)) * mid_p
            rhs2 = rhs2 + _embed(th_r, 3, (0, 1)) * _embed(th_z, 3, (0, 2)) * mid
        checked += 2
        if not reduce_tensor(_delta_legs(th, 0) - rhs1).is_zero():
            failures.append(f"(Delta⊗1) gamma={list(gamma)}")
        if not reduce_tensor(_delta_legs(th, 1) - rhs2).is_zero():
            failures.append(f"(1⊗Delta) gamma={list(gamma)}")
    return {"pass": not failures, "failures": failures, "checked": checked}


# -- module level -------------------------------------------------------------------------


class _Ops:
    """Leg operators on multi-leg vectors over a fixed set of Verma modules."""

    def __init__(self, alg: Algebra):
        self.alg = alg
        self.ctx = get_context(alg)
        self._theta_cache: dict = {}
        self._u_cache: dict = {}

    def weight(self, M: WeightModule, k: int):
        return M.weight(k)

    def theta_pair(self, Mv: WeightModule, Mu: WeightModule, kv: int, ku: int, max_h=None) -> dict:
        """sum_zeta Theta_zeta with v acting on (Mv, kv) and u on (Mu, ku); returns {(kv', ku'): c}."""
        key = (Mv, Mu, kv, ku, max_h)  # modules hash by identity; holding them keeps ids unique
        hit = self._theta_cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        eta = Mu.content(ku)
        out: dict = {}
        for zeta in product(*(range(c + 1) for c in eta)):
            if max_h is not None and sum(zeta) > max_h:
                continue
            if sum(zeta) == 0:
                _acc(out, (kv, ku), ONE)
                continue
            dp = self.ctx.dual_bases(zeta)
            for v, u in zip(dp.v_list, dp.u_list):
                ux = Mu.apply_element(u, {ku: ONE})
                if not ux:
                    continue
                vy = Mv.apply_element(v, {kv: ONE})
                for a, ca in vy.items():
                    for b, cb in ux.items():
                        _acc(out, (a, b), ca * cb)
        self._theta_cache[key] = out
        return out

    def theta_legs(self, layout, vec: dict, i: int, j: int) -> dict:
        """(Theta)_{ij}: v on leg i, u on leg j."""
        out: dict = {}
        for key, c in vec.items():
            for (a, b), t in self.theta_pair(layout[i], layout[j], key[i], key[j]).items():
                nk = list(key)
                nk[i], nk[j] = a, b
                _acc(out, tuple(nk), c * t)
        return out

    def ftilde_legs(self, layout, vec: dict, i: int, j: int) -> dict:
        alg = self.alg
        return {
            key: c * f_form(alg, layout[i].weight(key[i]), layout[j].weight(key[j])) for key, c in vec.items()
        }

    @staticmethod
    def permute(layout, vec: dict, i: int, j: int):
        lay = list(layout)
        lay[i], lay[j] = lay[j], lay[i]
        out = {}
        for key, c in vec.items():
            nk = list(key)
            nk[i], nk[j] = nk[j], nk[i]
            out[tuple(nk)] = c
        return tuple(lay), out

    def R(self, layout, vec: dict, pos: int):
        """R on legs (pos, pos+1): Theta ∘ f~ ∘ P."""
        layout, vec = self.permute(layout, vec, pos, pos + 1)
        vec = self.ftilde_legs(layout, vec, pos, pos + 1)
        return layout, self.theta_legs(layout, vec, pos, pos + 1)

    def apply_tensor(self, t: TensorElement, layout, vec: dict, legs: Sequence[int]) -> dict:
        """Apply a tensor element to the given legs (others untouched)."""
        out: dict = {}
        for key, c in vec.items():
            for tk, tc in t.terms.items():
                parts = []
                for leg, mk in zip(legs, tk):
                    r = layout[leg].apply_key(mk, key[leg])
                    if not r:
                        break
                    parts.append(r.items())
                else:
                    for combo in product(*parts):
                        nk = list(key)
                        cc = c * tc
                        for leg, (idx, ci) in zip(legs, combo):
                            nk[leg] = idx
                            cc = cc * ci
                        _acc(out, tuple(nk), cc)
        return out

    def apply_element_leg(self, x: Element, layout, vec: dict, leg: int) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for idx, ci in layout[leg].apply_element(x, {key[leg]: ONE}).items():
                nk = list(key)
                nk[leg] = idx
                _acc(out, tuple(nk), c * ci)
        return out


def _ops(alg: Algebra) -> _Ops:
    ops = getattr(alg, "_braid_ops", None)
    if ops is None:
        ops = _Ops(alg)
        alg._braid_ops = ops
    return ops


def _basis_tuples(layout, budget: int):
    """All basis index tuples with total depth <= budget, in a fixed order."""
    ranges = [range(M.dim) for M in layout]
    out = []
    for key in product(*ranges):
        if sum(M.vector_depth(k) for M, k in zip(layout, key)) <= budget:
            out.append(key)
    return out


def _check_budget(layout, budget: int):
    for M in layout:
        if budget > M.depth - 2:
            raise ValueError(f"budget {budget} too large for a module of depth {M.depth} (needs budget <= depth - 2)")


@dataclass
class BraidMap:
    """Matrix of R = Theta ∘ f~ ∘ P: Mp ⊗ M -> M ⊗ Mp on pairs of total depth <= budget."""

    Mp: WeightModule
    M: WeightModule
    budget: int
    columns: dict = field(repr=False)  # (kp, k) -> {(k, kp): coeff}
    diagonal: dict = field(repr=False)  # the f~ ∘ P part: (kp, k) -> coeff

    def apply(self, vec: dict) -> dict:
        layout, out = _ops(self.M.alg).R((self.Mp, self.M), vec, 0)
        return out

    def to_json(self) -> dict:
        def desc(Mod, k):
            return {"word": list(Mod.basis[k][1]), "weight": list(Mod.weight(k))}

        cols = sorted(self.columns)
        rows = sorted({r for c in cols for r in self.columns[c]})
        row_index = {r: i for i, r in enumerate(rows)}
        entries = []
        for ci, c in enumerate(cols):
            for r in sorted(self.columns[c]):
                entries.append([row_index[r], ci, str(self.columns[c][r])])
        return {
            "source": {"lambda_first": list(self.Mp.lam.eps), "lambda_second": list(self.M.lam.eps)},
            "budget": self.budget,
            "columns": [[desc(self.Mp, a), desc(self.M, b)] for a, b in cols],
            "rows": [[desc(self.M, a), desc(self.Mp, b)] for a, b in rows],
            "entries": entries,
        }


def build_R(Mp: WeightModule, M: WeightModule, budget: int) -> BraidMap:
    if Mp.alg is not M.alg and not Mp.alg.same_structure(M.alg):
        raise ValueError("modules over different algebras")
    _check_budget((Mp, M), budget)
    ops = _ops(M.alg)
    cols, diag = {}, {}
    for kp, k in _basis_tuples((Mp, M), budget):
        _layout, out = ops.R((Mp, M), {(kp, k): ONE}, 0)
        cols[(kp, k)] = out
        diag[(kp, k)] = f_form(M.alg, M.weight(k), Mp.weight(kp))
    return BraidMap(Mp, M, budget, cols, diag)


def apply_R(Mp: WeightModule, M: WeightModule, vec: dict) -> dict:
    return _ops(M.alg).R((Mp, M), vec, 0)[1]


def _generator_elements(alg: Algebra):
    out = []
    for g in alg.generators():
        out.append((str(g), alg.word([g])))
    return out


def intertwining_check(R: BraidMap) -> dict:
    """Delta(x) ∘ R = R ∘ Delta(x) for every generator x on pairs of total depth <= budget."""
    alg = R.M.alg
    ops = _ops(alg)
    src, dst = (R.Mp, R.M), (R.M, R.Mp)
    failures = []
    checked = 0
    for name, x in _generator_elements(alg):
        dx = coproduct(x)
        for key in _basis_tuples(src, R.budget):
            v = {key: ONE}
            lhs = ops.apply_tensor(dx, dst, ops.R(src, v, 0)[1], (0, 1))
            rhs = ops.R(src, ops.apply_tensor(dx, src, v, (0, 1)), 0)[1]
            checked += 1
            if lhs != rhs:
                failures.append({"generator": name, "vector": list(key)})
    return {"pass": not failures, "failures": failures, "checked": checked}


def unitriangularity_check(R: BraidMap) -> dict:
    """Off the f~∘P part, R strictly lowers the first output leg (raises its depth)."""
    bad = []
    for (kp, k), col in R.columns.items():
        d0 = R.M.vector_depth(k)
        diag_ok = col.get((k, kp), ZERO) == R.diagonal[(kp, k)] and not R.diagonal[(kp, k)].is_zero()
        others_ok = all(R.M.vector_depth(a) > d0 or (a, b) == (k, kp) for (a, b) in col)
        if not (diag_ok and others_ok):
            bad.append([kp, k])
    return {"pass": not bad, "failures": bad, "checked": len(R.columns)}


def qybe_check(M1: WeightModule, M2: WeightModule, M3: WeightModule, budget: int) -> dict:
    layout = (M1, M2, M3)
    _check_budget(layout, budget)
    ops = _ops(M1.alg)
    failures = []
    keys = _basis_tuples(layout, budget)
    for key in keys:
        v = {key: ONE}
        lay, a = ops.R(layout, v, 0)
        lay, a = ops.R(lay, a, 1)
        lay_a, a = ops.R(lay, a, 0)
        lay, b = ops.R(layout, v, 1)
        lay, b = ops.R(lay, b, 0)
        lay_b, b = ops.R(lay, b, 1)
        if a != b:
            failures.append(list(key))
    return {"pass": not failures, "failures": failures, "checked": len(keys)}


def _delta_theta_apply(ops: _Ops, layout, vec: dict, single: int, pair: tuple, v_on_pair: bool) -> dict:
    """Apply (Delta⊗1)(Theta) (v_on_pair) or (1⊗Delta)(Theta) to a three-leg vector.

    ``single`` is the leg receiving the undoubled factor; ``pair`` the legs receiving Delta of the other.
    """
    alg = ops.alg
    out: dict = {}
    for key, c in vec.items():
        if v_on_pair:
            eta = layout[single].content(key[single])
        else:
            eta = tuple(a + b for a, b in zip(layout[pair[0]].content(key[pair[0]]), layout[pair[1]].content(key[pair[1]])))
        for zeta in product(*(range(x + 1) for x in eta)):
            if sum(zeta) == 0:
                _acc(out, key, c)
                continue
            dp = ops.ctx.dual_bases(zeta)
            for v, u in zip(dp.v_list, dp.u_list):
                single_x, pair_x = (u, v) if v_on_pair else (v, u)
                s_img = layout[single].apply_element(single_x, {key[single]: ONE})
                if not s_img:
                    continue
                p_img = ops.apply_tensor(coproduct(pair_x), layout, {key: ONE}, pair)
                for pk, pc in p_img.items():
                    for si, sc in s_img.items():
                        nk = list(pk)
                        nk[single] = si
                        _acc(out, tuple(nk), c * pc * sc)
    return out


def hexagon_check(M1: WeightModule, M2: WeightModule, M3: WeightModule, budget: int) -> dict:
    """Both hexagon identities on basis triples of total depth <= budget."""
    layout = (M1, M2, M3)
    _check_budget(layout, budget)
    ops = _ops(M1.alg)
    alg = M1.alg
    failures = []
    keys = _basis_tuples(layout, budget)
    for key in keys:
        v = {key: ONE}
        # (i) R12 ∘ R23 vs (1⊗Delta)(Theta) ∘ f' ∘ P12 ∘ P23
        lay, a = ops.R(layout, v, 1)
        lay_a, a = ops.R(lay, a, 0)
        lay, b = ops.permute(layout, v, 1, 2)
        lay, b = ops.permute(lay, b, 0, 1)
        b = {
            k: c * f_form(alg, lay[0].weight(k[0]), _wsum(lay[1].weight(k[1]), lay[2].weight(k[2])))
            for k, c in b.items()
        }
        b = _delta_theta_apply(ops, lay, b, 0, (1, 2), v_on_pair=False)
        if a != b:
            failures.append({"identity": "i", "vector": list(key)})
        # (ii) R23 ∘ R12 vs (Delta⊗1)(Theta) ∘ f'' ∘ P23 ∘ P12
        lay, a = ops.R(layout, v, 0)
        lay_a, a = ops.R(lay, a, 1)
        lay, b = ops.permute(layout, v, 0, 1)
        lay, b = ops.permute(lay, b, 1, 2)
        b = {
            k: c * f_form(alg, _wsum(lay[0].weight(k[0]), lay[1].weight(k[1])), lay[2].weight(k[2]))
            for k, c in b.items()
        }
        b = _delta_theta_apply(ops, lay, b, 2, (0, 1), v_on_pair=True)
        if a != b:
            failures.append({"identity": "ii", "vector": list(key)})
    return {"pass": not failures, "failures": failures, "checked": 2 * len(keys)}


def _wsum(a, b):
    return tuple(x + y for x, y in zip(a, b))


def twisted_theta_legs_check(M1: WeightModule, M2: WeightModule, M3: WeightModule, budget: int) -> dict:
    """(Delta⊗1)(Theta^op) f~31 f~32 = Theta^f_31 Theta^f_32, and f~31 f~32 commute with Theta_12."""
    layout = (M1, M2, M3)
    _check_budget(layout, budget)
    ops = _ops(M1.alg)
    failures = []
    keys = _basis_tuples(layout, budget)
    for key in keys:
        v = {key: ONE}
        lhs = ops.ftilde_legs(layout, ops.ftilde_legs(layout, v, 2, 1), 2, 0)
        lhs = _delta_theta_apply(ops, layout, lhs, 2, (0, 1), v_on_pair=False)
        rhs = ops.theta_legs(layout, ops.ftilde_legs(layout, v, 2, 1), 2, 1)
        rhs = ops.theta_legs(layout, ops.ftilde_legs(layout, rhs, 2, 0), 2, 0)
        if lhs != rhs:
            failures.append({"identity": "i", "vector": list(key)})
        a = ops.theta_legs(layout, v, 0, 1)
        a = ops.ftilde_legs(layout, ops.ftilde_legs(layout, a, 2, 1), 2, 0)
        b = ops.ftilde_legs(layout, ops.ftilde_legs(layout, v, 2, 1), 2, 0)
        b = ops.theta_legs(layout, b, 0, 1)
        if a != b:
            failures.append({"identity": "ii", "vector": list(key)})
    return {"pass": not failures, "failures": failures, "checked": 2 * len(keys)}


def ftilde_theta_exchange_check(M1: WeightModule, M2: WeightModule, M3: WeightModule, budget: int) -> dict:
    """f~12 (Theta_eta)_13 = (Theta_eta)_13 (1⊗omega_eta⊗1) f~12 and the f~23 / omega'_eta analogue."""
    layout = (M1, M2, M3)
    _check_budget(layout, budget)
    alg = M1.alg
    ops = _ops(alg)
    failures = []
    keys = _basis_tuples(layout, budget)
    checked = 0
    for key in keys:
        eta_max = M3.content(key[2])
        for eta in product(*(range(c + 1) for c in eta_max)):
            th = theta(alg, eta)
            v = {key: ONE}
            for (pair, primed) in (((0, 1), False), ((1, 2), True)):
                lhs = ops.apply_tensor(th, layout, v, (0, 2))
                lhs = ops.ftilde_legs(layout, lhs, *pair)
                rhs = ops.ftilde_legs(layout, v, *pair)
                rhs = ops.apply_element_leg(_omega_zeta(alg, eta, primed), layout, rhs, 1)
                rhs = ops.apply_tensor(th, layout, rhs, (0, 2))
                checked += 1
                if lhs != rhs:
                    failures.append({"eta": list(eta), "pair": list(pair), "vector": list(key)})
    return {"pass": not failures, "failures": failures, "checked": checked}


# -- Casimir -------------------------------------------------------------------------------


def two_rho(n: int) -> tuple:
    return tuple(n + 1 - 2 * j for j in range(1, n + 1))


def g_weight(alg: Algebra, lam) -> Scalar:
    """g(lambda) = (r s^-1)^{<lambda + 2 rho, lambda> / 2}, using the handle's square root of r/s."""
    if alg.sqrt_rs is None:
        raise ValueError("this algebra handle carries no square root of r/s")
    lam = Weight.coerce(lam).eps
    rho2 = two_rho(alg.n)
    k = sum((a + b) * a for a, b in zip(lam, rho2))
    return int_power(alg.sqrt_rs, k)


def casimir_element(alg: Algebra, height: int) -> Element:
    """Omega truncated to sum_{height(zeta) <= height} sum_k S(v_k) u_k."""
    out = alg.zero()
    for zeta in contents_up_to(alg.n, height):
        if sum(zeta) == 0:
            out = out + alg.one()
            continue
        dp = get_context(alg).dual_bases(zeta)
        for v, u in zip(dp.v_list, dp.u_list):
            out = out + antipode(v) * u
    return out


def casimir(M: WeightModule, budget: int | None = None) -> dict:
    """Checks on Omega Xi over a truncated Verma module.

    (a) commutation with every generator on vectors of depth <= budget,
    (b) the shift identities for Omega e_i and Omega f_i,
    (c) Omega Xi = g(lambda) id,
    (d) the recurrence g(mu + alpha_i) = (r s^-1)^{<alpha_i, mu + alpha_i>} g(mu) on module weights.
    """
    alg = M.alg
    budget = M.depth - 1 if budget is None else budget
    if budget > M.depth - 1:
        raise ValueError(f"budget {budget} too large for depth {M.depth}")
    omega = casimir_element(alg, M.depth)
    rs_inv = alg.r / alg.s

    def omega_xi(vec):
        w = {k: c * g_weight(alg, M.weight(k)) for k, c in vec.items()}
        return M.apply_element(omega, w)

    failures = []
    eigen = {}
    g_lam = g_weight(alg, M.lam)
    for k in range(M.dim):
        v = {k: ONE}
        ox = omega_xi(v)
        eigen[k] = ox
        if ox != {k: g_lam}:
            failures.append({"check": "eigenvalue", "vector": list(M.basis[k][1])})
    for k in range(M.dim):
        if M.vector_depth(k) > budget:
            continue
        v = {k: ONE}
        for g in alg.generators():
            lhs = omega_xi(M.apply_gen(g, v))
            rhs = M.apply_gen(g, omega_xi(v))
            if lhs != rhs:
                failures.append({"check": "commutation", "generator": str(g), "vector": list(M.basis[k][1])})
        mu = M.weight(k)
        om_v = M.apply_element(omega, v)
        for i in range(1, alg.n):
            ai = alg.roots.alpha(i)
            # Omega e_i m = (r/s)^{-<alpha_i, mu + alpha_i>} e_i Omega m
            p = alg.roots.inner(ai, _wsum(mu, ai))
            lhs = M.apply_element(omega, M.apply_gen(Generator("E", i), v))
            rhs = {j: c * int_power(rs_inv, -p) for j, c in M.apply_gen(Generator("E", i), om_v).items()}
            if lhs != rhs:
                failures.append({"check": "shift_e", "i": i, "vector": list(M.basis[k][1])})
            p = alg.roots.inner(ai, mu)
            lhs = M.apply_element(omega, M.apply_gen(Generator("F", i), v))
            rhs = {j: c * int_power(rs_inv, p) for j, c in M.apply_gen(Generator("F", i), om_v).items()}
            if lhs != rhs:
                failures.append({"check": "shift_f", "i": i, "vector": list(M.basis[k][1])})
            ratio = g_weight(alg, _wsum(mu, ai)) / g_weight(alg, mu)
            if ratio != int_power(rs_inv, alg.roots.inner(ai, _wsum(mu, ai))):
                failures.append({"check": "g_recurrence", "i": i, "weight": list(mu)})
    return {
        "pass": not failures,
        "failures": failures,
        "g_lambda": str(g_lam),
        "two_rho": list(two_rho(alg.n)),
        "dim": M.dim,
    }
