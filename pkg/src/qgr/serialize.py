"""Deterministic JSON for scalars, elements, tensors and reports."""

from __future__ import annotations

import json
import re

from .hopf import TensorElement
from .presentation import Algebra, Element, _key_order
from .scalars import Scalar

__all__ = [
    "export_json",
    "load_json",
    "key_tokens",
    "tokens_key",
    "element_to_json",
    "element_from_json",
    "tensor_to_json",
    "tensor_from_json",
    "dual_pair_to_json",
    "graded_basis_to_json",
]

_TOKEN = re.compile(r"^([a-z]+)(\d+)(?:\^(-?\d+))?$")


def export_json(obj) -> bytes:
    """Canonical bytes: sorted keys, two-space indent, trailing newline."""
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, default=_default) + "\n").encode("utf-8")


def load_json(data: bytes):
    return json.loads(data.decode("utf-8"))


def _default(o):
    if isinstance(o, Scalar):
        return str(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def key_tokens(alg: Algebra, key) -> list[str]:
    """Monomial key as letter tokens, e.g. ['f1', 'f2', 'a1', 'b2^-1', 'e1']."""
    F, T, E = key
    out = [f"f{i}" for i in F]
    for name, k in zip(alg.torus_names, T):
        if k == 1:
            out.append(name)
        elif k:
            out.append(f"{name}^{k}")
    out += [f"e{i}" for i in E]
    return out


def tokens_key(alg: Algebra, tokens) -> tuple:
    F, E = [], []
    T = [0] * alg.torus_size
    names = {name: g for g, name in enumerate(alg.torus_names)}
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        letter, idx, exp = m.group(1), int(m.group(2)), m.group(3)
        if letter == "f" and exp is None:
            if E or any(T):
                raise ValueError("tokens must be in normal order f, torus, e")
            F.append(idx)
        elif letter == "e" and exp is None:
            E.append(idx)
        else:
            g = names.get(f"{letter}{idx}")
            if g is None:
                raise ValueError(f"unknown torus generator {letter}{idx}")
            if E:
                raise ValueError("tokens must be in normal order f, torus, e")
            T[g] += 1 if exp is None else int(exp)
    return (tuple(F), tuple(T), tuple(E))


def element_to_json(x: Element) -> list:
    return [[str(c), key_tokens(x.alg, k)] for k, c in x.sorted_terms()]


def element_from_json(alg: Algebra, data) -> Element:
    terms = {}
    for coeff, toks in data:
        terms[tokens_key(alg, toks)] = Scalar.parse(coeff)
    return Element(alg, terms)


def tensor_to_json(t: TensorElement) -> list:
    return [[str(c)] + [key_tokens(t.alg, k) for k in key] for key, c in t.sorted_terms()]


def tensor_from_json(alg: Algebra, data) -> TensorElement:
    terms = {}
    rank = None
    for row in data:
        coeff, legs = row[0], row[1:]
        rank = len(legs)
        terms[tuple(tokens_key(alg, toks) for toks in legs)] = Scalar.parse(coeff)
    return TensorElement(alg, rank or 2, terms)


def graded_basis_to_json(gb) -> dict:
    return {
        "zeta": list(gb.zeta),
        "words": [list(w) for w in gb.words],
        "gram": [[str(c) for c in row] for row in gb.gram],
        "rank": gb.rank,
        "representatives_e": [list(gb.words[c]) for c in gb.cols],
        "representatives_f": [list(gb.words[a]) for a in gb.rows],
    }


def dual_pair_to_json(dp) -> dict:
    return {
        "zeta": list(dp.zeta),
        "u": [element_to_json(u) for u in dp.u_list],
        "v": [element_to_json(v) for v in dp.v_list],
    }
