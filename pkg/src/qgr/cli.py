"""Command-line front end.

Every subcommand prints a JSON report {command, config, pass, residual_count, details}
and a one-line summary.  Exit status: 0 pass, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .braiding import (
    build_R,
    casimir,
    hexagon_check,
    intertwining_check,
    qybe_check,
    unitriangularity_check,
)
from .cat_o import Weight, character_injectivity_check, module_relation_audit, verma
from .double import lower_generators, upper_generators, verify_double_iso
from .hopf import hopf_axiom_residuals
from .morphisms import chm_relation_transport, n2_generation_witness, n3_cokernel_witness, sl2_iso_check
from .pairing import contents_up_to, get_context, oracle_pair_letters, pair_generators, presentation_check, words_of_content
from .presentation import Algebra, Generator, random_element
from .serialize import dual_pair_to_json, export_json, graded_basis_to_json

__all__ = ["main", "run", "build_parser", "UsageError"]

COMMANDS = (
    "relations",
    "hopf-axioms",
    "pairing-table",
    "dual-basis",
    "verify-double",
    "verma",
    "rmatrix",
    "qybe",
    "hexagon",
    "casimir",
    "iso-check",
    "prop35",
)


class UsageError(ValueError):
    pass


def max_workers() -> int:
    """QGR_THREADS caps the worker count; unset or invalid means 1."""
    raw = os.environ.get("QGR_THREADS", "")
    try:
        k = int(raw)
    except ValueError:
        return 1
    return max(1, min(k, os.cpu_count() or 1))


# -- argument parsing ----------------------------------------------------------


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _point(text: str) -> tuple:
    try:
        u0, v0 = (Fraction(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected u0,v0 (rationals), got {text!r}")
    return u0, v0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--kind", choices=("gl", "sl"), default="gl")
    common.add_argument("--depth", type=int, default=3)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--specialize", type=_point, default=None, metavar="U0,V0", help="evaluate at u=u0, v=v0 (r=u0^2, s=v0^2)")
    common.add_argument("--out", default=None, help="write the JSON report here instead of stdout")

    p = argparse.ArgumentParser(prog="qgr", description="Exact checks for two-parameter quantum groups.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "dual-basis":
            sp.add_argument("--zeta", type=_int_list, required=True)
        if name in ("verma", "rmatrix", "qybe", "hexagon", "casimir"):
            sp.add_argument("--lambda", dest="lam", type=_int_list, default=None)
        if name in ("rmatrix", "qybe", "hexagon"):
            sp.add_argument("--mu", type=_int_list, default=None)
        if name in ("qybe", "hexagon"):
            sp.add_argument("--nu", type=_int_list, default=None)
        if name == "iso-check":
            sp.add_argument("--which", choices=("sl2", "chm"), required=True)
        if name == "prop35":
            sp.add_argument("--bound", type=int, default=3)
    return p


def _algebra(args) -> Algebra:
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    if args.specialize is None:
        return Algebra(args.n, args.kind)
    u0, v0 = args.specialize
    if u0 == 0 or v0 == 0 or u0 * u0 == v0 * v0:
        raise UsageError("--specialize needs u0, v0 nonzero with u0^2 != v0^2")
    return Algebra(args.n, args.kind, r=u0 * u0, s=v0 * v0, sqrt_rs=u0 / v0)


def _weight(args, value) -> Weight:
    if value is None:
        value = (1,) + (0,) * (args.n - 1)
    if len(value) != args.n:
        raise UsageError(f"weights need {args.n} comma-separated eps-coordinates")
    return Weight(value)


def _braid_budget(args) -> int:
    budget = args.depth - 2 if args.budget is None else args.budget
    if budget < 0 or budget > args.depth - 2:
        raise UsageError(f"--budget must lie in [0, depth - 2] = [0, {args.depth - 2}]")
    return budget


def _config(args) -> dict:
    cfg = {}
    for key, val in sorted(vars(args).items()):
        if key in ("out", "command"):
            continue
        if key == "lam":
            key = "lambda"
        if isinstance(val, tuple):
            val = [str(x) if isinstance(x, Fraction) else x for x in val]
        cfg[key] = val
    return cfg


# -- subcommands ------------------------------------------------------------------
# each returns (pass, residual_count, details)


def cmd_relations(args):
    rep = presentation_check(_algebra(args), pair_height=4)
    return rep["pass"], len(rep["failures"]), rep


def _residual_names(x):
    return sorted(name for name, res in hopf_axiom_residuals(x).items() if not res.is_zero())


def cmd_hopf_axioms(args):
    alg = _algebra(args)
    rng = random.Random(args.seed)
    samples = 20 if args.samples is None else args.samples
    cases = [(str(g), alg.word([g])) for g in alg.generators()]
    cases += [(f"random{k:03d}", random_element(alg, rng, max_len=3)) for k in range(samples)]
    with ThreadPoolExecutor(max_workers=max_workers()) as pool:
        bad = list(pool.map(lambda c: _residual_names(c[1]), cases))
    table = {label: names for (label, _x), names in zip(cases, bad) if names}
    return not table, len(table), {"checked": len(cases), "failures": table}


def cmd_pairing_table(args):
    alg = _algebra(args)
    ctx = get_context(alg)
    table, bad = {}, []
    for bl, b in lower_generators(alg):
        for al, a in upper_generators(alg):
            val = ctx.pair_elements(b, a)
            table[f"({bl},{al})"] = str(val)
    # word values against the coproduct-expansion oracle
    height = min(args.depth, 4)
    checked = 0
    for zeta in contents_up_to(alg.n, height, min_height=1):
        words = words_of_content(zeta)
        for fw in words:
            for ew in words:
                ref = oracle_pair_letters(alg, [Generator("F", i) for i in fw], [Generator("E", i) for i in ew])
                checked += 1
                if ctx.pair_fe(fw, ew) != ref:
                    bad.append([list(fw), list(ew)])
    for i in range(1, alg.n):
        for j in range(1, alg.n):
            got = pair_generators(alg, Generator("F", i), Generator("E", j))
            if (i == j and got != (alg.s - alg.r).inverse()) or (i != j and not got.is_zero()):
                bad.append([f"f{i}", f"e{j}"])
    return not bad, len(bad), {"table": table, "word_checks": checked, "oracle_height": height, "failures": bad}


def cmd_dual_basis(args):
    alg = _algebra(args)
    zeta = tuple(args.zeta)
    if len(zeta) != alg.n - 1 or any(c < 0 for c in zeta):
        raise UsageError(f"--zeta needs {alg.n - 1} nonnegative coordinates")
    ctx = get_context(alg)
    gb = ctx.graded_basis(zeta)
    dp = ctx.dual_bases(zeta)
    bad = []
    for j, v in enumerate(dp.v_list):
        for k, u in enumerate(dp.u_list):
            val = ctx.pair_elements(v, u)
            if (j == k and not val.is_one()) or (j != k and not val.is_zero()):
                bad.append([j, k])
    details = {"graded_basis": graded_basis_to_json(gb), "dual_pair": dual_pair_to_json(dp), "failures": bad}
    return not bad, len(bad), details


def cmd_verify_double(args):
    alg = _algebra(args)
    samples = 0 if args.samples is None else args.samples
    rep = verify_double_iso(alg.n, alg.kind, alg=alg, random_words=samples, seed=args.seed)
    table = {}
    for bl, _b in lower_generators(alg):
        for al, _a in upper_generators(alg):
            label = f"({bl},{al})"
            ok = label not in rep["residuals"] and label not in rep["coalgebra_failures"]
            table[label] = "pass" if ok else "fail"
    for k in range(samples):
        table[f"random{k}"] = "fail" if f"random{k}" in rep["residuals"] else "pass"
    count = len(rep["residuals"]) + len(rep["coalgebra_failures"])
    return rep["pass"], count, {"table": table, "residuals": rep["residuals"], "checked": rep["checked"]}


def cmd_verma(args):
    alg = _algebra(args)
    M = verma(alg, _weight(args, args.lam), args.depth)
    audit = module_relation_audit(M)
    return audit["pass"], len(audit["failures"]), {"module": M.to_json(), "audit": audit}


def _check_report(rep):
    return rep["pass"], len(rep["failures"]), rep


def cmd_rmatrix(args):
    alg = _algebra(args)
    budget = _braid_budget(args)
    M = verma(alg, _weight(args, args.lam), args.depth)
    Mp = verma(alg, _weight(args, args.mu), args.depth)
    R = build_R(Mp, M, budget)
    inter = intertwining_check(R)
    tri = unitriangularity_check(R)
    ok = inter["pass"] and tri["pass"]
    count = len(inter["failures"]) + len(tri["failures"])
    return ok, count, {"matrix": R.to_json(), "intertwining": inter, "unitriangularity": tri}


def _three(args):
    alg = _algebra(args)
    budget = _braid_budget(args)
    mods = [verma(alg, _weight(args, w), args.depth) for w in (args.lam, args.mu, args.nu)]
    return mods, budget


def cmd_qybe(args):
    mods, budget = _three(args)
    return _check_report(qybe_check(*mods, budget))


def cmd_hexagon(args):
    mods, budget = _three(args)
    return _check_report(hexagon_check(*mods, budget))


def cmd_casimir(args):
    alg = _algebra(args)
    if alg.sqrt_rs is None:
        raise UsageError("the Casimir needs a square root of r/s")
    M = verma(alg, _weight(args, args.lam), args.depth)
    if args.budget is not None and not 0 <= args.budget <= args.depth - 1:
        raise UsageError("--budget must lie in [0, depth - 1]")
    return _check_report(casimir(M, args.budget))


def cmd_iso_check(args):
    if args.which == "sl2":
        samples = 5 if args.samples is None else args.samples
        rep = sl2_iso_check(spec_count=samples, seed=args.seed)
        fails = [p for p in rep["points"] if not p["pass"]]
        return rep["pass"], len(fails), rep
    alg = _algebra(args)
    if alg.kind != "gl":
        raise UsageError("the multiparameter comparison targets --kind gl")
    rep = {"transport": chm_relation_transport(alg.n, alg)}
    if alg.n == 2:
        rep["generation_witness"] = n2_generation_witness(alg)
    if alg.n == 3:
        rep["cokernel_witness"] = n3_cokernel_witness(alg)
    t = rep["transport"]
    count = len(t["residuals"]) + len(t["coproduct_failures"]) + len(t["torus_identity_failures"])
    count += sum(1 for k in ("generation_witness", "cokernel_witness") if k in rep and not rep[k]["pass"])
    return count == 0, count, rep


def cmd_characters(args):
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    if args.bound < 0:
        raise UsageError("--bound must be >= 0")
    rep = character_injectivity_check(args.n, args.bound)
    return rep["pass"], len(rep["collisions"]), rep


HANDLERS = {
    "relations": cmd_relations,
    "hopf-axioms": cmd_hopf_axioms,
    "pairing-table": cmd_pairing_table,
    "dual-basis": cmd_dual_basis,
    "verify-double": cmd_verify_double,
    "verma": cmd_verma,
    "rmatrix": cmd_rmatrix,
    "qybe": cmd_qybe,
    "hexagon": cmd_hexagon,
    "casimir": cmd_casimir,
    "iso-check": cmd_iso_check,
    "prop35": cmd_characters,
}


def run(args) -> tuple[int, dict]:
    """Run a parsed command; returns (exit status, report)."""
    ok, count, details = HANDLERS[args.command](args)
    report = {
        "command": args.command,
        "config": _config(args),
        "pass": bool(ok),
        "residual_count": int(count),
        "details": details,
    }
    return (0 if ok else 1), report


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, report = run(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    data = export_json(report)
    summary = f"{args.command}: {'PASS' if report['pass'] else 'FAIL'} (residual_count={report['residual_count']})"
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(summary)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        print(summary, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
