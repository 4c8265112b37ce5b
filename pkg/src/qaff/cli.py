"""Command-line front end: ``qaff <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .affine_hopf import AffineHopf
from .algebra import Element
from .braided_algebras import ExteriorAlgebra, SymmetricAlgebra, TruncationExceeded, quadratic_generation
from .braiding import Check, braid_matrix, hopf_spec, verify_braiding
from .connections import (c_coefficient, canonical_translaton, closed_form, closed_form_specialized,
                          gamma_calculus, levi_civita, mutated_translaton, quantum_integer,
                          upsilon_report, verify_translaton)
from .expr import BinOp, ExprSyntaxError, Neg, Num, Pow, Sym, parse
from .hopf_fibration import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, HopfFibration
from .scalars import Mu, PoleError, fmt
from .suites import SUITES, run_suite, upsilon_checks

SCHEMA = "qaff/1"
BUNDLE_NAMES = {"a": ALPHA, "as": ALPHA_STAR, "g": GAMMA, "gs": GAMMA_STAR}


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# expression evaluation

def _names(node, acc=None) -> set:
    acc = set() if acc is None else acc
    if isinstance(node, Sym):
        acc.add(node.name)
    elif isinstance(node, (Pow, Neg)):
        _names(node.base if isinstance(node, Pow) else node.arg, acc)
    elif isinstance(node, BinOp):
        _names(node.left, acc)
        _names(node.right, acc)
    return acc


def target_of(node) -> str:
    """``horizontal`` if ``e+``/``e-`` occur, ``bundle`` if a coordinate occurs, else ``affine``."""
    names = _names(node)
    if names & {"e+", "e-"}:
        return "horizontal"
    if names & set(BUNDLE_NAMES):
        return "bundle"
    return "affine"


class Evaluator:
    """Evaluate an AST in ``A~``, ``B~`` or ``h[P~]``."""

    def __init__(self, P: HopfFibration, target: str):
        self.P = P
        self.target = target
        self.alg = {"affine": P.At, "bundle": P.Bt, "horizontal": P.hP}[target]

    def _sym_part(self, x: Element) -> Element:
        return self.P.S.sum(self.P.S.term(s, c) for (_, s), c in x.terms.items())

    def atom(self, name: str):
        P, t = self.P, self.target
        if name == "mu":
            return P.mu.gen
        if name == "U":
            if t != "affine":
                raise UsageError("U only occurs in affine expressions")
            return P.At.U(1)
        if name in ("xi", "xis"):
            x = P.At.xi if name == "xi" else P.At.xis
            if t == "affine":
                return x
            if t == "bundle":
                return P.from_affine_sym(x)
            return P.hP.embed_right(self._sym_part(x))
        if name in BUNDLE_NAMES:
            b = P.B.term(BUNDLE_NAMES[name])
            if t == "bundle":
                return P.lift(b)
            return P.hP.embed_left(P.hor.embed_left(b))
        return P.hP.embed_left(P.hor.eta(0 if name == "e+" else 1))

    def eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Sym):
            return self.atom(node.name)
        if isinstance(node, Neg):
            return -self.eval(node.arg)
        if isinstance(node, Pow):
            if isinstance(node.base, Sym) and node.base.name == "U" and self.target == "affine":
                return self.P.At.U(node.exp)
            base = self.eval(node.base)
            if isinstance(base, Element):
                if node.exp < 0:
                    raise UsageError("negative powers are only defined for U and scalars")
                return self.alg.one() if node.exp == 0 else base ** node.exp
            return base ** node.exp
        left, right = self.eval(node.left), self.eval(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if isinstance(right, Element):
            raise UsageError("division by a non-scalar expression")
        if not right:
            raise UsageError("division by zero")
        return left * (1 / right)

    def __call__(self, node) -> Element:
        v = self.eval(node)
        return v if isinstance(v, Element) else self.alg.scalar(v)


def _article(word: str) -> str:
    return ("an " if word[0] in "aeiou" else "a ") + word


def evaluate(P: HopfFibration, text: str, target: str | None = None) -> tuple[str, Element]:
    node = parse(text)
    t = target_of(node)
    if target is not None and t != target:
        if not (target == "bundle" and t == "affine" and "U" not in _names(node)):
            raise UsageError(f"expected {_article(target)} expression, got {_article(t)} expression")
        t = target
    return t, Evaluator(P, t)(node)


# ---------------------------------------------------------------------------
# commands

def _factored_c(p: int, q: int) -> str:
    parts = [f"(1-mu^-{2 * i + 2})" for i in range(1, p + 1)]
    parts += [f"(1-mu^{2 * j + 2})" for j in range(1, q + 1)]
    return "*".join(parts) or "1"


def cmd_braid(args, mu):
    spec = hopf_spec(mu)
    tau = braid_matrix(spec)
    checks = verify_braiding(spec, 2, 2)[:4]
    if mu.is_root_of_unity_sq():
        flip = all(tau.col(m) == {(m[1], m[0]): 1} for m in tau.basis)
        checks.append(Check("tau is the flip", flip))
    return {"matrix": tau.to_json()}, checks, None


def cmd_symalg(args, mu):
    spec = hopf_spec(mu)
    S, E = SymmetricAlgebra(spec, max(args.max_degree or 6, 6)), ExteriorAlgebra(spec)
    top = args.max_degree or 6
    dims = S.dimensions(top)
    edims = E.dimensions(min(top, 3))
    checks = [Check(f"dim S(V)^{k} = {k + 1}", dims[k] == k + 1, str(dims[k])) for k in range(top + 1)]
    checks += quadratic_generation(S, min(top, 5))
    basis = {str(k): [S.format(S.term(b)) for b in S.basis(k)] for k in range(min(top, 3) + 1)}
    table = [["degree", "dim_S", "dim_exterior"]]
    table += [[k, dims[k], edims[k] if k < len(edims) else 0] for k in range(top + 1)]
    return {"dimensions": dims, "exterior_dimensions": edims, "basis": basis}, checks, table


def cmd_relations(args, mu):
    spec = hopf_spec(mu)
    S, E = SymmetricAlgebra(spec), ExteriorAlgebra(spec)
    At = AffineHopf(spec)
    m = mu.gen
    ker = S.kernel(2).kernel
    ep, em = E.gen(0), E.gen(1)
    checks = [
        Check("ker Y_2 is one-dimensional", len(ker) == 1, str(len(ker))),
        Check("xi xi* = mu^2 xi* xi", At.xi * At.xis == (m * m) * (At.xis * At.xi)),
        Check("e+^2 = 0", not ep * ep),
        Check("e-^2 = 0", not em * em),
        Check("e+ e- = -mu^2 e- e+", ep * em == -(m * m) * (em * ep)),
    ]
    results = {
        "ker_Y2": [" + ".join(f"({fmt(c)})*{spec.label(k)}" for k, c in v.items()) for v in ker],
        "symmetric": "xi*xis = mu^2*xis*xi",
        "exterior": [E.format(r) for r in (ep * ep, em * em, ep * em)],
        "exterior_quadratic_relations": [" + ".join(f"({fmt(c)})*{spec.label(k)}" for k, c in v.items())
                                         for v in E.quadratic_relations()],
    }
    return results, checks, None


def cmd_coproduct(args, mu):
    P = HopfFibration(mu)
    node = parse(args.expr)
    t = target_of(node)
    if t == "horizontal":
        raise UsageError("coproduct takes an affine or bundle expression")
    x = Evaluator(P, t)(node)
    if t == "affine":
        At = P.At
        cop = At.coproduct(x)
        left = At.sum(At.counit_basis(k1) * v * At.term(k2) for (k1, k2), v in cop.terms.items())
        right = At.sum(At.counit_basis(k2) * v * At.term(k1) for (k1, k2), v in cop.terms.items())
        checks = [Check("coproduct shuffle = homomorphic extension", cop == At.coproduct_homomorphic(x)),
                  Check("(eps (x) id) phi = id", left == x), Check("(id (x) eps) phi = id", right == x)]
        return {"target": t, "input": At.format(x), "coproduct": str(cop), "counit": fmt(At.counit(x))}, checks, None
    H = P.H(x)
    back = P.Bt.sum(P.At.counit_basis(a) * v * P.Bt.term(b) for (b, a), v in H.terms.items())
    checks = [Check("(id (x) eps) H = id", back == x)]
    return {"target": t, "input": str(x), "coaction": str(H)}, checks, None


def cmd_antipode(args, mu):
    P = HopfFibration(mu)
    _, x = evaluate(P, args.expr, "affine")
    At = P.At
    k = At.antipode(x)
    ki = At.antipode_inverse(x)
    cop = At.coproduct(x)
    conv = At.sum(v * (At.antipode(At.term(k1)) * At.term(k2)) for (k1, k2), v in cop.terms.items())
    checks = [Check("kappa kappa^-1 = id", At.antipode(ki) == x),
              Check("m (kappa (x) id) phi = eps", conv == At.scalar(At.counit(x)), str(conv)),
              Check("kappa (kappa(x*))* = x", At.antipode(At.star(At.antipode(At.star(x)))) == x)]
    return {"input": At.format(x), "antipode": At.format(k), "antipode_inverse": At.format(ki)}, checks, None


def cmd_translation(args, mu):
    P = HopfFibration(mu, args.max_degree or 6)
    _, x = evaluate(P, args.expr, "affine")
    tau = P.affine_translation(x)
    checks = P.translation_identities(x)
    xt = P.X_affine(tau)
    checks.append(Check("X tau = 1 (x) id", xt == P.BtAt.tensor(P.Bt.one(), x), str(xt)))
    return {"input": P.At.format(x), "translation": str(tau)}, checks, None


def cmd_sigma(args, mu):
    P = HopfFibration(mu, args.max_degree or 6)
    _, left = evaluate(P, args.left, "bundle")
    _, right = evaluate(P, args.right, "bundle")
    bb = P.sigma_translation(left, right)
    checks = []
    if all(k[0] == (0, 0, 0) for k in left.terms):
        a2 = P.BtBt.sum(c * P.sigma_multicommutator(s, right) for (_, s), c in left.terms.items())
        d = bb - a2
        checks.append(Check("multicommutator route = translation route (relations)", P.quotient_membership(d)))
        checks.append(Check("multicommutator route = translation route (X)", P.zero_via_X(d)))
        if all(len(s) == 1 for (_, s) in left.terms):
            a1 = P.BtBt.sum(c * P.sigma_commutator(s[0], right) for (_, s), c in left.terms.items())
            checks.append(Check("commutator route = translation route", a1 == bb, str(a1 - bb)))
        if all(len(s) == 0 for (_, s) in left.terms):
            want = P.BtBt.tensor(right, left)
            checks.append(Check("sigma(1 (x) phi) = phi (x) 1", bb == want))
    return {"left": str(left), "right": str(right), "sigma": str(bb)}, checks, None


def _curvature_row(P, rho, p, q):
    got = rho.affine(p, q)
    try:
        want = closed_form(P, p, q) if P.mu.symbolic else closed_form_specialized(P, p, q)
        ok, w = got == want, ""
    except PoleError as e:
        ok, w = False, str(e)
    return got, Check(f"rho(xi^{p} xi*^{q}) recursion = closed form", ok, w if ok else (w or str(got)))


def cmd_curvature(args, mu):
    P = HopfFibration(mu)
    rho = levi_civita(P)
    results = {"w": "mu^3/(1-mu^2)*e-*e+", "rho_U": str(rho.base(1))}
    checks = []
    table = [["p", "q", "c_pq", "c_pq_factored", "status"]]
    if args.n is not None:
        v = rho.base(args.n)
        want = quantum_integer(args.n)
        want = want if mu.symbolic else want.eval(mu.value)
        results["n"] = args.n
        results["rho_U^n"] = str(v)
        checks.append(Check(f"rho(U^{args.n}) = [n] rho(U)", v == want * rho.base(1), str(v)))
    if args.p is not None or args.q is not None:
        pairs = [(args.p or 0, args.q or 0)]
    elif args.n is None:
        top = args.max_degree or 4
        pairs = [(p, d - p) for d in range(1, top + 1) for p in range(d + 1)]
    else:
        pairs = []
    rows = []
    for p, q in pairs:
        if p < 0 or q < 0 or p + q == 0:
            raise UsageError("need p, q >= 0 with p + q >= 1")
        got, chk = _curvature_row(P, rho, p, q)
        c = c_coefficient(p, q)
        checks.append(chk)
        row = {"p": p, "q": q, "c_pq": str(c), "c_pq_factored": _factored_c(p, q), "value": str(got)}
        if not mu.symbolic:
            row["c_pq_at_mu"] = fmt(c.eval(mu.value))
        rows.append(row)
        table.append([p, q, str(c), _factored_c(p, q), "pass" if chk.ok else "fail"])
    if len(rows) == 1:
        results.update(rows[0])
    elif rows:
        results["table"] = rows
    return results, checks, table


def cmd_upsilon(args, mu):
    P = HopfFibration(mu)
    N = args.max_degree or 4
    ups = upsilon_report(P, N)
    checks = upsilon_checks(mu, ups, N)
    results = {"N": N, "total": ups["total"], "levels": ups["levels"], "intersections": ups["intersections"],
               "cyclic_rank": ups["cyclic_rank"],
               "basis": [f"a={a} p={p} q={q}: {v}" for a, p, q, v in ups["basis"]]}
    table = [["level", "dimension"]] + [[k, v] for k, v in ups["levels"].items()]
    return results, checks, table


def cmd_gamma(args, mu):
    P = HopfFibration(mu)
    g = gamma_calculus(P, args.max_degree or 6)
    checks = list(g["checks"])
    if mu.value == 1:
        checks.append(Check("[n] = n at mu = 1", all(v == n for n, v in g["integers"].items())))
    results = {"zeta": g["zeta"], "dimension": g["dimension"],
               "integers": {str(n): fmt(v) for n, v in g["integers"].items()}, "ideal": g["ideal"]}
    table = [["n", "[n]"]] + [[n, fmt(v)] for n, v in g["integers"].items()]
    return results, checks, table


def cmd_translaton(args, mu):
    P = HopfFibration(mu)
    cand = canonical_translaton(P) if args.mutation == "none" else mutated_translaton(P, args.mutation)
    checks = verify_translaton(P, cand)
    labels = P.spec.labels
    return {"candidate": cand.name,
            "values": {labels[i]: str(v) for i, v in enumerate(cand.values)}}, checks, None


def cmd_verify(args, mu):
    checks, results = run_suite(args.suite, mu, args.max_degree or 3)
    out = {"suite": args.suite, "passed": sum(c.ok for c in checks), "total": len(checks)}
    out.update(results)
    return out, checks, None


COMMANDS = {
    "braid": (cmd_braid, "the braiding matrix on V (x) V"),
    "symalg": (cmd_symalg, "dimensions of the braided symmetric and exterior algebras"),
    "relations": (cmd_relations, "defining relations of S(V) and the exterior algebra"),
    "coproduct": (cmd_coproduct, "coproduct (affine) or coaction (bundle) of an expression"),
    "antipode": (cmd_antipode, "antipode of an affine expression"),
    "translation": (cmd_translation, "extended translation map of an affine expression"),
    "sigma": (cmd_sigma, "intrinsic braiding of two bundle expressions"),
    "curvature": (cmd_curvature, "Levi-Civita curvature on U^n and xi^p xi*^q"),
    "upsilon": (cmd_upsilon, "filtration of the curvature image"),
    "gamma": (cmd_gamma, "induced calculus on the structure group"),
    "translaton": (cmd_translaton, "translaton checks for canonical or mutated candidates"),
    "verify": (cmd_verify, "run a named verification suite"),
}


# ---------------------------------------------------------------------------
# output

def _jsonable(x):
    if isinstance(x, dict):
        return {(",".join(map(str, k)) if isinstance(k, tuple) else str(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return fmt(x)
    return str(x)


def _check_json(c: Check) -> dict:
    d = {"name": c.name, "status": "pass" if c.ok else "fail"}
    if c.witness and not c.ok:
        d["witness"] = c.witness
    return d


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mu", default="sym", help="'sym' for symbolic mu or a rational p/q")
    common.add_argument("--max-degree", type=int, default=None, help="truncation degree")
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", help="emit a JSON report")
    fmt_group.add_argument("--csv", action="store_true", help="emit a CSV table")
    common.add_argument("--no-meta", action="store_true", help="omit timing metadata")
    parser = argparse.ArgumentParser(prog="qaff", description="Affine extensions of the quantum Hopf fibration.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name in ("coproduct", "antipode", "translation"):
            sp.add_argument("expr")
        elif name == "sigma":
            sp.add_argument("left")
            sp.add_argument("right")
        elif name == "curvature":
            sp.add_argument("--p", type=int)
            sp.add_argument("--q", type=int)
            sp.add_argument("--n", type=int)
        elif name == "translaton":
            sp.add_argument("--mutation", choices=("none", "weight", "regular"), default="none")
        elif name == "verify":
            sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return parser


def _params(args) -> dict:
    skip = {"command", "mu", "json", "csv", "no_meta"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def _render_text(report: dict, checks: list[Check]) -> str:
    lines = [f"command: {report['command']}", f"mu: {report['mu']}"]
    for k, v in report["results"].items():
        if isinstance(v, (dict, list)):
            lines.append(f"{k}: {json.dumps(v)}")
        else:
            lines.append(f"{k}: {v}")
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        lines.append(f"{status} {c.name}" + (f": {c.witness}" if c.witness and not c.ok else ""))
    return "\n".join(lines) + "\n"


def _render_csv(table, checks: list[Check]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if table is None:
        table = [["name", "status", "witness"]]
        table += [[c.name, "pass" if c.ok else "fail", "" if c.ok else c.witness] for c in checks]
    w.writerows(table)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    start = time.perf_counter()
    try:
        mu = Mu.parse(args.mu)
    except (ValueError, ZeroDivisionError) as e:
        print(f"qaff: error: invalid --mu: {e}", file=sys.stderr)
        return 2
    if args.max_degree is not None and args.max_degree < 0:
        print("qaff: error: --max-degree must be nonnegative", file=sys.stderr)
        return 2
    func = COMMANDS[args.command][0]
    try:
        results, checks, table = func(args, mu)
    except ExprSyntaxError as e:
        expected = f" (expected one of: {', '.join(e.expected)})" if e.expected else ""
        print(f"qaff: syntax error at offset {e.offset}: {e.msg}{expected}", file=sys.stderr)
        return 2
    except (UsageError, TruncationExceeded, PoleError) as e:
        print(f"qaff: error: {e}", file=sys.stderr)
        return 2
    report = {"command": args.command, "mu": mu.label, "params": _jsonable(_params(args)),
              "results": _jsonable(results), "checks": [_check_json(c) for c in checks], "schema": SCHEMA}
    if not args.no_meta:
        report["meta"] = {"elapsed": round(time.perf_counter() - start, 3)}
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    elif args.csv:
        sys.stdout.write(_render_csv(table, checks))
    else:
        sys.stdout.write(_render_text(report, checks))
    return 0 if all(c.ok for c in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
