"""Named verification suites used by ``qaff verify`` and the test-suite."""

from __future__ import annotations

import contextlib
import io
import json

from .affine_hopf import AffineHopf, GermExtension, verify_germ, verify_hopf, verify_restrictions
from .base_hopf import BaseHopf, verify_base
from .braided_algebras import (ExteriorAlgebra, SymmetricAlgebra, compatibility, ideal_property,
                               image_kernel_complement, kernel_stability, quadratic_generation,
                               reversal_involution, star_antimultiplicative)
from .braiding import Check, braid_matrix, hopf_spec, validate_bimodule, verify_braiding
from .connections import (canonical_translaton, check_lambda_regular, curvature_checks,
                          curvature_law_checks, frame_lambda, gamma_calculus, levi_civita,
                          mutated_translaton, upsilon_report, verify_translaton, zero_lambda)
from .expr import ExprSyntaxError, parse, to_string
from .hopf_fibration import HopfFibration, verify_bundle
from .linalg import rank
from .scalars import Mu, verify_scalars

SUITES = ("scalars", "parser", "base", "braiding", "symalg", "hopf", "germ", "bundle", "connections", "cli")

PARSER_SAMPLES = ("xi*U^2", "(1-mu^2)*xis", "-a^2*gs + mu^-3*g", "U^(-2)*xi*xis - 1/2",
                  "e+*e- - (mu^2+1)/mu*a*as", "-(xi - xis)^3", "mu^(-2)*U^-1", "2*-xi")


def _wrap(prefix: str, checks) -> list[Check]:
    out = []
    for c in checks:
        if isinstance(c, tuple):
            c = Check(*c)
        out.append(Check(f"{prefix}/{c.name}", c.ok, c.witness, c.value))
    return out


def suite_scalars(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    return _wrap("scalars", verify_scalars()), {}


def suite_parser(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    checks = []
    for text in PARSER_SAMPLES:
        node = parse(text)
        ok = parse(to_string(node)) == node
        checks.append(Check(f"round-trip {text!r}", ok, to_string(node)))
    try:
        parse("xi**U")
        ok, w = False, "accepted"
    except ExprSyntaxError as e:
        ok, w = e.offset == 3, str(e)
    checks.append(Check("syntax error offset", ok, w))
    return _wrap("parser", checks), {}


def suite_base(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    return _wrap("base", verify_base(BaseHopf(mu), radius=6)), {}


def suite_braiding(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    spec = hopf_spec(mu)
    checks = validate_bimodule(spec) + verify_braiding(spec, max_perm=5, max_factor=6)
    S = SymmetricAlgebra(spec)
    for n in range(2, 6):
        ker = S.kernel(n).kernel
        both = rank(list(ker) + [spec.star_tensor(v) for v in ker])
        checks.append(Check(f"ker(Y_{n})* = ker(Y_{n})", both == len(ker), f"rank {both} vs {len(ker)}"))
    if mu.is_root_of_unity_sq():
        flip = all(braid_matrix(spec).col(m) == {(m[1], m[0]): 1} for m in braid_matrix(spec).basis)
        checks.append(Check("braiding is the flip", flip))
    return _wrap("braiding", checks), {"braid": braid_matrix(spec).to_json()}


def suite_symalg(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    spec = hopf_spec(mu)
    S = SymmetricAlgebra(spec)
    E = ExteriorAlgebra(spec)
    top = max(max_degree, 6)
    dims = S.dimensions(top)
    checks = [Check(f"dim S(V)^{k} = {k + 1}", dims[k] == k + 1, str(dims[k])) for k in range(top + 1)]
    checks.append(Check("ker Y_2 is one-dimensional", len(S.kernel(2).kernel) == 1))
    edims = E.dimensions(3)
    checks.append(Check("exterior dimensions 1,2,1,0", edims == [1, 2, 1, 0], str(edims)))
    checks += quadratic_generation(S, 5) + kernel_stability(S, 5) + image_kernel_complement(S, 5)
    checks += ideal_property(S, 5) + reversal_involution(S, 4)
    checks += compatibility(S, 4) + compatibility(E, 2)
    checks += [star_antimultiplicative(S, 4), star_antimultiplicative(E, 2)]
    return _wrap("symalg", checks), {"dimensions": dims, "exterior_dimensions": edims}


def suite_hopf(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    At = AffineHopf(hopf_spec(mu))
    checks = verify_hopf(At, 3, max_degree) + verify_restrictions(At, 3, max_degree)
    m = mu.gen
    want = At.T2.tensor(At.one(), At.xi) + At.T2.tensor(At.xi, At.U(2))
    checks.append(Check("phi(xi) = 1 (x) xi + xi (x) U^2", At.coproduct(At.xi) == want))
    checks.append(Check("xi U = mu^-1 U xi", At.xi * At.U(1) == (1 / m) * (At.U(1) * At.xi)))
    checks.append(Check("xi xi* = mu^2 xi* xi", At.xi * At.xis == (m * m) * (At.xis * At.xi)))
    return _wrap("hopf", checks), {}


def suite_germ(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    P = HopfFibration(mu)
    rho = levi_civita(P)
    ge = GermExtension(P.At, P.hor, lambda g: rho.base(g[0]), lambda i: P.hor.eta(i))
    checks = verify_germ(ge, 1, min(max_degree, 3))
    got = ge.value(P.At.xi)
    Ht = ge.Ht
    want = Ht.embed_left(P.hor.eta(0)) - Ht.embed_right(P.S.gen(0)) * Ht.embed_left(rho.base(2))
    checks.append(Check("frame germ on xi", got == want, str(got)))
    return _wrap("germ", checks), {}


def suite_bundle(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    P = HopfFibration(mu)
    return _wrap("bundle", verify_bundle(P)), {}


def suite_connections(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    P = HopfFibration(mu)
    checks = curvature_checks(P) + curvature_law_checks(P, 8)
    N = max(max_degree, 1)
    ups = upsilon_report(P, N)
    checks += upsilon_checks(mu, ups, N)
    g = gamma_calculus(P)
    checks += g["checks"]
    if mu.value == 1:
        checks.append(Check("[n] = n at mu = 1", all(v == n for n, v in g["integers"].items())))
    frame = check_lambda_regular(P, frame_lambda(P), 4)
    zero = check_lambda_regular(P, zero_lambda(P), 4)
    checks += frame["invariants"]
    checks.append(Check("frame lambda is regular", frame["bijective"]))
    checks.append(Check("zero lambda is not regular", not zero["bijective"]))
    checks += verify_translaton(P, canonical_translaton(P))
    for kind in ("weight", "regular"):
        res = verify_translaton(P, mutated_translaton(P, kind))
        failed = [c for c in res if not c.ok]
        checks.append(Check(f"mutated translaton ({kind}) is rejected", bool(failed) or mu.value == 1,
                            failed[0].witness if failed else ""))
    results = {"upsilon_dimension": ups["total"], "upsilon_levels": ups["levels"]}
    return _wrap("connections", checks), results


def upsilon_checks(mu: Mu, ups: dict, N: int) -> list[Check]:
    expected = 3 if mu.is_root_of_unity_sq() else (N + 1) * (N + 2) // 2
    checks = [Check(f"upsilon dimension (N={N})", ups["total"] == expected, str(ups["total"])),
              Check("upsilon level 0 has dimension 3", ups["levels"].get(0) == 3, str(ups["levels"].get(0)))]
    far = {k: v for k, v in ups["intersections"].items() if abs(k[0] - k[1]) >= 2}
    checks.append(Check("upsilon levels k, l with |k-l| >= 2 intersect trivially",
                        not any(far.values()), str(far)))
    if mu.is_root_of_unity_sq():
        checks.append(Check("upsilon higher levels vanish",
                            all(v == 0 for k, v in ups["levels"].items() if k > 0), str(ups["levels"])))
    else:
        checks.append(Check("zeta is cyclic", ups["cyclic_rank"] == ups["total"], str(ups["cyclic_rank"])))
    return checks


def _run_cli(argv: list[str]) -> tuple[int, str]:
    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, buf.getvalue()


def suite_cli(mu: Mu, max_degree: int) -> tuple[list[Check], dict]:
    m = ["--mu", mu.label]
    checks = []
    for argv in (["braid", "--json", "--no-meta"], ["coproduct", "xi*U^2-xis", "--json", "--no-meta"]):
        first, second = _run_cli(argv + m), _run_cli(argv + m)
        checks.append(Check(f"byte-identical JSON for {argv[0]}", first == second and first[0] == 0))
    code, out = _run_cli(["braid", "--json", "--no-meta"] + m)
    report = json.loads(out)
    keys = {"command", "mu", "params", "results", "checks", "schema"}
    checks.append(Check("report schema qaff/1", set(report) == keys and report["schema"] == "qaff/1",
                        ",".join(sorted(report))))
    cases = [(["coproduct", "xi**U"], 2), (["antipode", "a"], 2), (["translaton", "--mutation", "weight"], 1),
             (["relations"], 0)]
    for argv, want in cases:
        code, _ = _run_cli(argv + m)
        checks.append(Check(f"exit code {want} for {' '.join(argv)}", code == want, str(code)))
    return _wrap("cli", checks), {}


_RUNNERS = {
    "scalars": suite_scalars, "parser": suite_parser, "base": suite_base, "braiding": suite_braiding,
    "symalg": suite_symalg, "hopf": suite_hopf, "germ": suite_germ, "bundle": suite_bundle,
    "connections": suite_connections, "cli": suite_cli,
}


def run_suite(name: str, mu: Mu, max_degree: int = 3) -> tuple[list[Check], dict]:
    names = SUITES if name == "all" else (name,)
    checks: list[Check] = []
    results: dict = {}
    for n in names:
        c, r = _RUNNERS[n](mu, max_degree)
        checks += c
        results.update(r)
    return checks, results
