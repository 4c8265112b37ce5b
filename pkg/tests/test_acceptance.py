"""Acceptance criteria 1-12, one test each.

Each criterion prints a ``criterion N: PASS|FAIL`` line; the lines are also
collected into the pytest terminal summary.  Run this file directly with
``python3 tests/test_acceptance.py`` to get only those lines.
"""

import contextlib
import functools
import io
import sys
import time


from qaff.affine_hopf import AffineHopf, verify_hopf
from qaff.braided_algebras import ExteriorAlgebra, SymmetricAlgebra
from qaff.braiding import braid_matrix, hopf_spec, verify_braiding
from qaff.cli import evaluate, main
from qaff.connections import (c_coefficient, canonical_translaton, check_lambda_regular, closed_form,
                              frame_lambda, gamma_calculus, levi_civita, mutated_translaton,
                              quantum_integer, upsilon_report, verify_translaton, zero_lambda)
from qaff.hopf_fibration import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, fibration
from qaff.scalars import Mu, Scalar
from qaff.suites import run_suite

RESULTS: dict = {}
MUS = ("sym", "1/2", "-1", "1")


def criterion(number: int, title: str, budget: float):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            ok = False
            try:
                fn()
                ok = True
            finally:
                elapsed = time.perf_counter() - start
                line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.1f}s, budget {budget:g}s)"
                RESULTS[number] = line
                print(line)
        run.criterion = number
        return run
    return wrap


@criterion(1, "braid matrix", 1)
def test_criterion_01_braid_matrix():
    m = Scalar.mu()
    want = [[1 / m ** 2, 0, 0, 0], [0, 0, 1 / m ** 2, 0], [0, m ** 2, 0, 0], [0, 0, 0, m ** 2]]
    assert braid_matrix(hopf_spec(Mu())).dense() == want
    flip = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    assert braid_matrix(hopf_spec(Mu.parse("-1"))).dense() == flip


@criterion(2, "braid equation, reduced words, star, factorizations", 10)
def test_criterion_02_braid_identities():
    spec = hopf_spec(Mu())
    checks = verify_braiding(spec, max_perm=4, max_factor=6)
    assert not [c.name for c in checks if not c.ok]
    names = {c.name for c in checks}
    assert {"braid equation", "star tau star = tau^-1", "reduced-word independence n=4"} <= names
    assert sum(1 for n in names if n.startswith("Y_6 =")) == 10


@criterion(3, "quotient structure of S(V) and the exterior algebra", 5)
def test_criterion_03_quotients():
    mu = Mu()
    spec = hopf_spec(mu)
    S, E = SymmetricAlgebra(spec), ExteriorAlgebra(spec)
    assert len(S.kernel(2).kernel) == 1
    At = AffineHopf(spec)
    g = mu.gen
    assert At.xi * At.xis == g * g * (At.xis * At.xi)
    assert S.dimensions(6) == [k + 1 for k in range(7)]
    ep, em = E.gen(0), E.gen(1)
    assert not ep * ep and not em * em
    assert ep * em == -(g * g) * (em * ep)


@criterion(4, "Hopf axioms on the affine extension", 30)
def test_criterion_04_hopf_axioms():
    for label in MUS:
        mu = Mu.parse(label)
        At = AffineHopf(hopf_spec(mu))
        bad = [c.name for c in verify_hopf(At, 3, 3) if not c.ok]
        assert not bad, (label, bad)
        T = At.T2
        assert At.coproduct(At.xi) == T.tensor(At.one(), At.xi) + T.tensor(At.xi, At.U(2))
        assert At.xi * At.U(1) == (1 / mu.gen) * (At.U(1) * At.xi)


@criterion(5, "translation identities", 20)
def test_criterion_05_translation_identities():
    P = fibration("sym")
    for psi in ("U", "U^-1", "U^2", "U^-2", "xi", "xis", "xi*xis"):
        _, x = evaluate(P, psi, "affine")
        checks = P.translation_identities(x)
        assert len(checks) == 3 and all(c.ok for c in checks), (psi, [c.witness for c in checks])


@criterion(6, "braiding two routes", 10)
def test_criterion_06_sigma_two_routes():
    P = fibration("sym")
    phis = [P.b(ALPHA), P.b(ALPHA_STAR), P.b(GAMMA), P.b(GAMMA_STAR), P.xi, P.xis]
    for i in range(2):
        theta = P.sym(P.S.gen(i))
        for phi in phis:
            assert P.sigma_commutator(i, phi) == P.sigma_translation(theta, phi)
    for phi in phis:
        assert P.sigma_translation(P.Bt.one(), phi) == P.BtBt.tensor(phi, P.Bt.one())


@criterion(7, "curvature law", 15)
def test_criterion_07_curvature_law():
    P = fibration("sym")
    rho = levi_civita(P)
    for d in range(1, 9):
        for p in range(d + 1):
            assert rho.affine(p, d - p) == closed_form(P, p, d - p), (p, d - p)
    m = P.mu.gen
    e_plus, e_minus = P.hor.eta(0), P.hor.eta(1)
    for n in range(-6, 7):
        assert rho.base(n) == quantum_integer(n) * (m * (e_minus * e_plus))
    assert rho.base(-1) == m * (e_plus * e_minus)
    assert str(c_coefficient(1, 1)) == "(-mu^8+2*mu^4-1)/mu^4"


@criterion(8, "upsilon dimensions", 20)
def test_criterion_08_upsilon():
    P = fibration("sym")
    for N in range(1, 5):
        assert upsilon_report(P, N)["total"] == (N + 1) * (N + 2) // 2
    assert upsilon_report(P, 4)["levels"][0] == 3
    for label in ("-1", "1"):
        ups = upsilon_report(fibration(label), 4)
        assert ups["total"] == 3
        assert all(v == 0 for k, v in ups["levels"].items() if k > 0)


@criterion(9, "structure-group calculus", 5)
def test_criterion_09_gamma():
    for label in ("sym", "1/2"):
        g = gamma_calculus(fibration(label))
        assert g["dimension"] == 1 and all(c.ok for c in g["checks"])
    g = gamma_calculus(fibration("1"))
    assert all(v == n for n, v in g["integers"].items())
    assert all(quantum_integer(n).eval(1) == n for n in range(-6, 7))


@criterion(10, "translaton suite", 10)
def test_criterion_10_translatons():
    P = fibration("sym")
    checks = verify_translaton(P, canonical_translaton(P))
    names = [c.name for c in checks]
    assert all(c.ok for c in checks)
    for key in ("hermitian", "coaction law", "regular (ell = 0 on samples)",
                "multiplicative (kernel of Y2 annihilated)", "filtration: C_0 = B"):
        assert key in names
    for kind in ("weight", "regular"):
        failed = [c for c in verify_translaton(P, mutated_translaton(P, kind)) if not c.ok]
        assert failed and all(c.witness for c in failed)


@criterion(11, "frame regularity", 10)
def test_criterion_11_frame():
    P = fibration("sym")
    frame = check_lambda_regular(P, frame_lambda(P), 4)
    assert frame["bijective"]
    assert all(v["injective"] and v["surjective"] for v in frame["degrees"].values())
    zero = check_lambda_regular(P, zero_lambda(P), 4)
    assert not all(v["injective"] for v in zero["degrees"].values())


# one named check per listed property, by module
REQUIRED = {
    "scalars": ["scalar canonical form is association independent", "evaluation is a field homomorphism"],
    "parser": ["round-trip 'xi*U^2'", "syntax error offset"],
    "base": ["coassociativity[", "counit[", "antipode[", "star-coproduct[", "star-antipode-involution["],
    "braiding": ["braid equation", "star tau star = tau^-1", "tau is coaction and action covariant",
                 "reduced-word independence n=5", "Y_6 = Y_3,3", "ker(Y_5)* = ker(Y_5)"],
    "symalg": ["ideal-property[", "kernel-stable[", "S(V):coaction-action", "im-ker-complement[",
               "reversal-involution[", "quadratic-generation["],
    "hopf": ["coassociativity", "antipode-left", "homomorphism", "coproduct-star",
             "coproduct restricts to the base coproduct", "coproduct on V is",
             "coproduct respects the degree filtration"],
    "germ": ["germ values: closed formula = iterated rule"],
    "bundle": ["normal-form associativity", "F is a *-homomorphism", "F^ is coassociative",
               "fixed-point", "translation opH", "sigma two routes"],
    "connections": ["F^ rho(", "rho(kappa(a)*) = -rho(a)*", "rho(a) phi = phi_k rho(a c_k)",
                    "germ rule two routes", "rho(xi^8 xi*^0) = c_80", "values on level",
                    "rho(x o a) = rho(x) o a, closed action"],
    "cli": ["byte-identical JSON", "exit code 2", "report schema qaff/1"],
}


@criterion(12, "property suites via qaff verify --suite all", 120)
def test_criterion_12_property_suites():
    checks, results = run_suite("all", Mu(), 3)
    failed = [c.name for c in checks if not c.ok]
    assert not failed, failed
    names = [c.name for c in checks]
    for suite, required in REQUIRED.items():
        for key in required:
            assert any(n.startswith(f"{suite}/{key}") for n in names), (suite, key)
    for label in ("1/2", "-1", "1"):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(["verify", "--suite", "all", "--max-degree", "3", "--mu", label, "--no-meta"])
        assert code == 0, (label, [l for l in buf.getvalue().splitlines() if l.startswith("FAIL")])
        if label == "-1":
            assert "upsilon_dimension: 3" in buf.getvalue()


CRITERIA = sorted((f for f in list(globals().values()) if hasattr(f, "criterion")), key=lambda f: f.criterion)

if __name__ == "__main__":
    failures = 0
    for fn in CRITERIA:
        with contextlib.redirect_stdout(io.StringIO()):
            try:
                fn()
            except Exception:
                failures += 1
        print(RESULTS[fn.criterion])
    sys.exit(1 if failures else 0)
