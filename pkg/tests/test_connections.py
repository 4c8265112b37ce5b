import pytest

from qaff.connections import (canonical_translaton, check_lambda_regular, curvature_checks,
                              curvature_law_checks, frame_lambda, gamma_calculus, levi_civita,
                              mutated_translaton, quantum_integer, upsilon_report, verify_translaton,
                              zero_lambda)
from qaff.hopf_fibration import fibration


def test_curvature_on_U_inverse(bundle):
    P = bundle
    rho = levi_civita(P)
    m = P.mu.gen
    e_plus, e_minus = P.hor.eta(0), P.hor.eta(1)
    assert rho.base(1) == m * (e_minus * e_plus)
    assert rho.base(-1) == m * (e_plus * e_minus)


@pytest.mark.parametrize("n", range(-6, 7))
def test_curvature_on_U_powers(n):
    P = fibration("sym")
    rho = levi_civita(P)
    assert rho.base(n) == quantum_integer(n) * rho.base(1)


def test_curvature_properties(bundle):
    bad = [(c.name, c.witness) for c in curvature_checks(bundle) if not c.ok]
    assert not bad


def test_curvature_law(bundle):
    bad = [(c.name, c.witness) for c in curvature_law_checks(bundle, 8) if not c.ok]
    assert not bad


def test_upsilon_generic():
    ups = upsilon_report(fibration("sym"), 4)
    assert ups["total"] == 15
    assert ups["levels"] == {0: 3, 1: 5, 2: 7, 3: 9}
    assert ups["cyclic_rank"] == 15


@pytest.mark.parametrize("label", ["-1", "1"])
def test_upsilon_degenerate(label):
    ups = upsilon_report(fibration(label), 4)
    assert ups["total"] == 3
    assert ups["levels"][0] == 3
    assert all(v == 0 for k, v in ups["levels"].items() if k > 0)


def test_gamma_calculus(bundle):
    g = gamma_calculus(bundle)
    assert all(c.ok for c in g["checks"])
    assert g["dimension"] == 1
    if bundle.mu.value == 1:
        assert all(v == n for n, v in g["integers"].items())


def test_quantum_integer_specialises():
    assert str(quantum_integer(2)) == "(mu^2+1)/mu^2"
    assert str(quantum_integer(-1)) == "-mu^2"
    assert all(quantum_integer(n).eval(1) == n for n in range(-6, 7))


def test_frame_regularity(bundle):
    frame = check_lambda_regular(bundle, frame_lambda(bundle), 4)
    zero = check_lambda_regular(bundle, zero_lambda(bundle), 4)
    assert frame["bijective"] and all(c.ok for c in frame["invariants"])
    assert not zero["bijective"]
    assert not zero["degrees"][(0, 1)]["injective"]


def test_canonical_translaton(bundle):
    assert all(c.ok for c in verify_translaton(bundle, canonical_translaton(bundle)))


def test_mutated_translatons_fail():
    P = fibration("sym")
    weight = {c.name: c for c in verify_translaton(P, mutated_translaton(P, "weight"))}
    assert not weight["coaction law"].ok
    assert weight["coaction law"].witness == "e+: g (x) U - g (x) U^2"
    regular = {c.name: c for c in verify_translaton(P, mutated_translaton(P, "regular"))}
    assert regular["coaction law"].ok
    assert not regular["regular (ell = 0 on samples)"].ok
    assert regular["regular (ell = 0 on samples)"].witness
