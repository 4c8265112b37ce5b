import pytest
from hypothesis import given, settings, strategies as st

from qaff.braided_algebras import TruncationExceeded
from qaff.hopf_fibration import (ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, SU2, HopfFibration, fibration,
                                 verify_bundle)
from qaff.scalars import Mu

B = SU2(Mu())
monos = st.sampled_from(B.monomials(4))


@settings(max_examples=60, deadline=None)
@given(monos, monos, monos)
def test_normal_form_is_associative(x, y, z):
    a, b, c = B.term(x), B.term(y), B.term(z)
    assert (a * b) * c == a * (b * c)


def test_unitarity_relations():
    a, as_, g, gs = (B.term(k) for k in (ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR))
    m = Mu().gen
    assert as_ * a + gs * g == B.one()
    assert a * as_ + (m * m) * (gs * g) == B.one()
    assert a * g == m * (g * a)
    assert g * gs == gs * g


def test_bundle_suite(bundle):
    bad = [(c.name, c.witness) for c in verify_bundle(bundle) if not c.ok]
    assert not bad


@pytest.mark.parametrize("psi", ["U", "U^-1", "U^2", "U^-2", "xi", "xis", "xi*xis"])
def test_translation_identities(psi):
    from qaff.cli import evaluate

    P = fibration("sym")
    _, x = evaluate(P, psi, "affine")
    assert all(c.ok for c in P.translation_identities(x))


def test_translation_of_U(sym_bundle):
    P = sym_bundle
    U = P.A.gen(0, 1)
    assert P.BB.format(P.translation_map(U)) == "as (x) a + gs (x) g"
    assert P.X(P.translation_map(U)) == P.BA.tensor(P.B.one(), U)


def test_sigma_two_routes_on_generators(sym_bundle):
    P = sym_bundle
    for i in range(2):
        for phi in (P.b(ALPHA), P.b(ALPHA_STAR), P.b(GAMMA), P.b(GAMMA_STAR), P.xi, P.xis):
            assert P.sigma_commutator(i, phi) == P.sigma_translation(P.sym(P.S.gen(i)), phi)


def test_sigma_unit(sym_bundle):
    P = sym_bundle
    g = P.b(GAMMA)
    assert P.sigma_translation(P.Bt.one(), g) == P.BtBt.tensor(g, P.Bt.one())


@pytest.mark.parametrize("s", [(0, 0, 1), (0, 1, 1)])
def test_multicommutator_route_degree_three(s):
    small = fibration("sym")
    d = small.sigma_multicommutator(s, small.b(ALPHA)) - small.sigma_translation(small.sym(small.S.term(s)), small.b(ALPHA))
    assert small.zero_via_X(d)
    with pytest.raises(TruncationExceeded):
        small.quotient_membership(d)
    P = HopfFibration(Mu(), degree_bound=8)
    d = P.sigma_multicommutator(s, P.b(ALPHA)) - P.sigma_translation(P.sym(P.S.term(s)), P.b(ALPHA))
    assert P.quotient_membership(d) and P.zero_via_X(d)


def test_invariant_monomials(sym_bundle):
    P = sym_bundle
    fmt = [P.B.format_key(k) for k in P.omega_m_basis(2)]
    assert fmt == ["1", "a*gs", "as*g", "g*gs"]
    assert [P.B.format_key(k) for k in P.omega_m_basis(0)] == ["1"]
    # g as = mu as g, so the span matches the one spanned by g*as
    B = P.B
    assert B.gamma * B.alpha_star == P.mu.gen * B.term(P.omega_m_basis(2)[2])
    for k in P.omega_m_basis(4):
        assert P.F(B.term(k)) == P.BA.tensor(B.term(k), P.A.one())
