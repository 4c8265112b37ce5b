from qaff.affine_hopf import AffineHopf, verify_hopf, verify_restrictions
from qaff.braiding import hopf_spec
from qaff.scalars import Mu
from qaff.suites import suite_germ


def test_hopf_axioms(mu):
    At = AffineHopf(hopf_spec(mu))
    bad = [(c.name, c.witness) for c in verify_hopf(At, 3, 3) + verify_restrictions(At, 3, 3) if not c.ok]
    assert not bad


def test_generator_data(mu):
    At = AffineHopf(hopf_spec(mu))
    g = mu.gen
    T = At.T2
    assert At.coproduct(At.xi) == T.tensor(At.one(), At.xi) + T.tensor(At.xi, At.U(2))
    assert At.xi * At.U(1) == (1 / g) * (At.U(1) * At.xi)


def test_antipode_on_generator():
    At = AffineHopf(hopf_spec(Mu()))
    g = Mu().gen
    assert At.antipode(At.xi) == -(g * g) * (At.U(-2) * At.xi)
    assert At.antipode(At.antipode_inverse(At.xi * At.xis)) == At.xi * At.xis


def test_germ_extension(mu):
    checks, _ = suite_germ(mu, 3)
    assert not [c.name for c in checks if not c.ok]
