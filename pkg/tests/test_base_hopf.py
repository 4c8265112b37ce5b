from qaff.base_hopf import BaseHopf, verify_base


def test_axioms_on_box(mu):
    bad = [(name, w) for name, ok, w in verify_base(BaseHopf(mu), radius=6) if not ok]
    assert not bad


def test_grouplike_data():
    from qaff.scalars import Mu

    A = BaseHopf(Mu())
    U3 = A.gen(0, 3)
    assert A.coproduct(U3) == A.tensor2.tensor(U3, U3)
    assert A.antipode(U3) == A.gen(0, -3)
    assert A.counit(U3) == 1
    assert A.format(U3 - 2 * A.gen(0, -1)) in ("U^3 - 2*U^(-1)", "-2*U^(-1) + U^3")
