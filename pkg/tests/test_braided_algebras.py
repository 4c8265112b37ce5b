from qaff.affine_hopf import AffineHopf
from qaff.braided_algebras import (ExteriorAlgebra, SymmetricAlgebra, compatibility, ideal_property,
                                   image_kernel_complement, kernel_stability, quadratic_generation,
                                   reversal_involution, star_antimultiplicative)
from qaff.braiding import hopf_spec
from qaff.scalars import Mu


def test_dimensions(mu):
    S = SymmetricAlgebra(hopf_spec(mu))
    assert S.dimensions(6) == [1, 2, 3, 4, 5, 6, 7]
    assert ExteriorAlgebra(hopf_spec(mu)).dimensions(3) == [1, 2, 1, 0]


def test_single_quadratic_relation(mu):
    spec = hopf_spec(mu)
    assert len(SymmetricAlgebra(spec).kernel(2).kernel) == 1
    At = AffineHopf(spec)
    g = mu.gen
    assert At.xi * At.xis == g * g * (At.xis * At.xi)


def test_exterior_relations(mu):
    E = ExteriorAlgebra(hopf_spec(mu))
    ep, em = E.gen(0), E.gen(1)
    g = mu.gen
    assert not ep * ep and not em * em
    assert ep * em == -(g * g) * (em * ep)


def test_property_suite(mu):
    spec = hopf_spec(mu)
    S, E = SymmetricAlgebra(spec), ExteriorAlgebra(spec)
    checks = (quadratic_generation(S, 5) + kernel_stability(S, 5) + image_kernel_complement(S, 5)
              + ideal_property(S, 5) + reversal_involution(S, 4) + compatibility(S, 4) + compatibility(E, 2)
              + [star_antimultiplicative(S, 4), star_antimultiplicative(E, 2)])
    assert not [c.name for c in checks if not c.ok]


def test_display_basis():
    S = SymmetricAlgebra(hopf_spec(Mu()))
    assert S.format(S.gen(0)) == "xi"
    assert S.format(S.gen(1)) == "(1/mu)*xis"
