import dataclasses

from qaff.braiding import (braid_lift, braid_matrix, hopf_spec, reduced_word, trivial_spec,
                           validate_bimodule, verify_braiding, word_to_perm)
from qaff.scalars import Mu, Scalar

m = Scalar.mu()
# the matrix printed for the quantum Hopf fibration, basis e+e+, e+e-, e-e+, e-e-
TAU = [[1 / m ** 2, 0, 0, 0], [0, 0, 1 / m ** 2, 0], [0, m ** 2, 0, 0], [0, 0, 0, m ** 2]]
FLIP = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def test_braid_matrix_symbolic():
    assert braid_matrix(hopf_spec(Mu())).dense() == TAU


def test_braid_matrix_is_flip_at_unit_mu_squared():
    for label in ("-1", "1"):
        assert braid_matrix(hopf_spec(Mu.parse(label))).dense() == FLIP


def test_bimodule_axioms(mu):
    assert all(c.ok for c in validate_bimodule(hopf_spec(mu)))
    assert all(c.ok for c in validate_bimodule(trivial_spec(mu)))


def test_identity_star_is_rejected():
    spec = dataclasses.replace(hopf_spec(Mu()), star=((1, 0), (0, 1)))
    failed = {c.name: c.witness for c in validate_bimodule(spec) if not c.ok}
    assert list(failed) == ["coaction-star"]
    assert failed["coaction-star"].startswith("e+")


def test_braiding_identities(mu):
    bad = [c.name for c in verify_braiding(hopf_spec(mu), max_perm=4, max_factor=6) if not c.ok]
    assert not bad


def test_reduced_word_independence_n5():
    bad = [c.name for c in verify_braiding(hopf_spec(Mu()), max_perm=5, max_factor=2) if not c.ok]
    assert not bad


def test_reduced_words_realise_permutation():
    p = (2, 0, 3, 1)
    for strategy in ("first", "last", "left"):
        assert word_to_perm(reduced_word(p, strategy), 4) == p
    spec = hopf_spec(Mu())
    assert braid_lift(spec, p, "first") == braid_lift(spec, p, "last")
