"""Curvature and transition maps on the affine Hopf fibration.

The Levi-Civita data is a single datum ``rho(U) = mu e- e+`` in the
horizontal 2-forms.  Everything else (values on powers of ``U``, on the
translational generators and on arbitrary elements of ``A~``) is forced by
the germ rules and computed here, together with the induced calculus on the
structure group, frame regularity and translaton checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .affine_hopf import GermExtension
from .algebra import Element, TensorAlgebra
from .braiding import Check
from .hopf_fibration import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, HopfFibration, weight
from .linalg import EchelonBasis, add_to, axpy, rank
from .scalars import PoleError, Scalar

OMEGA_SAMPLES = ((0, 1, 1), (1, 0, 1), (-1, 1, 0))


class InvariantViolation(ValueError):
    def __init__(self, message: str, witness: str = ""):
        super().__init__(f"{message}: {witness}" if witness else message)
        self.witness = witness


def c_coefficient(p: int, q: int, mu=None) -> Scalar:
    """Closed-form product ``prod (1 - mu^-(2i+2)) prod (1 - mu^(2j+2))``."""
    m = Scalar.mu() if mu is None else mu
    out = Scalar(1) if mu is None else 1
    for i in range(1, p + 1):
        out = out * (1 - m ** (-(2 * i + 2)))
    for j in range(1, q + 1):
        out = out * (1 - m ** (2 * j + 2))
    return out


def w_coefficient() -> Scalar:
    """Coefficient of ``e- e+`` in ``w = mu^3/(1-mu^2) e- e+``."""
    m = Scalar.mu()
    return m ** 3 / (1 - m * m)


def quantum_integer(n: int) -> Scalar:
    """``(1 - mu^-2n)/(1 - mu^-2)`` as a Laurent polynomial."""
    m = Scalar.mu()
    return (1 - m ** (-2 * n)) / (1 - m ** -2)


class Curvature:
    """Germ-type map ``A~ -> h[P~]`` determined by its values on ``U`` and ``V``.

    ``rho_U`` is the value on ``U`` (an element of ``hor``); ``torsion(i)``
    gives ``D lambda(v_i)``, which enters the degree-one values with a minus
    sign.  The same class serves transition maps (pass their ``U`` datum and
    ``E(v_i)`` as ``torsion``).
    """

    def __init__(self, P: HopfFibration, rho_U: Element | None = None,
                 torsion: Callable[[int], Element] | None = None, validate: bool = True):
        self.P = P
        self.hor = P.hor
        self.hP = P.hP
        m = P.mu.gen
        self.rho_U = rho_U if rho_U is not None else m * (self.hor.eta(1) * self.hor.eta(0))
        self.torsion = torsion
        self._base: dict = {0: self.hor.zero(), 1: self.rho_U}
        if validate:
            self.validate()
        self.germ = GermExtension(P.At, self.hor, lambda g: self.base(g[0]), self._zeta)

    def _zeta(self, i: int) -> Element:
        if self.torsion is None:
            return self.hor.zero()
        return -self.torsion(i)

    def validate(self):
        hor = self.hor
        x = self.rho_U
        if any(len(k[1]) != 2 for k in x.terms):
            raise InvariantViolation("curvature values must be horizontal 2-forms", str(x))
        for b in OMEGA_SAMPLES:
            y = hor.term((b, ()))
            if x * y != y * x:
                raise InvariantViolation("value does not commute with the base", hor.format_key((b, ())))
        for k in x.terms:
            for _, g, _ in hor.coaction_basis(k):
                if any(g):
                    raise InvariantViolation("value is not ad-covariant", hor.format_key(k))
        if self.torsion is not None:
            for i in range(self.P.spec.dim):
                t = self.torsion(i)
                target = {g for _, g, _ in self.P.spec.coaction[i]}
                for k in t.terms:
                    for _, g, _ in hor.coaction_basis(k):
                        if g not in target:
                            raise InvariantViolation("torsion is not covariant", f"v{i}: {hor.format_key(k)}")

    def base(self, n: int) -> Element:
        """``rho(U^n)`` by the germ recursion ``rho(U^n) = rho(U) o U^(n-1) + rho(U^(n-1))``."""
        r = self._base.get(n)
        if r is not None:
            return r
        if n > 0:
            r = self.hor.circ(self.rho_U, (n - 1,)) + self.base(n - 1)
        else:
            # rho(1) = rho(U^n U^-n) = 0 gives rho(U^n) = -rho(U^-n) o U^n
            r = -self.hor.circ(self.base(-n), (n,))
        self._base[n] = r
        return r

    def value(self, a: Element) -> Element:
        return self.germ.value(a)

    def value_basis(self, key) -> Element:
        return self.germ.value_basis(key)

    def value_closed(self, key) -> Element:
        return self.germ.value_closed(key)

    def sym_monomial(self, p: int, q: int) -> Element:
        At = self.P.At
        return At.xi ** p * At.xis ** q

    def affine(self, p: int, q: int) -> Element:
        """``rho(xi^p xi*^q)``."""
        return self.value(self.sym_monomial(p, q))

    def hP_sym(self, x: Element) -> Element:
        """``A~`` elements without ``U`` powers, viewed in ``h[P~]``."""
        out: dict = {}
        for (g, s), c in x.terms.items():
            add_to(out, (self.hor.one_key, s), c)
        return self.hP.element(out)

    def circ(self, x: Element, a: Element) -> Element:
        """Right ``A~``-module structure on values."""
        return self.germ.act(x, a)

    def sandwich(self, x: Element, n: int) -> Element:
        """``l(U^n) x r(U^n)`` computed by multiplication in ``h[P~]``."""
        out = self.hP.zero()
        for (l, r), c in self.P.translation_map_key((n,)).terms.items():
            L = self.hP.term(((l, ()), ()))
            R = self.hP.term(((r, ()), ()))
            out = out + c * (L * x * R)
        return out


def levi_civita(P: HopfFibration) -> Curvature:
    return Curvature(P)


def curvature_U(P: HopfFibration, n: int) -> Element:
    return levi_civita(P).base(n)


def w_element(P: HopfFibration) -> Element:
    hor = P.hor
    return w_coefficient() * (hor.eta(1) * hor.eta(0))


def closed_form(P: HopfFibration, p: int, q: int) -> Element:
    """``c_pq w (x) xi^p xi*^q`` (symbolic mu only)."""
    if not P.mu.symbolic:
        raise ValueError("the closed form has a pole at mu^2 = 1 and is asserted for symbolic mu only")
    rho = levi_civita(P)
    coeff = c_coefficient(p, q) * w_coefficient()
    w = coeff * (P.hor.eta(1) * P.hor.eta(0))
    return P.hP.embed_left(w) * rho.hP_sym(rho.sym_monomial(p, q))


def closed_form_specialized(P: HopfFibration, p: int, q: int) -> Element:
    """Evaluate the product ``c_pq * w`` symbolically first, then specialize."""
    sym_coeff = c_coefficient(p, q) * w_coefficient()
    val = sym_coeff.eval(P.mu.value) if P.mu.value is not None else sym_coeff
    rho = levi_civita(P)
    w = val * (P.hor.eta(1) * P.hor.eta(0))
    return P.hP.embed_left(w) * rho.hP_sym(rho.sym_monomial(p, q))


def affine_curvature(P: HopfFibration, p: int, q: int) -> Element:
    return levi_civita(P).affine(p, q)


def affine_curvature_general(P: HopfFibration, rho_U: Element | None = None,
                             torsion: Callable[[int], Element] | None = None) -> Curvature:
    """Affine extension of a curvature datum with translational part ``D lambda`` given by ``torsion``."""
    return Curvature(P, rho_U, torsion)


# ---------------------------------------------------------------------------
# the induced calculus

def _coords(x: Element) -> dict:
    return dict(x.terms)


def upsilon_levels(P: HopfFibration, N: int, rho: Curvature | None = None) -> dict:
    """Spans of ``rho[S^(k+1)] + rho(U^a) o S^k`` for ``k < N``, plus the cumulative span."""
    rho = rho or levi_civita(P)
    S = P.S
    levels = {}
    for k in range(N):
        vecs = [_coords(rho.value_basis(((0,), s))) for s in S.basis(k + 1)]
        for a in range(-N, N + 1):
            if a == 0:
                continue
            for s in S.basis(k):
                vecs.append(_coords(rho.value(P.At.U(a) * P.At.sym(S.term(s)) - P.At.sym(S.term(s)))))
        levels[k] = [v for v in vecs if v]
    return levels


def upsilon_basis_rank(P: HopfFibration, N: int, rho: Curvature | None = None) -> tuple[int, list]:
    """Rank of ``span{rho(U^a xi^p xi*^q) : |a| <= N, p+q <= N}`` and a basis listing."""
    rho = rho or levi_civita(P)
    eb = EchelonBasis()
    listing = []
    for d in range(N + 1):
        for p in range(d, -1, -1):
            q = d - p
            sym = rho.sym_monomial(p, q)
            for a in range(-N, N + 1):
                v = rho.value(P.At.U(a) * sym)
                if v and not eb.contains(v.terms):
                    eb.add(v.terms)
                    listing.append((a, p, q, v))
    return len(eb), listing


def upsilon_report(P: HopfFibration, N: int = 4) -> dict:
    rho = levi_civita(P)
    total, listing = upsilon_basis_rank(P, N, rho)
    levels = upsilon_levels(P, N, rho)
    dims = {k: rank(v) for k, v in levels.items()}
    inter = {}
    for k in levels:
        for l in levels:
            if l <= k:
                continue
            joint = rank(levels[k] + levels[l])
            inter[(k, l)] = dims[k] + dims[l] - joint
    # cyclicity of rho(U) under the S(V) action
    zeta = P.hP.embed_left(rho.base(1))
    cyc = [rho.circ(zeta, P.At.sym(P.S.term(s))).terms
           for d in range(N + 1) for s in P.S.basis(d)]
    cyclic_rank = rank([v for v in cyc if v])
    return {
        "total": total,
        "levels": dims,
        "intersections": inter,
        "cyclic_rank": cyclic_rank,
        "basis": [(a, p, q, str(v)) for a, p, q, v in listing],
    }


def gamma_calculus(P: HopfFibration, max_exponent: int = 6) -> dict:
    """Structure-group calculus induced by the Levi-Civita curvature."""
    rho = levi_civita(P)
    hor = P.hor
    base = rho.base(1)
    (bkey, bc), = base.terms.items()
    integers = {}
    checks = []
    for n in range(-max_exponent, max_exponent + 1):
        v = rho.base(n)
        c = v.terms.get(bkey, 0) / bc
        ok = v == c * base
        integers[n] = c
        checks.append(Check(f"rho(U^{n}) proportional to rho(U)", ok, "" if ok else str(v)))
    zeta = rho.base(1) - rho.base(-1)
    eig = hor.circ(zeta, (1,))
    m = P.mu.gen
    ok = eig == zeta * (1 / (m * m))
    checks.append(Check("zeta o U = mu^-2 zeta", ok, "" if ok else str(eig)))
    ideal = [f"U^{n} - ({_s(integers[n])})*U + ({_s(integers[n] - 1)})" for n in range(2, max_exponent + 1)]
    return {"zeta": str(zeta), "integers": integers, "ideal": ideal, "checks": checks,
            "dimension": 1 if all(c.ok for c in checks[:-1]) else None}


def _s(c) -> str:
    from .scalars import fmt
    return fmt(c)


# ---------------------------------------------------------------------------
# property checks

def curvature_checks(P: HopfFibration, rho: Curvature | None = None, max_sym_degree: int = 3) -> list[Check]:
    rho = rho or levi_civita(P)
    hor, hP, At, A = P.hor, P.hP, P.At, P.A
    checks = []
    m = P.mu.gen
    # closed forms on U^n
    v1 = rho.base(-1)
    expect = m * (hor.eta(0) * hor.eta(1))
    checks.append(Check("rho(U^-1) = mu e+ e-", v1 == expect, str(v1)))
    if P.mu.symbolic:
        for n in range(-6, 7):
            ok = rho.base(n) == quantum_integer(n) * rho.rho_U
            checks.append(Check(f"rho(U^{n}) closed form", ok, "" if ok else str(rho.base(n))))
    # values on A
    samples = [A.term((1,)) - A.one(), A.term((2,)) - A.one()]
    phis = {"a": hor.term((ALPHA, ())), "g": hor.term((GAMMA, ())), "e+": hor.eta(0)}
    HA = TensorAlgebra(hor, A)
    for a in samples:
        name = A.format(a)
        val = rho.value(At.embed_left(a))
        base_val = _hor_part(P, val)
        # F^ rho(a) = (rho (x) id) ad(a)
        lhs: dict = {}
        for k, c in base_val.terms.items():
            for kk, g, v in hor.coaction_basis(k):
                add_to(lhs, (kk, g), c * v)
        rhs: dict = {}
        for (k1, k2), c in A.adjoint(a).terms.items():
            for kk, v in _hor_part(P, rho.value(At.grouplike(k1))).terms.items():
                add_to(rhs, (kk, k2), c * v)
        ok = HA.element(lhs) == HA.element(rhs)
        checks.append(Check(f"F^ rho(a) = (rho (x) id) ad(a) [{name}]", ok))
        # rho(kappa(a)*) = -rho(a)*
        ka = A.star(A.antipode(a))
        ok = _hor_part(P, rho.value(At.embed_left(ka))) == -hor.star(base_val)
        checks.append(Check(f"rho(kappa(a)*) = -rho(a)* [{name}]", ok))
        for pn, phi in phis.items():
            (k,) = phi.terms
            (_, g, _), = hor.coaction_basis(k)
            shifted = a * A.term(g)
            rhs = phi * _hor_part(P, rho.value(At.embed_left(shifted)))
            ok = base_val * phi == rhs
            checks.append(Check(f"rho(a) phi = phi_k rho(a c_k) [{name}, {pn}]", ok))
    # values lie in the commutant
    for key in [((0,), ()), ((0,), (0,)), ((0,), (0, 1)), ((1,), (1,))]:
        val = rho.value_basis(key)
        ok = all(hP.term(((b, ()), ())) * val == val * hP.term(((b, ()), ())) for b in OMEGA_SAMPLES)
        checks.append(Check(f"value commutes with the base [{At.format_key(key)}]", ok))
    # module property via the translation-map sandwich
    xs = [At.U(1) - At.one(), At.U(-1) - At.one(), (At.U(1) - At.one()) * At.xi,
          (At.U(1) - At.one()) * At.xis, At.xi, At.xi * At.xis]
    for x in xs:
        for n in (1, -1):
            lhs = rho.value(x * At.U(n))
            ok = lhs == rho.circ(rho.value(x), At.U(n)) and lhs == rho.sandwich(rho.value(x), n)
            checks.append(Check(f"rho(x a) = rho(x) o a = l(a) rho(x) r(a) [{At.format(x)}, U^{n}]", ok))
    # the calculus module structure is carried by the intrinsic one on the commutant
    for x in (At.U(1) - At.one(), At.xi, At.xis, At.xi * At.xis):
        rx = rho.value(x)
        for i, a in enumerate((At.xi, At.xis)):
            closed = P.hP.sum(c * rho.germ.act_closed(rx, s) for (_, s), c in a.terms.items())
            ok = rho.value(x * a) == closed
            checks.append(Check(f"rho(x o a) = rho(x) o a, closed action [{At.format(x)}, {At.format(a)}]", ok))
    # two routes for the S(V) action
    for d in range(1, max_sym_degree + 1):
        for s in P.S.basis(d):
            for g in ((0,), (1,), (-1,)):
                key = (g, s)
                ok = rho.value_basis(key) == rho.value_closed(key)
                checks.append(Check(f"germ rule two routes [{At.format_key(key)}]", ok))
    # degree bound on filtration levels
    bad = ""
    for k, vecs in upsilon_levels(P, max_sym_degree, rho).items():
        for v in vecs:
            for (h, s) in v:
                if len(h[1]) != 2 or len(s) not in (k, k + 1):
                    bad = bad or f"level {k}: {hP.format_key((h, s))}"
    checks.append(Check("values on level k lie in hor^2 (x) (S^k + S^(k+1))", not bad, bad))
    return checks


def _hor_part(P: HopfFibration, x: Element) -> Element:
    out: dict = {}
    for (h, s), c in x.terms.items():
        if s:
            raise ValueError("value has translational part")
        add_to(out, h, c)
    return P.hor.element(out)


def curvature_law_checks(P: HopfFibration, max_total: int = 8) -> list[Check]:
    rho = levi_civita(P)
    checks = []
    for d in range(1, max_total + 1):
        for p in range(d + 1):
            q = d - p
            got = rho.affine(p, q)
            try:
                want = closed_form(P, p, q) if P.mu.symbolic else closed_form_specialized(P, p, q)
            except PoleError as e:
                checks.append(Check(f"rho(xi^{p} xi*^{q}) closed form", False, str(e)))
                continue
            ok = got == want
            checks.append(Check(f"rho(xi^{p} xi*^{q}) = c_{p}{q} w (x) xi^{p} xi*^{q}", ok, "" if ok else str(got)))
    return checks


# ---------------------------------------------------------------------------
# frames and translatons

@dataclass
class LambdaMap:
    """Values of ``lambda: V -> hor`` on the basis of ``V``."""

    values: list
    name: str = "lambda"


def frame_lambda(P: HopfFibration, scale=1) -> LambdaMap:
    return LambdaMap([scale * P.hor.eta(i) for i in range(P.spec.dim)], "frame")


def zero_lambda(P: HopfFibration) -> LambdaMap:
    return LambdaMap([P.hor.zero() for _ in range(P.spec.dim)], "zero")


def lambda_invariant_checks(P: HopfFibration, lam: LambdaMap) -> list[Check]:
    hor, spec = P.hor, P.spec
    checks = []
    ok = True
    for i, v in enumerate(lam.values):
        target = {g for _, g, _ in spec.coaction[i]}
        for k in v.terms:
            if any(g not in target for _, g, _ in hor.coaction_basis(k)):
                ok = False
    checks.append(Check("F^ lambda = (lambda (x) id) kappa", ok))
    samples = [ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR]
    ok = True
    for i, v in enumerate(lam.values):
        for b in samples:
            bb = hor.term((b, ()))
            moved = spec.circ_vec(i, (weight(b),))
            rhs = bb * hor.sum(c * lam.values[j] for j, c in moved.items())
            if v * bb != rhs:
                ok = False
    checks.append(Check("lambda(theta) b = b_k lambda(theta o d_k)", ok))
    ok = True
    n = spec.dim
    for i in range(n):
        for j in range(n):
            lhs = -(lam.values[i] * lam.values[j])
            rhs = hor.zero()
            for k, g, c in spec.coaction[j]:
                moved = spec.circ_vec(i, g)
                rhs = rhs + c * hor.sum(d * (lam.values[k] * lam.values[l]) for l, d in moved.items())
            if lhs != rhs:
                ok = False
    checks.append(Check("-lambda(eta) lambda(theta) = lambda(theta_k) lambda(eta o c_k)", ok))
    return checks


def check_lambda_regular(P: HopfFibration, lam: LambdaMap, max_degree: int = 4) -> dict:
    """Rank of ``h_lambda: B (x) V^ -> hor`` on each (B-degree, form-degree) block."""
    hor, E = P.hor, P.E
    report = {"degrees": {}, "invariants": lambda_invariant_checks(P, lam)}
    for d in range(max_degree + 1):
        bmons = [k for k in P.B.monomials(d) if abs(k[0]) + k[1] + k[2] == d]
        for f in range(P.spec.dim + 1):
            ebasis = E.basis(f)
            images = []
            for b in bmons:
                for e in ebasis:
                    img = hor.term((b, ()))
                    for i in e:
                        img = img * lam.values[i]
                    images.append(img.terms)
            dim = len(bmons) * len(ebasis)
            r = rank([v for v in images if v])
            report["degrees"][(d, f)] = {"rank": r, "dim": dim, "injective": r == dim, "surjective": r == dim}
    report["bijective"] = all(v["injective"] for v in report["degrees"].values())
    return report


@dataclass
class TranslatonCandidate:
    """Values ``xi(v_i)`` in ``B~``."""

    values: list
    name: str = "candidate"
    extra: dict = field(default_factory=dict)


def canonical_translaton(P: HopfFibration) -> TranslatonCandidate:
    return TranslatonCandidate([P.sym(P.S.gen(i)) for i in range(P.spec.dim)], "canonical")


def mutated_translaton(P: HopfFibration, kind: str, delta=1) -> TranslatonCandidate:
    """Deformations of the canonical inclusion used as negative controls.

    ``weight`` adds ``delta * gamma`` to ``xi(e+)`` (wrong weight); ``regular``
    adds ``delta * gamma^2`` and its conjugate, which keeps the coaction law.
    """
    c = canonical_translaton(P)
    vals = list(c.values)
    m = P.mu.gen
    if kind == "weight":
        vals[0] = vals[0] + delta * P.b(GAMMA)
        vals[1] = vals[1] + (delta / m) * P.b(GAMMA_STAR)
    elif kind == "regular":
        vals[0] = vals[0] + delta * P.b((0, 2, 0))
        vals[1] = vals[1] + (delta / m) * P.b((0, 0, 2))
    else:
        raise ValueError(kind)
    return TranslatonCandidate(vals, f"mutated-{kind}")


def _xi_of(P: HopfFibration, cand: TranslatonCandidate, vec: dict) -> Element:
    return P.Bt.sum(c * cand.values[j] for j, c in vec.items())


def ell_xi(P: HopfFibration, cand: TranslatonCandidate, i: int, phi_key) -> Element:
    """``xi(theta) phi - sum phi_j xi(theta o d_j)``."""
    phi = P.b(phi_key)
    moved = P.spec.circ_vec(i, (weight(phi_key),))
    return cand.values[i] * phi - phi * _xi_of(P, cand, moved)


def verify_translaton(P: HopfFibration, cand: TranslatonCandidate) -> list[Check]:
    spec, Bt, At = P.spec, P.Bt, P.At
    n = spec.dim
    checks = []
    # hermitian
    bad = ""
    for i in range(n):
        lhs = _xi_of(P, cand, spec.star_vec(i))
        if lhs != Bt.star(cand.values[i]):
            bad = bad or spec.labels[i]
    checks.append(Check("hermitian", not bad, bad))
    # coaction law
    bad = ""
    for i in range(n):
        lhs = P.H(cand.values[i])
        rhs = P.BtAt.tensor(Bt.one(), At.v(i))
        for j, g, c in spec.coaction[i]:
            rhs = rhs + c * P.BtAt.tensor(cand.values[j], At.grouplike(g))
        if lhs != rhs:
            bad = bad or f"{spec.labels[i]}: {lhs - rhs}"
    checks.append(Check("coaction law", not bad, bad))
    # regularity and identities of ell
    samples = [ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, (0, 1, 1)]
    bad = ""
    cov_bad = ""
    star_bad = ""
    for i in range(n):
        for k in samples:
            ell = ell_xi(P, cand, i, k)
            if ell:
                bad = bad or f"ell({spec.labels[i]}, {P.B.format_key(k)}) = {ell}"
            # covariance: H ell(theta, phi) = sum ell(theta_k, phi) (x) c_k d
            rhs = P.BtAt.zero()
            for j, g, c in spec.coaction[i]:
                gg = tuple(x + weight(k) for x in g) if len(g) == 1 else g
                rhs = rhs + c * P.BtAt.tensor(ell_xi(P, cand, j, k), At.grouplike(gg))
            if P.H(ell) != rhs:
                cov_bad = cov_bad or f"{spec.labels[i]}, {P.B.format_key(k)}"
            # star: ell(theta, phi)* = -ell(theta* o kappa(d)*, phi*)
            sk = P.B.star_basis(k)
            (skey, sc), = sk.items()
            tstar: dict = {}
            for j0, c0 in spec.star_vec(i).items():
                axpy(tstar, c0, spec.circ_vec(j0, (weight(k),)))
            rhs = Bt.zero()
            for j, c in tstar.items():
                rhs = rhs - (c * sc) * ell_xi(P, cand, j, skey)
            if Bt.star(ell) != rhs:
                star_bad = star_bad or f"{spec.labels[i]}, {P.B.format_key(k)}"
    checks.append(Check("regular (ell = 0 on samples)", not bad, bad))
    checks.append(Check("ell covariance", not cov_bad, cov_bad))
    checks.append(Check("ell star identity", not star_bad, star_bad))
    # multiplicativity
    bad = ""
    for v in P.S.kernel(2).kernel:
        val = Bt.zero()
        for mono, c in v.items():
            val = val + c * Bt.prod(cand.values[j] for j in mono)
        if val:
            bad = bad or str(val)
    checks.append(Check("multiplicative (kernel of Y2 annihilated)", not bad, bad))
    # filtration level 0 is B
    ok = True
    for k in P.B.monomials(2):
        for (_, a), _ in P.H_basis((k, ())).terms.items():
            if a[1]:
                ok = False
    checks.append(Check("filtration: C_0 = B", ok))
    return checks
