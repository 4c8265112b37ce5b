"""Braided symmetric algebra S(V) and braided exterior algebra V^.

``S(V)`` is the tensor algebra modulo the kernels of the total braided
symmetrizers, degree by degree; ``V^`` is the tensor algebra modulo the
ideal generated by the image of ``1 + tau`` in degree two.  Both are stored
in normal form: a basis element is a representative monomial (a tuple of
indices into ``V``) and any tensor is reduced onto representatives.
"""

from __future__ import annotations

from .algebra import Algebra, Element
from .braiding import (BimoduleSpec, Check, KernelData, Symmetrizers, apply_tau,
                       ideal_dimension, kernel_Y, monomials, reversal)
from .linalg import add_to, axpy, rank, rref

DEFAULT_TRUNCATION = 6


class TruncationExceeded(ValueError):
    """A computation needed a degree beyond the configured truncation."""


class _GradedQuotient(Algebra):
    """Shared machinery for quotients of the tensor algebra of ``V``."""

    sign_graded = False

    def __init__(self, spec: BimoduleSpec, truncation: int = DEFAULT_TRUNCATION):
        super().__init__(spec.mu)
        self.spec = spec
        self.truncation = truncation
        self.one_key = ()
        self._deg: dict[int, tuple[list, dict]] = {}
        self._circ_cache: dict = {}
        self._coact_cache: dict = {}

    # to be provided: _compute_degree(n) -> (reps, reduction of every monomial)
    def _degree(self, n: int):
        if n not in self._deg:
            if n > self.truncation:
                raise TruncationExceeded(f"degree {n} exceeds truncation {self.truncation}")
            self._deg[n] = self._compute_degree(n)
        return self._deg[n]

    def basis(self, n: int) -> list[tuple]:
        return list(self._degree(n)[0])

    def dimension(self, n: int) -> int:
        return len(self._degree(n)[0])

    def dimensions(self, max_degree: int) -> list[int]:
        return [self.dimension(n) for n in range(max_degree + 1)]

    def reduce_monomial(self, mono: tuple) -> dict:
        return self._degree(len(mono))[1][mono]

    def reduce(self, t: dict) -> Element:
        out: dict = {}
        for mono, c in t.items():
            axpy(out, c, self.reduce_monomial(mono))
        return Element(self, out)

    def mul_basis(self, k1, k2) -> dict:
        return self.reduce_monomial(k1 + k2)

    def gen(self, i: int) -> Element:
        return self.reduce({(i,): 1})

    # module / comodule structure on basis keys -------------------------
    def circ_basis(self, key, g) -> dict:
        """``key o U^g`` as a dict of representatives."""
        g = tuple(g)
        ck = (key, g)
        r = self._circ_cache.get(ck)
        if r is None:
            r = self.reduce(self.spec.circ({key: 1}, g)).terms
            self._circ_cache[ck] = r
        return r

    def circ(self, x: Element, g) -> Element:
        out: dict = {}
        for k, c in x.terms.items():
            axpy(out, c, self.circ_basis(k, g))
        return Element(self, out)

    def coaction_full(self, key) -> dict:
        """``{(rep, g): c}``: the coaction of a representative."""
        r = self._coact_cache.get(key)
        if r is None:
            r = {}
            for (m, g), c in self.spec.coaction_tensor({key: 1}).items():
                for rep, v in self.reduce_monomial(m).items():
                    add_to(r, (rep, g), c * v)
            self._coact_cache[key] = r
        return r

    def coaction_basis(self, key):
        return [(k, g, c) for (k, g), c in self.coaction_full(key).items()]

    def coaction(self, x: Element) -> dict:
        out: dict = {}
        for k, c in x.terms.items():
            axpy(out, c, self.coaction_full(k))
        return out

    def star_basis(self, key) -> dict:
        t = self.spec.star_tensor({key: 1})
        if self.sign_graded:
            n = len(key)
            if (n * (n - 1) // 2) % 2:
                t = {k: -v for k, v in t.items()}
        return self.reduce(t).terms

    def star(self, x: Element) -> Element:
        out: dict = {}
        for k, c in x.terms.items():
            axpy(out, c, self.star_basis(k))
        return Element(self, out)

    def degree_of(self, key) -> int:
        return len(key)

    @property
    def labels(self) -> tuple:
        return self.spec.labels

    def format_key(self, key) -> str:
        if not key:
            return "1"
        labels = self.labels
        parts = []
        i = 0
        while i < len(key):
            j = i
            while j < len(key) and key[j] == key[i]:
                j += 1
            n = j - i
            parts.append(labels[key[i]] if n == 1 else f"{labels[key[i]]}^{n}")
            i = j
        return "*".join(parts)

    def sort_key(self, key):
        return (len(key), key)


class SymmetricAlgebra(_GradedQuotient):
    """Braided symmetric algebra ``S(V) = T(V) / ker Y``.

    ``reversal_lift`` selects the braid lift used for the reversal
    ``I``: ``"tau"`` (the lift of the longest permutation) or
    ``"tau_inverse"`` (the same word in inverse letters).
    """

    name = "S(V)"

    @property
    def labels(self) -> tuple:
        return self.spec.sym_labels or self.spec.labels

    def key_scale(self, key):
        if not self.spec.sym_scale:
            return 1
        c = 1
        for i in key:
            c = c * self.spec.sym_scale[i]
        return c

    def __init__(self, spec: BimoduleSpec, truncation: int = DEFAULT_TRUNCATION,
                 reversal_lift: str = "tau"):
        super().__init__(spec, truncation)
        self.symmetrizers = Symmetrizers(spec)
        self.kernels: dict[int, KernelData] = {}
        self.reversal_lift = reversal_lift
        self._rev_cache: dict = {}

    def _compute_degree(self, n: int):
        if n == 0:
            return [()], {(): {(): 1}}
        K = kernel_Y(self.spec, n, self.symmetrizers(n))
        self.kernels[n] = K
        return K.reps, K.reduction

    def kernel(self, n: int) -> KernelData:
        self._degree(n)
        if n == 0:
            return KernelData(0, [()], {(): {(): 1}}, [])
        return self.kernels[n]

    def reversal_basis(self, key) -> dict:
        r = self._rev_cache.get(key)
        if r is None:
            op = reversal(self.spec, len(key), inverse=self.reversal_lift == "tau_inverse")
            r = self.reduce(op.col(key)).terms
            self._rev_cache[key] = r
        return r

    def reversal(self, x: Element) -> Element:
        """The reversal ``I``, well defined on ``S(V)``."""
        out: dict = {}
        for k, c in x.terms.items():
            axpy(out, c, self.reversal_basis(k))
        return Element(self, out)

    def reversal_tensor(self, t: dict) -> Element:
        """``I`` applied to a tensor representative, then reduced."""
        out: dict = {}
        for m, c in t.items():
            op = reversal(self.spec, len(m), inverse=self.reversal_lift == "tau_inverse")
            axpy(out, c, self.reduce(op.col(m)).terms)
        return Element(self, out)


class ExteriorAlgebra(_GradedQuotient):
    """Braided exterior algebra ``V^ = T(V) / <im(1 + tau)>``."""

    name = "V^"
    sign_graded = True

    def __init__(self, spec: BimoduleSpec, truncation: int | None = None):
        super().__init__(spec, truncation if truncation is not None else spec.dim + 2)
        self._relations = None

    def quadratic_relations(self) -> list[dict]:
        if self._relations is None:
            rels = []
            for m in monomials(self.spec.dim, 2):
                v = {m: 1}
                axpy(v, 1, apply_tau(self.spec, {m: 1}, 0))
                rels.append(v)
            self._relations = [r for _, r in rref(rels, _desc(self.spec.dim, 2))]
        return self._relations

    def _compute_degree(self, n: int):
        order = _desc(self.spec.dim, n)
        if n < 2:
            return [m for m in reversed(order)], {m: {m: 1} for m in order}
        if n > 2 and self.dimension(n - 1) == 0:
            return [], {m: {} for m in order}
        vecs = []
        for i in range(n - 1):
            for left in monomials(self.spec.dim, i):
                for right in monomials(self.spec.dim, n - 2 - i):
                    for g in self.quadratic_relations():
                        vecs.append({left + k + right: c for k, c in g.items()})
        ech = rref(vecs, order)
        pivots = {p: row for p, row in ech}
        reps = sorted(m for m in order if m not in pivots)
        red = {}
        for m in order:
            if m in pivots:
                red[m] = {k: -c for k, c in pivots[m].items() if k != m}
            else:
                red[m] = {m: 1}
        return reps, red

    def degree_of(self, key) -> int:
        return len(key)


def _desc(d: int, n: int) -> list[tuple]:
    """Monomials in lex-descending order (largest pivot first)."""
    return list(reversed(monomials(d, n)))


# checks ---------------------------------------------------------------------

def quadratic_generation(S: SymmetricAlgebra, max_degree: int) -> list[Check]:
    """Compare ``ker Y_n`` with the ideal generated by ``ker Y_2``."""
    gens = S.kernel(2).kernel
    out = []
    for n in range(3, max_degree + 1):
        d_ker = len(S.kernel(n).kernel)
        d_ideal = ideal_dimension(S.spec, gens, n)
        out.append(Check(f"quadratic-generation[deg {n}]", d_ker == d_ideal,
                         f"dim ker={d_ker}, dim ideal={d_ideal}", (d_ker, d_ideal)))
    return out


def kernel_stability(S: SymmetricAlgebra, max_degree: int) -> list[Check]:
    """``ker Y_n`` is stable under coaction (first leg), action and star."""
    spec = S.spec
    out = []
    for n in range(2, max_degree + 1):
        Y = S.symmetrizers(n)
        bad = []
        for v in S.kernel(n).kernel:
            by_g: dict = {}
            for (m, g), c in spec.coaction_tensor(v).items():
                by_g.setdefault(g, {})[m] = c
            images = list(by_g.values())
            images.append(spec.circ(v, (1,) * spec.rank))
            images.append(spec.circ(v, (-1,) * spec.rank))
            images.append(spec.star_tensor(v))
            for w in images:
                if Y.apply(w):
                    bad.append(spec.label(max(v)))
                    break
        out.append(Check(f"kernel-stable[deg {n}]", not bad, ",".join(bad)))
    return out


def image_kernel_complement(S: SymmetricAlgebra, max_degree: int) -> list[Check]:
    """``im Y_n + ker Y_n`` is direct and fills ``V^{(x)n}``."""
    spec = S.spec
    out = []
    for n in range(1, max_degree + 1):
        Y = S.symmetrizers(n)
        basis = monomials(spec.dim, n)
        vecs = [Y.col(m) for m in basis] + list(S.kernel(n).kernel)
        r = rank(vecs)
        out.append(Check(f"im-ker-complement[deg {n}]", r == len(basis), f"rank {r} of {len(basis)}"))
    return out


def reversal_involution(S: SymmetricAlgebra, max_degree: int) -> list[Check]:
    """``I`` is involutive on ``S(V)`` exactly when ``tau_{w0}^2`` descends to the identity."""
    out = []
    for n in range(2, max_degree + 1):
        invol = all(S.reversal(S.reversal(S.term(k))) == S.term(k) for k in S.basis(n))
        op = reversal(S.spec, n, inverse=S.reversal_lift == "tau_inverse")
        sq_id = all(S.reduce(op.apply(op.col(m))) == S.reduce({m: 1}) for m in monomials(S.spec.dim, n))
        out.append(Check(f"reversal-involution[deg {n}]", invol == sq_id,
                         f"involutive={invol}, lift squared trivial={sq_id}", invol))
    return out


def compatibility(S: _GradedQuotient, max_degree: int) -> list[Check]:
    """Module/comodule/star compatibilities on representatives up to ``max_degree``."""
    spec = S.spec
    gens = [(1,) * spec.rank, (-1,) * spec.rank]
    bad = {"coaction-action": [], "coaction-star": [], "action-star": [], "star-involutive": []}
    for n in range(max_degree + 1):
        for k in S.basis(n):
            x = S.term(k)
            for g in gens:
                lhs = S.coaction(S.circ(x, g))
                rhs: dict = {}
                for (rep, h), c in S.coaction_full(k).items():
                    for r2, v in S.circ_basis(rep, g).items():
                        add_to(rhs, (r2, h), c * v)
                if lhs != rhs:
                    bad["coaction-action"].append(S.format_key(k))
                if S.star(S.circ(x, g)) != S.circ(S.star(x), g):
                    bad["action-star"].append(S.format_key(k))
            lhs = S.coaction(S.star(x))
            rhs = {}
            for (rep, h), c in S.coaction_full(k).items():
                for r2, v in S.star_basis(rep).items():
                    add_to(rhs, (r2, tuple(-a for a in h)), c * v)
            if lhs != rhs:
                bad["coaction-star"].append(S.format_key(k))
            if S.star(S.star(x)) != x:
                bad["star-involutive"].append(S.format_key(k))
    return [Check(f"{S.name}:{name}", not w, ",".join(w)) for name, w in bad.items()]


def star_antimultiplicative(S: _GradedQuotient, max_degree: int) -> Check:
    """``(xy)^* = (+-) y^* x^*`` with the graded sign on ``V^``."""
    bad = []
    for p in range(max_degree + 1):
        for q in range(max_degree + 1 - p):
            for a in S.basis(p):
                for b in S.basis(q):
                    x, y = S.term(a), S.term(b)
                    sign = -1 if (S.sign_graded and p * q % 2) else 1
                    if S.star(x * y) != sign * (S.star(y) * S.star(x)):
                        bad.append(f"{S.format_key(a)}|{S.format_key(b)}")
    return Check(f"{S.name}:star-antimultiplicative", not bad, ",".join(bad[:3]))


def ideal_property(S: SymmetricAlgebra, max_degree: int = 5) -> list[Check]:
    """``v (x) w`` and ``w (x) v`` lie in ``ker Y`` for ``v`` in ``ker Y_n``."""
    spec = S.spec
    out = []
    for n in range(2, max_degree):
        bad = ""
        for m in range(1, max_degree - n + 1):
            Y = S.symmetrizers(n + m)
            for v in S.kernel(n).kernel:
                for w in monomials(spec.dim, m):
                    left = {k + w: c for k, c in v.items()}
                    right = {w + k: c for k, c in v.items()}
                    if Y.apply(left) or Y.apply(right):
                        bad = bad or f"{spec.label(max(v))} with {spec.label(w)}"
        out.append(Check(f"ideal-property[ker Y_{n}]", not bad, bad))
    return out
