"""Group algebra of a free abelian group Z^r with its Hopf *-structure.

Basis keys are exponent tuples ``(n_1, ..., n_r)``; the key ``(n,)`` stands
for ``U^n`` in the rank-one case used by the Hopf fibration.  All basis
elements are grouplike: coproduct ``g -> g (x) g``, counit 1, antipode and
star both ``g -> g^-1``, and the adjoint coaction is ``g -> g (x) 1``.
"""

from __future__ import annotations

from itertools import product

from .algebra import Algebra, Element, TensorAlgebra
from .scalars import Mu

Grouplike = tuple


class BaseHopf(Algebra):
    name = "A"

    def __init__(self, mu: Mu, rank: int = 1):
        super().__init__(mu)
        self.rank = rank
        self.one_key = (0,) * rank
        self._tensor2 = None

    # group operations on keys
    def gmul(self, g: Grouplike, h: Grouplike) -> Grouplike:
        return tuple(a + b for a, b in zip(g, h))

    def ginv(self, g: Grouplike) -> Grouplike:
        return tuple(-a for a in g)

    def gen(self, i: int = 0, power: int = 1) -> Element:
        g = [0] * self.rank
        g[i] = power
        return self.term(tuple(g))

    def mul_basis(self, k1, k2) -> dict:
        return {self.gmul(k1, k2): 1}

    def coaction_basis(self, key):
        return [(key, key, 1)]

    # Hopf structure
    @property
    def tensor2(self) -> TensorAlgebra:
        if self._tensor2 is None:
            self._tensor2 = TensorAlgebra(self, self)
        return self._tensor2

    def coproduct(self, x: Element) -> Element:
        return self.tensor2.element({(k, k): c for k, c in x.terms.items()})

    def counit(self, x: Element):
        return sum(x.terms.values(), 0)

    def antipode(self, x: Element) -> Element:
        return self.element({self.ginv(k): c for k, c in x.terms.items()})

    def star(self, x: Element) -> Element:
        return self.element({self.ginv(k): c for k, c in x.terms.items()})

    def adjoint(self, x: Element) -> Element:
        """Right adjoint coaction ``ad(g) = g (x) 1`` for commutative ``A``."""
        one = self.one_key
        return self.tensor2.element({(k, one): c for k, c in x.terms.items()})

    def format_key(self, key) -> str:
        if all(a == 0 for a in key):
            return "1"
        names = ["U"] if self.rank == 1 else [f"U{i + 1}" for i in range(self.rank)]
        parts = []
        for n, a in zip(names, key):
            if a == 1:
                parts.append(n)
            elif a:
                parts.append(f"{n}^{a}" if a > 0 else f"{n}^({a})")
        return "*".join(parts)

    def sort_key(self, key):
        return key

    def box(self, radius: int) -> list[Grouplike]:
        """All exponent vectors with max-norm at most ``radius``."""
        return [tuple(v) for v in product(range(-radius, radius + 1), repeat=self.rank)]


def verify_base(A: BaseHopf, radius: int = 2) -> list[tuple[str, bool, str]]:
    """Check the Hopf *-algebra axioms on grouplikes in a box."""
    results = []
    for g in A.box(radius):
        x = A.term(g)
        T = A.tensor2
        cop = A.coproduct(x)
        coass = TensorAlgebra(A, A, A).element({(a, b, b): c for (a, b), c in cop.terms.items()}) == \
            TensorAlgebra(A, A, A).element({(a, a, b): c for (a, b), c in cop.terms.items()})
        counit = all(A.counit(A.term(k[0])) * A.term(k[1]) == A.term(k[1]) for k in cop.terms)
        anti = A.sum(A.antipode(A.term(a)) * A.term(b) * c for (a, b), c in cop.terms.items()) \
            == A.scalar(A.counit(x))
        star_inv = A.star(A.antipode(A.star(A.antipode(x)))) == x
        star_cop = T.apply(cop, lambda k: A.star(A.term(k)), lambda k: A.star(A.term(k))) \
            == A.coproduct(A.star(x))
        name = A.format_key(g)
        results += [
            (f"coassociativity[{name}]", coass, name),
            (f"counit[{name}]", counit, name),
            (f"antipode[{name}]", anti, name),
            (f"star-antipode-involution[{name}]", star_inv, name),
            (f"star-coproduct[{name}]", star_cop, name),
        ]
    return results
