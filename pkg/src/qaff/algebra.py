"""Generic finite-support algebra elements, tensor products and cross products.

Every concrete algebra in the package is an :class:`Algebra` whose basis is
indexed by hashable keys and which implements ``mul_basis``.  Elements are
immutable :class:`Element` wrappers around a coefficient dict.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .linalg import add_to, axpy
from .scalars import Mu, Scalar, fmt

_SCALAR_TYPES = (int, Fraction, Scalar)


def is_scalar(x) -> bool:
    return isinstance(x, _SCALAR_TYPES)


class Element:
    """Linear combination of basis keys of ``parent``."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: "Algebra", terms: dict):
        self.parent = parent
        self.terms = terms

    def __add__(self, other):
        if is_scalar(other):
            other = self.parent.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self.terms)
        axpy(out, 1, other.terms)
        return Element(self.parent, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.parent, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if is_scalar(other):
            other = self.parent.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self.terms)
        axpy(out, -1, other.terms)
        return Element(self.parent, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.parent.mul(self, other)
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            c = Fraction(1, other) if isinstance(other, int) else 1 / other
            return self.scale(c)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for grouplikes")
        out = self.parent.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        if not c:
            return Element(self.parent, {})
        return Element(self.parent, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if is_scalar(other):
            other = self.parent.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def support(self) -> list:
        return list(self.terms)

    def map(self, f: Callable) -> "Element":
        """Apply a linear map given on basis keys (returning Elements)."""
        return self.parent.linear(self, f)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return self.parent.format(self)

    def __repr__(self):
        return str(self)


class Algebra:
    """Base class: subclasses define ``mul_basis`` and ``one_key``."""

    one_key = None
    name = "algebra"

    def __init__(self, mu: Mu):
        self.mu = mu
        self._mul_cache: dict = {}

    # construction
    def element(self, terms: dict) -> Element:
        return Element(self, {k: v for k, v in terms.items() if v})

    def term(self, key, c=1) -> Element:
        return Element(self, {key: c} if c else {})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return self.term(self.one_key)

    def scalar(self, c) -> Element:
        return self.term(self.one_key, c)

    def sum(self, items: Iterable[Element]) -> Element:
        out: dict = {}
        for x in items:
            axpy(out, 1, x.terms)
        return Element(self, out)

    # structure
    def mul_basis(self, k1, k2) -> dict:
        raise NotImplementedError

    def _mulb(self, k1, k2) -> dict:
        key = (k1, k2)
        r = self._mul_cache.get(key)
        if r is None:
            r = self.mul_basis(k1, k2)
            self._mul_cache[key] = r
        return r

    def mul(self, x: Element, y: Element) -> Element:
        out: dict = {}
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                c = c1 * c2
                for k, v in self._mulb(k1, k2).items():
                    add_to(out, k, c * v)
        return Element(self, out)

    def prod(self, items: Iterable[Element]) -> Element:
        out = self.one()
        for x in items:
            out = out * x
        return out

    def linear(self, x: Element, f: Callable, target: "Algebra | None" = None) -> Element:
        """Extend ``f: key -> Element`` linearly."""
        target = target or self
        out: dict = {}
        for k, c in x.terms.items():
            axpy(out, c, f(k).terms)
        return Element(target, out)

    # printing
    def format_key(self, key) -> str:
        return str(key)

    def format(self, x: Element) -> str:
        if not x.terms:
            return "0"
        parts = []
        for k in sorted(x.terms, key=self.sort_key):
            c = x.terms[k] * self.key_scale(k)
            ks = self.format_key(k)
            cs = fmt(c)
            if ks == "1":
                parts.append(cs if len(cs.split("+")) == 1 and "-" not in cs[1:] else f"({cs})")
            elif c == 1:
                parts.append(ks)
            elif c == -1:
                parts.append("-" + ks)
            else:
                cs = cs if _atomic(cs) else f"({cs})"
                parts.append(f"{cs}*{ks}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def sort_key(self, key):
        return repr(key)

    def key_scale(self, key):
        """Factor absorbed into the coefficient when ``key`` is displayed."""
        return 1


def _atomic(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return not any(ch in body for ch in "+-/")


class TensorAlgebra(Algebra):
    """Tensor product of algebras with factorwise (unbraided) product."""

    def __init__(self, *factors: Algebra):
        super().__init__(factors[0].mu)
        self.factors = factors
        self.one_key = tuple(f.one_key for f in factors)
        self.name = "(x)".join(f.name for f in factors)

    def mul_basis(self, k1, k2) -> dict:
        out = {(): 1}
        for f, a, b in zip(self.factors, k1, k2):
            prod = f._mulb(a, b)
            nxt = {}
            for key, c in out.items():
                for k, v in prod.items():
                    add_to(nxt, key + (k,), c * v)
            out = nxt
        return out

    def tensor(self, *elems: Element) -> Element:
        out = {(): 1}
        for e in elems:
            nxt = {}
            for key, c in out.items():
                for k, v in e.terms.items():
                    add_to(nxt, key + (k,), c * v)
            out = nxt
        return Element(self, out)

    def apply(self, x: Element, *maps) -> Element:
        """Apply one linear map per factor (``None`` means identity)."""
        out: dict = {}
        cache = [dict() for _ in maps]
        for key, c in x.terms.items():
            acc = {(): c}
            for i, (m, k) in enumerate(zip(maps, key)):
                if m is None:
                    img = {k: 1}
                else:
                    img = cache[i].get(k)
                    if img is None:
                        img = m(k).terms
                        cache[i][k] = img
                nxt = {}
                for kk, cc in acc.items():
                    for k2, v in img.items():
                        add_to(nxt, kk + (k2,), cc * v)
                acc = nxt
            axpy(out, 1, acc)
        return Element(self, out)

    def format_key(self, key) -> str:
        return " (x) ".join(f.format_key(k) for f, k in zip(self.factors, key))

    def key_scale(self, key):
        c = 1
        for f, k in zip(self.factors, key):
            c = c * f.key_scale(k)
        return c

    def sort_key(self, key):
        return tuple(f.sort_key(k) for f, k in zip(self.factors, key))


class CrossProduct(Algebra):
    """Cross product ``L # R`` of a right comodule algebra and a module algebra.

    Basis keys are pairs ``(l, r)``.  The product is
    ``(l1 # r1)(l2 # r2) = sum l1 l2_k # (r1 o c_k) r2`` where
    ``l2 -> sum l2_k (x) c_k`` is the coaction of ``L`` (grouplike values) and
    ``o`` is the right action on ``R``.  ``R`` must be even (degree-zero
    braiding signs never arise because ``L`` is passed on the left).
    """

    def __init__(self, left: Algebra, right: Algebra, name: str = ""):
        super().__init__(left.mu)
        self.left = left
        self.right = right
        self.one_key = (left.one_key, right.one_key)
        self.name = name or f"{left.name}#{right.name}"

    def mul_basis(self, k1, k2) -> dict:
        l1, r1 = k1
        l2, r2 = k2
        out: dict = {}
        for l2k, g, c in self.left.coaction_basis(l2):
            lp = self.left._mulb(l1, l2k)
            moved = self.right.circ_basis(r1, g)
            for rk, rc in moved.items():
                rp = self.right._mulb(rk, r2)
                for a, ca in lp.items():
                    for b, cb in rp.items():
                        add_to(out, (a, b), c * rc * ca * cb)
        return out

    def pair(self, l: Element, r: Element) -> Element:
        out: dict = {}
        for a, ca in l.terms.items():
            for b, cb in r.terms.items():
                add_to(out, (a, b), ca * cb)
        return Element(self, out)

    def embed_left(self, l: Element) -> Element:
        return self.pair(l, self.right.one())

    def embed_right(self, r: Element) -> Element:
        return self.pair(self.left.one(), r)

    def star_basis(self, key) -> Element:
        l, r = key
        return self.embed_right(self.right.star(self.right.term(r))) * \
            self.embed_left(self.left.star(self.left.term(l)))

    def star(self, x: Element) -> Element:
        out: dict = {}
        for k, c in x.terms.items():
            axpy(out, _conj(c), self.star_basis(k).terms)
        return Element(self, out)

    def coaction_basis(self, key):
        """Grouplike coaction of the left factor times the right degree weight."""
        l, r = key
        out = []
        for lk, g, c in self.left.coaction_basis(l):
            for rk, h, d in self.right.coaction_basis(r):
                out.append(((lk, rk), tuple(a + b for a, b in zip(g, h)), c * d))
        return out

    def circ_basis(self, key, g) -> dict:
        raise NotImplementedError("right action on a cross product is context dependent")

    def format_key(self, key) -> str:
        l, r = key
        ls = self.left.format_key(l)
        rs = self.right.format_key(r)
        if ls == "1":
            return rs
        if rs == "1":
            return ls
        return f"{ls}*{rs}"

    def sort_key(self, key):
        return (self.right.sort_key(key[1]), self.left.sort_key(key[0]))

    def key_scale(self, key):
        return self.left.key_scale(key[0]) * self.right.key_scale(key[1])


def _conj(c):
    # mu is real, so conjugation is trivial on Q(mu)
    return c
