"""Exact scalars: the rational function field Q(mu) and its specializations.

Symbolic scalars are kept as ``num/den`` with ``num, den`` integer
polynomials (python-flint ``fmpz_poly``), reduced by their full gcd
(content included) and with a positive leading coefficient in the
denominator.  This representation is canonical, so equality is structural.

All engine code is written against a :class:`Mu` context which supplies
the deformation parameter and coerces constants.  In symbolic mode field
elements are :class:`Scalar`; with ``mu = p/q`` they are plain
:class:`fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import flint

_P = flint.fmpz_poly
_ONE = _P([1])
_ZERO = _P([])
_X = _P([0, 1])


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


class Scalar:
    """Element of Q(mu) in canonical reduced form.

    >>> mu = Scalar.mu()
    >>> str((1 - mu**-4) / (1 - mu**-2))
    '(mu^2+1)/mu^2'
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, Scalar):
            self.num, self.den = num.num, num.den
            return
        if isinstance(num, Fraction):
            num, den0 = _P([num.numerator]), _P([num.denominator])
            den = den0 if den is None else den0 * _poly(den)
        else:
            num = _poly(num)
            den = _ONE if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def mu(cls) -> "Scalar":
        return cls._raw(_X, _ONE)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the string form produced by ``str``."""
        from .expr import parse
        return _eval_scalar(parse(text))

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, int):
            return Scalar._raw(_P([other]), _ONE)
        if isinstance(other, Fraction):
            return Scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den == _ONE:
                return Scalar._raw(self.num + o.num, _ONE)
            return Scalar._make(self.num + o.num, self.den)
        return Scalar._make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == _ONE and o.den == _ONE:
            return Scalar._raw(self.num * o.num, _ONE)
        return Scalar._make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        num, den = self.den, self.num
        if den[den.degree()] < 0:
            num, den = -num, -den
        return Scalar._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return Scalar._raw(self.num ** n, self.den ** n)

    @classmethod
    def _make(cls, num, den):
        num, den = _normalize(num, den)
        return cls._raw(num, den)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((tuple(int(c) for c in self.num.coeffs()),
                     tuple(int(c) for c in self.den.coeffs())))

    def __bool__(self):
        return not self.num.is_zero()

    # inspection ---------------------------------------------------------
    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(int(self.num[0]), int(self.den[0]))

    def size(self) -> int:
        """Total degree of numerator and denominator (pivot heuristic)."""
        return max(self.num.degree(), 0) + self.den.degree()

    def eval(self, at) -> Fraction:
        """Evaluate at a rational point; :class:`PoleError` at a pole."""
        at = Fraction(at)
        x = flint.fmpq(at.numerator, at.denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"{self} has a pole at mu = {at}")
        v = self.num(x) / d
        return Fraction(int(v.p), int(v.q))

    def __str__(self):
        ns = _poly_str(self.num)
        if self.den == _ONE:
            return ns
        if _term_count(self.num) > 1:
            ns = f"({ns})"
        ds = _poly_str(self.den)
        if _term_count(self.den) > 1 or (self.den.degree() > 0 and _lead(self.den) != 1):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _poly(x):
    if isinstance(x, _P):
        return x
    if isinstance(x, int):
        return _P([x])
    raise TypeError(f"cannot make a polynomial from {type(x).__name__}")


def _lead(p):
    return p[p.degree()]


def _normalize(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    g = num.gcd(den)
    if g != _ONE:
        num = num // g
        den = den // g
    if _lead(den) < 0:
        num, den = -num, -den
    return num, den


def _term_count(p) -> int:
    return sum(1 for c in p.coeffs() if c != 0)


def _poly_str(p) -> str:
    if p.is_zero():
        return "0"
    parts = []
    coeffs = p.coeffs()
    for k in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = "mu" if k == 1 else f"mu^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    s0, b0 = parts[0]
    out = ("-" if s0 == "-" else "") + b0
    for s, b in parts[1:]:
        out += s + b
    return out


def _eval_scalar(node) -> Scalar:
    from . import expr as E
    if isinstance(node, E.Num):
        return Scalar(node.value)
    if isinstance(node, E.Sym):
        if node.name != "mu":
            raise ValueError(f"unexpected symbol {node.name!r} in a scalar")
        return Scalar.mu()
    if isinstance(node, E.Pow):
        return _eval_scalar(node.base) ** node.exp
    if isinstance(node, E.Neg):
        return -_eval_scalar(node.arg)
    a, b = _eval_scalar(node.left), _eval_scalar(node.right)
    return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__, "/": a.__truediv__}[node.op](b)


Coeff = Union[int, Fraction, Scalar]


def size_of(c) -> int:
    """Complexity of a field element, used to choose elimination pivots."""
    if isinstance(c, Scalar):
        return c.size()
    if isinstance(c, Fraction):
        return c.numerator.bit_length() + c.denominator.bit_length()
    return int(c).bit_length()


@dataclass(frozen=True)
class Mu:
    """Deformation-parameter context.

    ``Mu()`` is the symbolic field Q(mu); ``Mu(Fraction(1, 2))`` computes
    over Q with mu specialized to 1/2.
    """

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            v = Fraction(self.value)
            if v == 0:
                raise ValueError("mu must be nonzero")
            object.__setattr__(self, "value", v)

    @classmethod
    def parse(cls, text: str) -> "Mu":
        text = str(text).strip()
        if text in ("sym", "symbolic", "mu"):
            return cls()
        return cls(Fraction(text))

    @property
    def symbolic(self) -> bool:
        return self.value is None

    @property
    def gen(self) -> Coeff:
        return Scalar.mu() if self.value is None else self.value

    @property
    def label(self) -> str:
        return "sym" if self.value is None else str(self.value)

    def __call__(self, x) -> Coeff:
        """Coerce ``x`` (int, Fraction, Scalar or string) into this field."""
        if isinstance(x, str):
            x = Scalar.parse(x)
        if self.value is None:
            if isinstance(x, Scalar):
                return x
            return Scalar(x)
        if isinstance(x, Scalar):
            return x.eval(self.value)
        return Fraction(x)

    def power(self, k: int) -> Coeff:
        """``mu**k`` as a field element."""
        if self.value is None:
            return Scalar.mu() ** k
        return self.value ** k

    def is_root_of_unity_sq(self) -> bool:
        """True when mu^2 == 1, where the braiding degenerates to the flip."""
        return self.value is not None and self.value ** 2 == 1


def fmt(c) -> str:
    """String form of a field element."""
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def verify_scalars(samples: int = 100, seed: int = 0) -> list[tuple[str, bool, str]]:
    """Canonical forms are association independent; evaluation is a homomorphism."""
    import random

    rng = random.Random(seed)
    m = Scalar.mu()
    elems = [(1 - m ** -4) / (1 - m ** -2), m ** 3 / (1 - m * m), (m + 2) / (3 * m ** 2 - 1),
             Scalar(Fraction(2, 7)), 1 - m ** 4]
    out = []
    bad = ""
    for a in elems:
        for b in elems:
            for c in elems:
                if (a * b) * c != a * (b * c) or repr((a * b) * c) != repr(a * (b * c)):
                    bad = bad or f"{a} {b} {c}"
                if str((a + b) + c) != str(a + (b + c)):
                    bad = bad or f"{a} {b} {c}"
    out.append(("scalar canonical form is association independent", not bad, bad))
    bad = ""
    done = 0
    while done < samples:
        r = Fraction(rng.randint(-20, 20), rng.randint(1, 12))
        a, b = rng.sample(elems, 2)
        try:
            ea, eb = a.eval(r), b.eval(r)
            vals = [(a + b).eval(r) == ea + eb, (a - b).eval(r) == ea - eb, (a * b).eval(r) == ea * eb]
            if eb:
                vals.append((a / b).eval(r) == ea / eb)
        except PoleError:
            continue
        done += 1
        if not all(vals):
            bad = bad or f"{a}, {b} at {r}"
    out.append(("evaluation is a field homomorphism", not bad, bad))
    return out
