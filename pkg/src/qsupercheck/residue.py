"""Quotient rings Q[q]/(M) for M = Phi_n(q)^2 or [n]^2.

Both moduli have constant term 1 for n >= 2, so q is a unit and Laurent
polynomials reduce cleanly: negative powers of q become powers of the
cached inverse of q.  Unit inversion runs extended Euclid against the
modulus; a non-unit raises ``NonUnitError`` carrying the offending gcd,
which under the theorems' parameter constraints can only mean invalid
parameters or an internal bug.  Rings and their elements are immutable.
"""

from __future__ import annotations

from .cyclotomic import cyclotomic, q_integer
from .gf import RATIONALS, Domain
from .laurent import Laurent
from .poly import Poly, divrem, xgcd

PHI_SQUARED = "phi_squared"
BRACKET_SQUARED = "bracket_squared"


class NonUnitError(ArithmeticError):
    """Inversion of a ring element sharing a factor with the modulus."""

    def __init__(self, witness: Poly):
        super().__init__(f"non-unit element; gcd with modulus is {witness!r}")
        self.witness = witness


class ResidueRing:
    """Q[q]/(M(q)) with M = Phi_n^2 or [n]^2, n >= 2."""

    __slots__ = ("n", "kind", "modulus", "domain", "inv_q", "one", "zero")

    def __init__(self, n: int, kind: str = PHI_SQUARED, domain: Domain = RATIONALS):
        if n < 2:
            raise ValueError("residue rings require n >= 2")
        if kind == PHI_SQUARED:
            base = cyclotomic(n)
        elif kind == BRACKET_SQUARED:
            base = q_integer(n)
        else:
            raise ValueError(f"unknown ring kind {kind!r}")
        modulus = domain.poly(base * base)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "domain", domain)
        if modulus.constant() != 1:
            raise ValueError("modulus constant term must be 1")
        # M = 1 + q*T  ==>  q^(-1) = -T mod M.
        tail = Poly(modulus.coeffs[1:])
        inv_q = RingElement(self, -tail)
        object.__setattr__(self, "inv_q", inv_q)
        object.__setattr__(self, "one", RingElement(self, Poly((domain.scalar(1),))))
        object.__setattr__(self, "zero", RingElement(self, Poly()))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ResidueRing is immutable")

    def __repr__(self):
        return f"ResidueRing(n={self.n}, kind={self.kind})"

    def element(self, f) -> "RingElement":
        """Canonical class of an int, Poly, or Laurent."""
        if isinstance(f, RingElement):
            if f.ring is not self:
                raise ValueError("element of a different ring")
            return f
        if isinstance(f, Laurent):
            return self.reduce_laurent(f)
        if not isinstance(f, Poly):
            f = Poly((self.domain.scalar(f),))
        return RingElement(self, f)

    def reduce_laurent(self, f: Laurent) -> "RingElement":
        body = RingElement(self, f.body)
        if f.min_exp >= 0:
            return body * self.pow_q(f.min_exp)
        return body * self.inv_q ** (-f.min_exp)

    def pow_q(self, e: int) -> "RingElement":
        """Class of q**e for e of either sign, by square and multiply."""
        if e >= 0:
            deg = self.modulus.degree
            if e < deg:
                return RingElement(self, Poly((0,) * e + (self.domain.scalar(1),)))
            base = RingElement(self, Poly((0, self.domain.scalar(1))))
            return base**e
        return self.inv_q ** (-e)


class RingElement:
    """Canonical residue mod the ring modulus."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: ResidueRing, rep: Poly):
        if rep.degree >= ring.modulus.degree:
            _, rep = divrem(rep, ring.modulus)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("mixed residue rings")
            return other
        if isinstance(other, (int, Poly, Laurent)):
            return self.ring.element(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash((id(self.ring), self.rep))

    def is_zero(self):
        return self.rep.is_zero()

    def __bool__(self):
        return bool(self.rep)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.ring, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.ring, self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.invert() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self) -> "RingElement":
        """Multiplicative inverse; raises NonUnitError with the gcd witness."""
        if self.rep.is_zero():
            raise NonUnitError(Poly())
        g, s, _ = xgcd(self.rep, self.ring.modulus)
        if g.degree != 0:
            raise NonUnitError(g)
        return RingElement(self.ring, s)

    def __repr__(self):
        return f"RingElement({self.rep!r} mod {self.ring!r})"


def ring_reduce(ring: ResidueRing, f) -> RingElement:
    """Canonical class of f, with negative q-powers sent through inv(q)."""
    return ring.element(f)


def ring_invert(x: RingElement) -> RingElement:
    return x.invert()


def ring_pow_q(ring: ResidueRing, e: int) -> RingElement:
    return ring.pow_q(e)
