"""Scalar domains: exact rationals or Z/pZ for the probabilistic fast mode.

Fast mode re-runs a check with all polynomial coefficients reduced into
[0, p) for two independently sampled 61-bit primes instead of exact
rationals.  The prime rides along on the polynomials themselves (see
:mod:`qsupercheck.poly`); a ``Domain`` is just the injection point.
"""

from __future__ import annotations

from .laurent import Laurent
from .poly import Poly, _lift_mod


class Domain:
    """Coefficient domain: exact (p None) or the prime field Z/pZ."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Domain is immutable")

    @property
    def exact(self) -> bool:
        return self.p is None

    def scalar(self, c):
        """Embed an int or Fraction into the domain."""
        if self.p is None:
            return c
        return _lift_mod(c, self.p)

    def poly(self, poly: Poly) -> Poly:
        """Retag an exact polynomial into the domain."""
        if self.p is None or poly.p == self.p:
            return poly
        return Poly(poly.coeffs, self.p)

    def laurent(self, lau: Laurent) -> Laurent:
        if self.p is None or lau.body.p == self.p:
            return lau
        return Laurent(self.poly(lau.body), lau.min_exp)

    def __repr__(self):
        return "Domain(exact)" if self.p is None else f"Domain(p={self.p})"


RATIONALS = Domain()


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers 64-bit)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime_61bit(rng) -> int:
    """Sample a random prime in [2**61, 2**61 + 2**24)."""
    while True:
        n = (1 << 61) + rng.randrange(1, 1 << 24) | 1
        if is_probable_prime(n):
            return n


def sample_fast_mode_primes(rng) -> tuple[int, int]:
    p1 = random_prime_61bit(rng)
    p2 = random_prime_61bit(rng)
    while p2 == p1:
        p2 = random_prime_61bit(rng)
    return p1, p2
