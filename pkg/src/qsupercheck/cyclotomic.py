"""Cyclotomic polynomials, q-integers, and the arithmetic functions behind them.

Phi_n(q) is built from the Mobius product over divisors,
prod_{m|n} (q^{n/m} - 1)^{mu(m)}, clearing the inverted factors by exact
division.  Every freshly computed Phi_n is checked against
prod_{m|n} Phi_m = q^n - 1 before it enters the cache, so a construction
bug cannot propagate silently.  Cached polynomials are immutable and the
cache only ever grows, so sharing across worker threads is safe.
"""

from __future__ import annotations

import functools

from .poly import Poly, exact_div, poly_prod


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; n >= 1."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius expects n >= 1")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def q_power_minus_one(e: int) -> Poly:
    """q**e - 1."""
    return Poly((-1,) + (0,) * (e - 1) + (1,))


def q_integer(n: int) -> Poly:
    """[n] = 1 + q + ... + q**(n-1)."""
    if n < 1:
        raise ValueError("q_integer expects n >= 1")
    return Poly((1,) * n)


@functools.cache
def cyclotomic(n: int) -> Poly:
    """Phi_n(q), with integer coefficients and degree euler_phi(n)."""
    if n < 1:
        raise ValueError("cyclotomic expects n >= 1")
    if n == 1:
        return Poly((-1, 1))
    num, den = [], []
    for m in divisors(n):
        mu = mobius(m)
        if mu == 1:
            num.append(q_power_minus_one(n // m))
        elif mu == -1:
            den.append(q_power_minus_one(n // m))
    phi = exact_div(poly_prod(num), poly_prod(den))
    _check_new_entry(n, phi)
    return phi


def _check_new_entry(n: int, phi: Poly) -> None:
    if phi.degree != euler_phi(n):
        raise ArithmeticError(f"Phi_{n} has wrong degree {phi.degree}")
    if not all(isinstance(c, int) for c in phi.coeffs):
        raise ArithmeticError(f"Phi_{n} has non-integer coefficients")
    product = poly_prod([cyclotomic(m) for m in divisors(n) if m < n]) * phi
    if product != q_power_minus_one(n):
        raise ArithmeticError(f"divisor product check failed for Phi_{n}")
