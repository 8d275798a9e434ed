"""Congruence checks: truncated sums against closed forms in quotient rings.

The left-hand sums are accumulated inside the ring: one running product
per distinct Pochhammer base plus a running denominator product whose
inverse is taken afresh at every k.  The divisibility family is different
in kind: its prefactor cancels every denominator exactly, so the whole
expression is assembled as one integer Laurent polynomial and divided by
[n]^2 at the polynomial level, where multiplying by a power of q (a unit
coprime to [n]) is harmless.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .cyclotomic import q_integer
from .families import (
    F7_DIVISIBILITY,
    IntegralityError,
    closed_form,
    numerator_factors,
    theorem_family,
    theorem_precondition,
)
from .gf import RATIONALS, Domain
from .laurent import Laurent
from .poly import Poly, divrem, poly_prod
from .qfuncs import poch_power_base
from .residue import PHI_SQUARED, NonUnitError, ResidueRing, RingElement
from .results import CheckResult, fails, holds, skipped

THEOREM_IDS = ("eq13", "eq14", "eq15", "thm11", "thm12", "lemma21", "eq22",
               "thm41", "thm42")


def lhs_sum(family: str, d: int, r: int, n: int, ring: ResidueRing) -> RingElement:
    """Sum_{k=0}^{n-1} of the family's term, reduced incrementally."""
    factors = numerator_factors(family, d, r)
    running = {e: ring.one for e, _ in factors}
    den_running = ring.one
    q_step = ring.pow_q(d)
    q_power = ring.one
    total = ring.zero
    for k in range(n):
        if k:
            for e in running:
                running[e] = running[e] * (ring.one - ring.pow_q(e + d * (k - 1)))
            den_running = den_running * (ring.one - ring.pow_q(d * k))
            q_power = q_power * q_step
        term = q_power
        for e, mult in factors:
            term = term * running[e] ** mult
        term = term * den_running.invert() ** d
        total = total + term
    return total


def lhs_sum_whole(family: str, d: int, r: int, n: int,
                  ring: ResidueRing) -> RingElement:
    """One-shot oracle: build the sum as numerator over a common denominator,
    reduce both once, and divide in the ring."""
    factors = numerator_factors(family, d, r)
    num_total = Laurent(Poly())
    for k in range(n):
        term = Laurent(Poly((1,))).shifted(d * k)
        for e, mult in factors:
            term = term * poch_power_base(e, d, k) ** mult
        cofactor = poch_power_base(d * (k + 1), d, n - 1 - k) ** d
        num_total = num_total + term * cofactor
    den = poch_power_base(d, d, n - 1) ** d
    return ring.element(num_total) * ring.element(den).invert()


def rhs_for_family(family: str, d: int, r: int, n: int,
                   ring: ResidueRing) -> RingElement:
    """Family-keyed closed form; the parity of d picks the sign variant."""
    check_id = {
        "F1_GUO": "eq13",
        "F2_MIXED": "eq14" if d % 2 else "thm11",
        "F3_SQUARED": "thm12" if d % 2 else "eq15",
        "F4_LEMMA": "lemma21",
        "F5_THM41": "thm41",
        "F6_THM42": "thm42",
    }[family]
    return rhs_closed_form(check_id, d, r, n, ring)


def rhs_closed_form(check_id: str, d: int, r: int, n: int, ring: ResidueRing,
                    mutation: str | None = None) -> RingElement:
    """The check's closed form as a ring element; zero for the vanishing ones."""
    cf = closed_form(check_id, d, n, r)
    if cf is None:
        return ring.zero
    cf = cf.mutated(mutation)
    value = ring.pow_q(cf.q_exp)
    if cf.sign < 0:
        value = -value
    for e, mult in cf.unit_factors:
        value = value * (ring.one - ring.pow_q(e)) ** mult
    for base, step, length, mult in cf.poch_num:
        value = value * ring.element(poch_power_base(base, step, length)) ** mult
    for base, step, length, mult in cf.poch_den:
        value = value * ring.element(poch_power_base(base, step, length)).invert() ** mult
    return value


def verify_theorem(check_id: str, d: int, n: int, r: int = 1,
                   domain: Domain = RATIONALS,
                   mutation: str | None = None) -> CheckResult:
    """Compare LHS sum and closed form in Q[q]/(Phi_n(q)^2)."""
    if check_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {check_id!r}")
    params = {"d": d, "n": n}
    if check_id in ("lemma21", "thm41", "thm42"):
        params["r"] = r
    start = time.perf_counter()
    reason = theorem_precondition(check_id, d, n, r)
    if reason is not None:
        return skipped(check_id, params, reason)
    note = None
    if check_id == "thm12" and n == 2:
        note = "boundary case n = 2: accepted, smallest admissible n"
    try:
        ring = ResidueRing(n, PHI_SQUARED, domain)
        lhs = lhs_sum(theorem_family(check_id), d, r, n, ring)
        rhs = rhs_closed_form(check_id, d, r, n, ring, mutation)
    except (NonUnitError, IntegralityError) as exc:
        return fails(check_id, params, f"{type(exc).__name__}: {exc}")
    if lhs == rhs:
        result = holds(check_id, params, note)
    else:
        result = fails(check_id, params, f"difference {(lhs - rhs).rep!r}")
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result


def divisibility_expression(d: int, n: int, domain: Domain = RATIONALS) -> Laurent:
    """(q^d;q^d)_{n-1}^d / (1-q)^{d(n-1)} times the mixed sum, assembled as
    one Laurent polynomial with integer coefficients.

    Each factor 1 - q^e of each term turns into a q-integer [|e|] times a
    monomial, and the term has exactly d(n-1) such factors, cancelling the
    (1-q) power without any division.
    """
    total = Laurent(Poly())
    for k in range(n):
        exponents = []
        for e, mult in numerator_factors(F7_DIVISIBILITY, d, 1):
            for j in range(k):
                exponents.extend([e + d * j] * mult)
        for j in range(k + 1, n):
            exponents.extend([d * j] * d)
        sign = 1
        shift = d * k
        q_ints = []
        for e in exponents:
            if e < 0:
                sign = -sign
                shift += e
                e = -e
            q_ints.append(q_integer(e))
        term_poly = domain.poly(poly_prod(q_ints))
        term = Laurent(term_poly, shift)
        total = total + (term if sign > 0 else -term)
    return total


def verify_divisibility(d: int, n: int, domain: Domain = RATIONALS) -> CheckResult:
    """Divisibility of the prefactored mixed sum by [n]^2."""
    params = {"d": d, "n": n}
    start = time.perf_counter()
    reason = theorem_precondition("thm13", d, n, 1)
    if reason is not None:
        return skipped("thm13", params, reason)
    expr = divisibility_expression(d, n, domain)
    if domain.exact and not all(isinstance(c, int) for c in expr.body.coeffs):
        raise IntegralityError("assembled divisibility expression is not integral")
    shifted = expr.body  # q^{min_exp} is a unit mod [n]^2, safe to drop
    modulus = domain.poly(q_integer(n) ** 2)
    _, rem = divrem(shifted, modulus)
    elapsed = (time.perf_counter() - start) * 1000
    if rem.is_zero():
        result = holds("thm13", params)
    else:
        result = fails("thm13", params, f"remainder {rem!r}")
    result.elapsed_ms = elapsed
    return result


def summand_value_at_one(num_factors: list[tuple[int, int]], d: int,
                         k: int) -> Fraction:
    """Exact value at q = 1 of one truncated-sum term.

    The term's numerator and denominator vanish to the same order at
    q = 1; both are divided by (q - 1) until the denominator no longer
    vanishes, then evaluated.
    """
    num = Laurent(Poly((1,))).shifted(d * k)
    for e, mult in num_factors:
        num = num * poch_power_base(e, d, k) ** mult
    den = poch_power_base(d, d, k) ** d
    num_poly = num.body  # the dropped q-power evaluates to 1 at q = 1
    den_poly = den.to_poly()
    q_minus_1 = Poly((-1, 1))
    while not den_poly.evaluate(1):
        num_poly, rn = divrem(num_poly, q_minus_1)
        den_poly, rd = divrem(den_poly, q_minus_1)
        if not (rn.is_zero() and rd.is_zero()):
            raise ArithmeticError("unbalanced vanishing order at q = 1")
    return Fraction(num_poly.evaluate(1), den_poly.evaluate(1))


def family_sum_at_one_mod(family: str, d: int, r: int, p: int,
                          precision: int = 2) -> int:
    """Sum over k < p of the q = 1 term values, reduced mod p^precision."""
    factors = numerator_factors(family, d, r)
    total = Fraction(0)
    for k in range(p):
        total += summand_value_at_one(factors, d, k)
    modulus = p**precision
    if total.denominator % p == 0:
        raise ZeroDivisionError("denominator divisible by p")
    return total.numerator * pow(total.denominator, -1, modulus) % modulus
