"""Summation-formula and proof-step identity checks.

The Karlsson-Minton style summation is verified by exact random-point
evaluation: with rational q and b_j, both sides are exact rationals and a
single non-degenerate agreement is overwhelming evidence; five seeded
trials make the check deterministic in practice.  The proof-step catalog
collects the small exact identities the congruence proofs lean on: the
two Pochhammer ratio shifts, the q-binomial rewriting with its integer
exponent identity, the three-sum decomposition, the two Pochhammer
splittings, the prefactor divisibility, and the cyclotomic factorization
of [n].
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import gcd as igcd

from .cyclotomic import cyclotomic, divisors, q_integer
from .gf import RATIONALS, Domain
from .laurent import Laurent, RatFunc
from .poly import Poly, divrem, poly_prod
from .qfuncs import inflate, one_minus_product, q_binomial
from .results import CheckResult, fails, holds, skipped

PROOF_STEP_IDS = (
    "ratio_shift_generic",
    "ratio_shift_central",
    "qbinom_rewrite",
    "exponent_identity",
    "sum_decomposition",
    "pochhammer_split_r1",
    "pochhammer_split_general",
    "prefactor_divisibility",
    "bracket_factorization",
)


# ---------------------------------------------------------------------------
# Karlsson-Minton type summation
# ---------------------------------------------------------------------------

class SampleExhaustionError(RuntimeError):
    """Too many consecutive degenerate random samples."""


def _scalar_poch(x: Fraction, q: Fraction, k: int) -> Fraction:
    value = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        value *= 1 - x * power
        power *= q
    return value


def _km_sides(q: Fraction, bs: list[Fraction], ns: list[int]):
    total_n = sum(ns)
    lhs = Fraction(0)
    for k in range(total_n + 1):
        term = _scalar_poch(q ** -total_n, q, k) * q**k
        term /= _scalar_poch(q, q, k)
        for b, nj in zip(bs, ns):
            term *= _scalar_poch(b * q**nj, q, k) / _scalar_poch(b, q, k)
        lhs += term
    rhs = (-1) ** total_n * _scalar_poch(q, q, total_n)
    rhs *= q ** sum(nj * (nj - 1) // 2 for nj in ns)
    for b, nj in zip(bs, ns):
        rhs *= b**nj / _scalar_poch(b, q, nj)
    return lhs, rhs


def _km_degenerate(q: Fraction, bs: list[Fraction], total_n: int) -> bool:
    if q == 1:
        return True
    for b in bs:
        power = Fraction(1)
        for _ in range(max(total_n, 1)):
            if b * power == 1:
                return True
            power *= q
    return False


def verify_karlsson_minton(n_list, trials: int = 5, seed: int = 0,
                           m: int | None = None) -> CheckResult:
    """Exact random-point check of the terminating summation formula."""
    ns = list(n_list)
    if m is None:
        m = len(ns)
    params = {"m": m, "n_list": tuple(ns), "trials": trials, "seed": seed}
    if m < 1 or m != len(ns) or any(nj < 0 for nj in ns):
        return skipped("km", params, "requires m >= 1 nonnegative offsets")
    start = time.perf_counter()
    rng = random.Random(seed)
    total_n = sum(ns)
    for trial in range(trials):
        misses = 0
        while True:
            q = Fraction(rng.randint(2, 100), rng.randint(2, 100))
            bs = [Fraction(rng.randint(2, 100), rng.randint(2, 100))
                  for _ in range(m)]
            if not _km_degenerate(q, bs, total_n):
                break
            misses += 1
            if misses >= 100:
                raise SampleExhaustionError(
                    "100 consecutive degenerate Karlsson-Minton samples")
        lhs, rhs = _km_sides(q, bs, ns)
        if lhs != rhs:
            return fails("km", params,
                         f"trial {trial}: q={q}, b={bs}: {lhs} != {rhs}")
    result = holds("km", params)
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result


# ---------------------------------------------------------------------------
# Terminating q-binomial vanishing
# ---------------------------------------------------------------------------

def qbinom_alternating_sum(n: int, j: int, domain: Domain = RATIONALS) -> Poly:
    """sum_k (-1)^k [n k] q^{C(n-k,2) + jk}, zero exactly for 0 <= j <= n-1."""
    total = Poly()
    for k in range(n + 1):
        shift = (n - k) * (n - k - 1) // 2 + j * k
        term = domain.poly(q_binomial(n, k)).shift(shift)
        total = total + (term if k % 2 == 0 else -term)
    return total


def verify_qbinomial_vanishing(n: int, j: int | None = None,
                               expect: str | None = None,
                               domain: Domain = RATIONALS) -> CheckResult:
    """Vanishing of the alternating q-binomial sum.

    Without j, every exponent 0..n-1 must give the zero polynomial.  With
    an explicit j the expectation defaults to zero inside that range and
    to nonzero outside it (diagnostic mode); pass ``expect`` to override.
    """
    params = {"n": n}
    if j is not None:
        params["j"] = j
    if expect is not None:
        params["expect"] = expect
    if n < 1:
        return skipped("qbinom_vanish", params, "requires n >= 1")
    start = time.perf_counter()
    if j is None:
        targets = [(jj, "zero") for jj in range(n)]
        note = None
    else:
        expectation = expect or ("zero" if 0 <= j <= n - 1 else "nonzero")
        targets = [(j, expectation)]
        note = ("expected-nonvanishing outside stated range"
                if expectation == "nonzero" else None)
    for jj, expectation in targets:
        value = qbinom_alternating_sum(n, jj, domain)
        if expectation == "zero" and not value.is_zero():
            return fails("qbinom_vanish", params,
                         f"nonzero polynomial at j = {jj}: {value!r}")
        if expectation == "nonzero" and value.is_zero():
            return fails("qbinom_vanish", params,
                         f"unexpected vanishing at j = {jj}")
    result = holds("qbinom_vanish", params, note)
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result


# ---------------------------------------------------------------------------
# Proof-step catalog
# ---------------------------------------------------------------------------

def _poch_parts(base: int, step: int, idx: int):
    """Exponent lists (numerator, denominator) of (q^base; q^step)_idx."""
    if idx >= 0:
        return [base + step * t for t in range(idx)], []
    den = [base - step * t for t in range(1, -idx + 1)]
    if any(e == 0 for e in den):
        raise ZeroDivisionError("degenerate reciprocal q-shifted factorial")
    return [], den


def _sides_equal(lnum, lden, rnum, rden) -> bool:
    return lnum * rden == rnum * lden


def _central_band(d: int, r: int) -> range:
    return range((d - r - 1) // 2, (d + r - 1) // 2 + 1)


def _ratio_shift_pre(d, r, n, j, k, central: bool) -> str | None:
    if r < 1 or d < r + 3 or igcd(d, r) != 1:
        return "requires gcd(d, r) = 1 and d >= r + 3"
    if (d + r) % 2 == 0:
        return "requires d + r odd"
    if (n + r) % d or n < 2 * d - r:
        return "requires n == -r (mod d) and n >= 2d - r"
    if k < 0:
        return "requires k >= 0"
    if not 1 <= j <= d - 1:
        return "requires 1 <= j <= d - 1"
    inside = j in _central_band(d, r)
    if central != inside:
        band = _central_band(d, r)
        return (f"requires j in [{band.start}, {band.stop - 1}]" if central
                else f"requires j outside [{band.start}, {band.stop - 1}]")
    return None


def _check_ratio_shift(d, r, n, j, k, central: bool, dom: Domain) -> str | None:
    m = (n + r) // d
    b = d - (d - 2 * j) * n
    top = d + r - (d - 2 * j - 1) * n
    lnum, lden = _poch_parts(top, d, k - 2 if central else k)
    lden2, _ = _poch_parts(b, d, k)
    rnum, rden = _poch_parts(b + d * k, d, m - 2 if central else m)
    rden2, _ = _poch_parts(b, d, m)
    lhs_num = one_minus_product(lnum, dom)
    lhs_den = one_minus_product(lden + lden2, dom)
    rhs_num = one_minus_product(rnum, dom)
    rhs_den = one_minus_product(rden + rden2, dom)
    if not _sides_equal(lhs_num, lhs_den, rhs_num, rhs_den):
        return f"ratio shift differs at j={j}, k={k}"
    return None


def _check_qbinom_rewrite(d, r, n, k, dom: Domain) -> str | None:
    m = (n + r) // d
    top = n - 1 - m
    lhs_num = one_minus_product(
        [d + r - (d - 1) * n + d * t for t in range(k)], dom).shifted(d * k)
    lhs_den = one_minus_product([d + d * t for t in range(k)], dom)
    exponent = d * k * (k - 1) // 2 + (n + 2 * d + r - d * n) * k
    gauss = dom.poly(inflate(q_binomial(top, k), d))
    rhs_num = Laurent(gauss, exponent)
    if k % 2:
        rhs_num = -rhs_num
    one = Laurent(Poly((1,), dom.p))
    if not _sides_equal(lhs_num, lhs_den, rhs_num, one):
        return f"q-binomial rewrite differs at k={k}"
    return None


def _check_exponent_identity(d, r, n, k) -> str | None:
    m = (n + r) // d
    top = n - 1 - m
    lhs = d * k * (k - 1) // 2 + (n + 2 * d + r - d * n) * k
    rhs = d * (top - k) * (top - k - 1) // 2 - d * top * (top - 1) // 2
    if lhs != rhs:
        return f"exponent identity differs: {lhs} != {rhs}"
    return None


def _check_sum_decomposition(d, n, dom: Domain) -> str | None:
    sums = []
    for shape in ((d - 1, 0, 1), (d - 2, 1, 1), (d - 2, 2, 0)):
        mult_high, mult_one, mult_neg = shape
        total = Laurent(Poly())
        for k in range(n):
            exps = [d + 1 + d * t for t in range(k)] * mult_high
            exps += [1 + d * t for t in range(k)] * mult_one
            exps += [1 - d + d * t for t in range(k)] * mult_neg
            cofactor = [d * t for t in range(k + 1, n)] * d
            total = total + one_minus_product(exps + cofactor, dom).shifted(d * k)
        sums.append(total)
    s1, s2, s3 = sums
    bracket_d = Laurent(dom.poly(q_integer(d)))
    bracket_d1 = Laurent(dom.poly(q_integer(d - 1)), 1)
    if s1 != bracket_d * s2 - bracket_d1 * s3:
        return "three-sum decomposition differs"
    return None


def _check_poch_split(d, r, k, dom: Domain) -> str | None:
    lhs = RatFunc(one_minus_product(
        [d + r + d * t for t in range(k)] + [r - d + d * t for t in range(k)],
        dom))
    # 1 + (1 - q^d)/(q^d - q^{dk+r}), with the denominator written as
    # q^d (1 - q^{dk+r-d}).
    ratio = RatFunc(
        one_minus_product([d], dom),
        one_minus_product([d * k + r - d], dom).shifted(d),
    )
    brackets = RatFunc(
        Laurent(dom.poly(q_integer(d - r))),
        dom.poly(q_integer(r)),
    )
    square = RatFunc(one_minus_product([r + d * t for t in range(k)], dom)) ** 2
    rhs = -Laurent.term(1, r) * brackets * (1 + ratio) * square
    if lhs != rhs:
        return f"Pochhammer splitting differs at d={d}, r={r}, k={k}"
    return None


def _check_prefactor_divisibility(d, n, dom: Domain) -> str | None:
    factors = []
    for mult in range(1, n):
        factors.extend([dom.poly(q_integer(mult * d))] * d)
    product = poly_prod(factors)
    modulus = dom.poly(poly_prod(
        [cyclotomic(m) ** 2 for m in divisors(n) if 1 < m < n]))
    _, rem = divrem(product, modulus)
    if not rem.is_zero():
        return f"remainder {rem!r}"
    return None


def _check_bracket_factorization(n, dom: Domain) -> str | None:
    product = cyclotomic(n) * poly_prod(
        [cyclotomic(m) for m in divisors(n) if 1 < m < n])
    if product != q_integer(n):
        return f"cyclotomic product differs from [{n}]"
    return None


def verify_proof_step(step_id: str, params: dict,
                      domain: Domain = RATIONALS) -> CheckResult:
    """Dispatch one exact proof-step identity check."""
    if step_id not in PROOF_STEP_IDS:
        raise ValueError(f"unknown proof step {step_id!r}")
    p = dict(params)
    start = time.perf_counter()
    witness = None
    if step_id in ("ratio_shift_generic", "ratio_shift_central"):
        central = step_id == "ratio_shift_central"
        reason = _ratio_shift_pre(p["d"], p["r"], p["n"], p["j"], p["k"], central)
        if reason:
            return skipped(step_id, p, reason)
        witness = _check_ratio_shift(p["d"], p["r"], p["n"], p["j"], p["k"],
                                     central, domain)
    elif step_id == "qbinom_rewrite":
        if (p["n"] + p["r"]) % p["d"] or p["k"] < 0 or p["n"] - 1 - (p["n"] + p["r"]) // p["d"] < 0:
            return skipped(step_id, p, "requires n == -r (mod d), k >= 0")
        witness = _check_qbinom_rewrite(p["d"], p["r"], p["n"], p["k"], domain)
    elif step_id == "exponent_identity":
        if (p["n"] + p["r"]) % p["d"]:
            return skipped(step_id, p, "requires n == -r (mod d)")
        witness = _check_exponent_identity(p["d"], p["r"], p["n"], p["k"])
    elif step_id == "sum_decomposition":
        if p["d"] < 2 or p["n"] < 1:
            return skipped(step_id, p, "requires d >= 2 and n >= 1")
        witness = _check_sum_decomposition(p["d"], p["n"], domain)
    elif step_id == "pochhammer_split_r1":
        if p["d"] < 2 or p["k"] < 0:
            return skipped(step_id, p, "requires d >= 2 and k >= 0")
        witness = _check_poch_split(p["d"], 1, p["k"], domain)
    elif step_id == "pochhammer_split_general":
        if not (p["d"] > p["r"] >= 1) or p["k"] < 0:
            return skipped(step_id, p, "requires d > r >= 1 and k >= 0")
        witness = _check_poch_split(p["d"], p["r"], p["k"], domain)
    elif step_id == "prefactor_divisibility":
        if p["d"] < 2 or p["n"] < 2:
            return skipped(step_id, p, "requires d >= 2 and n >= 2")
        witness = _check_prefactor_divisibility(p["d"], p["n"], domain)
    elif step_id == "bracket_factorization":
        if p["n"] < 2:
            return skipped(step_id, p, "requires n >= 2")
        witness = _check_bracket_factorization(p["n"], domain)
    if witness is not None:
        return fails(step_id, p, witness)
    result = holds(step_id, p)
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result
