"""Term shapes and closed forms for the truncated sum families.

Every left-hand side in the catalog is a sum over k of

    prod_i (q^{e_i}; q^d)_k^{m_i} * q^{dk} / (q^d; q^d)_k^d

and the family is pinned down by its list of (base exponent, multiplicity)
pairs.  Right-hand sides share one shape as well: a sign, a few explicit
(1 - q^e) factors, a quotient of (q^d; q^d)_L Pochhammers, and a power of
q whose exponent is an integer-valued formula of (d, n, r); integrality is
asserted at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as igcd


class IntegralityError(ArithmeticError):
    """An exponent formula failed to be an integer."""


F1_GUO = "F1_GUO"
F2_MIXED = "F2_MIXED"
F3_SQUARED = "F3_SQUARED"
F4_LEMMA = "F4_LEMMA"
F5_THM41 = "F5_THM41"
F6_THM42 = "F6_THM42"
F7_DIVISIBILITY = "F7_DIVISIBILITY"


def numerator_factors(family: str, d: int, r: int) -> list[tuple[int, int]]:
    """(base exponent, multiplicity) pairs for the family's summand numerator.

    Zero multiplicities are dropped; the denominator is always
    (q^d; q^d)_k^d and the term carries q^{dk}.
    """
    if family == F1_GUO:
        pairs = [(d - 1, d)]
    elif family == F2_MIXED:
        pairs = [(d + 1, d - 1), (1 - d, 1)]
    elif family == F3_SQUARED:
        pairs = [(d + 1, d - 2), (1, 2)]
    elif family == F4_LEMMA:
        pairs = [(d + r, d - r - 1), (r, r), (r - d, 1)]
    elif family == F5_THM41:
        pairs = [(d + r, d - r), (r, r - 1), (r - d, 1)]
    elif family == F6_THM42:
        pairs = [(d + r, d - r - 1), (r, r + 1)]
    elif family == F7_DIVISIBILITY:
        pairs = [(d + 1, d - 2), (1, 1), (1 - d, 1)]
    else:
        raise ValueError(f"unknown family {family!r}")
    return [(e, m) for e, m in pairs if m > 0]


def _exact_quotient(num: int, den: int) -> int:
    if num % den:
        raise IntegralityError(f"{num}/{den} is not an integer")
    return num // den


def a_exponent(d: int, n: int, r: int) -> int:
    """The q-power exponent A(d,n,r) in the two-parameter closed forms."""
    num = d * (d + n) * (n + r) + d * n * (r - 1) - (n + r) ** 2
    return _exact_quotient(num, 2 * d) - r * (r + 1) // 2


def one_parameter_exponent(d: int, n: int) -> int:
    """(d(d+n)(n+1) - (n+1)^2) / (2d), the r = 1 closed-form exponent core."""
    return _exact_quotient(d * (d + n) * (n + 1) - (n + 1) ** 2, 2 * d)


@dataclass(frozen=True)
class ClosedForm:
    """sign * prod (1-q^e)^m * prod poch / prod poch * q^q_exp."""

    sign: int
    unit_factors: tuple[tuple[int, int], ...]  # (exponent e, multiplicity)
    poch_num: tuple[tuple[int, int, int, int], ...]  # (base, step, length, mult)
    poch_den: tuple[tuple[int, int, int, int], ...]
    q_exp: int

    def mutated(self, mutation: str | None) -> "ClosedForm":
        if mutation is None:
            return self
        if mutation == "sign":
            return ClosedForm(-self.sign, self.unit_factors, self.poch_num,
                              self.poch_den, self.q_exp)
        if mutation == "exponent":
            return ClosedForm(self.sign, self.unit_factors, self.poch_num,
                              self.poch_den, self.q_exp + 1)
        raise ValueError(f"unknown mutation {mutation!r}")


ZERO_RHS = None  # sentinel: the closed form is identically zero


def closed_form(check_id: str, d: int, n: int, r: int = 1) -> ClosedForm | None:
    """Right-hand side of a catalog congruence; None when it is zero."""
    if check_id == "eq13":
        t = _exact_quotient(n - 1, d)
        return ClosedForm(
            sign=-1 if ((d - 1) * t) % 2 else 1,
            unit_factors=(),
            poch_num=((d, d, (d - 1) * t, 1),),
            poch_den=((d, d, t, d - 1),),
            q_exp=_exact_quotient((d - 1) * (n - 1) * (d + n - 1), 2 * d),
        )
    if check_id in ("eq14", "thm11"):
        m = _exact_quotient(n + 1, d)
        sign = -1
        if check_id == "thm11" and m % 2:
            sign = 1
        return ClosedForm(
            sign=sign,
            unit_factors=((1, 1), (d - 1, 1)),
            poch_num=((d, d, n - 1 - m, 1),),
            poch_den=((d, d, m, d - 1),),
            q_exp=one_parameter_exponent(d, n) - 1,
        )
    if check_id in ("eq15", "thm12"):
        m = _exact_quotient(n + 1, d)
        sign = 1
        if check_id == "eq15" and m % 2:
            sign = -1
        return ClosedForm(
            sign=sign,
            unit_factors=((1, 2),),
            poch_num=((d, d, n - 1 - m, 1),),
            poch_den=((d, d, m, d - 1),),
            q_exp=one_parameter_exponent(d, n) - 2,
        )
    if check_id in ("lemma21", "eq22"):
        return ZERO_RHS
    if check_id == "thm41":
        m = _exact_quotient(n + r, d)
        sign = -1 if (n - 1 - m) % 2 == 0 else 1  # -(-1)^(n-1-m)
        return ClosedForm(
            sign=sign,
            unit_factors=((r, r), (d - r, 1)),
            poch_num=((d, d, n - 1 - m, 1),),
            poch_den=((d, d, m, d - 1),),
            q_exp=a_exponent(d, n, r),
        )
    if check_id == "thm42":
        m = _exact_quotient(n + r, d)
        return ClosedForm(
            sign=1 if (n - 1 - m) % 2 == 0 else -1,
            unit_factors=((r, r + 1),),
            poch_num=((d, d, n - 1 - m, 1),),
            poch_den=((d, d, m, d - 1),),
            q_exp=a_exponent(d, n, r) - r,
        )
    raise ValueError(f"no closed form for check {check_id!r}")


def theorem_family(check_id: str) -> str:
    return {
        "eq13": F1_GUO,
        "eq14": F2_MIXED,
        "thm11": F2_MIXED,
        "eq15": F3_SQUARED,
        "thm12": F3_SQUARED,
        "lemma21": F4_LEMMA,
        "eq22": F4_LEMMA,
        "thm41": F5_THM41,
        "thm42": F6_THM42,
    }[check_id]


def theorem_precondition(check_id: str, d: int, n: int, r: int) -> str | None:
    """None when (d, r, n) is admissible, else a short reason to skip."""
    if check_id == "eq13":
        if d < 2 or n < 2:
            return "requires d > 1 and n > 1"
        if n % d != 1 % d:
            return "requires n == 1 (mod d)"
        return None
    if check_id == "eq14":
        if d < 3 or d % 2 == 0:
            return "requires odd d >= 3"
        return _complement_condition(d, n, bound=2 * d - 1)
    if check_id == "thm11":
        if d < 4 or d % 2:
            return "requires even d >= 4"
        return _complement_condition(d, n, bound=2 * d - 1)
    if check_id == "eq15":
        if d < 4 or d % 2:
            return "requires even d >= 4"
        return _complement_condition(d, n, bound=2)
    if check_id == "thm12":
        if d < 3 or d % 2 == 0:
            return "requires odd d >= 3"
        return _complement_condition(d, n, bound=2)
    if check_id in ("lemma21", "thm41"):
        if r < 1:
            return "requires r >= 1"
        if igcd(d, r) != 1:
            return "requires gcd(d, r) = 1"
        if check_id == "lemma21":
            if d < r + 3:
                return "requires d >= r + 3"
        elif d < r + 3 and not (r == 1 and d in (2, 3)):
            return "requires d >= r + 3, or r = 1 with d in {2, 3}"
        if (n + r) % d:
            return "requires n == -r (mod d)"
        if n < 2 * d - r:
            return "requires n >= 2d - r"
        return None
    if check_id == "eq22":
        if d < 4:
            return "requires d >= 4"
        return _complement_condition(d, n, bound=2 * d - 1)
    if check_id == "thm42":
        if not (d > r >= 1):
            return "requires d > r >= 1"
        if igcd(d, r) != 1:
            return "requires gcd(d, r) = 1"
        if n < 2:
            return "requires n > 1"
        if (n + r) % d:
            return "requires n == -r (mod d)"
        return None
    if check_id == "thm13":
        if d < 2:
            return "requires d >= 2"
        return _complement_condition(d, n, bound=2 * d - 1)
    raise ValueError(f"unknown check {check_id!r}")


def _complement_condition(d: int, n: int, bound: int) -> str | None:
    if (n + 1) % d:
        return "requires n == -1 (mod d)"
    if n < bound:
        return f"requires n >= {bound}"
    return None
