"""Karlsson-Minton summation, q-binomial vanishing, proof-step identities."""

from fractions import Fraction

import pytest

from qsupercheck.cyclotomic import cyclotomic, q_integer
from qsupercheck.identities import (
    _km_degenerate,
    _km_sides,
    qbinom_alternating_sum,
    verify_karlsson_minton,
    verify_proof_step,
    verify_qbinomial_vanishing,
)
from qsupercheck.laurent import Laurent, RatFunc
from qsupercheck.poly import Poly, poly_prod
from qsupercheck.qfuncs import QMonomial, q_pochhammer
from qsupercheck.results import Status


def test_km_trivial_offsets_give_one():
    lhs, rhs = _km_sides(Fraction(2, 3), [Fraction(5, 7)], [0])
    assert lhs == rhs == 1


def test_km_examples_hold():
    assert verify_karlsson_minton([0], trials=5, seed=1).status is Status.HOLDS
    assert verify_karlsson_minton([1, 1], trials=5, seed=42).status is Status.HOLDS
    assert verify_karlsson_minton([2, 0, 1], trials=5, seed=42).status is Status.HOLDS


def test_km_direct_sample():
    lhs, rhs = _km_sides(Fraction(3, 5), [Fraction(7, 2), Fraction(9, 4)], [2, 1])
    assert lhs == rhs


def test_km_degeneracy_detection():
    assert _km_degenerate(Fraction(1), [Fraction(2)], 1)
    assert _km_degenerate(Fraction(4), [Fraction(1, 4)], 2)  # b q = 1
    assert not _km_degenerate(Fraction(2, 3), [Fraction(5, 7)], 3)


def test_km_bad_arguments_skip():
    assert verify_karlsson_minton([], m=0).status is Status.SKIPPED_PRECONDITION
    assert verify_karlsson_minton([1], m=2).status is Status.SKIPPED_PRECONDITION


def test_qbinom_vanishing_small():
    assert verify_qbinomial_vanishing(1).status is Status.HOLDS
    assert verify_qbinomial_vanishing(5).status is Status.HOLDS


def test_qbinom_diagnostic_out_of_range():
    result = verify_qbinomial_vanishing(2, j=2)
    assert result.status is Status.HOLDS
    assert result.note == "expected-nonvanishing outside stated range"
    assert not qbinom_alternating_sum(2, 2).is_zero()
    forced = verify_qbinomial_vanishing(2, j=2, expect="zero")
    assert forced.status is Status.FAILS


def _binom2(x):
    return x * (x - 1) // 2


def test_exponent_identity_example_value():
    # Independent integer oracle for d=4, r=1, n=7, k=3: both sides -24.
    d, r, n, k = 4, 1, 7, 3
    top = n - 1 - (n + r) // d
    lhs = d * _binom2(k) + (n + 2 * d + r - d * n) * k
    rhs = d * _binom2(top - k) - d * _binom2(top)
    assert lhs == rhs == -24
    result = verify_proof_step("exponent_identity", {"d": d, "r": r, "n": n, "k": k})
    assert result.status is Status.HOLDS


def test_pochhammer_split_general_display_instance():
    # (q^7, q^-3; q^5)_3 = -q^2 ([3]/[2]) (1 + (1-q^5)/(q^5-q^17)) (q^2;q^5)_3^2,
    # assembled here exactly as displayed.
    lhs = q_pochhammer(QMonomial(1, 7), 5, 3) * q_pochhammer(QMonomial(1, -3), 5, 3)
    correction = 1 + RatFunc(
        Laurent(Poly((1, 0, 0, 0, 0, -1))),
        Laurent(Poly((1,)), 5) - Laurent(Poly((1,)), 17))
    rhs = (-Laurent(Poly((1,)), 2)
           * RatFunc(Laurent(q_integer(3)), q_integer(2))
           * correction
           * q_pochhammer(QMonomial(1, 2), 5, 3) ** 2)
    assert RatFunc(lhs) == rhs
    result = verify_proof_step("pochhammer_split_general", {"d": 5, "r": 2, "k": 3})
    assert result.status is Status.HOLDS


def test_pochhammer_split_r1_empty_product():
    result = verify_proof_step("pochhammer_split_r1", {"d": 4, "k": 0})
    assert result.status is Status.HOLDS


def test_sum_decomposition_termwise_oracle():
    # The three-sum relation holds termwise: check one k directly.
    d, k = 3, 2
    high = q_pochhammer(QMonomial(1, d + 1), d, k)
    low = q_pochhammer(QMonomial(1, 1), d, k)
    neg = q_pochhammer(QMonomial(1, 1 - d), d, k)
    bracket_d = Laurent(q_integer(d))
    bracket_d1 = Laurent(q_integer(d - 1), 1)
    assert high * neg == bracket_d * low * neg - bracket_d1 * low * low
    result = verify_proof_step("sum_decomposition", {"d": 3, "n": 5})
    assert result.status is Status.HOLDS


def test_ratio_shifts():
    holds = verify_proof_step(
        "ratio_shift_generic", {"d": 4, "r": 1, "n": 7, "j": 3, "k": 2})
    assert holds.status is Status.HOLDS
    central = verify_proof_step(
        "ratio_shift_central", {"d": 4, "r": 1, "n": 7, "j": 2, "k": 0})
    assert central.status is Status.HOLDS
    wrong_band = verify_proof_step(
        "ratio_shift_generic", {"d": 4, "r": 1, "n": 7, "j": 2, "k": 2})
    assert wrong_band.status is Status.SKIPPED_PRECONDITION
    parity = verify_proof_step(
        "ratio_shift_generic", {"d": 5, "r": 1, "n": 9, "j": 4, "k": 1})
    assert parity.status is Status.SKIPPED_PRECONDITION


def test_qbinom_rewrite():
    result = verify_proof_step(
        "qbinom_rewrite", {"d": 5, "r": 2, "n": 8, "k": 4})
    assert result.status is Status.HOLDS


def test_bracket_factorization_12():
    product = cyclotomic(12) * poly_prod(
        [cyclotomic(m) for m in (2, 3, 4, 6)])
    assert product == q_integer(12)
    result = verify_proof_step("bracket_factorization", {"n": 12})
    assert result.status is Status.HOLDS


def test_prefactor_divisibility():
    assert verify_proof_step(
        "prefactor_divisibility", {"d": 2, "n": 9}).status is Status.HOLDS
    # Prime n has no proper divisors above 1; the modulus is trivial.
    assert verify_proof_step(
        "prefactor_divisibility", {"d": 2, "n": 7}).status is Status.HOLDS


def test_unknown_step_rejected():
    with pytest.raises(ValueError):
        verify_proof_step("nope", {})


def test_km_sample_exhaustion(monkeypatch):
    import qsupercheck.identities as ident

    class DegenerateRng:
        def __init__(self, seed):
            pass

        def randint(self, lo, hi):
            return 7  # q = 7/7 = 1: always degenerate

    monkeypatch.setattr(ident.random, "Random", DegenerateRng)
    with pytest.raises(ident.SampleExhaustionError):
        ident.verify_karlsson_minton([1], trials=1, seed=0)
