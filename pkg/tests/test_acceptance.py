"""Acceptance suite: every advertised grid at zero tolerance.

Each criterion prints one PASS/FAIL line (run with -s to watch them).
The exact-mode suite results are computed once and shared; every
congruence criterion demands exact ring or polynomial equality.
"""

import contextlib

import pytest

from qsupercheck.catalog import (
    GRID_COR41_I,
    GRID_COR41_II,
    GRID_DEINES,
    GRID_EQ13,
    GRID_EQ14,
    GRID_EQ15,
    GRID_EQ22,
    GRID_LEMMA21,
    GRID_PARAMETRIC,
    GRID_PREFACTOR,
    GRID_RV11_PRIMES,
    GRID_THM11,
    GRID_THM12,
    GRID_THM13,
    GRID_THM41,
    GRID_THM42,
    GRID_WLT,
    QBINOM_MAX_N,
    RunOptions,
    km_offset_lists,
    options_with_fast_mode,
    paper_default_suite,
    run_check,
)
from qsupercheck.families import F5_THM41, F6_THM42
from qsupercheck.padic import classical_lhs_sum
from qsupercheck.parametric import verify_parametric
from qsupercheck.residue import PHI_SQUARED, ResidueRing
from qsupercheck.results import Status, canonical_params
from qsupercheck.verifier import (
    family_sum_at_one_mod,
    lhs_sum,
    lhs_sum_whole,
    rhs_closed_form,
    verify_theorem,
)


@pytest.fixture(scope="module")
def exact_results():
    plan = paper_default_suite()
    results = {}
    for cid, params in plan:
        results[(cid, canonical_params(params))] = run_check(
            cid, params, RunOptions())
    return results


@contextlib.contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL")
        raise
    print(f"ACCEPTANCE {label}: PASS")


def _assert_all_hold(results, cid, param_dicts):
    for params in param_dicts:
        result = results[(cid, canonical_params(params))]
        assert result.status is Status.HOLDS, (
            f"{cid} {params}: {result.status.value} {result.witness}")


def test_criterion_1_phi_squared_congruence_grid(exact_results):
    with criterion("1 Phi_n^2 congruence grid"):
        _assert_all_hold(exact_results, "eq13",
                         [{"d": d, "n": n} for d, n in GRID_EQ13])
        _assert_all_hold(exact_results, "eq14",
                         [{"d": d, "n": n} for d, n in GRID_EQ14])
        _assert_all_hold(exact_results, "eq15",
                         [{"d": d, "n": n} for d, n in GRID_EQ15])
        _assert_all_hold(exact_results, "thm11",
                         [{"d": d, "n": n} for d, n in GRID_THM11])
        _assert_all_hold(exact_results, "thm12",
                         [{"d": d, "n": n} for d, n in GRID_THM12])
        _assert_all_hold(exact_results, "lemma21",
                         [{"d": d, "n": n, "r": r} for d, r, n in GRID_LEMMA21])
        _assert_all_hold(exact_results, "eq22",
                         [{"d": d, "n": n} for d, n in GRID_EQ22])
        _assert_all_hold(exact_results, "thm41",
                         [{"d": d, "n": n, "r": r} for d, r, n in GRID_THM41])
        _assert_all_hold(exact_results, "thm42",
                         [{"d": d, "n": n, "r": r} for d, r, n in GRID_THM42])


def test_criterion_2_bracket_squared_divisibility(exact_results):
    with criterion("2 divisibility by [n]^2"):
        _assert_all_hold(exact_results, "thm13",
                         [{"d": d, "n": n} for d, n in GRID_THM13])


def test_criterion_3_parametric_substitutions(exact_results):
    with criterion("3 parametric checks at a = q^(+-n) with a = 1 collapse"):
        for cid, grid in GRID_PARAMETRIC.items():
            _assert_all_hold(exact_results, cid,
                             [{"d": d, "n": n, "r": r} for d, r, n in grid])


def test_criterion_4_karlsson_minton(exact_results):
    with criterion("4 Karlsson-Minton exact random evaluation"):
        offsets = km_offset_lists()
        assert len(offsets) == 5 + 25 + 125
        _assert_all_hold(exact_results, "km",
                         [{"m": len(t), "n_list": t, "trials": 5, "seed": 42}
                          for t in offsets])


def test_criterion_5_qbinomial_vanishing(exact_results):
    with criterion("5 terminating q-binomial vanishing, n <= 30"):
        _assert_all_hold(exact_results, "qbinom_vanish",
                         [{"n": n} for n in range(1, QBINOM_MAX_N + 1)])


def test_criterion_6_proof_step_catalog(exact_results):
    with criterion("6 proof-step identity catalog"):
        step_counts = {}
        for (cid, _key), result in exact_results.items():
            if cid in ("ratio_shift_generic", "ratio_shift_central",
                       "qbinom_rewrite", "exponent_identity",
                       "sum_decomposition", "pochhammer_split_r1",
                       "pochhammer_split_general", "prefactor_divisibility",
                       "bracket_factorization"):
                assert result.status is Status.HOLDS, (cid, _key, result.witness)
                step_counts[cid] = step_counts.get(cid, 0) + 1
        assert step_counts["prefactor_divisibility"] == len(GRID_PREFACTOR)
        assert step_counts["bracket_factorization"] == 29
        assert step_counts["sum_decomposition"] == len(GRID_LEMMA21)
        for cid in ("ratio_shift_generic", "ratio_shift_central",
                    "qbinom_rewrite", "exponent_identity",
                    "pochhammer_split_r1", "pochhammer_split_general"):
            assert step_counts[cid] > 0


def test_criterion_7_padic_grid(exact_results):
    with criterion("7 classical checks mod p^2"):
        _assert_all_hold(exact_results, "rv_11",
                         [{"p": p} for p in GRID_RV11_PRIMES])
        _assert_all_hold(exact_results, "deines_12",
                         [{"d": d, "p": p} for d, p in GRID_DEINES])
        _assert_all_hold(exact_results, "cor41_i",
                         [{"d": d, "p": p, "r": r} for d, r, p in GRID_COR41_I])
        _assert_all_hold(exact_results, "cor41_ii",
                         [{"d": d, "p": p, "r": r} for d, r, p in GRID_COR41_II])
        _assert_all_hold(exact_results, "gamma_factorial",
                         [{"d": d, "p": p, "r": r}
                          for d, r, p in sorted(set(GRID_COR41_I) | set(GRID_COR41_II))])
        _assert_all_hold(exact_results, "wlt_integrality",
                         [{"d": d, "n": n} for d, n in GRID_WLT])


def test_criterion_8a_r1_collapse():
    with criterion("8a r = 1 collapse of the two-parameter closed forms"):
        pairs = [(3, 5, "eq14", "thm12"), (3, 8, "eq14", "thm12"),
                 (4, 7, "thm11", "eq15"), (5, 9, "eq14", "thm12"),
                 (4, 3, None, "eq15"), (3, 2, None, "thm12")]
        for d, n, mixed_id, squared_id in pairs:
            ring = ResidueRing(n, PHI_SQUARED)
            if mixed_id:
                assert rhs_closed_form("thm41", d, 1, n, ring) == \
                    rhs_closed_form(mixed_id, d, 1, n, ring)
            assert rhs_closed_form("thm42", d, 1, n, ring) == \
                rhs_closed_form(squared_id, d, 1, n, ring)


def test_criterion_8b_q1_specialization_matches_padic():
    with criterion("8b q = 1 specialization agrees with the mod-p^2 sums"):
        for d, r, p in ((3, 1, 5), (4, 1, 7), (5, 2, 13)):
            assert family_sum_at_one_mod(F5_THM41, d, r, p) == \
                classical_lhs_sum("thm41", d, r, p)
            assert family_sum_at_one_mod(F6_THM42, d, r, p) == \
                classical_lhs_sum("thm42", d, r, p)


def test_criterion_8c_incremental_vs_whole_sum_oracle():
    with criterion("8c incremental sums match the one-shot oracle, n <= 10"):
        from qsupercheck.families import theorem_family

        seen = 0
        grids = [("eq13", [(d, 1, n) for d, n in GRID_EQ13]),
                 ("eq14", [(d, 1, n) for d, n in GRID_EQ14]),
                 ("eq15", [(d, 1, n) for d, n in GRID_EQ15]),
                 ("thm11", [(d, 1, n) for d, n in GRID_THM11]),
                 ("thm12", [(d, 1, n) for d, n in GRID_THM12]),
                 ("lemma21", GRID_LEMMA21),
                 ("thm41", GRID_THM41),
                 ("thm42", GRID_THM42)]
        for cid, grid in grids:
            family = theorem_family(cid)
            for d, r, n in grid:
                if n > 10:
                    continue
                ring = ResidueRing(n, PHI_SQUARED)
                assert lhs_sum(family, d, r, n, ring) == \
                    lhs_sum_whole(family, d, r, n, ring), (cid, d, r, n)
                seen += 1
        assert seen >= 30


def test_criterion_8d_fast_mode_reproduces_statuses(exact_results):
    with criterion("8d fast prime-field mode reproduces every exact status"):
        opts = options_with_fast_mode(seed=42)
        for cid, params in paper_default_suite():
            fast = run_check(cid, params, opts)
            exact = exact_results[(cid, canonical_params(params))]
            assert fast.status is exact.status, (cid, params)


def test_criterion_9_mutation_harness():
    with criterion("9 negative controls: mutated closed forms must fail"):
        theorem_cases = [("eq13", 2, 1, 3), ("eq14", 3, 1, 5),
                         ("eq15", 4, 1, 3), ("thm11", 4, 1, 7),
                         ("thm12", 3, 1, 5), ("thm41", 5, 2, 8),
                         ("thm42", 3, 2, 4)]
        for cid, d, r, n in theorem_cases:
            for mutation in ("sign", "exponent"):
                result = verify_theorem(cid, d, n, r, mutation=mutation)
                assert result.status is Status.FAILS, (cid, mutation)
        parametric_cases = [("p3_32", 5, 1, 4), ("p4_33", 3, 1, 5),
                            ("p5_43", 4, 1, 7), ("p6_44", 2, 1, 3),
                            ("p7_45", 7, 3, 4), ("p8_46", 3, 1, 5)]
        for cid, d, r, n in parametric_cases:
            for mutation in ("sign", "exponent"):
                result = verify_parametric(cid, d, r, n, mutation=mutation)
                assert result.status is Status.FAILS, (cid, mutation)
