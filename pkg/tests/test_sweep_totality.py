"""Rectangular sweeps are total: every instance yields a status, never a crash."""

from qsupercheck.catalog import REGISTRY, RunOptions, run_check
from qsupercheck.results import Status


def test_rectangular_grid_is_total():
    options = RunOptions()
    ids = ["eq13", "eq14", "eq15", "thm11", "thm12", "lemma21", "thm41",
           "thm42", "thm13", "p1_24", "p4_33", "p6_44", "p8_46"]
    statuses = set()
    for cid in ids:
        needs_r = "r" in REGISTRY[cid].param_names
        for d in range(2, 6):
            for n in range(2, 8):
                for r in (range(1, 4) if needs_r else (1,)):
                    params = {"d": d, "n": n}
                    if needs_r:
                        params["r"] = r
                    result = run_check(cid, params, options)
                    statuses.add(result.status)
                    assert result.status in (Status.HOLDS,
                                             Status.SKIPPED_PRECONDITION), (
                        cid, params, result.witness)
    assert Status.HOLDS in statuses
    assert Status.SKIPPED_PRECONDITION in statuses


def test_out_of_catalog_instances_also_hold():
    # Spot instances beyond the acceptance grids.
    cases = [("eq14", {"d": 7, "n": 13}),
             ("eq13", {"d": 6, "n": 7}),
             ("thm42", {"d": 6, "r": 5, "n": 7}),
             ("lemma21", {"d": 8, "r": 3, "n": 13}),
             ("p5_43", {"d": 6, "r": 1, "n": 5}),
             ("km", {"n_list": (3, 2), "trials": 2, "seed": 5})]
    for cid, params in cases:
        result = run_check(cid, params, RunOptions())
        assert result.status is Status.HOLDS, (cid, params, result.witness,
                                               result.note)
