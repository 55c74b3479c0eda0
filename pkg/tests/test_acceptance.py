"""Acceptance gate: one test per acceptance criterion.

Each test runs the full inventory of checks behind one criterion at its
stated tolerance, asserts every check passes, enforces the runtime budget,
and prints a single pass/fail line (visible with ``pytest -v`` as the test
outcome, and on stdout with ``-s``)."""

import time

from igusa.report import (
    SuiteRunner,
    census_suite,
    geometry_suite,
    lifting_suite,
    obstruction_suite,
    restriction_suite,
    weil_suite,
)


def _run_checks(suite_fn, check_ids, budget_seconds, label, **suite_kwargs):
    runner = SuiteRunner()
    start = time.perf_counter()
    suite_fn(runner, **suite_kwargs)
    elapsed = time.perf_counter() - start
    by_id = {c.id: c for c in runner.checks}
    missing = [cid for cid in check_ids if cid not in by_id]
    assert not missing, f"checks never ran: {missing}"
    failures = {
        cid: by_id[cid].actual
        for cid in check_ids
        if by_id[cid].status != "pass"
    }
    ok = not failures and elapsed < budget_seconds
    print(f"[{'PASS' if ok else 'FAIL'}] {label} "
          f"({len(check_ids)} checks, {elapsed:.2f}s / budget "
          f"{budget_seconds:.0f}s)")
    assert not failures, failures
    assert elapsed < budget_seconds, (
        f"{label} took {elapsed:.2f}s, budget {budget_seconds}s"
    )


def test_criterion_1_discriminant_census():
    _run_checks(
        census_suite,
        [
            "census-ambient-types",
            "census-member-types-mod-negation",
            "census-pairing-table",
        ],
        budget_seconds=1.0,
        label="criterion 1: type censuses (1,15,15,1,20,12) and "
              "(1,15,15,1,6,10) and the 72-entry pairing table, exact",
    )


def test_criterion_2_weil_representation():
    _run_checks(
        weil_suite,
        [
            "weil-image-group-order",
            "weil-conjugacy-traces",
            "weil-character-decomposition",
        ],
        budget_seconds=30.0,
        label="criterion 2: image group of order 48, traces "
              "(64,-64,0,0,-8i,8i,0,0,-1,1), multiplicities (1,5,5,6,10), "
              "exact",
    )


def test_criterion_3_theta_suite():
    _run_checks(
        weil_suite,
        [
            "weil-theta-eigenvalues",
            "weil-theta-reflections",
            "weil-theta-span-rank",
            "weil-theta-character-norm",
        ],
        budget_seconds=60.0,
        label="criterion 3: fifteen theta vectors, eigenvalue -i for S and "
              "T, reflection negation, rank 5, Frobenius norm 1 with "
              "central scalar -1",
    )


def test_criterion_4_obstruction_space():
    _run_checks(
        obstruction_suite,
        [
            "obstruction-collapsed-matrices",
            "obstruction-dimension-formula",
            "obstruction-eisenstein-dimension",
            "obstruction-cusp-dimension",
        ],
        budget_seconds=5.0,
        label="criterion 4: collapsed 6x6 matrices, dimension formula 2 via "
              "(3/2, 2, 2), Eisenstein dimension 2, cusp dimension 0, exact",
        tolerance=1e-6,
    )


def test_criterion_5_eisenstein_and_weights():
    _run_checks(
        obstruction_suite,
        [
            "eisenstein-leading-terms",
            "eisenstein-numeric-oracle",
            "borcherds-weights",
        ],
        budget_seconds=60.0,
        label="criterion 5: leading expansions exact, double-sum oracle at "
              "the imaginary unit to 1e-6 relative, product weights "
              "(4, 10, 30, 48)",
        tolerance=1e-6,
    )


def test_criterion_6_lifting():
    _run_checks(
        lifting_suite,
        [
            "lifting-eta-product-oracle",
            "lifting-multiplier-compatibility",
            "lifting-fixture-support",
            "lifting-leading-coefficient",
            "lifting-theta0-identities",
        ],
        budget_seconds=5.0,
        label="criterion 6: eta powers 18 and 6 vs the product oracle to 30 "
              "terms, multiplier pairings pass/fail as stated, fixture "
              "support and nonzero leading lift coefficient, weight-1 "
              "identities exact",
        terms=30,
    )


def test_criterion_7_restriction():
    _run_checks(
        restriction_suite,
        [
            "restriction-embedding",
            "restriction-heegner-cases",
            "restriction-v1-images",
            "restriction-seven-lines",
            "restriction-boundary-configuration",
        ],
        budget_seconds=60.0,
        label="criterion 7: exact embedding, divisor cases over box "
              "half-widths 3-5 with zero counterexamples and multiplicity-2 "
              "pairing, fifteen distinct image subspaces, seven lines each, "
              "3-regular incidence",
        box=5,
    )


def test_criterion_8_geometry():
    _run_checks(
        geometry_suite,
        [
            "geometry-fifteen-lines",
            "geometry-incidence-153",
            "geometry-singular-gradients",
            "geometry-cubic-span-rank",
            "geometry-cubic-base-locus",
            "geometry-s6-equivariance",
            "geometry-image-cubic-relation",
            "geometry-witness-composition",
            "geometry-degree16",
        ],
        budget_seconds=120.0,
        label="criterion 8: fifteen lines on the quartic, 3-regular "
              "incidence, gradient identity, cubic span rank 5, unique "
              "image relation with 50-sample holdout, degree-16 count at "
              "tolerances 1e-9 and 1e-6 in at least 95% of 20 seeded trials",
        trials=20,
        seed=0,
    )
