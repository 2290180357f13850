"""Acceptance suite: one test per release criterion, each printing a verdict.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines.
The production grid (600 interaction times at s=1.2, theta=pi, n_max=80) is
computed once per session and shared across the criteria that consume it.
"""

import math
import time

import numpy as np
import pytest

from cavity3q import (
    FieldConfig,
    QubitLabel,
    W1_STATE,
    analytic_negativity_b,
    closed_form_rho,
    compare_states,
    decompose,
    full_evolution,
    global_negativity,
    negative_eigensum,
    negativity_report,
    partial_kway_negativity,
    partial_transpose_global,
    partial_transpose_kway,
    selective_partial_transpose,
)
from cavity3q.cli import (
    ORACLE_CHECK_SQUEEZES,
    ORACLE_CHECK_TAUS,
    ORACLE_CHECK_THETAS,
    SweepConfig,
    run_tau_sweep,
)

A1, A2, B = QubitLabel.A1, QubitLabel.A2, QubitLabel.B

PRODUCTION_FIELD = FieldConfig(1.2, math.pi, 80)
TAU_GRID = [i * 20.0 / 599 for i in range(600)]


def _passed(line: str) -> None:
    print(f"ACCEPTANCE PASS: {line}")


@pytest.fixture(scope="module")
def production_data():
    """Diagnostics on the 600-point production interaction-time grid."""
    states = []
    reports = []
    for tau in TAU_GRID:
        rho = closed_form_rho(tau, PRODUCTION_FIELD)
        states.append(rho)
        reports.append(negativity_report(rho))
    return states, reports


def test_criterion_1_oracle_equivalence():
    start = time.time()
    worst = 0.0
    worst_point = None
    for theta in ORACLE_CHECK_THETAS:
        for s in ORACLE_CHECK_SQUEEZES:
            field = FieldConfig(s, theta, 40)
            for tau in ORACLE_CHECK_TAUS:
                report = compare_states(closed_form_rho(tau, field), full_evolution(field, tau))
                if report.max_abs_diff > worst:
                    worst = report.max_abs_diff
                    worst_point = (tau, s, theta)
                assert report.max_abs_diff < 1e-8, (tau, s, theta, report.max_abs_diff)
                assert not report.pattern_violations, (tau, s, theta)
    elapsed = time.time() - start
    assert elapsed < 120.0
    _passed(
        f"1 oracle equivalence on 36-point grid, max |diff| = {worst:.3e} "
        f"at {worst_point}, {elapsed:.1f}s"
    )


def test_criterion_2_ground_state_probability_anchor():
    rho = closed_form_rho(0.8, PRODUCTION_FIELD)
    p1 = float(np.real(rho.matrix[0, 0]))
    assert p1 == pytest.approx(0.34, abs=0.01)
    _passed(f"2 ground-state probability at tau=0.8 is {p1:.4f} (0.34 +/- 0.01)")


def test_criterion_3_bound_entanglement_window(production_data):
    _, reports = production_data
    flags = [
        (r.n_g[B] < 1e-6) and (r.n_psdg[B] > 0.01) and (r.linear_entropy_b > 0.01)
        for r in reports
    ]
    best_len, best_start, run, run_start = 0, 0, 0, 0
    for i, flag in enumerate(flags):
        if flag:
            if run == 0:
                run_start = i
            run += 1
            if run > best_len:
                best_len, best_start = run, run_start
        else:
            run = 0
    width = (best_len - 1) * 20.0 / 599 if best_len > 1 else 0.0
    assert width >= 0.1, f"widest window only {width:.3f}"
    lo = TAU_GRID[best_start]
    hi = TAU_GRID[best_start + best_len - 1]
    _passed(
        f"3 bound-entanglement window of width {width:.2f} on tau in "
        f"[{lo:.2f}, {hi:.2f}] with N_G^B < 1e-6, N_PSDG^B > 0.01, S_l^B > 0.01"
    )


def test_criterion_4_no_ghz_like_coherences(production_data):
    states, reports = production_data
    worst_mixed = max(r.e_3[B] for r in reports)
    assert worst_mixed < 1e-10
    worst_pure = 0.0
    for rho in states[::3]:
        for prob, vec in decompose(rho):
            if prob <= 1e-15:
                continue
            state = np.outer(vec, vec.conj())
            for p in QubitLabel:
                worst_pure = max(worst_pure, abs(partial_kway_negativity(state, p, 3)))
    assert worst_pure < 1e-10
    _passed(
        f"4 no GHZ-like coherences: max E_3^B = {worst_mixed:.2e}, "
        f"max pure-state 3-way contribution = {worst_pure:.2e}"
    )


def test_criterion_5_squeeze_sweep_peaks():
    s_grid = [i * 2.0 / 199 for i in range(200)]
    n_psdg_b = []
    n_psdg_a1 = []
    for s in s_grid:
        report = negativity_report(closed_form_rho(14.5, FieldConfig(s, math.pi, 80)))
        n_psdg_b.append(report.n_psdg[B])
        n_psdg_a1.append(report.n_psdg[A1])
    peak_b = s_grid[int(np.argmax(n_psdg_b))]
    peak_a1 = s_grid[int(np.argmax(n_psdg_a1))]
    assert 0.90 <= peak_b <= 1.00, peak_b
    assert 0.99 <= peak_a1 <= 1.09, peak_a1
    _passed(f"5 squeeze-sweep peaks at tau=14.5: N_PSDG^B at s={peak_b:.3f}, N_PSDG^A1 at s={peak_a1:.3f}")


def test_criterion_6_identity_suite(production_data):
    states, reports = production_data
    sample = states[::10]

    # exact matrix identities on the physical states
    for rho in sample:
        m = rho.matrix
        for p in QubitLabel:
            residual = np.abs(
                partial_transpose_kway(m, p, 3)
                + partial_transpose_kway(m, p, 2)
                - m
                - partial_transpose_global(m, p)
            ).max()
            assert residual < 1e-14
        res_b = np.abs(
            selective_partial_transpose(m, "B-BA1")
            + selective_partial_transpose(m, "B-BA2")
            - m
            - partial_transpose_kway(m, B, 2)
        ).max()
        res_a = np.abs(
            selective_partial_transpose(m, "A1-A1B")
            + selective_partial_transpose(m, "A1-A1A2")
            - m
            - partial_transpose_kway(m, A1, 2)
        ).max()
        assert res_b < 1e-14 and res_a < 1e-14

    # negativity splits and swap symmetry
    for rho, report in zip(states[::10], reports[::10]):
        for p in QubitLabel:
            split = report.e_3[p] + report.e_2[p] - report.e_0[p]
            assert report.n_g[p] == pytest.approx(split, abs=1e-10)
        assert report.n_psdg[B] == pytest.approx(
            report.e_psd["B-BA1"] + report.e_psd["B-BA2"], abs=1e-10
        )
        assert report.n_psdg[A1] == pytest.approx(
            report.e_psd["A1-A1A2"] + report.e_psd["A1-A1B"], abs=1e-10
        )
        assert report.n_g[A1] == pytest.approx(report.n_g[A2], abs=1e-10)
        assert report.n_psdg[A1] == pytest.approx(report.n_psdg[A2], abs=1e-10)
        for k in ("e_3", "e_2", "e_0"):
            values = getattr(report, k)
            assert values[A1] == pytest.approx(values[A2], abs=1e-10)
        assert report.e_psd["B-BA1"] == pytest.approx(report.e_psd["B-BA2"], abs=1e-10)

    # transpose invariants on 500 random mixed states
    rng = np.random.default_rng(2024)
    for _ in range(500):
        a = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
        m = a @ a.conj().T
        m /= np.real(np.trace(m))
        trans = [partial_transpose_global(m, p) for p in QubitLabel]
        trans += [partial_transpose_kway(m, p, k) for p in QubitLabel for k in (2, 3)]
        trans += [selective_partial_transpose(m, spec) for spec in ("B-BA1", "B-BA2", "A1-A1A2", "A1-A1B")]
        for t in trans:
            assert np.abs(t - t.conj().T).max() < 1e-14
            assert abs(np.trace(t) - np.trace(m)) < 1e-14
        for p in QubitLabel:
            assert np.array_equal(
                partial_transpose_global(partial_transpose_global(m, p), p), m
            )
    _passed("6 identity suite: transpose identities, negativity splits, swap symmetry, 500 random states")


def test_criterion_7_known_state_values():
    bell = np.zeros(8, dtype=complex)
    bell[0] = bell[5] = 1.0 / math.sqrt(2.0)
    bell_neg = negative_eigensum(partial_transpose_global(np.outer(bell, bell.conj()), B))
    assert bell_neg == pytest.approx(1.0, abs=1e-10)

    w_neg = global_negativity(np.outer(W1_STATE, W1_STATE.conj()), B)
    assert w_neg == pytest.approx(2.0 * math.sqrt(2.0) / 3.0, abs=1e-10)

    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = 1.0 / math.sqrt(2.0)
    ghz_e3 = partial_kway_negativity(np.outer(ghz, ghz.conj()), B, 3)
    assert ghz_e3 == pytest.approx(1.0, abs=1e-10)
    _passed(
        f"7 known states: Bell negativity {bell_neg:.12f}, W negativity {w_neg:.12f} "
        f"(2*sqrt(2)/3), GHZ three-way {ghz_e3:.12f}"
    )


def test_criterion_8_analytic_negativity_gate(production_data):
    states, reports = production_data
    worst = 0.0
    for rho, report in zip(states, reports):
        worst = max(worst, abs(report.n_g_b_analytic - report.n_g[B]))
    # also off the production angle, where every index range is exercised
    for theta in ORACLE_CHECK_THETAS:
        for s in ORACLE_CHECK_SQUEEZES:
            field = FieldConfig(s, theta, 40)
            for tau in ORACLE_CHECK_TAUS:
                rho = closed_form_rho(tau, field)
                worst = max(worst, abs(analytic_negativity_b(rho) - global_negativity(rho, B)))
    assert worst < 1e-10
    _passed(f"8 analytic negativity equals eigensolver negativity, max |diff| = {worst:.2e}")


def test_criterion_9_production_sweep_determinism():
    cfg = SweepConfig(mode="tau-sweep")  # defaults are the production settings
    start = time.time()
    first = run_tau_sweep(cfg)
    second = run_tau_sweep(cfg)
    elapsed = time.time() - start
    assert first.encode() == second.encode()
    assert elapsed < 600.0
    rows = [line for line in first.splitlines() if line and not line.startswith("#")]
    assert len(rows) == 601  # header + 600 points
    _passed(f"9 production sweep (2 runs of 600 points) byte-identical in {elapsed:.1f}s")
