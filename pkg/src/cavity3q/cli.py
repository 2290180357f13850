"""Command-line sweeps, figure-data generation and oracle validation.

Modes:
  tau-sweep     one CSV row of diagnostics per interaction time
  s-sweep       one row per squeeze parameter at fixed interaction time
  single-point  a single row at --tau
  oracle-check  closed forms against brute-force evolution on a fixed grid

CSV output carries a '#' header block recording the full configuration and
uses 12-significant-digit formatting, so identical configurations produce
byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from .entanglement import QubitLabel, negativity_report
from .fock_field import FieldConfig, truncation_deficit
from .oracle import compare_states, full_evolution
from .tavis_cummings import closed_form_rho, diagonal_probabilities

__all__ = [
    "SweepConfig",
    "COLUMNS",
    "evaluate_point",
    "run_tau_sweep",
    "run_s_sweep",
    "run_single_point",
    "run_oracle_check",
    "ORACLE_CHECK_TAUS",
    "ORACLE_CHECK_SQUEEZES",
    "ORACLE_CHECK_THETAS",
    "main",
]

COLUMNS = [
    "tau",
    "s",
    "P1",
    "P2",
    "P3",
    "P4",
    "P5",
    "P6",
    "P7",
    "P8",
    "N_G_B",
    "N_G_B_analytic",
    "N_PSDG_B",
    "N_PSDG_A1",
    "E3_B",
    "E_PSD_B_BA1",
    "E_PSD_A1_A1A2",
    "E_PSD_A1_A1B",
    "S_lin_B",
    "F_W1",
    "bell_projection",
    "truncation_deficit",
]

ORACLE_CHECK_TAUS = (0.3, 0.8, 2.0, 14.5)
ORACLE_CHECK_SQUEEZES = (0.3, 0.6, 0.9)
ORACLE_CHECK_THETAS = (math.pi / 3.0, math.pi / 2.0, math.pi)


@dataclass(frozen=True)
class SweepConfig:
    mode: str = "tau-sweep"
    s: float = 1.2
    theta: float = math.pi
    n_max: int = 80
    tau_start: float = 0.0
    tau_end: float = 20.0
    tau_steps: int = 600
    s_start: float = 0.0
    s_end: float = 2.0
    s_steps: int = 200
    tau: float = 14.5
    out: str = "-"
    oracle_n_max: int = 40
    tolerance: float = 1e-8

    def __post_init__(self) -> None:
        if self.mode not in ("tau-sweep", "s-sweep", "single-point", "oracle-check"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.tau_steps < 1 or self.s_steps < 1:
            raise ValueError("step counts must be >= 1")
        if self.tau_end < self.tau_start or self.s_end < self.s_start:
            raise ValueError("sweep ranges must be non-empty")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")


def _fmt(value: float) -> str:
    return f"{value + 0.0:.12g}"  # + 0.0 turns IEEE negative zero into plain 0


def _grid(start: float, end: float, steps: int) -> list[float]:
    if steps == 1:
        return [start]
    return [start + i * (end - start) / (steps - 1) for i in range(steps)]


def evaluate_point(tau: float, field: FieldConfig) -> list[float]:
    """All CSV column values at one (tau, field configuration) point."""
    rho = closed_form_rho(tau, field)
    probs = diagonal_probabilities(rho)
    report = negativity_report(rho)
    return [
        tau,
        field.s,
        *(float(p) for p in probs),
        report.n_g[QubitLabel.B],
        report.n_g_b_analytic,
        report.n_psdg[QubitLabel.B],
        report.n_psdg[QubitLabel.A1],
        report.e_3[QubitLabel.B],
        report.e_psd["B-BA1"],
        report.e_psd["A1-A1A2"],
        report.e_psd["A1-A1B"],
        report.linear_entropy_b,
        report.w1_fidelity,
        report.bell_projection,
        truncation_deficit(field),
    ]


def _csv_text(cfg: SweepConfig, header_extra: list[str], rows: list[list[float]]) -> str:
    lines = [
        "# cavity3q sweep",
        f"# mode={cfg.mode} s={_fmt(cfg.s)} theta={_fmt(cfg.theta)} n_max={cfg.n_max}",
        *header_extra,
        "# columns: " + ",".join(COLUMNS),
        ",".join(COLUMNS),
    ]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def run_tau_sweep(cfg: SweepConfig) -> str:
    field = FieldConfig(cfg.s, cfg.theta, cfg.n_max)
    rows = [evaluate_point(tau, field) for tau in _grid(cfg.tau_start, cfg.tau_end, cfg.tau_steps)]
    extra = [
        f"# tau_start={_fmt(cfg.tau_start)} tau_end={_fmt(cfg.tau_end)} tau_steps={cfg.tau_steps}"
    ]
    return _csv_text(cfg, extra, rows)


def run_s_sweep(cfg: SweepConfig) -> str:
    rows = []
    for s in _grid(cfg.s_start, cfg.s_end, cfg.s_steps):
        rows.append(evaluate_point(cfg.tau, FieldConfig(s, cfg.theta, cfg.n_max)))
    extra = [
        f"# tau={_fmt(cfg.tau)} s_start={_fmt(cfg.s_start)} s_end={_fmt(cfg.s_end)} s_steps={cfg.s_steps}"
    ]
    return _csv_text(cfg, extra, rows)


def run_single_point(cfg: SweepConfig) -> str:
    field = FieldConfig(cfg.s, cfg.theta, cfg.n_max)
    rows = [evaluate_point(cfg.tau, field)]
    return _csv_text(cfg, [f"# tau={_fmt(cfg.tau)}"], rows)


def run_oracle_check(cfg: SweepConfig, corrupt=None) -> tuple[str, int]:
    """Closed form versus brute force on the fixed validation grid.

    Returns the report text and an exit status (0 all within tolerance,
    1 otherwise).  ``corrupt``, used by the test suite, post-processes each
    closed-form matrix before comparison to prove the check can fail.
    """
    if cfg.oracle_n_max > 40:
        raise ValueError("oracle-check is limited to n_max <= 40")
    lines = [
        "# cavity3q oracle-check",
        f"# n_max={cfg.oracle_n_max} tolerance={_fmt(cfg.tolerance)}",
        "# tau s theta max_abs_diff status",
    ]
    failures = []
    worst = 0.0
    for theta in ORACLE_CHECK_THETAS:
        for s in ORACLE_CHECK_SQUEEZES:
            field = FieldConfig(s, theta, cfg.oracle_n_max)
            for tau in ORACLE_CHECK_TAUS:
                closed = closed_form_rho(tau, field).matrix
                if corrupt is not None:
                    closed = corrupt(closed.copy())
                reference = full_evolution(field, tau)
                report = compare_states(closed, reference)
                ok = report.max_abs_diff < cfg.tolerance
                worst = max(worst, report.max_abs_diff)
                status = "ok" if ok else "FAIL"
                lines.append(
                    f"{_fmt(tau)} {_fmt(s)} {_fmt(theta)} {_fmt(report.max_abs_diff)} {status}"
                )
                if not ok:
                    i, j = report.worst_entry
                    failures.append(
                        f"# DISCREPANCY tau={_fmt(tau)} s={_fmt(s)} theta={_fmt(theta)} "
                        f"entry=[{i},{j}] closed={closed[i, j]:.12g} reference={reference.matrix[i, j]:.12g}"
                    )
                for i, j, va, vb in report.pattern_violations:
                    failures.append(
                        f"# PATTERN tau={_fmt(tau)} s={_fmt(s)} theta={_fmt(theta)} "
                        f"entry=[{i},{j}] closed={va:.12g} reference={vb:.12g}"
                    )
    lines.extend(failures)
    status = 0 if not failures else 1
    lines.append(f"# result: {'PASS' if status == 0 else 'FAIL'} max_abs_diff={_fmt(worst)}")
    return "\n".join(lines) + "\n", status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cavity3q",
        description="Entanglement diagnostics for three cavity qubits driven by squeezed light.",
    )
    parser.add_argument(
        "--mode",
        choices=["tau-sweep", "s-sweep", "single-point", "oracle-check"],
        default="tau-sweep",
    )
    parser.add_argument("--s", type=float, default=1.2, help="squeeze parameter")
    parser.add_argument("--theta", type=float, default=math.pi, help="beam-splitter angle, radians")
    parser.add_argument("--n-max", type=int, default=80, help="Fock truncation")
    parser.add_argument("--tau-start", type=float, default=0.0)
    parser.add_argument("--tau-end", type=float, default=20.0)
    parser.add_argument("--tau-steps", type=int, default=600)
    parser.add_argument("--s-start", type=float, default=0.0)
    parser.add_argument("--s-end", type=float, default=2.0)
    parser.add_argument("--s-steps", type=int, default=200)
    parser.add_argument("--tau", type=float, default=14.5, help="interaction time for s-sweep/single-point")
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    parser.add_argument("--oracle-n-max", type=int, default=40)
    parser.add_argument("--tolerance", type=float, default=1e-8)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = SweepConfig(
            mode=args.mode,
            s=args.s,
            theta=args.theta,
            n_max=args.n_max,
            tau_start=args.tau_start,
            tau_end=args.tau_end,
            tau_steps=args.tau_steps,
            s_start=args.s_start,
            s_end=args.s_end,
            s_steps=args.s_steps,
            tau=args.tau,
            out=args.out,
            oracle_n_max=args.oracle_n_max,
            tolerance=args.tolerance,
        )
        if cfg.mode == "tau-sweep":
            text, status = run_tau_sweep(cfg), 0
        elif cfg.mode == "s-sweep":
            text, status = run_s_sweep(cfg), 0
        elif cfg.mode == "single-point":
            text, status = run_single_point(cfg), 0
        else:
            text, status = run_oracle_check(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if cfg.out == "-":
            sys.stdout.write(text)
        else:
            with open(cfg.out, "w", encoding="utf-8") as handle:
                handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {cfg.out}: {exc}", file=sys.stderr)
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
