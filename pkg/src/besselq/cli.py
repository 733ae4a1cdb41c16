"""Command-line interface: frequency sweeps, figure datasets, verification.

Subcommands
-----------
``sweep``    Evaluate Q^-1 over a frequency grid for one or more orders and
             write a CSV (one row per grid point per order).
``figures``  Emit the four standard datasets (linear overview, log-log
             overview, high-frequency asymptote comparison, low-frequency
             asymptote comparison) plus gnuplot scripts that reference each
             CSV by relative path.
``check``    Run the cross-method verification suites and exit nonzero on
             the first violated bound.

All numeric CSV fields use 17-significant-digit scientific notation with a
decimal point (locale independent), and commands are deterministic for
fixed flags: rerunning produces byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import BesselQError, DomainError
from .checks import run_all_checks
from .model import ModelOrder
from .policy import DEFAULT_CROSSOVER_OMEGA, SeriesPolicy
from .qfactor import QEvaluation, q_inverse, q_inverse_asymptotic

SWEEP_HEADER = "omega,nu,q_inverse,route,est_rel_error,q_asymp_low,q_asymp_high"

#: Default order set for the figure datasets (overridable with --nu).
FIGURE_NUS = (-0.5, 0.0, 1.0, 2.0, 5.0)
#: Orders shown in the two asymptote-comparison panels.
ASYMPTOTE_PANEL_NUS = (0.0, 2.0)


@dataclass(frozen=True)
class FrequencyGrid:
    """Linear or logarithmic frequency sweep specification."""

    scale: str  # 'linear' | 'log'
    min: float
    max: float
    count: int

    def __post_init__(self) -> None:
        if self.scale not in ("linear", "log"):
            raise DomainError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if not (self.min > 0.0 and self.max > self.min):
            raise DomainError(
                f"need 0 < min < max, got min={self.min}, max={self.max}"
            )
        if self.count < 2:
            raise DomainError(f"count must be >= 2, got {self.count}")

    def points(self) -> np.ndarray:
        if self.scale == "linear":
            return np.linspace(self.min, self.max, self.count)
        return np.logspace(math.log10(self.min), math.log10(self.max), self.count)


@dataclass(frozen=True)
class SweepRecord:
    """One CSV row of a frequency sweep."""

    omega: float
    nu: float
    q_inverse: float
    route: str
    est_rel_error: float
    q_asymp_low: float
    q_asymp_high: float

    def as_csv(self) -> str:
        return ",".join(
            [
                _fmt(self.omega),
                _fmt(self.nu),
                _fmt(self.q_inverse),
                self.route,
                _fmt(self.est_rel_error),
                _fmt(self.q_asymp_low),
                _fmt(self.q_asymp_high),
            ]
        )


def _fmt(value: float) -> str:
    if not math.isfinite(value):
        raise BesselQError(f"non-finite value reached the CSV writer: {value}")
    return format(value, ".16e")


def evaluate_sweep(
    nus: Sequence[float],
    grid: FrequencyGrid,
    policy: SeriesPolicy,
    crossover_omega: float,
) -> list[SweepRecord]:
    records: list[SweepRecord] = []
    for nu in nus:
        model = ModelOrder(nu)
        for omega in grid.points():
            ev: QEvaluation = q_inverse(model, float(omega), policy, crossover_omega)
            records.append(
                SweepRecord(
                    omega=ev.omega,
                    nu=nu,
                    q_inverse=ev.q_inverse,
                    route=ev.route,
                    est_rel_error=ev.est_rel_error,
                    q_asymp_low=q_inverse_asymptotic(model, ev.omega, "low"),
                    q_asymp_high=q_inverse_asymptotic(model, ev.omega, "high"),
                )
            )
    return records


def write_sweep_csv(records: Iterable[SweepRecord], path: Path) -> None:
    lines = [SWEEP_HEADER] + [r.as_csv() for r in records]
    path.write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


def _write_table(path: Path, header: Sequence[str], columns: Sequence[np.ndarray]) -> None:
    rows = [",".join(header)]
    for i in range(len(columns[0])):
        rows.append(",".join(_fmt(float(col[i])) for col in columns))
    path.write_text("\n".join(rows) + "\n", encoding="ascii", newline="\n")


def _gnuplot_script(
    csv_name: str,
    png_name: str,
    title: str,
    logscale: bool,
    series: Sequence[tuple[int, str, str]],
) -> str:
    lines = [
        "# gnuplot script (plain text); run:  gnuplot " + png_name.replace(".png", ".gp"),
        "set datafile separator ','",
        "set terminal pngcairo size 960,640",
        f"set output '{png_name}'",
        f"set title '{title}'",
        "set xlabel 'omega'",
        "set ylabel 'Q^{-1}'",
        "set key top right",
    ]
    if logscale:
        lines.append("set logscale xy")
    plots = [
        f"'{csv_name}' every ::1 using 1:{col} with lines {style} title '{label}'"
        for col, label, style in series
    ]
    lines.append("plot \\\n    " + ", \\\n    ".join(plots))
    return "\n".join(lines) + "\n"


def emit_figures(
    outdir: Path,
    nus: Sequence[float],
    policy: SeriesPolicy,
    crossover_omega: float,
) -> list[Path]:
    """Write the four figure datasets and their gnuplot scripts."""
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def q_column(nu: float, omegas: np.ndarray) -> np.ndarray:
        model = ModelOrder(nu)
        return np.array(
            [q_inverse(model, float(w), policy, crossover_omega).q_inverse for w in omegas]
        )

    # figure 1: linear-scale overview; the steep low-frequency rise needs a
    # window starting well below omega ~ 1
    omegas = FrequencyGrid("linear", 0.05, 20.0, 400).points()
    header = ["omega"] + [f"q_nu_{nu:g}" for nu in nus]
    cols = [omegas] + [q_column(nu, omegas) for nu in nus]
    csv = outdir / "fig1_linear.csv"
    _write_table(csv, header, cols)
    series = [(i + 2, f"nu={nu:g}", "lw 2") for i, nu in enumerate(nus)]
    gp = outdir / "fig1_linear.gp"
    gp.write_text(
        _gnuplot_script(csv.name, "fig1_linear.png", "Q^{-1}(omega), linear scale", False, series),
        encoding="ascii",
        newline="\n",
    )
    written += [csv, gp]

    # figure 2: log-log overview across nine decades
    omegas = FrequencyGrid("log", 1e-4, 1e5, 181).points()
    cols = [omegas] + [q_column(nu, omegas) for nu in nus]
    csv = outdir / "fig2_loglog.csv"
    _write_table(csv, header, cols)
    gp = outdir / "fig2_loglog.gp"
    gp.write_text(
        _gnuplot_script(csv.name, "fig2_loglog.png", "Q^{-1}(omega), log-log", True, series),
        encoding="ascii",
        newline="\n",
    )
    written += [csv, gp]

    # figures 3 and 4: full curve against each asymptote, two orders per panel
    for tag, regime, grid in (
        ("fig3_high_asymptote", "high", FrequencyGrid("log", 10.0, 1e6, 121)),
        ("fig4_low_asymptote", "low", FrequencyGrid("log", 1e-4, 10.0, 121)),
    ):
        omegas = grid.points()
        header34 = ["omega"]
        cols34: list[np.ndarray] = [omegas]
        series34 = []
        col = 2
        for nu in ASYMPTOTE_PANEL_NUS:
            model = ModelOrder(nu)
            header34 += [f"q_nu_{nu:g}", f"asymp_nu_{nu:g}"]
            cols34.append(q_column(nu, omegas))
            cols34.append(
                np.array([q_inverse_asymptotic(model, float(w), regime) for w in omegas])
            )
            series34.append((col, f"nu={nu:g}", "lw 2"))
            series34.append((col + 1, f"nu={nu:g} asymptote", "dashtype 2"))
            col += 2
        csv = outdir / f"{tag}.csv"
        _write_table(csv, header34, cols34)
        gp = outdir / f"{tag}.gp"
        direction = "omega -> inf" if regime == "high" else "omega -> 0"
        gp.write_text(
            _gnuplot_script(csv.name, f"{tag}.png", f"Q^{{-1}} vs asymptote ({direction})", True, series34),
            encoding="ascii",
            newline="\n",
        )
        written += [csv, gp]
    return written


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--crossover",
        type=float,
        default=DEFAULT_CROSSOVER_OMEGA,
        metavar="OMEGA",
        help="route crossover frequency (default %(default)s)",
    )
    parser.add_argument(
        "--rel-tol",
        type=float,
        default=1e-15,
        metavar="X",
        help="series truncation tolerance (default %(default)s)",
    )


def _policy_from(args: argparse.Namespace) -> SeriesPolicy:
    return SeriesPolicy(rel_tol=args.rel_tol)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselq",
        description="Quality factor of Bessel-type viscoelastic media",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate Q^-1 over a frequency grid")
    p_sweep.add_argument("--nu", type=float, nargs="+", required=True, help="model orders (> -1)")
    scale = p_sweep.add_mutually_exclusive_group(required=True)
    scale.add_argument("--linear", type=float, nargs=2, metavar=("A", "B"))
    scale.add_argument("--log", type=float, nargs=2, metavar=("A", "B"))
    p_sweep.add_argument("--count", type=int, default=181)
    p_sweep.add_argument("--out", type=Path, default=Path("sweep.csv"))
    _add_common_flags(p_sweep)

    p_fig = sub.add_parser("figures", help="emit figure datasets and plot scripts")
    p_fig.add_argument("--nu", type=float, nargs="+", default=list(FIGURE_NUS))
    p_fig.add_argument("--out", type=Path, default=Path("figures"))
    _add_common_flags(p_fig)

    p_check = sub.add_parser("check", help="run cross-method verification suites")
    p_check.add_argument(
        "--nu", type=float, nargs="+", default=[-0.5, 0.0, 1.0, 3.5, 10.0]
    )
    _add_common_flags(p_check)
    return parser


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.linear is not None:
        grid = FrequencyGrid("linear", args.linear[0], args.linear[1], args.count)
    else:
        grid = FrequencyGrid("log", args.log[0], args.log[1], args.count)
    records = evaluate_sweep(args.nu, grid, _policy_from(args), args.crossover)
    write_sweep_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def cmd_figures(args: argparse.Namespace) -> int:
    written = emit_figures(args.out, args.nu, _policy_from(args), args.crossover)
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    results = run_all_checks(args.nu, _policy_from(args), args.crossover)
    for result in results:
        print(result.summary())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"FAILED: {failed[0].name}", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return cmd_sweep(args)
        if args.command == "figures":
            return cmd_figures(args)
        return cmd_check(args)
    except BesselQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
