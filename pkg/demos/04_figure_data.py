"""Produce the figure datasets and sweep CSV from Python (same machinery
as the `besselq figures` / `besselq sweep` commands).

Run:  python demos/04_figure_data.py
Then: gnuplot demo_output/fig2_loglog.gp   (if gnuplot is installed)
"""

from pathlib import Path

from besselq.cli import FrequencyGrid, emit_figures, evaluate_sweep, write_sweep_csv
from besselq.policy import DEFAULT_CROSSOVER_OMEGA, DEFAULT_POLICY

outdir = Path("demo_output")

# --- the four figure datasets + gnuplot scripts -------------------------------
written = emit_figures(outdir, [-0.5, 0.0, 1.0, 2.0, 5.0], DEFAULT_POLICY, DEFAULT_CROSSOVER_OMEGA)
for path in written:
    print("wrote", path)

# --- a custom sweep -------------------------------------------------------------
grid = FrequencyGrid("log", 1e-4, 1e5, 181)
records = evaluate_sweep([0.0, 2.0], grid, DEFAULT_POLICY, DEFAULT_CROSSOVER_OMEGA)
write_sweep_csv(records, outdir / "sweep.csv")
print(f"wrote {outdir / 'sweep.csv'} ({len(records)} rows)")

# route switches exactly once per order, low->high frequency
routes = [r.route for r in records if r.nu == 0.0]
switch = next(i for i in range(1, len(routes)) if routes[i] != routes[i - 1])
print(f"route switches {routes[switch-1]} -> {routes[switch]} at row {switch}")
