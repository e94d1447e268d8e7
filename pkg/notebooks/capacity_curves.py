"""
Capacity curves at locality 2
=============================

Shannon capacity and LRC capacity (exact for the BEC, bracketed for the
BSC). Writes the CSV data and, when matplotlib is present, a PNG.
"""

from pathlib import Path

from lrcap.cli import curve_rows, curves_csv, p_grid

out = Path(__file__).with_name("curves")
out.mkdir(exist_ok=True)

bec = curve_rows("bec", 2, p_grid(0, 1, 0.01, 1.0))
bsc = curve_rows("bsc", 2, p_grid(0, 0.5, 0.005, 0.5))
(out / "bec_r2.csv").write_text(curves_csv("bec", bec))
(out / "bsc_r2.csv").write_text(curves_csv("bsc", bsc))

gaps = [row.shannon_capacity - row.lrc_exact for row in bec]
print("largest BEC gap:", max(gaps), "at p =", bec[gaps.index(max(gaps))].p)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; CSV only")
else:
    fig, (a, b) = plt.subplots(1, 2, figsize=(9, 3.5))
    a.plot([r.p for r in bec], [r.shannon_capacity for r in bec], label="Shannon")
    a.plot([r.p for r in bec], [r.lrc_exact for r in bec], label="LRC, r=2")
    a.set_title("BEC")
    b.plot([r.p for r in bsc], [r.shannon_capacity for r in bsc], label="Shannon")
    b.plot([r.p for r in bsc], [r.lrc_upper for r in bsc], "--", label="LRC upper")
    b.plot([r.p for r in bsc], [r.lrc_lower for r in bsc], label="LRC lower")
    b.set_title("BSC")
    for ax in (a, b):
        ax.set_xlabel("p")
        ax.legend()
    fig.tight_layout()
    fig.savefig(out / "capacity_r2.png", dpi=120)
    print("wrote", out / "capacity_r2.png")
