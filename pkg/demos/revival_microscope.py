"""Zoom into the first revival: smooth lobe vs Rabi-scale oscillation.

On the coarse overview plot the exact curve and the closed form look
alike.  Zooming into the first revival at tau = 2 pi alpha shows they
disagree qualitatively on the fine structure: the closed form (built
from the X-shaped part of the density matrix) oscillates at the fast
Rabi scale cos(4 alpha tau) and repeatedly touches zero, while the
exact concurrence traces a single smooth lobe with no death/birth
events.  The coherences discarded by the X projection are exactly what
smooths the lobe out.

Run:  python3 demos/revival_microscope.py [out.png]
"""

import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from jcrevival import ScanConfig, run_scan

ALPHA = 10.0

series = run_scan(
    ScanConfig(
        alpha=ALPHA,
        tau_start=57.0,
        tau_end=69.0,
        steps=2401,
        methods=("exact", "xproj", "analytic"),
    )
)

fig, ax = plt.subplots(figsize=(9, 4))
ax.plot(series.tau, series.column("C_analytic"), lw=0.7, alpha=0.8,
        label="closed form (oscillatory)")
ax.plot(series.tau, series.column("C_xproj"), lw=0.7, alpha=0.8,
        label="X-projected")
ax.plot(series.tau, series.column("C_exact"), lw=1.6, color="k",
        label="exact (smooth lobe)")
ax.axvline(20.0 * np.pi, color="gray", ls=":", lw=0.8)
ax.set_xlabel(r"$\tau = gt$")
ax.set_ylabel("concurrence")
ax.set_title(rf"First revival in detail, $\alpha = {ALPHA:g}$")
ax.legend(frameon=False)
fig.tight_layout()

out = sys.argv[1] if len(sys.argv) > 1 else "revival_microscope.png"
fig.savefig(out, dpi=150)
print(f"wrote {out}")

exact = series.column("C_exact")
print(f"exact minimum inside the window: {np.min(exact):.3f} (never reaches zero)")
print(f"closed form touches zero {int(np.sum(series.column('C_analytic') == 0.0))} grid points")
