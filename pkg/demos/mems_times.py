"""
Timescales across the maximally-entangled-mixed family
======================================================

The disentanglement time of this family is piecewise: the construction
changes shape at c = 2/3 and the closed form changes with it, joining
continuously. The second panel shows why the short branch carries the
radical coefficient 1/18: the 1/16 variant misses the numeric solution
by a visible margin at small c instead of converging to zero.
"""
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pairdecay import (
    disentanglement_time,
    disentanglement_time_mems,
    locality_time_mems,
    mems,
)
from pairdecay.timescales import _mems_short_branch_tau

cs = np.linspace(0.01, 1.0, 300)
td = [disentanglement_time_mems(c).time for c in cs]
tl = [locality_time_mems(c).time if c > 1 / math.sqrt(2) else np.nan for c in cs]

fig, (ax, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))
ax.plot(cs, td, label="disentanglement time")
ax.plot(cs, tl, label="locality time")
ax.axvline(2 / 3, color="grey", linestyle=":", linewidth=0.8, label="branch seam")
ax.set_xlabel("target concurrence c")
ax.set_ylabel("time (units of 1/gamma)")
ax.set_title("Piecewise closed form, continuous at c = 2/3")
ax.legend()

cs_small = np.linspace(0.02, 0.4, 30)
num = np.array([disentanglement_time(mems(c)).time for c in cs_small])
good = np.array([_mems_short_branch_tau(c, 1.0 / 18.0) for c in cs_small])
bad = np.array([_mems_short_branch_tau(c, 1.0 / 16.0) for c in cs_small])
ax2.plot(cs_small, np.abs(good - num), label="coefficient 1/18")
ax2.plot(cs_small, np.abs(bad - num), label="coefficient 1/16")
ax2.set_yscale("log")
ax2.set_xlabel("target concurrence c")
ax2.set_ylabel("|closed - numeric|")
ax2.set_title("Short-branch coefficient, adjudicated numerically")
ax2.legend()

fig.tight_layout()
fig.savefig("mems_times.png", dpi=150)
print("wrote mems_times.png")
print(f"seam value: {disentanglement_time_mems(2/3).time:.6f}")
