"""
Timescales across the Werner family
===================================

Below p = 1/3 a Werner state is separable and below p = 1/sqrt(2) it
violates no Bell inequality, so each curve only exists above its
threshold. The CSV sweep (`pairdecay sweep --figure 2`) leaves those
cells empty rather than printing zeros.
"""
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pairdecay import (
    disentanglement_time,
    disentanglement_time_werner,
    locality_time,
    locality_time_werner,
    werner,
)

ps = np.linspace(0.01, 1.0, 300)
td = [disentanglement_time_werner(p).time if p > 1 / 3 else np.nan for p in ps]
tl = [locality_time_werner(p).time if p > 1 / math.sqrt(2) else np.nan for p in ps]

ps_num = np.linspace(0.05, 1.0, 20)
td_num = [disentanglement_time(werner(p)).time for p in ps_num]
tl_num = [locality_time(werner(p)).time for p in ps_num]

fig, ax = plt.subplots(figsize=(7, 4.5))
ax.plot(ps, td, label="disentanglement time")
ax.plot(ps, tl, label="locality time")
ax.plot(ps_num, td_num, "o", markersize=4, color="C0", label="numeric solver")
ax.plot(ps_num, tl_num, "o", markersize=4, color="C1")
ax.axvline(1 / 3, color="grey", linestyle=":", linewidth=0.8)
ax.axvline(1 / math.sqrt(2), color="grey", linestyle=":", linewidth=0.8)
ax.set_xlabel("Werner mixing parameter p")
ax.set_ylabel("time (units of 1/gamma)")
ax.set_title("Werner family with its two thresholds")
ax.legend()
fig.tight_layout()
fig.savefig("werner_times.png", dpi=150)
print("wrote werner_times.png")
