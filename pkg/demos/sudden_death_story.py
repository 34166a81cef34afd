"""
One state's road to sudden death
================================

Follows a single Werner state through dissipation and watches three things
fade at different speeds: purity, Bell violation, and entanglement.
Violation dies first, entanglement second (abruptly), purity only levels
off at the maximally mixed endpoint.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pairdecay import (
    concurrence,
    decoherence_rate,
    disentanglement_time,
    evolve_x_closed,
    horodecki_m,
    linear_entropy,
    locality_time,
    pure_with_concurrence,
    werner,
)

rho0 = werner(0.95)
t_loc = locality_time(rho0)
t_d = disentanglement_time(rho0)
print(f"locality lost at        t = {t_loc.time:.6f}  ({t_loc.method})")
print(f"entanglement lost at    t = {t_d.time:.6f}  ({t_d.method})")
print(f"revival after crossing: {t_d.revival}")

# For a pure state the initial purity-decay rate is exactly 2 gamma.
print(f"decoherence rate of a Bell state: {decoherence_rate(pure_with_concurrence(1.0)):.6f}")

ts = np.linspace(0.0, 1.2, 300)
cs, ms, ses = [], [], []
for t in ts:
    rho = evolve_x_closed(rho0, t)
    cs.append(concurrence(rho))
    ms.append(horodecki_m(rho))
    ses.append(linear_entropy(rho))

fig, ax = plt.subplots(figsize=(7, 4.5))
ax.plot(ts, cs, label="concurrence")
ax.plot(ts, ms, label="violation criterion m")
ax.plot(ts, ses, label="linear entropy", linestyle=":")
ax.axhline(1.0, color="grey", linewidth=0.8)
ax.axvline(t_loc.time, color="tab:orange", linestyle="--", linewidth=0.8,
           label=f"m = 1 at t = {t_loc.time:.3f}")
ax.axvline(t_d.time, color="tab:blue", linestyle="--", linewidth=0.8,
           label=f"C = 0 at t = {t_d.time:.3f}")
ax.set_xlabel("time (units of 1/gamma)")
ax.set_title("Werner state, p = 0.95")
ax.legend()
fig.tight_layout()
fig.savefig("sudden_death_story.png", dpi=150)
print("wrote sudden_death_story.png")
