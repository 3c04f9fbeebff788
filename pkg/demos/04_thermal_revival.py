# Entanglement that grows with temperature
#
# In the ordered phase the thermal state at small T mixes in low-lying
# excitations that are more entangled than the ground doublet. At lambda = 1.4
# this lifts C(1) before thermal noise finally destroys it.

import numpy as np

from xyentangle.sweep import SweepSpec, run_sweep

rows = run_sweep(SweepSpec.build(1, 1.4, "0:0.7:0.01", "1", "concurrence"))
t = np.array([row.temperature for row in rows])
c = np.array([row.value for row in rows])

k = c.argmax()
print(f"C(T=0)   = {c[0]:.5f}")
print(f"C max    = {c[k]:.5f} at T = {t[k]:.2f}")
print(f"C = 0 from T = {t[np.flatnonzero(c == 0)[0]]:.2f}")

# The effect is a property of the ordered side: below the transition C(1)
# only decreases with T.
for lam in (0.6, 1.0, 1.4, 2.0):
    rows = run_sweep(SweepSpec.build(1, lam, "0:0.7:0.01", "1", "concurrence"))
    v = np.array([row.value for row in sorted(rows, key=lambda x: x.temperature)])
    grows = np.any(np.diff(v[v > 0]) > 0)
    print(f"lambda = {lam:<4g} C(0) = {v[0]:.4f}  grows with T somewhere: {bool(grows)}")
