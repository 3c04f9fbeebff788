# Critical transverse Ising chain
#
# At gamma = lambda = 1 the kernel G_k has the closed form
# 2 (-1)^k / (pi (2k + 1)), so the Toeplitz determinants behind <XX> and <YY>
# can be checked against an exact product formula. The two routes should agree
# to rounding.

import math

import numpy as np

from xyentangle import CRITICAL, build_gvector, correlators, critical_correlators
from xyentangle.reduced import two_site_from_correlators
from xyentangle.measures import concurrence_x_state, eof_from_concurrence

gv = build_gvector(8, CRITICAL)
print("G_k from quadrature vs closed form")
for k in range(-3, 4):
    print(f"  k={k:+d}  {gv[k]: .15f}  {2 * (-1) ** k / (math.pi * (2 * k + 1)): .15f}")

# The transverse magnetisation is G_0 = 2/pi.
print(f"\n<Z> = {gv[0]:.15f}, 2/pi = {2 / math.pi:.15f}")

# Correlators and concurrence by separation. Only r = 1 and r = 2 are entangled.
print(f"\n{'r':>2} {'xx':>12} {'|dxx|':>8} {'yy':>12} {'zz':>10} {'C':>8} {'EoF':>8}")
for r in range(1, 9):
    quad = correlators(r, CRITICAL, gvec=gv)
    exact = critical_correlators(r)
    c = concurrence_x_state(two_site_from_correlators(quad))
    print(f"{r:2d} {quad.xx:12.9f} {abs(quad.xx - exact.xx):8.1e} {quad.yy:12.9f} "
          f"{quad.zz:10.7f} {c:8.5f} {eof_from_concurrence(c):8.5f}")

# <XX> decays as a power law, r^(-1/4), at the critical point.
r = np.arange(10, 81, 10)
xx = np.array([critical_correlators(int(k)).xx for k in r])
slope = np.polyfit(np.log(r), np.log(xx), 1)[0]
print(f"\nlog-log slope of <XX>(r) over r = 10..80: {slope:.4f} (expect -0.25)")
