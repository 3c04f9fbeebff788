# The adaptive Gauss-Kronrod rule
#
# Every correlator is a one-dimensional integral over [0, pi]. The integrator
# refines panels until a global error target is met and evaluates several
# integrands that share nodes in one pass.

import math

import numpy as np

from xyentangle.quadrature import IntegrationSpec, integrate, integrate_many

print(integrate(np.sin, 0, math.pi), "(exact 2)")
print(integrate(lambda x: np.sqrt(x), 0, 1), "(exact 2/3)")

# The critical dispersion vanishes at phi = pi; the integrand stays bounded.
f = lambda x: (1 + np.cos(x)) / np.sqrt(2 + 2 * np.cos(x) + 1e-300)
print(integrate(f, 0, math.pi), "(exact 2)")

# Stacked integrands: cos(k x) for k = 0..4 over [0, pi/2].
k = np.arange(5)[:, None]
vals = integrate_many(lambda x: np.cos(k * x), 5, 0, math.pi / 2)
exact = [math.pi / 2] + [math.sin(j * math.pi / 2) / j for j in range(1, 5)]
print(np.abs(vals - exact).max(), "max error over the stack")

loose = IntegrationSpec(1e-4, 1e-4)
print(integrate(lambda x: np.exp(-x * x), -5, 5, loose), "~ sqrt(pi) =", math.sqrt(math.pi))
