# Concurrence and entanglement of formation on familiar states
#
# Werner states p |psi-><psi-| + (1 - p) I/4 become entangled at p = 1/3. For
# pure states the entanglement of formation is the entropy of either qubit.

import numpy as np

from xyentangle.measures import (concurrence_general, concurrence_x_state,
                                 eof_from_concurrence, von_neumann_entropy)

psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
bell = np.outer(psi, psi)
for p in (0.2, 1 / 3, 0.5, 0.8, 1.0):
    rho = p * bell + (1 - p) * np.eye(4) / 4
    c = concurrence_x_state(rho)
    print(f"Werner p={p:.3f}: C = {c:.4f} (general {concurrence_general(rho):.4f}), "
          f"EoF = {eof_from_concurrence(c):.4f}")

rng = np.random.default_rng(7)
v = rng.normal(size=4) + 1j * rng.normal(size=4)
v /= np.linalg.norm(v)
rho = np.outer(v, v.conj())
half = np.trace(rho.reshape(2, 2, 2, 2), axis1=1, axis2=3)
c = concurrence_general(rho)
print(f"\nrandom pure state: C = {c:.6f}, EoF = {eof_from_concurrence(c):.10f}, "
      f"S(rho_A) = {von_neumann_entropy(half):.10f}")
