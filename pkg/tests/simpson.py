"""Fixed-grid composite Simpson reference, independent of the adaptive code.

The kernel integrands are re-derived here from scratch rather than imported,
so a mistake in the library's integrand would show up as a disagreement.
"""

import math

import numpy as np

PANELS = 10**6


def simpson(f, a, b, panels=PANELS):
    n = panels + (panels % 2)
    x = np.linspace(a, b, n + 1)
    h = (b - a) / n
    # the right end of [0, pi] can be a 0/0 point of the kernel; nudge it
    # inward by a sliver of a panel (the endpoint carries weight h/3)
    x[-1] = b - 0.1 * h
    y = f(x)
    return h / 3 * (y[0] + y[-1] + 4 * y[1:-1:2].sum() + 2 * y[2:-1:2].sum())


def _weight(phi, gamma, lam, beta):
    om = np.sqrt((gamma * lam * np.sin(phi)) ** 2 + (1 + lam * np.cos(phi)) ** 2)
    t = 1.0 if math.isinf(beta) else np.tanh(beta * om / 2)
    return t / om


def kernel_simpson(k, gamma, lam, beta, panels=PANELS):
    def f(phi):
        w = _weight(phi, gamma, lam, beta)
        return (np.cos(k * phi) * (1 + lam * np.cos(phi))
                - gamma * lam * np.sin(k * phi) * np.sin(phi)) * w / math.pi
    return simpson(f, 0.0, math.pi, panels)


def sz_simpson(gamma, lam, beta, panels=PANELS):
    return simpson(lambda p: (1 + lam * np.cos(p)) * _weight(p, gamma, lam, beta) / math.pi,
                   0.0, math.pi, panels)
