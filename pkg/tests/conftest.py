"""Shared independent oracles for the test suite."""

import math

from scipy.integrate import quad


def brute_fd(k, eta):
    """Adaptive quadrature of the defining Fermi-Dirac integral.

    Independent reference route: scipy's Gauss-Kronrod machinery on the raw
    integrand, with an interior break point at the Fermi edge.
    """
    def integrand(u):
        x = u - eta
        if x > 0:
            occ = math.exp(-x) / (1.0 + math.exp(-x))
        else:
            occ = 1.0 / (1.0 + math.exp(x))
        return u ** (k - 1.0) * occ

    points = [eta] if eta > 0 else None
    value, _ = quad(integrand, 0.0, max(eta, 0.0) + 60.0,
                    points=points, limit=400, epsabs=1e-300, epsrel=1e-12)
    return value / math.gamma(k)
