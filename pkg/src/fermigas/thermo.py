"""Reduced equation of state of the trapped ideal Fermi gas.

All quantities are universal functions of the reduced temperature
t = k_B T / E_F: the chemical potential m = mu/E_F solves

    6 t^3 f_3(m/t) = 1,

the energy per particle is u = 18 t^4 f_4(m/t) (in units of E_F) and the
heat capacity per particle follows from implicit differentiation of the
constraint:

    c = 12 f_4(eta)/f_3(eta) - 9 f_3(eta)/f_2(eta),   eta = m/t.

Heat capacity is taken at fixed particle number and fixed trap
frequencies.  The t = 0 point is handled symbolically (m = 1, u = 3/4,
c = 0) to avoid the eta -> inf limit.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .curves import UniversalCurve
from .errors import DomainError, NumericsError
from .fdint import fd

_RESIDUAL_TOL = 1e-12

# below this the O(t^2) corrections to the t = 0 values fall under double
# resolution while eta = m/t overflows intermediate powers
_TINY_T = 1e-9


@dataclass(frozen=True)
class ThermoState:
    """Solved reduced state at one temperature."""

    t: float
    m: float
    u: float
    c: float


def sommerfeld_mu(t: float) -> float:
    """Low-temperature expansion 1 - (pi^2/3) t^2 (exact to this order)."""
    if t < 0:
        raise DomainError(f"reduced temperature must be non-negative, got {t!r}")
    return 1.0 - (math.pi ** 2 / 3.0) * t * t


def classical_mu(t: float) -> float:
    """High-temperature form -t ln(6 t^3)."""
    if t <= 0:
        raise DomainError(f"classical form requires t > 0, got {t!r}")
    # log-space form: t**3 underflows for subnormal-range t
    return -t * (math.log(6.0) + 3.0 * math.log(t))


def _constraint(t: float, m: float) -> float:
    return 6.0 * t ** 3 * fd(3.0, m / t) - 1.0


@lru_cache(maxsize=4096)
def solve_mu(t: float) -> float:
    """Reduced chemical potential m(t); exactly 1 at t = 0."""
    t = float(t)
    if t < 0:
        raise DomainError(f"reduced temperature must be non-negative, got {t!r}")
    if t <= _TINY_T:
        return 1.0
    lo = classical_mu(t) - 5.0 * t
    hi = 1.0 + 5.0 * t
    g_lo = _constraint(t, lo)
    g_hi = _constraint(t, hi)
    if not (g_lo < 0.0 < g_hi):
        raise NumericsError(f"chemical-potential bracket failed at t={t}")
    # f_3 is monotone in m, so plain bisection cannot miss the root;
    # Newton with f_2 polishes the last digits.
    for _ in range(30):
        mid = 0.5 * (lo + hi)
        if _constraint(t, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    m = 0.5 * (lo + hi)
    for _ in range(12):
        g = _constraint(t, m)
        if abs(g) <= 1e-13:
            break
        slope = 6.0 * t * t * fd(2.0, m / t)
        step = g / slope
        m -= step
        if not lo - 1.0 <= m <= hi + 1.0:
            raise NumericsError(f"Newton polish left the bracket at t={t}")
    if abs(_constraint(t, m)) > _RESIDUAL_TOL:
        raise NumericsError(f"constraint residual above tolerance at t={t}")
    return m


def internal_energy(t: float) -> float:
    """Energy per particle u(t) in units of E_F; 3/4 at t = 0."""
    if t < 0:
        raise DomainError(f"reduced temperature must be non-negative, got {t!r}")
    if t <= _TINY_T:
        return 0.75
    m = solve_mu(t)
    return 18.0 * t ** 4 * fd(4.0, m / t)


def heat_capacity(t: float) -> float:
    """Heat capacity per particle c(t) in units of k_B."""
    if t <= 0:
        raise DomainError(f"heat capacity requires t > 0, got {t!r}")
    if t <= _TINY_T:
        return math.pi ** 2 * t  # degenerate limit, O(t^3) below resolution
    eta = solve_mu(t) / t
    f2, f3, f4 = fd(2.0, eta), fd(3.0, eta), fd(4.0, eta)
    return 12.0 * f4 / f3 - 9.0 * f3 / f2


def thermo_state(t: float) -> ThermoState:
    if t < 0:
        raise DomainError(f"reduced temperature must be non-negative, got {t!r}")
    if t == 0.0:
        return ThermoState(t=0.0, m=1.0, u=0.75, c=0.0)
    return ThermoState(t=t, m=solve_mu(t), u=internal_energy(t), c=heat_capacity(t))


def thermo_curve(t_grid):
    """Tabulate (m(t), c(t)) over a strictly increasing grid of t >= 0."""
    ts = [float(t) for t in t_grid]
    if not ts:
        raise DomainError("temperature grid is empty")
    if any(t < 0 for t in ts):
        raise DomainError("temperature grid must be non-negative")
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise DomainError("temperature grid must be strictly increasing")
    states = [thermo_state(t) for t in ts]
    mu_curve = UniversalCurve("t", "m", tuple((st.t, st.m) for st in states))
    c_curve = UniversalCurve("t", "c", tuple((st.t, st.c) for st in states))
    return mu_curve, c_curve
