"""Exact discrete-spectrum reference computations.

The single-particle levels are eps = n_x + n_y + lambda*n_z in units of
hbar*omega_r, zero-point suppressed.  Levels are enumerated as planar
shells (n_x + n_y = p carries degeneracy p + 1) stacked over the axial
ladder; for integer lambda equal energies merge exactly, reproducing the
(n+1)(n+2)/2 shell degeneracies of the isotropic trap.

These sums validate the continuum treatment.  Note the continuum density
of states is asymptotic to the spectrum counted from the bottom of the
potential, so continuum comparisons are reported both raw and with the
suppressed zero-point energy (1 + lambda/2) restored; the adjusted gap is
the meaningful convergence measure.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NumericsError
from .thermo import solve_mu

MAX_STATES = 20_000_000

_SEMI_N0 = 2.0 / (math.sqrt(3.0) * math.pi ** 2)  # prefactor of sqrt(N*lam)


@dataclass(frozen=True)
class DiscreteSpectrum:
    """Sorted levels (energy in hbar*omega_r, degeneracy) below the cutoff."""

    lam: float
    cutoff: float
    energies: np.ndarray = field(repr=False)
    degeneracies: np.ndarray = field(repr=False)

    @property
    def state_count(self) -> int:
        return int(self.degeneracies.sum())


def _planar_count(p: int) -> int:
    return (p + 1) * (p + 2) // 2


def build_spectrum(lam: float, cutoff: float) -> DiscreteSpectrum:
    """Exhaustively enumerate all levels with energy <= cutoff."""
    if lam <= 0 or cutoff < 0:
        raise DomainError("need lambda > 0 and cutoff >= 0")
    nz_max = int(math.floor(cutoff / lam))
    total = sum(_planar_count(int(math.floor(cutoff - lam * nz)))
                for nz in range(nz_max + 1))
    if total > MAX_STATES:
        raise DomainError(
            f"spectrum would hold {total} states, above the {MAX_STATES} cap")
    levels = {}
    for nz in range(nz_max + 1):
        base = lam * nz
        for p in range(int(math.floor(cutoff - base)) + 1):
            e = p + base
            levels[e] = levels.get(e, 0) + p + 1
    energies = np.array(sorted(levels), dtype=float)
    degs = np.array([levels[e] for e in energies], dtype=float)
    return DiscreteSpectrum(lam=lam, cutoff=float(cutoff),
                            energies=energies, degeneracies=degs)


def closed_shell_count(n: int) -> int:
    """Particles filling isotropic shells 0..n completely."""
    return (n + 1) * (n + 2) * (n + 3) // 6


def _occupation_sum(spectrum: DiscreteSpectrum, mu: float, t_abs: float) -> float:
    x = np.clip((spectrum.energies - mu) / t_abs, -700.0, 700.0)
    occ = np.where(x >= 0, np.exp(-x) / (1.0 + np.exp(-np.abs(x))),
                   1.0 / (1.0 + np.exp(x)))
    return float(math.fsum(spectrum.degeneracies * occ))


def exact_mu(n_particles: int, lam: float, t_abs: float, safety: float = 2.0):
    """Chemical potential (hbar*omega_r units) from the exact level sum.

    t_abs is k_B T in units of hbar*omega_r.  At t_abs = 0 the gas must
    fill closed shells; the chemical potential is then reported at the
    midpoint of the gap between the last filled and first empty level.
    """
    if n_particles < 1:
        raise DomainError("need at least one particle")
    if t_abs < 0:
        raise DomainError("temperature must be non-negative")
    e_fermi_est = (6.0 * lam * n_particles) ** (1.0 / 3.0)
    cutoff = (safety ** (1.0 / 3.0)) * e_fermi_est + 36.0 * t_abs + 2.0
    spectrum = build_spectrum(lam, cutoff)
    if spectrum.state_count < n_particles:
        raise DomainError(
            f"cutoff {cutoff:.3g} holds only {spectrum.state_count} states "
            f"for N = {n_particles}; increase the safety factor")
    if t_abs == 0.0:
        cumulative = np.cumsum(spectrum.degeneracies)
        idx = int(np.searchsorted(cumulative, n_particles))
        if cumulative[idx] != n_particles:
            raise DomainError(
                f"N = {n_particles} leaves a partially filled level at T = 0; "
                "the ground state is ambiguous")
        return 0.5 * (spectrum.energies[idx] + spectrum.energies[idx + 1])
    lo = float(spectrum.energies[0]) - 60.0 * t_abs - 1.0
    hi = float(spectrum.energies[-1])
    mu = brentq(lambda m: _occupation_sum(spectrum, m, t_abs) - n_particles,
                lo, hi, xtol=1e-13, rtol=8.9e-16)
    residual = abs(_occupation_sum(spectrum, mu, t_abs) - n_particles)
    if residual > 1e-10 * n_particles:
        raise NumericsError(f"occupation residual {residual:.3e} too large")
    return float(mu)


def origin_weight(m: int) -> float:
    """|psi_2m(0)|^2 * sigma * sqrt(pi) for the 1-d oscillator, by recurrence."""
    if m < 0:
        raise DomainError("index must be non-negative")
    w = 1.0
    for i in range(1, m + 1):
        w *= (2 * i - 1) / (2 * i)
    return w


def eigenfunction_origin_density(n: int) -> float:
    """|psi_n(0)|^2 * sigma * sqrt(pi); zero for odd n by parity."""
    if n % 2 == 1:
        return 0.0
    return origin_weight(n // 2)


def exact_central_density(n_closed_shell: int, lam: float = 1.0) -> float:
    """n(0) * sigma^3 by direct eigenfunction summation (isotropic trap only)."""
    if lam != 1.0:
        raise DomainError("eigenfunction summation is implemented for lambda = 1")
    n_max = round((6.0 * n_closed_shell) ** (1.0 / 3.0)) + 2
    shells = {closed_shell_count(n): n for n in range(n_max + 2)}
    if n_closed_shell not in shells:
        raise DomainError(
            f"N = {n_closed_shell} is not a closed-shell count; occupation "
            "of the top shell would be ambiguous")
    top = shells[n_closed_shell]
    w = np.array([origin_weight(m) for m in range(top // 2 + 1)])
    total = 0.0
    for nx in range(0, top + 1, 2):
        for ny in range(0, top + 1 - nx, 2):
            nz = np.arange(0, top - nx - ny + 1, 2)
            total += w[nx // 2] * w[ny // 2] * float(np.sum(w[nz // 2]))
    return total / math.pi ** 1.5


def semiclassical_central_density(n_particles: int, lam: float = 1.0) -> float:
    """Continuum central density n(0) * sigma^3 = (2/sqrt(3) pi^2) sqrt(N*lam)."""
    return _SEMI_N0 * math.sqrt(n_particles * lam)


@dataclass(frozen=True)
class ValidityReport:
    """Semiclassical self-consistency margins along the cloud radius."""

    radii: np.ndarray = field(repr=False)
    margin: np.ndarray = field(repr=False)       # n(r) sigma^3 / (r/sigma)
    cell_scale: np.ndarray = field(repr=False)   # suggested cell size l/sigma
    shell_thickness_sigma: float                 # breakdown estimate N^(-1/6)
    inv_k_fermi_sigma: float                     # 1/(K_F sigma), same up to (48 lam)^(1/6)


def validity_report(n_particles: int, lam: float, radii) -> ValidityReport:
    s = np.asarray([float(r) for r in radii], dtype=float)
    if s.size == 0:
        raise DomainError("need at least one radius")
    if np.any(s < 0) or np.any(s > 1.2):
        raise DomainError("radii must lie in [0, 1.2]")
    stretch = (48.0 * n_particles * lam) ** (1.0 / 6.0)
    n_sigma3 = _SEMI_N0 * math.sqrt(n_particles * lam) * np.clip(
        1.0 - s * s, 0.0, None) ** 1.5
    with np.errstate(divide="ignore", invalid="ignore"):
        margin = n_sigma3 / (s * stretch)
        margin[s == 0] = math.inf
        l_min = n_sigma3 ** (-1.0 / 3.0)
        l_max = stretch * np.clip(1.0 - s * s, 0.0, None) / (2.0 * s)
        cell = np.sqrt(l_min * l_max)
        cell[(s == 0) | (s >= 1.0)] = math.nan
    return ValidityReport(
        radii=s, margin=margin, cell_scale=cell,
        shell_thickness_sigma=float(n_particles) ** (-1.0 / 6.0),
        inv_k_fermi_sigma=1.0 / stretch,
    )


def breakdown_shell_distance(n_particles: int, lam: float = 1.0) -> float:
    """Distance from the cloud edge, in units of sigma, at which the density
    drops to one particle per quantum volume (n(r) sigma^3 = 1)."""
    x = (1.0 / (_SEMI_N0 * math.sqrt(n_particles * lam))) ** (2.0 / 3.0)
    if x >= 1.0:
        raise DomainError(
            f"N = {n_particles} is too small: the whole cloud is below one "
            "particle per quantum volume")
    s_star = math.sqrt(1.0 - x)
    return (1.0 - s_star) * (48.0 * n_particles * lam) ** (1.0 / 6.0)


@dataclass(frozen=True)
class ContinuumComparison:
    """Exact vs continuum chemical potential at one (N, lambda, t)."""

    mu_exact: float        # hbar*omega_r units, zero-point suppressed
    mu_continuum: float    # m(t) * E_F in hbar*omega_r units
    zero_point: float      # suppressed offset (1 + lambda/2)
    gap_raw: float         # |mu_exact - mu_continuum| / E_F
    gap_adjusted: float    # |mu_exact + zero_point - mu_continuum| / E_F


def continuum_comparison(n_particles: int, lam: float, t: float) -> ContinuumComparison:
    """Compare the exact level-sum chemical potential with the continuum one.

    The continuum energy variable tracks the oscillator energy measured
    from the potential bottom, so the adjusted gap restores the suppressed
    zero point before differencing.
    """
    e_fermi = (6.0 * lam * n_particles) ** (1.0 / 3.0)
    mu_ex = exact_mu(n_particles, lam, t * e_fermi)
    mu_cont = solve_mu(t) * e_fermi
    zp = 1.0 + 0.5 * lam
    return ContinuumComparison(
        mu_exact=mu_ex, mu_continuum=mu_cont, zero_point=zp,
        gap_raw=abs(mu_ex - mu_cont) / e_fermi,
        gap_adjusted=abs(mu_ex + zp - mu_cont) / e_fermi,
    )


def counting_check(n_particles: int, lam: float = 1.0):
    """T = 0 state counting: continuum N = E_F^3/(6 lam) vs the discrete
    cumulative count with the zero point restored.  Returns (difference,
    outermost shell degeneracy)."""
    e_fermi = (6.0 * lam * n_particles) ** (1.0 / 3.0)
    spectrum = build_spectrum(lam, e_fermi + 1.0)
    zp = 1.0 + 0.5 * lam
    threshold = e_fermi - zp
    idx = bisect_right(spectrum.energies.tolist(), threshold)
    cumulative = int(spectrum.degeneracies[:idx].sum())
    edge_deg = int(spectrum.degeneracies[min(idx, len(spectrum.energies) - 1)])
    return abs(cumulative - n_particles), edge_deg
