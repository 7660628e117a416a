"""Physical trap parameters and the characteristic scales derived from them.

Everything downstream works in reduced variables; this module is the only
place where SI units appear.  The characteristic energy of a cloud of N
spin-polarized fermions in a trap with radial frequency omega_r and axial
anisotropy lambda is

    E_F = hbar * omega_r * (6 * lambda * N)**(1/3)

with companion length R_F (classical excursion at E_F), wavenumber K_F
(free-particle momentum at E_F) and ground-state width sigma_r.
Level energies are quoted without the zero-point offset throughout.
"""

import math
from dataclasses import dataclass, field

from .errors import DomainError

# CODATA, 10 significant digits; hard-coded for reproducibility.
HBAR = 1.054571817e-34       # J s
K_BOLTZMANN = 1.380649e-23   # J/K
ATOMIC_MASS_KG = 1.660539067e-27


@dataclass(frozen=True)
class TrapSpec:
    """Trap and gas parameters: mass [kg], omega_r [rad/s], anisotropy, N."""

    mass: float
    omega_r: float
    lam: float
    n_particles: int

    def __post_init__(self):
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise DomainError(f"mass must be positive, got {self.mass!r}")
        if not (self.omega_r > 0 and math.isfinite(self.omega_r)):
            raise DomainError(f"omega_r must be positive, got {self.omega_r!r}")
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise DomainError(f"lambda must be positive, got {self.lam!r}")
        if not (int(self.n_particles) == self.n_particles and self.n_particles >= 1):
            raise DomainError(
                f"n_particles must be a positive integer, got {self.n_particles!r}")


@dataclass(frozen=True)
class CharacteristicScales:
    """Derived scale bundle linking the physical trap to reduced variables."""

    e_fermi: float        # J
    t_fermi: float        # K
    r_fermi: float        # m
    k_fermi: float        # 1/m
    sigma_r: float        # m
    level_spacing: float  # J, hbar*omega_r without the zero-point offset
    spec: TrapSpec = field(repr=False)


def derive_scales(spec: TrapSpec) -> CharacteristicScales:
    e_fermi = HBAR * spec.omega_r * (6.0 * spec.lam * spec.n_particles) ** (1.0 / 3.0)
    sigma_r = math.sqrt(HBAR / (spec.mass * spec.omega_r))
    stretch = (48.0 * spec.n_particles * spec.lam) ** (1.0 / 6.0)
    return CharacteristicScales(
        e_fermi=e_fermi,
        t_fermi=e_fermi / K_BOLTZMANN,
        r_fermi=stretch * sigma_r,
        k_fermi=stretch / sigma_r,
        sigma_r=sigma_r,
        level_spacing=HBAR * spec.omega_r,
        spec=spec,
    )


def effective_radius(x: float, y: float, z: float, lam: float) -> float:
    """Single coordinate rho on which every trap profile depends."""
    return math.sqrt(x * x + y * y + lam * lam * z * z)


def to_scaled(spec: TrapSpec, rho: float, wavenumber: float, temperature: float):
    """Map (rho [m], |k| [1/m], T [K]) to the dimensionless triple (s, q, t)."""
    if temperature < 0:
        raise DomainError(f"temperature must be non-negative, got {temperature!r}")
    sc = derive_scales(spec)
    return rho / sc.r_fermi, wavenumber / sc.k_fermi, K_BOLTZMANN * temperature / sc.e_fermi


def from_scaled(spec: TrapSpec, s: float, q: float, t: float):
    """Inverse of to_scaled: recover (rho [m], |k| [1/m], T [K])."""
    if t < 0:
        raise DomainError(f"reduced temperature must be non-negative, got {t!r}")
    sc = derive_scales(spec)
    return s * sc.r_fermi, q * sc.k_fermi, t * sc.e_fermi / K_BOLTZMANN


def continuum_reliable(spec: TrapSpec, t: float) -> bool:
    """True when k_B*T is at least the level spacing, i.e. t*(6*lam*N)^(1/3) >= 1."""
    if t < 0:
        raise DomainError(f"reduced temperature must be non-negative, got {t!r}")
    return t * (6.0 * spec.lam * spec.n_particles) ** (1.0 / 3.0) >= 1.0


# Spin-polarized 6Li in a TOP trap (intrinsic anisotropy sqrt(8)), the
# standard worked example shipped with the package.
PRESETS = {
    "li6-top": TrapSpec(mass=9.988e-27, omega_r=3800.0, lam=math.sqrt(8.0),
                        n_particles=100_000),
}
