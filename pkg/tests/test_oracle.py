import math

import numpy as np
import pytest
from scipy.special import gammaln

import fermigas as fg
from fermigas import DomainError
from fermigas.oracle import eigenfunction_origin_density, origin_weight


def test_isotropic_shell_degeneracies():
    sp = fg.build_spectrum(1.0, 2.5)
    assert sp.energies.tolist() == [0.0, 1.0, 2.0]
    assert sp.degeneracies.tolist() == [1.0, 3.0, 6.0]


def test_isotropic_cumulative_count_is_stars_and_bars():
    sp = fg.build_spectrum(1.0, 20.1)
    cumulative = np.cumsum(sp.degeneracies)
    for n in range(21):
        assert cumulative[n] == fg.closed_shell_count(n)


def test_irrational_anisotropy_keeps_planar_shells_distinct():
    lam = math.sqrt(8.0)
    cutoff = 12.0
    sp = fg.build_spectrum(lam, cutoff)
    pairs = sum(int(math.floor(cutoff - lam * nz)) + 1
                for nz in range(int(math.floor(cutoff / lam)) + 1))
    assert len(sp.energies) == pairs  # no merged degeneracies beyond p-shells


def test_state_count_cap():
    with pytest.raises(DomainError, match="cap"):
        fg.build_spectrum(1.0, 500.0)


def test_zero_temperature_closed_shells():
    # N = 4 fills shells 0 and 1 (1 + 3 states): gap midpoint 1.5
    assert fg.exact_mu(4, 1.0, 0.0) == 1.5
    # N = 20 fills shells 0..3: gap midpoint 3.5
    assert fg.exact_mu(20, 1.0, 0.0) == 3.5


def test_zero_temperature_partial_shell_rejected():
    with pytest.raises(DomainError, match="partial"):
        fg.exact_mu(5, 1.0, 0.0)


def test_zero_temperature_anisotropic_filling():
    # lam = sqrt(8): the first axial excitation sits at 2.828, so N = 6
    # fills the planar shells 0, 1, 2 and the gap midpoint follows
    lam = math.sqrt(8.0)
    assert fg.exact_mu(6, lam, 0.0) == pytest.approx((2.0 + lam) / 2.0, rel=1e-14)


def test_integer_anisotropy_merges_levels():
    # lam = 2: energy 2 collects (p=2, nz=0) and (p=0, nz=1), and so on
    sp = fg.build_spectrum(2.0, 3.0)
    assert sp.energies.tolist() == [0.0, 1.0, 2.0, 3.0]
    assert sp.degeneracies.tolist() == [1.0, 2.0, 4.0, 6.0]


def test_anisotropic_finite_temperature_residual():
    lam = math.sqrt(8.0)
    mu = fg.exact_mu(300, lam, 2.5)
    sp = fg.build_spectrum(lam, (6.0 * lam * 600) ** (1 / 3) + 36.0 * 2.5 + 2.0)
    occ = 1.0 / (np.exp(np.clip((sp.energies - mu) / 2.5, -700, 700)) + 1.0)
    assert abs(float(np.dot(sp.degeneracies, occ)) - 300) <= 1e-10 * 300


def test_anisotropic_continuum_comparison():
    lam = math.sqrt(8.0)
    comp = fg.continuum_comparison(5_000, lam, 0.25)
    assert comp.zero_point == pytest.approx(1.0 + lam / 2.0)
    assert comp.gap_adjusted <= 0.01
    assert comp.gap_raw > comp.gap_adjusted


def test_finite_temperature_occupation_residual():
    spectrum_mu = fg.exact_mu(500, 1.0, 3.0)
    sp = fg.build_spectrum(1.0, (6 * 2 * 500) ** (1 / 3) + 36 * 3.0 + 2.0)
    occ = 1.0 / (np.exp((sp.energies - spectrum_mu) / 3.0) + 1.0)
    assert abs(float(np.dot(sp.degeneracies, occ)) - 500) <= 1e-10 * 500


def test_continuum_comparison_at_acceptance_point():
    comp = fg.continuum_comparison(10_000, 1.0, 0.2)
    assert comp.gap_adjusted <= 0.01
    # the raw gap carries the suppressed zero point, about (1 + lam/2)/E_F
    assert 0.02 <= comp.gap_raw <= 0.06
    assert comp.zero_point == 1.5


def test_continuum_error_shrinks_with_particle_number():
    sizes = (2_000, 16_000, 128_000)
    comps = [fg.continuum_comparison(n, 1.0, 0.1) for n in sizes]
    raw = [c.gap_raw for c in comps]
    adjusted = [c.gap_adjusted for c in comps]
    assert raw[0] > raw[1] > raw[2]
    assert adjusted[0] > adjusted[1] > adjusted[2]


@pytest.mark.parametrize("n", [1_000, 10_000, 100_000])
def test_zero_temperature_state_counting(n):
    difference, edge_degeneracy = fg.counting_check(n)
    assert difference <= edge_degeneracy


def test_ground_state_central_density():
    assert fg.exact_central_density(1) == pytest.approx(math.pi ** -1.5, rel=1e-14)


def test_odd_eigenfunctions_vanish_at_origin():
    for n in (1, 3, 5, 11):
        assert eigenfunction_origin_density(n) == 0.0
    assert eigenfunction_origin_density(0) == 1.0


def test_origin_weight_recurrence_matches_log_gamma():
    for m in (1, 5, 50, 200, 500):
        via_gamma = math.exp(gammaln(2 * m + 1) - 2.0 * gammaln(m + 1)
                             - m * math.log(4.0))
        assert abs(origin_weight(m) - via_gamma) <= 1e-12


def test_central_density_converges_to_semiclassical():
    deviations = []
    for shell in (10, 20, 40, 80):
        n = fg.closed_shell_count(shell)
        exact = fg.exact_central_density(n)
        semi = fg.semiclassical_central_density(n)
        deviations.append(abs(exact - semi) / semi)
        assert exact > semi  # discrete sum approaches the continuum from above
    assert all(b < a for a, b in zip(deviations, deviations[1:]))


def test_central_density_rejects_ambiguous_input():
    with pytest.raises(DomainError, match="closed-shell"):
        fg.exact_central_density(5)
    with pytest.raises(DomainError, match="lambda"):
        fg.exact_central_density(4, lam=2.0)


def test_validity_margin_profile():
    rep = fg.validity_report(100_000, 1.0, [0.0, 0.2, 0.5, 0.9, 1.0, 1.1])
    assert math.isinf(rep.margin[0])
    assert np.all(rep.margin[1:4] > 0.0)
    assert rep.margin[4] == 0.0 and rep.margin[5] == 0.0
    assert rep.shell_thickness_sigma == pytest.approx(100_000 ** (-1 / 6), rel=1e-14)
    assert rep.inv_k_fermi_sigma == pytest.approx(
        rep.shell_thickness_sigma / 48.0 ** (1 / 6), rel=1e-12)


def test_validity_margin_grows_with_particle_number():
    margins = [fg.validity_report(n, 1.0, [0.5]).margin[0]
               for n in (1_000, 100_000, 10_000_000)]
    assert margins[0] < margins[1] < margins[2]


def test_validity_radii_domain():
    with pytest.raises(DomainError):
        fg.validity_report(1000, 1.0, [])
    with pytest.raises(DomainError):
        fg.validity_report(1000, 1.0, [1.5])
    with pytest.raises(DomainError):
        fg.validity_report(1000, 1.0, [-0.1])


def test_breakdown_shell_distance_exponent():
    ns = np.logspace(3, 7, 9)
    dist = [fg.breakdown_shell_distance(int(n)) for n in ns]
    slope = float(np.polyfit(np.log(ns), np.log(dist), 1)[0])
    assert abs(slope - (-1.0 / 6.0)) <= 0.02
