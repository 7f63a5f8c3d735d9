import math

import numpy as np
import pytest
from scipy import integrate

from duplexem.sshliquid import (BRANCH_NEAR_EQ, BRANCH_SSH, GapSolverError,
                                Occupation, SshParams, band_energies,
                                bogoliubov_coeffs, gap_approximations,
                                gap_kernel, gap_residual, gap_residual_discrete,
                                ground_energy, ground_energy_smallz,
                                ground_state_energy, solve_gap,
                                solve_gap_discrete, stability_classify, zeta_of)


def base_params(**kw):
    defaults = dict(t0=1.0, alpha1=1.0, alpha2=0.2, u=0.1, k_spring=1.0,
                    n_sites=100, a_lattice=1.0)
    defaults.update(kw)
    return SshParams(**defaults)


# --- Bogoliubov coefficients ----------------------------------------------


def test_no_mixing_when_gap_closed():
    p = base_params()
    alpha, beta, prod = bogoliubov_coeffs(p, 1.3, 0.0)  # k = 0: gap term zero
    assert prod == pytest.approx(0.0, abs=1e-15)
    beta_sq = float(beta) ** 2
    assert min(abs(beta_sq), abs(beta_sq - 1.0)) <= 1e-15


def test_maximal_mixing_at_band_center():
    p = base_params()
    k = 0.5 * math.pi / p.a_lattice  # eps_k = 0
    for q in (0.7, -1.2):
        alpha, beta, prod = bogoliubov_coeffs(p, q, k)
        assert float(alpha) ** 2 == pytest.approx(0.5, rel=1e-14)
        assert float(beta) ** 2 == pytest.approx(0.5, rel=1e-14)
        gap = 4 * p.alpha1 * p.u * math.sin(k * p.a_lattice)
        assert prod == pytest.approx(0.5 * math.copysign(1.0, q * gap), rel=1e-14)


def test_product_identity_random():
    rng = np.random.default_rng(0)
    p = base_params()
    for _ in range(200):
        k = rng.uniform(0.01, 0.49) * math.pi
        q = rng.uniform(-3, 3)
        for sign in (+1, -1):
            alpha, beta, prod = bogoliubov_coeffs(p, q, k, sign)
            assert abs(prod**2 - alpha**2 * beta**2) <= 1e-14
            assert abs(alpha**2 + beta**2 - 1.0) <= 1e-14


def test_undimerized_convention():
    p = base_params(u=0.0)
    alpha, beta, prod = bogoliubov_coeffs(p, 2.0, 0.3)
    assert float(alpha) == 1.0 and float(beta) == 0.0 and float(prod) == 0.0


def test_sign_branch_validation():
    with pytest.raises(ValueError):
        bogoliubov_coeffs(base_params(), 1.0, 0.3, sign_branch=2)


# --- gap equation -----------------------------------------------------------


def test_kernel_elliptic_matches_adaptive_quadrature():
    for zeta in (0.2, 0.7, 0.999, 1.0, 1.001, 1.8, 4.0):
        assert gap_kernel(zeta, "elliptic") == pytest.approx(
            gap_kernel(zeta, "quadrature"), rel=1e-11)


def test_kernel_value_at_unity():
    assert gap_kernel(1.0) == pytest.approx(math.pi / 4, abs=1e-15)


def test_free_limit_recovers_unity():
    sol = solve_gap(base_params(alpha2=0.0))
    assert abs(sol.q - 1.0) <= 1e-10
    assert sol.residual <= 1e-10


def test_self_consistency_residual():
    rng = np.random.default_rng(1)
    for _ in range(5):
        p = base_params(alpha2=rng.uniform(0.05, 0.4),
                        u=rng.choice([-1, 1]) * rng.uniform(0.02, 0.25))
        sol = solve_gap(p)
        assert sol.residual <= 1e-10
        assert abs(gap_residual(p, sol.q)) <= 1e-10


def test_methods_agree_on_random_parameters():
    rng = np.random.default_rng(2)
    for _ in range(20):
        p = SshParams(t0=rng.uniform(0.5, 2.0), alpha1=rng.uniform(0.3, 2.0),
                      alpha2=rng.choice([-1, 1]) * rng.uniform(0.01, 0.5),
                      u=rng.choice([-1, 1]) * rng.uniform(0.01, 0.3),
                      n_sites=int(rng.integers(25, 100)) * 2)
        q_ell = solve_gap(p, method="elliptic").q
        q_quad = solve_gap(p, method="quadrature").q
        assert abs(q_ell - q_quad) <= 1e-8


def test_exact_case_factor():
    # ground state with u = -2 t0 / (N alpha2) puts the root pair exactly at
    # |Q| = alpha2 N / (4 alpha1); the printed positive sign is one of the pair
    n_sites, a2 = 100, 0.08
    p = base_params(alpha2=a2, u=-2.0 / (n_sites * a2), n_sites=n_sites)
    sol = solve_gap(p, form="reduced")
    target = a2 * n_sites / 4.0
    assert sol.multiple_roots
    assert abs(max(sol.roots) - target) <= 1e-10
    assert abs(min(sol.roots) + target) <= 1e-10
    assert sol.regime == "exact_case"
    assert abs(abs(zeta_of(p, max(sol.roots))) - 1.0) <= 1e-9


def test_reduced_form_reports_missing_root():
    # ground-state occupations need u * alpha2 < 0 for a reduced-form root
    p = base_params(alpha2=0.2, u=0.1)
    with pytest.raises(GapSolverError) as err:
        solve_gap(p, form="reduced")
    grid, vals = err.value.residual_curve
    assert len(grid) == len(vals) > 0


def test_regime_report():
    p = base_params(alpha2=0.2, u=0.1)
    sol = solve_gap(p)
    assert sol.regime in ("modulus_lt_1", "modulus_gt_1", "exact_case")
    assert sol.z_sq == pytest.approx(zeta_of(p, sol.q))


def test_discrete_sum_converges_to_continuum():
    p = base_params(t0=1.0, alpha1=0.8, alpha2=0.2, u=0.12, n_sites=80)
    q_cont = solve_gap(p).q
    diffs = [abs(solve_gap_discrete(p, n_k=n) - q_cont) for n in (32, 64, 128, 256)]
    assert all(diffs[i + 1] < diffs[i] for i in range(len(diffs) - 1))


def test_discrete_oracle_residual_definition():
    # trapezoid sum against direct adaptive integration of the same kernel
    p = base_params(alpha2=0.3, u=0.15)
    q = 0.8
    zeta = zeta_of(p, q)

    def integrand(k):
        eps = 2 * p.t0 * math.cos(k)
        gap = 4 * p.alpha1 * p.u * math.sin(k)
        return q * gap * math.sin(k) / math.hypot(eps, q * gap)

    val, _ = integrate.quad(integrand, 0.0, math.pi / 2, epsabs=1e-13)
    expected = 1.0 + (p.alpha2 / (2 * p.alpha1)) * (-1.0) * 2 * (p.n_sites / math.pi) * val - q
    assert gap_residual_discrete(p, q, n_k=4001) == pytest.approx(expected, abs=1e-9)


# --- closed-form approximants ----------------------------------------------


def test_small_form_arithmetic():
    # radicand forced to 9 gives exactly t0 / (2u)
    p = base_params(t0=1.0, alpha1=1.0, alpha2=0.2, u=1.0, n_sites=10)
    # 25 - 32/(N u alpha2) = 9  <=>  N u alpha2 = 2
    assert p.n_sites * p.u * p.alpha2 == pytest.approx(2.0)
    ap = gap_approximations(p)
    assert ap.q_small == pytest.approx(p.t0 / (2 * p.u), rel=1e-14)


def test_large_form_limit_pair():
    # vanishing 80 a1 t0 / (9 N u alpha2) leaves the pair {0, -3 alpha2 N / 8}
    p = base_params(alpha2=0.5, u=1e9, n_sites=1000)
    ap = gap_approximations(p)
    base = -3 * p.alpha2 * p.n_sites / 8.0
    vals = sorted(ap.q_large_pair)
    assert vals[0] == pytest.approx(base, rel=1e-6)
    assert vals[1] == pytest.approx(0.0, abs=1e-4)


def test_negative_radicand_flags_inapplicable():
    # N u alpha2 = 0.1 makes 32 t0 alpha1 / (N u alpha2) = 320 > 25
    p = base_params(alpha2=0.1, u=0.01, n_sites=100)
    ap = gap_approximations(p)
    assert ap.q_small is None and not ap.q_small_valid


def test_small_form_tracks_solver_in_regime():
    # validity regime: |zeta| just below 1; the approximant's sign convention
    # is realized by the inverted population with u, alpha2 > 0
    n_sites, a2, big_b = 100, 0.1, 0.95
    p = base_params(alpha2=a2, u=2.0 * big_b / (n_sites * a2), n_sites=n_sites)
    sol = solve_gap(p, occ=Occupation.inverted(), form="reduced")
    q_true = max(sol.roots)
    ap = gap_approximations(p)
    assert ap.q_small_valid
    assert abs(ap.q_small - q_true) / q_true <= 0.10


def test_large_form_tracks_solver_in_regime():
    n_sites, a2, big_b = 100, 0.1, 1.05
    p = base_params(alpha2=a2, u=2.0 * big_b / (n_sites * a2), n_sites=n_sites)
    sol = solve_gap(p, occ=Occupation.inverted(), form="reduced")
    q_true = max(sol.roots)
    assert abs(zeta_of(p, q_true)) > 1.0
    ap = gap_approximations(p)
    best = min(abs(x - q_true) / q_true for x in ap.q_large_pair)
    assert best <= 0.10


# --- quasiparticle branches --------------------------------------------------


def test_ssh_branch_recovers_textbook_spectrum():
    p = base_params(alpha2=0.0)
    k = np.linspace(0.0, math.pi / 2, 33)
    e_c, e_v = band_energies(p, 1.0, k, BRANCH_SSH)
    eps = 2 * p.t0 * np.cos(k)
    gap = 4 * p.alpha1 * p.u * np.sin(k)
    assert np.allclose(e_c, np.hypot(eps, gap), atol=1e-14)
    assert np.array_equal(e_v, -e_c)


def test_band_edges_at_zone_start():
    p = base_params()
    e_ssh, _ = band_energies(p, 0.9, 0.0, BRANCH_SSH)
    e_near, _ = band_energies(p, 0.9, 0.0, BRANCH_NEAR_EQ)
    assert float(e_ssh) == pytest.approx(2 * p.t0, rel=1e-14)
    assert float(e_near) == pytest.approx(-2 * p.t0, rel=1e-14)


def test_particle_hole_symmetry():
    rng = np.random.default_rng(3)
    p = base_params()
    k = rng.uniform(0, math.pi / 2, size=64)
    for branch in (BRANCH_SSH, BRANCH_NEAR_EQ):
        e_c, e_v = band_energies(p, 1.4, k, branch)
        assert np.array_equal(e_v, -e_c)


def test_near_equilibrium_branch_changes_sign():
    # E_c crosses zero where Q |gap| = |eps|
    p = base_params(u=0.2)
    q = 1.5
    k = np.linspace(1e-3, math.pi / 2 - 1e-3, 2001)
    e_c, _ = band_energies(p, q, k, BRANCH_NEAR_EQ)
    assert e_c[0] < 0 < e_c[-1]
    crossing = k[np.argmin(np.abs(e_c))]
    eps = 2 * p.t0 * math.cos(crossing)
    gap = 4 * p.alpha1 * p.u * math.sin(crossing)
    assert abs(q * abs(gap) - abs(eps)) <= 1e-2


def test_unknown_branch_rejected():
    with pytest.raises(ValueError):
        band_energies(base_params(), 1.0, 0.3, "bogus")


# --- stability conditions -----------------------------------------------------


def test_ssh_branch_needs_inversion():
    p = base_params()
    k = np.linspace(0.05, math.pi / 2 - 0.05, 21)
    _, _, cond3_ground = stability_classify(p, 1.0, k, Occupation.ground(), BRANCH_SSH)
    assert not np.any(cond3_ground)
    _, _, cond3_inv = stability_classify(p, 1.0, k, Occupation.inverted(), BRANCH_SSH)
    assert np.all(cond3_inv)


def test_second_condition_branch_independent():
    p = base_params()
    k = np.linspace(0.05, math.pi / 2 - 0.05, 21)
    occ = Occupation.ground()
    _, cond2_a, _ = stability_classify(p, 1.3, k, occ, BRANCH_SSH)
    _, cond2_b, _ = stability_classify(p, 1.3, k, occ, BRANCH_NEAR_EQ)
    assert np.array_equal(cond2_a, cond2_b)


def test_near_equilibrium_branch_admissible_near_ground():
    p = base_params(u=0.3, alpha1=1.5)
    sol = solve_gap(p)
    cond3 = sol.stable[BRANCH_NEAR_EQ][2]
    assert np.any(cond3)


# --- ground-state energy -------------------------------------------------------


def test_energy_at_undimerized_point():
    p = base_params(n_sites=60)
    assert ground_energy(p, 1.0, 0.0) == pytest.approx(
        4 * p.n_sites * p.t0 / math.pi, rel=1e-14)

    def integrand(k):
        return -abs(2 * p.t0 * math.cos(k))

    val, _ = integrate.quad(integrand, 0, math.pi / 2, epsabs=1e-13)
    oracle = -(2 * p.n_sites / math.pi) * (-val)
    assert ground_energy(p, 1.0, 0.0) == pytest.approx(-oracle, rel=1e-12)


def test_energy_symmetric_in_u():
    p = base_params(k_spring=2.0)
    grid = np.linspace(-0.3, 0.3, 31)
    curve = ground_state_energy(p, 1.0, grid, refine=False)
    assert np.max(np.abs(curve.e0 - curve.e0[::-1])) <= 1e-12 * np.max(np.abs(curve.e0))


def test_elliptic_route_matches_quadrature():
    p = base_params(k_spring=2.0)
    q = 1.0
    for u in np.linspace(-0.45, 0.45, 13):
        assert abs(zeta_of(p.replace(u=u), q)) < 1.0
        assert abs(ground_energy(p, q, u, "elliptic")
                   - ground_energy(p, q, u, "quadrature")) <= 1e-8


def test_small_gap_expansion_accuracy():
    p = base_params(k_spring=2.0)
    q = 1.0
    u = 0.05  # zeta = 0.1
    assert zeta_of(p.replace(u=u), q) == pytest.approx(0.1)
    full = ground_energy(p, q, u)
    approx = ground_energy_smallz(p, q, u)
    assert abs(full - approx) / abs(full) <= 0.01


def test_double_well_detected():
    # the -u^2 log u band term beats the elastic term at small u
    p = base_params(k_spring=2.0, n_sites=100)
    grid = np.linspace(-0.4, 0.4, 41)
    curve = ground_state_energy(p, 1.0, grid)
    assert curve.double_well
    assert curve.u0 > 0.0
    assert curve.well_depth > 0.0
    assert ground_energy(p, 1.0, curve.u0) < ground_energy(p, 1.0, 0.0)


def test_flat_curve_reports_no_well():
    # a stiff lattice keeps the minimum at u = 0
    p = base_params(k_spring=500.0)
    grid = np.linspace(-0.2, 0.2, 21)
    curve = ground_state_energy(p, 0.2, grid)
    assert not curve.double_well
    assert curve.u0 == 0.0


def test_asymmetric_grid_rejected():
    p = base_params()
    with pytest.raises(ValueError):
        ground_state_energy(p, 1.0, np.linspace(-0.1, 0.3, 11))


# --- parameter validation ------------------------------------------------------


def test_parameter_validation():
    with pytest.raises(ValueError):
        base_params(t0=-1.0)
    with pytest.raises(ValueError):
        base_params(n_sites=101)
    with pytest.raises(ValueError):
        base_params(alpha1=0.0)
    with pytest.raises(ValueError):
        Occupation(n_c=1.5, n_v=0.0)
