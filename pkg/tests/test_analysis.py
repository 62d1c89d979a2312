"""Critical jumping rate and the perturbation-theory reconstruction.

Frozen reference numbers in this file were produced with an independent
dense-eigensolver pipeline (numpy.linalg.eigh) over the same models.
"""

import math

import numpy as np
import pytest

from johnsonwalk import analysis, reduced
from johnsonwalk.errors import (SearchBracketError, SingularPivotError,
                                VertexCapError)

GAMMA_C_100 = 1.0 / 300.0 + 7.0 / 60000.0
# bisection result for J(100,3) from the reference pipeline
GAMMA_NUMERIC_100 = 0.0034548217385114792

# (n=100, formula gamma) perturbation quantities, reference pipeline
LAMBDA_U_100 = -1.0055617747640058
U_100 = [0.9954058334809888, -0.024159085801182065, 0.09264753232153225]
ALPHA_MINUS_100 = [0.6027652728086658, 0.7979185584355677]
E_MINUS_100 = -1.0072156535426042
E_PLUS_100 = -1.0020766622098758

# same quantities at n=1000
LAMBDA_U_1000 = -1.0005055131050875
U_1000 = [0.9996165778282068, -0.002447219675957965, 0.027580943545899645]
ALPHA_MINUS_1000 = [0.6734898713912156, 0.7391964509745997]


def test_gamma_c_formula_values():
    res = analysis.gamma_c_formula_k3(100)
    assert res.method == "formula_k3"
    assert res.residual is None
    assert res.gamma == pytest.approx(GAMMA_C_100, abs=1e-18)
    assert res.gamma == pytest.approx(0.00345, abs=5e-7)
    big = analysis.gamma_c_formula_k3(10 ** 6)
    assert big.gamma * 10 ** 6 == pytest.approx(1.0 / 3.0, abs=1e-5)
    with pytest.raises(ValueError):
        analysis.gamma_c_formula_k3(5)


def test_gamma_c_numeric_j100_3():
    res = analysis.gamma_c_numeric(100, 3)
    assert res.method == "numeric"
    assert res.gamma == pytest.approx(GAMMA_NUMERIC_100, abs=5e-12)
    assert res.gamma == pytest.approx(0.003455, abs=1e-6)
    assert abs(res.residual) < 1e-6
    # deterministic: a second search reproduces the value bit-exactly
    assert analysis.gamma_c_numeric(100, 3).gamma == res.gamma


@pytest.mark.parametrize("n", [4, 16, 100])
def test_gamma_c_numeric_complete_graph(n):
    """On K_n the balance point sits at (n-2)/n^2 (the two-dimensional
    reduced model can be solved by hand)."""
    res = analysis.gamma_c_numeric(n, 1)
    assert res.gamma == pytest.approx((n - 2) / n ** 2, abs=5e-13)


def test_gamma_c_numeric_bracket_failure():
    # K_2: the ground state hugs the marked vertex for every gamma, the
    # balance never changes sign
    with pytest.raises(SearchBracketError):
        analysis.gamma_c_numeric(2, 1)


def test_energy_gap_scaling_law():
    gap = analysis.energy_gap(100, 3, analysis.gamma_c_numeric(100, 3).gamma)
    n_vertices = 161700
    assert abs(gap * math.sqrt(n_vertices) / 2.0 - 1.0) <= 0.1
    assert gap == pytest.approx(2.0 / math.sqrt(n_vertices), rel=0.01)
    with pytest.raises(ValueError):
        analysis.energy_gap(100, 3, 0.0)


def test_predicted_peak_time():
    assert analysis.predicted_peak_time(100, 3) == pytest.approx(631.65, abs=0.01)
    assert analysis.predicted_peak_time(1000, 3) == pytest.approx(20248.5, abs=0.1)
    assert analysis.predicted_peak_time(4, 1) == math.pi


def test_naive_splitting_structure():
    gamma = 1.0 / 300.0
    split = analysis.naive_splitting_diagnostic(100, gamma)
    assert split.d0_d3_coupling == 0.0
    assert np.allclose(np.diag(split.h0),
                       [-1.0, -gamma * 100, -2 * gamma * 100, -3 * gamma * 100])
    # gamma = 1/(3n) makes the marked and far classes degenerate
    assert split.h0[3, 3] == pytest.approx(-1.0, abs=1e-12)
    assert np.array_equal(split.h1, split.h1.T)
    assert split.h1[0, 3] == 0.0 and split.h1[0, 2] == 0.0


@pytest.mark.parametrize("n", [100, 1000])
def test_naive_splitting_residual(n):
    """Dropped terms sit at O(gamma), far below the O(gamma*sqrt(n))
    entries that were kept."""
    gamma = 1.0 / (3.0 * n)
    split = analysis.naive_splitting_diagnostic(n, gamma)
    h = reduced.search_hamiltonian(n, 3, gamma).hamiltonian
    residual = np.abs(h - (split.h0 + split.h1)).max()
    assert residual == pytest.approx(18.0 * gamma, rel=1e-12)
    assert residual <= 1.0 / math.sqrt(n)


def test_char_cubic_gamma_zero():
    assert analysis.char_cubic_coeffs(50, 0.0) == (-1.0, -1.0, 0.0, 0.0)
    # roots of -l^3 - l^2: 0, 0, -1
    roots = np.roots([-1.0, -1.0, 0.0, 0.0])
    assert sorted(np.round(roots, 12).tolist()) == [-1.0, 0.0, 0.0]


@pytest.mark.parametrize("n,gamma", [(100, 0.00345), (37, 0.01), (800, 4.2e-4)])
def test_char_cubic_matches_block_charpoly(n, gamma):
    monic = np.poly(analysis.pt_block(n, gamma))
    c3, c2, c1, c0 = analysis.char_cubic_coeffs(n, gamma)
    mine = np.array([1.0, -c2, -c1, -c0])   # divide by c3 = -1
    assert np.abs((mine - monic) / np.maximum(1e-30, np.abs(monic))).max() < 1e-10


def test_cubic_roots_are_block_spectrum():
    n, gamma = 100, GAMMA_C_100
    roots = np.roots(analysis.char_cubic_coeffs(n, gamma))
    assert np.abs(roots.imag).max() < 1e-12
    evals = np.linalg.eigvalsh(analysis.pt_block(n, gamma))
    assert np.abs(np.sort(roots.real) - evals).max() < 1e-9


def test_lambda_u_frozen_values():
    lam = analysis.lambda_u(100, GAMMA_C_100)
    assert lam == pytest.approx(LAMBDA_U_100, abs=1e-12)
    assert abs(lam + 1.005) < 1e-3
    assert abs(lam + 1.0 + 1.0 / 200.0) <= 10.0 / 100 ** 2
    lam_big = analysis.lambda_u(1000, analysis.gamma_c_formula_k3(1000).gamma)
    assert lam_big == pytest.approx(LAMBDA_U_1000, abs=1e-12)


def test_lambda_u_is_block_eigenvalue():
    for n, gamma in [(50, 0.008), (100, GAMMA_C_100), (300, 0.0012)]:
        lam = analysis.lambda_u(n, gamma)
        evals = np.linalg.eigvalsh(analysis.pt_block(n, gamma))
        assert np.abs(evals - lam).min() < 1e-9


def test_lambda_u_near_degenerate_with_e_r():
    """At the critical rate, lambda_u and the plain r-state energy
    -gamma(3n-9) split only at O(1/n^2)."""
    for n in (100, 1000):
        gamma = analysis.gamma_c_formula_k3(n).gamma
        e_r = -gamma * (3.0 * n - 9.0)
        assert abs(analysis.lambda_u(n, gamma) - e_r) <= 20.0 / n ** 2


def test_vector_u_frozen_and_eigen_residual():
    lam = analysis.lambda_u(100, GAMMA_C_100)
    u = analysis.vector_u(100, GAMMA_C_100, lam)
    assert np.abs(u - np.array(U_100)).max() < 1e-10
    assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-14)
    assert u[0] > 0
    block = analysis.pt_block(100, GAMMA_C_100)
    assert np.linalg.norm(block @ u - lam * u) <= 1e-8


@pytest.mark.parametrize("n", [100, 1000])
def test_vector_u_matches_eigensolver(n):
    gamma = analysis.gamma_c_formula_k3(n).gamma
    lam = analysis.lambda_u(n, gamma)
    u = analysis.vector_u(n, gamma, lam)
    evals, evecs = np.linalg.eigh(analysis.pt_block(n, gamma))
    ref = evecs[:, int(np.argmin(np.abs(evals - lam)))]
    if ref[0] < 0:
        ref = -ref
    assert np.abs(u - ref).max() <= 1e-8
    # |u> approaches |d0> as the graph grows
    assert u[0] > 0.99


def test_vector_u_rejects_non_eigenvalue():
    with pytest.raises(ValueError):
        analysis.vector_u(100, GAMMA_C_100, -0.5)


def test_vector_u_singular_pivot():
    # n=9, gamma=1: lam=-1 is an exact block eigenvalue and the pivot
    # 2n - 17 + lam/gamma vanishes identically
    with pytest.raises(SingularPivotError):
        analysis.vector_u(9, 1.0, -1.0)
    with pytest.raises(ValueError):
        analysis.vector_u(100, -0.1, -1.0)


def test_effective_two_level_frozen_n100():
    system = analysis.effective_two_level(100, GAMMA_C_100)
    assert system.matrix.shape == (2, 2)
    assert system.matrix[0, 1] == pytest.approx(system.matrix[1, 0], abs=1e-15)
    target = math.sqrt(6.0) / 100 ** 1.5
    assert abs(abs(system.matrix[0, 1]) - target) / target < 0.02
    assert system.e_minus == pytest.approx(E_MINUS_100, abs=1e-12)
    assert system.e_plus == pytest.approx(E_PLUS_100, abs=1e-12)
    gap = system.e_plus - system.e_minus
    assert abs(gap - 2.0 * target) / (2.0 * target) < 0.07
    assert np.abs(system.alpha_minus - np.array(ALPHA_MINUS_100)).max() < 1e-9


def test_effective_two_level_gap_matches_exact():
    for n in (100, 1000):
        gamma = analysis.gamma_c_formula_k3(n).gamma
        system = analysis.effective_two_level(n, gamma)
        exact = analysis.energy_gap(n, 3, gamma)
        assert abs((system.e_plus - system.e_minus) - exact) / exact < 0.2


def test_effective_two_level_alphas_approach_equal_mixing():
    system = analysis.effective_two_level(1000, analysis.gamma_c_formula_k3(1000).gamma)
    assert np.abs(system.alpha_minus - np.array(ALPHA_MINUS_1000)).max() < 1e-9
    equal = 1.0 / math.sqrt(2.0)
    assert np.abs(np.abs(system.alpha_minus) - equal).max() < 0.05
    assert np.abs(np.abs(system.alpha_plus) - equal).max() < 0.05


def test_perturbation_report_consistency():
    report = analysis.perturbation_report(100)
    assert report.gamma == pytest.approx(GAMMA_C_100, abs=1e-18)
    assert report.cubic_coefficients == analysis.char_cubic_coeffs(100, report.gamma)
    assert report.lambda_u == pytest.approx(LAMBDA_U_100, abs=1e-12)
    assert np.linalg.norm(report.u) == pytest.approx(1.0, abs=1e-14)
    assert report.e_minus <= report.e_plus
    assert report.predicted_gap == pytest.approx(report.e_plus - report.e_minus,
                                                 abs=1e-18)
    assert report.predicted_runtime == pytest.approx(math.pi / report.predicted_gap,
                                                     abs=1e-12)
    # the two-level runtime lands near the exact-N peak-time prediction
    peak = analysis.predicted_peak_time(100, 3)
    assert abs(report.predicted_runtime - peak) / peak < 0.05


def test_run_verification_small_graphs():
    assert analysis.run_verification(6, 3, 0.1).max_deviation <= 1e-10
    assert analysis.run_verification(5, 2, 0.2).max_deviation <= 1e-10


def test_run_verification_zero_window():
    result = analysis.run_verification(6, 3, 0.1, t_max=0.0)
    assert result.max_deviation == 0.0
    assert result.steps == 1


def test_run_verification_records_window():
    result = analysis.run_verification(5, 2, 0.05, steps=40)
    assert result.t_max == pytest.approx(2.0 * math.pi * math.sqrt(10), abs=1e-12)
    assert result.steps == 40


def test_run_verification_honors_cap():
    with pytest.raises(VertexCapError):
        analysis.run_verification(30, 3, 0.01, cap=100)
    with pytest.raises(ValueError):
        analysis.run_verification(6, 3, -0.5)
