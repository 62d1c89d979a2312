"""Critical jumping rate, energy gap, and perturbation-theory checks.

Two routes to the critical jumping rate gamma_c are provided: the k=3
closed form 1/(3n) + 7/(6 n^2), and a bisection search for the gamma at
which the uniform superposition is equally supported on the two lowest
eigenstates of the search Hamiltonian.  Around that point the walk behaves
as a two-level system, and the functions in the second half of this module
rebuild that picture numerically: the characteristic cubic of the
(d0, r', r'') block, its root lambda_u near -1 - 1/(2n), the associated
eigenvector |u>, and the effective 2x2 Hamiltonian over (r, u) whose gap
sets the runtime pi/(E_plus - E_minus).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import johnson, reduced
from .errors import SearchBracketError, SingularPivotError
from .johnson import DEFAULT_VERTEX_CAP
from .linalg import eig_sym, success_curve

#: Bisection terminates once the gamma bracket is narrower than this.
BISECTION_TOL = 1e-12
#: Maximum number of geometric bracket expansions before giving up.
MAX_BRACKET_EXPANSIONS = 10


@dataclass(frozen=True)
class CriticalGammaResult:
    """Critical jumping rate plus how it was obtained.

    ``residual`` is the overlap-balance value at the returned gamma for the
    numeric search, None for the closed form.
    """

    gamma: float
    method: str
    residual: Optional[float] = None


def gamma_c_formula_k3(n: int) -> CriticalGammaResult:
    """Closed-form critical jumping rate 1/(3n) + 7/(6n^2) for k = 3."""
    if not isinstance(n, (int, np.integer)) or n < 6:
        raise ValueError(f"closed-form gamma_c requires integer n >= 6, got {n}")
    gamma = 1.0 / (3.0 * n) + 7.0 / (6.0 * n * n)
    return CriticalGammaResult(gamma=gamma, method="formula_k3")


def overlap_balance(n: int, k: int, gamma: float) -> float:
    """|<s|psi_0>|^2 - |<s|psi_1>|^2 for the two lowest eigenstates.

    Positive when the ground state dominates the uniform superposition,
    negative when the first excited state does; the critical jumping rate
    is the zero crossing.
    """
    model = reduced.search_hamiltonian(n, k, gamma)
    _, vecs = eig_sym(model.hamiltonian)
    overlaps = (vecs.T @ reduced.initial_state(n, k)) ** 2
    return float(overlaps[0] - overlaps[1])


def gamma_c_numeric(n: int, k: int) -> CriticalGammaResult:
    """Bisect the overlap balance to locate the critical jumping rate.

    Starts from the bracket [1/(2kn), 2/(kn)] and widens it geometrically
    (up to MAX_BRACKET_EXPANSIONS times) if the balance does not change
    sign across it; raises SearchBracketError when no sign change can be
    found.  The bracket is narrowed to below BISECTION_TOL, so the result
    is deterministic for a given (n, k).
    """
    reduced._check_reduced_params(n, k)
    lo, hi = 1.0 / (2.0 * k * n), 2.0 / (k * n)
    f_lo, f_hi = overlap_balance(n, k, lo), overlap_balance(n, k, hi)
    expansions = 0
    while f_lo * f_hi > 0.0 and expansions < MAX_BRACKET_EXPANSIONS:
        lo /= 2.0
        hi *= 2.0
        f_lo, f_hi = overlap_balance(n, k, lo), overlap_balance(n, k, hi)
        expansions += 1
    # An endpoint can land exactly on the root (it does for small complete
    # graphs), in which case the product above is 0, not negative.
    if f_lo == 0.0:
        return CriticalGammaResult(gamma=lo, method="numeric", residual=0.0)
    if f_hi == 0.0:
        return CriticalGammaResult(gamma=hi, method="numeric", residual=0.0)
    if f_lo * f_hi > 0.0:
        raise SearchBracketError(
            f"overlap balance has no sign change on [{lo:.3e}, {hi:.3e}] "
            f"after {expansions} expansions (J({n},{k}))")
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = overlap_balance(n, k, mid)
        if f_mid == 0.0:
            return CriticalGammaResult(gamma=mid, method="numeric", residual=0.0)
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    gamma = 0.5 * (lo + hi)
    return CriticalGammaResult(gamma=gamma, method="numeric",
                               residual=overlap_balance(n, k, gamma))


def energy_gap(n: int, k: int, gamma: float) -> float:
    """E_1 - E_0 of the reduced search Hamiltonian."""
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    evals, _ = eig_sym(reduced.search_hamiltonian(n, k, gamma).hamiltonian)
    return float(evals[1] - evals[0])


def predicted_peak_time(n: int, k: int) -> float:
    """Time pi*sqrt(N)/2 at which the marked amplitude should peak."""
    reduced._check_reduced_params(n, k)
    return math.pi * math.sqrt(johnson.binomial(n, k)) / 2.0


def _check_k3_params(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 6:
        raise ValueError(f"the k=3 analysis requires integer n >= 6, got {n}")


@dataclass(frozen=True)
class NaiveSplitting:
    """Leading/subleading split of the k=3 search Hamiltonian.

    h0 carries the oracle and the diagonal hopping terms, h1 the
    off-diagonal hoppings of order sqrt(n); everything smaller is dropped.
    d0_d3_coupling is the (0,3) entry of h0 + h1, identically zero because
    the walk has no edge between the marked class and the far class.
    """

    h0: np.ndarray
    h1: np.ndarray
    d0_d3_coupling: float


def naive_splitting_diagnostic(n: int, gamma: float) -> NaiveSplitting:
    """Split H (k = 3) into the naive leading and first-order pieces."""
    _check_k3_params(n)
    h0 = np.diag([-1.0, -gamma * n, -2.0 * gamma * n, -3.0 * gamma * n])
    h1 = -gamma * np.array([
        [0.0, math.sqrt(3.0 * n), 0.0, 0.0],
        [math.sqrt(3.0 * n), 0.0, 2.0 * math.sqrt(2.0 * n), 0.0],
        [0.0, 2.0 * math.sqrt(2.0 * n), 0.0, 3.0 * math.sqrt(n)],
        [0.0, 0.0, 3.0 * math.sqrt(n), 0.0],
    ])
    return NaiveSplitting(h0=h0, h1=h1, d0_d3_coupling=float((h0 + h1)[0, 3]))


def char_cubic_coeffs(n: int, gamma: float) -> tuple[float, float, float, float]:
    """Coefficients (lambda^3, lambda^2, lambda, 1) of the block cubic.

    This is the characteristic polynomial of the 3x3 perturbation block
    over (d0, r', r''), expanded in closed form; its roots are the block
    eigenvalues, one of which is lambda_u.
    """
    _check_k3_params(n)
    g = float(gamma)
    return (
        -1.0,
        -(3.0 * g * n - 19.0 * g + 1.0),
        g * (19.0 - 34.0 * g - 2.0 * g * n * n + n * (32.0 * g - 3.0)),
        g * g * (-34.0 + n * (29.0 - 51.0 * g) + n * n * (-2.0 + 6.0 * g)),
    )


def pt_block(n: int, gamma: float) -> np.ndarray:
    """3x3 leading-order Hamiltonian block over (d0, r', r'')."""
    _check_k3_params(n)
    g = float(gamma)
    return np.array([
        [-1.0, 0.0, -g * math.sqrt(3.0 * n)],
        [0.0, -g * (2.0 * n - 17.0), 2.0 * g * math.sqrt(2.0 * n)],
        [-g * math.sqrt(3.0 * n), 2.0 * g * math.sqrt(2.0 * n), -g * (n - 2.0)],
    ])


def lambda_u(n: int, gamma: float) -> float:
    """Root of the block cubic closest to -1 - 1/(2n).

    Newton iteration from the seed -1 - 1/(2n) (tolerance 1e-14, at most
    100 steps); the result is cross-checked against the block spectrum and
    replaced by the nearest exact eigenvalue if the iteration wandered.
    """
    c3, c2, c1, c0 = char_cubic_coeffs(n, gamma)
    seed = -1.0 - 1.0 / (2.0 * n)
    lam = seed
    converged = False
    for _ in range(100):
        p = ((c3 * lam + c2) * lam + c1) * lam + c0
        dp = (3.0 * c3 * lam + 2.0 * c2) * lam + c1
        if dp == 0.0:
            break
        step = p / dp
        lam -= step
        if abs(step) < 1e-14:
            converged = True
            break
    evals, _ = eig_sym(pt_block(n, gamma))
    if converged:
        nearest = float(evals[np.argmin(np.abs(evals - lam))])
        if abs(lam - nearest) <= 1e-9 * max(1.0, abs(nearest)):
            return lam
    return float(evals[np.argmin(np.abs(evals - seed))])


def vector_u(n: int, gamma: float, lam: float) -> np.ndarray:
    """Eigenvector (u_d0, u_r', u_r'') of the block for eigenvalue lam.

    Built from the closed-form component ratios

        u_r'' = -(1 + lam) / (gamma sqrt(3n)) * u_d0,
        u_r'  = 2 sqrt(2n) / (2n - 17 + lam/gamma) * u_r'',

    then normalized with u_d0 > 0.  ``lam`` must actually belong to the
    block spectrum (checked to 1e-8); a vanishing pivot 2n - 17 +
    lam/gamma means the ratio form breaks down, reported as
    SingularPivotError rather than returning garbage.
    """
    _check_k3_params(n)
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    evals, _ = eig_sym(pt_block(n, gamma))
    if float(np.abs(evals - lam).min()) > 1e-8:
        raise ValueError(
            f"lam={lam} is not an eigenvalue of the (d0, r', r'') block")
    pivot = 2.0 * n - 17.0 + lam / gamma
    if abs(pivot) < 1e-10:
        raise SingularPivotError(
            f"component ratio for u_r' is singular at n={n}, gamma={gamma}, "
            f"lam={lam} (pivot {pivot:.3e})")
    u_rpp = -(1.0 + lam) / (gamma * math.sqrt(3.0 * n))
    u_rp = 2.0 * math.sqrt(2.0 * n) / pivot * u_rpp
    u = np.array([1.0, u_rp, u_rpp])
    return u / np.linalg.norm(u)


@dataclass(frozen=True)
class TwoLevelSystem:
    """Effective two-level Hamiltonian over (r, u) with its eigenpairs."""

    matrix: np.ndarray
    e_minus: float
    e_plus: float
    alpha_minus: np.ndarray
    alpha_plus: np.ndarray


def effective_two_level(n: int, gamma: float) -> TwoLevelSystem:
    """Project the transformed Hamiltonian onto span{|r>, |u>}.

    |u> is embedded with a zero r-component, so the 2x2 entries are plain
    quadratic forms of the full transformed Hamiltonian.  Eigenvalues come
    back ordered (e_minus <= e_plus); near the critical jumping rate the
    eigenvectors tend to (1, +-1)/sqrt(2) and the gap e_plus - e_minus
    shrinks like 2*sqrt(6)/n^(3/2).
    """
    lam = lambda_u(n, gamma)
    u = vector_u(n, gamma, lam)
    hp = reduced.transformed_hamiltonian(n, gamma)
    r4 = np.array([0.0, 1.0, 0.0, 0.0])
    u4 = np.array([u[0], 0.0, u[1], u[2]])
    matrix = np.array([
        [r4 @ hp @ r4, r4 @ hp @ u4],
        [u4 @ hp @ r4, u4 @ hp @ u4],
    ])
    evals, evecs = eig_sym(matrix)
    return TwoLevelSystem(matrix=matrix,
                          e_minus=float(evals[0]), e_plus=float(evals[1]),
                          alpha_minus=evecs[:, 0], alpha_plus=evecs[:, 1])


@dataclass(frozen=True)
class PerturbationReport:
    """Everything the two-level reduction produces for one (n, gamma)."""

    n: int
    gamma: float
    cubic_coefficients: tuple[float, float, float, float]
    lambda_u: float
    u: np.ndarray
    effective_2x2: np.ndarray
    e_minus: float
    e_plus: float
    predicted_gap: float
    predicted_runtime: float


def perturbation_report(n: int, gamma: Optional[float] = None) -> PerturbationReport:
    """Assemble the full k=3 perturbation picture at one jumping rate.

    With gamma omitted, the closed-form critical rate is used, which is
    where the two-level reduction is designed to hold.
    """
    if gamma is None:
        gamma = gamma_c_formula_k3(n).gamma
    lam = lambda_u(n, gamma)
    u = vector_u(n, gamma, lam)
    system = effective_two_level(n, gamma)
    gap = system.e_plus - system.e_minus
    if gap <= 0:
        raise ValueError(f"degenerate effective two-level system at gamma={gamma}")
    return PerturbationReport(
        n=n, gamma=float(gamma),
        cubic_coefficients=char_cubic_coeffs(n, gamma),
        lambda_u=lam, u=u,
        effective_2x2=system.matrix,
        e_minus=system.e_minus, e_plus=system.e_plus,
        predicted_gap=gap, predicted_runtime=math.pi / gap)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a full-graph vs reduced-model comparison."""

    n: int
    k: int
    gamma: float
    t_max: float
    steps: int
    max_deviation: float


def run_verification(n: int, k: int, gamma: float,
                     t_max: Optional[float] = None, steps: int = 200,
                     cap: int = DEFAULT_VERTEX_CAP) -> VerificationResult:
    """Compare brute-force and reduced success curves on a shared grid.

    The marked vertex is the lexicographically first k-subset (index 0).
    The default window [0, 2*pi*sqrt(N)] covers a full revival.  Returns
    the maximum pointwise deviation; anything beyond ~1e-10 indicates a
    broken quotient, not numerical noise.
    """
    graph = johnson.full_adjacency(n, k, cap=cap)
    n_vertices = graph.n_vertices
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    if t_max is None:
        t_max = 2.0 * math.pi * math.sqrt(n_vertices)
    if t_max < 0:
        raise ValueError(f"t_max must be non-negative, got {t_max}")

    s_full = np.full(n_vertices, 1.0 / math.sqrt(n_vertices))
    psi0 = reduced.initial_state(n, k)
    if t_max == 0.0:
        # exp(-iH*0) is the identity, so the grid degenerates to a single
        # point where both curves are just the initial marked probability.
        deviation = abs(s_full[0] ** 2 - psi0[0] ** 2)
        return VerificationResult(n=n, k=k, gamma=float(gamma), t_max=0.0,
                                  steps=1, max_deviation=float(deviation))

    h_full = -float(gamma) * graph.adjacency.astype(float)
    h_full[0, 0] -= 1.0
    full_curve = success_curve(h_full, s_full, 0, t_max, steps)
    model = reduced.search_hamiltonian(n, k, gamma)
    reduced_curve = success_curve(model.hamiltonian, psi0, model.marked_index,
                                  t_max, steps)
    deviation = float(np.abs(full_curve.probabilities
                             - reduced_curve.probabilities).max())
    return VerificationResult(n=n, k=k, gamma=float(gamma), t_max=float(t_max),
                              steps=int(steps), max_deviation=deviation)
