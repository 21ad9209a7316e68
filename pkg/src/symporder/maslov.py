"""Maslov winding quasimorphism and positive-path constructions.

Normalization: all winding values are reported in RADIANS.  The index of a
path is the total continuous change of ``arg det u(t)`` where ``u(t)`` is the
complex form of the orthogonal polar factor of ``X(t)``; a single
counterclockwise rotation loop in Sp(2) scores ``2*pi``.  Divide by ``2*pi``
for turn counts.  Every threshold in this package (``2*pi*n`` for order
certificates, ``4*pi*n`` for synthesis cost, ``6*pi*n`` for the positivity
criterion) is stated in the same radian convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResolutionError
from .generators import random_symplectic_path
from .matrices import (
    commutes_with_j,
    exp_i_hermitian,
    real_to_complex,
    standard_j,
    unitary_polar_factor,
)
from .paths import SampledPath, compose, extract_hamiltonian, pointwise_power, refine

REFINEMENT_CAP = 2 ** 16
# refuse to trust per-step determinant increments this close to the aliasing
# boundary at pi
STEP_GUARD = 1e-2


@dataclass(frozen=True)
class MaslovResult:
    """Winding of the determinant of the unitary polar factor, in radians.

    ``value`` is exactly the float sum of ``per_step_increments`` and
    ``max_step`` is strictly below pi, otherwise the grid was refined before
    this result was produced.
    """

    value: float
    per_step_increments: np.ndarray
    max_step: float

    @property
    def turns(self) -> float:
        return self.value / (2.0 * np.pi)


def _det_of_unitary_factor(mats: np.ndarray) -> np.ndarray:
    u = unitary_polar_factor(mats)
    return np.linalg.det(real_to_complex(u))


def maslov_index(path: SampledPath, max_samples: int = REFINEMENT_CAP) -> MaslovResult:
    """Winding of arg det of the unitary polar factor along the path.

    Increments between consecutive samples are taken as principal arguments;
    whenever one comes within ``STEP_GUARD`` of the aliasing boundary pi the
    grid is doubled (interpolating with local generators) and the whole
    computation retried, up to ``max_samples`` samples.
    """
    current = path
    while True:
        dets = _det_of_unitary_factor(current.matrices)
        incs = np.angle(dets[1:] * np.conj(dets[:-1]))
        max_step = float(np.abs(incs).max())
        if max_step < np.pi - STEP_GUARD:
            return MaslovResult(value=float(incs.sum()),
                                per_step_increments=incs,
                                max_step=max_step)
        if 2 * (current.n_samples - 1) + 1 > max_samples:
            raise ResolutionError(
                f"winding steps still reach {max_step:.3f} rad at "
                f"{current.n_samples} samples (cap {max_samples})")
        current = refine(current, 2)


def maslov_via_trace(path: SampledPath, tol: float = 1e-9) -> float:
    """Independent winding route for unitary paths: integrate tr h(t).

    For a path in the unitary subgroup the complex generator satisfies
    ``du/dt u^{-1} = i h`` with h Hermitian, and the winding equals the time
    integral of ``tr h``.  In the real picture ``tr h = tr H / 2``.  Uses
    finite-difference extraction plus trapezoid quadrature, so it converges
    at second order and shares no code path with :func:`maslov_index`.
    """
    if not commutes_with_j(path.matrices, tol):
        raise InputError("trace route requires a unitary path "
                         "(samples must commute with J)")
    track = extract_hamiltonian(path)
    traces = 0.5 * np.trace(track.hams, axis1=-2, axis2=-1)
    return float(np.trapezoid(traces, track.times))


def pointwise_power_index(path: SampledPath, k: int) -> float:
    return maslov_index(pointwise_power(path, k)).value


def homogenize(path: SampledPath, k_max: int) -> np.ndarray:
    """Sequence maslov(X^k)/k for k = 1..k_max.

    The sequence converges to the homogeneous quasimorphism at rate C/k,
    with C the quasimorphism defect; on unitary paths it is constant.
    """
    if k_max < 1:
        raise InputError("k_max must be at least 1")
    return np.array([pointwise_power_index(path, k) / k for k in range(1, k_max + 1)])


def quasimorphism_defect_sample(num_pairs: int, dim: int, seed: int,
                                scale: float = 1.5, n_samples: int = 256,
                                include_powers: bool = True) -> float:
    """Empirical quasimorphism defect max |mu(XY) - mu(X) - mu(Y)|.

    Pairs are drawn from the smooth random-path ensemble, keyed by
    (seed, pair index) so individual draws are reproducible.  Every third
    pair reuses a power of its first member as the second, which probes the
    defect along the homogenization direction as well.
    """
    worst = 0.0
    for i in range(num_pairs):
        rng = np.random.default_rng([seed, i])
        x = random_symplectic_path(dim, rng, scale=scale, n_samples=n_samples)
        if include_powers and i % 3 == 2:
            y = pointwise_power(x, 2)
        else:
            y = random_symplectic_path(dim, rng, scale=scale, n_samples=n_samples)
        defect = abs(maslov_index(compose(x, y)).value
                     - maslov_index(x).value - maslov_index(y).value)
        worst = max(worst, defect)
    return worst


def defect_constant(dim: int, num_pairs: int = 20, seed: int = 7,
                    safety: float = 2.0) -> float:
    """Sampled defect bound with a safety factor for downstream certificates."""
    return safety * quasimorphism_defect_sample(num_pairs, dim, seed)


def positivity_criterion(path: SampledPath, c_emp: float) -> bool:
    """Sufficient winding test for positivity: maslov(X) >= 6*pi*n + c_emp.

    ``c_emp`` should be an empirical defect bound including its own safety
    margin (see :func:`defect_constant`).  A False return decides nothing.
    """
    n = path.half_dim
    return maslov_index(path).value >= 6.0 * np.pi * n + c_emp


@dataclass(frozen=True)
class RedistributedSpectrum:
    """Nonnegative eigenvalue vector with prescribed trace, plus its basis.

    Reassembling ``basis @ diag(eigenvalues) @ basis^H`` gives a Hermitian
    matrix with the requested trace whose imaginary exponential equals that
    of the original input.
    """

    eigenvalues: np.ndarray
    basis: np.ndarray

    def matrix(self) -> np.ndarray:
        return (self.basis * self.eigenvalues[None, :]) @ self.basis.conj().T


def redistribute_eigenvalues(a: np.ndarray, target_mu: float,
                             tol: float = 1e-9) -> RedistributedSpectrum:
    """Shift a Hermitian spectrum by multiples of 2*pi onto a target trace.

    Each eigenvalue is first reduced modulo 2*pi into (0, 2*pi]; the trace
    deficit ``target_mu - sum`` must then be a whole number k >= 0 of 2*pi
    quanta.  Writing k = l*n + m, every eigenvalue gains l quanta and the m
    smallest (by original eigenvalue) gain one more.  The result keeps
    exp(iA) fixed, stays entrywise positive, and spreads the spectrum over a
    window no wider than 2*pi*n.  Requires ``target_mu >= 2*pi*n``; k = 0 is
    a valid no-op.
    """
    a = np.asarray(a)
    n = a.shape[-1]
    if a.shape != (n, n):
        raise InputError(f"expected a square matrix, got {a.shape}")
    if np.abs(a - a.conj().T).max() > tol:
        raise InputError("matrix is not Hermitian within tolerance")
    two_pi = 2.0 * np.pi
    if target_mu < two_pi * n - tol:
        raise InputError(
            f"target {target_mu:.6f} below threshold 2*pi*n = {two_pi * n:.6f}")
    w, v = np.linalg.eigh(a)
    reduced = np.mod(w, two_pi)
    reduced[reduced <= tol] += two_pi  # (0, 2*pi] convention
    k_float = (target_mu - reduced.sum()) / two_pi
    k = int(round(k_float))
    if abs(k_float - k) * two_pi > max(tol, 1e-7):
        raise InputError(
            "target trace is not congruent to the input spectrum modulo 2*pi")
    if k < 0:
        raise InputError("target below the reduced spectrum sum")
    quanta, extra = divmod(k, n)
    new = reduced + two_pi * quanta
    new[:extra] += two_pi  # eigh order is ascending, so these are the smallest
    return RedistributedSpectrum(eigenvalues=new, basis=v)


def unitary_endpoint(spectrum: RedistributedSpectrum) -> np.ndarray:
    """exp(i * reassembled matrix); invariant under the redistribution."""
    return exp_i_hermitian(spectrum.matrix())


# ---------------------------------------------------------------------------
# positive path synthesis


def _pair_spd_symplectic(p: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal-symplectic diagonalization of a positive symplectic matrix.

    Returns (q, lams) with q orthogonal and symplectic and
    ``q.T @ p @ q = diag(lams, 1/lams)``.  Eigenvalues of p pair as
    (l, 1/l) because ``p J p = J``; eigenvectors v with l > 1 pair with
    ``J v``.  The eigenspace at 1 is J-invariant and is split greedily into
    planes span{v, Jv}.
    """
    dim = p.shape[0]
    n = dim // 2
    j = standard_j(n)
    w, v = np.linalg.eigh(p)
    if w[0] <= tol:
        raise InputError("matrix is not positive definite")
    log_w = np.log(w)
    cluster_tol = 1e-8
    plus = np.where(log_w > cluster_tol)[0]
    ones = np.where(np.abs(log_w) <= cluster_tol)[0]
    if 2 * len(plus) + len(ones) != dim:
        raise InputError("eigenvalues do not pair as (l, 1/l); input is not "
                         "symplectic within tolerance")
    pairs: list[tuple[float, np.ndarray]] = []
    for idx in plus[::-1]:  # descending eigenvalue
        pairs.append((float(w[idx]), v[:, idx]))
    if len(ones):
        basis = v[:, ones]
        while basis.shape[1] > 0:
            b = basis[:, 0]
            b = b / np.linalg.norm(b)
            c = j @ b
            lam = float(b @ p @ b)
            pairs.append((lam, b))
            # remove span{b, c} from the working basis
            rest = basis - np.outer(b, b @ basis) - np.outer(c, c @ basis)
            qr_q, qr_r = np.linalg.qr(rest)
            keep = np.abs(np.diagonal(qr_r)) > 1e-10
            basis = qr_q[:, keep]
            if basis.shape[1] > max(0, rest.shape[1] - 2):
                basis = basis[:, : rest.shape[1] - 2]
    pairs.sort(key=lambda item: -item[0])
    if len(pairs) != n:
        raise InputError(f"found {len(pairs)} eigenvalue pairs, expected {n}")
    lams = np.array([lam for lam, _ in pairs])
    vecs = np.stack([vec for _, vec in pairs], axis=1)
    q = np.concatenate([vecs, j @ vecs], axis=1)
    return q, lams


def _stretch_rotation_block(lam: float, times: np.ndarray) -> np.ndarray:
    """Sp(2) positive path U(t) F(t) U(t) from identity to diag(lam, 1/lam).

    ``U`` is the rotation by 2*pi*t and ``F = diag(f, 1/f)`` with
    ``f(t) = tan(pi/4 + a t)``, ``a = arctan(lam) - pi/4``.  Because
    |a| < pi/4 the slope of f never outruns the rotation and the path's
    generator stays positive definite; its winding is exactly 4*pi.
    """
    a = np.arctan(lam) - np.pi / 4.0
    f = np.tan(np.pi / 4.0 + a * times)
    th = 2.0 * np.pi * times
    c, s = np.cos(th), np.sin(th)
    u = np.empty((len(times), 2, 2))
    u[:, 0, 0] = c
    u[:, 0, 1] = -s
    u[:, 1, 0] = s
    u[:, 1, 1] = c
    fmat = np.zeros((len(times), 2, 2))
    fmat[:, 0, 0] = f
    fmat[:, 1, 1] = 1.0 / f
    return u @ fmat @ u


def positive_path_to(p: np.ndarray, n_samples: int = 512,
                     tol: float = 1e-9) -> SampledPath:
    """Positive path from the identity to a positive symplectic endpoint.

    Diagonalizes ``p`` with an orthogonal-symplectic basis, drives each
    (l, 1/l) eigenvalue plane with the rotating-stretch block path, and
    conjugates back.  The result has a strictly positive generator, endpoint
    ``p`` up to roundoff, and winding 4*pi per plane (so at most
    ``4*pi*n`` overall).  Blocks are laid down in descending eigenvalue
    order, which makes the construction deterministic.
    """
    p = np.asarray(p, dtype=float)
    if np.abs(p - p.T).max() > tol:
        raise InputError("endpoint must be symmetric")
    dim = p.shape[0]
    n = dim // 2
    q, lams = _pair_spd_symplectic(p, tol)
    times = np.linspace(0.0, 1.0, n_samples)
    mats = np.broadcast_to(np.eye(dim), (n_samples, dim, dim)).copy()
    for i, lam in enumerate(lams):
        block = _stretch_rotation_block(lam, times)
        mats[:, i, i] = block[:, 0, 0]
        mats[:, i, i + n] = block[:, 0, 1]
        mats[:, i + n, i] = block[:, 1, 0]
        mats[:, i + n, i + n] = block[:, 1, 1]
    mats = q @ mats @ q.T
    return SampledPath(times, mats)
