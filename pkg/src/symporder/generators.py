"""Deterministic path ensembles for experiments and sampling.

Random draws are keyed by ``numpy.random.default_rng([seed, stream_index])``
so that each generated object is reproducible independently of how many other
objects the caller requested before it.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError
from .matrices import complex_to_real, exp_i_hermitian, matrix_exp, standard_j
from .paths import DEFAULT_SAMPLES, SampledPath


def uniform_times(n_samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    return np.linspace(0.0, 1.0, n_samples)


def rotation_path(angle: float, n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    """Sp(2) rotation path t -> R(angle * t)."""
    t = uniform_times(n_samples)
    th = angle * t
    mats = np.empty((n_samples, 2, 2))
    mats[:, 0, 0] = np.cos(th)
    mats[:, 0, 1] = -np.sin(th)
    mats[:, 1, 0] = np.sin(th)
    mats[:, 1, 1] = np.cos(th)
    return SampledPath(t, mats)


def rotation_loop(k: int = 1, n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    """k-fold rotation loop in Sp(2); its winding is 2*pi*k."""
    return rotation_path(2.0 * np.pi * k, n_samples)


def diagonal_unitary_path(angles: np.ndarray, times: np.ndarray) -> SampledPath:
    """Path diag(exp(i * theta_j(t))) embedded into Sp(2n, R).

    ``angles`` has shape (N, n) with angles[0] == 0 so the path starts at the
    identity.
    """
    angles = np.asarray(angles, dtype=float)
    if angles.ndim != 2 or len(angles) != len(times):
        raise InputError("angles must have shape (n_samples, n)")
    n = angles.shape[1]
    phases = np.exp(1j * angles)
    u = np.zeros((len(times), n, n), dtype=complex)
    idx = np.arange(n)
    u[:, idx, idx] = phases
    return SampledPath(np.asarray(times, dtype=float), complex_to_real(u))


def unitary_loop(multiplicities, basis: np.ndarray | None = None,
                 n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    """Unitary loop V diag(exp(2*pi*i*m_j*t)) V^H with integer windings m_j."""
    m = np.asarray(multiplicities, dtype=int)
    t = uniform_times(n_samples)
    phases = np.exp(2j * np.pi * np.outer(t, m))
    n = len(m)
    diag = np.zeros((n_samples, n, n), dtype=complex)
    idx = np.arange(n)
    diag[:, idx, idx] = phases
    if basis is None:
        u = diag
    else:
        u = basis @ diag @ basis.conj().T
    return SampledPath(t, complex_to_real(u))


def random_unitary_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish unitary from the QR of a complex Gaussian, phases fixed."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _random_hermitian(n: int, rng: np.random.Generator, scale: float) -> np.ndarray:
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = 0.5 * (z + z.conj().T)
    return scale * h / max(np.linalg.norm(h, 2), 1e-12)


def random_hermitian_generator(n: int, rng: np.random.Generator, scale: float = 2.0):
    """Smooth random Hermitian-valued map h(t) built from three fixed modes."""
    b0 = _random_hermitian(n, rng, scale)
    b1 = _random_hermitian(n, rng, scale)
    b2 = _random_hermitian(n, rng, scale)

    def h(t: float) -> np.ndarray:
        return b0 + np.sin(2 * np.pi * t) * b1 + np.cos(2 * np.pi * t) * b2

    return h


def unitary_path_from_generator(h, n: int, n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    """Midpoint product integration of du/dt = i h(t) u, mapped into Sp(2n, R).

    Each step factor is built spectrally, so every sample is unitary to
    machine precision regardless of the step count.
    """
    t = uniform_times(n_samples)
    mids = 0.5 * (t[:-1] + t[1:])
    dts = np.diff(t)
    gens = np.stack([dt * h(tm) for dt, tm in zip(dts, mids)])
    steps = exp_i_hermitian(gens)
    u = np.empty((n_samples, n, n), dtype=complex)
    u[0] = np.eye(n)
    for k in range(n_samples - 1):
        u[k + 1] = steps[k] @ u[k]
    return SampledPath(t, complex_to_real(u))


def random_unitary_path(n: int, rng: np.random.Generator, scale: float = 2.0,
                        n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    return unitary_path_from_generator(
        random_hermitian_generator(n, rng, scale), n, n_samples)


def _random_symmetric(dim: int, rng: np.random.Generator, scale: float) -> np.ndarray:
    a = rng.normal(size=(dim, dim))
    s = 0.5 * (a + a.T)
    return scale * s / max(np.linalg.norm(s, 2), 1e-12)


def random_symmetric_generator(dim: int, rng: np.random.Generator, scale: float = 1.5):
    """Smooth random symmetric-valued map H(t), the Hamiltonian of a path."""
    b0 = _random_symmetric(dim, rng, scale)
    b1 = _random_symmetric(dim, rng, scale)
    b2 = _random_symmetric(dim, rng, scale)

    def ham(t: float) -> np.ndarray:
        return b0 + np.sin(2 * np.pi * t) * b1 + np.cos(2 * np.pi * t) * b2

    return ham


def symplectic_path_from_hamiltonian(ham, dim: int,
                                     n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    """Midpoint product integration of dX/dt = J H(t) X.

    Step factors are exponentials of Hamiltonian matrices, hence exactly
    symplectic; the assembled samples drift from Sp(2n) only by roundoff.
    """
    t = uniform_times(n_samples)
    j = standard_j(dim // 2)
    mids = 0.5 * (t[:-1] + t[1:])
    dts = np.diff(t)
    gens = np.stack([dt * (j @ ham(tm)) for dt, tm in zip(dts, mids)])
    steps = matrix_exp(gens)
    mats = np.empty((n_samples, dim, dim))
    mats[0] = np.eye(dim)
    for k in range(n_samples - 1):
        mats[k + 1] = steps[k] @ mats[k]
    return SampledPath(t, mats)


def random_symplectic_path(dim: int, rng: np.random.Generator, scale: float = 1.5,
                           n_samples: int = DEFAULT_SAMPLES) -> SampledPath:
    return symplectic_path_from_hamiltonian(
        random_symmetric_generator(dim, rng, scale), dim, n_samples)


def commuting_unitary_pair(n: int, rng: np.random.Generator, ratio: float | None = None,
                           n_samples: int = DEFAULT_SAMPLES):
    """Commuting diagonal-unitary dominant pair (X, Y) with Y's angle
    velocities a common multiple of X's.

    Per component, theta_j(t) = w_j t + (d_j / 2 pi) sin(2 pi t) with
    |d_j| < w_j, so theta_j' > 0 and X is dominant.  Y uses ratio * theta_j.
    Returns (X, Y, ratio); the relative growth of the pair equals ratio.
    """
    t = uniform_times(n_samples)
    w = rng.uniform(2.0, 8.0, size=n)
    d = rng.uniform(-0.8, 0.8, size=n) * w
    theta = np.outer(t, w) + np.sin(2 * np.pi * t)[:, None] * (d / (2 * np.pi))
    if ratio is None:
        ratio = float(rng.uniform(0.5, 2.5))
    x = diagonal_unitary_path(theta, t)
    y = diagonal_unitary_path(ratio * theta, t)
    return x, y, ratio


def random_positive_diagonal_target(n: int, rng: np.random.Generator,
                                    spread: float = 1.0) -> np.ndarray:
    """Diagonal symplectic positive matrix diag(l_1..l_n, 1/l_1..1/l_n)."""
    lams = np.exp(rng.uniform(-spread, spread, size=n))
    return np.diag(np.concatenate([lams, 1.0 / lams]))
