"""Moving a Hermitian spectrum to a prescribed winding budget.

A unitary endpoint exp(iA) does not determine the winding of the path that
reaches it: eigenvalues of A can be shifted by multiples of 2*pi without
changing the endpoint.  Given any compatible target trace of at least
2*pi*n, the redistribution below makes all eigenvalues positive with spread
at most 2*pi*n while keeping the endpoint unchanged.
"""

import numpy as np

from symporder import exp_i_hermitian, redistribute_eigenvalues, unitary_endpoint

two_pi = 2.0 * np.pi

print("two-level toy case: spectrum (5*pi, -pi), target winding 4*pi")
a = np.diag([5 * np.pi, -np.pi])
spectrum = redistribute_eigenvalues(a, 4 * np.pi)
print(f"  new eigenvalues {np.sort(spectrum.eigenvalues) / np.pi} * pi")
print(f"  trace {spectrum.eigenvalues.sum() / np.pi:.6f} * pi")
print()

rng = np.random.default_rng(3)
z = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
a = 1.2 * (z + z.conj().T)
n = 3
w = np.linalg.eigvalsh(a)
print(f"random Hermitian, n = {n}")
print(f"  original eigenvalues {np.round(w, 3)}")

reduced = np.mod(w, two_pi)
reduced[reduced <= 1e-12] += two_pi
k_min = int(np.ceil((two_pi * n - reduced.sum()) / two_pi))
for k in (max(k_min, 0), max(k_min, 0) + 1, max(k_min, 0) + 4):
    target = float(reduced.sum() + two_pi * k)
    spectrum = redistribute_eigenvalues(a, target)
    gap = spectrum.eigenvalues.max() - spectrum.eigenvalues.min()
    err = np.abs(unitary_endpoint(spectrum) - exp_i_hermitian(a)).max()
    print(f"  target {target / np.pi:7.3f}*pi ->"
          f" eigenvalues {np.round(np.sort(spectrum.eigenvalues) / np.pi, 3)}*pi,"
          f" spread {gap / np.pi:.3f}*pi (budget {2 * n}*pi),"
          f" endpoint error {err:.1e}")

print()
print("incompatible targets are rejected: the trace can only move in 2*pi steps")
try:
    redistribute_eigenvalues(a, float(reduced.sum() + 1.0 + two_pi * n))
except ValueError as exc:
    print(f"  rejected: {exc}")
