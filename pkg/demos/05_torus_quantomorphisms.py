"""Order, growth and distances for quantomorphism lifts over a torus.

Autonomous lifted flows commuting with the fiber rotation reduce to a
rotation amount s plus a normalized leaf function F; everything from the
symplectic story becomes a pointwise formula in the generator s + F.  Two
structural facts stand out: distance to the pure-rotation curve has a closed
form, and sup-norm function space embeds isometrically into this metric
space.
"""

import numpy as np

from symporder import (
    QuantElement,
    calabi_weinstein,
    embed_into_z,
    gamma_n_quant_bruteforce,
    gamma_quant,
    hofer_norms,
    k_quant,
    normalize_leaf,
    order_bridge,
    rotation_curve_distance,
    torus_grid,
)

(p,) = torus_grid((512,))
cos_leaf = normalize_leaf(np.cos(2 * np.pi * p))

print("dominance and the order bridge for e^{is} f, F = cos(2 pi p)")
norms = hofer_norms(cos_leaf)
print(f"  one-sided norms: plus = {norms.plus:.3f}, minus = {norms.minus:.3f}")
for s in (2.0, 1.0, 0.5, -1.5):
    above, below = order_bridge(s, cos_leaf)
    margin = s - norms.minus
    state = "dominant" if margin > 1e-12 else (
        "order boundary" if abs(margin) <= 1e-12 else "not dominant")
    print(f"  s = {s:+.1f}:  >= identity: {above}   <= identity: {below}   ({state})")
print()

a = QuantElement(2.0, cos_leaf)
b = QuantElement(3.0, cos_leaf)
gamma = gamma_quant(a, b)
print(f"relative growth of (s=2, F) and (s=3, F): gamma = {gamma}")
print("  the integer staircase pins gamma into [gamma_n/n - 1/n, gamma_n/n]:")
for n in (1, 10, 100, 10000):
    m = gamma_n_quant_bruteforce(a, b, n)
    print(f"    n = {n:5d}:  gamma_n = {m:6d}   gamma_n/n = {m / n:.6f}")
print(f"  pseudo-distance K = {k_quant(a, b):.6f}  (= log gamma = {np.log(gamma):.6f})")
print()

print("distance to the rotation curve, closed form vs direct minimization")
dist = rotation_curve_distance(2.0, cos_leaf)
ts = np.geomspace(0.5, 4.0, 200001)
direct = np.maximum(np.log((2.0 + norms.plus) / ts), np.log(ts / (2.0 - norms.minus))).min()
print(f"  closed form {dist.value:.9f}  = 0.5*log(3) = {0.5 * np.log(3.0):.9f}")
print(f"  direct grid {direct:.9f}   minimizer t* = {dist.t_star:.6f} = sqrt(3)")
print()

print("an isometric copy of sup-norm function space")
rng = np.random.default_rng(9)
f = normalize_leaf(rng.normal(size=512))
g = normalize_leaf(rng.normal(size=512))
lhs = k_quant(embed_into_z(f), embed_into_z(g))
rhs = np.abs(f.values - g.values).max()
print(f"  K(embed F, embed G) = {lhs:.12f}")
print(f"  max |F - G|         = {rhs:.12f}")
print()

print("Calabi-Weinstein invariant: zero iff the family is normalized")
family = [normalize_leaf(rng.normal(size=512)) for _ in range(9)]
print(f"  normalized family:   cw = {calabi_weinstein(family):+.2e}")
from symporder import LeafFunction
shifted = [LeafFunction(leaf.values + 0.25) for leaf in family]
print(f"  after adding 0.25:   cw = {calabi_weinstein(shifted):+.6f}")
