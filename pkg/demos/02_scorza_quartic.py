"""The quartic form (1/2) theta2^2 - theta0 * theta4 attached to an even
characteristic, its degeneration, and rank-one polars.

The Taylor jet of an even theta at the origin packs into a quartic whose
fourth-derivative tensor is

    Q[ijkl] = H[ij]H[kl] + H[ik]H[jl] + H[il]H[jk] - theta0 * T[ijkl],

with H the Hessian and T the fourth-derivative tensor.  The same combination
assembled directly from theta derivatives (`beta_tensor`) must agree entry by
entry, and when theta0 = 0 the quartic collapses onto the symmetrized square
of the Hessian: the quadratic tangent cone of the theta divisor, doubled.
"""

import numpy as np

from spintheta import (
    PeriodMatrix,
    QuarticForm,
    ThetaCharacteristic,
    beta_tensor,
    polarize,
    rank_defect,
    scorza_quartic,
    theta_jet,
)

# ---------------------------------------------------------------------------
# A generic genus-2 period matrix and an even characteristic.

pm = PeriodMatrix([[0.1 + 1.2j, 0.3 + 0.2j], [0.3 + 0.2j, -0.2 + 1.5j]])
char = ThetaCharacteristic((0, 1), (1, 0))

jet = theta_jet(pm, char)
print("theta0 =", jet.theta0)
print("Hessian:")
print(jet.theta2)

quartic = scorza_quartic(jet)
direct = beta_tensor(pm, char)
gap = np.max(np.abs(quartic.coeffs - direct.coeffs)) / np.max(np.abs(quartic.coeffs))
print("jet route vs direct derivative route, relative gap:", gap)
print()

# ---------------------------------------------------------------------------
# Degeneration.  On a diagonal period matrix the characteristic that is odd in
# both factors is even overall, yet its theta constant vanishes; the quartic
# then equals the symmetrized square of the Hessian exactly.

pm_null = PeriodMatrix([[1j, 0], [0, 2j]])
char_null = ThetaCharacteristic((1, 1), (1, 1))
jet_null = theta_jet(pm_null, char_null)
print("degenerate jet: |theta0| =", abs(jet_null.theta0))
h = jet_null.theta2
cone = (
    np.einsum("ij,kl->ijkl", h, h)
    + np.einsum("ik,jl->ijkl", h, h)
    + np.einsum("il,jk->ijkl", h, h)
)
collapse = np.max(np.abs(scorza_quartic(jet_null).coeffs - cone))
print("quartic minus squared-Hessian cone, max entry:", collapse)
print()

# ---------------------------------------------------------------------------
# Polars.  The second polar of a fourth power of a linear form is a rank-one
# quadric; `rank_defect` reports the numerical rank and the ratio of the two
# largest singular values.

rng = np.random.default_rng(1)
ell = rng.normal(size=3) + 1j * rng.normal(size=3)
fourth_power = QuarticForm(3, np.einsum("i,j,k,l->ijkl", ell, ell, ell, ell))
x = rng.normal(size=3)
y = rng.normal(size=3)
polar = polarize(fourth_power, x, y)
rank, ratio = rank_defect(polar)
print("polar of a fourth power: rank =", rank, " second/first singular value =", ratio)

# for comparison, a generic theta quartic polar has full rank
polar_generic = polarize(quartic, [1.0, 0.5], [0.2, -1.0])
print("generic polar:           rank =", rank_defect(polar_generic)[0])
