"""Theta functions with half-integer characteristics, from the ground up.

Walks through the basic objects: period matrices, characteristics and their
parity, the truncated lattice sum, derivatives, and the functional equation
under lattice translations.
"""

import numpy as np

from spintheta import (
    PeriodMatrix,
    ThetaCharacteristic,
    all_characteristics,
    parity,
    quasi_period_factor,
    theta,
    theta_deriv,
)

# ---------------------------------------------------------------------------
# A period matrix is symmetric with positive-definite imaginary part.  The
# simplest example is the elliptic curve with modulus tau = i.

pm = PeriodMatrix([[1j]])
c00 = ThetaCharacteristic([0], [0])  # entries are numerators over 2

value = theta(pm, [0], c00)
print("theta[0,0](0; i) =", value)
print("classical value    1.0864348112133080... (pi^(1/4) / Gamma(3/4))")
print()

# ---------------------------------------------------------------------------
# Parity: the characteristic (eps, del) is even iff 4 eps.del is even.  Odd
# characteristics give odd functions of z, so their theta constant vanishes.

print("characteristics of genus 1:")
for char in all_characteristics(1):
    constant = theta(pm, [0], char)
    print(f"  eps={char.eps} del={char.delta}  {parity(char):4s}  theta(0) = {constant:.6f}")
print()

# ---------------------------------------------------------------------------
# Derivatives up to order four come from term-by-term differentiation of the
# lattice sum.  Odd-order derivatives of an even theta vanish at the origin.

print("theta'(0)    =", theta_deriv(pm, [0], c00, (0,)))
print("theta''(0)   =", theta_deriv(pm, [0], c00, (0, 0)))
print("theta''''(0) =", theta_deriv(pm, [0], c00, (0, 0, 0, 0)))
print()

# ---------------------------------------------------------------------------
# Quasi-periodicity: shifting z by m + Omega n multiplies theta by an explicit
# exponential factor.  This is the standard correctness oracle for the sum.

pm2 = PeriodMatrix([[0.2 + 1.3j, 0.1 + 0.2j], [0.1 + 0.2j, -0.3 + 1.6j]])
char = ThetaCharacteristic((0, 1), (1, 0))
z = np.array([0.3 + 0.1j, -0.2 + 0.25j])
m = np.array([1, -1])
n = np.array([0, 1])

lhs = theta(pm2, z + m + pm2.omega @ n, char)
rhs = quasi_period_factor(pm2, char, z, m, n) * theta(pm2, z, char)
print("genus 2, shift by m + Omega n:")
print("  theta(z + m + Omega n)          =", lhs)
print("  factor * theta(z)               =", rhs)
print("  relative error                  =", abs(lhs - rhs) / abs(lhs))
