"""Exact divisor-class arithmetic on the even spin moduli space.

The pulled-back Hodge class is pinned down in three moves: a replayable
first-Chern-class ledger gives the lambda-weight (77g-25)/4, the test-curve
pairings force all but one boundary coefficient to zero, and the last pairing
solves c_alpha0 = (69g-21)/16.  Everything is exact rational arithmetic.
"""

from fractions import Fraction

from spintheta import (
    chern_weight,
    intersect,
    limit_model_Ai,
    moving_slope_bound,
    pullback_delta0_prime,
    slope,
    szego_hodge_class,
    test_curve,
    theta_null_full_class,
)

G = 6

# ---------------------------------------------------------------------------
# The weight ledger.  Each row is derived from earlier rows by the recorded
# rule; replaying the rules must reproduce the stored values.

weight, ledger = chern_weight(G)
print(f"lambda-weight at g = {G}: {weight}   (replay consistent: {ledger.consistent()})")
for entry in ledger.entries:
    kind = "axiom" if entry.is_axiom else "derived"
    print(f"  {entry.name:26s} {str(entry.value):>8s}  [{kind}] {entry.note}")
print()

# ---------------------------------------------------------------------------
# The full class, solved from the test-curve pairings and re-verified.

cls = szego_hodge_class(G)
print("solved class coefficients (subtracted normal form):")
print("  lambda :", cls.c_lambda)
print("  alpha  :", [str(c) for c in cls.c_alpha])
print("  beta   :", [str(c) for c in cls.c_beta], " (b_i undetermined, nonnegative)")
for i in (2, G - 1):
    print(f"  pairing with F_{i}:", intersect(test_curve(G, "F_i", i), cls))
print("  pairing with H_0:", intersect(test_curve(G, "H_0"), cls))
print("  pairing with G_0:", intersect(test_curve(G, "G_0"), cls), f" (= 6g-3 = {6 * G - 3})")
print()

# ---------------------------------------------------------------------------
# Slopes.  The theta-null divisor has slope 4; the movable cone is bounded by
# the slope of the pulled-back Hodge class, strictly between 4 and 4 + 32/69.

print("slope of the theta-null class   :", slope(theta_null_full_class(G)))
print("movable-slope bound             :", moving_slope_bound(G), "=", float(moving_slope_bound(G)))
print("bounds for growing genus        :", [str(moving_slope_bound(g)) for g in (3, 5, 10, 40)])
print("limit value 4 + 32/69           :", float(Fraction(4) + Fraction(32, 69)))
print()

# ---------------------------------------------------------------------------
# The pullback of the irreducible boundary class, written as a bare sum.  Its
# boundary multiplicities are exactly the node counts of the limit models.

expansion = pullback_delta0_prime(G).expansion()
print("pullback of the irreducible boundary class:")
for key, value in expansion.items():
    if value:
        print(f"  {key}: {value}")
print()
for i in range(1, G // 2 + 1):
    model_nodes = limit_model_Ai(G, i).num_nodes
    print(f"  alpha_{i} multiplicity {expansion[('alpha', i)]} == nodes of the A_{i} model {model_nodes}")
