"""Stable-curve models of the degenerate correspondences.

Over each divisor at the boundary of the even spin moduli space the
correspondence degenerates to an explicit nodal curve.  Its arithmetic genus
must always come out at 1 + 3g(g-1) (the quotient model at 1 + 3g(g-1)/2),
which is a strong consistency check on every component genus and node count.
"""

from spintheta import (
    arithmetic_genus,
    genus_table,
    limit_model_A0,
    limit_model_Ai,
    limit_model_B0,
    limit_model_Bi,
    limit_model_T_thetanull,
    limit_model_thetanull,
)

G = 5
print(f"ambient genus g = {G}; expected p_a = 1 + 3g(g-1) = {1 + 3 * G * (G - 1)}")
print()

builders = [
    ("theta-null", limit_model_thetanull(G)),
    ("theta-null, quotient side", limit_model_T_thetanull(G)),
    ("irreducible-node boundary (A0)", limit_model_A0(G)),
    ("exceptional-node boundary (B0)", limit_model_B0(G)),
    ("separating node, even factors (A2)", limit_model_Ai(G, 2)),
    ("separating node, odd factors (B2)", limit_model_Bi(G, 2)),
]

for title, model in builders:
    genera = [c.genus for c in model.components]
    incidence = "explicit" if model.incidence_known else "count only"
    print(f"{title}:")
    print(f"  component genera : {genera}")
    print(f"  nodes            : {model.num_nodes} ({incidence})")
    print(f"  arithmetic genus : {arithmetic_genus(model)}")
    print()

# ---------------------------------------------------------------------------
# The genus formulas behind the models, tabulated for small g.

print("curve invariants by ambient genus:")
keys = [
    "correspondence",
    "quotient",
    "trace_curve",
    "trace_double_cover",
    "branched_double_cover",
    "normalized_correspondence",
    "invariant_curve",
    "invariant_quotient",
]
header = "  g " + "".join(f"{k[:12]:>14s}" for k in keys)
print(header)
for g in range(3, 9):
    table = genus_table(g)
    print(f"  {g} " + "".join(f"{table[k]:>14d}" for k in keys))
