"""The normalized kernel theta(u)/theta(0) and its vanishing locus in genus 1.

In genus one the difference variable u lives on the torus C/(Z + tau Z), so
the vanishing locus of the kernel is completely explicit: one zero per cell,
at an offset determined by the characteristic.  The script locates the zeros
for all three even characteristics and draws an ASCII magnitude map.
"""

import numpy as np

from spintheta import (
    PeriodMatrix,
    SzegoContext,
    elliptic_scorza_offset,
    even_characteristics,
    on_scorza_locus,
    szego,
    theta_batch,
)

TAU = 1j
pm = PeriodMatrix([[TAU]])

print(f"tau = {TAU}")
for char in even_characteristics(1):
    point = elliptic_scorza_offset(TAU, char)
    ctx = SzegoContext(pm, char)
    print(
        f"  characteristic eps={char.eps} del={char.delta}: zero at w = {point.zero_w}"
        f", |kernel| there = {abs(szego(ctx, [point.zero_w])):.2e}"
    )
print()

# ---------------------------------------------------------------------------
# Magnitude map of the kernel for the (0,0) characteristic over the cell
# {a + b tau}, 0 <= a, b < 1.  The zero sits at (a, b) = (1/2, 1/2).

char = even_characteristics(1)[0]
ctx = SzegoContext(pm, char)
size = 32
ab = np.arange(size) / size
aa, bb = np.meshgrid(ab, ab, indexing="ij")
values = np.abs(theta_batch(pm, (aa + bb * TAU).reshape(-1, 1), char) / ctx.theta_at_zero)
grid = values.reshape(size, size)

ramp = " .:-=+*#%@"
print("log|kernel| over the fundamental cell (rows: a, columns: b; 0 marks the zero):")
logs = np.log10(np.maximum(grid, 1e-18))
hi = logs.max()
lo = hi - 3.0  # show three decades around the funnel
logs = np.clip(logs, lo, hi)
zero_cell = np.unravel_index(np.argmin(grid), grid.shape)
for i in range(size):
    row = ""
    for j in range(size):
        if (i, j) == zero_cell:
            row += "0"
            continue
        level = (logs[i, j] - lo) / (hi - lo)
        row += ramp[min(int(level * (len(ramp) - 1)), len(ramp) - 1)]
    print("  " + row)
print()

# ---------------------------------------------------------------------------
# Membership testing respects the lattice: every translate of the zero is on
# the locus, generic points are not.

w = elliptic_scorza_offset(TAU, char).zero_w
print("on_locus(w)            :", on_scorza_locus(ctx, [w]))
print("on_locus(w + 2 + tau)  :", on_scorza_locus(ctx, [w + 2 + TAU]))
print("on_locus(0.1 + 0.2i)   :", on_scorza_locus(ctx, [0.1 + 0.2j]))
