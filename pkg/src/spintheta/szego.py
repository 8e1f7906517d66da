"""The normalized theta quotient theta[c](u) / theta[c](0) on the Jacobian.

The quotient is defined for even characteristics whose theta constant does
not vanish; its zero locus (cut out at the eps_zero threshold) is the locus
of interest on the difference variable u = x - y.  In genus one the Abel map
is the identity, so the locus can be pinned down completely: it is the
lattice orbit of the single zero of theta[c] in the fundamental cell, which
`elliptic_scorza_offset` locates by a coarse grid scan plus Newton steps.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotFound, ThetaNull
from .theta import (
    DEFAULT_TOLERANCE,
    PeriodMatrix,
    ThetaCharacteristic,
    Tolerance,
    theta,
    theta_batch,
    theta_deriv,
)

__all__ = ["SzegoContext", "EllipticSpinPoint", "szego", "on_scorza_locus", "elliptic_scorza_offset"]

_GRID = 64
_NEWTON_STEPS = 50
_NEWTON_RESIDUAL = 1e-10


@dataclass(frozen=True, eq=False)
class SzegoContext:
    """Period data plus an even characteristic with nonvanishing theta constant."""

    period: PeriodMatrix
    char: ThetaCharacteristic
    theta_at_zero: complex

    def __init__(
        self,
        period: PeriodMatrix,
        char: ThetaCharacteristic,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> None:
        if not char.is_even():
            raise ThetaNull("odd characteristic: theta vanishes identically at the origin")
        value = theta(period, np.zeros(period.g), char, tol)
        if abs(value) <= tol.eps_zero:
            raise ThetaNull(
                f"|theta(0)| = {abs(value):.3e} <= eps_zero; normalized kernel undefined"
            )
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "theta_at_zero", complex(value))


def szego(ctx: SzegoContext, u, tol: Tolerance = DEFAULT_TOLERANCE) -> complex:
    """theta[char](u) / theta[char](0)."""
    return theta(ctx.period, u, ctx.char, tol) / ctx.theta_at_zero


def on_scorza_locus(ctx: SzegoContext, u, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff the normalized kernel vanishes at u up to eps_zero."""
    return abs(szego(ctx, u, tol)) < tol.eps_zero


@dataclass(frozen=True)
class EllipticSpinPoint:
    """Genus-1 spin structure together with the zero of its theta function."""

    tau: complex
    char: ThetaCharacteristic
    zero_w: complex


def _to_cell(w: complex, tau: complex) -> complex:
    # coordinates w = a + b*tau, reduced to a, b in [0, 1)
    b = w.imag / tau.imag
    a = w.real - b * tau.real
    return (a % 1.0) + (b % 1.0) * tau


def _newton(pm: PeriodMatrix, char: ThetaCharacteristic, tol: Tolerance, w: complex) -> complex:
    for _ in range(_NEWTON_STEPS):
        val = theta(pm, [w], char, tol)
        if abs(val) < _NEWTON_RESIDUAL:
            return w
        dval = theta_deriv(pm, [w], char, (0,), tol)
        if dval == 0:
            break
        w = w - val / dval
    raise NotFound(f"Newton refinement did not reach residual {_NEWTON_RESIDUAL}")


def elliptic_scorza_offset(
    tau: complex, char: ThetaCharacteristic, tol: Tolerance = DEFAULT_TOLERANCE
) -> EllipticSpinPoint:
    """Locate the unique zero of a genus-1 even theta in the fundamental cell.

    64 x 64 grid scan over {a + b*tau : a, b in [0, 1)} followed by at most 50
    Newton steps z -> z - theta(z)/theta'(z); the refined zero must satisfy
    |theta(w)| < 1e-10 or NotFound is raised.  The zero is reduced to the
    cell and polished again there, so the returned residual is evaluated at
    zero_w itself, not at a lattice translate.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise NotFound("tau must lie in the upper half-plane")
    if char.g != 1:
        raise NotFound("elliptic offset is a genus-1 computation")
    if not char.is_even():
        raise ThetaNull("odd characteristic: the zero sits at the origin, not a spin offset")
    pm = PeriodMatrix([[tau]])
    ab = np.arange(_GRID) / _GRID
    aa, bb = np.meshgrid(ab, ab, indexing="ij")
    pts = (aa + bb * tau).reshape(-1, 1)
    vals = theta_batch(pm, pts, char, tol)
    w = complex(pts[int(np.argmin(np.abs(vals))), 0])
    w = _newton(pm, char, tol, _to_cell(_newton(pm, char, tol, w), tau))
    return EllipticSpinPoint(tau, char, w)
