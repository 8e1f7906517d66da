"""Riemann theta functions with half-integer characteristics.

The basic object is the lattice sum

    theta[eps, del](z, Omega) =
        sum over n in Z^g of
            exp( pi*i (n+eps)^T Omega (n+eps) + 2*pi*i (n+eps)^T (z+del) )

for a symmetric g x g period matrix Omega with positive-definite imaginary
part, a point z in C^g and half-integer characteristic vectors eps, del.
Sums are truncated over an integer box whose half-width is chosen so that a
conservative Gaussian tail bound is below the requested tolerance; partial
derivatives up to order four are obtained by term-by-term differentiation.

No Siegel reduction is attempted: callers are expected to supply reasonably
reduced period matrices (all supported uses have g <= 3 and Im(Omega) with
smallest eigenvalue well away from zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, NonPositiveDefinite, OrderTooHigh

__all__ = [
    "PeriodMatrix",
    "ThetaCharacteristic",
    "Tolerance",
    "parity",
    "theta",
    "theta_batch",
    "theta_deriv",
    "quasi_period_factor",
    "all_characteristics",
    "even_characteristics",
]

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PeriodMatrix:
    """A symmetric complex matrix with positive-definite imaginary part.

    Parameters
    ----------
    omega : array_like
        g x g complex matrix.  Symmetry is checked up to 1e-12 and the
        imaginary part must have strictly positive eigenvalues.
    """

    omega: np.ndarray

    def __init__(self, omega) -> None:
        arr = np.array(omega, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DimensionMismatch(f"period matrix must be square, got shape {arr.shape}")
        if np.max(np.abs(arr - arr.T)) > _SYMMETRY_TOL * max(1.0, np.max(np.abs(arr))):
            raise NonPositiveDefinite("period matrix is not symmetric")
        eigs = np.linalg.eigvalsh(arr.imag)
        if eigs[0] <= 0:
            raise NonPositiveDefinite(
                f"imaginary part is not positive definite (min eigenvalue {eigs[0]:.3e})"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "omega", arr)
        object.__setattr__(self, "_lambda_min", float(eigs[0]))

    @property
    def g(self) -> int:
        return self.omega.shape[0]

    @property
    def lambda_min(self) -> float:
        """Smallest eigenvalue of Im(omega); drives the truncation radius."""
        return self._lambda_min  # type: ignore[attr-defined]

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "omega": [[[float(v.real), float(v.imag)] for v in row] for row in self.omega],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PeriodMatrix":
        omega = np.array(
            [[complex(re, im) for re, im in row] for row in data["omega"]], dtype=complex
        )
        pm = cls(omega)
        if "g" in data and int(data["g"]) != pm.g:
            raise DimensionMismatch("declared genus does not match matrix size")
        return pm


@dataclass(frozen=True)
class ThetaCharacteristic:
    """Half-integer characteristic, stored as integer numerators over 2.

    ``eps`` and ``delta`` are length-g tuples with entries 0 or 1; the entry 1
    encodes the half-integer 1/2.  The parity of the characteristic is the
    parity of 4*eps.delta = sum(eps_i * delta_i) over the integers.
    """

    eps: tuple[int, ...]
    delta: tuple[int, ...]

    def __init__(self, eps: Sequence[int], delta: Sequence[int]) -> None:
        e = tuple(int(v) for v in eps)
        d = tuple(int(v) for v in delta)
        if len(e) != len(d) or not e:
            raise DimensionMismatch("eps and delta must be nonempty vectors of equal length")
        if any(v not in (0, 1) for v in e + d):
            raise ValueError("characteristic entries must be 0 or 1 (halves)")
        object.__setattr__(self, "eps", e)
        object.__setattr__(self, "delta", d)

    @property
    def g(self) -> int:
        return len(self.eps)

    def half_eps(self) -> np.ndarray:
        return np.array(self.eps, dtype=float) / 2.0

    def half_delta(self) -> np.ndarray:
        return np.array(self.delta, dtype=float) / 2.0

    def is_even(self) -> bool:
        return sum(e * d for e, d in zip(self.eps, self.delta)) % 2 == 0

    def to_json(self) -> dict:
        return {"eps": list(self.eps), "del": list(self.delta)}

    @classmethod
    def from_json(cls, data: dict) -> "ThetaCharacteristic":
        return cls(data["eps"], data["del"])

    @classmethod
    def parse(cls, text: str) -> "ThetaCharacteristic":
        """Parse the CLI form "e1,...,eg;d1,...,dg"."""
        try:
            eps_part, del_part = text.split(";")
            return cls(
                [int(v) for v in eps_part.split(",")],
                [int(v) for v in del_part.split(",")],
            )
        except ValueError as exc:
            raise ValueError(f"cannot parse characteristic {text!r}: {exc}") from exc


def parity(char: ThetaCharacteristic) -> str:
    """Return "even" or "odd"; even means 4*eps.delta is an even integer."""
    return "even" if char.is_even() else "odd"


def all_characteristics(g: int) -> Iterator[ThetaCharacteristic]:
    """All 4^g half-integer characteristics in lexicographic order."""
    for eps in product((0, 1), repeat=g):
        for delta in product((0, 1), repeat=g):
            yield ThetaCharacteristic(eps, delta)


def even_characteristics(g: int) -> list[ThetaCharacteristic]:
    """The 2^(g-1) (2^g + 1) even characteristics."""
    return [c for c in all_characteristics(g) if c.is_even()]


@dataclass(frozen=True)
class Tolerance:
    """Truncation target for lattice sums and the zero-detection threshold."""

    eps_trunc: float = 1e-12
    eps_zero: float = 1e-8

    def __post_init__(self) -> None:
        if not self.eps_trunc > 0:
            raise ValueError("eps_trunc must be positive")
        if not 0 < self.eps_zero < 1:
            raise ValueError("eps_zero must lie in (0, 1)")


DEFAULT_TOLERANCE = Tolerance()


def _box_radius(
    lam_min: float, g: int, eps_trunc: float, im_z_norm: float, order: int
) -> int:
    """Half-width M of the integer summation box.

    Every omitted term with sup-norm shell m > M has modulus at most
    exp(pi*|y|^2/lam_min) * exp(-pi*lam_min*(m - 1/2 - |y|/lam_min)^2) times a
    polynomial derivative factor, and a shell holds fewer than 2g(2m+1)^(g-1)
    lattice points, so the shell sum below over-counts the true tail.
    """
    s = im_z_norm / lam_min
    log_pref = math.pi * im_z_norm**2 / lam_min
    log_eps = math.log(eps_trunc)

    def log_shell(m: int) -> float:
        t = max(m - 0.5 - s, 0.0)
        poly = order * math.log(2 * math.pi * math.sqrt(g) * (m + 0.5)) if order else 0.0
        return (
            log_pref
            + math.log(2 * g)
            + (g - 1) * math.log(2 * m + 1)
            + poly
            - math.pi * lam_min * t * t
        )

    m = max(1, int(math.ceil(s + math.sqrt(max(-log_eps, 1.0) / (math.pi * lam_min)))))
    while True:
        # shells decay faster than geometrically once past the peak; 64 terms
        # of the majorant are enough to certify the tail
        tail = sum(math.exp(min(log_shell(k), 700.0)) for k in range(m + 1, m + 65))
        if tail <= eps_trunc:
            return m
        m += 1


def _lattice(g: int, radius: int) -> np.ndarray:
    grids = np.meshgrid(*([np.arange(-radius, radius + 1)] * g), indexing="ij")
    return np.stack([grid.ravel() for grid in grids], axis=-1).astype(float)


def _check_point(pm: PeriodMatrix, z) -> np.ndarray:
    arr = np.asarray(z, dtype=complex).reshape(-1)
    if arr.shape[0] != pm.g:
        raise DimensionMismatch(f"point has length {arr.shape[0]}, expected g={pm.g}")
    return arr


def _check_char(pm: PeriodMatrix, char: ThetaCharacteristic) -> None:
    if char.g != pm.g:
        raise DimensionMismatch(f"characteristic has g={char.g}, period matrix g={pm.g}")


def _theta_values(
    pm: PeriodMatrix,
    points: np.ndarray,
    char: ThetaCharacteristic,
    tol: Tolerance,
    mu: tuple[int, ...],
    radius: int | None,
) -> np.ndarray:
    g = pm.g
    im_norm = float(np.max(np.linalg.norm(points.imag, axis=1))) if points.size else 0.0
    if radius is None:
        radius = _box_radius(pm.lambda_min, g, tol.eps_trunc, im_norm, len(mu))
    v = _lattice(g, radius) + char.half_eps()
    quad = np.einsum("ni,ij,nj->n", v, pm.omega, v)
    weight = np.exp(1j * math.pi * quad)
    if mu:
        factor = np.ones(v.shape[0], dtype=complex)
        for idx in mu:
            factor *= 2j * math.pi * v[:, idx]
        weight = weight * factor
    shifted = points + char.half_delta()
    out = np.empty(points.shape[0], dtype=complex)
    # chunk over evaluation points to bound the (lattice x points) matrix
    chunk = max(1, int(4e6 // max(v.shape[0], 1)))
    for start in range(0, points.shape[0], chunk):
        block = shifted[start : start + chunk]
        phases = np.exp(2j * math.pi * (v @ block.T))
        out[start : start + chunk] = weight @ phases
    return out


def theta(
    pm: PeriodMatrix,
    z,
    char: ThetaCharacteristic,
    tol: Tolerance = DEFAULT_TOLERANCE,
    *,
    radius: int | None = None,
) -> complex:
    """Evaluate theta[char](z, omega) with truncation tail below eps_trunc.

    ``radius`` overrides the automatically chosen box half-width; it exists
    so convergence can be probed (doubling it must not move the value by more
    than eps_trunc).
    """
    _check_char(pm, char)
    pts = _check_point(pm, z).reshape(1, -1)
    return complex(_theta_values(pm, pts, char, tol, (), radius)[0])


def theta_batch(
    pm: PeriodMatrix,
    points,
    char: ThetaCharacteristic,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> np.ndarray:
    """Vectorized theta over an (n, g) array of points."""
    _check_char(pm, char)
    pts = np.asarray(points, dtype=complex)
    if pts.ndim != 2 or pts.shape[1] != pm.g:
        raise DimensionMismatch(f"points must have shape (n, {pm.g})")
    return _theta_values(pm, pts, char, tol, (), None)


def theta_deriv(
    pm: PeriodMatrix,
    z,
    char: ThetaCharacteristic,
    mu: Sequence[int],
    tol: Tolerance = DEFAULT_TOLERANCE,
    *,
    radius: int | None = None,
) -> complex:
    """Partial derivative of theta at z for a multi-index mu with |mu| <= 4.

    The multi-index is a sequence of coordinate indices (one per derivative);
    mixed partials are symmetric, so the order of entries is irrelevant.
    An empty mu reduces to theta().
    """
    mu_t = tuple(sorted(int(i) for i in mu))
    if len(mu_t) > 4:
        raise OrderTooHigh(f"derivative order {len(mu_t)} exceeds 4")
    _check_char(pm, char)
    if any(i < 0 or i >= pm.g for i in mu_t):
        raise DimensionMismatch(f"multi-index {mu_t} out of range for g={pm.g}")
    pts = _check_point(pm, z).reshape(1, -1)
    return complex(_theta_values(pm, pts, char, tol, mu_t, radius)[0])


def quasi_period_factor(
    pm: PeriodMatrix, char: ThetaCharacteristic, z, m, n
) -> complex:
    """Automorphy factor f with theta[char](z + m + omega n) = f * theta[char](z).

    Here m and n are integer vectors and

        f = exp(-pi*i n^T omega n - 2*pi*i n^T z + 2*pi*i (eps^T m - del^T n)).
    """
    _check_char(pm, char)
    zv = _check_point(pm, z)
    mv = np.asarray(m, dtype=float).reshape(-1)
    nv = np.asarray(n, dtype=float).reshape(-1)
    if mv.shape[0] != pm.g or nv.shape[0] != pm.g:
        raise DimensionMismatch("shift vectors must have length g")
    if not (np.all(mv == np.round(mv)) and np.all(nv == np.round(nv))):
        raise ValueError("shift vectors must be integral")
    exponent = (
        -1j * math.pi * (nv @ pm.omega @ nv)
        - 2j * math.pi * (nv @ zv)
        + 2j * math.pi * (char.half_eps() @ mv - char.half_delta() @ nv)
    )
    return complex(np.exp(exponent))
