"""Taylor jets of even theta functions and the associated quartic form.

For an even characteristic the theta function has a Taylor expansion
theta = theta0 + theta2 + theta4 + ... at the origin.  We store the jet as
raw derivative tensors: theta2 is the Hessian H (so the quadratic term is
(1/2) z^T H z) and theta4 is the fourth-derivative tensor T (the quartic term
is (1/24) sum T[ijkl] z_i z_j z_k z_l).  Keeping the factorials out of the
stored data makes the quartic-form identity below free of bookkeeping:

    Q[ijkl] = H[ij]H[kl] + H[ik]H[jl] + H[il]H[jk] - theta0 * T[ijkl]

is exactly the fourth derivative of (1/2) theta2^2 - theta0 * theta4.  The
same combination assembled directly from second- and fourth-order theta
derivatives (`beta_tensor`) serves as a cross-check of the jet pipeline, and
it stays meaningful when theta0 vanishes, where the quartic degenerates to
the symmetrized square of the Hessian.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations

import numpy as np

from .errors import DimensionMismatch
from .theta import (
    DEFAULT_TOLERANCE,
    PeriodMatrix,
    ThetaCharacteristic,
    Tolerance,
    theta,
    theta_deriv,
)

__all__ = [
    "ThetaJet",
    "QuarticForm",
    "theta_jet",
    "scorza_quartic",
    "beta_tensor",
    "beta_combination",
    "polarize",
    "rank_defect",
]


@dataclass(frozen=True, eq=False)
class ThetaJet:
    """(theta0, Hessian, fourth-derivative tensor) of theta at the origin."""

    theta0: complex
    theta2: np.ndarray
    theta4: np.ndarray

    def __post_init__(self) -> None:
        for name in ("theta2", "theta4"):
            arr = np.array(getattr(self, name), dtype=complex)  # own copy, frozen below
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def g(self) -> int:
        return self.theta2.shape[0]

    def scaled(self, factor: complex) -> "ThetaJet":
        """Jet of factor * theta."""
        return ThetaJet(factor * self.theta0, factor * self.theta2, factor * self.theta4)

    def taylor_value(self, z) -> complex:
        """theta0 + (1/2) z^T H z + (1/24) T . z^4 at a point z."""
        zv = np.asarray(z, dtype=complex)
        quad = zv @ self.theta2 @ zv / 2.0
        quart = np.einsum("ijkl,i,j,k,l->", self.theta4, zv, zv, zv, zv) / 24.0
        return complex(self.theta0 + quad + quart)


@dataclass(frozen=True, eq=False)
class QuarticForm:
    """Fully symmetric rank-4 tensor Q, viewed as a quadrilinear form."""

    g: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=complex)  # own copy, frozen below
        if arr.shape != (self.g,) * 4:
            raise DimensionMismatch("quartic tensor shape does not match genus")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __call__(self, v1, v2, v3, v4) -> complex:
        return complex(
            np.einsum("ijkl,i,j,k,l->", self.coeffs, *(np.asarray(v, dtype=complex) for v in (v1, v2, v3, v4)))
        )

    def is_symmetric(self, tol: float = 0.0) -> bool:
        for perm in permutations(range(4)):
            if np.max(np.abs(self.coeffs - self.coeffs.transpose(perm))) > tol:
                return False
        return True

    def canonical_entries(self):
        """(sorted index tuple, value) for the C(g+3, 4) independent entries."""
        for idx in combinations_with_replacement(range(self.g), 4):
            yield idx, complex(self.coeffs[idx])

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "coeffs": [
                {"idx": list(idx), "re": val.real, "im": val.imag}
                for idx, val in self.canonical_entries()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuarticForm":
        g = int(data["g"])
        coeffs = np.zeros((g,) * 4, dtype=complex)
        for entry in data["coeffs"]:
            idx = tuple(entry["idx"])
            val = complex(entry["re"], entry["im"])
            for perm in set(permutations(idx)):
                coeffs[perm] = val
        return cls(g, coeffs)


def _zero_jet(g: int) -> ThetaJet:
    return ThetaJet(0.0 + 0.0j, np.zeros((g, g), complex), np.zeros((g,) * 4, complex))


def theta_jet(
    pm: PeriodMatrix, char: ThetaCharacteristic, tol: Tolerance = DEFAULT_TOLERANCE
) -> ThetaJet:
    """Evaluate (theta0, H, T) at the origin.

    Only the g(g+1)/2 Hessian entries and the C(g+3, 4) independent fourth
    derivatives are summed; the rest is filled in by symmetry.  An odd
    characteristic gives the exact zero jet (theta is then an odd function).
    """
    g = pm.g
    if char.g != g:
        raise DimensionMismatch("characteristic and period matrix genus differ")
    if not char.is_even():
        return _zero_jet(g)
    origin = np.zeros(g, dtype=complex)
    theta0 = theta(pm, origin, char, tol)
    hessian = np.zeros((g, g), dtype=complex)
    for i, j in combinations_with_replacement(range(g), 2):
        val = theta_deriv(pm, origin, char, (i, j), tol)
        hessian[i, j] = hessian[j, i] = val
    fourth = np.zeros((g,) * 4, dtype=complex)
    for idx in combinations_with_replacement(range(g), 4):
        val = theta_deriv(pm, origin, char, idx, tol)
        for perm in set(permutations(idx)):
            fourth[perm] = val
    return ThetaJet(theta0, hessian, fourth)


def scorza_quartic(jet: ThetaJet) -> QuarticForm:
    """Fourth-derivative tensor of (1/2) theta2^2 - theta0 * theta4.

    A vanishing theta0 is allowed; the result is then the symmetrized square
    of the Hessian, i.e. the quartic collapses onto the quadratic tangent
    cone of the theta divisor.
    """
    h = jet.theta2
    sym_square = (
        np.einsum("ij,kl->ijkl", h, h)
        + np.einsum("ik,jl->ijkl", h, h)
        + np.einsum("il,jk->ijkl", h, h)
    )
    return QuarticForm(jet.g, sym_square - jet.theta0 * jet.theta4)


def beta_combination(theta0, second, fourth, indices: tuple[int, int, int, int]):
    """One entry of the second/fourth derivative combination

        D2(i,k) D2(j,l) + D2(i,l) D2(j,k) + D2(k,l) D2(i,j) - theta0 * D4(i,j,k,l)

    where ``second`` and ``fourth`` are callables returning the derivatives of
    an even function at the origin.  The combination is formal: it applies to
    any even C^4 function, in particular to exact polynomial models, and for a
    theta function it reproduces the entries of `scorza_quartic`.
    """
    i, j, k, l = indices
    return (
        second(i, k) * second(j, l)
        + second(i, l) * second(j, k)
        + second(k, l) * second(i, j)
        - theta0 * fourth(i, j, k, l)
    )


def beta_tensor(
    pm: PeriodMatrix, char: ThetaCharacteristic, tol: Tolerance = DEFAULT_TOLERANCE
) -> QuarticForm:
    """Assemble the quartic directly from theta derivatives at the origin.

    Independent route to the same tensor as scorza_quartic(theta_jet(...)):
    each canonical entry is built from fresh second- and fourth-order
    derivative evaluations rather than from a stored jet.
    """
    g = pm.g
    if char.g != g:
        raise DimensionMismatch("characteristic and period matrix genus differ")
    coeffs = np.zeros((g,) * 4, dtype=complex)
    if not char.is_even():
        return QuarticForm(g, coeffs)
    origin = np.zeros(g, dtype=complex)
    theta0 = theta(pm, origin, char, tol)
    second_cache: dict[tuple[int, int], complex] = {}

    def second(i: int, j: int) -> complex:
        key = (min(i, j), max(i, j))
        if key not in second_cache:
            second_cache[key] = theta_deriv(pm, origin, char, key, tol)
        return second_cache[key]

    def fourth(i: int, j: int, k: int, l: int) -> complex:
        return theta_deriv(pm, origin, char, (i, j, k, l), tol)

    for idx in combinations_with_replacement(range(g), 4):
        val = beta_combination(theta0, second, fourth, idx)
        for perm in set(permutations(idx)):
            coeffs[perm] = val
    return QuarticForm(g, coeffs)


def polarize(form: QuarticForm, x, y) -> np.ndarray:
    """Second polar of the quartic: M[k,l] = Q(x, y, e_k, e_l).

    The result is a symmetric g x g matrix; for the fourth power of a linear
    form it has rank at most one.
    """
    xv = np.asarray(x, dtype=complex).reshape(-1)
    yv = np.asarray(y, dtype=complex).reshape(-1)
    if xv.shape[0] != form.g or yv.shape[0] != form.g:
        raise DimensionMismatch("polarization vectors must have length g")
    mat = np.einsum("i,j,ijkl->kl", xv, yv, form.coeffs)
    # mathematically symmetric for a symmetric form; project away the
    # summation-order roundoff so callers can rely on exact symmetry
    return (mat + mat.T) / 2


def rank_defect(matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[int, float]:
    """Numerical rank and the ratio of the two largest singular values.

    rank counts singular values above eps_zero times the largest one; the
    ratio is 0.0 for matrices with fewer than two singular values or with a
    vanishing largest singular value.
    """
    m = np.asarray(matrix, dtype=complex)
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0, 0.0
    rank = int(np.sum(s > tol.eps_zero * s[0]))
    ratio = float(s[1] / s[0]) if s.size > 1 else 0.0
    return rank, ratio
