"""Extended-precision reference implementations used for verification.

These are deliberately naive: theta values come from a plain lattice sum over
a full integer box in mpmath (no ellipsoid pruning, no vectorization), and
derivatives come either from term-by-term differentiation of that sum or from
nested central finite differences.  They are slow and exist only to check the
fast double-precision path and to pin expected values in tests.

The working precision in decimal digits is read from the SCORZA_PRECISION
environment variable at call time (default 40).
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

import mpmath as mp

__all__ = [
    "oracle_dps",
    "theta_brute",
    "theta_deriv_brute",
    "fd_derivative",
    "even_poly",
    "poly_diff",
    "poly_eval_zero",
    "poly_derivative_at_zero",
]


def oracle_dps() -> int:
    return int(os.environ.get("SCORZA_PRECISION", "40"))


def _to_mp_matrix(omega) -> list[list[mp.mpc]]:
    return [[mp.mpc(v) for v in row] for row in omega]


def theta_brute(omega, z, eps: Sequence[int], delta: Sequence[int], box: int = 12) -> mp.mpc:
    """Lattice sum over the full integer box |n_i| <= box.

    omega is any g x g complex matrix-like, z a length-g point, eps/delta the
    integer 0/1 characteristic numerators (halves).
    """
    return theta_deriv_brute(omega, z, eps, delta, (), box=box)


def theta_deriv_brute(
    omega, z, eps: Sequence[int], delta: Sequence[int], mu: Sequence[int], box: int = 12
) -> mp.mpc:
    """Term-by-term differentiated lattice sum for a multi-index mu."""
    with mp.workdps(oracle_dps()):
        om = _to_mp_matrix(omega)
        g = len(om)
        e = [mp.mpf(v) / 2 for v in eps]
        d = [mp.mpf(v) / 2 for v in delta]
        zz = [mp.mpc(v) for v in z]
        pi_i = mp.pi * mp.mpc(0, 1)
        two_pi_i = 2 * pi_i
        total = mp.mpc(0)
        for n in product(range(-box, box + 1), repeat=g):
            v = [n[i] + e[i] for i in range(g)]
            quad = mp.fsum(v[i] * om[i][j] * v[j] for i in range(g) for j in range(g))
            lin = mp.fsum(v[i] * (zz[i] + d[i]) for i in range(g))
            term = mp.exp(pi_i * quad + two_pi_i * lin)
            for idx in mu:
                term *= two_pi_i * v[idx]
            total += term
        return total


def fd_derivative(f: Callable, z, mu: Sequence[int], h) -> mp.mpc:
    """Nested central differences of a holomorphic f: C^g -> C at z.

    One two-point stencil of step h per index in mu (2^|mu| evaluations), so
    the truncation error is O(h^2) at any order.
    """
    with mp.workdps(oracle_dps()):
        hh = mp.mpf(h)

        def rec(point, rest):
            if not rest:
                return f(point)
            idx, tail = rest[0], rest[1:]
            zp = list(point)
            zm = list(point)
            zp[idx] = zp[idx] + hh
            zm[idx] = zm[idx] - hh
            return (rec(zp, tail) - rec(zm, tail)) / (2 * hh)

        return rec([mp.mpc(v) for v in z], tuple(mu))


# ---------------------------------------------------------------------------
# Exact multivariate polynomials over Fraction (dict of exponent tuples), for
# checking formal identities in rational arithmetic.


def even_poly(a, b_matrix, t_tensor, g: int) -> dict:
    """a + (1/2) z^T B z + (1/24) sum T[ijkl] z_i z_j z_k z_l, exactly."""
    poly: dict = {}
    if a:
        poly[tuple([0] * g)] = Fraction(a)
    for i in range(g):
        for j in range(g):
            c = Fraction(b_matrix[i][j], 2)
            if not c:
                continue
            e = [0] * g
            e[i] += 1
            e[j] += 1
            key = tuple(e)
            poly[key] = poly.get(key, Fraction(0)) + c
    for i in range(g):
        for j in range(g):
            for k in range(g):
                for l in range(g):
                    c = Fraction(t_tensor[i][j][k][l], 24)
                    if not c:
                        continue
                    e = [0] * g
                    for idx in (i, j, k, l):
                        e[idx] += 1
                    key = tuple(e)
                    poly[key] = poly.get(key, Fraction(0)) + c
    return {e: c for e, c in poly.items() if c}


def poly_mul(p: dict, q: dict, g: int) -> dict:
    out: dict = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(ea[i] + eb[i] for i in range(g))
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_diff(p: dict, idx: int) -> dict:
    out: dict = {}
    for e, c in p.items():
        if e[idx] == 0:
            continue
        e2 = list(e)
        e2[idx] -= 1
        key = tuple(e2)
        out[key] = out.get(key, Fraction(0)) + c * e[idx]
    return out


def poly_eval_zero(p: dict, g: int) -> Fraction:
    return p.get(tuple([0] * g), Fraction(0))


def poly_derivative_at_zero(p: dict, mu: Sequence[int], g: int) -> Fraction:
    out = p
    for idx in mu:
        out = poly_diff(out, idx)
    return poly_eval_zero(out, g)
