"""Cross-module verification suite.

Each check returns a CheckResult and is callable on its own; `run_all`
executes the whole battery deterministically from one seed.  Quick mode cuts
genus ranges and random-trial counts by a factor of ten.

The numbered checks mirror the acceptance gate of the build:

  01  lambda-weight of the pulled-back Hodge class is (77g-25)/4 exactly
  02  full class solve: c_alpha0 = (69g-21)/16, c_beta0 = 0, c_alphai = 0
  03  movable-slope bound 4 + (32g-16)/(69g-21) as an exact identity
  04  limit-model genus bookkeeping and node-count cross-checks
  05  theta quasi-periodicity and odd theta constants
  06  analytic derivatives against extended-precision finite differences
  07  quartic-form identity, numeric and exact-polynomial routes
  08  degenerate quartic collapses onto the squared Hessian
  09  genus-1 vanishing locus: offsets and lattice grid
  10  desk-scale substitutes for the genuine curve-geometry claims

Checks 11..14 replay module invariants (ledger consistency incl. tamper
detection, theta symmetries, kernel covariance, quartic structure).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import numpy as np

from . import degenerations as dg
from . import picard as pc
from .errors import ThetaNull
from .jets import (
    QuarticForm,
    beta_combination,
    beta_tensor,
    polarize,
    rank_defect,
    scorza_quartic,
    theta_jet,
)
from .oracles import (
    even_poly,
    fd_derivative,
    poly_derivative_at_zero,
    poly_eval_zero,
    poly_mul,
    theta_brute,
)
from .szego import SzegoContext, elliptic_scorza_offset, szego
from .theta import (
    PeriodMatrix,
    ThetaCharacteristic,
    Tolerance,
    all_characteristics,
    even_characteristics,
    quasi_period_factor,
    theta,
    theta_batch,
    theta_deriv,
)

__all__ = ["CheckResult", "run_all", "random_period_matrix", "DEFAULT_SEED"]

DEFAULT_SEED = 20260810


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def random_period_matrix(g: int, rng: np.random.Generator) -> PeriodMatrix:
    """Random near-reduced period matrix: Im part diagonally dominant with
    smallest eigenvalue at least 1/2."""
    while True:
        x = rng.uniform(-0.5, 0.5, (g, g))
        x = (x + x.T) / 2
        noise = rng.uniform(-0.5, 0.5, (g, g))
        y = np.diag(1.0 + rng.uniform(0.0, 1.0, g)) + 0.15 * (noise + noise.T)
        if np.linalg.eigvalsh(y)[0] >= 0.5:
            return PeriodMatrix(x + 1j * y)


def _random_point(g: int, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, g) + 1j * rng.uniform(-0.5, 0.5, g)


def _random_char(g: int, rng: np.random.Generator) -> ThetaCharacteristic:
    return ThetaCharacteristic(rng.integers(0, 2, g), rng.integers(0, 2, g))


def _rel(a: complex, b: complex, floor: float = 1e-300) -> float:
    return abs(a - b) / max(abs(a), abs(b), floor)


# ---------------------------------------------------------------------------
# acceptance checks


def check_weight(quick: bool) -> CheckResult:
    g_max = 8 if quick else 50
    start = time.perf_counter()
    for g in range(3, g_max + 1):
        weight, ledger = pc.chern_weight(g)
        if weight != Fraction(77 * g - 25, 4):
            return CheckResult("01-hodge-weight", False, f"wrong weight at g={g}")
        if not ledger.consistent():
            return CheckResult("01-hodge-weight", False, f"ledger replay failed at g={g}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        return CheckResult("01-hodge-weight", False, f"took {elapsed:.2f} s, budget is 1 s")
    # keep the detail free of timings so identical seeds give identical reports
    return CheckResult(
        "01-hodge-weight", True, f"(77g-25)/4 exact for 3<=g<={g_max}, within the 1 s budget"
    )


def check_class_solve(quick: bool) -> CheckResult:
    g_max = 8 if quick else 50
    for g in range(3, g_max + 1):
        cls = pc.szego_hodge_class(g)
        if cls.c_alpha[0] != Fraction(69 * g - 21, 16):
            return CheckResult("02-class-coefficients", False, f"alpha_0 wrong at g={g}")
        if cls.c_beta[0] != 0:
            return CheckResult("02-class-coefficients", False, f"beta_0 wrong at g={g}")
        if any(cls.c_alpha[i] != 0 for i in range(1, g // 2 + 1)):
            return CheckResult("02-class-coefficients", False, f"alpha_i != 0 at g={g}")
        if cls != pc.szego_hodge_class(g, g0_beta0=12):
            return CheckResult(
                "02-class-coefficients", False, f"pairing-table readings disagree at g={g}"
            )
        for i in range(2, g):
            if pc.intersect(pc.test_curve(g, "F_i", i), cls) != 0:
                return CheckResult("02-class-coefficients", False, f"F_{i} replay at g={g}")
        if pc.intersect(pc.test_curve(g, "H_0"), cls) != 0:
            return CheckResult("02-class-coefficients", False, f"H_0 replay at g={g}")
        if pc.intersect(pc.test_curve(g, "G_0"), cls) != Fraction(6 * g - 3):
            return CheckResult("02-class-coefficients", False, f"G_0 replay at g={g}")
    return CheckResult(
        "02-class-coefficients",
        True,
        f"c_alpha0=(69g-21)/16, c_beta0=0, c_alphai=0 re-verified for 3<=g<={g_max}",
    )


def check_moving_slope(quick: bool) -> CheckResult:
    g_max = 8 if quick else 50
    previous = None
    limit = Fraction(4) + Fraction(32, 69)
    for g in range(3, g_max + 1):
        bound = pc.moving_slope_bound(g)
        closed = Fraction(4 * (77 * g - 25), 69 * g - 21)
        if bound != closed:
            return CheckResult("03-moving-slope", False, f"closed forms differ at g={g}")
        # the correction term increases monotonically from 4.43 toward 32/69
        if not 4 < bound < limit:
            return CheckResult("03-moving-slope", False, f"bound outside (4, 4+32/69) at g={g}")
        if previous is not None and bound <= previous:
            return CheckResult("03-moving-slope", False, f"bound not increasing at g={g}")
        previous = bound
    if pc.slope(pc.theta_null_full_class(5)) != 4:
        return CheckResult("03-moving-slope", False, "theta-null slope is not 4")
    return CheckResult(
        "03-moving-slope",
        True,
        f"4+(32g-16)/(69g-21) exact, strictly between 4 and 4+32/69, 3<=g<={g_max}",
    )


def _model_battery(g: int):
    yield dg.limit_model_thetanull(g), 1 + 3 * g * (g - 1)
    yield dg.limit_model_A0(g), 1 + 3 * g * (g - 1)
    yield dg.limit_model_B0(g), 1 + 3 * g * (g - 1)
    t_target = 1 + 3 * g * (g - 1) // 2
    yield dg.limit_model_T_thetanull(g), t_target
    for i in range(1, g):
        yield dg.limit_model_Ai(g, i), 1 + 3 * g * (g - 1)
    for i in range(2, g - 1):
        yield dg.limit_model_Bi(g, i), 1 + 3 * g * (g - 1)


def check_limit_models(quick: bool) -> CheckResult:
    g_max = 10 if quick else 30
    count = 0
    for g in range(3, g_max + 1):
        for model, target in _model_battery(g):
            count += 1
            if dg.arithmetic_genus(model) != target:
                return CheckResult("04-limit-models", False, f"p_a wrong for {model} at g={g}")
            if model.incidence_known:
                for idx, comp in enumerate(model.components):
                    if comp.genus == 0 and model.node_branches(idx) < 3:
                        return CheckResult(
                            "04-limit-models", False, f"unstable genus-0 component at g={g}"
                        )
        expansion = pc.pullback_delta0_prime(g).expansion()
        if expansion[("alpha", 0)] != dg.limit_model_A0(g).num_nodes:
            return CheckResult("04-limit-models", False, f"alpha_0 node count at g={g}")
        if expansion[("beta", 0)] != dg.limit_model_B0(g).num_nodes:
            return CheckResult("04-limit-models", False, f"beta_0 node count at g={g}")
        for i in range(1, g // 2 + 1):
            if expansion[("alpha", i)] != dg.limit_model_Ai(g, i).num_nodes:
                return CheckResult("04-limit-models", False, f"alpha_{i} node count at g={g}")
            if 2 <= i <= g - 2:
                if expansion[("beta", i)] != dg.limit_model_Bi(g, i).num_nodes:
                    return CheckResult("04-limit-models", False, f"beta_{i} node count at g={g}")
    return CheckResult(
        "04-limit-models",
        True,
        f"{count} models hit p_a = 1+3g(g-1) (quotient: halved) with matching node counts, g<={g_max}",
    )


def check_quasi_periodicity(quick: bool, rng: np.random.Generator) -> CheckResult:
    trials = 10 if quick else 100
    tol = Tolerance()
    worst = 0.0
    worst_stress = 0.0
    for g in (1, 2, 3):
        for k in range(trials):
            pm = random_period_matrix(g, rng)
            char = _random_char(g, rng)
            z = _random_point(g, rng)
            m = rng.integers(-1, 2, g)
            # single-direction omega-shifts keep |factor| moderate, so the
            # error can be referred to |theta(z)| itself as stated
            n = np.zeros(g, dtype=int)
            n[rng.integers(0, g)] = rng.choice((-1, 1))
            base = theta(pm, z, char, tol)
            if abs(base) <= tol.eps_zero:
                continue
            shifted = theta(pm, z + m + pm.omega @ n, char, tol)
            factor = quasi_period_factor(pm, char, z, m, n)
            worst = max(worst, abs(shifted - factor * base) / abs(base))
            if worst >= 1e-9:
                return CheckResult(
                    "05-quasi-periodicity", False, f"relative error {worst:.2e} at g={g}"
                )
            if k % 5 == 0:
                # stress the growth regime with full-box shifts, measured at
                # the scale of the shifted value
                n_full = rng.integers(-1, 2, g)
                shifted = theta(pm, z + m + pm.omega @ n_full, char, tol)
                factor = quasi_period_factor(pm, char, z, m, n_full)
                worst_stress = max(worst_stress, _rel(shifted, factor * base))
                if worst_stress >= 1e-9:
                    return CheckResult(
                        "05-quasi-periodicity",
                        False,
                        f"stress relative error {worst_stress:.2e} at g={g}",
                    )
        for char in all_characteristics(g):
            if char.is_even():
                continue
            pm = random_period_matrix(g, rng)
            value = abs(theta(pm, np.zeros(g), char, tol))
            if value >= 1e-12:
                return CheckResult(
                    "05-quasi-periodicity", False, f"odd theta constant {value:.2e} at g={g}"
                )
    return CheckResult(
        "05-quasi-periodicity",
        True,
        f"{trials} trials per genus, worst error {worst:.1e} (stress {worst_stress:.1e}); "
        "odd constants < 1e-12",
    )


_FD_POINTS = {
    1: np.array([0.23 + 0.11j]),
    2: np.array([0.23 + 0.11j, -0.17 + 0.07j]),
    3: np.array([0.23 + 0.11j, -0.17 + 0.07j, 0.31 - 0.05j]),
}

_FD_OMEGAS = {
    1: [[0.3 + 1.1j]],
    2: [[0.3 + 1.2j, 0.1 + 0.2j], [0.1 + 0.2j, -0.2 + 1.5j]],
    3: [
        [0.3 + 1.3j, 0.1 + 0.2j, -0.2 + 0.1j],
        [0.1 + 0.2j, -0.2 + 1.4j, 0.15 + 0.15j],
        [-0.2 + 0.1j, 0.15 + 0.15j, 0.4 + 1.6j],
    ],
}


def check_derivatives(quick: bool) -> CheckResult:
    box = 6 if quick else 8
    worst = 0.0
    for g in (1, 2, 3):
        pm = PeriodMatrix(_FD_OMEGAS[g])
        z = _FD_POINTS[g]
        char = ThetaCharacteristic([0] * g, [1] + [0] * (g - 1))
        last = g - 1
        mu_sets = [(0,), (0, last), (0, 0, last), (0, 0, last, last)]
        if not quick:
            mu_sets += [(last,), (0, 0), (last, last, last), (0, 0, 0, 0)]
        omega_list = [[complex(v) for v in row] for row in pm.omega]

        def f(point):
            return theta_brute(omega_list, point, char.eps, char.delta, box=box)

        for mu in mu_sets:
            h = 1e-4 if len(mu) <= 2 else 1e-5
            oracle = complex(fd_derivative(f, z, mu, h))
            value = theta_deriv(pm, z, char, mu)
            err = abs(value - oracle) / max(abs(oracle), 1e-8)
            worst = max(worst, err)
            if err >= 1e-6:
                return CheckResult(
                    "06-derivatives", False, f"order {len(mu)} error {err:.2e} at g={g}"
                )
    return CheckResult(
        "06-derivatives", True, f"orders 1-4 match finite differences, worst {worst:.1e}"
    )


def _beta_poly_identity(g: int) -> bool:
    """Exact-rational version of the quartic identity on a synthetic even
    polynomial a + (1/2) z^T B z + (1/24) T z^4."""
    a = Fraction(3, 7)
    b = [[Fraction((i + 1) * (j + 1), 3 + i + j) for j in range(g)] for i in range(g)]
    t = [
        [
            [
                [Fraction(1 + ((i + 2 * j + 3 * k + 5 * l) % 7), 4) for l in range(g)]
                for k in range(g)
            ]
            for j in range(g)
        ]
        for i in range(g)
    ]
    # symmetrize B and T exactly
    b = [[(b[i][j] + b[j][i]) / 2 for j in range(g)] for i in range(g)]
    t_sym = [[[[Fraction(0)] * g for _ in range(g)] for _ in range(g)] for _ in range(g)]
    for i in range(g):
        for j in range(g):
            for k in range(g):
                for l in range(g):
                    vals = [t[p[0]][p[1]][p[2]][p[3]] for p in permutations((i, j, k, l))]
                    t_sym[i][j][k][l] = sum(vals, Fraction(0)) / 24

    poly = even_poly(a, b, t_sym, g)
    quad_part = {e: c for e, c in poly.items() if sum(e) == 2}
    quart_part = {e: c for e, c in poly.items() if sum(e) == 4}
    target = poly_mul(quad_part, quad_part, g)
    target = {e: c / 2 for e, c in target.items()}
    for e, c in quart_part.items():
        target[e] = target.get(e, Fraction(0)) - a * c

    def second(i, j):
        return poly_derivative_at_zero(poly, (i, j), g)

    def fourth(i, j, k, l):
        return poly_derivative_at_zero(poly, (i, j, k, l), g)

    theta0 = poly_eval_zero(poly, g)
    assert theta0 == a
    for idx in combinations_with_replacement(range(g), 4):
        direct = beta_combination(theta0, second, fourth, idx)
        expected = poly_derivative_at_zero(target, idx, g)
        if direct != expected:
            return False
    return True


def check_beta_identity(quick: bool, rng: np.random.Generator) -> CheckResult:
    n_omega = 2 if quick else 20
    worst = 0.0
    for g in (1, 2, 3):
        chars = even_characteristics(g)
        for _ in range(n_omega):
            pm = random_period_matrix(g, rng)
            for char in chars:
                direct = beta_tensor(pm, char).coeffs
                via_jet = scorza_quartic(theta_jet(pm, char)).coeffs
                scale = max(np.max(np.abs(direct)), np.max(np.abs(via_jet)), 1e-300)
                err = float(np.max(np.abs(direct - via_jet)) / scale)
                worst = max(worst, err)
                if err >= 1e-8:
                    return CheckResult(
                        "07-beta-identity", False, f"max-norm error {err:.2e} at g={g}"
                    )
    for g in (2, 3):
        if not _beta_poly_identity(g):
            return CheckResult(
                "07-beta-identity", False, f"exact polynomial identity failed at g={g}"
            )
    return CheckResult(
        "07-beta-identity",
        True,
        f"{n_omega} period matrices x all even characteristics, worst {worst:.1e}; "
        "polynomial route exact",
    )


def check_theta_null_limit() -> CheckResult:
    char = ThetaCharacteristic((1, 1), (1, 1))
    for tau1, tau2 in ((1j, 2j), (0.3 + 1.1j, -0.2 + 1.7j)):
        pm = PeriodMatrix([[tau1, 0.0], [0.0, tau2]])
        jet = theta_jet(pm, char)
        if abs(jet.theta0) >= 1e-10:
            return CheckResult("08-theta-null-limit", False, f"|theta0| = {abs(jet.theta0):.2e}")
        quartic = scorza_quartic(jet).coeffs
        h = jet.theta2
        cone = (
            np.einsum("ij,kl->ijkl", h, h)
            + np.einsum("ik,jl->ijkl", h, h)
            + np.einsum("il,jk->ijkl", h, h)
        )
        # proportionality is what is claimed; fit the constant at the largest
        # cone entry (it comes out as 1 with these normalizations)
        pivot = np.unravel_index(np.argmax(np.abs(cone)), cone.shape)
        ratio = quartic[pivot] / cone[pivot]
        scale = np.max(np.abs(cone))
        dev = float(np.max(np.abs(quartic - ratio * cone)) / scale)
        if dev >= 1e-8:
            return CheckResult("08-theta-null-limit", False, f"deviation {dev:.2e} from cone")
        if abs(ratio - 1.0) >= 1e-8:
            return CheckResult(
                "08-theta-null-limit", False, f"unexpected proportionality constant {ratio}"
            )
    return CheckResult(
        "08-theta-null-limit", True, "theta0 < 1e-10 and quartic collapses onto the squared Hessian"
    )


def check_elliptic_locus() -> CheckResult:
    tol = Tolerance()
    grid = 64
    for tau in (1j, 2j, 1 + 1j):
        pm = PeriodMatrix([[tau]])
        for char in even_characteristics(1):
            point = elliptic_scorza_offset(tau, char, tol)
            residual = abs(theta(pm, [point.zero_w], char, tol))
            if residual >= 1e-10:
                return CheckResult(
                    "09-elliptic-locus", False, f"residual {residual:.2e} at tau={tau}"
                )
            # closed-form cross-check: w = (1/2 - eps/2) tau + (1/2 - del/2)
            w_expected = (0.5 - char.eps[0] / 2) * tau + (0.5 - char.delta[0] / 2)
            diff = point.zero_w - w_expected
            b = diff.imag / tau.imag
            a = diff.real - b * tau.real
            if min(abs(a - round(a)), 1) > 1e-8 or min(abs(b - round(b)), 1) > 1e-8:
                return CheckResult(
                    "09-elliptic-locus", False, f"offset off closed form at tau={tau}"
                )
            ctx = SzegoContext(pm, char, tol)
            ab = np.arange(grid) / grid
            aa, bb = np.meshgrid(ab, ab, indexing="ij")
            pts = (aa + bb * tau).reshape(-1, 1)
            flags = np.abs(theta_batch(pm, pts, char, tol) / ctx.theta_at_zero) < tol.eps_zero
            wz = point.zero_w
            bz = wz.imag / tau.imag
            az = wz.real - bz * tau.real
            dist_a = np.minimum(np.abs(aa.ravel() - az % 1.0), 1 - np.abs(aa.ravel() - az % 1.0))
            dist_b = np.minimum(np.abs(bb.ravel() - bz % 1.0), 1 - np.abs(bb.ravel() - bz % 1.0))
            near = (dist_a <= 1.0 / grid + 1e-12) & (dist_b <= 1.0 / grid + 1e-12)
            if np.any(flags & ~near):
                return CheckResult(
                    "09-elliptic-locus", False, f"false positive on grid at tau={tau}"
                )
            exact_hit = (dist_a <= 1e-9) & (dist_b <= 1e-9)
            if np.any(exact_hit) and not np.all(flags[exact_hit]):
                return CheckResult(
                    "09-elliptic-locus", False, f"missed lattice translate at tau={tau}"
                )
    return CheckResult(
        "09-elliptic-locus",
        True,
        "offsets at residual < 1e-10; 64x64 grids flag exactly the lattice translates",
    )


def check_rank_one_substitutes(rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for g in (2, 3):
        for _ in range(5):
            ell = rng.normal(size=g) + 1j * rng.normal(size=g)
            form = np.einsum("i,j,k,l->ijkl", ell, ell, ell, ell)
            quartic = QuarticForm(g, form)
            x = rng.normal(size=g) + 1j * rng.normal(size=g)
            y = rng.normal(size=g) + 1j * rng.normal(size=g)
            if abs(ell @ x) < 0.1 or abs(ell @ y) < 0.1:
                continue
            polar = polarize(quartic, x, y)
            rank, ratio = rank_defect(polar)
            worst = max(worst, ratio)
            if rank != 1 or ratio >= 1e-10:
                return CheckResult(
                    "10-rank-one-substitutes", False, f"rank {rank}, ratio {ratio:.2e}"
                )
    return CheckResult(
        "10-rank-one-substitutes",
        True,
        f"synthetic fourth-power polars are rank one (worst ratio {worst:.1e}); genuine "
        "genus>=3 curve data stays out of desk scale and is covered by checks 07-09",
    )


# ---------------------------------------------------------------------------
# module invariants


def check_ledger_replay() -> CheckResult:
    _, ledger = pc.chern_weight(5)
    if not ledger.consistent():
        return CheckResult("11-ledger-replay", False, "fresh ledger fails replay")
    entries = list(ledger.entries)
    idx = next(i for i, e in enumerate(entries) if e.name == "invariant_part")
    entries[idx] = replace(entries[idx], value=entries[idx].value + 1)
    tampered = pc.ChernLedger(ledger.g, tuple(entries))
    if tampered.consistent():
        return CheckResult("11-ledger-replay", False, "tampered ledger not detected")
    return CheckResult("11-ledger-replay", True, "replay reproduces rules; tampering detected")


def check_theta_symmetries(rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for g in (1, 2, 3):
        pm = random_period_matrix(g, rng)
        for char in all_characteristics(g):
            z = _random_point(g, rng)
            sign = 1.0 if char.is_even() else -1.0
            worst = max(worst, _rel(theta(pm, -z, char), sign * theta(pm, z, char)))
    tau1, tau2 = 0.2 + 1.3j, -0.4 + 1.1j
    pm2 = PeriodMatrix([[tau1, 0.0], [0.0, tau2]])
    for e1, d1, e2, d2 in ((0, 0, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1)):
        z = _random_point(2, rng)
        joint = theta(pm2, z, ThetaCharacteristic((e1, e2), (d1, d2)))
        split = theta(PeriodMatrix([[tau1]]), [z[0]], ThetaCharacteristic((e1,), (d1,))) * theta(
            PeriodMatrix([[tau2]]), [z[1]], ThetaCharacteristic((e2,), (d2,))
        )
        worst = max(worst, _rel(joint, split))
    passed = worst < 1e-9
    return CheckResult(
        "12-theta-symmetries", passed, f"parity and diagonal factorization, worst {worst:.1e}"
    )


def check_szego_covariance(rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for g in (1, 2):
        pm = random_period_matrix(g, rng)
        char = next(c for c in even_characteristics(g))
        ctx = SzegoContext(pm, char)
        for _ in range(10):
            u = _random_point(g, rng)
            worst = max(worst, _rel(szego(ctx, u), szego(ctx, -u)))
            m = rng.integers(-1, 2, g)
            n = rng.integers(-1, 2, g)
            lhs = abs(szego(ctx, u + m + pm.omega @ n))
            rhs = abs(quasi_period_factor(pm, char, u, m, n)) * abs(szego(ctx, u))
            worst = max(worst, abs(lhs - rhs) / max(lhs, rhs, 1e-300))
    try:
        SzegoContext(PeriodMatrix([[1j, 0], [0, 2j]]), ThetaCharacteristic((1, 1), (1, 1)))
        return CheckResult("13-kernel-covariance", False, "theta-null context not rejected")
    except ThetaNull:
        pass
    passed = worst < 1e-9
    return CheckResult(
        "13-kernel-covariance",
        passed,
        f"evenness and lattice covariance, worst {worst:.1e}; theta-null rejected",
    )


def check_quartic_structure(rng: np.random.Generator) -> CheckResult:
    g = 2
    pm = random_period_matrix(g, rng)
    char = ThetaCharacteristic((0, 1), (1, 1))
    jet = theta_jet(pm, char)
    quartic = scorza_quartic(jet)
    if not quartic.is_symmetric(tol=0.0):
        return CheckResult("14-quartic-structure", False, "tensor not exactly symmetric")
    doubled = scorza_quartic(jet.scaled(2.0))
    if not np.array_equal(doubled.coeffs, 4.0 * quartic.coeffs):
        return CheckResult("14-quartic-structure", False, "quadratic scaling not exact")
    z = _random_point(g, rng)
    base = theta(pm, z, char)
    wide = theta(pm, z, char, radius=2 * _default_radius(pm, z))
    if abs(base - wide) > Tolerance().eps_trunc:
        return CheckResult(
            "14-quartic-structure", False, f"radius doubling moved theta by {abs(base - wide):.1e}"
        )
    return CheckResult(
        "14-quartic-structure", True, "exact symmetry, exact quadratic scaling, stable truncation"
    )


def _default_radius(pm: PeriodMatrix, z) -> int:
    from .theta import _box_radius

    im_norm = float(np.linalg.norm(np.asarray(z, complex).imag))
    return _box_radius(pm.lambda_min, pm.g, Tolerance().eps_trunc, im_norm, 0)


def run_all(quick: bool = False, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    return [
        check_weight(quick),
        check_class_solve(quick),
        check_moving_slope(quick),
        check_limit_models(quick),
        check_quasi_periodicity(quick, rng),
        check_derivatives(quick),
        check_beta_identity(quick, rng),
        check_theta_null_limit(),
        check_elliptic_locus(),
        check_rank_one_substitutes(rng),
        check_ledger_replay(),
        check_theta_symmetries(rng),
        check_szego_covariance(rng),
        check_quartic_structure(rng),
    ]
