"""End-to-end experiments: support-theorem ansatz generation and checking,
radial coefficient recovery from means on one sphere, the counterexample
gallery, and the one-dimensional two-sided means probe."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

import numpy as np
from scipy.special import roots_genlaguerre

from .config import tolerance
from .harmonics import Poly
from .means import (MeanQuery, euclidean_mean, heuristic_euclid_order,
                    heuristic_twisted_order, twisted_mean, twisted_translate)
from .profiles import RadialProfile, StructuredFunction
from .reporting import ReportRow, check_ge, check_le
from .special_functions import (BesselRadialSpec, LaguerreSpec,
                                bessel_first_zero, bessel_phi_eval,
                                laguerre_eval)


# ---------------------------------------------------------------------------
# support-theorem ansatz families
# ---------------------------------------------------------------------------

def x1_plus_ix2_power(n: int, k: int) -> Poly:
    """(x_1 + i x_2)^k as a real-kind polynomial on R^n."""
    coeffs = {}
    for j in range(k + 1):
        key = (k - j, j) + (0,) * (n - 2)
        coeffs[key] = comb(k, j) * (1j) ** j
    return Poly(n, coeffs, "real")


@dataclass(frozen=True)
class SupportAnsatz:
    """Radial tails whose structured products have vanishing means over all
    spheres enclosing the ball of radius inner_radius.

    family "twisted" on C^n: profile
        sum_i c_i e^{+rho^2/4} rho^{-2(n+p+q-i)} +
        sum_k d_k e^{-rho^2/4} rho^{-2(n+p+q-k)},
    paired with the monomial angular factor z_1^p conj(z_2)^q.

    family "euclidean" on R^n: profile sum_i alphas_i rho^{-n-2i}
    (i = 0..k-1), paired with (x_1 + i x_2)^k.
    """

    family: str
    n: int
    inner_radius: float
    p: int = 0
    q: int = 0
    k: int = 0
    c: tuple = ()
    d: tuple = ()
    alphas: tuple = ()

    def __post_init__(self):
        if self.family not in ("twisted", "euclidean"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "twisted":
            if len(self.c) != self.p or len(self.d) != self.q:
                raise ValueError("need len(c) == p and len(d) == q")
        else:
            if len(self.alphas) != self.k:
                raise ValueError("need len(alphas) == k (empty when k = 0)")

    def profile(self) -> RadialProfile:
        if self.family == "twisted":
            out = RadialProfile.zero()
            m = self.n + self.p + self.q
            for i, ci in enumerate(self.c, start=1):
                out = out + RadialProfile.power_gauss(+1, m - i, ci)
            for kk, dk in enumerate(self.d, start=1):
                out = out + RadialProfile.power_gauss(-1, m - kk, dk)
            return out
        out = RadialProfile.zero()
        for i, ai in enumerate(self.alphas):
            out = out + RadialProfile.rho_power(-(self.n + 2 * i), ai)
        return out

    def perturbed_profile(self, delta: float) -> RadialProfile:
        """First exponent shifted by delta (necessity probe: the shifted tail
        must leave the vanishing class)."""
        base = self.profile()
        if not base.terms:
            raise ValueError("empty ansatz has no exponent to perturb")
        first = base.terms[0]
        bumped = RadialProfile((type(first)(first.coeff, first.a + delta / 2.0,
                                            first.k, first.alpha, first.s),)
                               + base.terms[1:])
        return bumped

    def angular(self) -> Poly:
        if self.family == "twisted":
            if self.p == 0 and self.q == 0:
                return Poly.one(self.n)
            if self.n == 1:
                if self.p and self.q:
                    raise ValueError("no harmonic z^p conj(z)^q weight on C^1")
                return Poly.monomial(1, (self.p,), (self.q,))
            return Poly.monomial(self.n, (self.p,) + (0,) * (self.n - 1),
                                 (0, self.q) + (0,) * (self.n - 2))
        return x1_plus_ix2_power(self.n, self.k)

    def function(self) -> StructuredFunction:
        return StructuredFunction(self.profile(), self.angular())


def support_samples(n: int, B: float, count: int, seed: int,
                    zmax: float = 0.9, rmax: float = 5.0, margin: float = 0.4):
    """(z, r) pairs with r - |z| > B + margin (so the integrand stays outside
    the excluded ball); centers sit on two fixed spheres plus a random
    cloud, radii on per-center grids."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        z = rng.normal(size=n) + 1j * rng.normal(size=n)
        if i % 3 == 0:
            scale = 0.5 * zmax
        elif i % 3 == 1:
            scale = zmax
        else:
            scale = rng.uniform(0.2, zmax)
        z *= scale / np.linalg.norm(z)
        lo = B + float(np.linalg.norm(z)) + margin
        r = rng.uniform(lo, max(rmax, lo + 0.5))
        out.append((z, float(r)))
    return out


def support_ansatz_check(ansatz: SupportAnsatz, samples, order="auto",
                         profile: RadialProfile | None = None) -> float:
    """Max |f x mu_r(z)| over admissible samples for the twisted family
    (or the override profile, for necessity probes)."""
    if ansatz.family != "twisted":
        raise ValueError("twisted family expected; use euclid_support_check")
    prof = ansatz.profile() if profile is None else profile
    if not prof.terms:
        return 0.0
    f = StructuredFunction(prof, ansatz.angular())
    worst = 0.0
    for z, r in samples:
        if r - float(np.linalg.norm(z)) <= ansatz.inner_radius:
            raise ValueError("sample violates r - |z| > inner_radius")
        o = order
        if o == "auto":
            o = heuristic_twisted_order(ansatz.n, float(np.linalg.norm(z)), r,
                                        1.0, 2 * (ansatz.p + ansatz.q))
        worst = max(worst, abs(twisted_mean(f, MeanQuery(z, r), order=o)))
    return worst


def euclid_support_samples(n: int, B: float, count: int, seed: int,
                           xmax: float = 0.9, rmax: float = 4.0,
                           margin: float = 0.5):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        x = rng.normal(size=n)
        x *= rng.uniform(0.2, xmax) / np.linalg.norm(x)
        lo = B + float(np.linalg.norm(x)) + margin
        r = rng.uniform(lo, max(rmax, lo + 0.5))
        out.append((x, float(r)))
    return out


def euclid_support_check(ansatz: SupportAnsatz, samples, order=40,
                         profile: RadialProfile | None = None) -> float:
    """Max |f * mu_r(x)| over admissible samples for the euclidean family."""
    if ansatz.family != "euclidean":
        raise ValueError("euclidean family expected")
    prof = ansatz.profile() if profile is None else profile
    if not prof.terms:
        return 0.0
    f = StructuredFunction(prof, ansatz.angular())
    worst = 0.0
    for x, r in samples:
        if r - float(np.linalg.norm(x)) <= ansatz.inner_radius:
            raise ValueError("sample violates r - |x| > inner_radius")
        worst = max(worst, abs(euclidean_mean(f, x, r, order=order)))
    return worst


def euclid_weighted_witness(ansatz: SupportAnsatz, r: float, order=40) -> float:
    """|f * mu_{r}^{weight}(0)| with the conjugate angular weight: nonzero for
    a nonzero ansatz, witnessing that weighted means do not all vanish."""
    f = StructuredFunction(ansatz.profile(), ansatz.angular())
    weight = ansatz.angular().conjugate()
    return abs(euclidean_mean(f, np.zeros(ansatz.n), r, order=order, weight=weight))


# ---------------------------------------------------------------------------
# radial coefficient recovery from means on one sphere
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InjectivityInstance:
    """Recovery of the radial Laguerre coefficients of f from its twisted
    means centered on one sphere |z_0| = R, sampled on a radial
    Gauss-Laguerre grid."""

    n: int
    R: float
    K: int
    n_radial: int = 16
    flag_tol: float = 1e-9

    def radial_grid(self):
        s, w = roots_genlaguerre(self.n_radial, self.n - 1)
        return np.sqrt(2.0 * s), s, w

    def center(self) -> np.ndarray:
        z0 = np.zeros(self.n, dtype=complex)
        z0[0] = self.R
        return z0

    def unrecoverable(self) -> list[int]:
        """Indices k <= K where L_k^{n-1}(R^2/2) sits on a zero (checked via
        the computed zero sets)."""
        from .special_functions import laguerre_zeros
        t = 0.5 * self.R ** 2
        out = []
        for k in range(self.K + 1):
            if k == 0:
                continue
            zeros = laguerre_zeros(LaguerreSpec(k, float(self.n - 1)))
            if np.min(np.abs(zeros - t)) < 1e-8 * max(1.0, t):
                out.append(k)
        return out

    def phi_at_center(self, k: int) -> float:
        return float(RadialProfile.phi(k, self.n).eval_rho(self.R).real)


def simulate_means(inst: InjectivityInstance, gammas, order="auto"):
    """Forward model: twisted means of f = sum_k gamma_k phi_k^{n-1} at the
    instance's radial grid, by quadrature (not the closed form)."""
    gammas = np.asarray(gammas, dtype=complex)
    prof = RadialProfile.zero()
    for k, g in enumerate(gammas):
        prof = prof + RadialProfile.phi(k, inst.n).scale(g)
    f = StructuredFunction(prof, Poly.one(inst.n))
    radii, _, _ = inst.radial_grid()
    z0 = inst.center()
    if order == "auto":
        order = heuristic_twisted_order(inst.n, inst.R, float(radii.max()), 1.0,
                                        2 * (len(gammas) - 1))
        order = min(order, heuristic_twisted_order(
            inst.n, inst.R, float(np.sqrt(2.0 * (2 * len(gammas) + inst.n + 25))),
            1.0, 2 * (len(gammas) - 1)))
    return np.array([twisted_mean(f, MeanQuery(z0, r), order=order)
                     for r in radii])


@dataclass(frozen=True)
class RecoveryResult:
    gammas: np.ndarray
    flagged: tuple
    condition: float


def injectivity_recover(inst: InjectivityInstance, means) -> RecoveryResult:
    """Invert means(r) = sum_k gamma_k B_k phi_k(r) phi_k(R) by the radial
    orthogonality of the phi_k against r^{2n-1} dr.

    Coefficients with phi_k(R) = 0 cannot be recovered; those indices are
    flagged and returned as nan.
    """
    means = np.asarray(means, dtype=complex)
    radii, s, w = inst.radial_grid()
    if means.shape != radii.shape:
        raise ValueError("means must align with the instance radial grid")
    gammas = np.full(inst.K + 1, np.nan, dtype=complex)
    flagged = []
    worst_cond = 0.0
    for k in range(inst.K + 1):
        phi_R = inst.phi_at_center(k)
        scale = comb(inst.n - 1 + k, k) * np.exp(-0.25 * inst.R ** 2)
        if abs(phi_R) < inst.flag_tol * scale:
            flagged.append(k)
            continue
        lk = laguerre_eval(LaguerreSpec(k, float(inst.n - 1)), s)
        integral = np.dot(w, means * lk * np.exp(0.5 * s))
        gammas[k] = integral / (factorial(inst.n - 1) * phi_R)
        worst_cond = max(worst_cond, scale / abs(phi_R))
    return RecoveryResult(gammas, tuple(flagged), worst_cond)


# ---------------------------------------------------------------------------
# counterexample gallery
# ---------------------------------------------------------------------------

def counterexample_gallery(order="auto", tol: float | None = None,
                           witness_floor: float | None = None,
                           seed: int = 5) -> list[ReportRow]:
    """The four vanishing-mean constructions, each with an on-sphere
    residual row and an off-sphere (or off-weight) nonvanishing witness."""
    tol = tolerance("counterexamples", tol)
    floor = tolerance("witness", witness_floor)
    rng = np.random.default_rng(seed)
    rows = []
    r_grid = (0.5, 1.0, 2.0, 3.7)

    # (i) radial Bessel eigenfunction on R^3, vanishing on the sphere where
    # its profile has its first zero (lam * R = first zero of J_{1/2} = pi)
    n, lam = 3, 1.0
    spec = BesselRadialSpec(lam, n)
    R = bessel_first_zero(n) / lam
    f_bessel = lambda pts: bessel_phi_eval(spec, np.linalg.norm(pts, axis=-1))
    worst = 0.0
    for _ in range(6):
        x = rng.normal(size=n)
        x *= R / np.linalg.norm(x)
        for r in r_grid:
            o = heuristic_euclid_order(R, r, lam) if order == "auto" else order
            worst = max(worst, abs(euclidean_mean(f_bessel, x, r, order=o)))
    rows.append(check_le("gallery-bessel-sphere", {"n": n, "lam": lam, "R": R},
                         worst, tol))
    o = heuristic_euclid_order(0.0, 0.5, lam) if order == "auto" else order
    wit = abs(euclidean_mean(f_bessel, np.zeros(n), 0.5, order=o))
    rows.append(check_ge("gallery-bessel-witness", {"n": n, "lam": lam, "r": 0.5},
                         wit, floor))

    # (ii) Laguerre function on C^2 vanishing on |z| = 2 (L_1^1(2) = 0)
    n, k, R = 2, 1, 2.0
    f_lag = StructuredFunction(RadialProfile.phi(k, n), Poly.one(n))
    worst = 0.0
    for _ in range(6):
        z = rng.normal(size=n) + 1j * rng.normal(size=n)
        z *= R / np.linalg.norm(z)
        for r in r_grid:
            o = (heuristic_twisted_order(n, R, r, 1.0, 2 * k)
                 if order == "auto" else order)
            worst = max(worst, abs(twisted_mean(f_lag, MeanQuery(z, r), order=o)))
    rows.append(check_le("gallery-laguerre-sphere", {"n": n, "k": k, "R": R},
                         worst, tol))
    o = heuristic_twisted_order(n, 0.0, 0.5, 1.0, 2 * k) if order == "auto" else order
    wit = abs(twisted_mean(f_lag, MeanQuery(np.zeros(n, dtype=complex), 0.5),
                           order=o))
    rows.append(check_ge("gallery-laguerre-witness", {"n": n, "k": k, "r": 0.5},
                         wit, floor))

    # (iii) Gaussian against a conj-linear weight: identically vanishing
    # weighted means; witness flips the weight to the linear one
    n = 2
    f_gauss = StructuredFunction(RadialProfile.gaussian(), Poly.one(n))
    P_conj = Poly.monomial(n, (0, 0), (1, 0))
    P_lin = Poly.monomial(n, (1, 0), (0, 0))
    worst = 0.0
    for _ in range(6):
        z = rng.normal(size=n) + 1j * rng.normal(size=n)
        z *= rng.uniform(0.3, 1.8) / np.linalg.norm(z)
        r = rng.uniform(0.5, 2.5)
        o = heuristic_twisted_order(n, 1.8, r, 1.0, 1) if order == "auto" else order
        worst = max(worst, abs(twisted_mean(f_gauss, MeanQuery(z, r, weight=P_conj),
                                            order=o)))
    rows.append(check_le("gallery-weighted-gaussian", {"n": n, "weight": "conj"},
                         worst, tol))
    z = np.array([1.0, 0.0], dtype=complex)
    o = heuristic_twisted_order(n, 1.0, 1.0, 1.0, 1) if order == "auto" else order
    wit = abs(twisted_mean(f_gauss, MeanQuery(z, 1.0, weight=P_lin), order=o))
    rows.append(check_ge("gallery-weighted-witness", {"n": n, "weight": "linear"},
                         wit, floor))

    # (iv) twisted translate of (ii): vanishing on the off-center sphere
    n, k, R = 2, 1, 2.0
    eta = np.array([0.4 + 0.3j, -0.2j])
    f_shift = twisted_translate(f_lag, eta)
    worst = 0.0
    for _ in range(6):
        w = rng.normal(size=n) + 1j * rng.normal(size=n)
        z = eta + w * (R / np.linalg.norm(w))
        for r in r_grid:
            o = (heuristic_twisted_order(n, float(np.linalg.norm(z)), r, 1.0, 2 * k)
                 if order == "auto" else order)
            worst = max(worst, abs(twisted_mean(f_shift, MeanQuery(z, r), order=o)))
    rows.append(check_le("gallery-translate-sphere",
                         {"n": n, "k": k, "R": R, "center": "eta"}, worst, tol))
    o = (heuristic_twisted_order(n, float(np.linalg.norm(eta)), 0.5, 1.0, 2 * k)
         if order == "auto" else order)
    wit = abs(twisted_mean(f_shift, MeanQuery(eta, 0.5), order=o))
    rows.append(check_ge("gallery-translate-witness", {"n": n, "k": k, "r": 0.5},
                         wit, floor))
    return rows


# ---------------------------------------------------------------------------
# two-sided means probe on C^1
# ---------------------------------------------------------------------------

def smooth_bump(B: float):
    """Radial C^inf bump supported in |z| <= B."""

    def f(points):
        pts = np.asarray(points, dtype=complex)
        rho2 = (np.abs(pts) ** 2).sum(axis=-1) / B ** 2
        out = np.zeros(rho2.shape, dtype=complex)
        inside = rho2 < 1.0
        out[inside] = np.exp(-1.0 / (1.0 - rho2[inside]))
        return out

    return f


def right_mean_closed_form(z: complex, r: float) -> complex:
    """Closed form of the right mean of f(u) = e^{-|u|^2/4}/u over S_r, |z| < r:
    -e^{-(|z|^2+r^2)/4} (e^{|z|^2/2} - 1)/z (residue computation)."""
    a = abs(z) ** 2
    return -np.exp(-(a + r ** 2) / 4.0) * (np.exp(a / 2.0) - 1.0) / z


def two_sided_means_probe(order: int = 512, tol: float | None = None,
                          witness_floor: float | None = None,
                          seed: int = 9) -> list[ReportRow]:
    """Compactly supported functions have both-sided means vanishing for
    r > B + |z| (trivially: empty integrand support), plus a one-sided-only
    example: f = e^{-|u|^2/4}/u has all left means over enclosing circles
    equal to zero while the right means match a nonzero closed form."""
    tol = tolerance("two-sided", tol)
    floor = tolerance("two-sided-witness", witness_floor)
    rng = np.random.default_rng(seed)
    rows = []

    B = 1.0
    bump = smooth_bump(B)
    worst_l = worst_r = 0.0
    for _ in range(6):
        z = rng.normal() + 1j * rng.normal()
        z *= rng.uniform(0.1, 1.0) / abs(z)
        r = rng.uniform(B + abs(z) + 0.2, 4.0)
        q = MeanQuery(np.array([z]), r)
        worst_l = max(worst_l, abs(twisted_mean(bump, q, order=order)))
        worst_r = max(worst_r, abs(twisted_mean(
            bump, MeanQuery(np.array([z]), r, side="right"), order=order)))
    rows.append(check_le("two-sided-bump-left", {"B": B}, worst_l, tol))
    rows.append(check_le("two-sided-bump-right", {"B": B}, worst_r, tol))

    def f_onesided(points):
        pts = np.asarray(points, dtype=complex)
        u = pts[..., 0]
        return np.exp(-np.abs(u) ** 2 / 4.0) / u

    worst_left = 0.0
    worst_form = 0.0
    min_witness = np.inf
    for _ in range(8):
        z = rng.normal() + 1j * rng.normal()
        z *= rng.uniform(0.3, 1.0) / abs(z)
        r = rng.uniform(2.2, 3.5)
        left = twisted_mean(f_onesided, MeanQuery(np.array([z]), r), order=order)
        right = twisted_mean(f_onesided, MeanQuery(np.array([z]), r, side="right"),
                             order=order)
        closed = right_mean_closed_form(z, r)
        worst_left = max(worst_left, abs(left))
        worst_form = max(worst_form, abs(right - closed))
        min_witness = min(min_witness, abs(right))
    rows.append(check_le("two-sided-asymmetry-left", {"family": "gauss/z"},
                         worst_left, tol))
    rows.append(check_ge("two-sided-asymmetry-right", {"family": "gauss/z"},
                         float(min_witness), floor))
    rows.append(check_le("two-sided-asymmetry-closed-form", {"family": "gauss/z"},
                         worst_form, 1e-8))
    return rows
