"""Generalized Laguerre polynomials and functions, the normalized radial
Bessel eigenfunction, and exact combinatorial constants.

Evaluation uses the three-term recurrence in the degree (stable for x >= 0);
the explicit binomial sum is kept as a low-degree cross-check oracle. All
operations are pure and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gamma, sqrt

import numpy as np
from scipy.special import jv

from .backend import kernels


class RootBracketingError(RuntimeError):
    """A sign-change bracket failed to pin down a polynomial root."""


@dataclass(frozen=True)
class LaguerreSpec:
    """Degree/type pair (k, alpha) selecting L_k^alpha."""

    k: int
    alpha: float

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"degree must be >= 0, got {self.k}")
        if self.alpha <= -1:
            raise ValueError(f"type parameter must be > -1, got {self.alpha}")


@dataclass(frozen=True)
class LaguerreFunctionSpec:
    """Laguerre function phi_k of type dim-1 on C^dim:
    phi_k(rho) = L_k^{dim-1}(rho^2/2) * exp(-rho^2/4)."""

    k: int
    dim: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"degree must be >= 0, got {self.k}")
        if self.dim < 1:
            raise ValueError(f"complex dimension must be >= 1, got {self.dim}")


@dataclass(frozen=True)
class BesselRadialSpec:
    """Radial eigenfunction on R^dim with frequency lam, normalized to 1 at 0."""

    lam: float
    dim: int

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError(f"frequency must be positive, got {self.lam}")
        if self.dim < 2:
            raise ValueError(f"real dimension must be >= 2, got {self.dim}")


def laguerre_eval(spec: LaguerreSpec, x):
    """L_k^alpha(x) by the degree recurrence. Scalar in, scalar out."""
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = kernels().laguerre_values(spec.k, float(spec.alpha), arr)
    return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out


def laguerre_sum(spec: LaguerreSpec, x):
    """L_k^alpha(x) by the explicit binomial sum (cross-check oracle; the
    alternating sum cancels badly for large k, prefer laguerre_eval)."""
    k, a = spec.k, spec.alpha
    x = np.asarray(x, dtype=np.float64)
    total = np.zeros_like(x)
    for i in range(k + 1):
        if float(a).is_integer():
            c = comb(int(a) + k, k - i)
        else:
            c = gamma(a + k + 1) / (gamma(a + i + 1) * factorial(k - i))
        total = total + (-1.0) ** i * c * x ** i / factorial(i)
    return total if total.ndim else float(total)


def laguerre_deriv(spec: LaguerreSpec, x):
    """d/dx L_k^alpha(x) = -L_{k-1}^{alpha+1}(x); zero for k = 0."""
    if spec.k == 0:
        return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
    val = laguerre_eval(LaguerreSpec(spec.k - 1, spec.alpha + 1), x)
    return -val


def laguerre_scaled(spec: LaguerreSpec, x):
    """e^{-x/2} L_k^alpha(x), computed by running the recurrence on scaled
    values. The unscaled recurrence has intermediates of size e^{x/2} near
    the top zeros, so this form is the accurate one for root residuals (and
    is how Laguerre values enter the phi functions)."""
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    damp = np.exp(-0.5 * arr)
    k, a = spec.k, spec.alpha
    if k == 0:
        out = damp
    else:
        prev = damp.copy()
        cur = (1.0 + a - arr) * damp
        for i in range(1, k):
            prev, cur = cur, ((2.0 * i + 1.0 + a - arr) * cur
                              - (i + a) * prev) / (i + 1.0)
        out = cur
    return float(out[0]) if np.ndim(x) == 0 else out


def laguerre_zeros(spec: LaguerreSpec, rtol: float = 1e-14) -> np.ndarray:
    """All k real zeros of L_k^alpha, increasing.

    Brackets come from the interlacing of consecutive degrees: the zeros of
    L_{d-1}^alpha split (0, upper_bound) into intervals each holding exactly
    one zero of L_d^alpha. Bisection refines each bracket, then two Newton
    polish steps using d/dx L_d = -L_{d-1}^{alpha+1}.
    """
    k, a = spec.k, spec.alpha
    if k < 1:
        raise ValueError("zero-finding requires degree >= 1")
    zeros = np.array([1.0 + a])
    for deg in range(2, k + 1):
        upper = 2.0 * deg + a + 1.0 + 2.0 * sqrt(deg * (deg + a)) + 1.0
        edges = np.concatenate([[0.0], zeros, [upper]])
        spec_d = LaguerreSpec(deg, a)
        new = np.empty(deg)
        for i in range(deg):
            lo, hi = edges[i], edges[i + 1]
            flo, fhi = laguerre_eval(spec_d, lo), laguerre_eval(spec_d, hi)
            if flo == 0.0 or fhi == 0.0 or np.sign(flo) == np.sign(fhi):
                raise RootBracketingError(
                    f"no sign change in bracket ({lo}, {hi}) for degree {deg}"
                )
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                fmid = laguerre_eval(spec_d, mid)
                if fmid == 0.0:
                    lo = hi = mid
                    break
                if np.sign(fmid) == np.sign(flo):
                    lo, flo = mid, fmid
                else:
                    hi = mid
                if hi - lo <= rtol * mid:
                    break
            root = 0.5 * (lo + hi)
            for _ in range(3):
                # polish against the Gaussian-scaled form, whose evaluation
                # noise is O(eps) instead of O(eps * e^{x/2})
                val = laguerre_scaled(spec_d, root)
                dval = (-laguerre_scaled(LaguerreSpec(deg - 1, a + 1.0), root)
                        - 0.5 * val)
                if dval != 0.0:
                    step = val / dval
                    if abs(step) < 0.25 * max(root, 1.0):
                        root -= step
            new[i] = root
        if np.any(np.diff(new) <= 0.0):
            raise RootBracketingError(f"zeros of degree {deg} failed strict separation")
        zeros = new
    return zeros


def phi_eval(spec: LaguerreFunctionSpec, rho):
    """phi_k^{dim-1}(rho) = L_k^{dim-1}(rho^2/2) exp(-rho^2/4)."""
    t = 0.5 * np.asarray(rho, dtype=np.float64) ** 2
    arr = np.atleast_1d(t)
    vals = kernels().laguerre_values(spec.k, float(spec.dim - 1), arr) * np.exp(-0.5 * arr)
    return float(vals[0]) if np.ndim(rho) == 0 else vals.reshape(np.shape(t))


_SERIES_CUTOFF = 0.5


def bessel_phi_eval(spec: BesselRadialSpec, r):
    """Normalized radial eigenfunction: Gamma(n/2) (lam*r/2)^{1-n/2} J_{n/2-1}(lam*r),
    with value 1 at r = 0 (removable singularity handled by the ascending series)."""
    nu = spec.dim / 2.0 - 1.0
    x = spec.lam * np.asarray(r, dtype=np.float64)
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(x)
    out = np.empty_like(x)
    small = np.abs(x) < _SERIES_CUTOFF
    if small.any():
        xs = x[small]
        q = -0.25 * xs * xs
        term = np.ones_like(xs)
        total = np.ones_like(xs)
        for m in range(1, 14):
            term = term * q / (m * (nu + m))
            total += term
        out[small] = total
    big = ~small
    if big.any():
        xb = x[big]
        out[big] = gamma(spec.dim / 2.0) * (0.5 * xb) ** (-nu) * jv(nu, xb)
    return float(out[0]) if scalar else out


def b_constant(k: int, n: int) -> Fraction:
    """Exact k!(n-1)!/(n+k-1)!."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return Fraction(factorial(k) * factorial(n - 1), factorial(n + k - 1))


def bessel_first_zero(dim: int) -> float:
    """First positive zero of J_{dim/2 - 1} (= first zero of the radial
    profile's oscillation for frequency 1)."""
    from scipy.optimize import brentq

    nu = dim / 2.0 - 1.0
    x = 0.5
    step = 0.5
    fa = jv(nu, x)
    while x < 40.0:
        fb = jv(nu, x + step)
        if fa == 0.0:
            return x
        if np.sign(fa) != np.sign(fb):
            return float(brentq(lambda t: jv(nu, t), x, x + step, xtol=1e-14))
        x += step
        fa = fb
    raise RuntimeError("no Bessel zero located below 40")
