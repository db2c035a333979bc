"""Radial profiles and structured (radial x polynomial) functions.

Closed-form profiles live in the algebra spanned by atoms

    c * t^a * L_k^alpha(t) * exp(s*t/2),   t = rho^2 / 2,  integer s,

which contains the Laguerre functions phi_k^{m-1}, Gaussians, and the
power-times-Gaussian tails used by the support characterizations, and is
closed under d/dt. Sampled profiles interpolate values on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .backend import kernels
from .harmonics import Poly


@dataclass(frozen=True)
class RadialTerm:
    """c * t^a * L_k^alpha(t) * exp(s*t/2)."""

    coeff: complex = 1.0
    a: float = 0.0
    k: int = 0
    alpha: float = 0.0
    s: int = -1

    def d_dt(self):
        """Exact t-derivative as a tuple of RadialTerms."""
        out = []
        if self.a != 0.0:
            out.append(RadialTerm(self.coeff * self.a, self.a - 1.0, self.k, self.alpha, self.s))
        if self.k > 0:
            out.append(RadialTerm(-self.coeff, self.a, self.k - 1, self.alpha + 1.0, self.s))
        if self.s != 0:
            out.append(RadialTerm(self.coeff * 0.5 * self.s, self.a, self.k, self.alpha, self.s))
        return tuple(out)


class RadialProfile:
    """Finite sum of RadialTerm atoms, evaluable in t = rho^2/2 or in rho."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)

    # -- constructors ---------------------------------------------------
    @classmethod
    def phi(cls, k: int, m: int):
        """Laguerre function L_k^{m-1}(t) e^{-t/2} of complex dimension m."""
        return cls((RadialTerm(1.0, 0.0, k, float(m - 1), -1),))

    @classmethod
    def gaussian(cls):
        """exp(-rho^2/4)."""
        return cls((RadialTerm(1.0, 0.0, 0, 0.0, -1),))

    @classmethod
    def power_gauss(cls, sign: int, power: int, coeff=1.0):
        """coeff * exp(sign * rho^2/4) * rho^(-2*power): tail atoms of the
        support characterizations; power may be any integer."""
        if sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        return cls((RadialTerm(coeff * 2.0 ** (-power), float(-power), 0, 0.0, sign),))

    @classmethod
    def rho_power(cls, exponent: float, coeff=1.0):
        """coeff * rho^exponent (no Gaussian factor)."""
        a = exponent / 2.0
        return cls((RadialTerm(coeff * 2.0 ** a, a, 0, 0.0, 0),))

    @classmethod
    def zero(cls):
        return cls(())

    # -- algebra ----------------------------------------------------------
    def __add__(self, other):
        return RadialProfile(self.terms + other.terms)

    def scale(self, c):
        return RadialProfile(tuple(
            RadialTerm(t.coeff * c, t.a, t.k, t.alpha, t.s) for t in self.terms))

    def d_dt(self):
        out = []
        for term in self.terms:
            out.extend(term.d_dt())
        return RadialProfile(out)

    # -- evaluation ---------------------------------------------------------
    def eval_t(self, t):
        t = np.asarray(t, dtype=float)
        lag = kernels().laguerre_values
        vals = np.zeros(t.shape if t.ndim else (1,), dtype=complex)
        tt = np.atleast_1d(t)
        for term in self.terms:
            v = lag(term.k, term.alpha, tt).astype(complex) * term.coeff
            if term.a != 0.0:
                v = v * np.power(tt, term.a)
            if term.s != 0:
                v = v * np.exp(0.5 * term.s * tt)
            vals += v
        return vals[0] if t.ndim == 0 else vals

    def eval_rho(self, rho):
        return self.eval_t(0.5 * np.asarray(rho, dtype=float) ** 2)

    __call__ = eval_rho

    def deriv_rho(self, rho):
        """d/drho, via d/dt with dt = rho drho."""
        rho = np.asarray(rho, dtype=float)
        return rho * self.d_dt().eval_t(0.5 * rho ** 2)

    def encode(self):
        """Per-term kernel arrays (a, k, alpha, s); coefficients are folded
        into the polynomial factor by the caller."""
        T = len(self.terms)
        return (np.array([t.a for t in self.terms], dtype=np.float64),
                np.array([t.k for t in self.terms], dtype=np.int64),
                np.array([t.alpha for t in self.terms], dtype=np.float64),
                np.array([t.s for t in self.terms], dtype=np.int64))

    def __repr__(self):
        return f"RadialProfile({len(self.terms)} terms)"


class SampledProfile:
    """Radial profile known by samples on a grid, cubic-spline interpolated."""

    def __init__(self, rho, values):
        self.rho = np.asarray(rho, dtype=float)
        self.values = np.asarray(values)
        self._spline = CubicSpline(self.rho, self.values)

    def eval_rho(self, rho):
        return self._spline(rho)

    __call__ = eval_rho

    def deriv_rho(self, rho):
        return self._spline(rho, 1)


class StructuredFunction:
    """f(z) = radial(|z|) * angular(z) with a closed-form radial factor."""

    __slots__ = ("radial", "angular")

    def __init__(self, radial: RadialProfile, angular: Poly):
        self.radial = radial
        self.angular = angular

    @property
    def n(self):
        return self.angular.n

    @property
    def kind(self):
        return self.angular.kind

    def terms(self):
        return [(self.radial, self.angular)]

    def __call__(self, points):
        pts = np.asarray(points)
        rho = np.sqrt((np.abs(pts) ** 2).sum(axis=-1))
        return self.radial.eval_rho(rho) * self.angular.eval(pts)


class StructuredSum:
    """Finite sum of structured terms; closed under the invariant operators."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = [(r, p) for (r, p) in parts if p.coeffs]

    @property
    def n(self):
        return self.parts[0][1].n if self.parts else 0

    @property
    def kind(self):
        return self.parts[0][1].kind if self.parts else "complex"

    def terms(self):
        return list(self.parts)

    def __add__(self, other):
        return StructuredSum(self.terms() + other.terms())

    def __call__(self, points):
        pts = np.asarray(points)
        rho = np.sqrt((np.abs(pts) ** 2).sum(axis=-1))
        total = None
        for radial, ang in self.parts:
            v = radial.eval_rho(rho) * ang.eval(pts)
            total = v if total is None else total + v
        if total is None:
            return np.zeros(pts.shape[0] if pts.ndim > 1 else (), dtype=complex)
        return total


def structured_terms(f):
    """Normalize a structured input to a list of (RadialProfile, Poly)."""
    if isinstance(f, (StructuredFunction, StructuredSum)):
        return f.terms()
    if isinstance(f, (list, tuple)):
        return list(f)
    raise TypeError(f"not a structured function: {type(f)!r}")


def encode_terms(terms, n):
    """Flatten structured terms into kernel arrays: one kernel term per
    (RadialTerm, polynomial) pair, the radial coefficient folded into the
    polynomial coefficients."""
    rad_a, rad_k, rad_alpha, rad_s = [], [], [], []
    cs, eas, ebs, off = [], [], [], [0]
    for profile, poly in terms:
        c0, ea0, eb0 = poly.encode()
        for term in profile.terms:
            rad_a.append(term.a)
            rad_k.append(term.k)
            rad_alpha.append(term.alpha)
            rad_s.append(term.s)
            cs.append(c0 * term.coeff)
            eas.append(ea0)
            ebs.append(eb0)
            off.append(off[-1] + len(c0))
    if not cs:
        cs = [np.zeros(0, dtype=np.complex128)]
        eas = [np.zeros((0, n), dtype=np.int64)]
        ebs = [np.zeros((0, n), dtype=np.int64)]
        rad_a, rad_k, rad_alpha, rad_s = [0.0], [0], [0.0], [0]
        off = [0, 0]
    return (np.array(rad_a, dtype=np.float64), np.array(rad_k, dtype=np.int64),
            np.array(rad_alpha, dtype=np.float64), np.array(rad_s, dtype=np.int64),
            np.concatenate(cs), np.vstack(eas), np.vstack(ebs),
            np.array(off, dtype=np.int64))


def encode_weight(poly, n):
    """Kernel arrays for an optional polynomial weight (1 when absent)."""
    if poly is None:
        return (np.array([1.0 + 0.0j]), np.zeros((1, n), dtype=np.int64),
                np.zeros((1, n), dtype=np.int64))
    return poly.encode()
