"""Euclidean, twisted, and weighted spherical means; twisted convolution
with radial kernels; radial eigen-projections.

Measure conventions (the two never mix silently):

* sphere means use the normalized (probability) surface measure;
* full-space projections/convolutions over C^m use the Lebesgue measure,
  with any normalizing power of 2*pi kept explicit in the formulas here.

The twisted convolution is f x g (z) = int f(z-w) g(w) e^{(i/2) Im(z.conj(w))} dw,
so the left mean f x mu_r is literally the sphere integral of
f(z-w) e^{(i*lam/2) Im(z.conj(w))}; the right mean mu_r x f carries the
conjugated phase (substitution u = z - w).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, pi

import numpy as np
from scipy.special import roots_genlaguerre

from .backend import kernels
from .harmonics import Poly
from .profiles import (RadialProfile, StructuredFunction, StructuredSum,
                       encode_terms, encode_weight, structured_terms)
from .special_functions import b_constant
from .spheres import surface_area, unit_rule


@dataclass(frozen=True)
class MeanQuery:
    """One twisted-mean evaluation: center, radius, frequency, optional
    polynomial weight on the sphere variable, and the convolution side."""

    center: np.ndarray
    radius: float
    lam: float = 1.0
    weight: Poly | None = None
    side: str = "left"

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.center, dtype=complex))
        object.__setattr__(self, "center", c)
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")


def _is_structured(f):
    return isinstance(f, (StructuredFunction, StructuredSum)) or (
        isinstance(f, (list, tuple)) and f and isinstance(f[0], tuple))


def _structured_degree(f):
    deg = 0
    for profile, poly in structured_terms(f):
        kmax = max((t.k for t in profile.terms), default=0)
        deg = max(deg, poly.degree() + 2 * kmax)
    return deg


def heuristic_twisted_order(n, zmax, rmax, lam=1.0, degree=0):
    """Angular order bound for twisted-mean integrands: the oscillatory
    factor has spherical spectrum decaying like (lam |z| r / 2)^m / m!."""
    phase = 0.5 * abs(lam) * zmax * rmax
    return int(np.ceil(np.e * phase + 3.0 * np.sqrt(phase + 1.0))) + degree + 10


def heuristic_euclid_order(xmax, rmax, freq=1.0, degree=0):
    """Angular order bound for Euclidean means of waves with frequency freq."""
    return int(np.ceil(1.3 * freq * rmax + 3.0 * np.sqrt(freq * rmax + 1.0))) + degree + 10


def converged_order(probe, order, tol=1e-10, max_order=240):
    """Convergence gate: accept ``order`` once doubling it moves the probe
    value by less than tol (relative to max(1, |value|))."""
    while order <= max_order:
        a = probe(order)
        b = probe(2 * order)
        if abs(a - b) <= tol * max(1.0, abs(b)):
            return order
        order = int(order * 1.5) + 1
    raise RuntimeError("quadrature order did not converge under the gate")


def _resolve_order(order, query: MeanQuery, f):
    if order != "auto":
        return int(order)
    deg = _structured_degree(f) if _is_structured(f) else 12
    zmax = float(np.linalg.norm(query.center))
    return heuristic_twisted_order(query.center.size, zmax, query.radius,
                                   query.lam, deg)


def twisted_mean(f, query: MeanQuery, order="auto", path=None) -> complex:
    """Twisted spherical mean of f per the query.

    f is either structured (StructuredFunction / StructuredSum / list of
    (RadialProfile, Poly) pairs), which runs through the backend kernel, or
    a callable on complex points of shape (N, n). ``path`` forces
    "structured" or "callable" dispatch (for cross-path testing).
    """
    n = query.center.size
    rule = unit_rule(2 * n, _resolve_order(order, query, f))
    phase_sign = 1 if query.side == "left" else -1
    center2n = np.concatenate([query.center.real, query.center.imag])

    use_structured = _is_structured(f) if path is None else (path == "structured")
    if use_structured:
        enc = encode_terms(structured_terms(f), n)
        wt = encode_weight(query.weight, n)
        return kernels().structured_mean(
            rule.nodes, rule.weights, float(query.radius), center2n,
            float(query.lam), phase_sign, -1, *enc, *wt)

    w = query.radius * (rule.nodes[:, :n] + 1j * rule.nodes[:, n:])
    pts = query.center[None, :] - w
    vals = np.asarray(f(pts), dtype=complex)
    im_zwbar = np.imag(w.conj() @ query.center)
    vals = vals * np.exp(1j * (phase_sign * query.lam / 2.0) * im_zwbar)
    if query.weight is not None:
        vals = vals * query.weight.eval(w)
    return complex(np.dot(rule.weights, vals))


def weighted_twisted_mean(f, z, r, P: Poly, lam=1.0, order="auto", path=None) -> complex:
    """Mean against the signed measure P dmu_r (weight evaluated on the sphere)."""
    return twisted_mean(f, MeanQuery(z, r, lam, weight=P), order=order, path=path)


def euclidean_mean(f, x, r, order, weight=None, path=None) -> complex:
    """Euclidean spherical mean: int f(x + r w) [weight(r w)] dmu(w) over S^{d-1}.

    Structured input must be real-kind (radial profile times a polynomial in
    real coordinates); callables receive (N, d) real points.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    rule = unit_rule(x.size, int(order))
    use_structured = _is_structured(f) if path is None else (path == "structured")
    if use_structured:
        terms = structured_terms(f)
        rad_a, rad_k, rad_alpha, rad_s, cs, eas, _, off = encode_terms(terms, x.size)
        if weight is None:
            wt_c = np.array([1.0 + 0.0j])
            wt_e = np.zeros((1, x.size), dtype=np.int64)
        else:
            wt_c, wt_e, _ = weight.encode()
        return kernels().structured_mean_real(
            rule.nodes, rule.weights, float(r), x,
            rad_a, rad_k, rad_alpha, rad_s, cs, eas, off, wt_c, wt_e)
    pts = x[None, :] + r * rule.nodes
    vals = np.asarray(f(pts), dtype=complex)
    if weight is not None:
        vals = vals * weight.eval(r * rule.nodes)
    return complex(np.dot(rule.weights, vals))


def twisted_translate(f, eta, lam=1.0):
    """Left twisted translate: (tau_eta f)(xi) = f(xi - eta) e^{(i lam/2) Im(eta.conj(xi))}."""
    eta = np.atleast_1d(np.asarray(eta, dtype=complex))

    def translated(points):
        pts = np.asarray(points, dtype=complex)
        phase = np.exp(1j * (lam / 2.0) * np.imag(np.conj(pts) @ eta))
        return np.asarray(f(pts - eta[None, :] if pts.ndim > 1 else pts - eta)) * phase

    return translated


# ---------------------------------------------------------------------------
# radial eigen-projections over C^m
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjectionResult:
    k: int
    m: int
    coefficient: complex
    lebesgue_inner: complex
    profile: RadialProfile


def radial_inner(a, k: int, m: int, n_nodes: int = 64) -> complex:
    """Plain-Lebesgue pairing int_{C^m} a(|w|) phi_k^{m-1}(|w|) dw, by
    generalized Gauss-Laguerre in s = rho^2/2 (exact when a(rho) e^{rho^2/4}
    is a polynomial in rho^2 of bounded degree)."""
    s, w = roots_genlaguerre(n_nodes, m - 1)
    rho = np.sqrt(2.0 * s)
    avals = np.asarray(a.eval_rho(rho) if hasattr(a, "eval_rho") else a(rho),
                       dtype=complex)
    lk = kernels().laguerre_values(k, float(m - 1), s)
    # integrand h(s) = a(rho) L_k(s) e^{-s/2}; GL weight supplies s^{m-1} e^{-s}
    h = avals * lk * np.exp(0.5 * s)
    area = surface_area(2 * m)
    return complex(area * 2.0 ** (m - 1) * np.dot(w, h))


def radial_projection(a, k: int, m: int, n_nodes: int = 64,
                      normalized: bool = True) -> ProjectionResult:
    """Projection of a radial function onto the k-th Laguerre eigenspace of
    C^m: coefficient * phi_k^{m-1}.

    With normalized=True the coefficient is B_k^m (2 pi)^{-m} <a, phi_k>_Leb,
    so that summing the projections over k reproduces a; the plain-Lebesgue
    pairing is also returned.
    """
    inner = radial_inner(a, k, m, n_nodes)
    coeff = complex(b_constant(k, m)) * inner
    if normalized:
        coeff /= (2.0 * pi) ** m
    return ProjectionResult(k, m, coeff, inner,
                            RadialProfile.phi(k, m).scale(coeff))


def radial_expand(a, m: int, kmax: int, n_nodes: int = 64) -> np.ndarray:
    """Laguerre-eigenexpansion coefficients gamma_0..gamma_kmax of a radial
    function on C^m (normalized so that a = sum gamma_k phi_k^{m-1})."""
    return np.array([radial_projection(a, k, m, n_nodes).coefficient
                     for k in range(kmax + 1)])


def twisted_conv_radial(a, k: int, m: int, rho, n_nodes: int = 64):
    """Value of the C^m twisted convolution of a radial function with
    phi_k^{m-1} at radius rho: (2 pi)^m gamma_k phi_k^{m-1}(rho)."""
    gamma = radial_projection(a, k, m, n_nodes).coefficient
    return (2.0 * pi) ** m * gamma * RadialProfile.phi(k, m).eval_rho(rho)


# ---------------------------------------------------------------------------
# weighted functional relation and its measured constant
# ---------------------------------------------------------------------------

def weighted_relation_constant(n: int, p: int, q: int) -> float:
    """The (z, r, k)-independent constant of the weighted functional
    relation: 2^{-(p+q)} (n-1)! / (n+p+q-1)!  (derived by exact moment
    calculus; the k-dependence of the raw ratio is B_{k-q}^{n+p+q})."""
    return 2.0 ** (-(p + q)) * factorial(n - 1) / factorial(n + p + q - 1)


def weighted_mean_prediction(n: int, p: int, q: int, k: int, P: Poly, z, r) -> complex:
    """Closed form of phi_k^{n-1} x (P dmu_r)(z): zero for k < q, otherwise
    C(n,p,q) B_{k-q}^{n+p+q} r^{2(p+q)} phi_{k-q}^{m-1}(r) P(z) phi_{k-q}^{m-1}(z)."""
    if k < q:
        return 0.0 + 0.0j
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    m = n + p + q
    phi = RadialProfile.phi(k - q, m)
    return (weighted_relation_constant(n, p, q) * float(b_constant(k - q, m))
            * r ** (2 * (p + q)) * phi.eval_rho(r) * P.eval(z)
            * phi.eval_rho(float(np.linalg.norm(z))))


@dataclass(frozen=True)
class ConstantMeasurement:
    n: int
    p: int
    q: int
    constant: complex
    predicted: float
    max_rel_spread: float
    ratios: tuple


def determine_C(n: int, p: int, q: int, ks=None, n_samples: int = 10,
                seed: int = 7, order="auto") -> ConstantMeasurement:
    """Measure the constant of the weighted functional relation as the ratio

        (phi_k x P dmu_r)(z) / (B_{k-q}^{n+p+q} r^{2(p+q)}
                                phi_{k-q}^{m-1}(r) P(z) phi_{k-q}^{m-1}(z))

    over random (z, r) pairs and the given k values (default q and q+1).
    Degenerate samples (denominator below floor) are re-drawn. The
    normalization by B_{k-q}^{n+p+q} carries the relation's entire
    k-dependence, so the ratio must come out (z, r, k)-independent.
    """
    if n >= 2:
        P = Poly.monomial(n, (p,) + (0,) * (n - 1), (0, q) + (0,) * (n - 2))
    else:
        if p and q:
            raise ValueError("no harmonic monomial weight with p, q >= 1 on C^1")
        P = Poly.monomial(1, (p,), (q,))
    m = n + p + q
    rng = np.random.default_rng(seed)
    ks = tuple(ks) if ks is not None else (q, q + 1)
    ratios = []
    for k in ks:
        got = 0
        while got < n_samples:
            z = rng.normal(size=n) + 1j * rng.normal(size=n)
            z *= rng.uniform(0.6, 1.4) / np.linalg.norm(z)
            r = rng.uniform(0.8, 2.2)
            phi = RadialProfile.phi(k - q, m)
            denom = (float(b_constant(k - q, m)) * r ** (2 * (p + q))
                     * phi.eval_rho(r) * P.eval(z)
                     * phi.eval_rho(float(np.linalg.norm(z))))
            if abs(denom) < 1e-4:
                continue
            f = StructuredFunction(RadialProfile.phi(k, n), Poly.one(n))
            val = twisted_mean(f, MeanQuery(z, r, weight=P), order=order)
            ratios.append(val / denom)
            got += 1
    ratios = np.array(ratios)
    mean = complex(ratios.mean())
    spread = float(np.max(np.abs(ratios - mean)) / abs(mean)) if abs(mean) else np.inf
    return ConstantMeasurement(n, p, q, mean, weighted_relation_constant(n, p, q),
                               spread, tuple(ratios.tolist()))


# ---------------------------------------------------------------------------
# cross-dimension factorization check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorizationCheck:
    k: int
    p: int
    q: int
    vanishing_clause: bool
    residual: float
    left: tuple
    right: tuple


def hecke_bochner_check(atilde: RadialProfile, P: Poly, k: int, z_points=None,
                        order="auto", n_radial: int = 48,
                        n_proj: int = 64) -> FactorizationCheck:
    """Compare both sides of the factorization of (atilde*P) x phi_k^{n-1}
    through the radial convolution in dimension n+p+q:

        left(z)  = int_{C^n} (atilde P)(z-w) phi_k^{n-1}(|w|)
                   e^{(i/2) Im(z.conj(w))} dw        (polar quadrature)
        right(z) = (2 pi)^{-(p+q)} P(z) *
                   [C^{n+p+q} twisted convolution of atilde with
                    phi_{k-p}^{n+p+q-1}](|z|)        (radial projection)

    For k < p the right side vanishes and the reported residual is the
    left-side magnitude.
    """
    n = P.n
    p, q = P.bidegree()
    m = n + p + q
    if z_points is None:
        rng = np.random.default_rng(11)
        z_points = []
        for _ in range(4):
            z = rng.normal(size=n) + 1j * rng.normal(size=n)
            z_points.append(z * rng.uniform(0.5, 1.3) / np.linalg.norm(z))
    f = StructuredFunction(atilde, P)

    s, w = roots_genlaguerre(n_radial, n - 1)
    radii = np.sqrt(2.0 * s)
    area = surface_area(2 * n)
    phik = RadialProfile.phi(k, n)
    if order == "auto":
        zmax = max(float(np.linalg.norm(z)) for z in z_points)
        order = heuristic_twisted_order(n, zmax, float(radii.max()),
                                        1.0, _structured_degree(f))
        # the Gaussian damping of the integrand makes large radii negligible;
        # cap the phase estimate at the mass-carrying radius
        order = min(order, heuristic_twisted_order(
            n, zmax, float(np.sqrt(2.0 * (2 * k + m + 30))), 1.0,
            _structured_degree(f)))

    lefts, rights = [], []
    for z in z_points:
        tm = np.array([twisted_mean(f, MeanQuery(z, r), order=order)
                       for r in radii])
        integrand = phik.eval_rho(radii) * tm * np.exp(s)
        left = area * 2.0 ** (n - 1) * np.dot(w, integrand)
        if k >= p:
            right = ((2.0 * pi) ** (-(p + q)) * P.eval(np.atleast_1d(z))
                     * twisted_conv_radial(atilde, k - p, m,
                                           float(np.linalg.norm(z)), n_proj))
        else:
            right = 0.0 + 0.0j
        lefts.append(complex(left))
        rights.append(complex(right))
    lefts, rights = np.array(lefts), np.array(rights)
    if k < p:
        residual = float(np.max(np.abs(lefts)))
        return FactorizationCheck(k, p, q, True, residual,
                                  tuple(lefts.tolist()), tuple(rights.tolist()))
    scale = max(1.0, float(np.max(np.abs(rights))), float(np.max(np.abs(lefts))))
    residual = float(np.max(np.abs(lefts - rights)) / scale)
    return FactorizationCheck(k, p, q, False, residual,
                              tuple(lefts.tolist()), tuple(rights.tolist()))


# ---------------------------------------------------------------------------
# frequency reduction
# ---------------------------------------------------------------------------

def lambda_reduction_residual(f, z, s, lam, order="auto") -> float:
    """Residual of the frequency-reduction identity: the lam-twisted mean at
    (z, s) equals the 1-twisted mean of g(u) = f(u/sqrt(lam)) at
    (sqrt(lam) z, sqrt(lam) s)."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    lhs = twisted_mean(f, MeanQuery(z, s, lam), order=order)
    root = np.sqrt(lam)

    def g(points):
        return np.asarray(f(np.asarray(points) / root))

    rhs = twisted_mean(g, MeanQuery(root * z, root * s, 1.0), order=order)
    return abs(lhs - rhs) / max(1.0, abs(rhs))
