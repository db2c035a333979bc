"""Quadrature rules for the normalized surface measure on spheres, exact
monomial moments, and annulus integration.

Supported spheres: S^1 in R^2 (= C^1), S^2 in R^3, S^3 in C^2, S^5 in C^3.
A rule of a given order integrates every polynomial of total degree <= order
exactly against the normalized (probability) surface measure. Rules are
immutable; radius enters by scaling the cached unit-sphere nodes.

Node layout: real arrays of shape (N, d). For even d interpreted as C^{d/2},
columns are [Re z_1 .. Re z_n, Im z_1 .. Im z_n].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, pi

import numpy as np
from numpy.polynomial.legendre import leggauss

SUPPORTED_DIMS = (2, 3, 4, 6)


@dataclass(frozen=True)
class SphereRule:
    """Nodes/weights for the normalized surface measure on S_radius in R^real_dim."""

    real_dim: int
    radius: float
    order: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __len__(self):
        return self.nodes.shape[0]


def surface_area(real_dim: int, radius: float = 1.0) -> float:
    """Lebesgue surface area of S_radius^{real_dim-1}."""
    d = real_dim
    return 2.0 * pi ** (d / 2.0) / gamma_half(d) * radius ** (d - 1)


def gamma_half(d: int) -> float:
    """Gamma(d/2) for integer d >= 1."""
    if d % 2 == 0:
        return float(factorial(d // 2 - 1))
    # Gamma(1/2) = sqrt(pi); Gamma(x+1) = x Gamma(x)
    val = pi ** 0.5
    x = 0.5
    while x < d / 2.0 - 0.25:
        val *= x
        x += 1.0
    return val


def exact_moment_real(real_dim: int, exponents) -> Fraction:
    """Exact normalized moment of prod x_j^{e_j} over the unit S^{real_dim-1}.

    Zero unless all exponents are even; for e = 2b it equals
    prod (2b_j - 1)!! / prod_{i=0}^{|b|-1} (d + 2i).
    """
    e = tuple(int(v) for v in exponents)
    if len(e) != real_dim:
        raise ValueError("exponent tuple length must equal real_dim")
    if any(v % 2 for v in e):
        return Fraction(0)
    b = [v // 2 for v in e]
    num = 1
    for bj in b:
        for m in range(1, 2 * bj, 2):
            num *= m
    den = 1
    for i in range(sum(b)):
        den *= real_dim + 2 * i
    return Fraction(num, den)


def exact_moment_complex(n: int, alpha, beta) -> Fraction:
    """Exact normalized moment of w^alpha conj(w)^beta over the unit S^{2n-1}:
    delta_{alpha,beta} * alpha! (n-1)! / (n-1+|alpha|)!."""
    a = tuple(int(v) for v in alpha)
    b = tuple(int(v) for v in beta)
    if len(a) != n or len(b) != n:
        raise ValueError("multi-index length must equal n")
    if a != b:
        return Fraction(0)
    num = factorial(n - 1)
    for aj in a:
        num *= factorial(aj)
    return Fraction(num, factorial(n - 1 + sum(a)))


def _gl01(npts: int):
    x, w = leggauss(npts)
    return 0.5 * (x + 1.0), 0.5 * w


def _build_unit_nodes(real_dim: int, order: int):
    if real_dim == 2:
        nphi = max(order + 1, 8)
        ang = 2.0 * pi * np.arange(nphi) / nphi
        nodes = np.stack([np.cos(ang), np.sin(ang)], axis=1)
        weights = np.full(nphi, 1.0 / nphi)
        return nodes, weights

    if real_dim == 3:
        nu = order // 2 + 1
        x, wu = leggauss(nu)          # u = cos(theta) on [-1, 1], weight 1/2
        nphi = max(order + 1, 4)
        ang = 2.0 * pi * np.arange(nphi) / nphi
        U, A = np.meshgrid(x, ang, indexing="ij")
        W = np.broadcast_to((0.5 * wu)[:, None], U.shape) / nphi
        s = np.sqrt(1.0 - U * U)
        nodes = np.stack([(s * np.cos(A)).ravel(),
                          (s * np.sin(A)).ravel(),
                          U.ravel()], axis=1)
        return nodes, W.ravel()

    if real_dim == 4:
        # z1 = sqrt(t) e^{ia}, z2 = sqrt(1-t) e^{ib};
        # normalized measure = dt da db / (2 pi)^2 on [0,1] x [0,2pi)^2
        nt = order // 2 + 1
        t, wt = _gl01(nt)
        nphi = max(order + 1, 4)
        ang = 2.0 * pi * np.arange(nphi) / nphi
        T, A, B = np.meshgrid(t, ang, ang, indexing="ij")
        W = np.broadcast_to(wt[:, None, None], T.shape) / (nphi * nphi)
        r1, r2 = np.sqrt(T), np.sqrt(1.0 - T)
        nodes = np.stack([(r1 * np.cos(A)).ravel(), (r2 * np.cos(B)).ravel(),
                          (r1 * np.sin(A)).ravel(), (r2 * np.sin(B)).ravel()], axis=1)
        return nodes, W.ravel()

    if real_dim == 6:
        # z_j = sqrt(t_j) e^{i a_j}, t on the 2-simplex via Duffy
        # t1 = u, t2 = (1-u) v, t3 = (1-u)(1-v); Jacobian (1-u);
        # normalized measure = 2 dt1 dt2 da1 da2 da3 / (2 pi)^3
        ng = order // 2 + 2
        u, wu = _gl01(ng)
        v, wv = _gl01(ng)
        nphi = max(order + 1, 4)
        ang = 2.0 * pi * np.arange(nphi) / nphi
        U, V, A1, A2, A3 = np.meshgrid(u, v, ang, ang, ang, indexing="ij")
        W = (np.broadcast_to((wu[:, None])[:, :, None, None, None] *
                             (wv[None, :])[:, :, None, None, None], U.shape)
             * (1.0 - U) * 2.0 / nphi ** 3)
        t1 = U
        t2 = (1.0 - U) * V
        t3 = (1.0 - U) * (1.0 - V)
        r1, r2, r3 = np.sqrt(t1), np.sqrt(t2), np.sqrt(t3)
        nodes = np.stack([(r1 * np.cos(A1)).ravel(), (r2 * np.cos(A2)).ravel(),
                          (r3 * np.cos(A3)).ravel(),
                          (r1 * np.sin(A1)).ravel(), (r2 * np.sin(A2)).ravel(),
                          (r3 * np.sin(A3)).ravel()], axis=1)
        return nodes, W.ravel()

    raise ValueError(f"unsupported sphere dimension {real_dim}; supported: {SUPPORTED_DIMS}")


@lru_cache(maxsize=64)
def unit_rule(real_dim: int, order: int) -> SphereRule:
    """Cached rule on the unit sphere."""
    if order < 1:
        raise ValueError("order must be >= 1")
    nodes, weights = _build_unit_nodes(real_dim, order)
    weights = weights / weights.sum()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    rule = SphereRule(real_dim, 1.0, order, nodes, weights)
    _spot_certify(rule)
    return rule


def build_sphere_rule(real_dim: int, radius: float, order: int) -> SphereRule:
    """Rule on S_radius integrating polynomials of total degree <= order exactly."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    base = unit_rule(real_dim, order)
    if radius == 1.0:
        return base
    nodes = radius * base.nodes
    nodes.setflags(write=False)
    return SphereRule(real_dim, float(radius), order, nodes, base.weights)


def _spot_certify(rule: SphereRule, tol: float = 1e-12) -> None:
    # Normalization, node radii, and low-degree monomial moments.
    if abs(rule.weights.sum() - 1.0) > tol:
        raise AssertionError("weights do not sum to 1")
    radii = np.sqrt((rule.nodes ** 2).sum(axis=1))
    if np.max(np.abs(radii - rule.radius)) > 1e-12 * max(rule.radius, 1.0):
        raise AssertionError("nodes are off the sphere")
    d = rule.real_dim
    for expo in _monomials_up_to(d, min(rule.order, 4)):
        got = float(np.dot(rule.weights, np.prod(rule.nodes ** np.array(expo), axis=1)))
        want = float(exact_moment_real(d, expo)) * rule.radius ** sum(expo)
        if abs(got - want) > 1e-12 * max(1.0, abs(want)):
            raise AssertionError(f"moment mismatch for {expo}: {got} vs {want}")


def _monomials_up_to(d: int, max_deg: int):
    def rec(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for v in range(remaining + 1):
            yield from rec(prefix + (v,), remaining - v, slots - 1)

    for deg in range(max_deg + 1):
        yield from rec((), deg, d)


def integrate(rule: SphereRule, f) -> complex:
    """Sum of weights * f(nodes); f maps an (N, d) array to (N,) values."""
    vals = np.asarray(f(rule.nodes))
    return complex(np.dot(rule.weights, vals))


def complex_nodes(rule: SphereRule) -> np.ndarray:
    """View nodes of an even-dimensional rule as complex points (N, d/2)."""
    d = rule.real_dim
    if d % 2:
        raise ValueError("complex view requires even real dimension")
    n = d // 2
    return rule.nodes[:, :n] + 1j * rule.nodes[:, n:]


@dataclass(frozen=True)
class WeightedRule:
    """Sphere rule carrying a polynomial weight evaluated exactly at the nodes."""

    base: SphereRule
    weight_poly: object
    weight_values: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.weight_values is None:
            vals = np.asarray(self.weight_poly.eval_nodes(self.base.nodes))
            object.__setattr__(self, "weight_values", vals)


def weighted_integrate(wrule: WeightedRule, f) -> complex:
    vals = np.asarray(f(wrule.base.nodes))
    return complex(np.dot(wrule.base.weights * wrule.weight_values, vals))


def annulus_integrate(f, inner: float, outer: float, real_dim: int,
                      radial_order: int, sphere_order: int = 24) -> complex:
    """Lebesgue integral of f over the annulus inner < |x| < outer in R^real_dim,
    via Gauss-Legendre in the radius composed with sphere rules:
    integral = int_inner^outer s^{d-1} area(S^{d-1}) [mean over S_s] ds."""
    if not 0.0 <= inner < outer:
        raise ValueError("need 0 <= inner < outer")
    x, w = leggauss(radial_order)
    s = 0.5 * (outer - inner) * x + 0.5 * (outer + inner)
    ws = 0.5 * (outer - inner) * w
    area1 = surface_area(real_dim, 1.0)
    base = unit_rule(real_dim, sphere_order)
    total = 0.0 + 0.0j
    for si, wi in zip(s, ws):
        mean = complex(np.dot(base.weights, np.asarray(f(si * base.nodes))))
        total += wi * si ** (real_dim - 1) * area1 * mean
    return total
