"""Right/left-invariant complex vector fields for twisted convolution, the
radial ladder operators, and the Euclidean dbar operator.

Conventions (1-based index j):

    A_j  = d/dz_j + (1/4) conj(z_j),   A*_j = d/dconj(z_j) - (1/4) z_j,
    Z_j  = d/dz_j - (1/4) conj(z_j),   Z*_j = d/dconj(z_j) + (1/4) z_j.

Two evaluation paths exist: the analytic one on structured functions
radial(|z|) * poly(z) (exact product/chain rule, with d/dconj(z_j) acting on
the radial factor via (z_j/2) d/dt at t = |z|^2/2), and a 4th-order
finite-difference path for black-box callables, used to validate the
symbolic bookkeeping. Structured profiles with negative radial powers
should not be evaluated near the origin (|z| < 1e-3); the experiment
samplers keep away from it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .harmonics import Poly
from .profiles import RadialProfile, StructuredSum, structured_terms

COMPLEX_KINDS = ("A", "A*", "Z", "Z*")
RADIAL_KINDS = ("D", "D*")
ALL_KINDS = COMPLEX_KINDS + RADIAL_KINDS + ("dbar",)


@dataclass(frozen=True)
class OperatorSpec:
    kind: str
    index: int = 1
    power: int = 1

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.index < 1 or self.power < 1:
            raise ValueError("index and power must be >= 1")


def _unit_poly(n, j, conjugated, kind="complex"):
    e = tuple(1 if d == j - 1 else 0 for d in range(n))
    zeros = (0,) * n
    return Poly.monomial(n, zeros if conjugated else e,
                         e if conjugated else zeros, 1.0, kind)


def _apply_complex_once(kind, j, terms):
    """One application of A_j / A*_j / Z_j / Z*_j to structured terms."""
    out = []
    for radial, poly in terms:
        n = poly.n
        dradial = radial.d_dt()
        if kind in ("A", "Z"):
            # d/dz_j: radial part via (conj(z_j)/2) d/dt
            chain = _unit_poly(n, j, conjugated=True) * poly
            out.append((dradial, chain.scale(0.5)))
            dpoly = poly.dz(j)
            mult = _unit_poly(n, j, conjugated=True) * poly
            sign = 0.25 if kind == "A" else -0.25
        else:
            chain = _unit_poly(n, j, conjugated=False) * poly
            out.append((dradial, chain.scale(0.5)))
            dpoly = poly.dzbar(j)
            mult = _unit_poly(n, j, conjugated=False) * poly
            sign = -0.25 if kind == "A*" else 0.25
        out.append((radial, dpoly + mult.scale(sign)))
    return [(r, p.prune(0.0)) for r, p in out if p.coeffs]


def _fd_partial(f, pts, coord_index, h=None):
    """4th-order central difference of f along one real coordinate of
    complex points, step chosen by a small Richardson sweep."""
    pts = np.asarray(pts, dtype=complex)
    n = pts.shape[-1]
    j, imag_part = coord_index % n, coord_index >= n
    scale = max(1.0, float(np.max(np.abs(pts))))
    h0 = (h if h is not None else 1e-2) * scale
    delta = np.zeros(n, dtype=complex)
    delta[j] = 1j if imag_part else 1.0

    def stencil(hh):
        return (-np.asarray(f(pts + 2 * hh * delta))
                + 8 * np.asarray(f(pts + hh * delta))
                - 8 * np.asarray(f(pts - hh * delta))
                + np.asarray(f(pts + (-2) * hh * delta))) / (12 * hh)

    best, best_err = None, np.inf
    prev = stencil(h0)
    hh = h0
    for _ in range(3):
        hh /= 2.0
        cur = stencil(hh)
        err = float(np.max(np.abs(cur - prev)))
        if err < best_err:
            best, best_err = cur, err
        prev = cur
    return best


def fd_wirtinger(f, pts, j, conjugated, h=None):
    """d/dz_j (or d/dconj(z_j)) of a black-box f at complex points, via
    (1/2)(d/dx -+ i d/dy)."""
    pts = np.asarray(pts, dtype=complex)
    n = pts.shape[-1]
    dx = _fd_partial(f, pts, j - 1, h)
    dy = _fd_partial(f, pts, n + j - 1, h)
    return 0.5 * (dx + 1j * dy) if conjugated else 0.5 * (dx - 1j * dy)


def _apply_blackbox(kind, j, f):
    conj_deriv = kind in ("A*", "Z*")
    sign = {"A": 0.25, "Z": -0.25, "A*": -0.25, "Z*": 0.25}[kind]

    def applied(points):
        pts = np.asarray(points, dtype=complex)
        single = pts.ndim == 1
        if single:
            pts = pts[None, :]
        deriv = fd_wirtinger(f, pts, j, conj_deriv)
        mult = np.conj(pts[:, j - 1]) if kind in ("A", "Z") else pts[:, j - 1]
        vals = deriv + sign * mult * np.asarray(f(pts))
        return vals[0] if single else vals

    return applied


def apply(op: OperatorSpec, f):
    """Apply the operator; structured input stays structured (exact),
    callables go through finite differences."""
    if op.kind in RADIAL_KINDS:
        raise ValueError("radial ladder operators act on profiles; use radial_ladder")
    if op.kind == "dbar":
        return euclid_dbar(f, op.power)
    try:
        terms = structured_terms(f)
    except TypeError:
        terms = None
    if terms is not None:
        for _ in range(op.power):
            terms = _apply_complex_once(op.kind, op.index, terms)
        return StructuredSum(terms)
    out = f
    for _ in range(op.power):
        out = _apply_blackbox(op.kind, op.index, out)
    return out


def apply_wirtinger(f, j: int, conjugated: bool) -> StructuredSum:
    """Pure d/dz_j (or d/dconj(z_j) when conjugated) on a structured function."""
    out = []
    for radial, poly in structured_terms(f):
        n = poly.n
        chain = _unit_poly(n, j, conjugated=not conjugated) * poly
        out.append((radial.d_dt(), chain.scale(0.5)))
        out.append((radial, poly.dzbar(j) if conjugated else poly.dz(j)))
    return StructuredSum([(r, p.prune(0.0)) for r, p in out if p.coeffs])


def monomial_weyl(p: int, q: int, kind: str, f):
    """(X_1*)^p (X_2)^q f for X in {A, Z}: the operator attached to the
    monomial weight z_1^p conj(z_2)^q."""
    if kind not in ("A", "Z"):
        raise ValueError("kind must be 'A' or 'Z'")
    out = f
    if q:
        out = apply(OperatorSpec(kind, 2, q), out)
    if p:
        out = apply(OperatorSpec(kind + "*", 1, p), out)
    return out


def ladder_t_operator(kind: str, profile: RadialProfile) -> RadialProfile:
    """(1/rho) Dtilde and (1/rho) Dtilde* as pure t-space operators:
    d/dt - 1/2 and d/dt + 1/2 on the radial profile."""
    if kind == "D":
        return profile.d_dt() + profile.scale(-0.5)
    if kind == "D*":
        return profile.d_dt() + profile.scale(0.5)
    raise ValueError("kind must be 'D' or 'D*'")


def radial_ladder(kind: str, k: int, m: int, rho) -> float:
    """(1/rho)(d/drho -+ rho/2) phi_k^{m-1} at rho, via analytic Laguerre
    derivatives. Numerically this equals -phi_k^m (kind 'D') and
    -phi_{k-1}^m (kind 'D*'); the residual tests pin the sign."""
    out = ladder_t_operator(kind, RadialProfile.phi(k, m))
    val = out.eval_t(0.5 * np.asarray(rho, dtype=float) ** 2)
    return val.real if np.ndim(val) else float(np.real(val))


def euclid_dbar(f, power: int = 1):
    """k-fold d/dx_1 + i d/dx_2 on functions of real points (first two
    coordinates paired as x_1 + i x_2)."""
    try:
        terms = structured_terms(f)
    except TypeError:
        terms = None
    if terms is not None:
        for _ in range(power):
            out = []
            for radial, poly in terms:
                n = poly.n
                z1 = (Poly.monomial(n, (1,) + (0,) * (n - 1), kind="real")
                      + Poly.monomial(n, (0, 1) + (0,) * (n - 2), kind="real").scale(1j))
                out.append((radial.d_dt(), z1 * poly))
                out.append((radial, poly.dx(1) + poly.dx(2).scale(1j)))
            terms = [(r, p.prune(0.0)) for r, p in out if p.coeffs]
        return StructuredSum(terms)

    out_f = f
    for _ in range(power):
        out_f = _dbar_blackbox(out_f)
    return out_f


def _dbar_blackbox(f):
    def applied(points):
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        if single:
            pts = pts[None, :]
        scale = max(1.0, float(np.max(np.abs(pts))))
        vals = None
        for axis, factor in ((0, 1.0), (1, 1j)):
            delta = np.zeros(pts.shape[-1])
            delta[axis] = 1.0
            h = 1e-3 * scale
            d = (-np.asarray(f(pts + 2 * h * delta))
                 + 8 * np.asarray(f(pts + h * delta))
                 - 8 * np.asarray(f(pts - h * delta))
                 + np.asarray(f(pts - 2 * h * delta))) / (12 * h)
            vals = factor * d if vals is None else vals + factor * d
        return vals[0] if single else vals

    return applied
