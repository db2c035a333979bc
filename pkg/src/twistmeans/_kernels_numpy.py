"""Pure-numpy kernel implementations (fallback backend).

Signature contract shared with ``_kernels_numba``:

* ``laguerre_values(k, alpha, x)``: generalized Laguerre L_k^alpha on an
  array, by the three-term recurrence in the degree.
* ``structured_mean(...)``: weighted sphere sum of a structured function
  sum_j rad_j(t) * poly_j(u) evaluated at u = center + arg_sign*radius*node,
  t = |u|^2/2, times an optional polynomial weight in w = radius*node and
  the oscillatory factor exp(i*phase_sign*(lam/2) Im(center . conj(w))).
  Radial atoms are t^a * L_k^alpha(t) * exp(s*t/2).
* ``structured_mean_real(...)``: same without the phase, on real points
  u = center + radius*node with polynomials in real coordinates.

Node layout for the complex kernel: columns [Re u_1..Re u_n, Im u_1..Im u_n].
"""

from __future__ import annotations

import numpy as np


def laguerre_values(k, alpha, x):
    x = np.asarray(x, dtype=np.float64)
    if k == 0:
        return np.ones_like(x)
    prev = np.ones_like(x)
    cur = 1.0 + alpha - x
    for i in range(1, k):
        prev, cur = cur, ((2.0 * i + 1.0 + alpha - x) * cur - (i + alpha) * prev) / (i + 1.0)
    return cur


def _poly_eval_complex(u, coeffs, ea, eb):
    # u: (N, n) complex; returns (N,) complex
    vals = np.zeros(u.shape[0], dtype=np.complex128)
    uc = np.conj(u)
    for l in range(coeffs.shape[0]):
        term = np.full(u.shape[0], coeffs[l])
        for d in range(u.shape[1]):
            if ea[l, d]:
                term = term * u[:, d] ** ea[l, d]
            if eb[l, d]:
                term = term * uc[:, d] ** eb[l, d]
        vals += term
    return vals


def _poly_eval_real(x, coeffs, e):
    vals = np.zeros(x.shape[0], dtype=np.complex128)
    for l in range(coeffs.shape[0]):
        term = np.full(x.shape[0], coeffs[l])
        for d in range(x.shape[1]):
            if e[l, d]:
                term = term * x[:, d] ** e[l, d]
        vals += term
    return vals


def structured_mean(nodes, weights, radius, center, lam, phase_sign, arg_sign,
                    rad_a, rad_k, rad_alpha, rad_s,
                    poly_c, poly_ea, poly_eb, poly_off,
                    wt_c, wt_ea, wt_eb):
    n = center.shape[0] // 2
    w_re = radius * nodes[:, :n]
    w_im = radius * nodes[:, n:]
    u_re = center[:n][None, :] + arg_sign * w_re
    u_im = center[n:][None, :] + arg_sign * w_im
    u = u_re + 1j * u_im
    t = 0.5 * ((u_re * u_re).sum(axis=1) + (u_im * u_im).sum(axis=1))

    vals = np.zeros(nodes.shape[0], dtype=np.complex128)
    for j in range(rad_a.shape[0]):
        rad = laguerre_values(int(rad_k[j]), rad_alpha[j], t)
        if rad_a[j] != 0.0:
            rad = rad * np.power(t, rad_a[j])
        if rad_s[j] != 0:
            rad = rad * np.exp(0.5 * rad_s[j] * t)
        lo, hi = poly_off[j], poly_off[j + 1]
        vals += rad * _poly_eval_complex(u, poly_c[lo:hi], poly_ea[lo:hi], poly_eb[lo:hi])

    w = w_re + 1j * w_im
    vals *= _poly_eval_complex(w, wt_c, wt_ea, wt_eb)

    if phase_sign != 0:
        im_zwbar = (center[n:][None, :] * w_re - center[:n][None, :] * w_im).sum(axis=1)
        vals = vals * np.exp(1j * (phase_sign * lam / 2.0) * im_zwbar)
    return complex(np.dot(weights, vals))


def structured_mean_real(nodes, weights, radius, center,
                         rad_a, rad_k, rad_alpha, rad_s,
                         poly_c, poly_e, poly_off,
                         wt_c, wt_e):
    x = center[None, :] + radius * nodes
    t = 0.5 * (x * x).sum(axis=1)
    vals = np.zeros(nodes.shape[0], dtype=np.complex128)
    for j in range(rad_a.shape[0]):
        rad = laguerre_values(int(rad_k[j]), rad_alpha[j], t)
        if rad_a[j] != 0.0:
            rad = rad * np.power(t, rad_a[j])
        if rad_s[j] != 0:
            rad = rad * np.exp(0.5 * rad_s[j] * t)
        lo, hi = poly_off[j], poly_off[j + 1]
        vals += rad * _poly_eval_real(x, poly_c[lo:hi], poly_e[lo:hi])
    vals *= _poly_eval_real(radius * nodes, wt_c, wt_e)
    return complex(np.dot(weights, vals))
