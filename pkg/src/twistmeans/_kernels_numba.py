"""Numba-jitted kernel implementations (default backend).

Same signature contract as ``_kernels_numpy``; see that module's docstring.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _lag_scalar(k, alpha, t):
    if k == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + alpha - t
    for i in range(1, k):
        nxt = ((2.0 * i + 1.0 + alpha - t) * cur - (i + alpha) * prev) / (i + 1.0)
        prev = cur
        cur = nxt
    return cur


@njit(cache=True)
def laguerre_values(k, alpha, x):
    out = np.empty(x.shape[0], dtype=np.float64)
    for i in range(x.shape[0]):
        out[i] = _lag_scalar(k, alpha, x[i])
    return out


@njit(cache=True)
def _cpow(base, e):
    out = 1.0 + 0.0j
    for _ in range(e):
        out *= base
    return out


@njit(cache=True)
def structured_mean(nodes, weights, radius, center, lam, phase_sign, arg_sign,
                    rad_a, rad_k, rad_alpha, rad_s,
                    poly_c, poly_ea, poly_eb, poly_off,
                    wt_c, wt_ea, wt_eb):
    N = nodes.shape[0]
    n = center.shape[0] // 2
    nterms = rad_a.shape[0]
    acc = 0.0 + 0.0j
    half_lam = 0.5 * lam * phase_sign
    for i in range(N):
        # u = center + arg_sign * w, with w = radius * node
        t = 0.0
        im_zwbar = 0.0
        for d in range(n):
            wre = radius * nodes[i, d]
            wim = radius * nodes[i, n + d]
            ure = center[d] + arg_sign * wre
            uim = center[n + d] + arg_sign * wim
            t += ure * ure + uim * uim
            im_zwbar += center[n + d] * wre - center[d] * wim
        t *= 0.5

        fval = 0.0 + 0.0j
        for j in range(nterms):
            rad = _lag_scalar(rad_k[j], rad_alpha[j], t)
            if rad_a[j] != 0.0:
                rad *= t ** rad_a[j]
            if rad_s[j] != 0:
                rad *= np.exp(0.5 * rad_s[j] * t)
            pval = 0.0 + 0.0j
            for l in range(poly_off[j], poly_off[j + 1]):
                term = poly_c[l]
                for d in range(n):
                    wre = radius * nodes[i, d]
                    wim = radius * nodes[i, n + d]
                    u = complex(center[d] + arg_sign * wre,
                                center[n + d] + arg_sign * wim)
                    if poly_ea[l, d]:
                        term *= _cpow(u, poly_ea[l, d])
                    if poly_eb[l, d]:
                        term *= _cpow(np.conj(u), poly_eb[l, d])
                pval += term
            fval += rad * pval

        wtval = 0.0 + 0.0j
        for l in range(wt_c.shape[0]):
            term = wt_c[l]
            for d in range(n):
                w = complex(radius * nodes[i, d], radius * nodes[i, n + d])
                if wt_ea[l, d]:
                    term *= _cpow(w, wt_ea[l, d])
                if wt_eb[l, d]:
                    term *= _cpow(np.conj(w), wt_eb[l, d])
            wtval += term

        val = fval * wtval
        if phase_sign != 0:
            val *= np.exp(1j * half_lam * im_zwbar)
        acc += weights[i] * val
    return acc


@njit(cache=True)
def structured_mean_real(nodes, weights, radius, center,
                         rad_a, rad_k, rad_alpha, rad_s,
                         poly_c, poly_e, poly_off,
                         wt_c, wt_e):
    N = nodes.shape[0]
    d_dim = center.shape[0]
    nterms = rad_a.shape[0]
    acc = 0.0 + 0.0j
    for i in range(N):
        t = 0.0
        for d in range(d_dim):
            x = center[d] + radius * nodes[i, d]
            t += x * x
        t *= 0.5

        fval = 0.0 + 0.0j
        for j in range(nterms):
            rad = _lag_scalar(rad_k[j], rad_alpha[j], t)
            if rad_a[j] != 0.0:
                rad *= t ** rad_a[j]
            if rad_s[j] != 0:
                rad *= np.exp(0.5 * rad_s[j] * t)
            pval = 0.0 + 0.0j
            for l in range(poly_off[j], poly_off[j + 1]):
                term = poly_c[l]
                for d in range(d_dim):
                    if poly_e[l, d]:
                        x = center[d] + radius * nodes[i, d]
                        term *= x ** poly_e[l, d]
                pval += term
            fval += rad * pval

        wtval = 0.0 + 0.0j
        for l in range(wt_c.shape[0]):
            term = wt_c[l]
            for d in range(d_dim):
                if wt_e[l, d]:
                    term *= (radius * nodes[i, d]) ** wt_e[l, d]
            wtval += term

        acc += weights[i] * fval * wtval
    return acc
