"""Bigraded solid harmonics on C^n, Euclidean solid harmonics on R^n, and
spherical-harmonic expansion of functions.

Polynomials come in two kinds: "complex" (in z and conj(z) on C^n, monomial
keys are exponent tuples (alpha, beta) concatenated) and "real" (in the
coordinates of R^n). The kernel of the Laplacian on a fixed homogeneity is
computed over exact rationals, so membership in H_{p,q} is never decided by
an epsilon; orthonormalization against the exact sphere-moment Gram matrix
is the only floating-point step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .spheres import SphereRule, exact_moment_complex, exact_moment_real


class Poly:
    """Sparse polynomial with complex coefficients.

    kind "complex": monomial key (a_1..a_n, b_1..b_n) means z^a * conj(z)^b.
    kind "real":    monomial key (a_1..a_n) means x^a.
    """

    __slots__ = ("n", "kind", "coeffs")

    def __init__(self, n: int, coeffs: dict | None = None, kind: str = "complex"):
        if kind not in ("complex", "real"):
            raise ValueError(f"unknown kind {kind!r}")
        self.n = n
        self.kind = kind
        self.coeffs = {k: complex(v) for k, v in (coeffs or {}).items() if v != 0}

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, n, alpha, beta=None, c=1.0, kind="complex"):
        if kind == "complex":
            key = tuple(alpha) + tuple(beta if beta is not None else (0,) * n)
        else:
            key = tuple(alpha)
        return cls(n, {key: c}, kind)

    @classmethod
    def zero(cls, n, kind="complex"):
        return cls(n, {}, kind)

    @classmethod
    def one(cls, n, kind="complex"):
        width = 2 * n if kind == "complex" else n
        return cls(n, {(0,) * width: 1.0}, kind)

    # -- algebra ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0.0) + v
        return Poly(self.n, out, self.kind)

    def __sub__(self, other):
        return self + other.scale(-1.0)

    def scale(self, c):
        return Poly(self.n, {k: v * c for k, v in self.coeffs.items()}, self.kind)

    def __mul__(self, other):
        if np.isscalar(other):
            return self.scale(other)
        out: dict = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0.0) + v1 * v2
        return Poly(self.n, out, self.kind)

    __rmul__ = __mul__

    def conjugate(self):
        if self.kind == "real":
            return Poly(self.n, {k: np.conj(v) for k, v in self.coeffs.items()}, self.kind)
        n = self.n
        out = {k[n:] + k[:n]: np.conj(v) for k, v in self.coeffs.items()}
        return Poly(n, out, self.kind)

    # -- derivatives ----------------------------------------------------
    def _shift_down(self, pos):
        out = {}
        for k, v in self.coeffs.items():
            e = k[pos]
            if e:
                key = k[:pos] + (e - 1,) + k[pos + 1:]
                out[key] = out.get(key, 0.0) + e * v
        return Poly(self.n, out, self.kind)

    def dz(self, j):
        """d/dz_j (complex kind; j is 1-based)."""
        self._require("complex")
        return self._shift_down(j - 1)

    def dzbar(self, j):
        """d/d(conj z_j) (complex kind; j is 1-based)."""
        self._require("complex")
        return self._shift_down(self.n + j - 1)

    def dx(self, j):
        """d/dx_j (real kind; j is 1-based)."""
        self._require("real")
        return self._shift_down(j - 1)

    def laplacian(self):
        """4 sum_j d2/dz_j dzbar_j (complex) or sum_j d2/dx_j^2 (real)."""
        if self.kind == "complex":
            out = Poly.zero(self.n, self.kind)
            for j in range(1, self.n + 1):
                out = out + self.dz(j).dzbar(j).scale(4.0)
            return out
        out = Poly.zero(self.n, self.kind)
        for j in range(1, self.n + 1):
            out = out + self.dx(j).dx(j)
        return out

    def _require(self, kind):
        if self.kind != kind:
            raise ValueError(f"operation requires kind={kind!r}, poly is {self.kind!r}")

    # -- evaluation -----------------------------------------------------
    def eval(self, points):
        """Evaluate at points: complex (N, n) or (n,) for kind "complex";
        real (N, n) or (n,) for kind "real"."""
        pts = np.asarray(points)
        single = pts.ndim == 1
        if single:
            pts = pts[None, :]
        vals = np.zeros(pts.shape[0], dtype=np.complex128)
        if self.kind == "complex":
            cpts = pts.astype(np.complex128)
            cc = np.conj(cpts)
            for k, v in self.coeffs.items():
                term = np.full(pts.shape[0], v, dtype=np.complex128)
                for d in range(self.n):
                    if k[d]:
                        term *= cpts[:, d] ** k[d]
                    if k[self.n + d]:
                        term *= cc[:, d] ** k[self.n + d]
                vals += term
        else:
            for k, v in self.coeffs.items():
                term = np.full(pts.shape[0], v, dtype=np.complex128)
                for d in range(self.n):
                    if k[d]:
                        term *= pts[:, d] ** k[d]
                vals += term
        return vals[0] if single else vals

    def eval_nodes(self, nodes):
        """Evaluate on real-layout sphere nodes (N, d); converts to complex
        points for kind "complex" (d = 2n, layout [Re.., Im..])."""
        nodes = np.asarray(nodes, dtype=float)
        if self.kind == "complex":
            return self.eval(nodes[:, :self.n] + 1j * nodes[:, self.n:])
        return self.eval(nodes)

    # -- structure ------------------------------------------------------
    def bidegree(self):
        """(p, q) for a homogeneous complex-kind polynomial, else None."""
        self._require("complex")
        degs = {(sum(k[:self.n]), sum(k[self.n:])) for k in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def degree(self):
        return max((sum(k) for k in self.coeffs), default=0)

    def is_zero(self, tol=0.0):
        return all(abs(v) <= tol for v in self.coeffs.values())

    def substitute_linear(self, A):
        """Compose with the linear map given by matrix A: variable_i ->
        sum_j A[i, j] variable_j (conjugate entries act on the conj(z) block)."""
        A = np.asarray(A, dtype=complex)
        lin_z = [Poly(self.n, {}, self.kind) for _ in range(self.n)]
        for i in range(self.n):
            cz = {}
            for j in range(self.n):
                if A[i, j] != 0:
                    if self.kind == "complex":
                        key = tuple(1 if d == j else 0 for d in range(self.n)) + (0,) * self.n
                    else:
                        key = tuple(1 if d == j else 0 for d in range(self.n))
                    cz[key] = A[i, j]
            lin_z[i] = Poly(self.n, cz, self.kind)
        if self.kind == "complex":
            lin_zb = []
            for i in range(self.n):
                czb = {}
                for j in range(self.n):
                    if A[i, j] != 0:
                        key = (0,) * self.n + tuple(1 if d == j else 0 for d in range(self.n))
                        czb[key] = np.conj(A[i, j])
                lin_zb.append(Poly(self.n, czb, self.kind))
        out = Poly.zero(self.n, self.kind)
        for k, v in self.coeffs.items():
            term = Poly.one(self.n, self.kind).scale(v)
            for d in range(self.n):
                for _ in range(k[d]):
                    term = term * lin_z[d]
            if self.kind == "complex":
                for d in range(self.n):
                    for _ in range(k[self.n + d]):
                        term = term * lin_zb[d]
            out = out + term
        return out

    def prune(self, tol=1e-14):
        return Poly(self.n,
                    {k: v for k, v in self.coeffs.items() if abs(v) > tol},
                    self.kind)

    def encode(self):
        """Kernel arrays (coeffs, exp_a, exp_b); exp_b is zeros for kind "real"."""
        keys = sorted(self.coeffs)
        L = len(keys)
        c = np.array([self.coeffs[k] for k in keys], dtype=np.complex128)
        if self.kind == "complex":
            ea = np.array([k[:self.n] for k in keys], dtype=np.int64).reshape(L, self.n)
            eb = np.array([k[self.n:] for k in keys], dtype=np.int64).reshape(L, self.n)
        else:
            ea = np.array(keys, dtype=np.int64).reshape(L, self.n)
            eb = np.zeros_like(ea)
        return c, ea, eb

    def __repr__(self):
        return f"Poly(n={self.n}, kind={self.kind}, terms={len(self.coeffs)})"


def laplacian(poly: Poly) -> Poly:
    """Exact symbolic Laplacian on the coefficient map."""
    return poly.laplacian()


# ---------------------------------------------------------------------------
# exact-rational kernel of the Laplacian
# ---------------------------------------------------------------------------

def _multi_indices(n, deg):
    """All multi-indices of length n summing to deg, lexicographically
    descending (leading variable takes the largest power first)."""
    if n == 1:
        return [(deg,)]
    out = []
    for v in range(deg, -1, -1):
        out.extend((v,) + rest for rest in _multi_indices(n - 1, deg - v))
    return out


def monomial_pairs(n, p, q):
    """Monomial basis of the (p, q)-homogeneous polynomials, graded-lex order."""
    return [(a, b) for a in _multi_indices(n, p) for b in _multi_indices(n, q)]


def _rref(rows):
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, m):
            if rows[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def _nullspace(rows, pivots, ncols):
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -rows[ri][fc]
        out.append(v)
    return out


def _harmonic_kernel_complex(n, p, q):
    source = monomial_pairs(n, p, q)
    if p == 0 or q == 0:
        dim = len(source)
        return source, [[Fraction(1 if i == j else 0) for j in range(dim)]
                        for i in range(dim)]
    target = monomial_pairs(n, p - 1, q - 1)
    tindex = {m: i for i, m in enumerate(target)}
    rows = [[Fraction(0)] * len(source) for _ in target]
    for col, (a, b) in enumerate(source):
        for j in range(n):
            if a[j] and b[j]:
                ta = a[:j] + (a[j] - 1,) + a[j + 1:]
                tb = b[:j] + (b[j] - 1,) + b[j + 1:]
                rows[tindex[(ta, tb)]][col] += 4 * a[j] * b[j]
    rref, pivots = _rref(rows)
    return source, _nullspace(rref, pivots, len(source))


def _harmonic_kernel_real(n, k):
    source = _multi_indices(n, k)
    if k < 2:
        dim = len(source)
        return source, [[Fraction(1 if i == j else 0) for j in range(dim)]
                        for i in range(dim)]
    target = _multi_indices(n, k - 2)
    tindex = {m: i for i, m in enumerate(target)}
    rows = [[Fraction(0)] * len(source) for _ in target]
    for col, a in enumerate(source):
        for j in range(n):
            if a[j] >= 2:
                ta = a[:j] + (a[j] - 2,) + a[j + 1:]
                rows[tindex[ta]][col] += a[j] * (a[j] - 1)
    rref, pivots = _rref(rows)
    return source, _nullspace(rref, pivots, len(source))


@dataclass(frozen=True)
class HarmonicBasis:
    """Orthonormal basis (for the normalized surface measure on the unit
    sphere) of a harmonic-polynomial space."""

    n: int
    kind: str
    p: int
    q: int | None
    elements: tuple = field(repr=False)

    def __len__(self):
        return len(self.elements)

    @property
    def dim(self):
        return len(self.elements)


def _orthonormalize(monomials, kernel_vectors, gram_entry):
    """Cholesky-based Gram-Schmidt, exact rational Gram matrix."""
    m = len(kernel_vectors)
    G = np.empty((m, m), dtype=float)
    for i in range(m):
        for j in range(i + 1):
            val = gram_entry(kernel_vectors[i], kernel_vectors[j])
            G[i, j] = G[j, i] = float(val)
    L = np.linalg.cholesky(G)
    Minv = np.linalg.inv(L)  # rows give orthonormal combinations
    return Minv


def build_bigraded_basis(n: int, p: int, q: int) -> HarmonicBasis:
    """Orthonormal basis of the bidegree-(p, q) harmonic polynomials on C^n.

    The kernel of the Laplacian is computed over exact rationals on the
    graded-lex monomial basis; the basis dimension is the computed kernel
    dimension. Orthonormalization uses the exact sphere moments.
    """
    if n < 1 or p < 0 or q < 0:
        raise ValueError("need n >= 1 and p, q >= 0")
    source, kernel = _harmonic_kernel_complex(n, p, q)
    if not kernel:
        return HarmonicBasis(n, "complex", p, q, ())

    def gram_entry(u, v):
        total = Fraction(0)
        for i, (a1, b1) in enumerate(source):
            if u[i] == 0:
                continue
            for j, (a2, b2) in enumerate(source):
                if v[j] == 0:
                    continue
                left = tuple(x + y for x, y in zip(a1, b2))
                right = tuple(x + y for x, y in zip(b1, a2))
                if left == right:
                    total += u[i] * v[j] * exact_moment_complex(n, left, right)
        return total

    M = _orthonormalize(source, kernel, gram_entry)
    elements = []
    for i in range(len(kernel)):
        coeffs = {}
        for j in range(len(kernel)):
            if M[i, j] == 0.0:
                continue
            for col, (a, b) in enumerate(source):
                if kernel[j][col]:
                    key = a + b
                    coeffs[key] = coeffs.get(key, 0.0) + M[i, j] * float(kernel[j][col])
        elements.append(Poly(n, coeffs, "complex").prune(0.0))
    return HarmonicBasis(n, "complex", p, q, tuple(elements))


def build_real_basis(n: int, k: int) -> HarmonicBasis:
    """Orthonormal basis of the degree-k solid harmonics on R^n."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    source, kernel = _harmonic_kernel_real(n, k)
    if not kernel:
        return HarmonicBasis(n, "real", k, None, ())

    def gram_entry(u, v):
        total = Fraction(0)
        for i, a1 in enumerate(source):
            if u[i] == 0:
                continue
            for j, a2 in enumerate(source):
                if v[j] == 0:
                    continue
                total += u[i] * v[j] * exact_moment_real(
                    n, tuple(x + y for x, y in zip(a1, a2)))
        return total

    M = _orthonormalize(source, kernel, gram_entry)
    elements = []
    for i in range(len(kernel)):
        coeffs = {}
        for j in range(len(kernel)):
            if M[i, j] == 0.0:
                continue
            for col, a in enumerate(source):
                if kernel[j][col]:
                    coeffs[a] = coeffs.get(a, 0.0) + M[i, j] * float(kernel[j][col])
        elements.append(Poly(n, coeffs, "real").prune(0.0))
    return HarmonicBasis(n, "real", k, None, tuple(elements))


def unitary_action(poly: Poly, U) -> Poly:
    """P(U^{-1} z) for a unitary U, expanded in monomials."""
    U = np.asarray(U, dtype=complex)
    if np.max(np.abs(U @ U.conj().T - np.eye(U.shape[0]))) > 1e-12:
        raise ValueError("matrix is not unitary to 1e-12")
    return poly.substitute_linear(np.conj(U).T).prune()


@dataclass(frozen=True)
class SampledCoefficient:
    """Spherical-harmonic coefficient of f against one basis element,
    sampled on a radial grid; tilde divides out rho^(p+q)."""

    j: int
    rho: np.ndarray
    values: np.ndarray
    tilde_values: np.ndarray


def harmonic_coefficients(f, basis: HarmonicBasis, rho_grid, rule: SphereRule):
    """Coefficients a_j(rho) = int f(rho w) conj(Y_j(w)) dmu(w) on each
    sphere of the grid, plus the rho^-(p+q)-scaled profiles.

    ``rule`` must be a unit-sphere rule of the matching dimension; ``f``
    takes complex points (N, n) for a complex-kind basis, real (N, n) rows
    otherwise.
    """
    rho_grid = np.asarray(rho_grid, dtype=float)
    total_deg = basis.p + (basis.q or 0)
    if total_deg > 0 and np.any(rho_grid == 0.0):
        raise ValueError("rho = 0 is invalid in the grid when p + q > 0")
    if rule.radius != 1.0:
        raise ValueError("harmonic_coefficients needs a unit-sphere rule")
    expected_dim = 2 * basis.n if basis.kind == "complex" else basis.n
    if rule.real_dim != expected_dim:
        raise ValueError(f"rule dimension {rule.real_dim} != {expected_dim}")

    yvals = [np.conj(e.eval_nodes(rule.nodes)) for e in basis.elements]
    out = []
    values = np.empty((len(basis), len(rho_grid)), dtype=complex)
    for gi, rho in enumerate(rho_grid):
        pts = rho * rule.nodes
        if basis.kind == "complex":
            fv = np.asarray(f(pts[:, :basis.n] + 1j * pts[:, basis.n:]))
        else:
            fv = np.asarray(f(pts))
        for j in range(len(basis)):
            values[j, gi] = np.dot(rule.weights, fv * yvals[j])
    for j in range(len(basis)):
        tilde = values[j] / rho_grid ** total_deg if total_deg else values[j].copy()
        out.append(SampledCoefficient(j, rho_grid.copy(), values[j].copy(), tilde))
    return out


# ---------------------------------------------------------------------------
# JSON export
# ---------------------------------------------------------------------------

def basis_to_json(basis: HarmonicBasis) -> str:
    """Serialize coefficient maps for cross-implementation comparison."""
    elements = []
    for e in basis.elements:
        terms = []
        for key in sorted(e.coeffs):
            v = e.coeffs[key]
            if basis.kind == "complex":
                terms.append({"alpha": list(key[:e.n]), "beta": list(key[e.n:]),
                              "re": v.real, "im": v.imag})
            else:
                terms.append({"alpha": list(key), "re": v.real, "im": v.imag})
        elements.append(terms)
    return json.dumps({"n": basis.n, "kind": basis.kind, "p": basis.p,
                       "q": basis.q, "elements": elements}, indent=1, sort_keys=True)


def basis_from_json(text: str) -> HarmonicBasis:
    data = json.loads(text)
    n, kind = data["n"], data["kind"]
    elements = []
    for terms in data["elements"]:
        coeffs = {}
        for t in terms:
            if kind == "complex":
                key = tuple(t["alpha"]) + tuple(t["beta"])
            else:
                key = tuple(t["alpha"])
            coeffs[key] = complex(t["re"], t["im"])
        elements.append(Poly(n, coeffs, kind))
    return HarmonicBasis(n, kind, data["p"], data["q"], tuple(elements))
