"""Invariant vector fields: analytic vs finite-difference paths, ladder
identities, Euclidean dbar."""

import numpy as np
import pytest

from twistmeans.harmonics import Poly
from twistmeans.operators import (OperatorSpec, apply, apply_wirtinger,
                                  euclid_dbar, ladder_t_operator, monomial_weyl,
                                  radial_ladder)
from twistmeans.profiles import RadialProfile, RadialTerm, StructuredFunction

RNG = np.random.default_rng(17)


def _zgrid(n, count=6, scale=1.5):
    z = RNG.normal(size=(count, n)) + 1j * RNG.normal(size=(count, n))
    return z * (scale / np.linalg.norm(z, axis=1))[:, None]


def _phi(k, n):
    return StructuredFunction(RadialProfile.phi(k, n), Poly.one(n))


class TestSingleApplications:
    def test_a_star_raises_type(self):
        # A*_1 phi_k = -(1/2) z_1 phi_k^{(n+1)-type}
        n, k = 2, 3
        z = _zgrid(n)
        got = apply(OperatorSpec("A*", 1), _phi(k, n))(z)
        want = (-0.5 * z[:, 0]
                * RadialProfile.phi(k, n + 1).eval_rho(np.linalg.norm(z, axis=1)))
        assert np.max(np.abs(got - want)) < 1e-13

    def test_a_lowers_degree(self):
        # A_2 phi_k = -(1/2) conj(z_2) phi_{k-1}^{(n+1)-type}
        n, k = 2, 3
        z = _zgrid(n)
        got = apply(OperatorSpec("A", 2), _phi(k, n))(z)
        want = (-0.5 * np.conj(z[:, 1])
                * RadialProfile.phi(k - 1, n + 1).eval_rho(np.linalg.norm(z, axis=1)))
        assert np.max(np.abs(got - want)) < 1e-13

    def test_a_kills_ground_state(self):
        n = 2
        z = _zgrid(n)
        got = apply(OperatorSpec("A", 2), _phi(0, n))(z)
        assert np.max(np.abs(got)) < 1e-14

    def test_z_star_lowers_degree(self):
        # Z*_1 phi_k = -(1/2) z_1 phi_{k-1}^{(n+1)-type}
        n, k = 2, 2
        z = _zgrid(n)
        got = apply(OperatorSpec("Z*", 1), _phi(k, n))(z)
        want = (-0.5 * z[:, 0]
                * RadialProfile.phi(k - 1, n + 1).eval_rho(np.linalg.norm(z, axis=1)))
        assert np.max(np.abs(got - want)) < 1e-13

    def test_blackbox_matches_structured(self):
        n = 2
        f = StructuredFunction(RadialProfile.gaussian(),
                               Poly.monomial(n, (1, 0), (0, 0)))
        z = _zgrid(n, count=4, scale=1.0)
        for kind, idx in (("A", 1), ("A*", 2), ("Z", 2), ("Z*", 1)):
            structured = apply(OperatorSpec(kind, idx), f)(z)
            blackbox = apply(OperatorSpec(kind, idx), lambda p: f(p))(z)
            assert np.max(np.abs(structured - blackbox)) < 1e-6


class TestMonomialWeyl:
    @pytest.mark.parametrize("p,q", [(1, 0), (0, 1), (1, 1), (2, 1), (2, 2)])
    @pytest.mark.parametrize("k", [0, 1, 2, 4])
    def test_a_route(self, p, q, k):
        n = 2
        z = _zgrid(n)
        got = monomial_weyl(p, q, "A", _phi(k, n))(z)
        if k < q:
            assert np.max(np.abs(got)) < 1e-13
            return
        mono = z[:, 0] ** p * np.conj(z[:, 1]) ** q
        want = ((-2.0) ** (-(p + q)) * mono
                * RadialProfile.phi(k - q, n + p + q).eval_rho(
                    np.linalg.norm(z, axis=1)))
        assert np.max(np.abs(got - want)) < 1e-12 * max(1.0, np.max(np.abs(want)))

    @pytest.mark.parametrize("p,q", [(1, 0), (1, 1), (2, 1)])
    @pytest.mark.parametrize("k", [0, 1, 3])
    def test_z_route_shifts_by_p(self, p, q, k):
        n = 2
        z = _zgrid(n)
        got = monomial_weyl(p, q, "Z", _phi(k, n))(z)
        if k < p:
            assert np.max(np.abs(got)) < 1e-13
            return
        mono = z[:, 0] ** p * np.conj(z[:, 1]) ** q
        want = ((-2.0) ** (-(p + q)) * mono
                * RadialProfile.phi(k - p, n + p + q).eval_rho(
                    np.linalg.norm(z, axis=1)))
        assert np.max(np.abs(got - want)) < 1e-12 * max(1.0, np.max(np.abs(want)))

    def test_identity_at_zero_degrees(self):
        n = 2
        f = _phi(2, n)
        z = _zgrid(n)
        assert np.max(np.abs(monomial_weyl(0, 0, "A", f)(z) - f(z))) == 0.0

    def test_commutation(self):
        n = 2
        f = StructuredFunction(RadialProfile.phi(3, n),
                               Poly.monomial(n, (1, 0), (0, 1)))
        z = _zgrid(n)
        ab = apply(OperatorSpec("A", 2), apply(OperatorSpec("A*", 1), f))(z)
        ba = apply(OperatorSpec("A*", 1), apply(OperatorSpec("A", 2), f))(z)
        assert np.max(np.abs(ab - ba)) < 1e-13


class TestRadialLadder:
    def test_type_raise(self):
        # (1/rho) Dtilde phi_k^{m-1} = -phi_k^m (empirical sign)
        for k, m in ((0, 2), (3, 2), (5, 4)):
            rho = np.linspace(0.3, 6.0, 20)
            got = np.array([radial_ladder("D", k, m, r) for r in rho])
            want = -RadialProfile.phi(k, m + 1).eval_rho(rho).real
            assert np.max(np.abs(got - want)) < 1e-12

    def test_degree_lowering(self):
        for k, m in ((0, 2), (2, 3)):
            rho = np.linspace(0.3, 6.0, 20)
            got = np.array([radial_ladder("D*", k, m, r) for r in rho])
            if k == 0:
                assert np.max(np.abs(got)) < 1e-14
            else:
                want = -RadialProfile.phi(k - 1, m + 1).eval_rho(rho).real
                assert np.max(np.abs(got - want)) < 1e-12

    def test_composition_shifts(self):
        # p D-steps and q D*-steps: type += p+q, degree -= q, sign (-1)^{p+q}
        k, m, p, q = 3, 2, 2, 1
        prof = RadialProfile.phi(k, m)
        for _ in range(q):
            prof = ladder_t_operator("D*", prof)
        for _ in range(p):
            prof = ladder_t_operator("D", prof)
        rho = np.linspace(0.4, 5.0, 15)
        got = (-1.0) ** (p + q) * prof.eval_rho(rho).real
        want = RadialProfile.phi(k - q, m + p + q).eval_rho(rho).real
        assert np.max(np.abs(got - want)) < 1e-12

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            radial_ladder("X", 1, 2, 1.0)


class TestEuclidDbar:
    def test_holomorphic_monomial_killed(self):
        from twistmeans.experiments import x1_plus_ix2_power
        n = 3
        f = StructuredFunction(RadialProfile((RadialTerm(1.0, 0.0, 0, 0.0, 0),)),
                               x1_plus_ix2_power(n, 1))
        out = euclid_dbar(f, 1)
        x = RNG.normal(size=(5, n))
        assert np.max(np.abs(out(x))) < 1e-13

    def test_antiholomorphic_gives_two(self):
        n = 3
        conj_poly = Poly(n, {(1, 0, 0): 1.0, (0, 1, 0): -1j}, kind="real")
        f = StructuredFunction(RadialProfile((RadialTerm(1.0, 0.0, 0, 0.0, 0),)),
                               conj_poly)
        out = euclid_dbar(f, 1)
        x = RNG.normal(size=(5, n))
        assert np.max(np.abs(out(x) - 2.0)) < 1e-13

    def test_structured_vs_finite_differences(self):
        # radial factor e^{-rho^2} (t-exponent -4) against the FD path
        n = 3
        f = StructuredFunction(RadialProfile((RadialTerm(1.0, 0.0, 0, 0.0, -4),)),
                               Poly.monomial(n, (1, 1, 0), kind="real"))
        x = RNG.normal(size=(6, n))
        structured = euclid_dbar(f, 1)(x)
        blackbox = euclid_dbar(lambda p: f(p), 1)(x)
        assert np.max(np.abs(structured - blackbox)) < 1e-6

    def test_iterated_power(self):
        n = 3
        f = StructuredFunction(RadialProfile.gaussian(),
                               Poly.monomial(n, (2, 0, 0), kind="real"))
        single = euclid_dbar(euclid_dbar(f, 1), 1)
        double = euclid_dbar(f, 2)
        x = RNG.normal(size=(4, n))
        assert np.max(np.abs(single(x) - double(x))) < 1e-12


class TestWirtingerHelper:
    def test_matches_operator_combination(self):
        # d/dconj(z_1) = (A*_1 + Z*_1)/2
        n = 2
        f = StructuredFunction(RadialProfile.phi(2, n),
                               Poly.monomial(n, (0, 1), (0, 0)))
        z = _zgrid(n)
        direct = apply_wirtinger(f, 1, conjugated=True)(z)
        via_ops = 0.5 * (apply(OperatorSpec("A*", 1), f)(z)
                         + apply(OperatorSpec("Z*", 1), f)(z))
        assert np.max(np.abs(direct - via_ops)) < 1e-13

    def test_invalid_operator_spec(self):
        with pytest.raises(ValueError):
            OperatorSpec("Q", 1)
        with pytest.raises(ValueError):
            OperatorSpec("A", 0)
