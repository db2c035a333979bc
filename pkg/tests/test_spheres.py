"""Sphere rules: normalization, exactness against exact moments, scaling,
annulus integration."""

import numpy as np
import pytest

from twistmeans.spheres import (SUPPORTED_DIMS, WeightedRule, annulus_integrate,
                                build_sphere_rule, complex_nodes,
                                exact_moment_complex, exact_moment_real,
                                integrate, surface_area, unit_rule,
                                weighted_integrate)


def _monomials_up_to(d, max_deg):
    def rec(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for v in range(remaining + 1):
            yield from rec(prefix + (v,), remaining - v, slots - 1)

    for deg in range(max_deg + 1):
        yield from rec((), deg, d)


class TestRuleBasics:
    @pytest.mark.parametrize("d", SUPPORTED_DIMS)
    def test_normalized_and_on_sphere(self, d):
        rule = build_sphere_rule(d, 1.7, 8)
        assert rule.weights.sum() == pytest.approx(1.0, abs=1e-14)
        radii = np.linalg.norm(rule.nodes, axis=1)
        assert np.max(np.abs(radii - 1.7)) < 1e-12

    def test_constant_integrates_to_itself(self):
        rule = build_sphere_rule(4, 1.0, 10)
        assert integrate(rule, lambda p: np.full(len(p), 2.5)) == pytest.approx(2.5)

    def test_odd_coordinate_vanishes(self):
        rule = build_sphere_rule(4, 1.0, 10)
        assert abs(integrate(rule, lambda p: p[:, 0])) < 1e-14

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_mean_square_coordinate(self, n):
        # sum |w_i|^2 = 1 and symmetry force |w_1|^2 to average 1/n
        rule = build_sphere_rule(2 * n, 1.0, 6)
        w = complex_nodes(rule)
        val = integrate(rule, lambda p: None) if False else \
            complex(np.dot(rule.weights, np.abs(w[:, 0]) ** 2))
        assert val.real == pytest.approx(1.0 / n, abs=1e-13)

    def test_unsupported_dimension(self):
        with pytest.raises(ValueError):
            build_sphere_rule(5, 1.0, 4)


class TestExactness:
    @pytest.mark.parametrize("d,order", [(2, 4), (2, 12), (3, 4), (3, 12),
                                         (4, 4), (4, 12), (6, 4), (6, 6)])
    def test_all_real_monomials(self, d, order):
        rule = unit_rule(d, order)
        for expo in _monomials_up_to(d, order):
            got = float(np.dot(rule.weights,
                               np.prod(rule.nodes ** np.array(expo), axis=1)))
            want = float(exact_moment_real(d, expo))
            assert abs(got - want) <= 1e-12 * max(1.0, abs(want)), expo

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_complex_monomials(self, n):
        rule = unit_rule(2 * n, 8)
        w = complex_nodes(rule)
        for alpha in _monomials_up_to(n, 3):
            for beta in _monomials_up_to(n, 3):
                vals = np.ones(len(w), dtype=complex)
                for d in range(n):
                    vals *= w[:, d] ** alpha[d] * np.conj(w[:, d]) ** beta[d]
                got = complex(np.dot(rule.weights, vals))
                want = complex(exact_moment_complex(n, alpha, beta))
                assert abs(got - want) <= 1e-12

    def test_harmonic_mean_value(self):
        # degree >= 1 harmonics average to zero on the sphere
        rule = unit_rule(4, 8)
        w = complex_nodes(rule)
        assert abs(np.dot(rule.weights, w[:, 0] * np.conj(w[:, 1]))) < 1e-14


class TestScalingAndGate:
    def test_scaling_invariance(self):
        rule_r = build_sphere_rule(4, 2.3, 10)
        rule_1 = build_sphere_rule(4, 1.0, 10)
        f = lambda p: np.exp(-np.linalg.norm(p, axis=1) ** 2 / 4.0) * p[:, 0] ** 2
        lhs = integrate(rule_r, f)
        rhs = integrate(rule_1, lambda p: f(2.3 * p))
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_doubling_gate_on_damped_family(self, d):
        # Gaussian-damped monomial family: doubling the order moves the
        # integral by < 1e-10
        def probe(order):
            rule = build_sphere_rule(d, 1.9, order)
            f = lambda p: np.exp(-np.linalg.norm(p, axis=1) ** 2 / 4.0) * (
                1.0 + p[:, 0] + p[:, 0] ** 2 * p[:, -1])
            return integrate(rule, f)

        assert abs(probe(16) - probe(32)) < 1e-10


class TestAnnulus:
    def test_disc_area(self):
        # constant over the unit disc: area pi (2 pi * int_0^1 s ds)
        val = annulus_integrate(lambda p: np.ones(len(p)), 0.0, 1.0, 2,
                                radial_order=12, sphere_order=8)
        assert val.real == pytest.approx(np.pi, rel=1e-13)

    def test_shell_volume(self):
        val = annulus_integrate(lambda p: np.ones(len(p)), 1.0, 2.0, 3,
                                radial_order=12, sphere_order=8)
        assert val.real == pytest.approx(4.0 * np.pi / 3.0 * (8.0 - 1.0), rel=1e-13)

    def test_odd_symmetry(self):
        val = annulus_integrate(lambda p: p[:, 0] * np.exp(-np.linalg.norm(p, axis=1)),
                                0.5, 2.0, 3, radial_order=16, sphere_order=10)
        assert abs(val) < 1e-14

    def test_validates_bounds(self):
        with pytest.raises(ValueError):
            annulus_integrate(lambda p: np.ones(len(p)), 2.0, 1.0, 2, 8)

    def test_gaussian_full_space(self):
        # int_{R^2} e^{-|x|^2} = pi, truncated at radius 8
        val = annulus_integrate(
            lambda p: np.exp(-np.linalg.norm(p, axis=1) ** 2), 0.0, 8.0, 2,
            radial_order=40, sphere_order=4)
        assert val.real == pytest.approx(np.pi, rel=1e-12)


class TestWeightedRule:
    def test_weight_evaluated_at_nodes(self):
        from twistmeans.harmonics import Poly
        rule = build_sphere_rule(4, 1.5, 10)
        P = Poly.monomial(2, (1, 0), (0, 1))
        wrule = WeightedRule(rule, P)
        w = complex_nodes(rule)
        assert np.max(np.abs(wrule.weight_values - w[:, 0] * np.conj(w[:, 1]))) < 1e-14

    def test_weighted_integration_matches_inline_weight(self):
        from twistmeans.harmonics import Poly
        rule = build_sphere_rule(4, 1.2, 12)
        P = Poly.monomial(2, (0, 0), (1, 0))
        wrule = WeightedRule(rule, P)
        f = lambda p: np.exp(-np.linalg.norm(p, axis=1) ** 2 / 4.0) * (p[:, 0] + 1.0)
        got = weighted_integrate(wrule, f)
        want = complex(np.dot(rule.weights,
                              f(rule.nodes) * P.eval_nodes(rule.nodes)))
        assert abs(got - want) < 1e-14

    def test_signed_measure_total_mass(self):
        # a degree >= 1 harmonic weight gives a signed measure of zero mass
        from twistmeans.harmonics import build_bigraded_basis
        rule = build_sphere_rule(4, 1.0, 8)
        for P in build_bigraded_basis(2, 1, 1).elements:
            wrule = WeightedRule(rule, P)
            assert abs(weighted_integrate(wrule, lambda p: np.ones(len(p)))) < 1e-13


class TestSurfaceArea:
    def test_known_values(self):
        assert surface_area(2) == pytest.approx(2 * np.pi)
        assert surface_area(3) == pytest.approx(4 * np.pi)
        assert surface_area(4) == pytest.approx(2 * np.pi ** 2)
        assert surface_area(6) == pytest.approx(np.pi ** 3)
        assert surface_area(3, 2.0) == pytest.approx(16 * np.pi)
