"""Laguerre/Bessel special functions: frozen values, recurrences, zeros."""

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, roots_genlaguerre

from twistmeans.special_functions import (BesselRadialSpec, LaguerreFunctionSpec,
                                          LaguerreSpec, RootBracketingError,
                                          b_constant, bessel_first_zero,
                                          bessel_phi_eval, laguerre_deriv,
                                          laguerre_eval, laguerre_scaled,
                                          laguerre_sum, laguerre_zeros, phi_eval)


class TestLaguerreEval:
    def test_degree_zero_is_one(self):
        assert laguerre_eval(LaguerreSpec(0, 2.5), 3.7) == 1.0

    def test_degree_one_type_one(self):
        # L_1^1(x) = 2 - x
        assert laguerre_eval(LaguerreSpec(1, 1.0), 2.0) == pytest.approx(0.0, abs=1e-15)

    def test_value_at_zero_is_binomial(self):
        # L_2^1(0) = C(3, 2) = 3
        assert laguerre_eval(LaguerreSpec(2, 1.0), 0.0) == pytest.approx(3.0)

    @pytest.mark.parametrize("k", range(9))
    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.0])
    def test_matches_binomial_sum(self, k, alpha):
        x = np.linspace(0.0, 20.0, 41)
        spec = LaguerreSpec(k, alpha)
        got = laguerre_eval(spec, x)
        ref = laguerre_sum(spec, x)
        assert np.max(np.abs(got - ref)) <= 1e-10 * max(1.0, np.max(np.abs(ref)))

    @pytest.mark.parametrize("k,alpha", [(5, 0.0), (12, 1.0), (20, 3.0)])
    def test_matches_scipy(self, k, alpha):
        x = np.linspace(0.0, 40.0, 37)
        got = laguerre_eval(LaguerreSpec(k, alpha), x)
        ref = eval_genlaguerre(k, alpha, x)
        assert np.max(np.abs(got - ref)) <= 1e-9 * np.max(np.abs(ref))

    def test_recurrence_in_type(self):
        # L_{k-1}^{a+1} + L_k^a = L_k^{a+1}, relative to the row scale
        x = np.linspace(0.0, 50.0, 101)
        for alpha in (0.0, 1.0, 2.0, 3.0):
            for k in range(1, 21):
                lhs = (laguerre_eval(LaguerreSpec(k - 1, alpha + 1), x)
                       + laguerre_eval(LaguerreSpec(k, alpha), x))
                rhs = laguerre_eval(LaguerreSpec(k, alpha + 1), x)
                assert np.max(np.abs(lhs - rhs)) <= 1e-12 * np.max(np.abs(rhs))

    def test_invalid_spec(self):
        with pytest.raises(ValueError):
            LaguerreSpec(-1, 0.0)
        with pytest.raises(ValueError):
            LaguerreSpec(2, -1.5)


class TestLaguerreDeriv:
    def test_linear_case(self):
        # d/dx (2 - x) = -1 = -L_0^2
        assert laguerre_deriv(LaguerreSpec(1, 1.0), 5.0) == pytest.approx(-1.0)

    def test_constant_case(self):
        assert laguerre_deriv(LaguerreSpec(0, 3.0), 1.0) == 0.0

    def test_against_central_differences(self):
        # oracle: 4th-order finite differences with a step sweep
        spec = LaguerreSpec(3, 2.0)
        x = 1.3
        best = None
        for h in (1e-3, 1e-4, 1e-5):
            fd = (-laguerre_eval(spec, x + 2 * h) + 8 * laguerre_eval(spec, x + h)
                  - 8 * laguerre_eval(spec, x - h) + laguerre_eval(spec, x - 2 * h)) / (12 * h)
            err = abs(fd - laguerre_deriv(spec, x))
            best = err if best is None else min(best, err)
        assert best <= 1e-6
        # and the exact identity: equals -L_2^3(1.3) = -(C(5,2) - C(5,1)*1.3 + 1.3^2/2*C(5,0))
        expect = -(10.0 - 5.0 * 1.3 + 0.5 * 1.3 ** 2)
        assert laguerre_deriv(spec, 1.3) == pytest.approx(expect, rel=1e-14)


class TestLaguerreZeros:
    def test_single_roots(self):
        assert laguerre_zeros(LaguerreSpec(1, 1.0)) == pytest.approx([2.0])
        assert laguerre_zeros(LaguerreSpec(1, 0.0)) == pytest.approx([1.0])

    def test_quadratic_formula_oracle(self):
        # roots of 3 - 3x + x^2/2 are 3 +- sqrt(3)
        got = laguerre_zeros(LaguerreSpec(2, 1.0))
        assert got == pytest.approx([3.0 - np.sqrt(3.0), 3.0 + np.sqrt(3.0)], rel=1e-13)

    @pytest.mark.parametrize("k,alpha", [(4, 0.0), (8, 1.0), (12, 2.0)])
    def test_matches_gauss_laguerre_nodes(self, k, alpha):
        got = laguerre_zeros(LaguerreSpec(k, alpha))
        ref = roots_genlaguerre(k, alpha)[0]
        assert np.max(np.abs(got - ref) / ref) <= 1e-12

    def test_scaled_residual_and_separation(self):
        for alpha in (0.0, 1.0):
            for k in range(1, 13):
                zs = laguerre_zeros(LaguerreSpec(k, alpha))
                assert np.all(np.diff(zs) > 0)
                assert np.max(np.abs(laguerre_scaled(LaguerreSpec(k, alpha), zs))) <= 1e-12

    def test_interlacing(self):
        for alpha in (0.0, 1.0, 2.0):
            prev = laguerre_zeros(LaguerreSpec(1, alpha))
            for k in range(2, 13):
                cur = laguerre_zeros(LaguerreSpec(k, alpha))
                assert np.all(cur[:-1] < prev) and np.all(prev < cur[1:])
                prev = cur

    def test_requires_degree(self):
        with pytest.raises(ValueError):
            laguerre_zeros(LaguerreSpec(0, 1.0))

    def test_bracketing_failure_is_signaled(self, monkeypatch):
        # a lost bracket (simulated by an evaluation with no sign changes)
        # raises rather than silently returning junk
        import twistmeans.special_functions as sf

        monkeypatch.setattr(sf, "laguerre_eval", lambda spec, x: (
            np.ones_like(np.asarray(x, dtype=float)) if np.ndim(x) else 1.0))
        with pytest.raises(RootBracketingError):
            sf.laguerre_zeros(LaguerreSpec(3, 1.0))


class TestPhi:
    def test_degree_zero_gaussian(self):
        rho = np.linspace(0, 4, 9)
        got = phi_eval(LaguerreFunctionSpec(0, 3), rho)
        assert np.allclose(got, np.exp(-rho ** 2 / 4.0), rtol=1e-14)

    def test_zero_of_type_one(self):
        # L_1^1(2) = 0 forces phi_1 on C^2 to vanish at rho = 2
        assert phi_eval(LaguerreFunctionSpec(1, 2), 2.0) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("k,m", [(2, 1), (3, 2), (5, 4)])
    def test_value_at_origin(self, k, m):
        from math import comb
        assert phi_eval(LaguerreFunctionSpec(k, m), 0.0) == pytest.approx(comb(m - 1 + k, k))

    def test_decay_past_last_zero(self):
        # beyond the last zero |phi| climbs to one final hump and then decays;
        # start past the hump of t^k e^{-t/2} (t = 2k) and the zero bound
        spec = LaguerreFunctionSpec(4, 2)
        t_start = max(2.0 * (4.0 + 1.0 + 1.0),
                      1.1 * laguerre_zeros(LaguerreSpec(4, 1.0))[-1]) + 4.0
        rho = np.linspace(np.sqrt(2.0 * t_start), np.sqrt(2.0 * t_start) + 10.0, 200)
        vals = np.abs(phi_eval(spec, rho))
        assert np.all(np.diff(vals) < 0)
        assert vals[-1] < 1e-8


class TestBessel:
    def test_value_one_at_origin(self):
        for lam, n in ((1.0, 2), (2.5, 3), (0.7, 6)):
            assert bessel_phi_eval(BesselRadialSpec(lam, n), 0.0) == pytest.approx(1.0)

    def test_half_integer_closed_form(self):
        # n = 3: profile is sin(lam r)/(lam r)
        r = np.linspace(1e-3, 12.0, 300)
        for lam in (1.0, 2.0):
            got = bessel_phi_eval(BesselRadialSpec(lam, 3), r)
            ref = np.sin(lam * r) / (lam * r)
            assert np.max(np.abs(got - ref)) <= 1e-13

    def test_series_asymptotic_continuity(self):
        # values on both sides of the series cutoff agree with scipy route
        spec = BesselRadialSpec(1.0, 4)
        r = np.linspace(0.4, 0.6, 41)
        vals = bessel_phi_eval(spec, r)
        assert np.max(np.abs(np.diff(vals, 2))) < 1e-4  # no jump at the switch

    def test_first_zero(self):
        assert bessel_first_zero(3) == pytest.approx(np.pi, rel=1e-12)
        assert bessel_first_zero(2) == pytest.approx(2.404825557695773, rel=1e-12)

    def test_invalid(self):
        with pytest.raises(ValueError):
            BesselRadialSpec(0.0, 3)
        with pytest.raises(ValueError):
            BesselRadialSpec(1.0, 1)


class TestBConstant:
    def test_values(self):
        from fractions import Fraction
        assert b_constant(0, 5) == 1
        assert b_constant(1, 2) == Fraction(1, 2)
        assert b_constant(2, 2) == Fraction(1, 3)

    def test_exactness(self):
        from fractions import Fraction
        from math import factorial
        for k in range(6):
            for n in range(1, 5):
                assert b_constant(k, n) == Fraction(
                    factorial(k) * factorial(n - 1), factorial(n + k - 1))
