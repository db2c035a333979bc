"""Support-theorem ansatz checks, coefficient recovery, gallery, probes."""

import numpy as np
import pytest

from twistmeans.experiments import (InjectivityInstance, SupportAnsatz,
                                    counterexample_gallery, euclid_support_check,
                                    euclid_support_samples,
                                    euclid_weighted_witness, injectivity_recover,
                                    right_mean_closed_form, simulate_means,
                                    smooth_bump, support_ansatz_check,
                                    support_samples, two_sided_means_probe,
                                    x1_plus_ix2_power)
from twistmeans.means import MeanQuery, euclidean_mean, twisted_mean


class TestSupportAnsatzTwisted:
    def test_single_growth_term_vanishes(self):
        ansatz = SupportAnsatz("twisted", 2, 0.5, p=1, q=1, c=(1.0,), d=(0.0,))
        samples = support_samples(2, 0.5, 12, seed=100)
        assert support_ansatz_check(ansatz, samples) < 1e-7

    def test_decay_branch_vanishes(self):
        ansatz = SupportAnsatz("twisted", 2, 0.5, p=0, q=1, d=(1.0,))
        samples = support_samples(2, 0.5, 12, seed=101)
        assert support_ansatz_check(ansatz, samples) < 1e-7

    def test_zero_ansatz_is_exactly_zero(self):
        ansatz = SupportAnsatz("twisted", 2, 0.5)
        samples = support_samples(2, 0.5, 4, seed=102)
        assert support_ansatz_check(ansatz, samples) == 0.0

    def test_perturbed_exponent_fails(self):
        ansatz = SupportAnsatz("twisted", 2, 0.5, p=1, q=1, c=(1.0,), d=(0.0,))
        samples = support_samples(2, 0.5, 8, seed=103)
        pert = ansatz.perturbed_profile(0.5)
        assert support_ansatz_check(ansatz, samples, profile=pert) > 1e-3

    def test_c1_closed_form_on_c1(self):
        # n = 1 decay branch is e^{-|z|^2/4}/z: left means vanish by residue
        ansatz = SupportAnsatz("twisted", 1, 0.3, p=0, q=1, d=(1.0,))
        f = ansatz.function()
        pts = np.array([[0.5 + 0.1j]])
        expect = np.exp(-np.abs(pts[0, 0]) ** 2 / 4.0) / pts[0, 0]
        assert f(pts)[0] == pytest.approx(expect)
        samples = support_samples(1, 0.3, 10, seed=104, rmax=4.0)
        assert support_ansatz_check(ansatz, samples, order=320) < 1e-9

    def test_sample_validation(self):
        ansatz = SupportAnsatz("twisted", 2, 0.5, p=1, q=0, c=(1.0,))
        bad = [(np.array([1.0 + 0j, 0.0j]), 1.2)]
        with pytest.raises(ValueError):
            support_ansatz_check(ansatz, bad)


class TestSupportAnsatzEuclid:
    def test_exterior_harmonic_vanishes(self):
        ansatz = SupportAnsatz("euclidean", 3, 0.5, k=1, alphas=(1.0,))
        samples = euclid_support_samples(3, 0.5, 12, seed=105)
        assert euclid_support_check(ansatz, samples, order=48) < 1e-7

    def test_two_term_tail(self):
        ansatz = SupportAnsatz("euclidean", 3, 0.5, k=2, alphas=(0.7, -0.4))
        samples = euclid_support_samples(3, 0.5, 12, seed=106)
        assert euclid_support_check(ansatz, samples, order=48) < 1e-7

    def test_degree_zero_clause(self):
        ansatz = SupportAnsatz("euclidean", 3, 0.5, k=0)
        samples = euclid_support_samples(3, 0.5, 4, seed=107)
        assert euclid_support_check(ansatz, samples) == 0.0

    def test_newtonian_tail_has_nonzero_mean(self):
        # 1/|x| averages to 1/r over any enclosing sphere: the k = 0 clause
        # rightly excludes it
        f = lambda pts: 1.0 / np.linalg.norm(pts, axis=-1)
        for x, r in euclid_support_samples(3, 0.5, 5, seed=108):
            val = euclidean_mean(f, x, r, order=48)
            assert abs(val - 1.0 / r) < 1e-8
            assert abs(val) > 1e-3

    def test_weighted_witness_nonzero(self):
        ansatz = SupportAnsatz("euclidean", 3, 0.5, k=1, alphas=(1.0,))
        assert euclid_weighted_witness(ansatz, 1.8, order=48) > 1e-3

    def test_perturbed_exponent_fails(self):
        ansatz = SupportAnsatz("euclidean", 3, 0.5, k=1, alphas=(1.0,))
        samples = euclid_support_samples(3, 0.5, 8, seed=109)
        pert = ansatz.perturbed_profile(0.5)
        assert euclid_support_check(ansatz, samples, order=48, profile=pert) > 1e-3

    def test_x1_plus_ix2_power(self):
        poly = x1_plus_ix2_power(3, 2)
        x = np.array([[1.0, 2.0, -1.0]])
        assert poly.eval(x)[0] == pytest.approx((1.0 + 2.0j) ** 2)


class TestInjectivity:
    def test_forward_and_recover(self):
        inst = InjectivityInstance(2, 1.0, 4)
        assert inst.unrecoverable() == []
        rng = np.random.default_rng(11)
        gam = rng.normal(size=5) + 1j * rng.normal(size=5)
        means = simulate_means(inst, gam)
        rec = injectivity_recover(inst, means)
        assert rec.flagged == ()
        assert np.max(np.abs(rec.gammas - gam)) < 1e-6

    def test_zero_input(self):
        inst = InjectivityInstance(2, 1.0, 4)
        rec = injectivity_recover(inst, np.zeros(inst.n_radial, dtype=complex))
        assert np.max(np.abs(rec.gammas)) < 1e-12

    def test_zero_radius_sphere_flags_exactly_one_index(self):
        # R = 2 sits on the only zero of the degree-1 relation factor
        inst = InjectivityInstance(2, 2.0, 4)
        assert inst.unrecoverable() == [1]
        rng = np.random.default_rng(12)
        gam = rng.normal(size=5) + 1j * rng.normal(size=5)
        rec = injectivity_recover(inst, simulate_means(inst, gam))
        assert rec.flagged == (1,)
        assert np.isnan(rec.gammas[1].real)
        good = [0, 2, 3, 4]
        assert np.max(np.abs(rec.gammas[good] - gam[good])) < 1e-6

    def test_grid_alignment_checked(self):
        inst = InjectivityInstance(2, 1.0, 3)
        with pytest.raises(ValueError):
            injectivity_recover(inst, np.zeros(3, dtype=complex))

    def test_quadrature_refinement_tightens_recovery(self):
        rng = np.random.default_rng(13)
        gam = rng.normal(size=4) + 1j * rng.normal(size=4)
        errs = []
        for order in (18, 36):
            inst = InjectivityInstance(2, 1.0, 3)
            means = simulate_means(inst, gam, order=order)
            rec = injectivity_recover(inst, means)
            errs.append(np.max(np.abs(rec.gammas - gam)))
        assert errs[1] <= errs[0] + 1e-12


class TestGalleryAndProbe:
    def test_gallery_rows(self):
        rows = counterexample_gallery()
        assert len(rows) == 8
        names = [r.experiment for r in rows]
        assert sum(1 for nm in names if nm.endswith("witness")) == 4
        assert all(r.passed for r in rows), [
            (r.experiment, r.residual) for r in rows if not r.passed]

    def test_two_sided_probe(self):
        rows = two_sided_means_probe()
        assert all(r.passed for r in rows), [
            (r.experiment, r.residual) for r in rows if not r.passed]

    def test_right_mean_closed_form_against_quadrature(self):
        f = lambda pts: np.exp(-np.abs(pts[:, 0]) ** 2 / 4.0) / pts[:, 0]
        for z, r in ((0.4 + 0.3j, 2.4), (-0.7j, 3.0)):
            got = twisted_mean(f, MeanQuery(np.array([z]), r, side="right"),
                               order=512)
            assert abs(got - right_mean_closed_form(z, r)) < 1e-12

    def test_bump_support(self):
        bump = smooth_bump(1.0)
        pts = np.array([[0.5 + 0.1j], [1.5 + 0.0j]])
        vals = bump(pts)
        assert vals[0] != 0 and vals[1] == 0

    def test_ansatz_validation(self):
        with pytest.raises(ValueError):
            SupportAnsatz("twisted", 2, 0.5, p=2, q=0, c=(1.0,))
        with pytest.raises(ValueError):
            SupportAnsatz("euclidean", 3, 0.5, k=2, alphas=(1.0,))
        with pytest.raises(ValueError):
            SupportAnsatz("spherical", 3, 0.5)
