import json
import math

import numpy as np
import pytest

from bohrradius import verify
from bohrradius.exceptions import ConfigurationError
from bohrradius.harmonic import p_bohr_sum, pair_l1_sum
from bohrradius.radii import solve_rpm
from bohrradius.series import PowerSeries, extract_coeffs, mobius_symmetric_expand

SEED = 42


class TestRng:
    def test_reproducible(self):
        a = verify.make_rng(7, 3).random(5)
        b = verify.make_rng(7, 3).random(5)
        np.testing.assert_array_equal(a, b)

    def test_streams_differ(self):
        assert verify.make_rng(7, 3).random() != verify.make_rng(7, 4).random()
        assert verify.make_rng(7, 3).random() != verify.make_rng(8, 3).random()


class TestBlaschke:
    def test_degree_zero(self):
        g = verify.random_blaschke(0, SEED)
        z = np.array([0, 0.3j, -0.9])
        assert np.allclose(np.abs(g(z)), 1)
        assert np.ptp(g(z)) == 0

    def test_known_factor(self):
        g = verify.Blaschke([0.5], math.pi)
        np.testing.assert_allclose(g.coeffs(3), [0.5, -0.75, -0.375, -0.1875], atol=1e-15)
        np.testing.assert_allclose(extract_coeffs(g, 8).coeffs[:3], [0.5, -0.75, -0.375], atol=1e-12)

    @pytest.mark.parametrize("index", range(10))
    def test_unit_bounded(self, index):
        rng = verify.make_rng(SEED, index)
        g = verify.random_blaschke(int(rng.integers(0, 9)), rng)
        z = 0.999 * np.exp(2j * np.pi * np.arange(1000) / 1000)
        assert np.max(np.abs(g(z))) <= 1 + 1e-12
        assert np.all(np.abs(g.zeros) < verify.ZERO_RADIUS)

    @pytest.mark.parametrize("index", range(5))
    def test_exact_coeffs_match_dft(self, index):
        g = verify.random_blaschke(6, SEED, index)
        np.testing.assert_allclose(extract_coeffs(g, 16).coeffs, g.coeffs(16), atol=1e-10)

    def test_series_matches_values(self):
        g = verify.random_blaschke(5, SEED, 1)
        s = g.series(256)
        z = 0.9 * np.exp(1j * np.linspace(0, 6, 40))
        assert np.max(np.abs(s(z) - g(z))) <= s.tail_at(0.9)

    def test_degree_domain(self):
        with pytest.raises(ConfigurationError):
            verify.random_blaschke(9, SEED)
        with pytest.raises(ConfigurationError):
            verify.Blaschke([1.0])


class TestSymmetrize:
    def test_constant(self):
        s = verify.symmetrize(verify.Blaschke(), 2, 1).series(3, r_max=1.0)
        np.testing.assert_allclose(s.coeffs[:3], [0, 1, 0])

    def test_mobius(self):
        s = verify.symmetrize(verify.Blaschke([0.5]), 2, 1).series(5)
        np.testing.assert_allclose(s.coeffs[1:7:2], [-0.5, 0.75, 0.375], atol=1e-15)

    def test_support_via_extraction(self):
        sym = verify.symmetrize(verify.random_blaschke(4, SEED), 3, 2)
        s = extract_coeffs(sym, 30)
        off = np.arange(31) % 3 != 2
        assert np.max(np.abs(s.coeffs[off])) <= 1e-10

    def test_handle_without_coeffs(self):
        sym = verify.symmetrize(lambda z: (z - 0.5) / (1 - 0.5 * z), 2, 1)
        s = sym.series(10)
        np.testing.assert_allclose(s.coeffs[1:7:2], [-0.5, 0.75, 0.375], atol=1e-10)

    def test_evaluation(self):
        g = verify.random_blaschke(3, SEED)
        sym = verify.symmetrize(g, 3, 1)
        z = 0.4 + 0.3j
        assert sym(z) == pytest.approx(z * g(z ** 3))


class TestHarmonicSamples:
    @pytest.mark.parametrize("index", range(20))
    def test_parseval(self, index):
        hc = verify.random_bounded_harmonic(SEED, index)
        assert hc.parseval_budget() <= 1 + 1e-9
        assert hc.b[0] == 0

    def test_extremes(self):
        analytic = verify.random_bounded_harmonic(SEED, 0, t=1.0)
        assert np.all(analytic.b == 0)
        co = verify.random_bounded_harmonic(SEED, 0, t=0.0)
        assert np.all(co.a == 0) and co.b[0] == 0

    def test_zero_constant(self):
        hc = verify.random_bounded_harmonic(SEED, 3, zero_constant=True)
        assert hc.a[0] == 0 and hc.b[0] == 0

    def test_bounded_on_disk(self):
        hc = verify.random_bounded_harmonic(SEED, 5)
        z = 0.95 * np.exp(2j * np.pi * np.arange(256) / 256)
        assert np.max(np.abs(hc(z))) <= 1 + hc.tail_at(0.95)

    def test_pairs(self):
        forced = verify.random_pair(SEED, True, 2)
        assert forced.pair_mode and forced.b[0] == 0
        only_h = verify.random_pair(SEED, False, 2, t=1.0)
        assert np.all(only_h.b == 0)
        assert pair_l1_sum(forced, 1 / 3) <= 1 + 1e-9

    def test_odd(self):
        hc = verify.random_bounded_harmonic(SEED, 4)
        ho = verify.odd_symmetrize(hc)
        assert np.all(ho.a[::2] == 0) and np.all(ho.b[::2] == 0)
        z = 0.5 + 0.2j
        assert ho(z) == pytest.approx(z * hc.h(z * z) + np.conj(z * hc.g(z * z)))
        assert ho.r_max == pytest.approx(math.sqrt(hc.r_max))


class TestReport:
    def test_counterexample_iff_failure(self):
        ok = verify.certify_wiener(20, SEED)
        assert ok.passed and ok.counterexample is None
        bad = verify.certify_analytic_class((2, 1), 20, SEED, r=0.81)
        assert not bad.passed and bad.counterexample is not None
        assert bad.worst_slack > bad.tolerance
        assert "defect" in bad.to_dict()["note"]

    def test_json(self):
        rep = verify.certify_lemma_c(5, SEED)
        data = json.loads(json.dumps(rep.to_dict()))
        assert data["claim_id"] == "lemma_c" and data["passed"]

    def test_sharpness_kind(self):
        rep = verify.sharpness_probe((2, 1), 0.01)
        assert rep.kind == "sharpness" and rep.passed and rep.worst_slack > 0


class TestChecks:
    def test_wiener_mobius_equality(self):
        rep = verify.wiener_check(mobius_symmetric_expand(0.5, 1, 0, 64))
        assert abs(rep.worst_slack) <= 1e-10

    def test_wiener_identity(self):
        assert verify.wiener_check(PowerSeries([0, 1])).worst_slack == 0

    def test_lemma_c_mobius_equality(self):
        rep = verify.lemma_c_check(verify.Blaschke([0.5]), 1.0, 1)
        assert abs(rep.worst_slack) <= 1e-9

    def test_lemma_c_constant(self):
        rep = verify.lemma_c_check(PowerSeries([0.3]), 0.5, 2)
        assert rep.passed and rep.worst_slack < 0

    def test_analytic_classes(self):
        rep = verify.certify_analytic_class((2, 1), 100, SEED)
        assert rep.passed
        assert rep.details["extremal_slack"] >= -1e-8
        assert verify.certify_analytic_class((1, 0), 100, SEED, r=1 / 3).passed
        assert verify.certify_analytic_class((4, 4), 100, SEED, r=2 ** -0.125).passed

    def test_sharpness_monotone_in_delta(self):
        small = verify.sharpness_probe((3, 1), 0.001).worst_slack
        large = verify.sharpness_probe((3, 1), 0.01).worst_slack
        assert 0 < small < large

    def test_sharpness_domain(self):
        with pytest.raises(ConfigurationError):
            verify.sharpness_probe((1, 1), 0.5)

    def test_harmonic(self):
        for q in (1.0, 2.0, math.inf):
            assert verify.certify_harmonic(q, 30, SEED).passed
        assert verify.certify_harmonic(2.0, 30, SEED, odd_only=True).passed

    def test_pairs_experimental(self):
        rep = verify.certify_pairs(50, SEED, experimental=True)
        assert "squared_constant_half" in rep.details["worst_by_subclaim"]

    def test_lemma_grid(self):
        rep = verify.lemma_grid_check(8)
        assert rep.passed and rep.details["maximal_root"] and rep.details["nondecreasing_in_m"]
        with pytest.raises(ConfigurationError):
            verify.lemma_grid_check(17)

    def test_lemma_grid_m_equals_p_row(self):
        for m in range(1, 9):
            r = solve_rpm((m, m)).value
            assert 3 - 2 * math.sqrt(2) * math.sqrt(1 - r ** (2 * m)) == pytest.approx(1, abs=1e-12)

    def test_oracle(self):
        assert verify.dft_fidelity_check().passed
        assert verify.oracle_soundness(30).passed

    def test_explore(self):
        res = verify.explore_odd_radius(10, SEED)
        assert res.min_radius <= res.r0 + 1e-8
        assert res.rho_p < res.r0


class TestDeterminism:
    def test_same_seed(self):
        a = verify.certify_analytic_class((3, 1), 60, 11)
        b = verify.certify_analytic_class((3, 1), 60, 11)
        assert a.worst_slack == b.worst_slack
        assert a.details["worst_by_subclaim"] == b.details["worst_by_subclaim"]

    def test_thread_count_invariant(self):
        a = verify.certify_harmonic(1.5, 40, 3, n_jobs=1)
        b = verify.certify_harmonic(1.5, 40, 3, n_jobs=4)
        assert a.worst_slack == b.worst_slack
        assert a.details == b.details

    def test_counterexample_invariant(self):
        a = verify.certify_analytic_class((2, 1), 40, 5, r=0.82, n_jobs=1)
        b = verify.certify_analytic_class((2, 1), 40, 5, r=0.82, n_jobs=3)
        assert a.counterexample == b.counterexample

    def test_run_suite_unknown(self):
        with pytest.raises(ConfigurationError):
            verify.run_suite("nope")


def test_strip_map_in_harmonic_members():
    rep = verify.certify_harmonic(1.0, 0, SEED)
    assert rep.samples == len(verify.ABU_MUS)
    assert rep.passed


def test_pair_probe():
    rep = verify.pair_counterexample_probe(5.0)
    assert rep.passed
    assert rep.details["max_h_plus_g"] <= 1
    assert p_bohr_sum(verify.extremal.pair_counterexample_coeffs(5.0), 1, rep.details["radius"]) > 1
