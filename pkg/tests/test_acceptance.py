"""Acceptance criteria, one test and one printed PASS/FAIL line each."""
import math
import time

import numpy as np

from bohrradius import extremal, verify
from bohrradius.harmonic import p_bohr_sum
from bohrradius.radii import (closed_form_rpm, harmonic_r0, odd_harmonic_rho, solve_rpm,
                              threshold_A, threshold_A_upper)
from bohrradius.series import extract_coeffs, majorant_sum

SAMPLES = 500
ODD_SAMPLES = 200
SEED = 42
TOL = 1e-9


def _close(value, want, tol):
    return abs(value - want) <= tol


def test_radius_reproduction(criterion):
    checks = {
        "r_2,1": _close(solve_rpm((2, 1)).value, 0.789991, 1e-5),
        "r_1,0": _close(solve_rpm((1, 0)).value, 1 / 3, 1e-10),
        "r_1,1": _close(solve_rpm((1, 1)).value, 2 ** -0.5, 1e-9),
        "r_3,1": _close(solve_rpm((3, 1)).value, math.sqrt(7 + math.sqrt(17)) / 4, 1e-9),
    }
    families = [(p, 0) for p in range(1, 9)] + [(k * m, m) for m in range(1, 5) for k in (1, 2, 3)]
    gap = max(abs(closed_form_rpm(c).value - solve_rpm(c).value) for c in families)
    checks["closed_form"] = gap <= 1e-9
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    criterion(1, "radius reproduction", ok, f"closed-form gap {gap:.1e}; failed {failed}")
    assert ok


def test_constants_reproduction(criterion):
    checks = {
        "r0": _close(harmonic_r0().value, 0.655794, 1e-6),
        "rho_1": _close(odd_harmonic_rho(1).value, 0.643594, 1e-6),
        "rho_2": _close(odd_harmonic_rho(2).value, 0.786151, 1e-6),
        "A(1)": threshold_A(1) == 0.6,
        "A(2)": _close(threshold_A(2), 7 / 9, 1e-15),
        "A(1) upper": _close(threshold_A_upper(1), 0.67404, 5e-5),
        "A(2) upper": _close(threshold_A_upper(2), 0.82256, 5e-5),
    }
    ok = all(checks.values())
    criterion(2, "constants reproduction", ok, f"failed {[k for k, v in checks.items() if not v]}")
    assert ok


def test_sharpness(criterion):
    worst_at, least_excess = 0.0, math.inf
    for p in range(1, 7):
        for m in range(p + 1):
            c = (p, m)
            r = solve_rpm(c).value
            worst_at = max(worst_at, abs(majorant_sum(extremal.analytic_extremal(c), r) - 1))
            above = min(r + 0.01, 0.999)
            # the m = 0 extremal is a unimodular constant; the Mobius family supplies the witness
            witness = extremal.best_mobius_member(c, above) if m == 0 else extremal.analytic_extremal(c)
            least_excess = min(least_excess, majorant_sum(witness, above) - 1)
    phi_dev = max(abs(majorant_sum(extremal.phi_alpha(p), 2 ** (-1 / (2 * p))) - 1)
                  for p in range(1, 5))
    mob = extremal.mobius_a0_series(0.5, 256, r_max=0.999)
    mob_dev = abs(majorant_sum(mob, 0.5) - 1)
    ok = worst_at <= 1e-6 and least_excess > 0 and phi_dev <= 1e-6 and mob_dev <= 1e-8
    criterion(3, "sharpness", ok, f"at radius {worst_at:.1e}, min excess {least_excess:.2e}, "
                                  f"phi {phi_dev:.1e}, mobius {mob_dev:.1e}")
    assert ok


def test_lemma_suite(criterion):
    grid = verify.lemma_grid_check(8)
    lemma_c = verify.certify_lemma_c(SAMPLES, SEED)
    eq = abs(lemma_c.details["mobius_equality_slack"])
    ok = (grid.details["power_bound"] <= 1e-8 and grid.details["radius_identity"] <= 1e-8
          and lemma_c.worst_slack <= TOL and len(lemma_c.details["worst_by_subclaim"]) == 20
          and eq <= 1e-9)
    criterion(4, "lemma suite", ok, f"power {grid.details['power_bound']:.1e}, "
                                    f"identity {grid.details['radius_identity']:.1e}, "
                                    f"weighted l2 {lemma_c.worst_slack:.1e}, equality {eq:.1e}")
    assert ok


def test_class_certification(criterion):
    worst, controls = -math.inf, True
    for p in range(1, 5):
        for m in range(p + 1):
            rep = verify.certify_analytic_class((p, m), SAMPLES, SEED)
            worst = max(worst, rep.worst_slack)
            r = min(solve_rpm((p, m)).value + 0.02, 0.999)
            neg = verify.certify_analytic_class((p, m), SAMPLES, SEED, r=r)
            controls &= neg.counterexample is not None
    ok = worst <= TOL and controls
    criterion(5, "class certification", ok, f"worst slack {worst:.1e}, negative controls {controls}")
    assert ok


def test_harmonic_suite(criterion):
    reports = [verify.certify_harmonic(q, SAMPLES, SEED) for q in (1.0, 1.5, 2.0, 3.0, math.inf)]
    seen = set()
    for rep in reports:
        seen |= set(rep.details["worst_by_subclaim"])
    pairs = verify.certify_pairs(SAMPLES, SEED)
    probes = [verify.pair_counterexample_probe(a) for a in (1.0, 5.0, 10.0)]
    zero_radius = all("zero_constant_radius" in r.details["worst_by_subclaim"] for r in reports[2:])
    ok = (all(r.passed for r in reports) and pairs.passed and all(p.passed for p in probes)
          and zero_radius and {"coefficient_bound", "a0_radius"} <= seen)
    worst = max(r.worst_slack for r in reports + [pairs])
    criterion(6, "harmonic suite", ok, f"worst slack {worst:.1e}, "
                                       f"pair excess {min(p.worst_slack for p in probes):.1e}")
    assert ok


def test_odd_suite(criterion):
    reports = [verify.certify_harmonic(q, ODD_SAMPLES, SEED, odd_only=True)
               for q in (1.0, 1.5, 2.0, 3.0)]
    strip = extremal.abu_example(math.pi / 2)
    dev = abs(p_bohr_sum(strip, 1, harmonic_r0().value) - 1)
    ok = all(r.passed for r in reports) and dev <= 1e-8
    criterion(7, "odd-harmonic suite", ok,
              f"worst slack {max(r.worst_slack for r in reports):.1e}, strip map {dev:.1e}")
    assert ok


def test_oracle_fidelity(criterion):
    s = extract_coeffs(lambda z: (z + 0.5) / (1 + 0.5 * z), 16)
    k = np.arange(1, 17)
    want = np.concatenate([[0.5], 0.75 * (-0.5) ** (k - 1)])
    err = float(np.max(np.abs(s.coeffs - want)))
    start = time.perf_counter()
    runs = [verify.certify_analytic_class((2, 1), 200, 7, n_jobs=j).to_dict(with_timing=False)
            for j in (1, 1, 4)]
    runs += [verify.certify_harmonic(1.5, 100, 7, n_jobs=j).to_dict(with_timing=False)
             for j in (1, 4)]
    same = runs[0] == runs[1] == runs[2] and runs[3] == runs[4]
    ok = err <= 1e-10 and same
    criterion(8, "oracle fidelity", ok, f"DFT error {err:.1e}, bit-identical {same}, "
                                        f"{time.perf_counter() - start:.1f}s")
    assert ok
