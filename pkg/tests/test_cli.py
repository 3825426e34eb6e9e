import csv
import io
import json
import math

import pytest

from bohrradius.cli import RunConfig, UsageError, main
from bohrradius.radii import RadiusResult
from bohrradius.series import PowerSeries
from bohrradius.harmonic import HarmonicCoeffs


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestRadius:
    def test_rpm(self, capsys):
        code, data = run_json(capsys, "radius", "rpm", "--p", "2", "--m", "1")
        assert code == 0
        assert data["value"] == pytest.approx(0.789991, abs=1e-6)
        res = RadiusResult.from_dict(data)
        assert res.method == "root_solve" and res.width <= 1e-12

    def test_r0(self, capsys):
        _, data = run_json(capsys, "radius", "harmonic-r0")
        assert data["value"] == pytest.approx(0.655794, abs=1e-6)

    def test_rho(self, capsys):
        _, data = run_json(capsys, "radius", "rho", "--exponent-p", "2")
        assert data["value"] == pytest.approx(0.786151, abs=1e-6)

    def test_thresholds(self, capsys):
        assert run_json(capsys, "radius", "A", "--exponent-p", "1")[1]["value"] == pytest.approx(0.6)
        up = run_json(capsys, "radius", "A-upper", "--exponent-p", "2")[1]["value"]
        assert up == pytest.approx(0.82256, abs=5e-5)

    def test_rp_a0_inf(self, capsys):
        _, data = run_json(capsys, "radius", "rp-a0", "--a0", "0.5", "--exponent-p", "inf")
        assert data["value"] == pytest.approx(0.5)

    def test_unknown_target(self, capsys):
        code, _, err = run(capsys, "radius", "bogus")
        assert code == 2 and "usage" in err

    def test_missing_parameter(self, capsys):
        assert run(capsys, "radius", "rpm", "--p", "2")[0] == 2

    def test_domain_error(self, capsys):
        assert run(capsys, "radius", "rpm", "--p", "2", "--m", "3")[0] == 2

    def test_bad_flag(self, capsys):
        assert run(capsys, "radius", "rpm", "--nope")[0] == 2


class TestTable:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        by_name = {r["name"]: r for r in rows}
        assert by_name["r_1,0"]["solved"] == "0.333333333"
        assert by_name["r_1,0"]["closed_form"] == "0.333333333"
        assert float(by_name["r_2,1"]["solved"]) == pytest.approx(0.789991, abs=1e-6)
        assert float(by_name["r_2,1"]["closed_form"]) == pytest.approx(0.789991, abs=1e-6)
        assert by_name["r_3,2"]["closed_form"] == ""
        consts = [float(r["solved"]) for r in rows if r["block"] == "constants"]
        assert any(abs(v - 0.67404) < 5e-5 for v in consts)
        assert any(abs(v - 0.82256) < 5e-5 for v in consts)
        assert len([r for r in rows if r["block"] == "rpm"]) == sum(p + 1 for p in range(1, 7))

    def test_nine_digits(self, capsys):
        _, out, _ = run(capsys, "table", "--format", "csv")
        row = next(r for r in csv.DictReader(io.StringIO(out)) if r["name"] == "harmonic_r0")
        assert row["solved"] == "0.655794203"

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        assert main(["table", "--format", "json", "--output", str(path)]) == 0
        assert capsys.readouterr().out == ""
        assert len(json.loads(path.read_text())["rows"]) == 35


class TestExtremal:
    def test_analytic(self, capsys):
        _, data = run_json(capsys, "extremal", "analytic", "--p", "2", "--m", "1")
        assert data["a"] == pytest.approx(0.717045, abs=1e-6)
        assert data["crossing"] == pytest.approx(0.789991, abs=1e-6)
        s = PowerSeries.from_dict(data["series"])
        assert s.trunc_order == 256
        assert all(set(pt) == {"r", "M"} for pt in data["curve"])

    def test_abu(self, capsys):
        _, data = run_json(capsys, "extremal", "abu", "--mu", "1.5708")
        assert data["a_1"] == pytest.approx(0.63662, abs=1e-5)
        hc = HarmonicCoeffs.from_dict(data["coeffs"])
        assert abs(hc.a[1]) == pytest.approx(0.63662, abs=1e-5)

    def test_pair(self, capsys):
        _, data = run_json(capsys, "extremal", "pair", "--a", "10")
        assert data["r0"] == pytest.approx(0.049876, abs=1e-6)
        assert data["crossing"] == pytest.approx(data["r0"], abs=1e-9)

    @pytest.mark.parametrize("argv", [("mobius", "--a0", "0.5"), ("phi", "--p", "2"), ("f0",)])
    def test_others(self, capsys, argv):
        code, out, _ = run(capsys, "extremal", *argv, "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "r,M"


class TestHarmonic:
    def test_sum(self, capsys):
        _, data = run_json(capsys, "harmonic", "sum", "--r", str(math.tanh(math.pi / 4)))
        assert data["sum"] == pytest.approx(1, abs=1e-8)

    def test_radius(self, capsys):
        _, data = run_json(capsys, "harmonic", "radius")
        assert data["value"] == pytest.approx(math.tanh(math.pi / 4), abs=1e-8)

    def test_bounds(self, capsys):
        _, data = run_json(capsys, "harmonic", "th3", "--a0", "0", "--r", str(1 / 3))
        assert data["bound"] == pytest.approx(0.5)
        _, data = run_json(capsys, "harmonic", "th4", "--exponent-p", "2", "--r", "0.786151377757")
        assert data["bound"] == pytest.approx(1, abs=1e-9)

    def test_kernel(self, capsys):
        code, out, _ = run(capsys, "harmonic", "kernel", "--order", "3", "--format", "csv")
        assert code == 0 and out.splitlines()[0] == "k,re,im"

    def test_explore(self, capsys):
        code, data = run_json(capsys, "harmonic", "explore-odd", "--samples", "5")
        assert code == 0 and data["min_radius"] <= data["r0"] + 1e-8


class TestVerify:
    def test_lemmas(self, capsys):
        code, out, _ = run(capsys, "verify", "lemmas", "--p-max", "8")
        assert code == 0 and "1 passed, 0 failed" in out

    def test_negative_control(self, capsys):
        code, data = run_json(capsys, "verify", "analytic", "--p", "2", "--m", "1",
                              "--r-override", "0.81", "--samples", "50")
        assert code == 1
        assert data["failed"] == 1
        assert data["counterexamples"][0]["sample"] in ("extremal", "best_mobius")
        assert data["reports"][0]["details"]["extremal_slack"] > 0

    def test_single_class(self, capsys):
        code, data = run_json(capsys, "verify", "analytic", "--p", "3", "--m", "2", "--samples", "50")
        assert code == 0 and data["passed"] == 1

    def test_jobs_invariant(self, capsys):
        _, one = run_json(capsys, "verify", "harmonic", "--exponent-p", "2", "--samples", "30")
        _, four = run_json(capsys, "verify", "harmonic", "--exponent-p", "2", "--samples", "30",
                           "--jobs", "4")
        assert one["reports"][0]["worst_slack"] == four["reports"][0]["worst_slack"]

    @pytest.mark.parametrize("target", ["odd", "pairs", "wiener", "lemma-c", "sharpness", "oracle"])
    def test_targets(self, capsys, target):
        extra = ("--p", "2", "--m", "1") if target == "sharpness" else ()
        code, out, _ = run(capsys, "verify", target, "--samples", "20", *extra)
        assert code == 0, out

    def test_p_without_m(self, capsys):
        assert run(capsys, "verify", "analytic", "--p", "2")[0] == 2

    def test_bad_tol(self, capsys):
        assert run(capsys, "verify", "lemmas", "--tol", "0")[0] == 2

    def test_bad_p_max(self, capsys):
        assert run(capsys, "verify", "lemmas", "--p-max", "20")[0] == 2


def test_run_config_validates():
    with pytest.raises(UsageError):
        RunConfig(command="radius", format="xml")
    with pytest.raises(UsageError):
        RunConfig(command="plot")
