import json
import math
import subprocess
import sys

import numpy as np
import pytest

from spinboost import cli


def _run(tmp_path, *args):
    out = tmp_path / "out"
    code = cli.main([*args, "--out", str(out)])
    return code, out


def _read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    data = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    return header, data


class TestConfigHandling:
    def test_unknown_scenario_exits_with_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["warp"])
        assert err.value.code == 2

    def test_missing_scenario_is_a_config_error(self):
        assert cli.main([]) == 2

    def test_conflicting_boost_aliases(self, tmp_path):
        code, _ = _run(tmp_path, "angle", "--beta", "0.9", "--gamma-beta", "10")
        assert code == 2

    def test_conflicting_momentum_aliases(self, tmp_path):
        code, _ = _run(tmp_path, "angle", "--v", "0.1", "--gamma-p", "1.2")
        assert code == 2

    def test_subluminal_detector_is_a_config_error(self, tmp_path):
        code, _ = _run(tmp_path, "ratio", "--w", "0.5")
        assert code == 2

    def test_bad_beta_is_a_config_error(self, tmp_path):
        code, _ = _run(tmp_path, "angle", "--beta", "1.5")
        assert code == 2

    def test_negative_outcome_parses(self, tmp_path):
        code, out = _run(tmp_path, "figure1", "--outcome", "-1")
        assert code == 0
        report = json.loads((out / "figure1_report.json").read_text())
        assert report["config"]["outcome"] == -1


class TestAngleScenario:
    def test_reports_reference_kinematics(self, tmp_path):
        code, out = _run(tmp_path, "angle")
        assert code == 0
        report = json.loads((out / "angle_report.json").read_text())
        kin = report["kinematics"]
        assert kin["gamma_beta"] == pytest.approx(10.0, rel=1e-12)
        assert kin["gamma_p"] == pytest.approx(1.2, rel=1e-12)
        assert kin["wigner_half_angle_sine"] == pytest.approx(
            math.sqrt(9.0 / 130.0), abs=1e-12
        )
        outputs = report["outputs"]
        assert outputs["wigner_angle_negative_momentum"] == pytest.approx(
            -outputs["wigner_angle_positive_momentum"], abs=1e-15
        )


class TestFigure1:
    def test_default_curves(self, tmp_path):
        code, out = _run(tmp_path, "figure1")
        assert code == 0
        header, data = _read_csv(out / "figure1.csv")
        assert header == ["y_over_compton", "density_phi", "density_psi"]
        y, phi, psi = data.T
        p = json.loads((out / "figure1_report.json").read_text())["kinematics"]["p"]
        # pure branch has genuine zeros, mixed branch has lifted minima
        assert phi.min() == pytest.approx(0.0, abs=1e-12)
        assert psi.min() / psi.max() == pytest.approx(9.0 / 121.0, abs=1e-6)
        grid_w = y[1] - y[0]
        zero_idx = np.argmin(np.abs(y - math.pi / p))
        assert abs(y[zero_idx] - math.pi / p) <= grid_w
        assert phi[zero_idx] <= 1e-10 * phi.max()

    def test_no_boost_collapses_the_gap(self, tmp_path):
        code, out = _run(tmp_path, "figure1", "--gamma-beta", "1")
        assert code == 0
        _, data = _read_csv(out / "figure1.csv")
        np.testing.assert_allclose(data[:, 1], data[:, 2], atol=1e-12)

    def test_outcome_toggle_yields_identical_bytes(self, tmp_path):
        _, out_minus = _run(tmp_path / "a", "figure1", "--outcome", "-1")
        _, out_plus = _run(tmp_path / "b", "figure1", "--outcome", "+1")
        assert (out_minus / "figure1.csv").read_bytes() == (
            out_plus / "figure1.csv"
        ).read_bytes()

    def test_determinism(self, tmp_path):
        _, first = _run(tmp_path / "a", "figure1")
        _, second = _run(tmp_path / "b", "figure1")
        assert (first / "figure1.csv").read_bytes() == (second / "figure1.csv").read_bytes()
        r1 = json.loads((first / "figure1_report.json").read_text())
        r2 = json.loads((second / "figure1_report.json").read_text())
        r1["config"]["out"] = r2["config"]["out"]
        assert r1 == r2

    def test_config_echo_round_trip(self, tmp_path):
        _, first = _run(tmp_path / "a", "figure1", "--gamma-beta", "7", "--v", "0.3")
        code = cli.main(
            [
                "--config",
                str(first / "figure1_report.json"),
                "--out",
                str(tmp_path / "b"),
            ]
        )
        assert code == 0
        assert (first / "figure1.csv").read_bytes() == (
            tmp_path / "b" / "figure1.csv"
        ).read_bytes()

    def test_config_scenario_conflict(self, tmp_path):
        _, first = _run(tmp_path / "a", "figure1")
        code = cli.main(
            ["paradox", "--config", str(first / "figure1_report.json")]
        )
        assert code == 2


class TestFigure2:
    def test_default_curves(self, tmp_path):
        code, out = _run(tmp_path, "figure2")
        assert code == 0
        header, data = _read_csv(out / "figure2.csv")
        assert header == ["y_over_compton", "density_spin_x", "density_spin_z"]
        y, dx, dz = data.T
        weights = np.gradient(y)
        assert np.sum(weights * dx) == pytest.approx(1.0, abs=1e-6)
        assert np.sum(weights * dz) == pytest.approx(1.0, abs=1e-6)
        report = json.loads((out / "figure2_report.json").read_text())
        assert report["outputs"]["sup_norm_difference"] > 0.0
        assert report["kinematics"]["beta"] == 0.995

    def test_no_boost_makes_the_curves_coincide(self, tmp_path):
        code, out = _run(tmp_path, "figure2", "--beta", "0")
        assert code == 0
        _, data = _read_csv(out / "figure2.csv")
        np.testing.assert_allclose(data[:, 1], data[:, 2], atol=1e-12)

    def test_k_factor_variants_differ(self, tmp_path):
        _, out_sqrt = _run(tmp_path / "a", "figure2")
        _, out_unity = _run(tmp_path / "b", "figure2", "--k-factor", "unity")
        _, sqrt_data = _read_csv(out_sqrt / "figure2.csv")
        _, unity_data = _read_csv(out_unity / "figure2.csv")
        assert np.max(np.abs(sqrt_data[:, 2] - unity_data[:, 2])) > 1e-6


class TestRatioScenario:
    def test_reference_parameters(self, tmp_path):
        code, out = _run(tmp_path, "ratio")
        assert code == 0
        outputs = json.loads((out / "ratio_report.json").read_text())["outputs"]
        assert outputs["r_psi"] > outputs["r_phi"] > 0.0
        assert outputs["ratio_of_ratios"] == pytest.approx(
            outputs["r_psi"] / outputs["r_phi"], rel=1e-12
        )


class TestSignalingScenario:
    def test_linear_mode_signals(self, tmp_path):
        code, out = _run(tmp_path, "signaling")
        assert code == 0
        outputs = json.loads((out / "signaling_report.json").read_text())["outputs"]
        assert outputs["sup_gap"] > 1e-6
        header, data = _read_csv(out / "signaling.csv")
        assert header == ["y_over_compton", "detect_prob_psi", "detect_prob_phi"]
        assert np.max(np.abs(data[:, 1] - data[:, 2])) == pytest.approx(
            outputs["sup_gap"], rel=1e-9
        )

    def test_physical_mode_does_not(self, tmp_path):
        code, out = _run(tmp_path, "signaling", "--mode", "physical")
        assert code == 0
        outputs = json.loads((out / "signaling_report.json").read_text())["outputs"]
        assert outputs["sup_gap"] <= 1e-12


class TestParadoxScenario:
    def test_linear_mode_exhibits_the_gap(self, tmp_path):
        code, out = _run(tmp_path, "paradox")
        assert code == 0
        outputs = json.loads((out / "paradox_report.json").read_text())["outputs"]
        assert outputs["signaling_sup"] > 0.0
        assert outputs["r_psi"] > outputs["r_phi"]
        for key in ("collapse_probability_z+", "collapse_probability_x-"):
            assert outputs[key] == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("prep", ["plus_y", "minus_y", "confined"])
    def test_physical_mode_restores_no_signaling(self, tmp_path, prep):
        code, out = _run(tmp_path, "paradox", "--mode", "physical", "--prep", prep)
        assert code == 0
        outputs = json.loads((out / "paradox_report.json").read_text())["outputs"]
        assert outputs["signaling_sup"] <= 1e-12
        assert outputs["r_psi"] == pytest.approx(outputs["r_phi"], rel=1e-12)

    def test_large_boost_small_velocity_approaches_three_halves(self, tmp_path):
        code, out = _run(
            tmp_path, "paradox", "--gamma-beta", "1000", "--v", "0.05", "--w", "1"
        )
        assert code == 0
        outputs = json.loads((out / "paradox_report.json").read_text())["outputs"]
        assert outputs["ratio_of_ratios"] == pytest.approx(1.499, abs=0.01)


class TestContractGate:
    def test_signaling_physical_mode_violation_exits_3(self, tmp_path, monkeypatch):
        # cannot occur with the real maps (the physical map factorizes
        # exactly), so inject a corrupted discriminator to prove the gate
        from spinboost.detection import SignalingReport

        def corrupted(*args, **kwargs):
            return SignalingReport(r_psi=1.0, r_phi=1.0, ratio_gap=0.0, sup_gap=1.0)

        monkeypatch.setattr(cli, "signaling_discriminator", corrupted)
        code = cli.main(
            ["paradox", "--mode", "physical", "--out", str(tmp_path / "out")]
        )
        assert code == 3


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        result = subprocess.run(
            [
                sys.executable,
                "-m",
                "spinboost",
                "angle",
                "--out",
                str(tmp_path / "out"),
            ],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert "wigner_angle" in result.stdout
        assert (tmp_path / "out" / "angle_report.json").exists()
