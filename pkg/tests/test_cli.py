import csv
import io
import json
import math
from pathlib import Path

import pytest

import oracles
from thzprop.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
MATERIALS = str(DATA / "sample_materials.json")


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def rows_of(out):
    return list(csv.DictReader(io.StringIO(out)))


class TestPropagate:
    def test_air_wavelength(self, capsys):
        code, out, _ = run(["propagate", "--material", "air", "--freq", "293.089e9"], capsys)
        assert code == 0
        row = rows_of(out)[0]
        assert float(row["alpha_np_per_m"]) == 0.0
        expected = oracles.vacuum_wavelength(293.089e9) / math.sqrt(1.0006)
        assert float(row["wavelength_m"]) == pytest.approx(expected, rel=1e-12)
        assert float(row["wavelength_m"]) == pytest.approx(1.0226e-3, rel=1e-4)

    def test_vacuum_wavelength(self, capsys):
        code, out, _ = run(["propagate", "--material", "vacuum", "--freq", "293.089e9"], capsys)
        assert code == 0
        row = rows_of(out)[0]
        assert float(row["wavelength_m"]) == pytest.approx(
            oracles.vacuum_wavelength(293.089e9), rel=1e-12
        )

    def test_unknown_material_exits_2(self, capsys):
        code, out, err = run(["propagate", "--material", "kryptonite", "--freq", "1e9"], capsys)
        assert code == 2
        assert out == ""
        assert "unknown material" in err


class TestFresnel:
    def test_identical_materials_zero_reflection(self, capsys):
        code, out, _ = run(
            ["fresnel", "--material1", "air", "--material2", "air",
             "--freq", "300e9", "--sweep", "0", "80", "9"],
            capsys,
        )
        assert code == 0
        for row in rows_of(out):
            assert abs(float(row["gamma_perp_re"])) < 1e-14
            assert abs(float(row["gamma_par_re"])) < 1e-14

    def test_conductor_limit(self, capsys):
        code, out, _ = run(
            ["fresnel", "--material1", "air", "--material2", "pec1e9",
             "--freq", "300e9", "--theta-i", "0"],
            capsys,
        )
        row = rows_of(out)[0]
        assert float(row["gamma_perp_re"]) == pytest.approx(-1.0, abs=1e-3)

    def test_brewster_crossing_in_sweep(self, capsys):
        code, out, _ = run(
            ["fresnel", "--material1", "vacuum", "--material2", "eps4",
             "--freq", "300e9", "--sweep", "0", "89", "90",
             "--materials", MATERIALS],
            capsys,
        )
        assert code == 0
        rows = rows_of(out)
        signs = [(float(r["theta_i_deg"]), float(r["gamma_par_re"])) for r in rows]
        crossings = [
            (a[0], b[0]) for a, b in zip(signs, signs[1:]) if a[1] < 0 <= b[1]
        ]
        assert len(crossings) == 1
        lo, hi = crossings[0]
        assert 63.0 <= lo < hi <= 64.0
        assert lo < math.degrees(oracles.brewster_angle(1.0, 4.0)) < hi

    def test_grazing_exits_2(self, capsys):
        code, _, err = run(
            ["fresnel", "--material1", "air", "--material2", "air",
             "--freq", "1e9", "--theta-i", "90"],
            capsys,
        )
        assert code == 2
        assert "error" in err


class TestRefract:
    def test_lossless_matches_real_snell(self, capsys):
        code, out, _ = run(
            ["refract", "--material1", "vacuum", "--material2", "eps4",
             "--freq", "300e9", "--theta-i", "60", "--materials", MATERIALS],
            capsys,
        )
        row = rows_of(out)[0]
        expected = math.degrees(math.asin(oracles.real_snell_sin(1.0, 4.0, math.radians(60))))
        assert float(row["psi_t_deg"]) == pytest.approx(expected, rel=1e-12)
        assert float(row["n_t_y"]) == 0.0
        n = (float(row["n_t_x"]), float(row["n_t_y"]), float(row["n_t_z"]))
        assert math.hypot(*n) == pytest.approx(1.0, rel=1e-12)


class TestRayleigh:
    def test_default_reproduces_reference_curves(self, capsys):
        code, out, _ = run(["rayleigh"], capsys)
        assert code == 0
        rows = rows_of(out)
        assert len(rows) == 181
        lam = oracles.vacuum_wavelength(293.089e9)
        for row in rows:
            theta = math.radians(float(row["theta_i_deg"]))
            for sigma_h, col in ((0.09e-3, "g_sigmah_9e-05m"), (0.225e-3, "g_sigmah_0.000225m")):
                assert float(row[col]) == pytest.approx(
                    oracles.rayleigh_g_direct(sigma_h, lam, theta, theta), rel=1e-9
                )
        assert float(rows[0]["g_sigmah_9e-05m"]) == pytest.approx(1.22, abs=0.01)
        assert float(rows[0]["g_sigmah_0.000225m"]) == pytest.approx(7.64, abs=0.01)

    def test_angles_stay_below_90(self, capsys):
        _, out, _ = run(["rayleigh"], capsys)
        rows = rows_of(out)
        assert float(rows[-1]["theta_i_deg"]) < 90.0

    def test_curves_strictly_decreasing(self, capsys):
        _, out, _ = run(["rayleigh"], capsys)
        for col in ("g_sigmah_9e-05m", "g_sigmah_0.000225m"):
            values = [float(r[col]) for r in rows_of(out)]
            assert all(a > b for a, b in zip(values, values[1:]))

    def test_custom_sigma_list(self, capsys):
        code, out, _ = run(["rayleigh", "--sigma-h", "1e-4", "--sweep", "0", "45", "10"], capsys)
        assert code == 0
        rows = rows_of(out)
        assert len(rows) == 10
        assert "g_sigmah_0.0001m" in rows[0]


class TestScatter:
    ARGS = [
        "scatter", "--material1", "air", "--freq", "293.089e9", "--theta-i", "40",
        "--sigma-h", "1e-4", "--corr-dist", "1e-3", "--dim-x", "0.01", "--dim-y", "0.01",
        "--r0", "2", "--e-i", "1",
    ]

    def test_specular_cell(self, capsys):
        code, out, _ = run(self.ARGS + ["--theta-r-sweep", "0", "88", "23"], capsys)
        assert code == 0
        rows = rows_of(out)
        assert len(rows) == 23
        spec_row = [r for r in rows if float(r["theta_r_deg"]) == 40.0][0]
        assert float(spec_row["rho0"]) == 1.0
        assert float(spec_row["f_factor"]) == 1.0

    def test_smooth_surface_grid(self, capsys):
        args = [a if a != "1e-4" else "0" for a in self.ARGS]
        code, out, _ = run(args + ["--theta-r-sweep", "0", "80", "9"], capsys)
        assert code == 0
        for row in rows_of(out):
            assert float(row["mean_rho_sq"]) == pytest.approx(float(row["rho0"]) ** 2, rel=1e-15)
            assert row["terms_used"] == "0"

    def test_cell_against_arbitrary_precision_oracle(self, capsys):
        code, out, _ = run(self.ARGS + ["--theta-r", "25", "--theta-s", "140"], capsys)
        row = rows_of(out)[0]
        ti, tr, ts = math.radians(40), math.radians(25), math.radians(140)
        lam = oracles.vacuum_wavelength(293.089e9) / math.sqrt(1.0006)
        v_x, v_y = oracles.v_components_direct(lam, ti, tr, ts)
        ref = oracles.mp_mean_rho_sq(
            oracles.rayleigh_g_direct(1e-4, lam, ti, tr),
            float(row["rho0"]),
            oracles.kirchhoff_factor_direct(ti, tr, ts),
            v_x, v_y, 1e-3, 1e-4,
        )
        assert float(row["mean_rho_sq"]) == pytest.approx(ref, rel=1e-9)

    def test_power_column_scales_with_rho_sq(self, capsys):
        _, out, _ = run(self.ARGS + ["--theta-r-sweep", "30", "50", "3"], capsys)
        for row in rows_of(out):
            power = float(row["power_w_per_m2"])
            rho_sq = float(row["mean_rho_sq"])
            assert power > 0
            assert power / rho_sq == pytest.approx(
                float(rows_of(out)[0]["power_w_per_m2"]) / float(rows_of(out)[0]["mean_rho_sq"]),
                rel=1e-12,
            )

    def test_grazing_cell_emits_nan_sentinel(self, capsys):
        args = [a if a != "40" else "89.999" for a in self.ARGS]
        code, out, err = run(args + ["--theta-r", "90"], capsys)
        assert code == 0
        row = rows_of(out)[0]
        assert row["f_factor"] == "nan"
        assert row["mean_rho_sq"] == "nan"
        assert row["power_w_per_m2"] == "nan"
        assert row["terms_used"] == "0"
        assert math.isfinite(float(row["g"]))
        assert "warning" in err and "grazing" in err


class TestMaterialsCommand:
    def test_list(self, capsys):
        code, out, _ = run(["materials", "list", "--materials", MATERIALS], capsys)
        assert code == 0
        rows = rows_of(out)
        names = [r["name"] for r in rows]
        assert names == sorted(names)
        assert {"air", "vacuum", "pec1e9", "eps4", "lossy4", "plasterlike"} <= set(names)

    def test_validate_ok(self, capsys):
        code, out, _ = run(["materials", "validate", "--materials", MATERIALS], capsys)
        assert code == 0
        assert rows_of(out)[0]["status"] == "ok"

    def test_validate_bad_file_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('[{"name": "x", "samples": []}]', encoding="utf-8")
        code, _, err = run(["materials", "validate", "--materials", str(bad)], capsys)
        assert code == 2
        assert "error" in err


class TestOutputContracts:
    def test_json_mirrors_csv_values(self, capsys):
        _, out_csv, _ = run(["propagate", "--material", "air", "--freq", "1e11"], capsys)
        _, out_json, _ = run(
            ["propagate", "--material", "air", "--freq", "1e11", "--format", "json"], capsys
        )
        csv_row = rows_of(out_csv)[0]
        json_row = json.loads(out_json)[0]
        assert set(csv_row) == set(json_row)
        for key, value in json_row.items():
            if isinstance(value, float):
                assert float(csv_row[key]) == value

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "out.csv"
        code, out, _ = run(
            ["propagate", "--material", "air", "--freq", "1e11", "--out", str(target)], capsys
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("material,")

    def test_lf_line_endings(self, tmp_path, capsys):
        target = tmp_path / "out.csv"
        run(["rayleigh", "--sweep", "0", "10", "3", "--out", str(target)], capsys)
        raw = target.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")

    def test_determinism_repeated_invocations(self, capsys):
        argv = ["fresnel", "--material1", "air", "--material2", "pec1e9",
                "--freq", "3e11", "--sweep", "0", "89", "30"]
        _, first, _ = run(argv, capsys)
        _, second, _ = run(argv, capsys)
        assert first == second


GOLDEN_INVOCATIONS = {
    "propagate.csv": ["propagate", "--material", "air", "--freq", "293.089e9"],
    "fresnel.csv": ["fresnel", "--material1", "vacuum", "--material2", "eps4",
                    "--freq", "300e9", "--sweep", "0", "89", "90",
                    "--materials", MATERIALS],
    "refract.csv": ["refract", "--material1", "air", "--material2", "lossy4",
                    "--freq", "300e9", "--theta-i", "45", "--materials", MATERIALS],
    "rayleigh.csv": ["rayleigh"],
    "scatter.csv": ["scatter", "--material1", "air", "--freq", "293.089e9",
                    "--theta-i", "40", "--sigma-h", "1e-4", "--corr-dist", "1e-3",
                    "--dim-x", "0.01", "--dim-y", "0.01", "--r0", "2", "--e-i", "1",
                    "--theta-r-sweep", "0", "88", "23", "--theta-s-sweep", "0", "180", "5"],
    "materials.csv": ["materials", "list", "--materials", MATERIALS],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_INVOCATIONS))
def test_golden_output(name, tmp_path, capsys):
    target = tmp_path / name
    code = main(GOLDEN_INVOCATIONS[name] + ["--out", str(target)])
    capsys.readouterr()
    assert code == 0
    assert target.read_bytes() == (GOLDEN / name).read_bytes()
