"""Configuration parsing, validation and the batch CLI."""

import json

import pytest

from fourwave.cli import main
from fourwave.config import parse_config, validate

COLD_TEMPLATE = """
[run]
model = cold
seed = {seed}
langevin = {langevin}
omega_mhz = 1.0

[atom]
gamma_e_mhz = 5.75
gamma_g_mhz = 0.01
omega0_mhz = 3036
delta1_mhz = 1000
delta2_mhz = 0
rabi_mhz = 300

[medium]
optical_depth = {depth}

[sweep]
axis = {axis}
start = {start}
stop = {stop}
count = {count}

[output]
path = {path}
format = {fmt}
"""


def cold_config(path, axis="delta2_mhz", start=-100, stop=100, count=41,
                depth=150, seed=7, langevin="on", fmt="csv"):
    return COLD_TEMPLATE.format(path=path, axis=axis, start=start, stop=stop,
                                count=count, depth=depth, seed=seed,
                                langevin=langevin, fmt=fmt)


REFERENCE_CONFIG = """
[run]
model = reference
seed = 1

[reference]
kind = pia
gain = 3

[sweep]
axis = gain
start = 3
stop = 3
count = 1

[output]
path = {path}
format = csv
"""

EIT_CONFIG = """
[run]
model = eit
seed = 1

[eit]
gamma_e_mhz = 5.75
gamma_g_mhz = 0
delta1_mhz = 0
rabi_c_mhz = 5.75

[sweep]
axis = delta2_mhz
start = -20
stop = 20
count = 81

[output]
path = {path}
format = csv
"""


def read_rows(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    return header, rows


class TestValidation:
    def test_valid_config_has_no_diagnostics(self, tmp_path):
        cfg = parse_config(cold_config(tmp_path / "o.csv"))
        assert validate(cfg) == []

    def test_missing_linewidth_reported_with_key_path(self, tmp_path):
        text = cold_config(tmp_path / "o.csv").replace("gamma_e_mhz = 5.75\n", "")
        diags = validate(parse_config(text))
        assert len(diags) == 1
        assert diags[0].key == "atom.gamma_e_mhz"

    def test_negative_count_reported(self, tmp_path):
        diags = validate(parse_config(cold_config(tmp_path / "o.csv", count=-3)))
        assert any(d.key == "sweep.count" for d in diags)

    def test_wrong_axis_for_model(self, tmp_path):
        diags = validate(parse_config(cold_config(tmp_path / "o.csv",
                                      axis="temperature_c")))
        assert any(d.key == "sweep.axis" for d in diags)

    def test_unknown_model(self):
        diags = validate(parse_config("[run]\nmodel = warm\n"))
        assert diags[0].key == "run.model"

    def test_reference_axis_must_match_kind(self, tmp_path):
        text = REFERENCE_CONFIG.format(path=tmp_path / "o.csv")
        text = text.replace("axis = gain", "axis = slice_gain")
        diags = validate(parse_config(text))
        assert any(d.key == "sweep.axis" for d in diags)

    def test_validate_subcommand_exit_codes(self, tmp_path):
        good = tmp_path / "good.ini"
        good.write_text(cold_config(tmp_path / "o.csv"))
        assert main(["validate", "--config", str(good)]) == 0
        bad = tmp_path / "bad.ini"
        bad.write_text(cold_config(tmp_path / "o.csv", count=0))
        assert main(["validate", "--config", str(bad)]) == 2


class TestRun:
    def test_two_photon_scan_shows_raman_dip_and_mixing_peak(self, tmp_path):
        out = tmp_path / "fig.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(out, start=-60, stop=60, count=61,
                                   langevin="off"))
        assert main(["run", "--config", str(ini)]) == 0
        _, rows = read_rows(out)
        ga = [float(r["Ga"]) for r in rows]
        assert min(ga) < 0.8
        assert max(ga) > 1.01

    def test_single_point_transparent_medium(self, tmp_path):
        out = tmp_path / "one.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(out, axis="omega_mhz", start=1, stop=1,
                                   count=1, depth=0))
        assert main(["run", "--config", str(ini)]) == 0
        header, rows = read_rows(out)
        row = rows[0]
        assert float(row["Ga"]) == 1.0
        assert float(row["Gb"]) == 0.0
        for col in ("S_Nminus", "S_phiplus", "inseparability", "S_Na"):
            assert float(row[col]) == pytest.approx(1.0, abs=1e-9)
        assert "prepared_fraction" not in header

    def test_reference_pia_row(self, tmp_path):
        out = tmp_path / "ref.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(REFERENCE_CONFIG.format(path=out))
        assert main(["reference", "--config", str(ini)]) == 0
        _, rows = read_rows(out)
        assert float(rows[0]["S_Nminus"]) == pytest.approx(0.2, abs=1e-12)
        assert float(rows[0]["Ga"]) == 3.0

    def test_reference_subcommand_rejects_other_models(self, tmp_path):
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(tmp_path / "o.csv"))
        assert main(["reference", "--config", str(ini)]) == 2

    def test_eit_scan_transparency_point(self, tmp_path):
        out = tmp_path / "eit.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(EIT_CONFIG.format(path=out))
        assert main(["run", "--config", str(ini)]) == 0
        header, rows = read_rows(out)
        assert header[0] == "sweep_value[delta2_mhz]"
        centre = rows[40]
        assert float(centre[header[0]]) == 0.0
        assert abs(float(centre["chi_im"])) < 1e-12

    def test_invalid_config_nonzero_exit(self, tmp_path, capsys):
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(tmp_path / "o.csv", count=0))
        assert main(["run", "--config", str(ini)]) == 2
        assert "sweep.count" in capsys.readouterr().err

    def test_malformed_text_reports_parse_location(self, tmp_path, capsys):
        ini = tmp_path / "cfg.ini"
        ini.write_text("[run\nmodel = cold\n")     # unclosed section header
        assert main(["run", "--config", str(ini)]) == 2
        err = capsys.readouterr().err
        assert "cannot read config" in err
        assert "line" in err.lower()

    def test_byte_identical_reruns(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(out1, count=11))
        assert main(["run", "--config", str(ini)]) == 0
        assert main(["run", "--config", str(ini), "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_parallel_equals_serial(self, tmp_path):
        serial, parallel = tmp_path / "s.csv", tmp_path / "p.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(serial, count=9))
        assert main(["run", "--config", str(ini)]) == 0
        assert main(["run", "--config", str(ini), "--out", str(parallel),
                     "--threads", "4"]) == 0
        assert serial.read_bytes() == parallel.read_bytes()

    def test_json_mirrors_csv_schema(self, tmp_path):
        csv_out, json_out = tmp_path / "o.csv", tmp_path / "o.json"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(csv_out, count=5))
        assert main(["run", "--config", str(ini)]) == 0
        assert main(["run", "--config", str(ini), "--out", str(json_out),
                     "--format", "json"]) == 0
        header, rows = read_rows(csv_out)
        payload = json.loads(json_out.read_text())
        assert payload["schema"]["columns"] == header
        assert len(payload["rows"]) == len(rows)
        assert payload["rows"][0][header.index("Ga")] == pytest.approx(
            float(rows[0]["Ga"]), rel=1e-12)

    def test_db_flag_adds_decibel_columns(self, tmp_path):
        out = tmp_path / "db.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(out, count=3))
        assert main(["run", "--config", str(ini), "--db"]) == 0
        header, rows = read_rows(out)
        assert "S_Nminus_db" in header
        import math
        for row in rows:
            lin, db = float(row["S_Nminus"]), float(row["S_Nminus_db"])
            assert db == pytest.approx(10 * math.log10(lin), abs=1e-9)

    def test_pole_rows_flagged_and_exit_zero(self, tmp_path):
        # no pump and no ground decay: the ground-coherence response is
        # singular exactly at omega = delta2 (here 1 MHz)
        out = tmp_path / "pole.csv"
        text = cold_config(out, axis="omega_mhz", start=0.5, stop=1.5, count=3,
                           langevin="off")
        text = text.replace("rabi_mhz = 300", "rabi_mhz = 0")
        text = text.replace("gamma_g_mhz = 0.01", "gamma_g_mhz = 0")
        text = text.replace("delta2_mhz = 0", "delta2_mhz = 1")
        ini = tmp_path / "cfg.ini"
        ini.write_text(text)
        assert main(["run", "--config", str(ini)]) == 0
        _, rows = read_rows(out)
        assert rows[1]["flag"] == "pole"
        assert rows[1]["Ga"] == ""
        assert rows[0]["flag"] == ""
        assert rows[2]["flag"] == ""

    def test_csv_line_endings_lf(self, tmp_path):
        out = tmp_path / "o.csv"
        ini = tmp_path / "cfg.ini"
        ini.write_text(cold_config(out, count=3))
        main(["run", "--config", str(ini)])
        raw = out.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")


class TestVaporModel:
    def test_vapor_sweep_has_prepared_fraction(self, tmp_path):
        out = tmp_path / "vap.csv"
        text = cold_config(out, axis="rabi_mhz", start=250, stop=350, count=3,
                           depth=1000).replace("model = cold", "model = vapor")
        text += """
[vapor]
temperature_c = 120
atomic_mass_u = 85
wavelength_nm = 795
pump_waist_um = 600
probe_waist_um = 300
cell_length_mm = 12.5
cross_section_cm2 = 1e-9
"""
        ini = tmp_path / "cfg.ini"
        ini.write_text(text)
        assert main(["run", "--config", str(ini)]) == 0
        header, rows = read_rows(out)
        assert "prepared_fraction" in header
        for row in rows:
            assert 0 < float(row["prepared_fraction"]) <= 1
            assert float(row["Ga"]) > 0
