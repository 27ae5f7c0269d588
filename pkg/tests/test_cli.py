import csv
import json

import pytest

from reqho.cli import main


def write(tmp_path, name, seeds, **options):
    body = {"seeds": [{"kind": k, "n": n} for k, n in seeds]}
    if options:
        body["options"] = options
    p = tmp_path / f"{name}.json"
    p.write_text(json.dumps(body))
    return p


def test_build_simplest(tmp_path, capsys):
    f = write(tmp_path, "s", [("nonphys", 2)])
    assert main(["build", str(f), "--out", str(tmp_path / "r")]) == 0
    rep = json.loads((tmp_path / "r" / "s.build.json").read_text())
    assert "8(2x^2-1)/(2x^2+1)^2" in rep["potential"]["text"]
    assert rep["delta"] == "3/1" and rep["n_plus"] == 1


def test_build_inadmissible(tmp_path, capsys):
    f = write(tmp_path, "bad", [("phys", 1)])
    assert main(["build", str(f), "--out", str(tmp_path)]) == 2
    assert "1 real root" in capsys.readouterr().err


def test_build_empty(tmp_path):
    f = write(tmp_path, "qho", [])
    assert main(["build", str(f), "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "qho.build.json").read_text())
    assert rep["delta"] == "0/1" and rep["gaps"] == []


@pytest.mark.parametrize("body", ['{"seeds": [{"kind": "phys"}]}', '{"seeds": [], "extra": 1}', "not json",
                                  '{"seeds": [{"kind": "phys", "n": 1}, {"kind": "phys", "n": 1}]}'])
def test_parse_errors(tmp_path, body):
    f = tmp_path / "x.json"
    f.write_text(body)
    assert main(["build", str(f), "--out", str(tmp_path)]) == 2


def test_verify_simplest(tmp_path):
    f = write(tmp_path, "s", [("nonphys", 2)])
    assert main(["verify", str(f), "--out", str(tmp_path), "--grid", "10,4000"]) == 0
    rep = json.loads((tmp_path / "s.verify.json").read_text())
    assert all(r["status"] == "Verified" for r in rep["identities"])
    assert rep["spectrum_max_error"] < 1e-3


def test_verify_two_level(tmp_path):
    f = write(tmp_path, "t", [("nonphys", 2), ("nonphys", 3)])
    assert main(["verify", str(f), "--out", str(tmp_path), "--checks", "identities"]) == 0
    rep = json.loads((tmp_path / "t.verify.json").read_text())
    hits = [r for r in rep["identities"] if r["statement"] == "H B- = (H-4) A-"]
    assert hits and hits[0]["status"] == "Verified"


def test_verify_figure1(tmp_path):
    f = write(tmp_path, "f", [("nonphys", j) for j in (2, 5, 6, 7)])
    assert main(["verify", str(f), "--out", str(tmp_path), "--checks", "kernels"]) == 0
    rep = json.loads((tmp_path / "f.verify.json").read_text())
    assert rep["complementary_pair"]["beta"] == "{psi_3,psi_4,psi_6,psi_7}"
    assert rep["system"]["delta"] == "8/1"


def test_verify_deterministic(tmp_path):
    f = write(tmp_path, "s", [("nonphys", 2)])
    main(["verify", str(f), "--out", str(tmp_path / "a"), "--checks", "identities", "kernels", "walks"])
    main(["verify", str(f), "--out", str(tmp_path / "b"), "--checks", "identities", "kernels", "walks"])
    assert (tmp_path / "a" / "s.verify.json").read_bytes() == (tmp_path / "b" / "s.verify.json").read_bytes()


def test_report_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("REQHO_REPORT_DIR", str(tmp_path / "env"))
    f = write(tmp_path, "s", [("nonphys", 2)])
    assert main(["build", str(f)]) == 0
    assert (tmp_path / "env" / "s.build.json").exists()


def test_export_potential(tmp_path):
    f = write(tmp_path, "s", [("nonphys", 2)], grid={"L": 1, "N": 10})
    assert main(["export", str(f), "--what", "potential", "--out", str(tmp_path)]) == 0
    rows = list(csv.DictReader((tmp_path / "s.potential.csv").open()))
    at0 = [r for r in rows if abs(float(r["x"])) < 1e-12]
    assert float(at0[0]["V"]) == pytest.approx(-5)


def test_export_spectrum(tmp_path):
    f = write(tmp_path, "t", [("nonphys", 2), ("nonphys", 3)])
    assert main(["export", str(f), "--what", "spectrum", "--out", str(tmp_path)]) == 0
    rows = list(csv.DictReader((tmp_path / "t.spectrum.csv").open()))
    assert [r["energy"] for r in rows[:4]] == ["0/1", "2/1", "8/1", "10/1"]


def test_export_states(tmp_path):
    f = write(tmp_path, "s", [("nonphys", 2)])
    assert main(["export", str(f), "--what", "states", "--out", str(tmp_path)]) == 0
    st = json.loads((tmp_path / "s.states.json").read_text())
    assert st["Psi_0"]["rat"]["den"] == ["1/1", "0/1", "2/1"]
    assert st["Psi_0"]["energy"] == "0/1"
