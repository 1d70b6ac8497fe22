import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nadosc import results
from nadosc.cli import RunConfig, main, parse_config, serialize_config
from nadosc.errors import ConfigError
from nadosc.hamiltonian import OscParams, assemble, spectrum

BASE = {"mass": 1, "omega": 1, "truncation": 8, "dimension": 1}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def test_parse_defaults():
    cfg = parse_config(json.dumps(BASE))
    assert cfg == RunConfig(dimension=1, mass=1.0, omega=1.0, truncation=8)
    assert cfg.phi == (0.0, 0.0, 0.0) and cfg.E0 == (0.0, 0.0)
    assert cfg.extra_sign == -1 and cfg.kappa_q == 1.0 and cfg.tolerance == 1e-10


@pytest.mark.parametrize(
    "patch, field",
    [
        ({"mass": -1}, "mass"),
        ({"omega": 0}, "omega"),
        ({"truncation": 0}, "truncation"),
        ({"truncation": 2.5}, "truncation"),
        ({"dimension": 3}, "dimension"),
        ({"guard_fraction": 1.5}, "guard_fraction"),
        ({"extra_sign": 2}, "extra_sign"),
        ({"eta": -0.1}, "eta"),
        ({"phi": [1, 2]}, "phi"),
        ({"mass": "one"}, "mass"),
        ({"mass": True}, "mass"),
        ({"bogus": 3}, "bogus"),
    ],
)
def test_parse_rejects(patch, field):
    with pytest.raises(ConfigError) as info:
        parse_config(json.dumps({**BASE, **patch}))
    assert info.value.field == field
    assert field in str(info.value)


def test_parse_requires_fields():
    with pytest.raises(ConfigError) as info:
        parse_config('{"mass": 1, "omega": 1, "truncation": 4}')
    assert info.value.field == "dimension"


@pytest.mark.parametrize("text", ["{", "[1, 2]", ""])
def test_parse_malformed(text):
    with pytest.raises(ConfigError):
        parse_config(text)


finite = st.floats(-5, 5, allow_nan=False)
positive = st.floats(0.01, 5)
configs = st.builds(
    RunConfig,
    dimension=st.sampled_from([1, 2]),
    mass=positive,
    omega=positive,
    truncation=st.integers(1, 20),
    eta=st.floats(0, 3),
    lam=finite,
    phi=st.tuples(finite, finite, finite),
    B0=finite,
    E0=st.tuples(finite, finite),
    kappa=finite,
    e_charge=finite,
    q_charge=finite,
    extra_sign=st.sampled_from([-1, 1]),
    kappa_q=positive,
    guard_fraction=st.floats(0.05, 1),
    tolerance=st.floats(1e-14, 1e-6),
)


@given(configs)
def test_config_round_trip(cfg):
    assert parse_config(serialize_config(cfg)) == cfg


def test_verify_algebra():
    code, out, _ = run(["verify-algebra"])
    assert code == 0
    assert "FAIL" not in out and "CHECK    {gamma^0,gamma^0} = 2 eta^00 I: pass" in out


def test_gauge_check():
    code, out, _ = run(["gauge-check", "--example", "1"])
    assert code == 0
    assert "F(ex1_raw) == F(ex1_transformed): pass" in out
    code, out, _ = run(["gauge-check", "--example", "2"])
    assert code == 0 and "FINDING" in out


def test_fields(tmp_path):
    path = write(tmp_path, "c.json", {**BASE, "eta": 0.5, "lambda": 1.5, "phi": [0.3, -0.4, 0.8], "B0": 1})
    code, out, _ = run(["fields", "--config", path])
    assert code == 0
    assert out.startswith("F_01: abelian = 3/2*x; color = ")


def test_spectrum_trivial(tmp_path):
    path = write(tmp_path, "c.json", {**BASE, "truncation": 1, "mass": 2})
    code, out, _ = run(["spectrum", "--config", path, "--out", "-"])
    assert code == 0
    data = json.loads(out)
    assert data["eigenvalues"] == [-2.0] * 4 + [2.0] * 4
    assert list(data) == ["kind", "params", "hermiticity_residual", "eigenvalue_count", "converged_count", "eigenvalues", "converged"]


def test_spectrum_files_deterministic(tmp_path):
    cfg = write(tmp_path, "c.json", {**BASE, "truncation": 12, "eta": 0.2, "phi": [0, 0, 1]})
    outputs = []
    for k in range(2):
        js, cv = tmp_path / f"s{k}.json", tmp_path / f"s{k}.csv"
        code, _, _ = run(["spectrum", "--config", cfg, "--out", str(js), "--csv", str(cv), "--converge"])
        assert code == 0
        outputs.append((js.read_bytes(), cv.read_bytes()))
    assert outputs[0] == outputs[1]
    lines = outputs[0][1].decode().splitlines()
    assert lines[0] == "index,eigenvalue,converged"
    assert len(lines) == 1 + 12 * 8


def test_symmetry(tmp_path):
    path = write(tmp_path, "c.json", {**BASE, "dimension": 2, "truncation": 6, "eta": 0.4, "phi": [0, 0, 1]})
    code, out, _ = run(["symmetry", "--config", path])
    assert code == 0
    assert "FINDING  [J_z,H] with the color term: value=0.8" in out


def test_symmetry_wrong_dimension(tmp_path):
    code, _, err = run(["symmetry", "--config", write(tmp_path, "c.json", BASE)])
    assert code == 2 and "dimension" in err


def test_invalid_config_exit_2(tmp_path):
    code, out, err = run(["spectrum", "--config", write(tmp_path, "c.json", {**BASE, "mass": -1}), "--out", "-"])
    assert code == 2 and out == "" and "mass" in err
    code, _, _ = run(["fields", "--config", write(tmp_path, "d.json", "{not json")])
    assert code == 2
    code, _, _ = run(["fields", "--config", str(tmp_path / "missing.json")])
    assert code == 2


def test_bad_arguments_exit_2():
    assert run(["gauge-check", "--example", "3"])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run([])[0] == 2


def test_unwritable_output_exit_1(tmp_path):
    cfg = write(tmp_path, "c.json", BASE)
    code, _, err = run(["spectrum", "--config", cfg, "--out", str(tmp_path / "no" / "such" / "dir.json")])
    assert code == 1 and "output error" in err


def test_tolerance_env(tmp_path, monkeypatch):
    cfg = write(tmp_path, "c.json", BASE)
    monkeypatch.setenv("NADOSC_TOL", "1e-9")
    code, out, _ = run(["spectrum", "--config", cfg, "--out", "-"])
    assert code == 0 and json.loads(out)["params"]["tolerance"] == 1e-9
    monkeypatch.setenv("NADOSC_TOL", "abc")
    assert run(["spectrum", "--config", cfg, "--out", "-"])[0] == 2


def test_failed_check_exit_1(tmp_path, monkeypatch):
    from nadosc import cli
    from nadosc.report import CheckReport

    def failing(example, coupling=1):
        rep = CheckReport("forced")
        rep.check("always fails", 1.0, False)
        return rep

    monkeypatch.setattr(cli, "gauge_report", failing)
    code, out, _ = run(["gauge-check", "--example", "1"])
    assert code == 1 and "FAIL" in out


def test_findings_do_not_fail(tmp_path):
    path = write(tmp_path, "c.json", {**BASE, "dimension": 2, "truncation": 4, "omega": 2})
    code, out, _ = run(["symmetry", "--config", path])
    assert code == 0 and "FINDING  [L_z,H] - closed form without omega" in out


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "nadosc", "verify-algebra"], capture_output=True, text=True)
    assert proc.returncode == 0 and "c_Q measured" in proc.stdout


def test_write_results_report_json(tmp_path):
    from nadosc.gauge_poly import gauge_report

    path = tmp_path / "r.json"
    results.write_results(gauge_report(2), str(path))
    data = json.loads(path.read_text())
    assert data["passed"] is True
    assert [r["kind"] for r in data["rows"]].count("FINDING") == 3


def test_dumps_format():
    text = results.dumps({"b": 0.1, "a": [1.0, float("nan")], "c": None, "d": True, "e": "q\"x"})
    assert text == '{\n  "b": 0.10000000000000001,\n  "a": [1, null],\n  "c": null,\n  "d": true,\n  "e": "q\\"x"\n}\n'
    assert json.loads(text)["b"] == 0.1


def test_csv_requires_spectrum():
    from nadosc.report import CheckReport

    with pytest.raises(TypeError):
        results.to_csv(CheckReport())


def test_spectrum_json_round_trips_floats():
    res = spectrum(assemble(OscParams(1, 1.0, 1.0, 6))[0])
    data = json.loads(results.to_json(res))
    assert np.array_equal(np.array(data["eigenvalues"]), res.eigenvalues)
    assert all(math.isfinite(v) for v in data["eigenvalues"])
