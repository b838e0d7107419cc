import csv
import io
import json
import os
import pathlib
import re
import subprocess

import jsonschema
import pytest

CLI = os.environ.get("VVJACK_CLI", str(pathlib.Path(__file__).resolve().parents[2] / "build" / "vvjack"))
SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def ok_json(name, *args):
    r = run(*args)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema(name))
    return doc


def error_json(code, *args):
    r = run(*args)
    assert r.returncode == code, (r.returncode, r.stdout, r.stderr)
    doc = json.loads(r.stderr.strip().splitlines()[-1])
    jsonschema.validate(doc, schema("error"))
    return doc


def test_schemas_are_valid():
    for path in SCHEMAS.glob("*.schema.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


def test_tableaux():
    doc = ok_json("tableaux", "tableaux", "--tau", "2,2")
    assert [t["rows"] for t in doc["tableaux"]] == [[[4, 2], [3, 1]], [[4, 3], [2, 1]]]
    assert doc["tableaux"][1]["norm0"] == "3/4"
    assert doc["dim"] == 2 and doc["max_hook"] == 3


def test_nsjp_example():
    doc = ok_json("nsjp", "nsjp", "--tau", "2,1", "--alpha", "0,1,1", "--tableau", "T0", "--kappa", "1/10")
    assert doc["spectral_vector"] == ["1", "21/10", "19/10"]
    assert doc["tableau"]["name"] == "T0"
    assert doc["polynomial"]["degree"] == 2


def test_tableau_by_content_vector():
    a = ok_json("nsjp", "nsjp", "--tau", "2,1", "--alpha", "0,1,1", "--tableau", "-1,1,0", "--kappa", "1/10")
    b = ok_json("nsjp", "nsjp", "--tau", "2,1", "--alpha", "0,1,1", "--tableau", "T1", "--kappa", "1/10")
    assert a == b
    assert a["spectral_vector"] == ["1", "19/10", "21/10"]


def test_schedules_agree():
    args = ["nsjp", "--tau", "3,1", "--alpha", "2,0,1,1", "--tableau", "T2", "--kappa", "-1/7"]
    a = ok_json("nsjp", *args, "--schedule", "leftmost")
    b = ok_json("nsjp", *args, "--schedule", "rightmost")
    assert a["polynomial"] == b["polynomial"]


def test_norm():
    doc = ok_json("norm", "norm", "--tau", "2,2", "--alpha", "1,1,0,0", "--tableau", "T1", "--kappa", "1/10")
    assert doc["agree"] is True


def test_jack_example():
    doc = ok_json("jack", "jack", "--tau", "2,2", "--lambda", "1,1,0,0", "--kappa", "1/10")
    assert len(doc["jacks"]) == 1
    j = doc["jacks"][0]
    assert j["eigenvalue"] == "91/50"
    k = 0.1
    assert j["norm"] == "14/5"
    assert abs(4.5 * (1 - 3 * k) * (1 - 2 * k) / (1 - k) - 14 / 5) < 1e-12
    single = ok_json("jack", "jack", "--tau", "2,2", "--lambda", "1,1,0,0", "--tableau", "T1", "--kappa", "1/10")
    assert single == j
    minimal = ok_json("jack", "jack", "--tau", "2,2", "--minimal", "--kappa", "1/10")
    assert minimal["coefficients"] == j["coefficients"]


def test_count():
    doc = ok_json("count", "count", "--tau", "3,2", "--max-degree", "8")
    assert doc["series"] == [0, 0, 1, 2, 4, 7, 12, 18, 27]
    doc = ok_json("count", "count", "--tau", "2,1", "--max-degree", "4", "--kappa", "1/10")
    assert [e["count"] for e in doc["enumerated"]] == doc["series"]
    r = run("count", "--tau", "2,1", "--max-degree", "3", "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["degree", "count"] and rows[1:] == [["0", "0"], ["1", "1"], ["2", "2"], ["3", "3"]]


def test_verify_and_check_reports():
    doc = ok_json("report", "verify", "--tau", "2,1", "--kappa", "1/10", "--max-degree", "2", "--samples", "3", "--json")
    assert doc["passed"] is True
    doc = ok_json("report", "wave", "check", "--tau", "2,1", "--kappa", "0.1", "--points", "4", "--json")
    assert doc["passed"] is True
    table = run("verify", "--tau", "2,1", "--kappa", "1/10", "--max-degree", "1", "--samples", "2")
    assert table.returncode == 0
    assert all(line.startswith("PASS") for line in table.stdout.splitlines())


def test_wave_integrate():
    doc = ok_json("wave_integrate", "wave", "integrate", "--tau", "2,1", "--kappa", "1/10", "--theta", "0,2,4")
    assert doc["kappa"] == 0.1
    assert abs(doc["det"]["re"] - 1) < 1e-9
    base = ok_json("wave_integrate", "wave", "integrate", "--tau", "2,2", "--kappa", "0.1",
                   "--theta", "0,1.5707963267948966,3.141592653589793,4.71238898038469")
    assert base["L"]["re"] == [[1.0, 0.0], [0.0, 1.0]]


def test_wave_density_csv():
    r = run("wave", "density", "--tau", "2,2", "--kappa", "1/10", "--grid", "4")
    assert r.returncode == 0, r.stderr
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["theta1", "theta2", "theta3", "theta4", "density"]
    assert len(rows) > 1
    for row in rows[1:]:
        assert float(row[0]) == 0.0
        assert float(row[-1]) >= 0


def test_output_is_deterministic():
    args = ["jack", "--tau", "3,1", "--lambda", "2,1,0,0", "--kappa", "2/17"]
    assert run(*args).stdout == run(*args).stdout
    args = ["wave", "density", "--tau", "2,1", "--kappa", "0.1", "--grid", "3"]
    assert run(*args).stdout == run(*args).stdout


def test_help_lists_flags():
    expected = {
        "nsjp": ["--tau", "--kappa", "--alpha", "--tableau", "--schedule", "--force-kappa", "--degree-bound"],
        "jack": ["--lambda", "--tableau", "--shift", "--minimal"],
        "count": ["--max-degree", "--restrict", "--kappa", "--format"],
        "verify": ["--max-degree", "--samples", "--seed", "--json"],
    }
    for cmd, flags in expected.items():
        text = run(cmd, "--help").stdout
        for f in flags:
            assert f in text, (cmd, f)
    text = run("wave", "density", "--help").stdout
    assert "--grid" in text
    text = run("wave", "integrate", "--help").stdout
    assert "--theta" in text and "--waypoint" in text
    text = run("wave", "check", "--help").stdout
    assert "--points" in text


@pytest.mark.parametrize(
    "code,args,kind",
    [
        (2, ["bogus"], "usage"),
        (2, ["nsjp", "--tau", "2,1"], "usage"),
        (2, ["tableaux", "--tau", "1,2"], "invalid_shape"),
        (2, ["nsjp", "--tau", "2,1", "--alpha", "0,1", "--kappa", "1/10"], "invalid_argument"),
        (2, ["jack", "--tau", "2,2", "--lambda", "1,1,0,0", "--tableau", "T0", "--kappa", "1/10"], "invalid_argument"),
        (2, ["wave", "integrate", "--tau", "2,1", "--kappa", "0.1", "--theta", "0,0,1"], "regularity"),
        (3, ["nsjp", "--tau", "2,2", "--alpha", "0,1,1,0", "--kappa", "1/2"], "inadmissible_kappa"),
        (3, ["nsjp", "--tau", "2,2", "--alpha", "0,1,1,0", "--kappa", "1/2", "--force-kappa"], "inadmissible_kappa"),
        (3, ["nsjp", "--tau", "2,1", "--alpha", "0,1,1", "--kappa", "0"], "inadmissible_kappa"),
        (3, ["wave", "check", "--tau", "2,2", "--kappa", "0.4"], "inadmissible_kappa"),
    ],
)
def test_error_exit_codes(code, args, kind):
    assert error_json(code, *args)["error"] == kind


def test_failed_verification_exits_4():
    # A suite that ran no cases does not pass.
    r = run("verify", "--tau", "2,1", "--kappa", "1/10", "--max-degree", "1", "--samples", "0")
    assert r.returncode == 4
    assert re.search(r"^FAIL", r.stdout, re.M)
