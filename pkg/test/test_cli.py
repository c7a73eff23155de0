import io
import json
from pathlib import Path

import pytest

from pysing.ulities.sing_report import main

ROMAN = ("s*u", "t*u", "s*t", "s^2 + t^2 + u^2")
WHITNEY = ("s*t", "s*u", "t^2", "u^2")
SPHERE = ("2*s*u", "2*t*u", "s^2 + t^2 - u^2", "s^2 + t^2 + u^2")
PLANE = ("s", "t", "1", "1")
SAMPLES = Path(__file__).resolve().parent.parent / "surfaces"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_report_verify(surface_file):
    path = surface_file(ROMAN, [("0", "0", "0", "1")])
    code, text = run("report", path, "--verify", "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["verified"] is True
    assert doc["points"][0]["r"] == 3
    assert doc["points"][0]["checks"]["oracle"]["count"] == 3


def test_report_verify_off_the_w_chart(surface_file):
    path = surface_file(ROMAN, [("0", "0", "1", "0"), ("1", "0", "0", "0")])
    code, text = run("report", path, "--verify", "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["verified"] is True
    for entry in doc["points"]:
        assert entry["r"] == 2
        assert entry["checks"]["mu_basis"]["count"] == 2
        assert entry["checks"]["combined_planes"] == {"expected": 2, "status": "VACUOUS"}


def test_report_verify_plane_at_infinity(surface_file):
    path = surface_file(PLANE, [("1", "0", "0", "0"), ("1", "1", "0", "0"), ("0", "1", "0", "0")])
    code, text = run("report", path, "--verify", "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["verified"] is True
    for entry in doc["points"]:
        assert entry["r"] == 1
        assert not any(check["status"].startswith("ERROR") for check in entry["checks"].values())


@pytest.mark.parametrize("name", ["roman", "whitney", "sphere", "plane"])
def test_sample_surfaces(name):
    code, text = run("report", str(SAMPLES / f"{name}.json"), "--json")
    assert code == 0
    assert json.loads(text)["points"]


def test_sample_roman_verifies():
    code, text = run("report", str(SAMPLES / "roman.json"), "--verify", "--json")
    assert code == 0
    doc = json.loads(text)
    assert [entry["r"] for entry in doc["points"]] == [3, 2, 2, 1]


def test_report_is_deterministic(surface_file):
    path = surface_file(WHITNEY, [("0", "0", "0", "1")], seed=5)
    first = run("report", path, "--json")
    second = run("report", path, "--json", "--workers", "1")
    assert first == second
    doc = json.loads(first[1])
    assert doc["seed"] == 5
    assert doc["lambda"] == 1
    assert doc["implicit_degree"] == 3
    assert doc["points"][0]["r"] == 2


def test_seed_flag_beats_file(surface_file):
    path = surface_file(WHITNEY, seed=5)
    code, text = run("basepoints", path, "--json", "--seed", "9")
    assert code == 0
    assert json.loads(text)["seed"] == 9


def test_order(surface_file):
    code, text = run("order", surface_file(ROMAN), "--point", "0,0,0,1", "--point", "1/3,0,0,1")
    assert code == 0
    assert "r=3" in text.splitlines()[0]
    assert "r=2" in text.splitlines()[1]


def test_basepoints(surface_file):
    code, text = run("basepoints", surface_file(SPHERE), "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["lambda"] == 2
    assert doc["point_count"] == 2


def test_implicitize(surface_file):
    code, text = run("implicitize", surface_file(SPHERE))
    assert code == 0
    assert text.strip() == "x^2 + y^2 + z^2 - w^2"


def test_mubasis(surface_file):
    code, text = run("mubasis", surface_file(PLANE), "--json")
    assert code == 0
    mu = json.loads(text)["mu_basis"]
    assert sum(mu["degrees"]) == 2


def test_mubasis_degree_bound_exhausted(surface_file):
    code, text = run("mubasis", surface_file(ROMAN), "--degree-bound", "0")
    assert code == 0
    assert text.startswith("no mu-basis")


def test_movingplanes(surface_file):
    code, text = run("movingplanes", surface_file(PLANE), "--degree", "0")
    assert code == 0
    assert text.splitlines() == ["1 independent moving planes of degree <= 0", "(0, 0, 1, -1)"]


def test_content_is_divided_out(surface_file, caplog):
    code, text = run("basepoints", surface_file(("s^2*u", "s*t*u", "s^3", "s*(s^2 + t^2 + u^2)")))
    assert code == 0
    assert "common factor" in caplog.text
    assert text.startswith("lambda = 0")


@pytest.mark.parametrize("components, argv, exit_code, code", [
    (("s +* t", "t", "1", "1"), ("basepoints",), 2, "SYNTAX_ERROR"),
    (("s", "v", "1", "1"), ("basepoints",), 2, "UNKNOWN_VARIABLE"),
    (ROMAN, ("order", "--point", "0,0,1"), 2, "INVALID_POINT"),
    (ROMAN, ("order", "--point", "0,0,x,1"), 2, "NON_RATIONAL_POINT"),
    (("s", "s*t", "s*t^2", "1"), ("order", "--point", "0,0,0,1"), 3, "NON_ISOLATED_FIBER"),
    (("s*t", "s*t^2", "s", "1"), ("basepoints", "--config", '{"base_points": {"lambda_generators": "abc"}}'),
     3, "COMMON_COMPONENT"),
])
def test_error_exit_codes(surface_file, capsys, components, argv, exit_code, code):
    command, *rest = argv
    assert main([command, surface_file(components), *rest], out=io.StringIO()) == exit_code
    assert f"error[{code}]" in capsys.readouterr().err


def test_input_errors(tmp_path, surface_file, capsys):
    assert main(["basepoints", str(tmp_path / "nope.json")], out=io.StringIO()) == 2
    assert "error[INVALID_INPUT]" in capsys.readouterr().err
    assert main(["basepoints", surface_file(PLANE), "--config", "{oops"], out=io.StringIO()) == 2
    assert "Invalid JSON configuration string." in capsys.readouterr().err
