import json
import subprocess
import sys

import pytest

from kwsgp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "5,7,11,13", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == "kwsgp/1"
    res = rep["result"]
    assert res["type"] == 3 and res["mu"] == 6
    assert res["principal_matrix"]["diagonal"] == [-4, -3, -2, -2]


def test_analyze_kw_case(capsys):
    code, out, _ = run(capsys, "analyze", "--kw", "5,7", "--corners", "2:2,3:1", "--json")
    res = json.loads(out)["result"]
    assert res["generators"] == [5, 7, 11, 13]
    assert res["kw"]["closed_form"]["case"] == "i"


def test_analyze_trivial_and_apery(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "2,3", "--apery", "--json")
    res = json.loads(out)["result"]
    assert res["frobenius"] == 1 and res["apery"]["2"] == [0, 3]


def test_analyze_kw3(capsys):
    code, out, _ = run(capsys, "analyze", "--kw3", "9,11,2,1,4", "--points", "1:2:2", "--json")
    k = json.loads(out)["result"]["kw3"]
    assert k["type3"]["status"] == "pass" and k["apery_characterization"]["equal"]


@pytest.mark.parametrize("argv, kind", [
    (["analyze", "--gens", "4,6"], "NonCoprime"),
    (["analyze", "--gens", "a,b"], "InvalidSpec"),
    (["analyze"], "InvalidSpec"),
    (["analyze", "--kw", "5,7", "--corners", "9:9"], "InvalidCorners"),
    (["table", "nope"], "UnknownTable"),
    (["verify", "--kw", "5,7", "--cap", "3"], "CapExceeded"),
    (["bogus"], "UsageError"),
])
def test_input_errors_exit_2(capsys, argv, kind):
    if kind == "UsageError":
        with pytest.raises(SystemExit) as exc:
            main(argv)
        code, err = exc.value.code, capsys.readouterr().err
    else:
        code, _, err = run(capsys, *argv)
    assert code == 2
    assert json.loads(err)["error"]["type"] == kind


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("KWSGP_CAP", "5")
    code, _, err = run(capsys, "enumerate", "--kw", "5,7")
    assert code == 2 and "cap 5" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--kw", "5,7", "--theorem", "presentation", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["counts"]["pass"] == 10
    code, out, _ = run(capsys, "verify", "--kw", "8,9", "--theorem", "presentation", "--json")
    rep = json.loads(out)
    assert code == 1
    assert rep["result"]["first_counterexample"]["detail"]["mu"] == 2


def test_verify_principal_even(capsys):
    code, out, _ = run(capsys, "verify", "--kw", "8,9", "--theorem", "principal", "--json")
    res = json.loads(out)["result"]
    cases = {m["detail"]["case"] for m in res["members"] if m["status"] == "pass"}
    assert code == 0 and "even_p_exception" in cases


def test_verify_kw3(capsys):
    code, out, _ = run(capsys, "verify", "--kw3", "9,11,2,1,4", "--theorem", "type3")
    assert code == 0 and "0 fail" in out


def test_verify_jobs_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--kw", "7,9", "--theorem", "resolution", "--json")
    _, b, _ = run(capsys, "verify", "--kw", "7,9", "--theorem", "resolution", "--json",
                  "--jobs", "3")
    assert json.loads(a)["result"] == json.loads(b)["result"]


def test_render_svg(capsys):
    _, out, _ = run(capsys, "render", "--kw", "5,7", "--corners", "2:2,3:1")
    assert out.startswith("<svg") and out.count('class="corner"') == 2
    _, out, _ = run(capsys, "render", "--kw", "5,7")
    assert out.count('class="corner"') == 0 and 'class="boundary"' in out


def test_render_kw3_cloud(capsys):
    _, out, _ = run(capsys, "render", "--kw3", "5,7,2,1,3")
    assert len(json.loads(out)["result"]["gaps_of_base"]) == 52


def test_enumerate_csv(capsys, tmp_path):
    target = tmp_path / "m.csv"
    code, _, _ = run(capsys, "enumerate", "--kw", "5,7", "--csv", "--out", str(target))
    lines = target.read_text().splitlines()
    assert code == 0 and lines[0] == "corners,generators,n" and len(lines) == 11


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "kwsgp", "analyze", "--gens", "15,21,17,73", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
