import json
import subprocess
import sys

import pytest

from paratensor.cli import main, run


def call(*argv):
    code, text = run(list(argv))
    return code, json.loads(text) if text.strip() else None


def test_classify_examples():
    assert call("classify", "z^2")[1]["result"]["type"] == "(i)"
    assert call("classify", "2*z^2-1")[1]["result"]["type"] == "(ii)"
    code, out = call("classify", "z^2-1")
    assert code == 1 and out["status"] == "negative"
    assert out["result"]["type"] == "hyperbolic" and out["result"]["chi"] == "-1"


def test_classify_report_shape():
    code, out = call("classify", "(z^2+1)^2 / (4*z*(z^2-1))")
    assert code == 0 and out["schema"] == 1 and out["command"] == "classify" and out["field"] == "q"
    r = out["result"]
    assert r["degree"] == 4 and r["pcf"] is True and r["chi"] == "0"
    assert r["postcritical"] == ["z^3 - z", "inf"]
    assert r["nu"] == {"z^3 - z": 2, "inf": 2}


def test_classify_degree_one_reports_normal_form():
    code, out = call("classify", "z/(z+1)")
    assert code == 0
    m = out["result"]["mobius"]
    assert m["kind"] == "translation" and m["conjugator"] == "1 / z" and m["parameter"] == "1"
    code, out = call("classify", "--", "-1/z")
    assert code == 0 and out["result"]["mobius"]["extension"] == "-4"


def test_not_pcf_is_negative():
    code, out = call("classify", "z^2+1")
    assert code == 1 and out["result"]["type"] == "not-applicable"
    assert call("--budget", "8", "classify", "z^2+1")[0] == 1


def test_verify_examples():
    code, out = call("verify", "z^3", "1/z dz^1")
    assert code == 0 and out["result"]["certificate"]["lambda"] == "3"
    code, out = call("verify", "2*z^2-1", "1/(1-z^2) dz^2")
    assert code == 0 and out["result"]["certificate"]["lambda"] == "4"
    assert out["result"]["validation"]["passed"] is True
    code, out = call("verify", "z^2-1", "1/(1-z^2) dz^2")
    assert code == 1 and out["result"]["parallel"] is False


def test_verify_zero_differential_is_usage_error():
    assert call("verify", "z^2", "0 dz")[0] == 2


def test_search_examples():
    code, out = call("search", "(z^2+1)^2/(4*z*(z^2-1))", "--max-k", "4")
    assert code == 0
    c = out["result"]["certificate"]
    assert c["k"] == 2 and c["lambda_modulus_squared"] == "16"
    code, out = call("search", "z^2-1", "--max-k", "12")
    assert code == 1 and out["result"]["refusal"] == "hyperbolic"
    code, out = call("search", "z^5", "--max-k", "1")
    assert code == 0
    assert out["result"]["certificate"]["differential"] == "1 / z dz"
    assert out["result"]["certificate"]["lambda"] == "5"


def test_search_refusals():
    code, out = call("search", "z^2+1")
    assert code == 1 and "postcritically" in out["result"]["refusal"]
    code, out = call("search", "(z+1)^4/(16*z*(z-1)^2)", "--max-k", "3")
    assert code == 1 and "k" in out["result"]["refusal"]


def test_generate_examples():
    code, out = call("generate", "cheb", "4")
    assert code == 0 and out["result"]["map"] == "8*z^4 - 8*z^2 + 1"
    assert out["result"]["signature"]["type"] == "(ii)"
    code, out = call("generate", "lattes", "--a", "-1", "--b", "0", "--m", "2")
    assert code == 0 and out["result"]["signature"]["type"] == "(iii)"
    code, out = call("generate", "cm", "--family", "j1728", "--m", "2", "--target", "244")
    assert code == 0 and out["result"]["signature"]["type"] == "(v)"
    assert out["result"]["certificate"]["lambda_modulus_squared"] == "256"


GENERATE_ARGS = [
    ["power", "3"], ["power", "-2"], ["cheb", "3", "--neg"], ["cheb", "5"],
    ["lattes", "--a", "0", "--b", "1", "--m", "3"], ["lattes", "--a", "-1", "--b", "0", "--m", "2", "--twist", "1"],
    ["cm", "--family", "j0", "--m", "2", "--target", "333"],
    ["cm", "--family", "j0", "--m", "2", "--target", "333", "--twist", "2"],
    ["cm", "--family", "j0", "--m", "2", "--target", "236"],
    ["cm", "--family", "j1728", "--m", "2", "--twist", "1"],
]


@pytest.mark.parametrize("args", GENERATE_ARGS, ids=" ".join)
def test_generated_output_passes_verify(args):
    code, out = call("generate", *args)
    assert code == 0, out
    r = out["result"]
    code, ver = call("--field", out["field"], "verify", r["map"], r["certificate"]["differential"])
    assert code == 0
    assert ver["result"]["certificate"]["lambda"] == r["certificate"]["lambda"]
    assert ver["result"]["validation"]["passed"]


def test_enumerate_examples():
    out = call("enumerate", "--max-weight", "6")[1]["result"]
    assert sorted(map(tuple, out["signatures"])) == sorted([(2, 2, 2, 2), (3, 3, 3), (2, 4, 4), (2, 3, 6)])
    out = call("enumerate", "--max-weight", "6", "--boundary")[1]["result"]
    assert out["count"] == 6 and ["inf", "inf"] in out["signatures"] and [2, 2, "inf"] in out["signatures"]
    out = call("enumerate", "--max-weight", "100")[1]["result"]
    assert out["count"] == 4


def test_fields():
    code, out = call("--field", "qi", "classify", "z^2 + i")
    assert code == 1 and out["field"] == "qi" and out["result"]["type"] == "hyperbolic"
    code, out = call("classify", "--field", "qw", "w*z^2")
    assert code == 0 and out["result"]["type"] == "(i)"
    code, out = call("--field", "qd:2", "verify", "z^2", "1/z dz")
    assert code == 0 and out["field"] == "qd:2"


@pytest.mark.parametrize("argv", [
    ["classify", "z^^2"], ["classify", "z + i"], ["verify", "z^2", "1/z"],
    ["--field", "qx", "classify", "z^2"], ["generate", "cheb", "1"], ["enumerate", "--max-weight", "1"],
    ["generate", "lattes", "--a", "0", "--b", "0", "--m", "2"], ["generate", "cheb", "3", "--twist", "5"],
    ["frobnicate"], [],
])
def test_usage_errors_exit_2(argv):
    code, _ = run(argv)
    assert code == 2


def test_deterministic_bytes():
    argv = ["generate", "lattes", "--a", "-2", "--b", "1", "--m", "2"]
    first = run(argv)[1]
    assert all(run(argv)[1] == first for _ in range(3))


def test_console_entry_point_is_deterministic_and_exits_with_code():
    cmd = [sys.executable, "-m", "paratensor", "classify", "z^2-1"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 1
    assert a.stdout == b.stdout and a.stdout
    json.loads(a.stdout)
    assert a.stderr  # human summary


def test_main_returns_code(capsys):
    assert main(["classify", "z^3"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["type"] == "(i)"
