import io
import json
import subprocess
import sys

import pytest

from skewgrowth.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


GOLDEN = {
    ("growth", "bii", "--max-degree", "8"): {"truncation": 8, "coefficients": [1, 3, 7, 14, 25, 41, 63, 92, 129]},
    ("skew", "bii", "--max-degree", "8"): {"truncation": 8, "coefficients": [1, -3, 2, 1, 0, -1, -1, 0, 1]},
    ("skew", "gn:3", "--max-degree", "7"): {"truncation": 7, "coefficients": [1, -3, 2, 0, 1, 0, -1, 0]},
    ("skew", "abel:2", "--max-degree", "4"): {"truncation": 4, "coefficients": [1, -2, 2, -2, 2]},
    ("divides", "bii", "--divisor", "b", "--multiple", "cbb"): {"divisor": "b", "multiple": "cbb", "divides": True},
}


@pytest.mark.parametrize("argv", list(GOLDEN))
def test_golden_json(argv):
    code, out, _ = call(*argv, "--format", "json")
    assert code == 0
    assert json.loads(out) == GOLDEN[argv]


def test_json_is_deterministic():
    a = call("towers", "bii", "--max-degree", "6", "--format", "json")[1]
    b = call("towers", "--preset", "bii", "--max-degree", "6", "--format", "json")[1]
    assert a == b
    doc = json.loads(a)
    assert doc["observed_height"] == 2
    assert doc["towers"][0] == {"height": 0, "stages": [], "top_mcm": ["a", "b", "c"]}


def test_verify_and_mcm_text():
    code, out, _ = call("verify", "hn:1", "--max-degree", "9")
    assert code == 0 and "inversion holds to t^9" in out
    code, out, _ = call("mcm", "bii", "--set", "b,c", "--max-degree", "5", "--format", "json")
    assert [m["word"] for m in json.loads(out)["mcm"]] == ["bba", "abba", "aabba"]


def test_classes_command():
    code, out, _ = call("classes", "bii", "--word", "bc", "--format", "json")
    assert json.loads(out) == {"word": "bc", "canonical": "ab", "class": ["ab", "bc"]}
    code, out, _ = call("classes", "abel:2", "--max-degree", "2")
    assert "degree 2 (2)" in out


def test_file_source_and_cancel_exit(tmp_path):
    f = tmp_path / "bad.mono"
    f.write_text("alphabet a b\nrel a b = b b\n")
    code, out, _ = call("cancel", "--file", str(f), "--max-degree", "3")
    assert code == 1 and "right-side counterexample at degree 2" in out
    code, out, _ = call("cancel", str(f), "--side", "left", "--max-degree", "3")
    assert code == 0


def test_condition_l_command():
    code, out, _ = call("condition-l", "bii", "--max-degree", "4", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "violated"


@pytest.mark.parametrize(
    "argv, code",
    [
        (("growth", "nope"), 2),
        (("growth",), 2),
        (("growth", "bii", "--preset", "bii"), 2),
        (("growth", "bii", "--max-degree", "-1"), 2),
        (("growth", "bii", "--max-degree", "20"), 3),
        (("skew", "bii", "--max-degree", "10", "--budget", "10"), 3),
        (("divides", "bii", "--divisor", "z", "--multiple", "b"), 2),
        (("frobnicate",), 2),
    ],
)
def test_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "skewgrowth", "growth", "free:2", "--max-degree", "3", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["coefficients"] == [1, 2, 4, 8]


def test_cancel_default_degree():
    code, out, _ = call("cancel", "bii")
    assert code == 0 and out.strip() == "both: no counterexample up to degree 7"
