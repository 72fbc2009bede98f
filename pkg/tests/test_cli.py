import json
import subprocess
import sys

import pytest

from leastmaj.cli import _glue_negative, run


@pytest.fixture
def files(tmp_path):
    def write(name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return str(p)

    return {
        "f": write("f.json", {"n": 2, "values": {"1": -1, "2": 2, "1,2": 0}}),
        "sq": write("sq.json", {"n": 2, "values": [0, 1, 1, 4]}),
        "l1": write(
            "l1.json",
            {
                "n": 2,
                "entries": [
                    {"S": s, "T": t, "value": 1}
                    for s, t in [([1], []), ([2], []), ([1, 2], []), ([], [1]), ([], [2]),
                                 ([], [1, 2]), ([1], [2]), ([2], [1])]
                ],
            },
        ),
        "c": write("c.json", {"n": 2, "points": [[0, 0], [1, 1]]}),
        "d": write("d.json", {"n": 2, "points": [[1, 0], [0, 1], ["3/5", "3/5"]]}),
        "bad": write("bad.json", {"n": 2, "values": [1, 2]}),
    }


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys, files):
    assert call(capsys, "check", "--fn", files["f"]) == (0, "submodular: true\n", "")
    code, out, _ = call(capsys, "check", "--fn", files["sq"], "--json")
    assert code == 1
    assert json.loads(out)["witness"] == [[1], [2]]
    assert call(capsys, "check", "--bifn", files["l1"])[0] == 0


def test_least_counterexample(capsys, files):
    code, out, _ = call(capsys, "least", "--fn", files["f"], "--kind", "abs", "--family", "P",
                        "--a", "1,1", "--b", "0,0")
    assert code == 0 and out == "(-1, 0)\n"


def test_least_json_and_integral(capsys, files):
    code, out, _ = call(capsys, "least", "--fn", files["f"], "--kind", "full", "--family", "B",
                        "--integral", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["point"] == [-1, 1] and doc["verified"]
    code, out, _ = call(capsys, "least", "--bifn", files["l1"], "--kind", "super",
                        "--family", "Btilde")
    assert code == 0 and out == "(1/2, 1/2)\n"


def test_compare(capsys):
    assert call(capsys, "compare", "--x", "-1,1", "--y", "-2,2", "--order", "full") == (
        0,
        "x ≺ y: true\n",
        "",
    )
    assert call(capsys, "compare", "--x", "0,0", "--y", "1,1", "--order", "full")[0] == 1
    assert call(capsys, "compare", "--x", "1,2", "--y", "2,2", "--order", "sub")[0] == 0


def test_vertex_and_enumerate(capsys, files):
    assert call(capsys, "vertex", "--fn", files["f"], "--pi", "2,1")[:2] == (0, "(-2, 2)\n")
    assert call(capsys, "vertex", "--bifn", files["l1"], "--pi", "1,2", "--sign", "+,-")[:2] == (
        0,
        "(1, 0)\n",
    )
    code, out, _ = call(capsys, "enumerate", "--fn", files["f"], "--family", "B", "--json")
    assert code == 0 and json.loads(out)["points"] == [[-2, 2], [-1, 1]]
    code, out, _ = call(capsys, "enumerate", "--bifn", files["l1"])
    assert out.splitlines()[-1] == "5 points"


def test_condition(capsys, files):
    assert call(capsys, "condition", "--fn", files["f"], "--x", "-1,1")[0] == 0
    code, out, _ = call(capsys, "condition", "--fn", files["f"], "--x", "-2,2", "--json")
    assert code == 1 and json.loads(out)["pair"] == [2, 1]


def test_characterize_and_witness(capsys, files):
    code, out, _ = call(capsys, "characterize", "--points", files["c"], "--family", "base")
    assert code == 1 and "unequal_sums" in out
    code, out, _ = call(capsys, "characterize", "--points", files["c"], "--family", "super")
    assert code == 0 and "(1, 1)" in out
    code, out, _ = call(capsys, "characterize", "--points", files["d"], "--family", "super",
                        "--continuous", "--json")
    doc = json.loads(out)
    assert code == 1 and {"kind": "prefix", "pi": [1, 2]} in doc["failures"]
    code, out, _ = call(capsys, "witness", "--points", files["d"], "--pi", "1,2", "--json")
    doc = json.loads(out)
    assert code == 1 and doc["shift"] == [0, 2] and doc["least"] is None


@pytest.mark.parametrize(
    "argv,code",
    [
        (["check", "--fn", "missing.json", "--json"], "file_not_found"),
        (["least", "--fn", "{f}", "--kind", "full", "--family", "P"], "unsupported"),
        (["vertex", "--fn", "{f}", "--pi", "1,1"], "usage"),
        (["check", "--fn", "{bad}", "--json"], "schema"),
        (["compare", "--x", "1", "--y", "1", "--a", "0", "--order", "full"], "usage"),
    ],
)
def test_errors_exit_2(capsys, files, argv, code):
    argv = [a.format(**files) for a in argv]
    rc, out, err = call(capsys, *argv)
    assert rc == 2
    assert f"error[{code}]" in err


def test_bad_usage_exit_2(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "compare", "--x", "1")[0] == 2


def test_glue_negative():
    assert _glue_negative(["--x", "-1,1", "--json"]) == ["--x=-1,1", "--json"]
    assert _glue_negative(["--x", "3"]) == ["--x", "3"]


def test_output_is_deterministic(files):
    argv = [sys.executable, "-m", "leastmaj.cli", "characterize", "--points", files["d"],
            "--family", "super", "--continuous", "--json"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == 1
    assert first.stdout == second.stdout and first.stdout
