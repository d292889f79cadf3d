import csv
import io
import json

import pytest

from niltl.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return _run


@pytest.mark.parametrize("word, expected", [("x3x1x2", "1 3 2"), ("3 1 2 1", "0"), ("", "1"),
                                            ("3,2,1,4,3", "3 2 1 4 3")])
def test_normalize(run, word, expected):
    n = "4" if "4" in word else "3"
    code, out, _ = run("normalize", n, word)
    assert code == 0
    assert out == expected + "\n"


def test_normalize_errors(run):
    code, out, err = run("normalize", "3", "1 5")
    assert code == 2 and out == "" and "not a generator index" in err
    code, _, err = run("normalize", "3", "x1y2")
    assert code == 2 and "cannot parse" in err


def test_normalize_json(run):
    code, out, _ = run("--format", "json", "normalize", "3", "x2x3x1x2")
    assert code == 0
    assert json.loads(out) == {"n": 3, "word": "2 1 3 2", "degree": 4, "runs": [[2, 2], [3, 2]],
                               "dyck": "UUUDUDDD", "perm": [3, 4, 1, 2], "zero": False}
    code, out, _ = run("normalize", "3", "1 1", "--format", "json")
    assert json.loads(out)["zero"] is True


def test_basis(run):
    code, out, _ = run("basis", "2")
    assert code == 0 and out.splitlines() == ["1", "1", "1 2", "2", "2 1"]
    _, out, _ = run("basis", "3", "--degree", "2")
    assert len(out.splitlines()) == 5
    _, out, _ = run("basis", "0")
    assert out == "1\n"


def test_basis_json_and_csv(run):
    _, out, _ = run("basis", "3", "--format", "json")
    data = json.loads(out)
    assert len(data) == 14
    assert all(set(d) == {"n", "word", "degree", "runs", "dyck", "perm"} for d in data)
    _, out, _ = run("--format", "csv", "basis", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["word"] for r in rows] == ["1", "1", "1 2", "2", "2 1"]
    assert rows[4] == {"n": "2", "word": "2 1", "degree": "2", "runs": "(2,2)",
                       "dyck": "UUUDDD", "perm": "3 1 2"}


def test_dim(run):
    assert run("dim", "3")[1] == "14\n"
    _, out, _ = run("dim", "5", "--format", "json")
    assert json.loads(out) == {"n": 5, "dimension": 132, "catalan": 132}


def test_triangle(run):
    _, out, _ = run("triangle", "3", "--format", "csv")
    assert out.splitlines()[-1] == "1,3,5,4,1"
    assert run("triangle", "0")[1] == "1\n"
    assert run("triangle", "2")[1].splitlines() == ["1", "1,1", "1,2,2"]
    _, out, _ = run("triangle", "2", "--format", "json")
    assert json.loads(out) == [{"n": 0, "counts": [1]}, {"n": 1, "counts": [1, 1]},
                               {"n": 2, "counts": [1, 2, 2]}]


@pytest.mark.parametrize("argv, expected", [
    (["to-dyck", "3 2 1", "-n", "3"], "UUUUDDDD"),
    (["from-dyck", "UDUDUDUD"], "1"),
    (["from-dyck", "(()())()"], "1 2"),
    (["to-perm", "2 1 3 2", "-n", "3"], "3 4 1 2"),
    (["from-perm", "3 4 1 2"], "2 1 3 2"),
    (["to-dyck", "", "-n", "2"], "UDUDUD"),
])
def test_convert(run, argv, expected):
    code, out, _ = run("convert", *argv)
    assert code == 0 and out == expected + "\n"


@pytest.mark.parametrize("argv, code, message", [
    (["to-dyck", "3 1 2", "-n", "3"], 1, "not canonical"),
    (["to-dyck", "1 1", "-n", "3"], 1, "zero"),
    (["to-perm", "2 3 2", "-n", "3"], 1, "zero"),
    (["from-perm", "3 2 1"], 1, "Not321Avoiding"),
    (["to-dyck", "3 2 1"], 2, "-n"),
    (["from-dyck", "DU"], 2, "below the baseline"),
    (["from-dyck", "UUDD", "-n", "3"], 1, "P_1"),
    (["from-perm", "1 1"], 2, "not a permutation"),
])
def test_convert_errors(run, argv, code, message):
    got, out, err = run("convert", *argv)
    assert got == code and out == ""
    assert message in err


def test_convert_ascii(run):
    _, out, _ = run("convert", "to-dyck", "1", "-n", "1", "--ascii")
    assert out == "UUDD\n /\\\n/  \\\n"


def test_verify(run):
    code, out, _ = run("verify", "3")
    assert code == 0
    assert out.count("[ok]") == 4 * 6 and "FAIL" not in out
    code, out, _ = run("verify", "3", "--oracle", "--oracle-length", "5", "--format", "json")
    assert code == 0
    assert all(r["ok"] for r in json.loads(out))
    assert any(r["check"] == "oracle basis" for r in json.loads(out))


def test_verify_reports_failure(run, monkeypatch):
    import niltl.enumeration
    monkeypatch.setattr(niltl.enumeration, "catalan", lambda m: -1)
    code, out, err = run("verify", "1")
    assert code == 1
    assert "FAIL" in out and "verification failed" in err


def test_usage_errors(run):
    for argv in (["verify", "-1"], ["dim", "x"], ["bogus"], ["triangle", "--format", "xml", "2"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_output_file(run, tmp_path):
    target = tmp_path / "tri.csv"
    code, out, _ = run("triangle", "4", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[3] == "1,3,5,4,1"


def test_deterministic(run):
    first = run("basis", "4", "--format", "json")[1]
    assert run("basis", "4", "--format", "json")[1] == first


def test_figures(run, tmp_path):
    tri = tmp_path / "triangle.png"
    assert run("triangle", "5", "--figure", str(tri))[0] == 0
    assert tri.read_bytes().startswith(b"\x89PNG")

    path_svg = tmp_path / "path.svg"
    assert run("convert", "to-dyck", "2 1 3 2", "-n", "3", "--figure", str(path_svg))[0] == 0
    svg = path_svg.read_text()
    assert "<svg" in svg
    again = tmp_path / "again.svg"
    run("convert", "to-dyck", "2 1 3 2", "-n", "3", "--figure", str(again))
    assert again.read_text() == svg

    grid = tmp_path / "basis.pdf"
    assert run("basis", "3", "--figure", str(grid))[0] == 0
    assert grid.read_bytes().startswith(b"%PDF")

    code, _, err = run("convert", "to-perm", "1", "-n", "1", "--figure", str(tmp_path / "x.png"))
    assert code == 2 and "--figure" in err
