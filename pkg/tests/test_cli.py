import io
import json
import subprocess
import sys

import pytest

from matroidlab.cli import main
from matroidlab.matroids import uniform


def run(argv, capsys, monkeypatch=None, stdin_text=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write_matroid(tmp_path, m, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(m.to_json()))
    return str(path)


def test_gen_named_pipes_into_check(capsys, monkeypatch):
    code, gen_out, _ = run(["gen", "named", "dualk33"], capsys)
    assert code == 0
    code, out, _ = run(
        ["nbc", "check", "--field", "gf2", "--method", "both"],
        capsys, monkeypatch, stdin_text=gen_out,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "basis"
    assert rep["l_size"] == 20
    assert rep["h"] == [1, 5, 9, 5, 0]
    assert "timing_seconds" not in rep


def test_gen_theta_pipes_into_check(capsys, monkeypatch):
    code, gen_out, _ = run(["gen", "theta", "2,3"], capsys)
    assert code == 0
    wrapped = json.loads(gen_out)
    assert set(wrapped) == {"matroid", "ordering", "name"}
    assert wrapped["ordering"][0] == "p"
    code, out, _ = run(["nbc", "check"], capsys, monkeypatch, stdin_text=gen_out)
    assert code == 0
    assert json.loads(out)["verdict"] == "basis"


def test_hvector_exact_keys(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(4, 5))
    code, out, _ = run(["hvector", "--input", path], capsys)
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"f", "h", "facets"}
    assert data["f"] == [1, 5, 10, 10, 4]
    assert data["h"] == [1, 1, 1, 1, 0]
    assert data["facets"] == 4


def test_info_fields(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 3))
    code, out, _ = run(["info", "--input", path], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 2
    assert data["corank"] == 1
    assert data["bases"] == 3
    assert data["circuits"] == 1
    assert data["loops"] == [] and data["coloops"] == []
    assert data["standard_orderings"] == 6


def test_check_exit_one_when_not_basis(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 4))
    code, out, _ = run(
        ["nbc", "check", "--input", path, "--field", "gf2"], capsys
    )
    assert code == 1
    rep = json.loads(out)
    assert rep["verdict"] == "not_basis"
    assert rep["reason"] == "lsop_invalid"


def test_bad_json_exits_two(capsys, monkeypatch):
    code, out, err = run(["info"], capsys, monkeypatch, stdin_text="{nope")
    assert code == 2
    assert out == ""
    assert "matroidlab:" in err


def test_missing_file_exits_two(capsys):
    code, _, err = run(["info", "--input", "/no/such/file.json"], capsys)
    assert code == 2
    assert "matroidlab:" in err


def test_unknown_fixture_exits_two(capsys):
    code, _, err = run(["gen", "named", "nope"], capsys)
    assert code == 2
    assert "matroidlab:" in err


def test_gen_without_argument_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "theta"])
    assert exc.value.code == 2


def test_gen_list(capsys):
    code, out, _ = run(["gen", "list"], capsys)
    assert code == 0
    names = json.loads(out)
    assert set(names) == {"dualk33", "dualk33raw", "k33", "k4", "r10"}
    assert all(isinstance(v, str) and v for v in names.values())


def test_byte_stable_output(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 4))
    runs = []
    for _ in range(2):
        code, out, _ = run(
            ["nbc", "search", "--input", path, "--field", "gf2",
             "--policy", "sample:10:7"],
            capsys,
        )
        assert code == 1
        runs.append(out)
    assert runs[0] == runs[1]
    assert runs[0].endswith("\n")


def test_search_exit_codes_and_shard_merge(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 4))
    code, out, _ = run(
        ["nbc", "search", "--input", path, "--field", "gf2"], capsys
    )
    assert code == 1
    whole = json.loads(out)
    assert whole["tallies"]["lsop_invalid"] == 24
    assert whole["completed"] is True

    merged = dict.fromkeys(whole["tallies"], 0)
    for i in range(3):
        code, out, _ = run(
            ["nbc", "search", "--input", path, "--field", "gf2",
             "--shard", f"{i}/3"],
            capsys,
        )
        assert code == 1
        part = json.loads(out)
        assert part["shard"] == f"{i}/3"
        for k, v in part["tallies"].items():
            merged[k] += v
    assert merged == whole["tallies"]

    good = write_matroid(tmp_path, uniform(2, 3), "u23.json")
    code, out, _ = run(
        ["nbc", "search", "--input", good, "--field", "q",
         "--policy", "first-hit"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["first_basis"] == {
        "index": 0, "ordering": ["e3", "e1", "e2"]
    }


def test_search_resume(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 4))
    state = str(tmp_path / "state.json")
    first = run(
        ["nbc", "search", "--input", path, "--field", "gf2",
         "--resume", state, "--checkpoint-every", "5"],
        capsys,
    )
    again = run(
        ["nbc", "search", "--input", path, "--field", "gf2",
         "--resume", state],
        capsys,
    )
    assert first[0] == again[0] == 1
    assert json.loads(first[1])["tallies"] == json.loads(again[1])["tallies"]
    assert json.loads(again[1])["completed"] is True


def test_ordering_precedence(tmp_path, capsys, monkeypatch):
    m = uniform(2, 3)
    wrapped = json.dumps({"matroid": m.to_json(), "ordering": ["e3", "e1", "e2"]})

    code, out, _ = run(["lsop", "--field", "q"], capsys, monkeypatch, stdin_text=wrapped)
    assert code == 0
    assert json.loads(out)["ordering"] == ["e3", "e1", "e2"]

    code, out, _ = run(
        ["lsop", "--field", "q", "--ordering", "e2,e1,e3"],
        capsys, monkeypatch, stdin_text=wrapped,
    )
    assert code == 0
    assert json.loads(out)["ordering"] == ["e2", "e1", "e3"]

    path = write_matroid(tmp_path, m)
    code, out, _ = run(["lsop", "--field", "q", "--input", path], capsys)
    assert code == 0
    assert json.loads(out)["ordering"] == ["e1", "e2", "e3"]


def test_lsop_report(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 3))
    code, out, _ = run(
        ["lsop", "--input", path, "--field", "q", "--standard-monomials"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert sorted(data["forms"]) == ["-x1 + x2", "x1 + x3"]
    assert data["d"] == [1, 1, 1]
    assert data["lower"] == ["1", "x1"]
    assert data["valid"] is True
    assert data["invalid_facet"] is None
    assert data["groebner_standard_monomials"] == ["1", "x1"]
    assert data["term_order"] == "grlex"
    assert data["generators"][0]["polynomial"] == "-x1^2"


def test_lsop_reports_invalid_facet(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 4))
    code, out, _ = run(["lsop", "--input", path, "--field", "gf2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is False
    assert data["invalid_facet"] is not None


def test_timing_flag_adds_key(tmp_path, capsys):
    path = write_matroid(tmp_path, uniform(2, 3))
    code, out, _ = run(
        ["nbc", "check", "--input", path, "--field", "q", "--timing"], capsys
    )
    assert code == 0
    assert "timing_seconds" in json.loads(out)


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "matroidlab.cli", "gen", "list"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "r10" in json.loads(proc.stdout)
