import json

import pytest

from tanglebounds.cli import main
from tanglebounds.fixtures import build_corpus, dump_corpus

from conftest import TREFOIL_LEFT


@pytest.fixture
def pd_file(tmp_path):
    def write(text, name="knot.pd"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_invariants_text(pd_file, capsys):
    assert main(["invariants", pd_file(TREFOIL_LEFT)]) == 0
    out = capsys.readouterr().out
    assert "T_L: 1" in out and "crossings: 3" in out


def test_invariants_json_unknot(pd_file, capsys):
    assert main(["invariants", "--json", pd_file("L0(1)")]) == 0
    row = json.loads(capsys.readouterr().out)
    assert row["crossings"] == 0 and row["tw"] == 0 and row["T_L"] == 0


def test_invariants_dumps(pd_file, capsys):
    assert main(["invariants", pd_file(TREFOIL_LEFT), "--dump-graph", "B", "--dump-twist"]) == 0
    out = capsys.readouterr().out
    assert not out.endswith("\n\n")


def test_invariants_over_cap_leaves_jones_blank(pd_file, capsys):
    assert main(["--cap", "2", "invariants", "--json", pd_file(TREFOIL_LEFT)]) == 0
    row = json.loads(capsys.readouterr().out)
    assert row["jones"] is None and row["tw"] == 1


def test_parse_error_exit_2(pd_file, capsys):
    assert main(["invariants", pd_file("X(1,2,3,4) Y")]) == 2
    assert "line 1, column 12" in capsys.readouterr().err


def test_missing_file_exit_2(tmp_path):
    assert main(["invariants", str(tmp_path / "nope.pd")]) == 2


def test_bad_arguments_exit_2():
    assert main(["family", "torus", "--q", "x"]) == 2
    assert main([]) == 2
    assert main(["--cap", "-1", "verify", "torus"]) == 2


def test_torus_csv_header_only(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["family", "torus", "--kmax", "0", "--csv", str(out)]) == 0
    assert out.read_text() == "q,k,p,C,T_L,alpha,beta,beta_prime,alpha_prime\n"


def test_torus_csv_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["family", "torus", "--kmax", "4", "--csv", str(a)]) == 0
    assert main(["family", "torus", "--kmax", "4", "--csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert len(lines) == 5 and lines[1].startswith("3,1,8,")


def test_whitehead_json(capsys):
    assert main(["family", "whitehead", "--mmax", "2", "--jones-max", "0", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [(r["m"], r["crossings"]) for r in rows] == [(1, 14), (2, 26)]
    assert [(r["e_prime"], r["v_prime"]) for r in rows] == [(8, 7), (13, 11)]


def test_verify_suite_ok(capsys):
    assert main(["verify", "torus"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert [line.split(":")[0] for line in out] == ["criterion 2", "criterion 3"]


def test_verify_unknown_suite():
    assert main(["verify", "nosuch"]) == 2


def test_verify_json_excludes_timing(capsys):
    assert main(["verify", "bounds", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] and "elapsed" not in doc["checks"][0]


def _corrupt(tmp_path, name, **change):
    fixtures = build_corpus()
    data = json.loads(dump_corpus(fixtures))
    for d in data:
        if d["name"] == name:
            for k, v in change.items():
                d[k] = v(d.get(k)) if callable(v) else v
    p = tmp_path / "corpus.json"
    p.write_text(json.dumps(data))
    return str(p)


def test_verify_flags_wrong_crosscap(tmp_path, capsys):
    path = _corrupt(tmp_path, "figure_eight", known_C=50)
    assert main(["verify", "bounds", "--corpus", path]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "figure_eight" in out and "C = 50" in out


def test_verify_flags_mislabelled_fixture(tmp_path, capsys):
    path = _corrupt(tmp_path, "pretzel_3_3_m2", tags=lambda t: (t or []) + ["reduced_alternating"])
    assert main(["verify", "twist", "--corpus", path]) == 1
    assert "pretzel_3_3_m2" in capsys.readouterr().out


def test_verify_unreadable_corpus(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["verify", "--corpus", str(p)]) == 2


def test_empty_input_exit_2(pd_file, capsys):
    assert main(["invariants", pd_file("")]) == 2
    assert "empty diagram" in capsys.readouterr().err


def test_cap_does_not_leak(pd_file, monkeypatch):
    import os

    monkeypatch.delenv("TANGLEBOUNDS_CAP", raising=False)
    main(["--cap", "2", "invariants", pd_file(TREFOIL_LEFT)])
    assert "TANGLEBOUNDS_CAP" not in os.environ
