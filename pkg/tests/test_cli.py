from __future__ import annotations

import pytest

from monosig.cli import run
from monosig.sigcore import SignatureFunction, emit_signature


@pytest.fixture
def sig_file(tmp_path):
    def write(name: str, n: int, signs: str) -> str:
        path = tmp_path / name
        path.write_text(emit_signature(SignatureFunction(n, signs)))
        return str(path)

    return write


def test_validate_valid(sig_file, capsys):
    path = sig_file("ok.sig", 4, "+++-")
    assert run(["validate", path, "--level", "semisimple"]) == 0
    assert "valid=true" in capsys.readouterr().out


def test_validate_invalid_prints_witness(sig_file, capsys):
    path = sig_file("bad.sig", 4, "+-+-")
    assert run(["validate", path, "--level", "semisimple"]) == 2
    out = capsys.readouterr().out
    assert "valid=false" in out
    assert "witness=(1,2,3,4)" in out
    assert "form=+-+-" in out


def test_validate_malformed_file_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "junk.sig"
    path.write_text("sig v1\nn 4\n+++\n")
    assert run(["validate", str(path)]) == 1


def test_missing_file_is_a_usage_error(tmp_path):
    assert run(["validate", str(tmp_path / "nope.sig")]) == 1


def test_stats_output(sig_file, capsys):
    path = sig_file("allplus5.sig", 5, "+" * 10)
    assert run(["stats", path]) == 0
    out = capsys.readouterr().out
    assert "convex_quads=5" in out
    assert "identity=ok" in out
    assert "two_page=true" in out


def test_stats_rejects_invalid_signature(sig_file, capsys):
    path = sig_file("bad.sig", 4, "+-+-")
    assert run(["stats", path]) == 2


def test_minimize_table_row(capsys):
    assert run(["minimize", "-n", "5"]) == 0
    out = capsys.readouterr().out
    assert "minimum=1" in out
    assert "Z=1" in out
    assert "classes=1" in out
    assert "complete=true" in out


def test_minimize_long_gate(capsys):
    assert run(["minimize", "-n", "9"]) == 1


def test_minimize_with_worker_processes(capsys):
    assert run(["minimize", "-n", "5", "--threads", "2"]) == 0
    out = capsys.readouterr().out
    assert "minimum=1" in out and "classes=1" in out


def test_minimize_writes_and_resumes_checkpoints(tmp_path, capsys):
    ckpt = tmp_path / "n6.ckpt"
    assert run(["minimize", "-n", "6", "--checkpoint", str(ckpt)]) == 0
    first = capsys.readouterr().out
    assert "minimum=3" in first
    # resuming a finished checkpoint reports the stored result
    assert run(["minimize", "-n", "6", "--checkpoint", str(ckpt), "--resume"]) == 0
    again = capsys.readouterr().out
    assert "minimum=3" in again and "classes=1" in again


def test_stats_handles_two_vertices(tmp_path, capsys):
    path = tmp_path / "two.sig"
    path.write_text("sig v1\nn 2\n\n")
    assert run(["stats", str(path)]) == 0
    assert "convex_quads=0" in capsys.readouterr().out


def test_enumerate_counts(capsys):
    assert run(["enumerate", "-n", "4", "--level", "semisimple"]) == 0
    assert "count=10" in capsys.readouterr().out
    assert run(["enumerate", "-n", "4", "--level", "pseudolinear"]) == 0
    assert "count=8" in capsys.readouterr().out


def test_enumerate_print_lists_signatures(capsys):
    assert run(["enumerate", "-n", "3", "--level", "simple", "--print"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "+" in out and "-" in out


def test_canonical(sig_file, capsys):
    path = sig_file("one.sig", 3, "-")
    assert run(["canonical", path]) == 0
    assert capsys.readouterr().out == "sig v1\nn 3\n+\n"


def test_classes_reports_two_page_flags(capsys):
    assert run(["classes", "-n", "5"]) == 0
    out = capsys.readouterr().out
    assert "classes=1" in out
    assert "class=1 size=28" in out
    assert "two_page=true" in out


def test_shelling_check_and_find(sig_file, capsys):
    path = sig_file("p4.sig", 4, "+++-")
    assert run(["shelling", path, "--order", "2,1,3,4"]) == 0
    assert "shellable=true" in capsys.readouterr().out
    assert run(["shelling", path]) == 0
    assert "shelling=1,2,3,4" in capsys.readouterr().out


def test_shelling_rejects_bad_order(sig_file, capsys):
    path = sig_file("p4.sig", 4, "+++-")
    assert run(["shelling", path, "--order", "1,2,zzz"]) == 1
    assert run(["shelling", path, "--order", "1,2,3"]) == 1  # not a permutation


def test_lambda_unlambda_round_trip(sig_file, tmp_path, capsys):
    path = sig_file("allplus4.sig", 4, "++++")
    lam_path = tmp_path / "m.lam"
    assert run(["lambda", path, "-o", str(lam_path)]) == 0
    assert run(["unlambda", str(lam_path)]) == 0
    assert capsys.readouterr().out == "sig v1\nn 4\n++++\n"


def test_unlambda_rejects_unrealizable(tmp_path, capsys):
    path = tmp_path / "all1.lam"
    path.write_text("lam v1\nn 4\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n")
    assert run(["unlambda", str(path)]) == 2


def test_realize_writes_svg_and_json(sig_file, tmp_path, capsys):
    path = sig_file("allplus4.sig", 4, "++++")
    svg_path = tmp_path / "out.svg"
    json_path = tmp_path / "out.json"
    assert run(["realize", path, "-o", str(svg_path)]) == 0
    assert run(["realize", path, "-o", str(json_path)]) == 0
    svg = svg_path.read_text()
    assert svg.count("<circle") == 4
    assert svg.count("<polyline") == 6
    assert '"crossings": 1' in json_path.read_text()


def test_realize_rejects_invalid(sig_file):
    path = sig_file("bad.sig", 4, "+-+-")
    assert run(["realize", path]) == 2


def test_realize_is_deterministic(sig_file, tmp_path):
    path = sig_file("allplus5.sig", 5, "+" * 10)
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(["realize", path, "-o", str(a)]) == 0
    assert run(["realize", path, "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
