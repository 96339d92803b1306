import json
import subprocess
import sys


from splitvar.cli import OUT_ENV, main
from splitvar.eigenbasis import build_eigensystem
from splitvar.polyring import LaurentPoly, RingSpec
from splitvar.splitkernel import WeightedIdeal, generate
from splitvar.veronese import toric_ideal


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_generate_json_round_trip(capsys):
    code, out = run(capsys, "generate", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["verified"] and len(data["generators"]) == 79
    assert WeightedIdeal.from_json(data).generators == generate(3)[0].generators


def test_byte_determinism(capsys, tmp_path):
    for cmd in (["generate", "--n", "2"], ["find-point", "--q", "7", "--a", "6", "--seed", "4"],
                ["eval", "--q", "7", "--budget", "20", "--seed", "3"]):
        _, first = run(capsys, *cmd)
        _, second = run(capsys, *cmd)
        assert first == second


def test_cas_text_header(capsys):
    code, out = run(capsys, "generate", "--n", "3", "--format", "cas-text")
    assert code == 0
    lines = out.splitlines()
    assert "zeta^2 + zeta + 1" in lines[1]
    assert lines[3] == "# relations: a*a_inv - 1, b*b_inv - 1"
    assert sum(1 for ln in lines if ln.endswith(";")) == 79
    assert "^(-" not in out


def test_toric_and_eigenbasis(capsys):
    code, out = run(capsys, "toric", "--n", "3")
    data = json.loads(out)
    assert code == 0 and data["count"] == 27 and data["reference_equal"]
    assert data["categories"] == {"1": 3, "2": 3, "3": 6, "4": 12, "5": 3}
    ring = RingSpec.from_json(data["ring"])
    assert [LaurentPoly.from_json({"terms": t}, ring) for t in data["terms"]] == toric_ideal(3)
    code, out = run(capsys, "eigenbasis", "--n", "3")
    data = json.loads(out)
    assert code == 0 and len(data["vectors"]) == 10
    assert data["unit_weights"] == {"alpha": [1, 0], "alpha^-1": [2, 0], "beta": [0, 1], "beta^-1": [0, 2]}
    ring = RingSpec.from_json(data["ring"])
    es = build_eigensystem(3)
    assert [LaurentPoly.from_json({"terms": v["terms"]}, ring) for v in data["vectors"]] == [
        v.vector for v in es.vectors
    ]


def test_usage_errors(capsys):
    assert main(["generate", "--n", "1"]) == 2
    assert main(["generate", "--n", "4"]) == 2
    assert main(["crosscheck", "--n", "2"]) == 2
    assert main(["find-point", "--q", "5"]) == 2
    assert main(["find-point", "--q", "7", "--a", "0"]) == 2
    assert main(["bogus"]) == 2
    assert main([]) == 2


def test_crosscheck_exit_codes(capsys, tmp_path):
    code, out = run(capsys, "crosscheck")
    assert code == 0 and json.loads(out)["items"] == 79
    bad = tmp_path / "ref.txt"
    bad.write_text("z7^2 - 1/a*z8*z9 - 3*z4*z10\nz7^2 + 1/a*z8*z9 - 3*z4*z10\n")
    code, out = run(capsys, "crosscheck", "--reference", str(bad))
    assert code == 1
    assert json.loads(out)["theta_dirty"] == [2]


def test_verify_from_file(capsys, tmp_path):
    assert main(["generate", "--n", "2", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    path = tmp_path / "generators-n2.json"
    code, out = run(capsys, "verify", "--input", str(path))
    assert code == 0 and json.loads(out)["passed"]
    data = json.loads(path.read_text())
    data["text"] = []
    data["generators"][0] = [{"exps": [1, 0, 0, 0, 0], "coeff": ["1"]}]
    path.write_text(json.dumps(data))
    assert main(["verify", "--input", str(path)]) == 1
    assert main(["verify", "--input", str(tmp_path / "missing.json")]) == 2


def test_out_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(OUT_ENV, str(tmp_path / "env"))
    assert main(["find-point", "--q", "7", "--format", "cas-text"]) == 0
    assert (tmp_path / "env" / "point-q7-a1-b1.txt").exists()
    assert main(["toric", "--n", "2", "--out", str(tmp_path / "flag")]) == 0
    assert (tmp_path / "flag" / "toric-n2.json").exists()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "splitvar", "toric", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 1
