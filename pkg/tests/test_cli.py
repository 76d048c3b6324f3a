import json
import subprocess
import sys
from pathlib import Path

import pytest

from griess.cli import main, run

GOLDEN = Path(__file__).parent / "golden"
CASES = sorted(p.stem for p in GOLDEN.glob("*.args"))


def _run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


@pytest.mark.parametrize("name", CASES)
def test_golden(name, capsys):
    argv = (GOLDEN / f"{name}.args").read_text().split()
    code, out = _run(argv, capsys)
    assert out == (GOLDEN / f"{name}.out").read_text()
    assert code == (1 if name == "matsuo_singular" else 0)


@pytest.mark.parametrize("name", CASES)
def test_json_roundtrip(name):
    text = (GOLDEN / f"{name}.out").read_text().rstrip("\n")
    assert json.dumps(json.loads(text), separators=(",", ":"), ensure_ascii=False) == text


def test_documented_examples(capsys):
    assert _run(["matsuo", "--c", "24", "--dimv2", "196884"], capsys)[1].strip() == \
        '{"d0":"96256","d_half":"4371","d_16":"96256","tau":"4372"}'
    assert _run(["moments", "--c", "47/2", "--h", "3/2", "--d", "4371", "--e-norm", "7/20",
                 "--tmax", "3"], capsys)[1].strip() == '["1953/10","2163/100","5313/1000"]'
    rec = json.loads(_run(["casimir", "--degree", "4"], capsys)[1])
    assert rec["coefficients"] == {"[4]": "3*c*d*h-6*d*h^2+12*d*h", "[2,2]": "10*d*h^2+2*d*h"}
    assert rec["denominator"] == "5*c^2+22*c"


def test_usage_errors(capsys):
    assert main(["nosuch"]) == 2
    assert main(["matsuo", "--c", "abc", "--dimv2", "1"]) == 2
    assert main(["casimir"]) == 2
    assert "usage" in capsys.readouterr().err


def test_domain_error_record():
    res = run(["assign-eigen", "--allowed", "0,1/2", "--mults", "1,1", "--moments", "1,1/2"])
    assert res.exit_code == 1 and res.code == "NoSolution"
    res = run(["casimir", "--degree", "11"])
    assert res.exit_code == 1 and res.code == "UnsupportedDegree"


def test_pretty_record(capsys):
    code, out = _run(["--pretty", "sigma-trace", "--mult", "0:1", "--signs", "0:-1"], capsys)
    rec = json.loads(out)
    assert code == 0
    assert rec["command"] == "sigma-trace" and rec["outputs"] == "-1" and rec["status"] == "ok"


def test_verify_a_exit_code_on_corruption(tmp_path, monkeypatch, capsys):
    from griess.data import CHECKSUMS, data_dir
    for name in CHECKSUMS:
        (tmp_path / name).write_bytes((data_dir() / name).read_bytes())
    (tmp_path / "appendix_a.txt").write_text("corrupt\n")
    monkeypatch.setenv("GRIESS_DATA_DIR", str(tmp_path))
    from griess import data
    data._cached.cache_clear()
    try:
        code, out = _run(["verify-appendix-a", "--degree", "4"], capsys)
    finally:
        data._cached.cache_clear()
    assert code == 1
    assert json.loads(out)["code"] == "ChecksumMismatch"


def test_verify_a_full(capsys):
    code, out = _run(["verify-appendix-a"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["total"] == rec["passed"] == 41


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "griess", "minimal-series", "--p", "7", "--q", "4"],
                         capture_output=True, text=True, check=True).stdout
    rec = json.loads(out)
    assert rec["c"] == "-13/14" and rec["table"]["6,1"] == "5/2"
