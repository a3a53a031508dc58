import json
import subprocess
import sys

import pytest

from cubicpart.cli import main
from cubicpart.congruence import certificate_from_json, verify_progression


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_single(capsys):
    assert run(capsys, "compute", "--k", "2", "--n", "5")[:2] == (0, "12\n")
    assert run(capsys, "compute", "--k", "2", "--n", "0")[:2] == (0, "1\n")


def test_compute_all_methods(capsys):
    code, out, _ = run(capsys, "compute", "--k", "2", "--range", "0..5", "--all-methods")
    rows = out.strip().splitlines()[1:]
    assert code == 0 and len(rows) == 6 and all(r.endswith("AGREE") for r in rows)


def test_compute_disagreement_exit_code(capsys, monkeypatch):
    import cubicpart.partitions as parts
    from cubicpart.partitions import PartitionTable

    real = parts.pk_table

    def broken(k, order, method="convolution"):
        t = real(k, order, method)
        if method == "sigma-recursion":
            return PartitionTable(t.kind, k, method, t.values[:-1] + (t.values[-1] + 1,))
        return t

    monkeypatch.setattr(parts, "pk_table", broken)
    code, out, _ = run(capsys, "compute", "--k", "2", "--range", "0..5", "--all-methods")
    assert code == 1 and "DISAGREE" in out


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--k", "3", "--range", "0..3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [r["values"]["convolution"] for r in data["rows"]] == [1, 1, 2, 4]


def test_verify_preset(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--preset", "theorem-2.1", "--out", str(tmp_path))
    assert code == 0
    assert out.count("PASS") == 2 and out.count("lemma-complete") == 2
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["cert-u11-m297-t161.json", "cert-u11-m297-t62.json"]
    for f in tmp_path.iterdir():
        cert = certificate_from_json(f.read_text())
        assert cert.all_zero and cert.status == "lemma-complete"
        # re-verifying the parsed claim reproduces the file byte for byte
        assert verify_progression(cert.claim).dumps() == f.read_text()


def test_verify_mod3(capsys):
    code, out, _ = run(capsys, "verify", "--family", "p2", "--mod", "3", "--m", "3", "--t", "2", "--depth", "1000")
    assert code == 0 and out.startswith("PASS")


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--family", "p2", "--mod", "11", "--m", "297", "--t", "63", "--depth", "88")
    assert code == 1 and "FAIL" in out and "first witness: n=0" in out


def test_verify_claim_file(capsys, tmp_path):
    run(capsys, "verify", "--preset", "theorem-2.1", "--depth", "88", "--out", str(tmp_path))
    path = tmp_path / "cert-u11-m297-t62.json"
    code, out, _ = run(capsys, "verify", "--claim", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)[0] == json.loads(path.read_text())


def test_verify_malformed_claim_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "--claim", str(bad))[0] == 2
    bad.write_text(json.dumps({"modulus": 3}))
    assert run(capsys, "verify", "--claim", str(bad))[0] == 2


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--family", "p2", "--mod", "3")[0] == 2
    assert run(capsys, "verify", "--family", "q2", "--mod", "3", "--m", "3", "--t", "2", "--depth", "5")[0] == 2
    assert run(capsys, "verify", "--bogus")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_index_cap(capsys):
    args = ["verify", "--family", "p2", "--mod", "3", "--m", "3", "--t", "2", "--depth", "1000", "--max-index", "100"]
    assert run(capsys, *args)[0] == 2
    assert run(capsys, *args, "--no-index-cap")[0] == 0


@pytest.mark.parametrize("t", [62, 161])
def test_bound_presets(capsys, t):
    code, out, _ = run(capsys, "bound", "--preset", f"theorem-2.1-t{t}")
    assert code == 0
    assert f"orbit: {{{t}}}" in out and "floor(v) = 88" in out and "hypotheses: pass" in out


def test_bound_flags_json(capsys):
    code, out, _ = run(
        capsys, "bound", "--m", "297", "--M", "22", "--N", "66", "--t", "62",
        "--r", "1:10,2:-1,11:-1,22:0", "--r-prime", "1:4,2:2,22:1", "--format", "json",
    )
    data = json.loads(out)
    assert code == 0 and data["v"] == "2125/24" and data["floor_v"] == 88 and data["orbit"] == [62]
    assert len(data["hypotheses"]) == 8


def test_bound_degenerate(capsys):
    code, out, _ = run(capsys, "bound", "--m", "5", "--M", "1", "--N", "1", "--t", "3", "--r", "1:0")
    assert code == 0 and "v = -2/5" in out


def test_bound_bad_divisor(capsys):
    code, _, err = run(capsys, "bound", "--m", "5", "--M", "2", "--N", "1", "--t", "3", "--r", "3:1")
    assert code == 2 and "does not divide" in err
    code, _, err = run(capsys, "bound", "--m", "5", "--M", "2", "--N", "6", "--t", "3", "--r", "2:1", "--r-prime", "4:1")
    assert code == 2 and "--r-prime" in err


def test_split(capsys):
    code, out, _ = run(capsys, "split", "--n", "0")
    assert code == 0 and "6A+3B          = 3" in out and "i=j=k solutions: 0" in out
    code, out, _ = run(capsys, "split", "--n", "1")
    assert "6A+3B          = 12" in out


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--family", "p2", "--mod", "3", "--m", "3", "--depth", "300")
    assert code == 0 and out.splitlines()[0] == "EMPIRICAL - no proof status" and out.splitlines()[-1] == "{2}"
    code, out, _ = run(capsys, "scan", "--family", "p2", "--mod", "11", "--m", "297", "--depth", "88", "--format", "json")
    data = json.loads(out)
    assert {62, 161} <= set(data["survivors"]) and data["status"] == "empirical"
    code, out, _ = run(capsys, "scan", "--family", "p2", "--mod", "2", "--m", "1", "--depth", "10")
    assert out.splitlines()[-1] == "{}"


def test_module_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "cubicpart", "compute", "--n", "5"], capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout == "12\n"
    bad = subprocess.run([sys.executable, "-m", "cubicpart", "compute", "--unknown"], capture_output=True, text=True)
    assert bad.returncode == 2
