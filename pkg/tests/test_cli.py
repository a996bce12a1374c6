import json
import subprocess
import sys

import pytest

from hypheron.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_curve_emit_angle(capsys):
    code, out, _ = run(capsys, "curve", "--family", "angle", "--m", "1/2", "--u", "1", "--emit")
    assert code == 0
    rec = json.loads(out)
    assert (rec["a2"], rec["a4"], rec["a6"]) == ("-15/4", "25/8", "0")
    assert rec["discriminant"] == rec["discriminantClosedForm"] == "15625/64"
    assert rec["specialPoints"]["P"] == "(45/16, -75/64)"


@pytest.mark.parametrize(
    "argv",
    [
        ("curve", "--family", "side", "--v", "2", "--w", "3"),
        ("curve", "--family", "median", "--u", "2", "--w", "3"),
        ("curve", "--family", "bisector", "--n", "1/3", "--u", "1/2"),
    ],
)
def test_curve_other_families(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert "discriminant" in out


def test_curve_missing_or_bad_parameters(capsys):
    assert run(capsys, "curve", "--family", "side", "--v", "2")[0] == 2
    assert run(capsys, "curve", "--family", "side", "--v", "1", "--w", "3")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("heron-angle", "--area", "0", "--angle", "1"),
        ("heron-angle", "--area", "1", "--angle", "2"),
        ("heron-angle", "--area", "0.5", "--angle", "1"),
        ("heron-side", "--v", "1/2", "--w", "3"),
        ("median", "--u", "1", "--w", "3"),
        ("bisector", "--n", "3/2", "--u", "1"),
        ("heron-angle", "--area", "1/2", "--angle", "1", "--kmax", "-1"),
    ],
)
def test_invalid_parameters_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_heron_angle_none_found_exit_3(capsys):
    code, out, _ = run(capsys, "heron-angle", "--area", "1/2", "--angle", "1", "--kmax", "1", "--json")
    assert code == 3
    assert json.loads(out) == []


def test_heron_angle_certificates_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "heron-angle", "--area", "1/2", "--angle", "1", "--kmax", "20", "--json")
    assert code == 0
    certs = json.loads(out)
    assert len(certs) == 10
    for c in certs:
        assert c["kind"] == "heron-angle" and c["report"]["heron"] is True
        assert isinstance(c["k"], int) and isinstance(c["family"]["m"], str)
    path = tmp_path / "cert.json"
    path.write_text(out)
    assert run(capsys, "verify", str(path))[0] == 0

    # tamper with one rational
    certs[0]["triangle"]["tGamma"] = "1/7"
    path.write_text(json.dumps(certs))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "certificate 0: FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("median", "--u", "2", "--w", "3", "--kmax", "10"),
        ("bisector", "--n", "1/3", "--u", "1/2", "--kmax", "4"),
    ],
)
def test_cevian_certificates_verify(capsys, tmp_path, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    certs = json.loads(out)
    assert certs
    path = tmp_path / "c.json"
    path.write_text(out)
    assert run(capsys, "verify", str(path))[0] == 0
    for bad_point in ("inf", "(0, 1)"):
        certs[-1]["point"] = bad_point
        path.write_text(json.dumps(certs))
        assert run(capsys, "verify", str(path))[0] == 1


def test_verify_bad_files(capsys, tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    assert run(capsys, "verify", str(p))[0] == 1
    p.write_text('{"kind": "heron-angle"}')
    assert run(capsys, "verify", str(p))[0] == 1
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 1


def test_heron_side_deterministic(capsys):
    a = run(capsys, "heron-side", "--v", "2", "--w", "3", "--height", "1000", "--json")
    b = run(capsys, "heron-side", "--v", "2", "--w", "3", "--height", "1000", "--json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["certificates"] == []


def test_equilateral(capsys):
    code, out, _ = run(capsys, "equilateral", "--verify", "--height", "300", "--json")
    assert code == 0
    rep = json.loads(out)
    assert [r["case"] for r in rep] == ["heron", "median-rational-side", "median-rational-angle"]
    assert len(rep[1]["torsion"]["group"]) == 8
    assert all(r["scan"]["torsionOnly"] for r in rep)


def test_output_is_byte_deterministic_in_fresh_processes(tmp_path):
    cmd = [sys.executable, "-m", "hypheron", "heron-angle", "--area", "1/2", "--angle", "1", "--kmax", "8", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    path = tmp_path / "c.json"
    path.write_bytes(first)
    res = subprocess.run([sys.executable, "-m", "hypheron", "verify", str(path)], capture_output=True)
    assert res.returncode == 0
