import json
import subprocess
import sys

from braidnorm.certificates import certificate_from_dict
from braidnorm.cli import main
from tampering import tamperings


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "1 1 1")
    assert code == 0 and out.strip() == "-2"
    code, out, _ = run(capsys, "signature", "-1 -1 -1", "--strands", "4", "--emit-matrix")
    assert code == 0 and out.splitlines()[0] == "2"
    assert "1 0" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "signature", "1 x")
    assert code == 1 and "position 2" in err


def test_bad_flags(capsys):
    assert run(capsys, "growth", "1", "--kmax", "0")[0] == 1
    assert run(capsys, "nosuch")[0] == 1


def test_norm_and_verify(capsys, tmp_path):
    cert = tmp_path / "n.json"
    code, out, _ = run(capsys, "norm", "1 -2 3", "--n", "3", "--cert", str(cert))
    assert code == 0
    lines = dict(line.split() for line in out.splitlines())
    assert lines["word_norm_upper"] == "3" and lines["nu_upper"] == "2"
    assert run(capsys, "verify", str(cert))[0] == 0


def test_cl_and_verify(capsys, tmp_path):
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, "cl", "1 2 -1 -2 3 -1", "--n", "2", "--p", "1", "--q", "1", "--cert", str(cert))
    assert code == 0
    lines = dict(line.split() for line in out.splitlines())
    assert int(lines["cl_lower"]) <= int(lines["cl_upper"])
    assert lines["K"] == "4"
    assert run(capsys, "verify", str(cert))[0] == 0
    assert run(capsys, "cl", "1")[0] == 1


def test_every_written_certificate_rejects_tampering(capsys, tmp_path):
    cert = tmp_path / "c.json"
    run(capsys, "cl", "1 3 -2 2 -4 -1", "--cert", str(cert))
    data = json.loads(cert.read_text())
    for how, bad in tamperings(certificate_from_dict(data)):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad.to_dict()))
        assert run(capsys, "verify", str(path))[0] == 2, how


def test_verify_textual_tampering(capsys, tmp_path):
    cert = tmp_path / "n.json"
    run(capsys, "norm", "1 -2 2 3", "--cert", str(cert))
    data = json.loads(cert.read_text())
    data["certificates"][0]["factors"][0]["sign"] *= -1
    cert.write_text(json.dumps(data))
    assert run(capsys, "verify", str(cert))[0] == 2
    cert.write_text("{not json")
    assert run(capsys, "verify", str(cert))[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 1


def test_defects(capsys, tmp_path):
    csv_path = tmp_path / "d.csv"
    code, out, _ = run(capsys, "defects", "--n", "2", "--m", "5", "--samples", "40", "--len", "8", "--seed", "1", "--csv", str(csv_path))
    assert code == 0 and "violations 0" in out
    assert len(csv_path.read_text().splitlines()) == 41
    assert run(capsys, "defects", "--n", "4", "--m", "3")[0] == 1


def test_growth(capsys, tmp_path):
    csv_path = tmp_path / "g.csv"
    code, out, _ = run(capsys, "growth", "1", "--kmax", "4", "--csv", str(csv_path))
    assert code == 0
    assert out.splitlines()[1] == "2 -1 -1/2"
    assert csv_path.read_text().splitlines()[0] == "k,sigma,ratio"


def test_negative_word_as_argument(capsys):
    code, out, _ = run(capsys, "signature", "-1 -1 -1")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "growth", "-1", "--kmax", "2")
    assert code == 0


def test_search(capsys, tmp_path):
    csv_path = tmp_path / "s.csv"
    code, out, _ = run(capsys, "search", "--len", "4", "--strands", "3", "--kmax", "4", "--csv", str(csv_path))
    assert code == 0 and "candidates" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "braidnorm", "signature", "1 -2 1 -2"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "0"
