import json
import subprocess


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def test_verify_single_json(cli):
    r = run(cli, "verify", "--p", "2", "--relations", "eq7", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert len(doc) == 1
    assert set(doc[0]) >= {"relation_id", "p", "strands", "holds", "elapsed_ms"}
    assert doc[0]["holds"] is True


def test_exit_codes(cli):
    assert run(cli, "verify", "--p", "2", "--relations", "eq13").returncode == 1
    assert run(cli, "verify", "--p", "1").returncode == 2
    assert run(cli, "verify", "--relations", "nope").returncode == 2
    assert run(cli, "frobnicate").returncode == 2
    assert run(cli, "verify", "--format", "xml").returncode == 2
    assert run(cli, "conjecture", "--floor-convention", "round").returncode == 2
    r = run(cli, "verify", "--p", "3", "--relations", "eq4", "--budget", "64")
    assert r.returncode == 3
    assert "budget" in json.loads(r.stdout)[0]["skip_reason"]


def test_dims_markdown(cli):
    r = run(cli, "dims", "--p", "3", "--max-n", "6", "--format", "markdown")
    assert r.returncode == 0
    lines = [l for l in r.stdout.splitlines() if l.startswith("| 3 |")]
    assert len(lines) == 6
    assert "| 162 | 162 | true |" in lines[-1]


def test_out_file_and_determinism(cli, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        r = run(cli, "conjecture", "--p", "2", "--format", "csv", "--oracle-max-n", "4",
                "--out", str(path))
        assert r.returncode == 0
        assert r.stdout == ""
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert "conjecture_floor-euclidean" in header
