import io
import json
import subprocess
import sys

import pytest

from lzonline import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def textfile(tmp_path):
    def make(content: bytes, name="in.txt"):
        path = tmp_path / name
        path.write_bytes(content)
        return str(path)

    return make


def test_text_output(capsys, textfile):
    code, out, _ = run_cli(capsys, "--input", textfile(b"abc"), "--sigma", "3")
    assert code == 0
    assert out.splitlines() == ["1\t1\t1\tliteral", "2\t2\t1\tliteral", "3\t3\t1\tliteral"]
    code, out, _ = run_cli(capsys, "--input", textfile(b"aaaa"), "--sigma", "2")
    assert out.splitlines() == ["1\t1\t1\tliteral", "2\t2\t3\tcopy"]


def test_json_round_trip_and_agreement(capsys, textfile):
    data = b"abracadabra, abracadabra! " * 40
    path = textfile(data)
    _, text_out, _ = run_cli(capsys, "--input", path, "--infer")
    code, json_out, _ = run_cli(capsys, "--input", path, "--infer", "--format", "json", "--stats")
    assert code == 0
    records = json.loads(json_out)
    stats = records.pop()["stats"]
    covered = []
    for rec in records:
        covered.extend(range(rec["start"], rec["start"] + rec["len"]))
        if rec["kind"] == "copy":
            w = rec["witness"]
            assert data[w - 1 : w - 1 + rec["len"]] == data[rec["start"] - 1 : rec["start"] - 1 + rec["len"]]
    assert covered == list(range(1, len(data) + 1))
    as_text = [f"{r['i']}\t{r['start']}\t{r['len']}\t{r['kind']}" for r in records]
    assert as_text == text_out.splitlines()
    assert stats["n"] == len(data) and stats["z"] == len(records)
    assert stats["blocks_read"] == -(-len(data) // stats["r"])


def test_text_stats_line(capsys, textfile):
    code, out, _ = run_cli(capsys, "--input", textfile(b"abab"), "--sigma", "2", "--stats")
    last = out.splitlines()[-1].split("\t")
    assert last[0] == "stats" and "z=3" in last and "n=4" in last


def test_stdin_and_dna(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"ACGTacgtACGT")))
    code, out, _ = run_cli(capsys, "--stdin", "--dna")
    assert code == 0
    assert out.splitlines()[-1] == "5\t5\t8\tcopy"


def test_empty_input(capsys, textfile):
    code, out, _ = run_cli(capsys, "--input", textfile(b""), "--infer", "--format", "json")
    assert code == 0 and json.loads(out) == []


def test_error_codes(capsys, textfile, tmp_path, monkeypatch):
    code, _, err = run_cli(capsys, "--input", str(tmp_path / "missing"), "--sigma", "2")
    assert code == 1 and "missing" in err
    code, _, err = run_cli(capsys, "--input", textfile(b"abc"), "--sigma", "2")
    assert code == 2 and "sigma" in err
    code, _, _ = run_cli(capsys, "--input", textfile(b"ACGN"), "--dna")
    assert code == 2
    code, _, _ = run_cli(capsys, "--input", textfile(b"ab"), "--block-size", "0")
    assert code == 2
    code, _, _ = run_cli(capsys, "--sigma", "2")
    assert code == 2
    path = textfile(b"abababab")
    real = cli.os.path.getsize
    monkeypatch.setattr(cli.os.path, "getsize", lambda p: real(p) + 3)
    code, _, err = run_cli(capsys, "--input", path, "--sigma", "2")
    assert code == 3 and "length" in err


def test_verify(capsys, textfile):
    path = textfile(b"mississippi mississippi")
    code, out, _ = run_cli(capsys, "--input", path, "--infer", "--verify")
    assert code == 0 and out.startswith("PASS") and "full oracle" in out
    code, out, _ = run_cli(capsys, "--input", path, "--infer", "--verify", "--inject-fault")
    assert code != 0 and out.startswith("FAIL at factor")


def test_verify_caps(capsys, textfile):
    big = textfile(bytes(b"ab"[i % 3 == 0] for i in range(12000)))
    code, out, _ = run_cli(capsys, "--input", big, "--infer", "--verify")
    assert code == 0 and "direct-search" in out
    code, _, err = run_cli(capsys, "--input", big, "--infer", "--verify", "--oracle-cap", "1000")
    assert code == 2 and "--spot-check" in err
    code, out, _ = run_cli(capsys, "--input", big, "--infer", "--verify", "--oracle-cap", "1000", "--spot-check")
    assert code == 0 and out.startswith("PASS")


def test_bench(capsys, textfile):
    code, out, _ = run_cli(capsys, "--bench", "")
    assert code == 0 and out == "n,seconds,leaves,trie_nodes,wavelet_bits,ratio\n"
    code, out, _ = run_cli(capsys, "--bench", "500,1000", "--seed", "3")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 3
    assert rows[1].endswith(",") and rows[2].split(",")[-1]
    code, _, _ = run_cli(capsys, "--bench", "1000,500")
    assert code == 2
    code, _, _ = run_cli(capsys, "--bench", str(cli.BENCH_CAPACITY + 1))
    assert code == 2
    path = textfile(b"ACGT" * 100)
    code, out, _ = run_cli(capsys, "--bench", "100,400", "--input", path, "--dna")
    assert code == 0 and len(out.splitlines()) == 3
    code, _, _ = run_cli(capsys, "--bench", "401", "--input", path)
    assert code == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "x.txt"
    path.write_bytes(b"aaaa")
    res = subprocess.run(
        [sys.executable, "-m", "lzonline", "--input", str(path), "--sigma", "2", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert [r["len"] for r in json.loads(res.stdout)] == [1, 3]
