import subprocess
import sys

import pytest

from hvseq.cli import main, parse_range, parse_shifts
from hvseq.data_io import load_index


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_range_and_shifts():
    assert parse_range("4") == [4]
    assert parse_range("1,3") == [1, 3]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("-2:2") == [-2, -1, 0, 1, 2]
    assert parse_shifts("3") == 3
    assert parse_shifts("-1,2") == [-1, 2]


def test_encode_then_spellcheck(capsys, tmp_path, fixtures):
    index = tmp_path / "dict.hvsq"
    code, out, _ = run(capsys, "encode", "--dict", fixtures / "dictionary.txt", "--D", 4000, "--m", 11,
                       "--R", 5, "--seed", 2, "--out", index)
    assert code == 0 and "encoded" in out
    assert load_index(index).config.radius == 5
    csv_path = tmp_path / "top.csv"
    code, out, _ = run(capsys, "spellcheck", "--index", index, "--tests", fixtures / "misspellings.tab",
                       "--format", "tab", "--sim", "cos", "--shifts", 1, "--topn", "1,10",
                       "--realizations", 2, "--csv", csv_path)
    assert code == 0 and "Top-1:" in out and "absent from the dictionary" in out
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "realization,n,top_n" and lines[-1].startswith("std,10,")


def test_classify(capsys, tmp_path, fixtures):
    csv_path = tmp_path / "cv.csv"
    code, out, _ = run(capsys, "classify", "--data", fixtures / "splice_micro.data", "--method", "sym-knn",
                       "--R", 1, "--k", 3, "--folds", 5, "--seed", 0, "--csv", csv_path)
    assert code == 0 and "total" in out
    assert csv_path.read_text(encoding="utf-8").startswith("metric,value\ntotal,")


@pytest.mark.parametrize("argv,expected", [
    (["--mode", "lev", "--a", "kitten", "--b", "sitting"], "3"),
    (["--mode", "sym", "--a", "abc", "--b", "abc", "--R", 3, "--type", "cos"], "1"),
    (["--mode", "sym", "--a", "abc", "--b", "dddabc", "--R", 3, "--shifts", 3, "--type", "simp"], "1 (shift 3)"),
    (["--mode", "hamming", "--a", "cbca", "--b", "cbab"], "2"),
    (["--mode", "hv", "--a", "word", "--b", "word", "--R", 3], "1"),
])
def test_sim(capsys, argv, expected):
    code, out, _ = run(capsys, "sim", *argv)
    assert code == 0 and out.strip() == expected


def test_profile_to_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "profile", "--a", "abc", "--b", "abc", "--R", "1..3", "--shifts=-2:2")
    assert code == 0 and out.startswith("R,shift,sim\n") and len(out.splitlines()) == 16
    path = tmp_path / "p.csv"
    run(capsys, "profile", "--a", "abc", "--b", "abc", "--R", "3", "--shifts", "0", "--csv", path)
    assert path.read_text(encoding="utf-8") == "R,shift,sim\n3,0,1\n"


def test_corr(capsys, fixtures):
    code, out, _ = run(capsys, "corr", "--pairs", fixtures / "pairs.csv", "--R", 3, "--shifts", 1,
                       "--type", "cos", "--realizations", 2)
    assert code == 0 and out.startswith("Corr = ")


def test_errors_exit_with_code_2(capsys, tmp_path, fixtures):
    code, _, err = run(capsys, "spellcheck", "--index", tmp_path / "missing.hvsq",
                       "--tests", fixtures / "misspellings.tab")
    assert code == 2 and err.startswith("hvseq: error:")
    bad = tmp_path / "bad.hvsq"
    bad.write_bytes(b"garbage")
    code, _, err = run(capsys, "spellcheck", "--index", bad, "--tests", fixtures / "misspellings.tab")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hvseq", "sim", "--mode", "lev", "--a", "ab", "--b", "ba"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "2"
