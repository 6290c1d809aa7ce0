import json
import subprocess
import sys

import pytest

from invlyndon.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["factorize", "icfl", "--alphabet", "abcd", "dabadabdabdadac"], "daba dabdab dadac"),
        (["factorize", "cfl-in", "--alphabet", "ab", "babaababaababab"], "babaa babaa ba ba b"),
        (["factorize", "nb", "--alphabet", "abcd", "dabdab"], "dab dab"),
        (["factorize", "pmc", "--alphabet", "abcd", "dabadabdabdadac"], "daba dab dab | dadac"),
        (["factorize", "canonical-pair", "--alphabet", "ab", "babaaabb"], "babaaa bb"),
        (["convert", "cflin-to-icfl", "--alphabet", "ab", "babaababaababab", "--check"], "babaababaa babab"),
        (["convert", "icfl-to-cflin", "--alphabet", "abcd", "dabadabdabdabdadac", "--check"],
         "daba dab dab dab dadac"),
        (["convert", "icfl-to-cflin", "--alphabet", "ab", "a"], "a"),
    ],
)
def test_text_output(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == expected + "\n"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["check", "inverse-lyndon", "--alphabet", "ab", "bbaba"], 0),
        (["check", "lyndon", "--alphabet", "ab", "aba"], 1),
        (["check", "unbordered", "--alphabet", "ab", "ababa"], 1),
        (["check", "anti-lyndon", "--alphabet", "abcd", "dab"], 0),
        (["factorize", "icfl", "--alphabet", "ab", "abc"], 2),
        (["factorize", "icfl", ""], 2),
        (["factorize", "cfl", "a b"], 2),
        (["verify", "--alphabet-size", "2", "--max-len", "0"], 2),
        (["verify", "--properties", "nope"], 2),
        (["bench", "--sizes", "0"], 2),
        (["bench", "--sizes", "x"], 2),
        (["factorize", "icfl", "--file", "/nonexistent/words.txt"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["factorize", "icfl", "--bogus"])
    assert exc.value.code == 2


def test_json_records_round_trip(capsys):
    code, out, _ = run(["factorize", "icfl", "--format", "json", "--alphabet", "abcd",
                        "dabadabdabdadac", "dabdadacddbdc"], capsys)
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 2
    for rec in recs:
        assert list(rec) == ["word", "operation", "factors", "offsets", "extras"]
        assert [rec["word"][a:b] for a, b in rec["offsets"]] == rec["factors"]


def test_json_extras(capsys):
    _, out, _ = run(["factorize", "canonical-pair", "--format", "json", "--alphabet", "ab",
                     "babaababaababab"], capsys)
    extras = json.loads(out)["extras"]
    assert (extras["p"], extras["pbar"], extras["r"]) == ("babaababaa", "babab", "baba")
    _, out, _ = run(["check", "inverse-lyndon", "--format", "json", "--alphabet", "ab", "aaba"], capsys)
    extras = json.loads(out)["extras"]
    assert extras["holds"] is False and extras["shortest_failing_prefix"] == 3
    _, out, _ = run(["convert", "icfl-to-cflin", "--format", "json", "--alphabet", "abcd",
                     "dabadabdabdadac"], capsys)
    rec = json.loads(out)
    assert rec["extras"]["source"]["factors"] == ["daba", "dabdab", "dadac"]
    assert rec["factors"] == ["daba", "dab", "dab", "dadac"]


def test_spaces_allowed_in_json(capsys):
    code, out, _ = run(["factorize", "cfl", "--format", "json", "a b"], capsys)
    assert code == 0
    assert "".join(json.loads(out)["factors"]) == "a b"


def test_file_input_keeps_bytes(tmp_path, capsys):
    p = tmp_path / "words.txt"
    p.write_bytes(b"dabdab\r\ndaba\n")
    code, out, _ = run(["factorize", "nb", "--file", str(p), "--format", "json"], capsys)
    assert code == 0
    assert [json.loads(line)["word"] for line in out.splitlines()] == ["dabdab\r", "daba"]


def test_stdin_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "invlyndon", "factorize", "icfl", "--alphabet", "abcd"],
        input=b"dabadabdabdadac\ndabdadacddbdc\n",
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == b"daba dabdab dadac\ndab dadac ddbdc\n"


def test_verify_and_bench(capsys):
    code, out, _ = run(["verify", "--alphabet-size", "2", "--max-len", "1"], capsys)
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(["verify", "--alphabet-size", "3", "--max-len", "4", "--format", "json",
                        "--properties", "oracle"], capsys)
    report = json.loads(out)
    assert code == 0 and report["words"] == 120
    code, out, _ = run(["bench", "--sizes", "1", "--seed", "0"], capsys)
    assert code == 0 and len(out.splitlines()) == 5
