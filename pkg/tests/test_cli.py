import json

import pytest

from lprim import Classification
from lprim.cli import main


@pytest.fixture
def files(tmp_path):
    L = tmp_path / "L.txt"
    L.write_text("alphabet: ab\n# pow-closed complement counterexample\na\nb\naaaaaa\n", encoding="utf-8")
    G = tmp_path / "G.txt"
    G.write_text("alphabet: ab\nab\nba\n", encoding="utf-8")
    P = tmp_path / "P.txt"
    P.write_text("alphabet: ab\na\nab\n", encoding="utf-8")
    U = tmp_path / "U.txt"
    U.write_text("alphabet: a\naaaa\naaaaaa\n", encoding="utf-8")
    return {"L": str(L), "G": str(G), "P": str(P), "U": str(U)}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


@pytest.mark.parametrize("argv, expected", [
    (["word", "root", "abab"], "ab^2"),
    (["word", "root", "aab"], "aab^1"),
    (["word", "primitive", "abab"], "false"),
    (["word", "period", "abaab"], "3"),
    (["num", "enumerate", "--gens", "4,6", "--lang", "finite:4,25+primes-except:2,5", "--bound", "1000"], "4 10"),
    (["num", "classify", "--gens", "3,5", "--lang", "finite:7"], "infinite (gcd-one)"),
    (["num", "classify", "--gens", "4,6", "--lang", "finite:2,4"], "zero"),
    (["num", "classify", "--gens", "2", "--lang", "finite:2"], "one 2"),
    (["num", "mingens", "--gens", "4,6,10"], "4 6"),
    (["num", "frobenius", "--gens", "3,5"], "7"),
    (["num", "member", "--gens", "3,5", "7"], "false"),
])
def test_plain_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_enumeration_command_with_prime_language(capsys):
    # {4} plus primes except 2,5; 50 = 2*25 is L-primitive, see test_numeric
    code, out, _ = run(capsys, "num", "enumerate", "--gens", "4,6", "--lang", "finite:4+primes-except:2,5",
                       "--bound", "1000")
    assert code == 0 and out == "4 10 50 250"


def test_language_commands(capsys, files):
    assert run(capsys, "lang", "lp-in", "--lang", files["L"])[1] == "a b"
    assert run(capsys, "lang", "l-root", "--lang", files["L"])[1] == "a b"
    assert run(capsys, "lang", "lp", "--lang", files["L"], "--word", "aaaaaa")[1] == "false"
    assert run(capsys, "lang", "lp", "--lang", files["L"], "--word", "aaaa", "--view", "complement")[1] == "false"
    assert run(capsys, "lang", "roots", "--lang", files["L"], "--word", "aaaaaa", "--view", "complement")[1] == "a aa aaa"
    assert run(capsys, "lang", "prefix-set", "--lang", files["P"])[1] == "false"
    assert run(capsys, "lang", "lp-set", "--lang", files["P"], "--maxlen", "2")[1] == "a b ab ba bb"
    assert run(capsys, "lang", "descend", "--lang", files["U"], "--word", "aaaaaa")[1] == "aaaaaa^1"


def test_mono_commands(capsys, files):
    assert run(capsys, "mono", "classify", "--gens-file", files["G"])[1] == "infinite (noncommutative)"
    assert run(capsys, "mono", "roots", "--gens-file", files["U"])[1] == "one a"
    assert run(capsys, "mono", "classify", "--gens-file", files["U"])[1] == "zero"
    assert run(capsys, "mono", "lp-classify", "--gens-file", files["U"], "--lang", files["L"])[1] == "zero"
    assert run(capsys, "mono", "member", "--gens-file", files["G"], "--word", "abba")[1] == "true"


def test_json_round_trip(capsys, files):
    code, out, _ = run(capsys, "--format", "json", "num", "classify", "--gens", "4,6", "--lang", "finite:5")
    c = Classification.from_dict(json.loads(out))
    assert str(c) == "infinite (no-divisor-of-d)" and c.case_trace
    code, out, _ = run(capsys, "lang", "lp-in", "--lang", files["L"], "--format", "json")
    assert json.loads(out) == {"view": "explicit", "words": ["a", "b"]}
    code, out, _ = run(capsys, "num", "enumerate", "--gens", "4,6", "--lang", "finite:4+primes-except:2,5",
                       "--bound", "100", "--format", "json")
    assert json.loads(out) == {"generators": [4, 6], "language": "finite:4+primes-except:2,5", "bound": 100,
                               "elements": [4, 10, 50]}


def test_output_is_byte_identical(capsys, files):
    argv = ["lang", "lp-set", "--lang", files["L"], "--maxlen", "4", "--view", "pow"]
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.parametrize("argv, token", [
    (["num", "classify", "--gens", "4,x", "--lang", "finite:7"], "'x'"),
    (["num", "classify", "--gens", "4,6", "--lang", "finite:0"], "0"),
    (["num", "classify", "--gens", "4,6", "--lang", "primes-except:2"], "primes-except:2"),
    (["num", "frobenius", "--gens", "4,6"], "gcd"),
    (["word", "root", "eps"], "nonempty"),
    (["word", "root", "abc", "--alphabet", "ab"], "'abc'"),
    (["verify", "--check", "nope"], "nope"),
    (["nonsense"], "nonsense"),
    (["num", "enumerate", "--gens", "3", "--lang", "finite:2", "--bound", "100", "--budget", "10"], "budget"),
])
def test_usage_errors(capsys, argv, token):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1 and token in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "lang", "prefix-set", "--lang", str(tmp_path / "none.txt"))
    assert code == 2 and "none.txt" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--check", "rem-prefix-converse")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--check", "rem-3.7-infiniteL", "--format", "json")
    doc = json.loads(out)
    assert code == 1 and doc["failed"] == 1 and doc["checks"][0]["counterexample"]["got"][:3] == [4, 10, 50]
    code, _, err = run(capsys, "verify", "--check", "prop-1.1-unique-root", "--budget", "5")
    assert code == 2 and "budget" in err
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "thm-3.6-ledger" in out.split()
