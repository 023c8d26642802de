import json

import pytest

from qtkostka.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_macdonald_latex(capsys):
    code, out, err = run(capsys, "macdonald", "--mu", "2,1", "--format", "latex")
    assert code == 0 and err == ""
    assert out.splitlines() == [
        "K_{(3),(2,1)} &= t \\\\",
        "K_{(2,1),(2,1)} &= 1 + qt \\\\",
        "K_{(1,1,1),(2,1)} &= q \\\\",
    ]


def test_macdonald_json(capsys):
    code, out, _ = run(capsys, "macdonald", "--mu", "1,1,1")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == [1, 1, 1]
    terms = {tuple(t["lambda"]): t["coeff"] for t in data["expansion"]["terms"]}
    assert terms[(1, 1, 1)] == [[0, 0, "1"]]
    assert terms[(3,)] == [[0, 3, "1"]]


def test_unsupported_shape_exits_2(capsys):
    code, out, err = run(capsys, "macdonald", "--mu", "3,3,2")
    assert code == 2 and out == ""
    assert "(3,3,2)" in err


def test_empty_partition_exits_1(capsys):
    code, _, err = run(capsys, "macdonald", "--mu", "")
    assert code == 1
    assert "empty partition" in err


def test_kostka_csv(capsys):
    code, out, _ = run(capsys, "kostka", "--lam", "2,1", "--mu", "2,1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["q_power,t_power,coefficient", "0,0,1", "1,1,1"]


def test_kostka_json(capsys):
    code, out, _ = run(capsys, "kostka", "--lam", "1,1,1", "--mu", "3")
    assert code == 0
    data = json.loads(out)
    assert data == {"lambda": [1, 1, 1], "mu": [3], "coefficient": [[3, 0, "1"]]}


def test_kostka_size_mismatch(capsys):
    code, _, err = run(capsys, "kostka", "--lam", "2,1", "--mu", "2")
    assert code == 1
    assert "sizes differ" in err


def test_hl(capsys):
    code, out, _ = run(capsys, "hl", "--mu", "2,1")
    assert code == 0
    data = json.loads(out)
    terms = {tuple(t["lambda"]): t["coeff"] for t in data["expansion"]["terms"]}
    assert terms == {(3,): [[0, 1, "1"]], (2, 1): [[0, 0, "1"]]}


def test_charge(capsys):
    code, out, _ = run(capsys, "charge", "--word", "7,3,4,6,2,2,3,5,1,1,1,2,4,8")
    assert code == 0 and out == "9\n"
    code, out, _ = run(capsys, "charge", "--word", "12")
    assert code == 0 and out == "1\n"


def test_charge_rejects_bad_word(capsys):
    code, _, err = run(capsys, "charge", "--word", "1,0,2")
    assert code == 1
    assert "positive" in err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--mu", "2,1", "--tableau", "1,3/2")
    assert code == 0 and out == "a=1 b=1\n"


def test_type(capsys):
    code, out, _ = run(capsys, "type", "--mu", "2,2,2", "--tableau", "1,4,5/2,6/3")
    assert code == 0 and out == "V,V,H\n"


def test_unimodal_printed_profile(capsys):
    code, out, _ = run(capsys, "unimodal", "--mu", "3,1,1,1")
    assert code == 0
    assert out.splitlines() == [
        "(1,2,3)|S,S,S 1,2,3,4,2,1,1 unimodal",
        "(1,3/2)|S,S,S 2,4,6,5,4,2,1 unimodal",
        "(1,2/3)|S,S,S 1,2,4,5,6,4,2 unimodal",
        "(1/2/3)|S,S,S 1,1,2,4,3,2,1 unimodal",
    ]
    code, out, _ = run(capsys, "unimodal", "--mu", "2")
    assert code == 0
    assert out.splitlines() == ["H 1 unimodal", "V 1 unimodal"]
    code, out, _ = run(capsys, "unimodal", "--mu", "4,1,1")
    assert code == 0
    assert len(out.splitlines()) == 10


def test_unimodal_unsupported(capsys):
    code, _, err = run(capsys, "unimodal", "--mu", "3,3,2")
    assert code == 2
    assert "(3,3,2)" in err


def test_verify_bounds(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "12")
    assert code == 1 and "max-n" in err
    code, _, err = run(capsys, "verify", "--max-n", "4", "--oracle-degree", "9")
    assert code == 1 and "oracle-degree" in err


def test_verify_small_run(capsys):
    code, out, _ = run(
        capsys, "verify", "--max-n", "2", "--oracle-degree", "2", "--points", "1"
    )
    assert code == 0
    report = json.loads(out)
    assert report and all(e["status"] == "pass" for e in report)


def test_verify_out_file_is_reproducible(capsys, tmp_path):
    args = ["verify", "--max-n", "2", "--oracle-degree", "2", "--points", "1", "--seed", "3"]
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(first)]) == 0
    assert main(args + ["--out", str(second), "--jobs", "2"]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_bad_subcommand_exits_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["macdonald"])  # missing --mu
    assert info.value.code == 1
