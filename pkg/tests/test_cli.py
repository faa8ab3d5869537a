import json
import os
import subprocess
import sys

import pytest

from bbquiver.cli import main

Z2 = ["--biquandle", "builtin:z2.biq"]
HOPF = ["--diagram", "builtin:hopf_pos.dia"]
BRK = ["--bracket", "builtin:z2_z5.brk"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["count", *Z2, *HOPF], "4\n"),
        (["count", *Z2, "--diagram", "builtin:trefoil.dia"], "2\n"),
        (["count", "--biquandle", "builtin:alex3.biq", "--diagram", "builtin:unknot.dia"], "3\n"),
        (["bracket-multiset", *Z2, *HOPF, *BRK], "{3, 3, 4, 4}\n"),
        (["arrow-poly", *Z2, *HOPF, *BRK], "4s^3t^3 + 4s^4t^4\n"),
        (["vertex-poly", *Z2, *HOPF, *BRK], "2u^3w^2 + 2u^4w^2\n"),
        (["indeg-poly", *Z2, *HOPF], "4u^2\n"),
        (["indeg-poly", *Z2, *HOPF, "--quiver", "identity"], "4u\n"),
        (["check-bracket", *Z2, *BRK], "OK delta=2 w=1\n"),
        (["check-biquandle", "builtin:z2.biq"], "OK\n"),
        (["homset", *Z2, *HOPF], "0 0 1 1\n0 1 1 0\n1 0 0 1\n1 1 0 0\n"),
        (["bracket", *Z2, *HOPF, *BRK], "0 0 1 1 : 3\n0 1 1 0 : 4\n1 0 0 1 : 4\n1 1 0 0 : 3\n"),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_json_outputs(capsys):
    _, out, _ = run(capsys, "bracket-multiset", *Z2, *HOPF, *BRK, "--json")
    assert json.loads(out) == {"multiset": [3, 3, 4, 4]}
    _, out, _ = run(capsys, "arrow-poly", *Z2, *HOPF, *BRK, "--json")
    assert json.loads(out)["polynomial"] == "4s^3t^3 + 4s^4t^4"
    _, out, _ = run(capsys, "quiver", *Z2, *HOPF, "--format", "json")
    assert len(json.loads(out)["arrows"]) == 8
    _, out, _ = run(capsys, "bracket-quiver", *Z2, *HOPF, *BRK, "--format", "json")
    assert [v["beta"] for v in json.loads(out)["vertices"]] == [3, 4, 4, 3]


def test_bad_biquandle_exit_1(capsys):
    code, out, _ = run(capsys, "check-biquandle", "builtin:bad_column.biq")
    assert code == 1
    assert "axiom ii fails at (0,)" in out
    code, _, err = run(capsys, "count", "--biquandle", "builtin:bad_column.biq", "--diagram", "builtin:unknot.dia")
    assert code == 1 and "axiom" in err


def test_bad_bracket_exit_1(capsys, tmp_path):
    p = tmp_path / "bad.brk"
    p.write_text("5\n1 4\n3 2\n\n4 1\n2 4\n")
    code, out, _ = run(capsys, "check-bracket", *Z2, "--bracket", str(p))
    assert code == 1 and "fails" in out


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "count", *Z2)[0] == 2
    assert run(capsys, "count", "--biquandle", str(tmp_path / "missing"), *HOPF)[0] == 2
    bad = tmp_path / "bad.dia"
    bad.write_text("X + 0 1 1 0\nX + 2 3 q 2\n")
    code, _, err = run(capsys, "count", *Z2, "--diagram", str(bad))
    assert code == 2 and ":2:" in err
    assert run(capsys, "quiver", *Z2, *HOPF, "--quiver", "half")[0] == 2
    assert run(capsys, "search-brackets", *Z2)[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_endomorphism_file(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("1 0\n")
    code, out, _ = run(capsys, "indeg-poly", *Z2, *HOPF, "--quiver", f"@{f}")
    assert (code, out) == (0, "4u\n")
    f.write_text("0 0\n")
    assert run(capsys, "indeg-poly", *Z2, *HOPF, "--quiver", f"@{f}")[0] == 1


def test_search_output(capsys):
    code, out, err = run(capsys, "search-brackets", *Z2, "--modulus", "5", "--progress")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 256
    assert "A=1 4;3 1 B=4 1;2 4 delta=2 w=1" in lines
    assert "[search] 4/4 chunks" in err
    code, out, _ = run(capsys, "search-brackets", *Z2, "--modulus", "5", "--limit", "3", "--json")
    assert len(out.splitlines()) == 3
    assert set(json.loads(out.splitlines()[0])) == {"A", "B", "delta", "w"}


COMMANDS = [
    ["check-biquandle", "builtin:z2.biq"],
    ["check-bracket", *Z2, *BRK],
    ["count", *Z2, *HOPF],
    ["homset", *Z2, *HOPF],
    ["quiver", *Z2, *HOPF],
    ["quiver", *Z2, *HOPF, "--format", "json"],
    ["bracket", *Z2, *HOPF, *BRK],
    ["bracket-multiset", *Z2, *HOPF, *BRK],
    ["bracket-quiver", *Z2, *HOPF, *BRK],
    ["bracket-quiver", *Z2, *HOPF, *BRK, "--format", "json"],
    ["arrow-poly", *Z2, *HOPF, *BRK],
    ["vertex-poly", *Z2, *HOPF, *BRK],
    ["indeg-poly", *Z2, *HOPF],
    ["search-brackets", *Z2, "--modulus", "5"],
    ["bracket-multiset", "--biquandle", "builtin:alex3.biq", "--diagram", "builtin:figure8.dia", "--bracket", "builtin:alex3_z3.brk"],
]


def _subprocess(argv, workers):
    env = dict(os.environ, BBQ_WORKERS=str(workers))
    return subprocess.run([sys.executable, "-m", "bbquiver", *argv], capture_output=True, env=env, check=True).stdout


def test_commands_are_deterministic_across_runs_and_workers():
    for argv in COMMANDS:
        outs = {_subprocess(argv, 1), _subprocess(argv, 1), _subprocess(argv, 4)}
        assert len(outs) == 1, argv
