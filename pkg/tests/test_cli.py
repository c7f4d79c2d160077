import json
import subprocess
import sys

import pytest
from hypothesis import given

from seifert_taut import census
from seifert_taut.cli import main, parse_invariant
from seifert_taut.errors import InvalidInvariant, ParseError
from seifert_taut.foliation import Rule, TautVerdict, Verdict
from seifert_taut.invariants import SeifertInvariant

from .strategies import normalized_invariants

M = SeifertInvariant.of


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_examples():
    assert parse_invariant("(-1; 1/2, 1/3, 1/7)") == M(-1, (1, 2), (1, 3), (1, 7))
    assert parse_invariant("(-1;1/2,1/3,1/5)") == M(-1, (1, 2), (1, 3), (1, 5))
    assert parse_invariant("  M( -1 ;1/2 , 1/3,1/5 ) ") == M(-1, (1, 2), (1, 3), (1, 5))
    assert parse_invariant("(0; 3/2, 1/3, 1/7)") == M(1, (1, 2), (1, 3), (1, 7))
    assert parse_invariant("(0; -1; 1/2, 1/3, 1/5)") == M(-1, (1, 2), (1, 3), (1, 5))


def test_parse_invalid_slopes():
    with pytest.raises(InvalidInvariant):
        parse_invariant("(0; 1/0)")
    with pytest.raises(InvalidInvariant):
        parse_invariant("(0; 2/4)")
    with pytest.raises(InvalidInvariant):
        parse_invariant("(1; -1; 1/2, 1/3)")


@pytest.mark.parametrize(
    "text,pos",
    [
        ("-1; 1/2)", 0),
        ("(-1, 1/2)", 3),
        ("(-1; 1/2 1/3)", 9),
        ("(-1; 1/2", 8),
        ("(-1; 1/2) x", 10),
        ("(-1; 1.5/2)", 6),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_invariant(text)
    assert info.value.position == pos
    assert info.value.text == text


@given(normalized_invariants(min_n=1, max_n=6))
def test_parse_round_trip(m):
    assert parse_invariant(str(m)) == m


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "(-1; 1/2,1/3,1/7)")
    data = json.loads(out)
    assert code == 0
    assert data["verdict"] == "AdmitsTautAnalytic"
    assert (data["witness_m"], data["witness_alpha"]) == (5, 2)
    assert data["geometry"] == "SL2R"
    assert (data["c"], data["b0"]) == (-1, 1)


def test_classify_poincare(capsys):
    code, out, _ = run(capsys, "classify", "(-1; 1/2,1/3,1/5)")
    data = json.loads(out)
    assert code == 0
    assert (data["verdict"], data["rule"]) == ("NoTautC0", "PropertyStarEmpty")


def test_classify_is_deterministic(capsys):
    first = run(capsys, "classify", "(-1; 1/2, 2/7, 2/9)")[1]
    second = run(capsys, "classify", "(-1; 1/2, 2/7, 2/9)")[1]
    assert first == second


def test_classify_text_and_input_errors(capsys):
    code, out, _ = run(capsys, "classify", "(-1; 1/2,1/3,1/7)", "--format", "text")
    assert code == 0 and "verdict: AdmitsTautAnalytic" in out
    code, out, err = run(capsys, "classify", "(0; 1/0)")
    assert code == 2 and out == "" and "InvalidInvariant" in err
    code, _, err = run(capsys, "classify", "(0; 1/2")
    assert code == 2 and "ParseError" in err


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "(-1; 1/2, 1/3, 2/11)")
    data = json.loads(out)
    assert code == 0
    assert (data["branch"], data["witness_m"], data["witness_alpha"]) == ("CaseII_b2Eq1", 5, 2)
    code, out, err = run(capsys, "witness", "(-1; 1/2, 1/3, 1/5)")
    assert code == 2 and "PoincareExcluded" in err


def test_family_command(capsys):
    code, out, err = run(capsys, "family", "M3", "--k-max", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 3
    assert all(x["witness_m"] == 7 and x["witness_alpha"] == 3 for x in lines)
    code, _, err = run(capsys, "family", "M3", "--k", "0")
    assert code == 2


def test_census_command(tmp_path, capsys):
    out = tmp_path / "zhs.jsonl"
    code, _, err = run(capsys, "census", "--n", "3", "--amax", "7", "--out", str(out))
    assert code == 0 and len(out.read_text().splitlines()) == 8
    out = tmp_path / "qhs.csv"
    code, _, _ = run(capsys, "census", "--n", "3", "--amax", "4", "--qhs", "--b0", "1", "2",
                     "--out", str(out), "--format", "csv")
    assert code == 0 and out.read_text().startswith("c,b0,")


def test_verify_command(capsys):
    code, out, err = run(capsys, "verify", "main1", "--n", "3", "--amax", "50")
    data = json.loads(out)
    assert code == 0 and data["failures"] == [] and data["passed"]
    assert "MainTheorem1: PASS" in err


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    # a decision procedure that admits everything contradicts the M1/M2 families
    monkeypatch.setattr(
        census, "decide_taut", lambda m: TautVerdict(Verdict.ADMITS, Rule.EHN1, invariant=m)
    )
    code, out, _ = run(capsys, "verify", "main2", "--n", "3", "--amax", "8")
    assert code == 1 and not json.loads(out)["passed"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seifert_taut.cli", "classify", "(-1; 1/2,1/3,1/7)"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["witness_m"] == 5
