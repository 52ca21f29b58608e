import os
import subprocess

import pytest

import magari4


def test_evaluate_and_table():
    assert magari4.evaluate("p -> p", {"p": "s"}) == "1"
    assert magari4.evaluate("~#(p & ~p)", {"p": "1"}) == "r"
    assert magari4.table("#p") == "1:ss11"
    assert magari4.table("p -> q", ["q", "p"]) == "2:1sr011rr1s1s1111"
    once = magari4.normalize("p&(q|#r)")
    assert magari4.normalize(once) == once


def test_equivalence():
    assert magari4.equivalent("[]p", "p & #p")
    assert not magari4.equivalent("#p", "p")


def test_classify_and_synthesize():
    assert magari4.classify("#p") == [2, 9, 10]
    assert magari4.preserves_delta_pairing("1:1sr0")
    assert not magari4.preserves_delta_pairing("1:0s00")
    f = magari4.synthesize("1:ss11", simplify=True)
    assert magari4.table(f) == "1:ss11"
    assert magari4.table(magari4.synthesize("2:" + "0" * 16, ["x", "y"]), ["x", "y"]) == "2:" + "0" * 16


def test_errors():
    with pytest.raises(ValueError):
        magari4.normalize("p &")
    with pytest.raises(magari4.NotRepresentable):
        magari4.synthesize("1:0s00")


def test_constants():
    assert magari4.expressible_constants("a: ~p\n") == []
    assert magari4.expressible_constants("a: #p\nb: ~p\n") == ["0", "r", "s", "1"]
    report = magari4.derive_constants(magari4.canned_system())
    assert sorted(c["constant"] for c in report["constants"]) == ["0", "1", "r", "s"]
    assert all(c["verified"] for c in report["constants"])
    for c in report["constants"]:
        assert magari4.table(c["term"], ["p"]) == c["table"]


def test_projection_rejected():
    text = magari4.canned_system().replace("F5: p & q", "F5: p")
    with pytest.raises(ValueError, match="F5"):
        magari4.derive_constants(text)


def test_run_cli_in_process():
    code, out, _ = magari4.run_cli(["equiv", "p", "q"])
    assert code == 1 and out.startswith("not equivalent")


@pytest.mark.skipif("MAGARI4_CLI" not in os.environ, reason="CLI path not given")
def test_cli_binary():
    cli = os.environ["MAGARI4_CLI"]
    done = subprocess.run([cli, "eval", "p -> p", "--env", "p=s"], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "1\n"
    done = subprocess.run([cli, "synthesize", "--table", "1:0s00"], capture_output=True, text=True)
    assert done.returncode == 1
