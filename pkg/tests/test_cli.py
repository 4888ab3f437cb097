from __future__ import annotations

import json
import subprocess
import sys

import pytest

from posthopf.cli import main
from posthopf.kernel import LinComb, parse_lincomb
from posthopf.post import parse_key
from posthopf.trees import parse_tree


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_graft_ordered(capsys):
    code, out, _ = run(capsys, "graft", "(())", "(()()())")
    assert code == 0
    assert parse_lincomb(out, parse_tree) == LinComb.basis("((())()()())") + LinComb.basis("(((()))()())") \
        + LinComb.basis("(()((()))())") + LinComb.basis("(()()((())))")


def test_graft_unordered(capsys):
    _, out, _ = run(capsys, "graft", "--unordered", "(())", "(()()())")
    assert out == "3*(((()))()()) + ((())()()())"


def test_graft_single_nodes(capsys):
    assert run(capsys, "graft", "()", "()")[1] == "(())"


def test_gl(capsys):
    assert run(capsys, "gl", "()", "()")[1] == "(()) + () ()"
    assert run(capsys, "gl", "", "(())")[1] == "(())"
    assert run(capsys, "gl", "(())", "")[1] == "(())"


@pytest.mark.parametrize("argv", [
    ("gl", "(()) ()", "(()())"),
    ("post", "() ()", "((()))"),
    ("coproduct", "(()) ()"),
    ("antipode", "() (())", "--subadjacent"),
    ("antipode", "() (())"),
])
def test_printed_results_reparse(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert parse_lincomb(out, parse_key)
    # printing the parsed value again gives the same text
    from posthopf.post import fmt
    assert fmt(parse_lincomb(out, parse_key)) == out


def test_parse_error_goes_to_stderr(capsys):
    code, out, err = run(capsys, "graft", "(()", "()")
    assert code == 2 and out == ""
    assert "position 3" in err


def test_cutoff_error(capsys):
    code, _, err = run(capsys, "gl", "(())", "(())", "--degree", "3")
    assert code == 2 and "cutoff" in err


@pytest.mark.parametrize("degree", ["0", "2", "3"])
def test_ybe_passes(capsys, degree):
    code, out, _ = run(capsys, "ybe", "--degree", degree)
    assert code == 0 and out.startswith("suite ybe[graft_left, ordered")


def test_ybe_unordered_json(capsys):
    code, out, _ = run(capsys, "ybe", "--degree", "3", "--alphabet", "unordered", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["pass"] is True
    assert set(rep) == {"suite", "identities", "pass"}
    assert all({"name", "range", "pass"} <= set(i) for i in rep["identities"])


def test_verify_h4(capsys):
    code, out, _ = run(capsys, "verify", "h4", "--a", "1")
    assert code == 0 and "FAIL" not in out


def test_verify_h4_negated_inverse_fails(capsys):
    code, out, _ = run(capsys, "verify", "h4", "--a", "2", "--inverse", "negated")
    assert code == 1
    assert "witness: x=x, y=x: lhs = 4*x ; rhs = 0" in out


def test_verify_posthopf_trees(capsys):
    code, out, _ = run(capsys, "verify", "posthopf-trees", "--degree", "4")
    assert code == 0 and "FAIL" not in out


def test_verify_findim_corrupted(capsys, data_dir):
    code, out, _ = run(capsys, "verify", "findim", str(data_dir / "bad_h4_antipode.json"))
    assert code == 1
    assert "[FAIL] antipode" in out and "witness:" in out


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "findim", str(tmp_path / "nope.json"))
    assert code == 2 and err.startswith("error:")


def test_malformed_json(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert run(capsys, "verify", "rrb", str(p))[0] == 2


FIXTURES = [
    (("verify", "findim", "h4_a1.json"), True),
    (("verify", "findim", "bad_h4_antipode.json"), False),
    (("verify", "rrb", "s3_conjugation_rrb.json"), True),
    (("verify", "rrb", "z2_trivial_rrb.json"), True),
    (("verify", "rrb", "s3_adjoint_unit_counit_rrb.json"), True),
    (("verify", "rrb", "bad_s3_identity_rrb.json"), False),
    (("verify", "rrb", "bad_s3_one_image_rrb.json"), False),
    (("verify", "matched-pair", "s3_conjugation_rrb.json"), True),
    (("verify", "matched-pair", "bad_s3_one_image_rrb.json"), False),
    (("verify", "liepbw", "aff2_minus_p2.json"), True),
    (("verify", "liepbw", "heisenberg_minus_id.json"), True),
    (("verify", "liepbw", "bad_aff2_identity.json"), False),
    (("verify", "posthopf-trees", "--degree", "4", "--magma", "bad_graft_override.json"), False),
    (("ybe", "--degree", "3", "--magma", "bad_graft_override.json"), False),
]


@pytest.mark.parametrize("argv, ok", FIXTURES, ids=[" ".join(a) for a, _ in FIXTURES])
def test_exit_code_matches_json_status(capsys, data_dir, argv, ok):
    argv = [str(data_dir / a) if a.endswith(".json") else a for a in argv]
    code, out, _ = run(capsys, *argv, "--json")
    rep = json.loads(out)
    assert rep["pass"] is ok
    assert code == (0 if ok else 1)
    if not ok:
        assert any(i.get("witness") for i in rep["identities"] if not i["pass"])


def test_export_then_verify(capsys, tmp_path):
    path = tmp_path / "h4_a3.json"
    assert run(capsys, "export", str(path), "--a", "-3")[0] == 0
    assert run(capsys, "verify", "findim", str(path))[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "posthopf", "graft", "()", "()"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(())"
