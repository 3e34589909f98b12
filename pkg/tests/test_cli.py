import json

import pytest

from fillpoly.cli import dispatch


def run(capsys, *argv):
    rc = dispatch(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_exit_code_success(capsys):
    rc, out, err = run(capsys, "hn", "--n", "2")
    assert rc == 0 and err == ""
    assert out == "g_f^4 - 2*g_f^2*g_p^2 - g_o^2*g_p^2 + g_p^4\n"


def test_exit_code_usage_errors(capsys):
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys, "hn")[0] == 2
    # domain errors surface as usage errors too
    rc, _, err = run(capsys, "hn", "--n", "0")
    assert rc == 2 and "error" in err


def test_hn_json_output(capsys):
    rc, out, _ = run(capsys, "hn", "--n", "2", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc == {"schema": 1, "n": 2,
                   "poly": "g_f^4 - 2*g_f^2*g_p^2 - g_o^2*g_p^2 + g_p^4"}


def test_hn_matching_crosscheck(capsys):
    rc, out, _ = run(capsys, "hn", "--n", "3", "--check-matchings")
    assert rc == 0
    assert "ok" in out


def test_pn_output(capsys):
    rc, out, _ = run(capsys, "pn", "--n", "3")
    assert rc == 0
    assert out == "g_f^2*g_p + g_o^2*g_p - g_p^3\n"


def test_matchings_listing(capsys):
    rc, out, _ = run(capsys, "matchings", "--n", "4", "--list")
    assert rc == 0
    assert out.splitlines() == [
        "rungs: 4",
        "matchings: 5",
        "-: g_p^4",
        "1: -g_f^2*g_p^2",
        "1,3: g_f^4",
        "2: -g_o^2*g_p^2",
        "3: -g_f^2*g_p^2",
    ]


def test_farey_cross(capsys):
    rc, out, _ = run(capsys, "farey", "cross", "--from", "1/0", "--to", "3/5")
    assert rc == 0 and out == "3\n"
    # negative slopes work even though they look like flags
    rc, out, _ = run(capsys, "farey", "cross", "--from", "-1/1", "--to", "1/1")
    assert rc == 0 and out == "1\n"


def test_farey_cross_oracle(capsys):
    rc, out, _ = run(capsys, "farey", "cross", "--from", "1/0", "--to", "3/5",
                     "--oracle-bound", "9")
    assert rc == 0
    assert "oracle agreement: ok" in out
    rc, _, err = run(capsys, "farey", "cross", "--from", "1/0", "--to", "3/5",
                     "--oracle-bound", "5")
    assert rc == 2 and "too small" in err


def test_farey_walk_trace(capsys):
    rc, out, _ = run(capsys, "farey", "walk",
                     "triangle=4/1,3/1,1/0;word=LLRLL")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "t0: {4/1, 3/1, 1/0}"
    assert lines[3] == "step 0: o=4/1 h=2/1 p=3/1 f=1/0"
    assert lines[8] == "step 5: o=1/2 h=1/4 p=0/1 f=1/3"
    assert lines[-1] == ("anatomy: body=LLR tail=L tip=L tail_start_step=4"
                         " tip_matches_tail=True")


def test_apoly_json_schema(capsys):
    rc, out, _ = run(capsys, "apoly", "--family", "whitehead", "--sign", "pos",
                     "--m", "1", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert set(doc) == {"schema", "family", "sign", "m", "knot", "expression",
                        "conjugate_product", "basis_changed"}
    assert doc["knot"] == "J(2,8)"
    assert set(doc["expression"]) == {"a", "b", "rad"}
    assert set(doc["expression"]["a"]) == {"num", "den"}
    assert set(doc["conjugate_product"]) == {"num", "den"}


def test_apoly_output_is_deterministic(capsys):
    args = ("apoly", "--family", "whitehead", "--sign", "neg", "--m", "1",
            "--json")
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_twist_subcommand(capsys):
    rc, out, _ = run(capsys, "twist", "--n", "1", "--sign", "pos")
    assert rc == 0 and out == "L + M^6\n"
    rc, out, _ = run(capsys, "twist", "verify", "--max-n", "2")
    assert rc == 0
    assert "twist verify:" in out and "ok" in out
    assert run(capsys, "twist")[0] == 2


def test_format_env_var(capsys, monkeypatch):
    monkeypatch.setenv("FILLPOLY_FORMAT", "json")
    rc, out, _ = run(capsys, "pn", "--n", "1")
    assert rc == 0
    assert json.loads(out)["poly"] == "g_p"
    # an explicit flag wins over the environment
    rc, out, _ = run(capsys, "pn", "--n", "1", "--format", "text")
    assert rc == 0 and out == "g_p\n"


def test_format_flag_placement(capsys):
    rc1, out1, _ = run(capsys, "--format", "json", "hn", "--n", "1")
    rc2, out2, _ = run(capsys, "hn", "--n", "1", "--format", "json")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_selftest_quick(capsys):
    rc, out, _ = run(capsys, "selftest", "--quick")
    # one check fails by design: the stored closed form for g_-1/1
    # disagrees with the value its own equation forces
    assert rc == 1
    lines = out.splitlines()
    fails = [ln for ln in lines if ln.startswith("FAIL")]
    assert len(fails) == 1
    assert "fixture-table-audit" in fails[0]
    assert "g_-1/1" in fails[0]
    assert lines[-1] == "selftest: 27/28 checks passed"
