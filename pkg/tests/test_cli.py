"""The command line tool: file format round-trips, reports, DOT goldens,
error handling and exit codes."""

import json
import pathlib

import pytest

from monact.cli import (
    Workspace,
    cmd_dot,
    main,
    parse_act_file,
    parse_file,
    parse_monoid_file,
    print_act,
    print_monoid,
)
from monact.errors import ParseError
from monact.fixtures import act_a, act_b, act_w, fixture_workspace, s2, theta

GOLDEN = pathlib.Path(__file__).parent / "golden"

S2_TEXT = """monoid S2
elements: 1 0
one: 1
zero: 0
table:
1 0
0 0
"""

ACTW_TEXT = S2_TEXT + """
act ActW over S2 category act0
elements: θ a b
zero: θ
table:
θ a b
θ θ θ
"""


# ---------------------------------------------------------------------------
# parsing and printing


def test_parse_monoid_file():
    m = parse_monoid_file(S2_TEXT)
    assert m == s2()


def test_parse_act_file():
    ws = Workspace()
    a = parse_act_file(ACTW_TEXT, ws)
    assert a == act_w()


def test_print_parse_round_trips():
    m = s2()
    assert parse_monoid_file(print_monoid("S2", m)) == m
    for name, act in fixture_workspace()["acts"].items():
        ws = Workspace(monoids={"S2": m})
        text = print_monoid("S2", m) + "\n" + print_act(name, "S2", act)
        got = parse_act_file(text, ws)
        assert got == act


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError):
        parse_monoid_file("nonsense\n")
    with pytest.raises(ParseError):
        parse_monoid_file(S2_TEXT.replace("one: 1", "one: q"))
    with pytest.raises(ParseError):
        parse_monoid_file(S2_TEXT.replace("1 0\n0 0\n", "1 0\n0\n"))
    bad_entry = S2_TEXT.replace("0 0\n", "0 q\n")
    with pytest.raises(ParseError) as err:
        parse_monoid_file(bad_entry)
    assert "line 7" in str(err.value)


def test_parse_file_accepts_multiple_blocks():
    ws = Workspace()
    parse_file(ACTW_TEXT, ws)
    assert set(ws.monoids) == {"S2"} and set(ws.acts) == {"ActW"}


# ---------------------------------------------------------------------------
# DOT goldens


@pytest.mark.parametrize("name,act", [
    ("ActA", act_a()), ("ActW", act_w()), ("Theta", theta())])
def test_dot_matches_golden(name, act):
    assert cmd_dot(act, name) == (GOLDEN / f"{name}.dot").read_text()


def test_dot_keeps_self_loops_only_on_isolated_nodes():
    out = cmd_dot(act_b(), "ActB")
    # θ_S has no other incident edge, so its action loop is kept
    assert '"θ_S" -> "θ_S"' in out
    # θ receives an edge from a, so its loop is dropped
    assert '"θ" -> "θ"' not in out


# ---------------------------------------------------------------------------
# the entry point


def test_main_validate(capsys):
    assert main(["--seed-fixtures", "validate"]) == 0
    out = capsys.readouterr().out
    assert "monoid S2: ok" in out and "act ActW: ok" in out


def test_main_analyze_json(capsys):
    assert main(["--seed-fixtures", "analyze", "ActW"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["category"] == "act0"
    assert report["cyclic"] is None
    assert report["hollow"] is False
    assert sorted(map(tuple, report["decomposition"])) == \
        [("θ", "a"), ("θ", "b")]
    assert len(report["projective"]) == 2


def test_main_analyze_category_override(capsys):
    assert main(["--seed-fixtures", "analyze", "ActW",
                 "--category", "acto"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["category"] == "acto"
    assert len(report["decomposition"]) == 1


def test_main_output_is_byte_stable(capsys):
    main(["--seed-fixtures", "analyze", "ActB"])
    first = capsys.readouterr().out
    main(["--seed-fixtures", "analyze", "ActB"])
    assert capsys.readouterr().out == first


def test_main_functor_f(capsys):
    assert main(["--seed-fixtures", "functor-f", "ActB"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["elements"]) == 2
    assert report["projection"]["θ_S"] == report["projection"]["θ"]


def test_main_cover(capsys):
    assert main(["--seed-fixtures", "cover", "ActW"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["found"] is True
    assert len(report["domain"]["elements"]) == 3
    assert main(["--seed-fixtures", "cover", "ActW", "--category", "acto",
                 "--size-bound", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["found"] is False


def test_main_classify(capsys):
    assert main(["--seed-fixtures", "--bounds", "perfect_act_size=3",
                 "--bounds", "steady_act_size=3", "classify", "S2"]) == 0
    report = json.loads(capsys.readouterr().out)
    verdicts = {p["property"]: p["verdict"] for p in report["properties"]}
    assert verdicts == {
        "left-perfect": "holds-within-bounds",
        "left-0-perfect": "holds-within-bounds",
        "acc-cyclic-subacts": "holds",
        "left-steady": "holds-within-bounds",
        "left-0-steady": "holds-within-bounds",
    }


def test_main_enumerate(capsys):
    assert main(["enumerate", "monoids", "--size", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["count"] == 4  # one of order 2, three of order 3
    assert main(["--seed-fixtures", "enumerate", "acts", "--size", "3",
                 "--monoid", "S2", "--category", "act0"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["count"] == 3


def test_main_dot(capsys):
    assert main(["--seed-fixtures", "dot", "ActA"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "ActA.dot").read_text()


def test_main_verify_paper(capsys):
    assert main(["verify-paper"]) == 0
    lines = [ln for ln in capsys.readouterr().out.splitlines() if ln]
    assert len(lines) == 10
    assert all(ln.startswith("PASS ") for ln in lines)


def test_main_error_paths(capsys):
    assert main(["--seed-fixtures", "analyze", "NoSuchAct"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["--bounds", "oops", "validate"]) == 2
    assert main(["enumerate", "acts", "--size", "2"]) == 2  # missing --monoid
    assert main(["--seed-fixtures", "classify", "NoSuchMonoid"]) == 2


def test_main_loads_files(tmp_path, capsys):
    path = tmp_path / "w.act"
    path.write_text(ACTW_TEXT, encoding="utf-8")
    assert main(["-f", str(path), "validate"]) == 0
    out = capsys.readouterr().out
    assert "act ActW: ok" in out


def test_main_rejects_broken_file(tmp_path, capsys):
    path = tmp_path / "bad.act"
    path.write_text("monoid\n", encoding="utf-8")
    assert main(["-f", str(path), "validate"]) == 2
    assert "error:" in capsys.readouterr().err
