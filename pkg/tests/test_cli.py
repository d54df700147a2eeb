import json

import pytest

from weylkit import cosetgraph as cg
from weylkit.cli import main
from weylkit.permgrp.perm import to_cycle_string


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rootsys(capsys):
    code, out, _ = run(capsys, "rootsys", "--type", "F4")
    assert code == 0
    assert "48 roots" in out and "highest root 2342" in out
    code, out, _ = run(capsys, "rootsys", "--type", "F4", "--json")
    data = json.loads(out)
    assert data["results"]["cartan_matrix"][1] == [-1, 2, -2, 0]


def test_json_is_byte_identical(capsys):
    args = ("torus", "--type", "F4", "--word", "1234", "--q", "5", "--json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    assert json.loads(a)["checks"][0]["pass"]


def test_torus_longest(capsys):
    code, out, _ = run(capsys, "torus", "--type", "F4", "--longest")
    assert code == 0 and out.strip() == "(q+1)^4"


def test_weyl_show(capsys):
    code, out, _ = run(capsys, "weyl", "--type", "E6", "--word", "123142314542314565423456", "--show", "order,centralizer", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["results"]["element_order"] == 3
    assert data["results"]["length"] == 24
    assert data["results"]["centralizer_order"] == 648


def test_weyl_subsystem(capsys):
    code, out, _ = run(capsys, "weyl", "--type", "E6", "--subsystem", "0,1,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,0;0,0,0,0,1,0", "--json")
    data = json.loads(out)["results"]["subsystem"]
    assert code == 0
    assert data["components"] == ["D4"] and data["relative_weyl_order"] == 6


def test_parabolic(capsys):
    code, out, _ = run(capsys, "parabolic", "--type", "F4", "--J", "1,2,4", "--json")
    data = json.loads(out)["results"]
    assert code == 0 and len(data["classes"]) == 17 and data["non_self_paired"] == 4
    code, out, _ = run(capsys, "parabolic", "--type", "F4", "--J", "1,2,4", "--csv")
    assert out.splitlines()[0].startswith("J,min_rep_word")


def test_ppd(capsys):
    code, out, _ = run(capsys, "ppd", "--q", "2", "--n", "6")
    assert code == 0 and "zsigmondy_26" in out
    code, out, _ = run(capsys, "ppd", "--q", "2", "--n", "12", "--json")
    assert json.loads(out)["results"]["primes"] == [13]


def test_eliminate(capsys):
    code, out, _ = run(capsys, "eliminate", "--mr", "6", "--or", "2", "--hl", "4", "--json")
    data = json.loads(out)["results"]
    assert data == {"bound": 2, "primes": [3]}


def test_module(capsys):
    code, out, _ = run(capsys, "module", "--group", "m12", "--p", "5", "--chop", "--restrict", "M11_transitive", "--json")
    data = json.loads(out)["results"]
    assert code == 0
    assert data["factor_dimensions"] == [1, 11]
    assert [m["irreducible"] for m in data["modules"]] == [True]
    code, out, _ = run(capsys, "module", "--type", "F4", "--p", "2", "--json")
    assert json.loads(out)["results"]["modules"][0]["irreducible"] is False


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "--group", "gu32", "--min-order", "8", "--predicate", "sylow2-isomorphic", "--json")
    data = json.loads(out)
    assert code == 0 and data["results"]["count"] == 11
    assert all(c["pass"] for c in data["checks"])


def test_digraph(capsys, tmp_path):
    g = cg.wreath_example(2, 4, 2)
    (tmp_path / "g.json").write_text(json.dumps(g.H.to_json()))
    (tmp_path / "hv.json").write_text(json.dumps(g.Hv.to_json()))
    code, out, _ = run(capsys, "digraph", "--group", str(tmp_path / "g.json"), "--stab", str(tmp_path / "hv.json"),
                       "--elt", to_cycle_string(g.h), "--s", "3", "--json")
    data = json.loads(out)["results"]
    assert code == 0
    assert [r["transitive"] for r in data["series"]] == [True, True, False]
    assert data["vertices"] == 16 and data["valency"] == 2


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["torus", "--type", "X9"],
    ["torus", "--type", "F4", "--word", "1", "--longest"],
    ["parabolic", "--type", "F4", "--J", "1,7"],
    ["ppd", "--q", "1", "--n", "3"],
    ["factorize", "--group", "no_such_file.json"],
    ["reproduce", "--only", "11"],
    ["module", "--type", "F4", "--group", "m12"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_reproduce_single(capsys):
    code, out, _ = run(capsys, "reproduce", "--only", "8")
    assert code == 0 and "criterion  8 PASS" in out
    _, a, _ = run(capsys, "reproduce", "--only", "1,3", "--json")
    _, b, _ = run(capsys, "reproduce", "--only", "1,3", "--json")
    assert a == b
