"""Command-line interface: outputs, exit codes, determinism."""

import json

from click.testing import CliRunner

from alcoves.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_info():
    r = run("info", "A2")
    assert r.exit_code == 0
    assert "h = 3" in r.output and "exponents [1, 2]" in r.output
    r = run("info", "G2")
    assert "h = 6" in r.output
    data = json.loads(run("info", "B3", "--json").output)
    assert data["weyl_order"] == 48


def test_info_bad_type_is_usage_error():
    assert run("info", "Z9").exit_code == 2
    assert run("info", "A0").exit_code == 2


def test_ideals_listing_and_trailer():
    r = run("ideals", "A2")
    assert r.exit_code == 0
    assert "enumerated 5, formula 5: PASS" in r.output
    r = run("ideals", "B2", "--strict")
    assert r.exit_code == 0
    assert "enumerated 3, formula 3: PASS" in r.output
    data = json.loads(run("ideals", "D4", "--json").output)
    assert data["enumerated"] == 50 and data["pass"]


def test_ideals_csv():
    r = run("ideals", "A2", "--csv")
    assert r.exit_code == 0
    lines = [l for l in r.output.splitlines() if l.startswith("0x")]
    assert len(lines) == 5


def test_count():
    data = json.loads(run("count", "E8", "--json").output)
    assert data["all"] == 25080 and data["strict"] == 17342
    data = json.loads(run("count", "F4", "-t", "11", "--json").output)
    assert data["formula"] == 66
    assert run("count", "A2", "-t", "3").exit_code == 2  # shares a factor with h


def test_alcove():
    data = json.loads(run("alcove", "A2", "--ideal", "4", "--json").output)
    assert data["k"] == [0, 0, 1] and data["length"] == 1
    data = json.loads(run("alcove", "A2", "--ideal", "7", "--json").output)
    assert data["length"] == 4
    data = json.loads(run("alcove", "A2", "--ideal", "0", "--json").output)
    assert data["length"] == 0
    # usage errors: non-ideal mask, out-of-range mask, max on a non-strict ideal
    assert run("alcove", "A2", "--ideal", "1").exit_code == 2
    assert run("alcove", "A2", "--ideal", "ff").exit_code == 2
    assert run("alcove", "A2", "--ideal", "7", "--which", "max").exit_code == 2


def test_verify_pass_and_usage():
    r = run("verify", "A3", "--theorem", "counting")
    assert r.exit_code == 0 and "PASS" in r.output
    r = run("verify", "A2", "--theorem", "numbers", "--json")
    report = json.loads(r.output)
    assert report["pass"] and report["theorem"] == "numbers"
    assert run("verify", "A2", "--theorem", "nosuch").exit_code == 2


def test_classify_table():
    r = run("classify", "B2")
    assert r.exit_code == 0
    assert r.output.count("PASS") == 4
    r = run("classify", "B2", "--strict", "--json")
    rows = json.loads(r.output)
    assert [row["count"] for row in rows] == [0, 1, 1, 1]


def test_dset_and_simplexmap():
    data = json.loads(run("dset", "B2", "-t", "3", "--json").output)
    assert len(data["points"]) == 3
    assert run("dset", "B2", "-t", "4").exit_code == 2
    data = json.loads(run("simplexmap", "A2", "-t", "2", "--json").output)
    assert data["lambda"] == [1, 1]


def test_deterministic_output():
    a = run("verify", "B2", "--theorem", "reorder", "--seed", "42", "--json").output
    b = run("verify", "B2", "--theorem", "reorder", "--seed", "42", "--json").output
    assert a == b
