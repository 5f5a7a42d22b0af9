import json

import pytest

import stacky_count as sc


def test_closed_matches_brute():
    assert sc.closed_count("3", [1, 2], 1) == 72
    assert sc.brute_count("3", [1, 2], 1) == 72
    assert sc.brute_count("4", [1, 1], 1, workers=2) == sc.closed_count("4", [1, 1], 1)


def test_iso_counts():
    assert sc.iso_count(3, [2, 4], 1) == 3888
    assert sc.brute_iso_count("5", [2, 2], 1) == 6000


def test_polynomial_and_big_values():
    assert sc.closed_polynomial([1, 1], 1) == "q^3 - q"
    big = sc.closed_count("1000003", [4, 6], 5)
    assert isinstance(big, int) and big > 2**64


def test_cohomology_table():
    t = sc.cohomology(0, 1, 1)
    assert [g["i"] for g in t["groups"]] == [0, 3]
    assert t["dimension"] == 3
    t1 = sc.cohomology(1, 1, 3, [4, 6])
    assert t1["stable_below"] == 1


def test_misc():
    assert sc.picard([1, 1], 3) == "Z/6"
    assert sc.bmanin("gamma1-2", 3, "531441") == 3888


def test_errors():
    with pytest.raises(sc.StackyError):
        sc.closed_count("2", [2, 4], 1)
    with pytest.raises(ValueError):
        sc.bmanin("nope", 3, "10")


def test_cli_roundtrip():
    code, out, _ = sc.run(["--json", "count", "--weights", "1,1,1", "--n", "1", "--q", "5"])
    assert code == 0
    assert json.loads(out)["value"] == "3720"
    code, _, err = sc.run(["bogus"])
    assert code == 2
