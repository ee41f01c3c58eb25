import json
from fractions import Fraction

import pytest

import maxdeg


def test_counts():
    assert maxdeg.counts("2conn-outerplanar", 4) == {2: 1, 3: 1, 4: 9}
    assert maxdeg.counts("conn-sp", 6)[6] == 16146


def test_constants():
    c = maxdeg.constants("2conn-sp")
    assert c["q"] == pytest.approx(0.7620402, abs=1e-6)
    assert c["c"] == pytest.approx(3.679772, abs=2e-6)
    assert set(c) == {"class", "x0", "q", "c", "auxiliaries", "residuals"}


def test_degree_table_exact():
    d = maxdeg.degree_table("2conn-outerplanar", 4, 3, pairs=True)
    assert d["single"] == [0, 0, Fraction(2, 3), Fraction(1, 3)]
    assert sum(map(sum, d["pair"])) == 1


def test_sample_is_member_and_reproducible():
    for cls in maxdeg.classes:
        edges = maxdeg.sample(cls, 30, 11)
        assert edges == maxdeg.sample(cls, 30, 11)
        assert maxdeg.is_member(cls, 30, edges)


def test_bounds_and_experiment():
    rows, lo, hi = maxdeg.bounds("conn-outerplanar", 20)
    assert all(r[1] <= r[2] + 1e-12 for r in rows)
    r = json.loads(maxdeg.experiment("conn-outerplanar", [20], 200, 3, 2))
    assert lo - 0.5 <= r["records"][0]["mean"] <= hi + 0.5


def test_cli_and_errors():
    code, out, _ = maxdeg.run_cli(["counts", "conn-outerplanar", "4"])
    assert code == 0 and out.endswith("conn-outerplanar,4,37\n")
    assert maxdeg.run_cli(["counts", "nope", "4"])[0] != 0
    with pytest.raises(ValueError):
        maxdeg.counts("nope", 3)
    assert maxdeg.verify(4)
