from fractions import Fraction

import pytest

import wald


def test_fixture_registry():
    names = wald.fixture_names()
    assert "L4Q3-A" in names and "CUBIC9" in names
    f = wald.fixture("CONIC5")
    assert f["points"][1] == ["1", "1", "1"]


def test_classify_exact():
    r = wald.classify(wald.fixture("L4Q3-A"), sweep_intervals=False)
    assert r["value"] == {"exact": "16/7"}
    assert wald.to_fraction(r["value"]["exact"]) == Fraction(16, 7)


def test_classify_collinear():
    pts = [(1, i, 0) for i in range(9)]
    assert wald.classify(pts)["value"]["exact"] == "1"


def test_alpha_and_sweep():
    assert wald.alpha(wald.fixture("L4Q3-D"), 2)["alpha"] == 5
    assert wald.alpha([(0, 0, 1)], 3)["alpha"] == 3
    trace = wald.sweep([(0, 0, 1)], 3)
    assert [e[2] for e in trace] == ["1", "1", "1"]


def test_bounds():
    pts = wald.fixture("L4Q3-D")["points"]
    assert wald.lower_bound(pts)["bound"] == "5/2"
    divisor = {
        "m": 2,
        "terms": [
            {"line": [4, 5], "coeff": 1},
            {"line": [4, 6], "coeff": 1},
            {"line": [5, 6], "coeff": 1},
            {"line": [0, 1], "coeff": 2},
        ],
    }
    assert wald.verify_upper(pts, divisor) == Fraction(5, 2)
    divisor["terms"][3]["coeff"] = 1
    with pytest.raises(wald.WaldError):
        wald.verify_upper(pts, divisor)


def test_errors():
    with pytest.raises(wald.WaldError):
        wald.classify([(1, 0, 0), (2, 0, 0)])
    with pytest.raises(wald.WaldError):
        wald.fixture("NOPE")
