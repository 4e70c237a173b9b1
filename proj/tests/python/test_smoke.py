import pytest

import pvkit


def test_parse():
    assert pvkit.parse_expression("-(x+1)/x") == "(-x - 1)/x"
    assert pvkit.parse_expression("zeta(4)^2") == "-1"
    with pytest.raises(pvkit.PvkitError, match="DivisionByZeroExpression"):
        pvkit.parse_expression("x/(x-x)")


def test_solvers():
    assert pvkit.solve_mult("(x+1)/x") == "x"
    assert pvkit.solve_mult("x") is None
    assert pvkit.solve_add("1", sigma="qshift", q="2") is None
    assert pvkit.solve_add("1/(x^2+x)") == "-1/x"
    assert pvkit.dispersion("x+3", "x") == 3
    assert pvkit.torsion_order("-2", sigma="qshift", q="2") == (2, "x^2")


def test_lattice():
    rows = pvkit.relation_lattice(["-1", "-(x+1)/x"])
    assert rows == [([1, -1], "1/x"), ([2, 0], "1")]
    assert pvkit.invariant_factors([r for r, _ in rows], 2) == [1, 2]


def test_reports():
    g = pvkit.group("scalar(-1)")
    assert g["group"]["name"] == "Z/2Z"
    assert g["group"]["coordinate_ideal"] == ["X^2 - 1"]
    b = pvkit.invariants("unipotent(1)", sigma="qshift", q=2)
    assert b["presentation"]["krull_dim"] == 1
    assert b["group"]["unipotent_dim"] == 1
    c = pvkit.pv("scalar(-2)", sigma="qshift", q=2)
    assert c["presentation"]["generators"] == ["Y^2 - x^2"]
    assert c["presentation"]["ell"] == 2
    bc = pvkit.basechange("scalar(-1)", "transcendental:1")
    assert bc["base_change"]["transport_ok"]
    assert pvkit.check_connection("scalar(-1)", "Y", "-Y")["connection"]["matrix"] == [["-1"]]
    with pytest.raises(pvkit.PvkitError, match="NotConstant"):
        pvkit.check_connection("scalar(x)", "Y", "x*Y")


def test_golden_suite():
    results = pvkit.verify_examples()
    assert len(results) >= 3
    assert all(passed for _, passed, _ in results)
