import pytest

import paritypoly as pp


def test_unknot_is_one():
    assert str(pp.phi_delta(pp.DiagramCode())) == "1"


def test_classical_trefoil_vanishes():
    assert pp.phi_delta(pp.DiagramCode.from_gauss("O1-U2-O3-U1-O2-U3-")).is_zero()


def test_knot_31():
    r = pp.compute(pp.DiagramCode.from_gauss("O1-O2-U1-O3+U2-U3+"))
    assert (r["q_width"], r["h_width"]) == (2, 2)
    assert (r["virtual_lower"], r["odd_lower"]) == (1, 1)
    assert r["odd"] == 2 and r["even"] == 1


def test_zero_has_no_widths():
    r = pp.compute(pp.DiagramCode.parse("O1+ U1+"))
    assert r["polynomial"].is_zero()
    assert r["q_width"] is None


def test_json_round_trip():
    p = pp.LaurentPoly.parse("q^2 + h^2 + st - sth^2")
    back = pp.LaurentPoly.from_json(p.to_json())
    assert back == p
    assert str(back) == str(p)


def test_arithmetic_and_units():
    a = pp.LaurentPoly.parse("1 - q")
    assert a * pp.LaurentPoly.parse("1 + q") == pp.LaurentPoly.parse("1 - q^2")
    assert pp.equal_up_to_unit(pp.LaurentPoly.parse("q^-1 - q"), pp.LaurentPoly.parse("1 - q^2"))
    assert pp.LaurentPoly.parse("q^-1 - q").canonical() == pp.LaurentPoly.parse("1 - q^2")


def test_parity_and_presentation():
    d = pp.DiagramCode.parse("O1+ U2+ U1+ O3+ O2+ V4x U3+ V4y")
    assert d.parity() == {1: "odd", 2: "even", 3: "odd"}
    assert pp.presentation(pp.DiagramCode()).startswith("generators: s q h")


def test_errors():
    with pytest.raises(ValueError):
        pp.DiagramCode.parse("O1+ U1-")
    with pytest.raises(ValueError):
        pp.LaurentPoly.parse("2x")
