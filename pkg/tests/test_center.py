import pytest

from algebra.parser import parse_element
from center.center import CenterError, center_products, is_central, predicted_center_series
from center.generators import (
    closed_generators,
    d_boundary_expression,
    d_series_expression,
    match_closed_generators,
    top_identities
)
from quiver.dynkin import build_quiver


def test_center_series_matches_prediction(context):
    center = context.center
    assert center.hilbert_series() == predicted_center_series(context.data)


def test_center_basis_names(d4, d5, d6, e6):
    assert d4.center.names == ["z0", "w1", "w2", "w3", "w4"]
    assert d5.center.names == ["z0", "z4", "w1", "w2", "w3"]
    assert d6.center.names == ["z0", "z4", "w1", "w2", "w3", "w4", "w5", "w6"]
    assert e6.center.names == ["z0", "z6", "z8", "w3", "w6"]


def test_basis_elements_are_central(context):
    for element in context.center.elements:
        assert is_central(context.algebra, element.element)


def test_closed_generators_match(context):
    reports = match_closed_generators(context.center, strict=True)
    assert [r["name"] for r in reports] == list(closed_generators(context.quiver))
    assert all(r["status"] == "match" for r in reports)


def test_d_generator_expressions():
    # D6: z4 has no b loops, so the c loops come first
    assert d_series_expression(5, 1).startswith("a3 a3* a3 a3* + a3* a3 a3* a3")
    assert list(closed_generators(build_quiver("D", 3))) == []
    assert list(closed_generators(build_quiver("D", 7))) == ["z4", "z8"]
    assert d_boundary_expression(4) is None


def test_d6_top_identities(d6):
    reports = top_identities(d6.center)
    assert [r["expression"] for r in reports] == [d_boundary_expression(5), "z4 z4"]
    assert all(r["status"] == "match" for r in reports)
    assert reports[1]["computed"] == {"w5": "1/1", "w6": "-1/1"}


def test_d4_boundary_element_is_w3_minus_w4(d4):
    # z0 is the unit, so z0 z4 reduces to d_1 + d'_1
    reports = top_identities(d4.center)
    assert [r["expression"] for r in reports] == [d_boundary_expression(3)]
    assert reports[0]["status"] == "match"
    assert reports[0]["computed"] == {"w3": "1/1", "w4": "-1/1"}
    element = parse_element(d4.algebra, d_boundary_expression(3))
    assert d4.center.coordinates(element) == {"w3": 1, "w4": -1}


def test_e6_generators_multiply_to_zero(e6):
    table = center_products(e6.center)
    for (left, right), result in table.items():
        if left == "z0":
            assert result == {right: 1}
        else:
            assert result == {}


def test_top_elements_have_unit_trace(e6):
    center = e6.center
    for name in center.degree_names(e6.algebra.top):
        assert e6.frobenius.trace(center[name]) == 1


def test_coordinates_of_parsed_element(d5):
    center = d5.center
    element = parse_element(d5.algebra, "2 z4 - 3 w2", center.aliases())
    assert center.coordinates(element) == {"z4": 2, "w2": -3}


def test_non_central_element_has_no_coordinates(e6):
    with pytest.raises(CenterError):
        e6.center.coordinates(e6.algebra.vertex(1))


def test_center_json(e6):
    payload = e6.center.to_json()
    assert payload["hilbert_series"] == {"0": 1, "6": 1, "8": 1, "10": 2}
    assert [g["name"] for g in payload["generators"]] == e6.center.names
