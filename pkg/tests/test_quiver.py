import pytest
from hypothesis import given, strategies as st

from quiver.dynkin import QuiverError, build_quiver, parse_selector, parse_selectors
from quiver.root_data import root_data

d_params = st.integers(min_value=3, max_value=15)


def test_parse_selector_accepts_both_families():
    assert parse_selector("e6").name == "E6"
    assert parse_selector("D5").rank_param == 4
    assert parse_selector(" d_7 ").name == "D7"
    assert [q.name for q in parse_selectors("d6,d7,e6")] == ["D6", "D7", "E6"]


@pytest.mark.parametrize("selector", ["a5", "d3", "e9", "", "d", "e6x"])
def test_parse_selector_rejects_unsupported(selector):
    with pytest.raises(QuiverError):
        parse_selector(selector)


def test_build_quiver_rejects_small_d():
    with pytest.raises(QuiverError):
        build_quiver("D", 2)


def test_e6_root_data():
    data = root_data(parse_selector("e6"))
    assert data.h == 12
    assert data.exponents == (1, 4, 5, 7, 8, 11)
    assert data.fixed == (3, 6)
    assert data.r_minus == 2
    assert data.top_degree == 10
    assert data.center_degrees() == [0, 6, 8]
    assert data.degree_ranges()[6] == (-24, -14)


def test_d_nakayama_permutation():
    assert root_data(parse_selector("d4")).nu_map() == {1: 1, 2: 2, 3: 3, 4: 4}
    data = root_data(parse_selector("d5"))
    assert data.nu_of(4) == 5 and data.nu_of(5) == 4
    assert data.fixed == (1, 2, 3)


def test_star_reverses_arrows():
    quiver = parse_selector("e7")
    for i, arrow in enumerate(quiver.arrows):
        partner = quiver.arrows[quiver.star(i)]
        assert (partner.source, partner.target) == (arrow.target, arrow.source)
        assert partner.starred != arrow.starred
        assert quiver.star(quiver.star(i)) == i


@given(d_params)
def test_d_exponents_are_symmetric(n):
    quiver = build_quiver("D", n)
    data = root_data(quiver)
    assert data.h == 2 * n
    assert len(data.exponents) == len(quiver.vertices)
    assert sorted(data.h - m for m in data.exponents) == list(data.exponents)


@given(d_params)
def test_y_part_matches_its_index_set(n):
    data = root_data(build_quiver("D", n))
    assert data.dim_y == len(data.y_indices)
    assert set(data.y_indices) <= set(data.fixed)


@pytest.mark.parametrize("selector", ["e6", "e7", "e8"])
def test_e_y_part_matches_its_index_set(selector):
    data = root_data(parse_selector(selector))
    assert data.dim_y == len(data.y_indices)


def test_root_data_json_uses_plain_types():
    payload = root_data(parse_selector("d5")).to_json()
    assert payload["nu"] == {"1": 1, "2": 2, "3": 3, "4": 5, "5": 4}
    assert payload["F"] == [1, 2, 3]
    assert len(payload["C"]) == 5
