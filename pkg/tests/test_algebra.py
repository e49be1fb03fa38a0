from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algebra.basis import AlgebraError, basis_from_json, basis_to_json, compute_basis
from algebra.cache import BasisCache, load_algebra, load_basis
from algebra.frobenius import FrobeniusError, FrobeniusForm
from algebra.hilbert import PolynomialMatrix, check_hilbert, closed_form_hilbert, closed_form_tail, hilbert_matrix
from algebra.parser import ParseError, parse_element
from quiver.dynkin import parse_selector
from quiver.root_data import root_data
from verification import golden

DIMENSIONS = {"d4": 28, "d5": 60, "d6": 110, "e6": 156}


def test_total_dimension(context):
    basis = context.algebra.basis
    assert basis.complete
    assert basis.dimension() == DIMENSIONS[context.quiver.selector]
    assert basis.max_degree == context.data.top_degree


def test_hilbert_matrix_matches_closed_form(context):
    matrix = check_hilbert(context.algebra.basis)
    assert closed_form_tail(context.data, matrix.vertices) is None
    assert int(matrix.at_one().sum()) == DIMENSIONS[context.quiver.selector]


def _terms(poly):
    return {e: int(c) for (e,), c in poly.as_dict().items()}


def test_e6_hilbert_columns(e6):
    matrix = hilbert_matrix(e6.algebra.basis)
    for i in e6.quiver.vertices:
        for j in e6.quiver.vertices:
            assert _terms(matrix.entry(i, j)) == golden.hilbert_entry("e6", i, j)
    assert int(matrix.coefficient(2)[2, 2]) == 2
    assert _terms(matrix.entry(3, 3)) == {0: 1, 2: 2, 4: 3, 6: 3, 8: 2, 10: 1}


@pytest.mark.parametrize("selector", ["e6", "e7", "e8"])
def test_hilbert_columns_from_recursion(selector):
    quiver = parse_selector(selector)
    data = root_data(quiver)
    matrix = closed_form_hilbert(data, quiver.vertices, data.top_degree)
    for i in quiver.vertices:
        for j in quiver.vertices:
            assert _terms(matrix.entry(i, j)) == golden.hilbert_entry(selector, i, j)


def test_hilbert_golden_entries():
    assert golden.hilbert_entry("e7", 6, 6) == {0: 1, 6: 1, 10: 1, 16: 1}
    assert golden.hilbert_entry("e6", 6, 6) == {0: 1, 4: 1, 6: 1, 10: 1}
    assert golden.hilbert_entry("e8", 2, 5) == {3: 1, 5: 2, 7: 2, 9: 2, 11: 2, 13: 3, 15: 3,
                                                17: 2, 19: 2, 21: 2, 23: 2, 25: 1}


def test_d_block_dimensions(context):
    quiver = context.quiver
    if quiver.family != "D":
        pytest.skip("D series only")
    dims = hilbert_matrix(context.algebra.basis).at_one()
    for p, i in enumerate(quiver.vertices):
        for q, j in enumerate(quiver.vertices):
            assert int(dims[p, q]) == golden.d_block_dimension(quiver.rank_param, i, j)


def test_polynomial_matrix_json(d4):
    matrix = hilbert_matrix(d4.algebra.basis)
    assert PolynomialMatrix.from_json(matrix.to_json()) == matrix


def test_top_degree_is_nu_twisted(context):
    algebra = context.algebra
    for v in algebra.quiver.vertices:
        assert len(algebra.basis.block(v, algebra.nu[v], algebra.top)) == 1
    assert algebra.basis.dimension(degree=algebra.top) == len(algebra.quiver.vertices)


def test_leaf_relation(e6):
    algebra = e6.algebra
    assert parse_element(algebra, "a1 a1*").is_zero()
    # relation at vertex 2: a2 a2* - a1* a1 = 0
    assert parse_element(algebra, "a2 a2*") == parse_element(algebra, "a1* a1")


@pytest.mark.parametrize("selector", ["d4", "d5"])
def test_leaf_loop_vanishes_in_d(contexts, selector):
    algebra = contexts(selector).algebra
    assert algebra.normal_form([(1, ["a1*", "a1"])]).is_zero()
    assert algebra.vertex(1) * algebra.vertex(1) == algebra.vertex(1)
    assert (algebra.vertex(1) * algebra.vertex(2)).is_zero()


def test_e6_relation_consequences(e6):
    algebra = e6.algebra
    assert parse_element(algebra, "a5 x5 x3 x5").is_zero()
    assert parse_element(algebra, "e1 + e1") == algebra.vertex(1) * 2
    z8 = parse_element(algebra, "-a2 x5 x3 x5 a2* - x5 x3 x3 x5 - a3 x5 x2 x5 a3*")
    assert z8 == parse_element(algebra, "-a2 x5 x3 x5 a2* - x5 x3^2 x5 - a3 x5 x2 x5 a3*")
    coords = e6.center.coordinates(z8)
    assert list(coords) == ["z8"] and coords["z8"] != 0


def test_trace_vanishes_below_top(context):
    algebra = context.algebra
    for v in algebra.quiver.vertices:
        assert context.frobenius.trace(algebra.vertex(v)) == 0
    for path in algebra.basis.by_degree[2]:
        assert context.frobenius.trace(algebra.basis_element(path)) == 0


def test_parser_errors(e6):
    algebra = e6.algebra
    with pytest.raises(ParseError) as excinfo:
        parse_element(algebra, "a1 + (a2")
    assert excinfo.value.position is not None
    with pytest.raises(ParseError):
        parse_element(algebra, "a9")
    with pytest.raises(ParseError):
        parse_element(algebra, "q3")


def test_parser_powers_and_scalars(d4):
    algebra = d4.algebra
    x = parse_element(algebra, "a1 a1*")
    assert not x.is_zero()
    assert parse_element(algebra, "(a1 a1*)^2") == x * x
    assert parse_element(algebra, "3/2 a1 a1* - a1 a1*") == x * Fraction(1, 2)


def test_anchor_has_unit_trace(context):
    algebra = context.algebra
    assert context.frobenius.trace(parse_element(algebra, algebra.data.anchor)) == 1
    for v, omega in context.frobenius.omegas().items():
        assert context.frobenius.trace(omega) == 1


def test_nakayama_identity(context):
    assert context.frobenius.check_nakayama() == []


def test_dual_basis_pairs_to_identity(d5):
    frobenius = d5.frobenius
    algebra = d5.algebra
    paths = algebra.basis.all_paths()
    for x in paths[::7]:
        dual = frobenius.dual(x)
        for y in algebra.basis.block(x.source, x.target, x.degree):
            expected = 1 if y == x else 0
            assert frobenius.pair(algebra.basis_element(y), dual) == expected


def test_eta_is_an_involution(context):
    algebra = context.algebra
    for path in algebra.basis.all_paths():
        x = algebra.basis_element(path)
        assert algebra.nakayama(algebra.nakayama(x)) == x


@settings(max_examples=300, deadline=None)
@given(data=st.data())
def test_star_and_associativity(e6, data):
    algebra = e6.algebra
    paths = algebra.basis.all_paths()
    starts = {}
    for path in paths:
        starts.setdefault(path.source, []).append(path)
    x = data.draw(st.sampled_from(paths))
    y = data.draw(st.sampled_from(starts[x.target]))
    z = data.draw(st.sampled_from(starts[y.target]))
    a, b, c = (algebra.basis_element(p) for p in (x, y, z))
    assert algebra.star(a * b) == algebra.star(b) * algebra.star(a)
    assert (a * b) * c == a * (b * c)


def test_partial_basis_refuses_frobenius():
    algebra = load_algebra("e6", max_degree=4, cache=BasisCache(enabled=False))
    assert not algebra.basis.complete
    assert algebra.basis.max_degree == 4
    check_hilbert(algebra.basis)
    with pytest.raises(FrobeniusError):
        FrobeniusForm(algebra)


def test_partial_basis_product_beyond_bound():
    algebra = load_algebra("e6", max_degree=4, cache=BasisCache(enabled=False))
    path = algebra.basis.by_degree[4][0]
    arrow = algebra.quiver.arrows[algebra.quiver.arrows_from(path.target)[0]]
    with pytest.raises(AlgebraError):
        algebra.basis_element(path) * algebra.arrow(arrow.name)


@pytest.mark.parametrize("bound", [4, 9])
def test_bound_at_or_above_top_is_complete(bound):
    quiver = parse_selector("d4")
    basis = compute_basis(quiver, root_data(quiver), bound)
    assert basis.complete
    assert basis.dimension() == DIMENSIONS["d4"]


def test_vertex_out_of_range(d4):
    with pytest.raises(AlgebraError):
        d4.algebra.vertex(9)


def test_basis_cache_round_trip(tmp_path):
    quiver = parse_selector("d4")
    data = root_data(quiver)
    cache = BasisCache(str(tmp_path), enabled=True)
    basis = load_basis(quiver, cache=cache)
    assert (tmp_path / f"basis-d4-v{cache.version}.json").exists()
    cached = cache.load(quiver, data)
    assert cached.all_paths() == basis.all_paths()
    assert cached.right_table == basis.right_table


def test_partial_basis_is_not_cached(tmp_path):
    cache = BasisCache(str(tmp_path), enabled=True)
    assert cache.store(compute_basis(parse_selector("d4"), root_data(parse_selector("d4")), 2)) is None
    assert list(tmp_path.iterdir()) == []


def test_corrupt_cache_is_ignored(tmp_path):
    quiver = parse_selector("d4")
    cache = BasisCache(str(tmp_path), enabled=True)
    (tmp_path / f"basis-d4-v{cache.version}.json").write_text("{\"paths\": 3}")
    assert cache.load(quiver, root_data(quiver)) is None


def test_basis_json_round_trip(d6):
    basis = d6.algebra.basis
    restored = basis_from_json(basis_to_json(basis), basis.quiver, basis.data)
    assert restored.all_paths() == basis.all_paths()
