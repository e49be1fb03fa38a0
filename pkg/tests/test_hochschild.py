from fractions import Fraction

import pytest

from hochschild.cohomology import hh_space, predicted_dimensions
from hochschild.complex import CohomologyError, cochain_from_json, split_index, value_offset
from hochschild.eta import (
    analytic_eta_signed_matrix,
    complex_eta_signed_matrix,
    delta_normalize,
    eta_acts_by_sign,
    eta_signed_matrix
)
from hochschild.expressions import eps_vectors, hh6_relations
from quiver.dynkin import build_quiver
from quiver.root_data import root_data
from verification import golden


def test_index_bookkeeping():
    assert split_index(5) == (1, 2)
    assert value_offset(0, 12) == 0
    assert value_offset(4, 12) == 13
    assert value_offset(6, 12) == 24


def test_predicted_dimensions_for_e6(e6):
    data = e6.data
    assert predicted_dimensions(data, 0) == {0: 1, 6: 1, 8: 1, 10: 2}
    assert predicted_dimensions(data, 2) == {-2: 2}
    assert predicted_dimensions(data, 5) == {-14: 2, -12: 1, -10: 1, -4: 1}
    assert predicted_dimensions(data, 6) == {-24: 1, -18: 1, -16: 1, -14: 2}
    with pytest.raises(CohomologyError):
        predicted_dimensions(data, 8)


def test_dimensions_match_prediction(context):
    table = context.cohomology.check_dimensions()
    assert sorted(table) == list(range(7))


def test_differential_squares_to_zero(context):
    assert context.complex.check_square_zero(list(range(7))) > 0


def test_ranges_and_euler_characteristic(context):
    assert context.cohomology.check_ranges() == []
    assert context.cohomology.euler_defects() == []


@pytest.mark.slow
@pytest.mark.parametrize("selector", ["d4", "e6"])
def test_periodicity(contexts, selector):
    context = contexts(selector)
    shifted = context.cohomology.check_periodicity()
    assert shifted == {d - 2 * context.data.h: n for d, n in context.cohomology.dimensions(1).items()}


def test_hh_space_lists_nonzero_pieces(e6):
    spaces = hh_space(e6.cohomology, 1)
    assert sorted(spaces) == [0, 6, 8]


def test_named_relations_hold(context):
    reports = context.named.relation_reports
    assert reports
    assert all(r["status"] == "holds" for r in reports)


def test_closed_forms_match(context):
    assert all(r["status"] == "match" for r in context.named.match_reports)


def test_e6_named_classes(e6):
    named = e6.named
    assert named.names(index=1) == ["theta0", "theta6", "theta8"]
    assert named.names(index=2) == golden.hh2_names(e6.quiver) == ["f1", "f2"]
    assert named.names(index=3) == ["h1", "h2"]
    assert named.names(index=5, prefix="eps") == ["eps3", "eps6"]
    assert named.names(index=6, prefix="phi0(w") == ["phi0(w3)", "phi0(w6)"]


def test_project_returns_named_coordinates(e6):
    named = e6.named
    cochain = named.cochain("theta6") * 3 - named.cochain("theta6")
    assert named.project(cochain) == {"theta6": 2}


def test_eta_matrix_sources_agree(context):
    signed = eta_signed_matrix(context.algebra)
    assert [[Fraction(v) for v in row] for row in signed.matrix] == complex_eta_signed_matrix(context.complex)
    assert [[Fraction(v) for v in row] for row in signed.matrix] == golden.eta_matrix(context.quiver)
    analytic = analytic_eta_signed_matrix(context.algebra)
    if eta_acts_by_sign(context.algebra):
        assert analytic.matrix == signed.matrix
    else:
        assert analytic is None


def test_eta_sign_action(d4, d5, d6, e6):
    assert eta_acts_by_sign(d4.algebra)
    assert eta_acts_by_sign(d6.algebra)
    assert not eta_acts_by_sign(d5.algebra)
    assert not eta_acts_by_sign(e6.algebra)


def test_hilbert_evaluation_misses_e6_eta(e6):
    # H_36(t) / t at t = i is 1 - 1 + 2 - 1 + 1, but eta pairs its monomials up
    raw = analytic_eta_signed_matrix(e6.algebra, require_sign_action=False)
    signed = eta_signed_matrix(e6.algebra)
    assert raw.vertices == signed.vertices == [3, 6]
    assert abs(raw.matrix[0][1]) == 2
    assert signed.matrix == [[0, 0], [0, 0]]


def test_eta_kernel_is_the_y_part(context):
    signed = eta_signed_matrix(context.algebra)
    assert len(signed.kernel) == context.data.dim_y
    closed = eps_vectors(context.quiver)
    for i, vector in zip(context.data.y_indices, signed.kernel):
        assert vector == {v: Fraction(c) for v, c in closed[i].items()}


def test_cochain_json_round_trip(d5):
    for name in ("theta4", "f4", "h4", "zeta0", "psi4", "phi0(z0)"):
        cochain = d5.named.cochain(name)
        assert cochain_from_json(d5.algebra, cochain.to_json()) == cochain


def test_delta_normalize():
    vectors = [{1: Fraction(1), 2: Fraction(1)}, {2: Fraction(1)}]
    assert delta_normalize(vectors, [1, 2]) == [{1: 1}, {2: 1}]
    with pytest.raises(CohomologyError):
        delta_normalize([{1: Fraction(1)}, {1: Fraction(2)}], [1, 2])
    with pytest.raises(CohomologyError):
        delta_normalize(vectors, [1])


@pytest.mark.parametrize("n", range(3, 12))
def test_hh6_relation_count(n):
    data = root_data(build_quiver("D", n))
    assert len(hh6_relations(build_quiver("D", n))) == data.n_fixed - data.dim_y
