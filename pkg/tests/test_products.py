from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import given, strategies as st

from products.cup import CupProducts, pair_matrix
from products.kappa import ProductError, analytic_kappa_matrix, check_m_beta, signed_adjacency
from products.table import (
    NONZERO,
    NONZERO_PAIRS,
    ZERO_BY_DEGREE,
    ProductEntry,
    ProductTable,
    Verdict,
    check_verdicts,
    shift,
    zero_product_verdict
)
from quiver.dynkin import build_quiver, parse_selector
from quiver.root_data import root_data
from verification import golden


def _fractions(matrix):
    return [[Fraction(v) for v in row] for row in matrix]


def _shell(quiver):
    """Just enough of an algebra for the root-data-only helpers."""
    return SimpleNamespace(quiver=quiver, data=root_data(quiver))


def test_m_alpha(context):
    assert context.products.m_alpha() == _fractions(golden.m_alpha(context.quiver))


def test_m_beta(context):
    if not context.data.y_indices:
        pytest.skip("no Y-part")
    assert context.products.m_beta() == _fractions(golden.m_beta(context.quiver))


@given(st.integers(min_value=3, max_value=12))
def test_d_m_beta_inverts_signed_adjacency(n):
    shell = _shell(build_quiver("D", n))
    check_m_beta(shell, _fractions(golden.m_beta(shell.quiver)))


@pytest.mark.parametrize("selector", ["e6", "e7", "e8"])
def test_e_m_beta_inverts_signed_adjacency(selector):
    shell = _shell(parse_selector(selector))
    check_m_beta(shell, _fractions(golden.m_beta(shell.quiver)))


def test_check_m_beta_rejects_a_wrong_matrix():
    shell = _shell(parse_selector("e6"))
    with pytest.raises(ProductError):
        check_m_beta(shell, _fractions([[0, 6], [-6, 0]]))
    with pytest.raises(ProductError):
        check_m_beta(shell, _fractions([[1, -6], [6, 0]]))


def test_signed_adjacency_d6():
    # I' = {2, .., 5}: a2: 3 -> 2, a3: 4 -> 3, a4: 5 -> 4
    assert signed_adjacency(_shell(build_quiver("D", 5))) == [
        [0, 1, 0, 0],
        [-1, 0, 1, 0],
        [0, -1, 0, 1],
        [0, 0, -1, 0],
    ]


@pytest.mark.parametrize("selector", ["d4", "d6"])
def test_kappa_matches_hilbert_formula(contexts, selector):
    context = contexts(selector)
    assert analytic_kappa_matrix(context.algebra).matrix == context.products.kappa().matrix


def test_kappa_formula_needs_eta_sign_action(e6):
    assert analytic_kappa_matrix(e6.algebra) is None
    raw = analytic_kappa_matrix(e6.algebra, require_sign_action=False)
    # H_33 = 1 + 2t^2 + 3t^4 + 3t^6 + 2t^8 + t^10 gives t H'(t) / 2 = -2 at t = i
    assert raw.entry(3, 3) == -2
    assert e6.products.kappa().matrix == [[0, -6], [6, 0]]


def test_f_times_h_is_the_identity_pairing(context):
    products = context.products
    for i in products.f_indices():
        for j in products.f_indices():
            assert dict(products.f_times_h(i, j)) == ({"psi0": 1} if i == j else {})


def test_theta0_zeta0_is_psi0(context):
    assert dict(context.products.theta_times_zeta(0, 0)) == {"psi0": 1}


def test_e6_theta0_f1(e6):
    assert dict(e6.table.get("theta0", "f1")) == {"h1": -8, "h2": -4}
    assert dict(e6.table.get("f1", "f1")) == {"zeta0": -8}


def test_eps_products_follow_m_beta(e6):
    assert dict(e6.products.eps_times_eps(3, 6)) == {"phi4(zeta0)": 6}
    assert dict(e6.products.eps_times_eps(3, 3)) == {}


def test_associativity_checks_ignore_cached_matrices(e6):
    products = CupProducts(e6.named)
    products._m_alpha = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]
    products._m_beta = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]
    reports = products.associativity_reports()
    assert all(r["status"] == "holds" for r in reports)
    f_block = {r["check"]: r["left"] for r in reports if r["check"].startswith("(theta0 f")}
    assert f_block["(theta0 f1) f1 = theta0(f1 f1)"] == "-8/1"
    assert f_block["(theta0 f1) f2 = theta0(f1 f2)"] == "-4/1"
    eps_block = {r["check"]: r["left"] for r in reports if r["check"].startswith("theta0(eps")}
    assert eps_block["theta0(eps3 eps6) = (theta0 eps3) eps6"] == "6/1"
    assert eps_block["theta0(eps3 eps3) = (theta0 eps3) eps3"] == "0/1"


def test_table_checks_hold(context):
    table = context.table
    assert table.checks
    assert all(c["status"] == "holds" for c in table.checks)
    for verdict in table.verdicts:
        if verdict.kind == NONZERO:
            assert (verdict.i, verdict.j) in NONZERO_PAIRS


@given(st.integers(min_value=3, max_value=15))
def test_verdicts_cover_every_block(n):
    data = root_data(build_quiver("D", n))
    for i in range(1, 6):
        for j in range(i, 6):
            verdict = zero_product_verdict(data, i, j)
            assert verdict.kind in ("zero-by-degree", "zero-by-paper-argument", "nonzero-with-formula")
            if verdict.kind == NONZERO:
                assert (i, j) in NONZERO_PAIRS


def test_verdict_range_is_checked():
    with pytest.raises(ProductError):
        zero_product_verdict(root_data(parse_selector("e6")), 0, 1)


def test_unknown_pairing(d5):
    with pytest.raises(ProductError):
        pair_matrix(d5.products, "gamma")


def test_shift_renames_into_the_next_period():
    assert dict(shift({"zeta0": Fraction(3)}, 4)) == {"phi4(zeta0)": 3}
    assert dict(shift({"zeta0": Fraction(3)}, 0)) == {"zeta0": 3}


def test_zero_verdict_with_nonzero_entry_is_rejected():
    table = ProductTable("E6")
    table.verdicts = [Verdict(1, 1, ZERO_BY_DEGREE, "test")]
    table.add(ProductEntry(1, 1, "theta0", "theta6", {"theta6": Fraction(1)}, "chain-formula"))
    with pytest.raises(ProductError):
        check_verdicts(table)


def test_table_json_round_trip(e6):
    table = e6.table
    again = ProductTable.from_json(table.to_json())
    assert len(again) == len(table)
    assert dict(again.get("theta0", "f1")) == {"h1": -8, "h2": -4}
    assert [v.kind for v in again.verdicts] == [v.kind for v in table.verdicts]
