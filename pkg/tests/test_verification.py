from fractions import Fraction

import pytest

from algebra.linalg import dense_nullspace
from hochschild.expressions import eps_vectors
from quiver.dynkin import build_quiver, parse_selector
from quiver.root_data import root_data
from utils.file_utils import load_json
from verification import golden
from verification.checks import FAIL, PASS, SKIP, VerificationError, check_names, select_checks
from verification.verifier import QuiverVerifier


@pytest.mark.parametrize("selector", ["d4", "d5", "d6", "d7", "e6", "e7", "e8"])
def test_golden_m_beta_is_skew(selector):
    matrix = golden.m_beta(parse_selector(selector))
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            assert value == -matrix[j][i]


@pytest.mark.parametrize("n", range(3, 12))
def test_golden_eta_kernel_contains_the_y_part(n):
    quiver = build_quiver("D", n)
    data = root_data(quiver)
    matrix = golden.eta_matrix(quiver)
    vertices = list(data.fixed)
    assert len(matrix) == len(vertices)
    assert len(dense_nullspace(matrix, len(vertices))) == data.dim_y
    for i, vector in eps_vectors(quiver).items():
        column = [Fraction(vector.get(v, 0)) for v in vertices]
        assert all(sum(a * b for a, b in zip(row, column)) == 0 for row in matrix)


def test_select_checks():
    assert [s.name for s in select_checks(["kappa", "hilbert"])] == ["hilbert", "kappa"]
    assert "periodicity" not in [s.name for s in select_checks(include_slow=False)]
    assert [s.name for s in select_checks()] == check_names()
    with pytest.raises(VerificationError):
        select_checks(["hilbert", "nonsense"])


def test_d4_suite_passes(basis_cache, tmp_path):
    verifier = QuiverVerifier([parse_selector("d4")], cache=basis_cache, include_slow=False)
    results = verifier.verify()
    failures = [r for r in results if r.status == FAIL]
    assert failures == []
    assert verifier.passed and not verifier.partial
    assert verifier.count(PASS) == len(select_checks(include_slow=False))

    path = verifier.save_report(str(tmp_path / "verify.json"))
    report = load_json(path)
    assert report["passed"] is True
    assert {r["check"] for r in report["results"]} == set(s.name for s in verifier.specs)
    frame = verifier.summary_frame()
    assert list(frame.index) == ["D4"]
    assert (frame.loc["D4"] == PASS).all()


def test_partial_run_skips_full_basis_checks(tmp_path):
    from algebra.cache import BasisCache
    verifier = QuiverVerifier([parse_selector("e6")], max_degree=4, cache=BasisCache(str(tmp_path), enabled=False))
    results = verifier.verify()
    assert verifier.partial
    assert verifier.passed
    by_check = {r.check: r.status for r in results}
    assert by_check["hilbert"] == PASS
    assert all(status == SKIP for check, status in by_check.items() if check != "hilbert")
    assert verifier.to_json()["partial"] is True


@pytest.mark.slow
@pytest.mark.parametrize("selector", ["e7", "e8"])
def test_large_e_suite_passes(contexts, selector):
    verifier = QuiverVerifier([parse_selector(selector)], cache=contexts(selector).cache, include_slow=False)
    verifier.verify()
    assert verifier.passed, [r.to_json() for r in verifier.results if r.status == FAIL]
