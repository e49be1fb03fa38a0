import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from algebra.basis import basis_from_json, basis_to_json
from algebra.hilbert import check_hilbert, closed_form_tail
from center.center import center_products
from center.generators import top_identities
from config.config_manager import get_config
from hochschild.complex import Cochain, cochain_from_json
from hochschild.eta import analytic_eta_signed_matrix, complex_eta_signed_matrix, eta_signed_matrix
from hochschild.expressions import eps_vectors
from products.kappa import analytic_kappa_matrix
from products.table import NONZERO, NONZERO_PAIRS, ProductTable
from utils.serialization import format_rational, matrix_from_json, matrix_to_json
from verification import golden
from verification.context import QuiverContext

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


class VerificationError(Exception):
    """Exception raised when a computed value disagrees with its reference."""
    pass


@dataclass
class CheckResult:
    quiver: str
    check: str
    status: str
    detail: str

    def to_json(self) -> Dict[str, str]:
        return {"quiver": self.quiver, "check": self.check, "status": self.status, "detail": self.detail}


def _fail(quiver: str, message: str) -> None:
    error_msg = f"{quiver}: {message}"
    logger.error(error_msg)
    raise VerificationError(error_msg)


def _as_fractions(matrix) -> List[List[Fraction]]:
    return [[Fraction(v) for v in row] for row in matrix]


def _combination_text(combination: Dict[str, Any]) -> Dict[str, str]:
    return {name: format_rational(c) for name, c in combination.items()}


class QuiverChecks:
    """
    The verification suite for one quiver.

    Each check returns a short detail string and raises on disagreement.
    Checks flagged as needing the full basis are skipped for partial runs.
    """

    def __init__(self, context: QuiverContext):
        self.context = context
        self.name = context.quiver.name
        config = get_config()
        self.seed = config.get("computation", "random_seed", default=0)
        self.samples = config.get("computation", "property_samples", default=1000)

    # algebra

    def hilbert(self) -> str:
        algebra = self.context.algebra
        matrix = check_hilbert(algebra.basis)
        tail = closed_form_tail(algebra.data, matrix.vertices)
        if tail is not None:
            _fail(self.name, f"closed-form Hilbert expansion is nonzero in degree {tail}")
        quiver = self.context.quiver
        if self.context.complete:
            for i in quiver.vertices:
                for j in quiver.vertices:
                    got = {e: int(c) for (e,), c in matrix.entry(i, j).as_dict().items()}
                    if quiver.family == "E":
                        want = golden.hilbert_entry(quiver.selector, i, j)
                        if got != want:
                            _fail(self.name, f"H_{i},{j} has terms {got}, expected {want}")
                    elif sum(got.values()) != golden.d_block_dimension(quiver.rank_param, i, j):
                        _fail(self.name, f"dim e_{i} A e_{j} = {sum(got.values())}, expected "
                                         f"{golden.d_block_dimension(quiver.rank_param, i, j)}")
        return f"{len(algebra.basis.all_paths())} basis paths through degree {algebra.basis.max_degree}"

    def frobenius(self) -> str:
        frobenius = self.context.frobenius
        algebra = self.context.algebra
        duals = frobenius.dual_basis()
        failures = frobenius.check_nakayama()
        if failures:
            x, y = failures[0]
            _fail(self.name, f"f(xy) != f(y eta(x)) for {algebra.basis.path_label(x)}, "
                             f"{algebra.basis.path_label(y)} ({len(failures)} pairs)")
        for path in algebra.basis.all_paths():
            x = algebra.basis_element(path)
            if algebra.nakayama(algebra.nakayama(x)) != x:
                _fail(self.name, f"eta^2 moves {algebra.basis.path_label(path)}")
        return f"nondegenerate on {len(duals)} paths, Nakayama identity and eta^2 = id hold"

    def properties(self) -> str:
        """Random star anti-automorphism and associativity samples."""
        algebra = self.context.algebra
        paths = algebra.basis.all_paths()
        starts: Dict[int, List] = {}
        for path in paths:
            starts.setdefault(path.source, []).append(path)
        rng = np.random.default_rng(self.seed)

        def follow(path):
            options = starts[path.target]
            return options[int(rng.integers(len(options)))]

        for _ in range(self.samples):
            x = paths[int(rng.integers(len(paths)))]
            y = follow(x)
            z = follow(y)
            a, b, c = (algebra.basis_element(p) for p in (x, y, z))
            if algebra.star(a * b) != algebra.star(b) * algebra.star(a):
                _fail(self.name, f"(xy)* != y* x* for x = {algebra.basis.path_label(x)}, "
                                 f"y = {algebra.basis.path_label(y)}")
            if (a * b) * c != a * (b * c):
                _fail(self.name, f"(xy)z != x(yz) for {[algebra.basis.path_label(p) for p in (x, y, z)]}")
        return f"{self.samples} samples with seed {self.seed}"

    # center

    def center(self) -> str:
        center = self.context.center
        quiver = self.context.quiver
        bad = [r for r in center.match_reports if r["status"] != "match"]
        if bad:
            _fail(self.name, f"closed generator {bad[0]['name']} {bad[0]['status']}")
        identities = top_identities(center)
        bad = [r for r in identities if r["status"] != "match"]
        if bad:
            _fail(self.name, f"{bad[0]['expression']} = {bad[0]['computed']}, expected {bad[0]['expected']}")

        expected = golden.center_products(quiver)
        table = center_products(center)
        top = self.context.algebra.top
        degrees = {e.name: e.degree for e in center.elements}
        generators = [n for n in center.z_names() if degrees[n] > 0]
        for i, left in enumerate(generators):
            for right in generators[i:]:
                computed = {n: c for n, c in table[(left, right)].items() if c}
                if (left, right) in expected:
                    want = {n: Fraction(c) for n, c in expected[(left, right)].items()}
                elif degrees[left] + degrees[right] != top:
                    want = {}
                else:
                    continue
                if computed != want:
                    _fail(self.name, f"{left} {right} = {_combination_text(computed)}, "
                                     f"expected {_combination_text(want)}")
        return f"{len(center.elements)} basis elements, {len(identities)} top identities"

    # cohomology

    def hh_dimensions(self) -> str:
        cohomology = self.context.cohomology
        cohomology.check_dimensions()
        checked = self.context.complex.check_square_zero()
        ranges = cohomology.check_ranges()
        if ranges:
            _fail(self.name, ranges[0])
        defects = cohomology.euler_defects()
        if defects:
            degree, difference, rank = defects[0]
            _fail(self.name, f"Euler characteristic defect {difference} != rank {rank} in degree {degree}")
        return f"HH^0 .. HH^6 agree with the predicted dimensions, d^2 = 0 on {checked} pieces"

    def periodicity(self) -> str:
        shifted = self.context.cohomology.check_periodicity()
        return f"HH^7 = HH^1[-2h] in {len(shifted)} degrees"

    def hh2_hh3(self) -> str:
        named = self.context.named
        algebra = self.context.algebra
        want = golden.hh2_names(self.context.quiver)
        got = named.names(index=2)
        if got != want:
            _fail(self.name, f"HH^2 basis {got}, expected {want}")
        space = self.context.cohomology.space(3, -2)
        for v in algebra.quiver.vertices:
            j = algebra.nu[v]
            if v > j:
                continue
            omegas = {v: self.context.frobenius.omega(v)}
            if v != j:
                omegas[j] = self.context.frobenius.omega(j)
            label = f"[w{v}]" if v == j else f"[w{v}] + [w{j}]"
            if not space.is_coboundary(Cochain(algebra, 3, -2, omegas)):
                _fail(self.name, f"{label} is nonzero in HH^3(-2)")
        return f"HH^2 = span{got}"

    def eta_matrix(self) -> str:
        algebra = self.context.algebra
        signed = eta_signed_matrix(algebra)
        via_complex = complex_eta_signed_matrix(self.context.complex)
        if _as_fractions(signed.matrix) != via_complex:
            _fail(self.name, "H^eta from eigenbases differs from the differential C^5 -> C^6")
        analytic = analytic_eta_signed_matrix(algebra)
        if analytic is not None and analytic.matrix != signed.matrix:
            _fail(self.name, "H^eta from eigenbases differs from the Hilbert series at t = i")
        if _as_fractions(signed.matrix) != golden.eta_matrix(self.context.quiver):
            _fail(self.name, f"H^eta = {signed.matrix}")
        closed = eps_vectors(algebra.quiver)
        for i, vector in zip(algebra.data.y_indices, signed.kernel):
            want = {v: Fraction(c) for v, c in closed.get(i, {}).items()}
            if vector != want:
                _fail(self.name, f"kernel vector for eps{i} is {vector}, expected {want}")
        if len(signed.kernel) != algebra.data.dim_y:
            _fail(self.name, f"ker H^eta has dimension {len(signed.kernel)}, expected {algebra.data.dim_y}")
        return f"rank {len(signed.vertices) - len(signed.kernel)}, kernel {len(signed.kernel)}"

    # named classes

    def named_classes(self) -> str:
        named = self.context.named
        bad = [r for r in named.match_reports if r["status"] != "match"]
        if bad:
            _fail(self.name, f"closed form of {bad[0]['name']} {bad[0]['status']}")
        theta_zeta = self.context.products.theta_times_zeta(0, 0)
        if dict(theta_zeta) != {"psi0": 1}:
            _fail(self.name, f"theta0 zeta0 = {_combination_text(theta_zeta)}, expected psi0")
        return f"{len(named.entries)} classes, {len(named.relation_reports)} relations hold"

    def pairings(self) -> str:
        products = self.context.products
        quiver = self.context.quiver
        m_alpha = products.m_alpha()
        if m_alpha != _as_fractions(golden.m_alpha(quiver)):
            _fail(self.name, f"M_alpha = {matrix_to_json(m_alpha)}, expected {golden.m_alpha(quiver)}")
        indices = products.f_indices()
        for i in indices:
            for j in indices:
                got = dict(products.f_times_h(i, j))
                want = {"psi0": 1} if i == j else {}
                if got != want:
                    _fail(self.name, f"f{i} h{j} = {_combination_text(got)}, expected {want}")
        if not self.context.data.y_indices:
            return f"M_alpha = {matrix_to_json(m_alpha)}"
        m_beta = products.m_beta()
        if m_beta != _as_fractions(golden.m_beta(quiver)):
            _fail(self.name, f"M_beta = {matrix_to_json(m_beta)}, expected {golden.m_beta(quiver)}")
        return f"M_alpha = {matrix_to_json(m_alpha)}, M_beta of size {len(m_beta)}"

    def kappa(self) -> str:
        algebra = self.context.algebra
        kappa = self.context.products.kappa()
        analytic = analytic_kappa_matrix(algebra)
        if analytic is not None and analytic.matrix != kappa.matrix:
            _fail(self.name, "kappa from eigenbases differs from the Hilbert series formula")
        if self.context.quiver.selector == "e7" and kappa.matrix != golden.E7_KAPPA:
            _fail(self.name, f"kappa = {kappa.matrix}")
        return f"{len(kappa.vertices)} x {len(kappa.vertices)}" + (", analytic agrees" if analytic else "")

    def products(self) -> str:
        table = self.context.table
        failing = [c for c in table.checks if c["status"] != "holds"]
        if failing:
            _fail(self.name, f"{failing[0]['check']}: {failing[0]['left']} != {failing[0]['right']}")
        for verdict in table.verdicts:
            if verdict.kind == NONZERO and (verdict.i, verdict.j) not in NONZERO_PAIRS:
                _fail(self.name, f"HH^{verdict.i} x HH^{verdict.j} unexpectedly nonzero")
        if self.context.quiver.selector == "e6":
            got = table.get("theta0", "f1")
            if dict(got or {}) != {"h1": -8, "h2": -4}:
                _fail(self.name, f"theta0 f1 = {_combination_text(got or {})}, expected -8 h1 - 4 h2")
        return f"{len(table)} products, {len(table.nonzero())} nonzero, {len(table.checks)} associativity checks"

    def serialization(self) -> str:
        algebra = self.context.algebra
        basis = algebra.basis
        restored = basis_from_json(basis_to_json(basis), basis.quiver, basis.data)
        if restored.all_paths() != basis.all_paths() or restored.right_table != basis.right_table:
            _fail(self.name, "basis does not survive a JSON round trip")
        for name in self.context.named.names():
            cochain = self.context.named.cochain(name)
            if cochain_from_json(algebra, cochain.to_json()) != cochain:
                _fail(self.name, f"cochain {name} does not survive a JSON round trip")
        table = self.context.table
        again = ProductTable.from_json(table.to_json())
        if {k: dict(e.result) for k, e in again.entries.items()} != \
                {k: dict(e.result) for k, e in table.entries.items()}:
            _fail(self.name, "product table does not survive a JSON round trip")
        if self.context.data.y_indices:
            m_beta = self.context.products.m_beta()
            if matrix_from_json(matrix_to_json(m_beta)) != m_beta:
                _fail(self.name, "M_beta does not survive a JSON round trip")
        return "basis, cochains, product table"


@dataclass(frozen=True)
class CheckSpec:
    name: str
    run: Callable[[QuiverChecks], str]
    needs_complete: bool = True
    slow: bool = False


CHECKS = [
    CheckSpec("hilbert", QuiverChecks.hilbert, needs_complete=False),
    CheckSpec("frobenius", QuiverChecks.frobenius),
    CheckSpec("properties", QuiverChecks.properties),
    CheckSpec("center", QuiverChecks.center),
    CheckSpec("hh-dimensions", QuiverChecks.hh_dimensions),
    CheckSpec("periodicity", QuiverChecks.periodicity, slow=True),
    CheckSpec("hh2-hh3", QuiverChecks.hh2_hh3),
    CheckSpec("eta-matrix", QuiverChecks.eta_matrix),
    CheckSpec("named-classes", QuiverChecks.named_classes),
    CheckSpec("pairings", QuiverChecks.pairings),
    CheckSpec("kappa", QuiverChecks.kappa),
    CheckSpec("products", QuiverChecks.products),
    CheckSpec("serialization", QuiverChecks.serialization),
]


def check_names() -> List[str]:
    return [spec.name for spec in CHECKS]


def select_checks(names: Optional[List[str]] = None, include_slow: bool = True) -> List[CheckSpec]:
    """
    Checks to run, in suite order.

    Raises:
        VerificationError: If a name is not a known check
    """
    if names:
        unknown = [n for n in names if n not in check_names()]
        if unknown:
            raise VerificationError(f"Unknown checks {unknown}; available: {', '.join(check_names())}")
        return [spec for spec in CHECKS if spec.name in names]
    return [spec for spec in CHECKS if include_slow or not spec.slow]
