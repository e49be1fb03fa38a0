import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from algebra import linalg
from algebra.basis import Path
from algebra.element import AlgebraElement
from hochschild.complex import Cochain
from hochschild.eta import star_count
from hochschild.named import NamedBasis
from products.kappa import KappaMatrix, ProductError, check_m_beta, kappa_matrix
from utils.serialization import format_rational, matrix_to_json

logger = logging.getLogger(__name__)

Combination = Dict[str, Fraction]


def suffix(name: str, prefix: str) -> int:
    """Integer label of a name such as theta8 or eps3."""
    return int(name[len(prefix):])


def scale(combination: Combination, factor) -> Combination:
    factor = Fraction(factor)
    return OrderedDict((n, c * factor) for n, c in combination.items() if c * factor != 0)


def add(left: Combination, right: Combination) -> Combination:
    result = OrderedDict(left)
    for n, c in right.items():
        result[n] = result.get(n, Fraction(0)) + c
    return OrderedDict((n, c) for n, c in result.items() if c != 0)


class CupProducts:
    """
    Cup products of named classes evaluated on representative cocycles.

    Products with HH^0 multiply the values of the representative by the
    central element; the remaining nonzero products use the explicit chain
    maps for theta_0 and for the f * h pairing.
    """

    def __init__(self, named: NamedBasis):
        self.named = named
        self.algebra = named.algebra
        self.quiver = named.algebra.quiver
        self.data = named.algebra.data
        self.frobenius = named.frobenius
        self._m_alpha = None
        self._m_beta = None
        self._kappa = None

    # HH^0

    def central(self, name: str) -> AlgebraElement:
        """The central element behind an HH^0 name."""
        return self.named.center[name]

    def cup_hh0(self, z_name: str, x_name: str) -> Combination:
        """
        z * x for z in HH^0, computed slotwise and projected.

        Raises:
            CohomologyError: If the product is not a cocycle
        """
        z = self.named[z_name]
        x = self.named.cochain(x_name)
        return self.named.project(x.times_central(self.central(z_name), z.degree))

    def cup_hh0_right(self, x_name: str, z_name: str) -> Combination:
        """x * z with the central element multiplied on the right of every value."""
        z = self.named[z_name]
        x = self.named.cochain(x_name)
        element = self.central(z_name)
        values = {slot: value * element for slot, value in x.values.items()}
        return self.named.project(Cochain(self.algebra, x.index, x.degree + z.degree, values))

    # HH^1 x HH^2

    def _paths(self, source: int, target: int) -> List[Path]:
        basis = self.algebra.basis
        return [p for d in range(self.algebra.top + 1) for p in basis.block(source, target, d)]

    def _star_weight(self, source: int, target: int) -> int:
        return sum(star_count(self.algebra, p) for p in self._paths(source, target))

    def theta_times_f(self, k: int, i: int) -> Combination:
        """
        theta_k f_i = [z_k (sum_l (s(B_{l,i}) - s(B_{l,nu i})) omega_l)] in HH^3(k - 2).
        """
        z = self.named.z(k)
        j = self.algebra.nu[i]
        values = {}
        for l in self.quiver.vertices:
            weight = self._star_weight(l, i) - self._star_weight(l, j)
            if weight:
                values[l] = z * self.frobenius.omega(l) * weight
        return self.named.project(Cochain(self.algebra, 3, k - 2, values))

    def f_indices(self) -> List[int]:
        return [suffix(n, "f") for n in self.named.names(index=2)]

    def m_alpha(self) -> List[List[Fraction]]:
        """
        (M_alpha)_{ij} = coefficient of h_j in theta_0 f_i.

        Raises:
            ProductError: If M_alpha is not symmetric or is degenerate
        """
        if self._m_alpha is not None:
            return self._m_alpha
        indices = self.f_indices()
        matrix = []
        for i in indices:
            product = self.theta_times_f(0, i)
            matrix.append([product.get(f"h{j}", Fraction(0)) for j in indices])
        name = self.quiver.name
        for a in range(len(indices)):
            for b in range(len(indices)):
                if matrix[a][b] != matrix[b][a]:
                    error_msg = f"{name}: M_alpha is not symmetric at (f{indices[a]}, f{indices[b]})"
                    logger.error(error_msg)
                    raise ProductError(error_msg)
        if indices and linalg.dense_rank(matrix) != len(indices):
            error_msg = f"{name}: M_alpha is degenerate"
            logger.error(error_msg)
            raise ProductError(error_msg)
        self._m_alpha = matrix
        return matrix

    # HH^1 x HH^4

    def theta0_cochain(self, zeta: Cochain) -> Cochain:
        """theta_0 . x = sum_{a in Q} a* x_{a*} on a C^4 cochain, as a C^5 cochain."""
        values: Dict[int, AlgebraElement] = {}
        for c, arrow in enumerate(self.quiver.arrows):
            if arrow.starred:
                continue
            part = self.algebra.arrow(self.quiver.arrows[self.quiver.star(c)].name) * zeta.value(c)
            v = arrow.target
            values[v] = values[v] - part if v in values else -part
        return Cochain(self.algebra, 5, zeta.degree, values)

    def theta_times_zeta(self, k: int, l: int) -> Combination:
        product = self.theta0_cochain(self.named.cochain(f"zeta{l}"))
        return self.named.project(product.times_central(self.named.z(k), k))

    # HH^2 x HH^3, HH^2 x HH^2

    def f_times_h(self, i: int, j: int) -> Combination:
        """Slotwise product f_i * h_j in HH^5(-4)."""
        f = self.named.cochain(f"f{i}")
        h = self.named.cochain(f"h{j}")
        values = {v: f.value(v) * h.value(v) for v in f.values}
        return self.named.project(Cochain(self.algebra, 5, f.degree + h.degree, values))

    def f_times_f(self, i: int, j: int) -> Combination:
        indices = self.f_indices()
        value = self.m_alpha()[indices.index(i)][indices.index(j)]
        return OrderedDict([("zeta0", value)]) if value else OrderedDict()

    # HH^1 x HH^5

    def eps_vector(self, i: int) -> Dict[int, Fraction]:
        """lambda with eps_i = [sum lambda_v e_v]."""
        cochain = self.named.cochain(f"eps{i}")
        vector = {}
        for v, value in cochain.values.items():
            unit = Path(v, v, ())
            coeff = value.coefficient(unit)
            if value != self.algebra.vertex(v) * coeff:
                raise ProductError(f"{self.quiver.name}: eps{i} is not a combination of idempotents")
            vector[v] = coeff
        return vector

    def theta0_vertex_cochain(self, psi: Cochain) -> Cochain:
        """
        theta_0 psi for psi = [sum lambda_i e_i] in HH^5(-h-2): the value
        sum_i lambda_i sum_{x in A e_i} s(x) eta(x) x^*, split by source vertex.
        """
        dual = self.frobenius.dual_basis()
        values: Dict[int, AlgebraElement] = {}
        for i, value in psi.values.items():
            lam = value.coefficient(Path(i, i, ()))
            if not lam:
                continue
            for source in self.quiver.vertices:
                for path in self._paths(source, i):
                    s = star_count(self.algebra, path)
                    if not s:
                        continue
                    term = self.algebra.nakayama(self.algebra.basis_element(path)) * dual[path] * (lam * s)
                    slot = self.algebra.nu[source]
                    values[slot] = values[slot] + term if slot in values else term
        return Cochain(self.algebra, 6, psi.degree, values)

    def theta_times_eps(self, k: int, i: int) -> Combination:
        product = self.theta0_vertex_cochain(self.named.cochain(f"eps{i}"))
        return self.named.project(product.times_central(self.named.z(k), k))

    def kappa(self) -> KappaMatrix:
        if self._kappa is None:
            self._kappa = kappa_matrix(self.algebra)
        return self._kappa

    def theta0_eps_kappa(self, i: int) -> Combination:
        """theta_0 eps_i = sum_l lambda_l sum_k kappa_{k,l} phi_0(omega_k), projected."""
        kappa = self.kappa()
        values = {}
        for k in kappa.vertices:
            coeff = sum(lam * kappa.entry(k, l) for l, lam in self.eps_vector(i).items())
            if coeff:
                values[k] = self.frobenius.omega(k) * coeff
        return self.named.project(Cochain(self.algebra, 6, -self.data.h - 2, values))

    def m_beta(self) -> List[List[Fraction]]:
        """
        (M_beta)_{ij} = coefficient of phi0(w_i) in theta_0 eps_j over I'.

        The chain-level value is compared with the kappa expansion.

        Raises:
            ProductError: If the two evaluations differ or M_beta fails its checks
        """
        if self._m_beta is not None:
            return self._m_beta
        indices = list(self.data.y_indices)
        columns = []
        for j in indices:
            chain = self.theta_times_eps(0, j)
            via_kappa = self.theta0_eps_kappa(j)
            if chain != via_kappa:
                error_msg = f"{self.quiver.name}: theta0 eps{j} is {chain} on cochains but {via_kappa} via kappa"
                logger.error(error_msg)
                raise ProductError(error_msg)
            columns.append([chain.get(f"phi0(w{i})", Fraction(0)) for i in indices])
        matrix = [[columns[j][i] for j in range(len(indices))] for i in range(len(indices))]
        check_m_beta(self.algebra, matrix)
        self._m_beta = matrix
        return matrix

    # HH^5 x HH^5

    def eps_times_eps(self, i: int, j: int) -> Combination:
        indices = list(self.data.y_indices)
        value = -self.m_beta()[indices.index(i)][indices.index(j)]
        return OrderedDict([("phi4(zeta0)", value)]) if value else OrderedDict()

    # associativity

    def associativity_reports(self) -> List[Dict[str, Any]]:
        """
        Exact spot checks of associativity.

        Both sides are evaluated on cochains without reading M_alpha or
        M_beta. (theta_0 f_i) f_j goes through theta_times_f and f_times_h,
        and theta_0(f_i f_j) scales theta_0 zeta_0 by the h_i coefficient of
        theta_0 f_j, so the f block also tests that f_i f_j = f_j f_i. In the
        eps block the chain map theta0_vertex_cochain is compared with the
        kappa expansion of theta_0 eps_j.

        Raises:
            ProductError: On the first failing check
        """
        reports = []

        def record(check: str, left: Fraction, right: Fraction) -> None:
            reports.append({"check": check, "left": format_rational(left), "right": format_rational(right),
                            "status": "holds" if left == right else "fails"})
            if left != right:
                error_msg = f"{self.quiver.name}: {check} gives {left} != {right}"
                logger.error(error_msg)
                raise ProductError(error_msg)

        theta0_zeta0 = self.theta_times_zeta(0, 0).get("psi0", Fraction(0))
        indices = self.f_indices()
        theta_f = {i: self.theta_times_f(0, i) for i in indices}
        for i in indices:
            for j in indices:
                left = sum(c * self.f_times_h(j, suffix(name, "h")).get("psi0", Fraction(0))
                           for name, c in theta_f[i].items())
                right = theta_f[j].get(f"h{i}", Fraction(0)) * theta0_zeta0
                record(f"(theta0 f{i}) f{j} = theta0(f{i} f{j})", left, right)

        for k in self.named.u_degrees():
            for l in self.named.u_degrees():
                if l < k:
                    continue
                product = self.named.project(
                    self.theta0_cochain(self.named.cochain(f"zeta{l}")).times_central(self.named.z(k), k))
                inner = self.named.project(self.named.cochain(f"zeta{l}").times_central(self.named.z(k), k))
                other = OrderedDict()
                for name, c in inner.items():
                    other = add(other, scale(self.theta_times_zeta(0, suffix(name, "zeta")), c))
                for name in set(product) | set(other):
                    record(f"z{k}(theta0 zeta{l}) = theta0(z{k} zeta{l}) at {name}",
                           product.get(name, Fraction(0)), other.get(name, Fraction(0)))

        indices = list(self.data.y_indices)
        via_kappa = {j: self.theta0_eps_kappa(j) for j in indices}
        for i in indices:
            theta_eps = self.theta_times_eps(0, i)
            top = self.algebra.zero()
            for name, c in theta_eps.items():
                top = top + self.central(name[len("phi0("):-1]) * c
            for j in indices:
                eps = self.named.cochain(f"eps{j}")
                shifted = self.named.project(eps.times_central(top, self.algebra.top))
                left = -via_kappa[j].get(f"phi0(w{i})", Fraction(0))
                record(f"theta0(eps{i} eps{j}) = (theta0 eps{i}) eps{j}", left, shifted.get("psi0", Fraction(0)))
        return reports

    def summary(self) -> Dict[str, Any]:
        result = {"f_indices": self.f_indices(), "m_alpha": matrix_to_json(self.m_alpha()),
                  "y_indices": list(self.data.y_indices)}
        if self.data.y_indices:
            result["m_beta"] = matrix_to_json(self.m_beta())
            result["kappa"] = self.kappa().to_json()
        return result


def pair_matrix(products: CupProducts, which: str) -> Tuple[List[int], List[List[Fraction]]]:
    """Indices and matrix of M_alpha or M_beta."""
    if which == "alpha":
        return products.f_indices(), products.m_alpha()
    if which == "beta":
        return list(products.data.y_indices), products.m_beta()
    raise ProductError(f"Unknown pairing '{which}'")
