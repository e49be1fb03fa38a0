import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Any, Dict, List, Optional

from algebra.basis import Path
from algebra.element import AlgebraElement
from algebra.parser import ParseError, parse_element
from center.center import CenterBasis
from hochschild.cohomology import CohomologySpace, HochschildCohomology
from hochschild.complex import Cochain, CohomologyError
from hochschild.eta import delta_normalize
from hochschild.expressions import (
    eps_vectors,
    hh6_relations,
    idempotent_cochain,
    psi_expressions,
    tensor_cochain,
    vertex_cochain,
    zeta_terms
)
from quiver.dynkin import QuiverError
from utils.serialization import format_rational

logger = logging.getLogger(__name__)


class NamedElement:
    """A named cohomology class with its representative cocycle."""

    def __init__(self, name: str, cochain: Cochain, source: str = "computed"):
        self.name = name
        self.cochain = cochain
        self.source = source

    @property
    def index(self) -> int:
        return self.cochain.index

    @property
    def degree(self) -> int:
        return self.cochain.degree

    def __repr__(self) -> str:
        return f"NamedElement({self.name}, HH^{self.index}({self.degree}))"

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "index": self.index, "degree": self.degree,
                "source": self.source, "cochain": self.cochain.to_json()}


def pair_theta_zeta(frobenius, theta: Cochain, zeta: Cochain) -> Fraction:
    """(theta, zeta) = sum_c eps_c f(theta_c zeta_{c*}) for theta in C^1, zeta in C^4."""
    quiver = frobenius.quiver
    total = Fraction(0)
    for c, value in theta.values.items():
        partner = zeta.values.get(quiver.star(c))
        if partner is not None:
            total += quiver.arrows[c].sign * frobenius.trace(value * partner)
    return total


def pair_psi_phi(frobenius, psi: Cochain, phi: Cochain) -> Fraction:
    """<psi, phi> = sum_v f(phi_v psi_v) for psi in C^5, phi in C^6."""
    total = Fraction(0)
    for v, value in psi.values.items():
        partner = phi.values.get(v)
        if partner is not None:
            total += frobenius.trace(partner * value)
    return total


def central_cochain(algebra, index: int, degree: int, z: AlgebraElement) -> Cochain:
    """A central element as a vertex cochain: slot v holds e_v z e_v."""
    values = {v: z.component(v, v) for v in algebra.quiver.vertices}
    return Cochain(algebra, index, degree, values)


class NamedBasis:
    """
    Registry of named classes of HH^0 .. HH^6.

    Every entry is installed as the representative of its CohomologySpace,
    so ``project`` returns combinations of these names.
    """

    def __init__(self, cohomology: HochschildCohomology, center: CenterBasis):
        self.cohomology = cohomology
        self.center = center
        self.algebra = cohomology.algebra
        self.frobenius = cohomology.complex.frobenius
        self.entries: Dict[str, NamedElement] = OrderedDict()
        self.match_reports: List[Dict[str, Any]] = []
        self.relation_reports: List[Dict[str, Any]] = []

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def __getitem__(self, name: str) -> NamedElement:
        return self.entries[name]

    def cochain(self, name: str) -> Cochain:
        return self.entries[name].cochain

    def names(self, index: Optional[int] = None, prefix: Optional[str] = None) -> List[str]:
        return [name for name, e in self.entries.items()
                if (index is None or e.index == index) and (prefix is None or name.startswith(prefix))]

    def add(self, name: str, cochain: Cochain, source: str = "computed") -> None:
        self.entries[name] = NamedElement(name, cochain, source)

    def install(self, index: int) -> None:
        """Hand the registered names of one index to their cohomology spaces."""
        by_degree: Dict[int, List[NamedElement]] = OrderedDict()
        for e in self.entries.values():
            if e.index == index:
                by_degree.setdefault(e.degree, []).append(e)
        for degree, elements in by_degree.items():
            self.cohomology.space(index, degree).set_basis(
                [e.name for e in elements], [e.cochain for e in elements])

    def space(self, name: str) -> CohomologySpace:
        e = self.entries[name]
        return self.cohomology.space(e.index, e.degree)

    def project(self, cochain: Cochain) -> Dict[str, Fraction]:
        """
        Class of a cocycle in the named basis.

        Raises:
            CohomologyError: If the cochain is not a cocycle
        """
        if cochain.index > 6:
            raise CohomologyError(f"No named basis for HH^{cochain.index}")
        return self.cohomology.project(cochain)

    def z(self, k: int) -> AlgebraElement:
        return self.center[f"z{k}"]

    def u_degrees(self) -> List[int]:
        return [int(name[1:]) for name in self.center.z_names()]

    def dimension_tables(self) -> Dict[int, Dict[int, int]]:
        return {i: self.cohomology.dimensions(i) for i in range(7)}

    def to_json(self) -> Dict[str, Any]:
        return {
            "quiver": self.algebra.quiver.name,
            "dimensions": {str(i): {str(d): n for d, n in table.items()}
                           for i, table in self.dimension_tables().items()},
            "named": [e.to_json() for e in self.entries.values()],
            "matches": self.match_reports,
            "relations": self.relation_reports,
        }


def _hh0_and_hh6(basis: NamedBasis) -> None:
    algebra = basis.algebra
    h = algebra.data.h
    for e in basis.center.elements:
        basis.add(e.name, central_cochain(algebra, 0, e.degree, e.element))
    for k in basis.u_degrees():
        basis.add(f"phi0(z{k})", central_cochain(algebra, 6, k - 2 * h, basis.z(k)))
    for j in algebra.data.y_indices:
        basis.add(f"phi0(w{j})", central_cochain(algebra, 6, -h - 2, basis.frobenius.omega(j)))


def _hh1(basis: NamedBasis) -> None:
    algebra = basis.algebra
    quiver = algebra.quiver
    for k in basis.u_degrees():
        z = basis.z(k)
        values = {c: algebra.arrow(a.name) * z for c, a in enumerate(quiver.arrows) if a.starred}
        basis.add(f"theta{k}", Cochain(algebra, 1, k, values))


def _hh2_and_hh3(basis: NamedBasis) -> None:
    algebra = basis.algebra
    for i in algebra.quiver.vertices:
        j = algebra.nu[i]
        if i < j:
            basis.add(f"f{i}", idempotent_cochain(algebra, 2, {i: 1, j: -1}))
            basis.add(f"h{i}", Cochain(algebra, 3, -2, {i: basis.frobenius.omega(i)}))


def _match(basis: NamedBasis, name: str, build) -> None:
    """Compare a closed expression with the registered class and adopt it when it agrees up to scale."""
    report = {"name": name, "status": "differs", "scalar": None}
    try:
        closed = build()
    except (ParseError, QuiverError, CohomologyError) as e:
        report["status"] = f"parse error: {e}"
        logger.warning(f"{basis.algebra.quiver.name}: {name} {report['status']}")
        basis.match_reports.append(report)
        return
    space = basis.space(name)
    if (closed.index, closed.degree) != (space.index, space.degree):
        report["status"] = f"lives in C^{closed.index}({closed.degree})"
    elif not space.is_cocycle(closed):
        report["status"] = "not a cocycle"
    else:
        coords = space.project(closed)
        scalar = coords.get(name, Fraction(0))
        others = [n for n in coords if n != name]
        if scalar != 0 and not others:
            report["status"] = "match"
            report["scalar"] = format_rational(scalar)
            basis.entries[name] = NamedElement(name, closed / scalar, "closed form")
        elif scalar == 0:
            report["status"] = "zero in cohomology" if not coords else "differs"
    if report["status"] != "match":
        logger.warning(f"{basis.algebra.quiver.name}: closed form of {name} {report['status']}")
    basis.match_reports.append(report)


def _hh4(basis: NamedBasis) -> None:
    algebra = basis.algebra
    for k in basis.u_degrees():
        name = f"zeta{k}"
        space = basis.cohomology.space(4, -4 - k)
        if space.dimension != 1:
            raise CohomologyError(f"{algebra.quiver.name}: HH^4({-4 - k}) has dimension {space.dimension}, expected 1")
        rep = space.representatives[0]
        pairing = pair_theta_zeta(basis.frobenius, basis.cochain(f"theta{k}"), rep)
        if pairing == 0:
            error_msg = f"{algebra.quiver.name}: (theta{k}, -) vanishes on HH^4({-4 - k})"
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        basis.add(name, rep / pairing)
    basis.install(4)
    for name, terms in zeta_terms(algebra.quiver).items():
        if name in basis:
            _match(basis, name, lambda terms=terms: tensor_cochain(algebra, terms))
    basis.install(4)


def _hh5(basis: NamedBasis) -> None:
    algebra = basis.algebra
    h = algebra.data.h
    for k in basis.u_degrees():
        name = f"psi{k}"
        space = basis.cohomology.space(5, -4 - k)
        if space.dimension != 1:
            raise CohomologyError(f"{algebra.quiver.name}: HH^5({-4 - k}) has dimension {space.dimension}, expected 1")
        rep = space.representatives[0]
        phi = central_cochain(algebra, 6, k - 2 * h, basis.z(k))
        pairing = pair_psi_phi(basis.frobenius, rep, phi)
        if pairing == 0:
            error_msg = f"{algebra.quiver.name}: <-, phi0(z{k})> vanishes on HH^5({-4 - k})"
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        basis.add(name, rep / pairing)

    y_indices = list(algebra.data.y_indices)
    if y_indices:
        space = basis.cohomology.space(5, -h - 2)
        vectors = []
        for rep in space.representatives:
            vectors.append({v: rep.value(v).coefficient(Path(v, v, ())) for v in rep.values})
        for i, vector in zip(y_indices, delta_normalize(vectors, y_indices)):
            basis.add(f"eps{i}", idempotent_cochain(algebra, 5, vector))
    basis.install(5)

    for name, text in psi_expressions(algebra.quiver).items():
        if name in basis:
            _match(basis, name, lambda text=text: vertex_cochain(algebra, 5, parse_element(algebra, text)))
    for i, vector in eps_vectors(algebra.quiver).items():
        if f"eps{i}" in basis:
            _match(basis, f"eps{i}", lambda vector=vector: idempotent_cochain(algebra, 5, vector))
    basis.install(5)


def check_relations(basis: NamedBasis) -> List[Dict[str, Any]]:
    """
    Verify the defining relations of the named classes.

    Raises:
        CohomologyError: Naming the first element whose relation fails
    """
    frobenius = basis.frobenius
    reports = []

    def record(relation: str, holds: bool, detail: str = "") -> None:
        reports.append({"relation": relation, "status": "holds" if holds else "fails", "detail": detail})
        if not holds:
            error_msg = f"{basis.algebra.quiver.name}: relation {relation} fails {detail}".strip()
            logger.error(error_msg)
            raise CohomologyError(error_msg)

    for k in basis.u_degrees():
        z = basis.z(k)
        product = basis.project(basis.cochain(f"zeta{k}").times_central(z, k))
        record(f"z{k} zeta{k} = zeta0", product == {"zeta0": 1}, str(product))
        product = basis.project(basis.cochain(f"psi{k}").times_central(z, k))
        record(f"z{k} psi{k} = psi0", product == {"psi0": 1}, str(product))
        value = pair_theta_zeta(frobenius, basis.cochain(f"theta{k}"), basis.cochain(f"zeta{k}"))
        record(f"zeta{k}(theta{k}) = 1", value == 1, format_rational(value))

    value = pair_psi_phi(frobenius, basis.cochain("psi0"), basis.cochain("phi0(z0)"))
    record("psi0(phi0(z0)) = 1", value == 1, format_rational(value))

    for i in basis.algebra.data.y_indices:
        for j in basis.algebra.data.y_indices:
            value = pair_psi_phi(frobenius, basis.cochain(f"eps{i}"), basis.cochain(f"phi0(w{j})"))
            record(f"eps{i}(phi0(w{j})) = {int(i == j)}", value == (1 if i == j else 0), format_rational(value))

    data = basis.algebra.data
    relations = hh6_relations(basis.algebra.quiver)
    record(f"{len(relations)} relations among [omega_v] = |F| - dim Y",
           len(relations) == data.n_fixed - data.dim_y, f"|F| = {data.n_fixed}, dim Y = {data.dim_y}")
    space = basis.cohomology.space(6, -data.h - 2)
    for relation in relations:
        omegas = {v: frobenius.omega(v) * c for v, c in relation.items()}
        label = " + ".join(f"{c}*[w{v}]" for v, c in sorted(relation.items()))
        record(f"{label} = 0 in HH^6", space.is_coboundary(Cochain(basis.algebra, 6, -data.h - 2, omegas)))

    theta0 = basis.cochain("theta0")
    for c, arrow in enumerate(basis.algebra.quiver.arrows):
        expected = basis.algebra.arrow(arrow.name) if arrow.starred else basis.algebra.zero()
        record(f"theta0({arrow.name}) = {arrow.name if arrow.starred else 0}", theta0.value(c) == expected)

    basis.relation_reports = reports
    return reports


def named_basis(cohomology: HochschildCohomology, center: CenterBasis, check: bool = True) -> NamedBasis:
    """
    Build, install and verify the named classes of HH^0 .. HH^6.

    Args:
        cohomology: Computed HochschildCohomology
        center: Center with its z<k> and w<v> basis
        check: Verify the defining relations

    Returns:
        The NamedBasis

    Raises:
        CohomologyError: If a class is not a cocycle, the classes are not a
            basis, or a defining relation fails
    """
    basis = NamedBasis(cohomology, center)
    _hh0_and_hh6(basis)
    _hh1(basis)
    _hh2_and_hh3(basis)
    for index in (0, 1, 2, 3, 6):
        basis.install(index)
    _hh4(basis)
    _hh5(basis)
    if check:
        check_relations(basis)
    logger.info(f"{cohomology.algebra.quiver.name}: {len(basis.entries)} named classes installed")
    return basis
