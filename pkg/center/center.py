import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Any

import sympy
from tqdm import tqdm

from algebra import linalg
from algebra.basis import Path
from algebra.element import AlgebraElement
from algebra.frobenius import FrobeniusForm
from algebra.hilbert import T
from utils.logging_utils import progress_enabled
from utils.serialization import combination_to_json

logger = logging.getLogger(__name__)


class CenterError(Exception):
    """Exception raised when the center disagrees with its predicted Hilbert series."""
    pass


class CentralElement:
    """A named homogeneous central element."""

    def __init__(self, name: str, degree: int, element: AlgebraElement):
        self.name = name
        self.degree = degree
        self.element = element

    def __repr__(self) -> str:
        return f"CentralElement({self.name}, degree={self.degree})"

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "degree": self.degree, "element": self.element.to_json()}


def commutator_defects(algebra, element: AlgebraElement) -> List[str]:
    """Names of the arrows c with c*z != z*c."""
    failures = []
    for index, arrow in enumerate(algebra.quiver.arrows):
        c = algebra.basis_element(Path(arrow.source, arrow.target, (index,)))
        if c * element != element * c:
            failures.append(arrow.name)
    return failures


def is_central(algebra, element: AlgebraElement) -> bool:
    return not commutator_defects(algebra, element)


def predicted_center_series(data) -> Dict[int, int]:
    """h_Z(t) = sum_{m_i < h/2} t^{2m_i - 2} + |F| t^{h-2}, as degree -> multiplicity."""
    series: Dict[int, int] = {}
    for d in data.center_degrees():
        series[d] = series.get(d, 0) + 1
    series[data.top_degree] = series.get(data.top_degree, 0) + data.n_fixed
    return dict(sorted(series.items()))


def _degree_kernel(algebra, degree: int) -> Tuple[List[Path], List[Dict[int, Fraction]]]:
    """Solve [c, z] = 0 over the diagonal blocks e_v A(degree) e_v."""
    unknowns = [p for v in algebra.quiver.vertices for p in algebra.basis.block(v, v, degree)]
    rows: Dict[Tuple[int, Path], Dict[int, Fraction]] = {}
    for column, p in enumerate(unknowns):
        v = p.source
        for index, arrow in enumerate(algebra.quiver.arrows):
            c = Path(arrow.source, arrow.target, (index,))
            if arrow.target == v:
                for q, value in algebra.multiply_paths(c, p).items():
                    row = rows.setdefault((index, q), {})
                    row[column] = row.get(column, Fraction(0)) + value
            if arrow.source == v:
                for q, value in algebra.multiply_paths(p, c).items():
                    row = rows.setdefault((index, q), {})
                    row[column] = row.get(column, Fraction(0)) - value
    kernel = linalg.nullspace(list(rows.values()), len(unknowns))
    return unknowns, kernel


class CenterBasis:
    """
    Named basis of Z = HH^0(A).

    Below the top degree there is one generator z<d> per degree 2m_i - 2;
    in the top degree the basis is w<v> (the Frobenius-normalised omega_v)
    for every nu-fixed vertex v.
    """

    def __init__(self, algebra, frobenius: FrobeniusForm, elements: List[CentralElement]):
        self.algebra = algebra
        self.frobenius = frobenius
        self.elements = elements
        self.by_name: Dict[str, CentralElement] = OrderedDict((e.name, e) for e in elements)
        self.match_reports: List[Dict[str, Any]] = []

    @property
    def names(self) -> List[str]:
        return list(self.by_name)

    def __getitem__(self, name: str) -> AlgebraElement:
        return self.by_name[name].element

    def __contains__(self, name: str) -> bool:
        return name in self.by_name

    def degree_names(self, degree: int) -> List[str]:
        return [e.name for e in self.elements if e.degree == degree]

    def z_names(self) -> List[str]:
        """Names of the non-top generators z_k in increasing degree."""
        return [e.name for e in self.elements if e.name.startswith("z")]

    def hilbert_series(self) -> Dict[int, int]:
        series: Dict[int, int] = {}
        for e in self.elements:
            series[e.degree] = series.get(e.degree, 0) + 1
        return dict(sorted(series.items()))

    def hilbert_polynomial(self) -> sympy.Poly:
        return sympy.Poly(sum(count * T ** d for d, count in self.hilbert_series().items()), T)

    def replace(self, name: str, element: AlgebraElement) -> None:
        entry = self.by_name[name]
        entry.element = element

    def coordinates(self, element: AlgebraElement) -> Dict[str, Fraction]:
        """
        Express a central element in the named basis.

        Raises:
            CenterError: If the element is not in the span of the basis
        """
        result: Dict[str, Fraction] = OrderedDict()
        for degree in sorted(element.degrees()):
            if degree > self.algebra.top:
                continue
            part = element.degree_part(degree)
            names = self.degree_names(degree)
            paths = sorted({p for n in names for p in self[n].terms} | set(part.terms))
            index = {p: i for i, p in enumerate(paths)}
            columns = [{index[p]: c for p, c in self[n].terms.items()} for n in names]
            target = {index[p]: c for p, c in part.terms.items()}
            solution = linalg.solve_in_span(columns, target, len(paths)) if names else None
            if solution is None:
                error_msg = f"{self.algebra.quiver.name}: element of degree {degree} is not in the span of the center"
                logger.error(error_msg)
                raise CenterError(error_msg)
            for name, coeff in zip(names, solution):
                if coeff != 0:
                    result[name] = coeff
        return result

    def aliases(self) -> Dict[str, AlgebraElement]:
        """Parser aliases z<k> and w<v>."""
        return {name: entry.element for name, entry in self.by_name.items()}

    def to_json(self) -> Dict[str, Any]:
        return {
            "quiver": self.algebra.quiver.name,
            "hilbert_series": {str(d): n for d, n in self.hilbert_series().items()},
            "generators": [e.to_json() for e in self.elements],
            "matches": self.match_reports,
        }


def center_basis(algebra, frobenius: Optional[FrobeniusForm] = None, match: bool = True) -> CenterBasis:
    """
    Compute the center degree by degree.

    Args:
        algebra: A PreprojectiveAlgebra on a complete basis
        frobenius: Its Frobenius form (built if None)
        match: Rescale generators to the closed expressions where these are central

    Returns:
        The CenterBasis

    Raises:
        CenterError: If some degree disagrees with the predicted h_Z
    """
    frobenius = frobenius or FrobeniusForm(algebra)
    data = algebra.data
    expected = predicted_center_series(data)
    elements: List[CentralElement] = []
    degrees = range(algebra.top + 1)
    for degree in tqdm(degrees, desc=f"{algebra.quiver.name} center", disable=not progress_enabled()):
        unknowns, kernel = _degree_kernel(algebra, degree)
        want = expected.get(degree, 0)
        if len(kernel) != want:
            error_msg = (f"{algebra.quiver.name}: center has dimension {len(kernel)} in degree {degree}, "
                         f"h_Z predicts {want}")
            logger.error(error_msg)
            raise CenterError(error_msg)
        if not kernel:
            continue
        if degree == 0:
            elements.append(CentralElement("z0", 0, algebra.one()))
        elif degree == algebra.top:
            for v in data.fixed:
                elements.append(CentralElement(f"w{v}", degree, frobenius.omega(v)))
        else:
            vector = kernel[0]
            element = AlgebraElement(algebra, {unknowns[j]: c for j, c in vector.items()})
            elements.append(CentralElement(f"z{degree}", degree, element))
        logger.debug(f"{algebra.quiver.name}: center degree {degree} has dimension {len(kernel)}")

    center = CenterBasis(algebra, frobenius, elements)
    for name in (e.name for e in elements if e.degree == algebra.top):
        if not is_central(algebra, center[name]):
            raise CenterError(f"{algebra.quiver.name}: {name} is not central")
    if match:
        from center.generators import match_closed_generators
        match_closed_generators(center, strict=False, rescale=True)
    logger.info(f"{algebra.quiver.name}: center h_Z = {center.hilbert_polynomial().as_expr()}")
    return center


def center_products(center: CenterBasis) -> Dict[Tuple[str, str], Dict[str, Fraction]]:
    """
    Multiplication table of Z on the named basis.

    Returns:
        (left, right) -> combination, for all unordered pairs in basis order
    """
    table = OrderedDict()
    names = center.names
    for i, left in enumerate(names):
        for right in names[i:]:
            product = center[left] * center[right]
            table[(left, right)] = center.coordinates(product)
    return table


def product_table_to_json(table: Dict[Tuple[str, str], Dict[str, Fraction]]) -> List[Dict[str, Any]]:
    return [{"left": left, "right": right, "result": combination_to_json(result)}
            for (left, right), result in table.items()]
