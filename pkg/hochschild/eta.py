"""
The Nakayama automorphism on e_k A e_l for nu-fixed k, l.

eta is an involution there; its eigenspaces are spanned by the
symmetrised monomials x + eta(x) and x - eta(x). The signed truncated
dimension matrix counts eigenvectors with sign.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Any

import sympy

from algebra import linalg
from algebra.basis import Path
from algebra.element import AlgebraElement
from algebra.hilbert import T, hilbert_matrix
from hochschild.complex import Cochain, CohomologyError, SchofieldComplex
from utils.serialization import format_rational, matrix_to_json

logger = logging.getLogger(__name__)


@dataclass
class EtaEigenbasis:
    """Bases of the +1 and -1 eigenspaces of eta on e_source A e_target."""
    source: int
    target: int
    plus: List[AlgebraElement] = field(default_factory=list)
    minus: List[AlgebraElement] = field(default_factory=list)

    @property
    def signed_dimension(self) -> int:
        return len(self.plus) - len(self.minus)


def eta_eigenbasis(algebra, source: int, target: int) -> EtaEigenbasis:
    """
    Eigenbasis of eta on e_source A e_target, degree by degree.

    Raises:
        CohomologyError: If source or target is moved by nu, or the
            symmetrised vectors do not span the block
    """
    if algebra.nu[source] != source or algebra.nu[target] != target:
        raise CohomologyError(f"e{source} A e{target} is not eta-stable")
    result = EtaEigenbasis(source, target)
    for degree in range(algebra.top + 1):
        paths = algebra.basis.block(source, target, degree)
        if not paths:
            continue
        position = {p: i for i, p in enumerate(paths)}
        chosen = {1: [], -1: []}
        for path in paths:
            x = algebra.basis_element(path)
            image = algebra.nakayama(x)
            for sign in (1, -1):
                candidate = x + image * sign
                if candidate.is_zero():
                    continue
                vectors = chosen[sign] + [{position[p]: c for p, c in candidate.terms.items()}]
                if linalg.rank(vectors, len(paths)) == len(vectors):
                    chosen[sign].append(vectors[-1])
        if len(chosen[1]) + len(chosen[-1]) != len(paths):
            error_msg = (f"{algebra.quiver.name}: eigenvectors of eta span {len(chosen[1]) + len(chosen[-1])} "
                         f"of {len(paths)} dimensions in e{source} A({degree}) e{target}")
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        for sign, bucket in ((1, result.plus), (-1, result.minus)):
            for vector in chosen[sign]:
                bucket.append(AlgebraElement(algebra, {paths[k]: c for k, c in vector.items()}))
    return result


def star_count(algebra, path: Path) -> int:
    """Number of arrows of Q* in a monomial."""
    return sum(1 for c in path.arrows if algebra.quiver.arrows[c].starred)


def shortest_path(quiver, source: int, target: int) -> List[int]:
    """Arrow indices of the shortest path source -> target in the double quiver."""
    previous: Dict[int, Optional[Tuple[int, int]]] = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            break
        for c in quiver.arrows_from(v):
            w = quiver.arrows[c].target
            if w not in previous:
                previous[w] = (v, c)
                queue.append(w)
    arrows = []
    v = target
    while previous[v] is not None:
        v, c = previous[v]
        arrows.append(c)
    return list(reversed(arrows))


def distance_data(quiver, k: int, j: int) -> Tuple[int, int]:
    """(d(k, j), n_{k,j}): length of the shortest path k -> j and its number of Q-arrows."""
    arrows = shortest_path(quiver, k, j)
    return len(arrows), sum(1 for c in arrows if not quiver.arrows[c].starred)


@dataclass
class EtaSignedMatrix:
    """H^eta over F x F with its kernel."""
    vertices: List[int]
    matrix: List[List[int]]
    kernel: List[Dict[int, Fraction]]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.matrix)

    def to_latex(self) -> str:
        return sympy.latex(self.to_sympy())

    def to_json(self) -> Dict[str, Any]:
        return {
            "vertices": self.vertices,
            "matrix": matrix_to_json(self.matrix),
            "kernel": [{f"e{v}": format_rational(c) for v, c in sorted(vec.items())}
                       for vec in self.kernel],
        }


def delta_normalize(vectors: List[Dict[int, Fraction]], coordinates: List[int]) -> List[Dict[int, Fraction]]:
    """
    Change basis so that the i-th vector restricted to ``coordinates`` is the i-th unit vector.

    Raises:
        CohomologyError: If the restriction is not invertible
    """
    if len(vectors) != len(coordinates):
        raise CohomologyError(f"{len(vectors)} vectors cannot be normalised on {len(coordinates)} coordinates")
    restricted = [[vec.get(c, Fraction(0)) for c in coordinates] for vec in vectors]
    try:
        inverse = linalg.inverse(restricted)
    except linalg.LinearAlgebraError:
        error_msg = f"Kernel restricted to {coordinates} is singular"
        logger.error(error_msg)
        raise CohomologyError(error_msg)
    normalized = []
    for i in range(len(coordinates)):
        combo: Dict[int, Fraction] = {}
        for a, vec in enumerate(vectors):
            weight = inverse[i][a]
            if weight == 0:
                continue
            for k, value in vec.items():
                combo[k] = combo.get(k, Fraction(0)) + weight * value
        normalized.append({k: v for k, v in combo.items() if v != 0})
    return normalized


def _kernel(vertices: List[int], matrix: List[List[int]], normalize_on: List[int]) -> List[Dict[int, Fraction]]:
    rows = [{j: Fraction(v) for j, v in enumerate(row) if v} for row in matrix]
    raw = [{vertices[j]: c for j, c in vec.items()} for vec in linalg.nullspace(rows, len(vertices))]
    if not raw:
        return []
    return delta_normalize(raw, normalize_on)


def eta_signed_matrix(algebra) -> EtaSignedMatrix:
    """
    (H^eta)_{ij} = n^+_{ij} - n^-_{ij} over the nu-fixed vertices.

    The kernel is normalised to be the unit basis on the vertices indexing
    the Y-part of HH^5.
    """
    vertices = list(algebra.data.fixed)
    matrix = [[eta_eigenbasis(algebra, i, j).signed_dimension for j in vertices] for i in vertices]
    kernel = _kernel(vertices, matrix, list(algebra.data.y_indices))
    logger.info(f"{algebra.quiver.name}: H^eta has rank {len(vertices) - len(kernel)}")
    return EtaSignedMatrix(vertices, matrix, kernel)


def evaluate_at_i(expression) -> Fraction:
    real, imag = sympy.expand(expression.subs(T, sympy.I)).as_real_imag()
    if imag != 0 or not real.is_Rational:
        raise CohomologyError(f"Expected a rational value at t = i, got {real} + {imag} i")
    return Fraction(int(real.p), int(real.q))


def eta_acts_by_sign(algebra) -> bool:
    """
    Whether eta(x) = (-1)^{n_x} x for every monomial x between nu-fixed vertices,
    n_x being the number of Q-arrows in x.

    This is what makes the Hilbert series at t = sqrt(-1) count eigenvalues.
    It holds for D_{n+1} with n odd and for E7, E8. On E6 eta mixes monomials.
    """
    fixed = set(algebra.data.fixed)
    for (source, target, _), paths in algebra.basis.blocks.items():
        if source not in fixed or target not in fixed:
            continue
        for path in paths:
            x = algebra.basis_element(path)
            if algebra.nakayama(x) != x * (-1) ** (path.degree - star_count(algebra, path)):
                return False
    return True


def analytic_eta_signed_matrix(algebra, require_sign_action: bool = True) -> Optional[EtaSignedMatrix]:
    """
    (-1)^{n_kj} H_kj(t) / t^{d(k,j)} at t = sqrt(-1) over the nu-fixed vertices.

    Args:
        algebra: A complete preprojective algebra
        require_sign_action: Return None unless eta_acts_by_sign holds; pass
            False to evaluate the expression anyway

    Returns:
        The signed matrix, or None when the formula does not apply
    """
    if require_sign_action and not eta_acts_by_sign(algebra):
        return None
    vertices = list(algebra.data.fixed)
    hilbert = hilbert_matrix(algebra.basis)
    matrix = []
    for k in vertices:
        row = []
        for j in vertices:
            d, n = distance_data(algebra.quiver, k, j)
            g = hilbert.entry(k, j).as_expr() / T ** d
            row.append(int((-1) ** n * evaluate_at_i(g)))
        matrix.append(row)
    return EtaSignedMatrix(vertices, matrix, _kernel(vertices, matrix, list(algebra.data.y_indices)))


def complex_eta_signed_matrix(complex_: SchofieldComplex) -> List[List[Fraction]]:
    """
    Matrix of d: C^5(-h-2) -> C^6(-h-2) in the bases e_i and omega_k (i, k in F).

    Entry [k][i] is the trace of the omega_k slot of d(e_i).
    """
    algebra = complex_.algebra
    vertices = list(algebra.data.fixed)
    degree = -algebra.data.h - 2
    columns = []
    for i in vertices:
        image = complex_.apply(Cochain(algebra, 5, degree, {i: algebra.vertex(i)}))
        columns.append([complex_.frobenius.trace(image.value(k)) for k in vertices])
    return [[columns[i][k] for i in range(len(vertices))] for k in range(len(vertices))]
