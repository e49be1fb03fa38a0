import logging
from typing import Dict, List, Optional, Sequence, Tuple, Any

import numpy as np
import sympy

from algebra.basis import AlgebraError, GradedBasis
from quiver.root_data import RootData

logger = logging.getLogger(__name__)

T = sympy.Symbol("t")


class PolynomialMatrix:
    """
    Square matrix of integer polynomials in t, indexed by vertices.

    Stored as an int64 array ``coeffs[i, j, d]`` of t^d coefficients.
    """

    def __init__(self, vertices: Sequence[int], coeffs: np.ndarray):
        self.vertices = list(vertices)
        self.coeffs = np.asarray(coeffs, dtype=np.int64)
        self._index = {v: i for i, v in enumerate(self.vertices)}

    @property
    def degree_bound(self) -> int:
        return self.coeffs.shape[2] - 1

    def coefficient(self, degree: int) -> np.ndarray:
        """The integer matrix of t^degree coefficients."""
        if degree < 0 or degree > self.degree_bound:
            return np.zeros((len(self.vertices), len(self.vertices)), dtype=np.int64)
        return self.coeffs[:, :, degree]

    def entry(self, i: int, j: int) -> sympy.Poly:
        """The (i, j) entry as a sympy polynomial (vertex labels, not positions)."""
        row = self.coeffs[self._index[i], self._index[j]]
        return sympy.Poly(sum(int(c) * T ** d for d, c in enumerate(row)), T)

    def column(self, j: int) -> List[sympy.Poly]:
        return [self.entry(i, j) for i in self.vertices]

    def at_one(self) -> np.ndarray:
        """H(1): the dimension matrix dim e_i A e_j."""
        return self.coeffs.sum(axis=2)

    def truncate(self, degree: int) -> "PolynomialMatrix":
        return PolynomialMatrix(self.vertices, self.coeffs[:, :, :degree + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialMatrix) or other.vertices != self.vertices:
            return False
        bound = max(self.degree_bound, other.degree_bound)
        return all(np.array_equal(self.coefficient(d), other.coefficient(d)) for d in range(bound + 1))

    def __hash__(self):
        return hash((tuple(self.vertices), self.coeffs.tobytes()))

    def to_json(self) -> Dict[str, Any]:
        return {
            "vertices": self.vertices,
            "entries": [[[int(c) for c in self.coeffs[i, j]] for j in range(len(self.vertices))]
                        for i in range(len(self.vertices))],
        }

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "PolynomialMatrix":
        return cls(payload["vertices"], np.array(payload["entries"], dtype=np.int64))

    def to_text(self) -> str:
        lines = []
        for j in self.vertices:
            column = ", ".join(str(p.as_expr()) for p in self.column(j))
            lines.append(f"column {j}: ({column})")
        return "\n".join(lines)

    def to_latex(self) -> str:
        matrix = sympy.Matrix([[self.entry(i, j).as_expr() for j in self.vertices] for i in self.vertices])
        return sympy.latex(matrix)


def hilbert_matrix(basis: GradedBasis) -> PolynomialMatrix:
    """
    Hilbert series matrix of the computed basis.

    Args:
        basis: Graded basis (possibly partial)

    Returns:
        Entry (i, j) = sum_d dim e_i A(d) e_j t^d
    """
    vertices = list(basis.quiver.vertices)
    index = {v: i for i, v in enumerate(vertices)}
    coeffs = np.zeros((len(vertices), len(vertices), basis.max_degree + 1), dtype=np.int64)
    for (source, target, degree), paths in basis.blocks.items():
        coeffs[index[source], index[target], degree] = len(paths)
    return PolynomialMatrix(vertices, coeffs)


def closed_form_hilbert(data: RootData, vertices: Sequence[int], max_degree: int) -> PolynomialMatrix:
    """
    Expand (1 + P t^h)(1 - C t + t^2)^{-1} through ``max_degree``.

    The inverse series M satisfies M_0 = 1, M_1 = C and M_d = C M_{d-1} - M_{d-2}.
    """
    r = len(vertices)
    inverse = [np.eye(r, dtype=np.int64), data.C.copy()]
    while len(inverse) <= max_degree:
        inverse.append(data.C @ inverse[-1] - inverse[-2])
    coeffs = np.zeros((r, r, max_degree + 1), dtype=np.int64)
    for d in range(max_degree + 1):
        term = inverse[d].copy()
        if d >= data.h:
            term += data.P @ inverse[d - data.h]
        coeffs[:, :, d] = term
    return PolynomialMatrix(vertices, coeffs)


def hilbert_mismatches(basis: GradedBasis) -> List[Tuple[int, int, int, int, int]]:
    """
    Compare the computed Hilbert matrix with the closed form.

    Returns:
        (source, target, degree, computed, expected) for every differing coefficient
    """
    computed = hilbert_matrix(basis)
    expected = closed_form_hilbert(basis.data, computed.vertices, computed.degree_bound)
    mismatches = []
    for d in range(computed.degree_bound + 1):
        diff = np.argwhere(computed.coefficient(d) != expected.coefficient(d))
        for i, j in diff:
            mismatches.append((computed.vertices[i], computed.vertices[j], d,
                               int(computed.coefficient(d)[i, j]), int(expected.coefficient(d)[i, j])))
    return mismatches


def check_hilbert(basis: GradedBasis) -> PolynomialMatrix:
    """
    Hilbert matrix of the basis, verified against the closed form.

    Raises:
        AlgebraError: If any coefficient differs (signals a reduction bug)
    """
    mismatches = hilbert_mismatches(basis)
    if mismatches:
        source, target, degree, got, want = mismatches[0]
        error_msg = (f"{basis.quiver.name}: dim e{source} A({degree}) e{target} = {got}, "
                     f"closed form gives {want} ({len(mismatches)} mismatches)")
        logger.error(error_msg)
        raise AlgebraError(error_msg)
    logger.info(f"{basis.quiver.name}: Hilbert matrix agrees with the closed form through degree {basis.max_degree}")
    return hilbert_matrix(basis)


def closed_form_tail(data: RootData, vertices: Sequence[int]) -> Optional[int]:
    """
    First degree in h-1 .. 2h-2 where the closed-form expansion is nonzero.

    Returns:
        None when the expansion vanishes there, as it must for the correct nu
    """
    expansion = closed_form_hilbert(data, vertices, 2 * data.h - 2)
    for d in range(data.h - 1, 2 * data.h - 1):
        if np.any(expansion.coefficient(d)):
            return d
    return None
