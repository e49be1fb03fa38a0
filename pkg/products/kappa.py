"""
Star-count traces of the Nakayama automorphism and the signed adjacency of I'.

kappa_{k,l} is the trace of s * eta on e_k A e_l for nu-fixed k, l, where s
counts arrows of Q* in a monomial.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

import sympy

from algebra import linalg
from algebra.hilbert import T, hilbert_matrix
from hochschild.eta import distance_data, eta_acts_by_sign, eta_eigenbasis, evaluate_at_i, star_count
from utils.serialization import matrix_to_json

logger = logging.getLogger(__name__)


class ProductError(Exception):
    """Exception raised when a product computation contradicts its structural checks."""
    pass


@dataclass
class KappaMatrix:
    """kappa_{k,l} over F x F, rows and columns in ``vertices`` order."""
    vertices: List[int]
    matrix: List[List[int]]

    def entry(self, k: int, l: int) -> int:
        return self.matrix[self.vertices.index(k)][self.vertices.index(l)]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.matrix)

    def to_latex(self) -> str:
        return sympy.latex(self.to_sympy())

    def to_json(self) -> Dict[str, Any]:
        return {"vertices": self.vertices, "matrix": matrix_to_json(self.matrix)}


def _uniform_star_count(algebra, vector) -> int:
    counts = {star_count(algebra, path) for path in vector.terms}
    if len(counts) != 1:
        error_msg = f"{algebra.quiver.name}: eta eigenvector {vector} mixes star counts {sorted(counts)}"
        logger.error(error_msg)
        raise ProductError(error_msg)
    return counts.pop()


def kappa_entry(algebra, k: int, l: int) -> int:
    """
    Signed star-count sum over an eta eigenbasis of e_k A e_l.

    Raises:
        ProductError: If an eigenvector mixes monomials of different star count
    """
    eigen = eta_eigenbasis(algebra, k, l)
    plus = sum(_uniform_star_count(algebra, x) for x in eigen.plus)
    minus = sum(_uniform_star_count(algebra, x) for x in eigen.minus)
    return plus - minus


def kappa_matrix(algebra) -> KappaMatrix:
    vertices = list(algebra.data.fixed)
    matrix = [[kappa_entry(algebra, k, l) for l in vertices] for k in vertices]
    logger.info(f"{algebra.quiver.name}: kappa computed on {len(vertices)} fixed vertices")
    return KappaMatrix(vertices, matrix)


def analytic_kappa_matrix(algebra, require_sign_action: bool = True) -> Optional[KappaMatrix]:
    """
    kappa from the Hilbert series alone, valid when eta acts by a sign on each block.

    With G = H_kj(t) / t^d, d = d(k, j) and n the number of Q-arrows on the
    shortest path, kappa_kj = (-1)^n ((d - n) G(i) + t G'(t) / 2 at t = i).
    With require_sign_action=False the expression is evaluated regardless.
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
            value = (d - n) * evaluate_at_i(g) + evaluate_at_i(T * sympy.diff(g, T) / 2)
            value *= (-1) ** n
            if value.denominator != 1:
                raise ProductError(f"{algebra.quiver.name}: analytic kappa_{k},{j} = {value} is not an integer")
            row.append(int(value))
        matrix.append(row)
    return KappaMatrix(vertices, matrix)


def signed_adjacency(algebra) -> List[List[int]]:
    """
    S over I' x I': S_ij = -sign(c) for the arrow c: i -> j, 0 when not adjacent.
    """
    indices = list(algebra.data.y_indices)
    position = {v: p for p, v in enumerate(indices)}
    matrix = [[0] * len(indices) for _ in indices]
    for arrow in algebra.quiver.arrows:
        if arrow.source in position and arrow.target in position:
            matrix[position[arrow.source]][position[arrow.target]] = -arrow.sign
    return matrix


def check_m_beta(algebra, m_beta: List[List[Fraction]]) -> None:
    """
    M_beta must be skew, invertible and satisfy M_beta S = (h/2) I.

    Raises:
        ProductError: On the first violated property
    """
    name = algebra.quiver.name
    size = len(m_beta)
    for i in range(size):
        for j in range(size):
            if m_beta[i][j] != -m_beta[j][i]:
                error_msg = f"{name}: M_beta is not skew at ({i}, {j})"
                logger.error(error_msg)
                raise ProductError(error_msg)
    if size and linalg.dense_rank(m_beta) != size:
        error_msg = f"{name}: M_beta is degenerate"
        logger.error(error_msg)
        raise ProductError(error_msg)
    s = signed_adjacency(algebra)
    half_h = Fraction(algebra.data.h, 2)
    for i in range(size):
        for j in range(size):
            value = sum(m_beta[i][k] * s[k][j] for k in range(size))
            if value != (half_h if i == j else 0):
                error_msg = f"{name}: (M_beta S)[{i}][{j}] = {value}, expected {half_h if i == j else 0}"
                logger.error(error_msg)
                raise ProductError(error_msg)
