"""
Algebra engine: monomial bases, exact arithmetic, the Frobenius structure and
Hilbert series of preprojective algebras.
"""

__version__ = '0.1.0'

from algebra.linalg import LinearAlgebraError
from algebra.basis import AlgebraError, GradedBasis, Path, compute_basis, basis_to_json, basis_from_json
from algebra.element import AlgebraElement
from algebra.preprojective import PreprojectiveAlgebra
from algebra.parser import ParseError, parse_element
from algebra.frobenius import FrobeniusError, FrobeniusForm
from algebra.hilbert import (
    PolynomialMatrix,
    hilbert_matrix,
    closed_form_hilbert,
    check_hilbert,
    closed_form_tail
)
from algebra.cache import BasisCache, load_basis, load_algebra

__all__ = [
    'LinearAlgebraError',
    'AlgebraError',
    'GradedBasis',
    'Path',
    'compute_basis',
    'basis_to_json',
    'basis_from_json',
    'AlgebraElement',
    'PreprojectiveAlgebra',
    'ParseError',
    'parse_element',
    'FrobeniusError',
    'FrobeniusForm',
    'PolynomialMatrix',
    'hilbert_matrix',
    'closed_form_hilbert',
    'check_hilbert',
    'closed_form_tail',
    'BasisCache',
    'load_basis',
    'load_algebra'
]
