"""
The center Z = HH^0(A): degreewise computation, closed generators and products.
"""

from center.center import (
    CenterError,
    CentralElement,
    CenterBasis,
    center_basis,
    center_products,
    commutator_defects,
    is_central,
    predicted_center_series,
    product_table_to_json
)
from center.generators import (
    d_boundary_expression,
    d_series_expression,
    match_closed_generators,
    closed_generators,
    top_identities
)

__all__ = [
    'CenterError',
    'CentralElement',
    'CenterBasis',
    'center_basis',
    'center_products',
    'commutator_defects',
    'is_central',
    'predicted_center_series',
    'product_table_to_json',
    'd_boundary_expression',
    'd_series_expression',
    'match_closed_generators',
    'closed_generators',
    'top_identities'
]
