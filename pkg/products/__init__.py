"""
Cup products on HH^0 .. HH^6 of preprojective algebras: chain-level
formulas, the pairings M_alpha and M_beta, and the full product table.
"""

from products.kappa import (
    KappaMatrix,
    ProductError,
    analytic_kappa_matrix,
    check_m_beta,
    kappa_entry,
    kappa_matrix,
    signed_adjacency
)
from products.cup import CupProducts, pair_matrix
from products.table import (
    ProductEntry,
    ProductTable,
    ProductTableBuilder,
    Verdict,
    full_product_table,
    target_degrees,
    zero_product_verdict
)

__all__ = [
    'KappaMatrix',
    'ProductError',
    'analytic_kappa_matrix',
    'check_m_beta',
    'kappa_entry',
    'kappa_matrix',
    'signed_adjacency',
    'CupProducts',
    'pair_matrix',
    'ProductEntry',
    'ProductTable',
    'ProductTableBuilder',
    'Verdict',
    'full_product_table',
    'target_degrees',
    'zero_product_verdict'
]
