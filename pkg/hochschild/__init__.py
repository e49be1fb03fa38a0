"""
Hochschild cohomology HH^0 .. HH^6 through the periodic bimodule resolution,
with named classes and the Nakayama sign data on nu-fixed vertices.
"""

from hochschild.complex import (
    MAX_INDEX,
    CohomologyError,
    Cochain,
    CochainSpace,
    SchofieldComplex,
    cochain_from_json,
    split_index,
    value_offset
)
from hochschild.cohomology import CohomologySpace, HochschildCohomology, hh_space, predicted_dimensions
from hochschild.eta import (
    EtaEigenbasis,
    EtaSignedMatrix,
    analytic_eta_signed_matrix,
    complex_eta_signed_matrix,
    delta_normalize,
    distance_data,
    eta_eigenbasis,
    eta_signed_matrix,
    evaluate_at_i,
    shortest_path,
    star_count
)
from hochschild.named import (
    NamedBasis,
    NamedElement,
    central_cochain,
    check_relations,
    named_basis,
    pair_psi_phi,
    pair_theta_zeta
)

__all__ = [
    'MAX_INDEX',
    'CohomologyError',
    'Cochain',
    'CochainSpace',
    'SchofieldComplex',
    'cochain_from_json',
    'split_index',
    'value_offset',
    'CohomologySpace',
    'HochschildCohomology',
    'hh_space',
    'predicted_dimensions',
    'EtaEigenbasis',
    'EtaSignedMatrix',
    'analytic_eta_signed_matrix',
    'complex_eta_signed_matrix',
    'delta_normalize',
    'distance_data',
    'eta_eigenbasis',
    'eta_signed_matrix',
    'evaluate_at_i',
    'shortest_path',
    'star_count',
    'NamedBasis',
    'NamedElement',
    'central_cochain',
    'check_relations',
    'named_basis',
    'pair_psi_phi',
    'pair_theta_zeta'
]
