"""
Dynkin quivers of types D and E and their root-system constants.
"""

from quiver.dynkin import (
    Arrow,
    DynkinQuiver,
    QuiverError,
    build_quiver,
    parse_selector,
    parse_selectors
)
from quiver.root_data import RootData, root_data

__all__ = [
    'Arrow',
    'DynkinQuiver',
    'QuiverError',
    'build_quiver',
    'parse_selector',
    'parse_selectors',
    'RootData',
    'root_data'
]
