import logging
from functools import cached_property
from typing import Optional, Union

from algebra.cache import BasisCache, load_algebra
from algebra.frobenius import FrobeniusForm
from algebra.preprojective import PreprojectiveAlgebra
from center.center import CenterBasis, center_basis
from hochschild.cohomology import HochschildCohomology
from hochschild.complex import SchofieldComplex
from hochschild.named import NamedBasis, named_basis
from products.cup import CupProducts
from products.table import ProductTable, full_product_table
from quiver.dynkin import DynkinQuiver, parse_selector
from quiver.root_data import RootData

logger = logging.getLogger(__name__)


class QuiverContext:
    """
    Everything computed for one quiver, built on first use and kept.

    Commands and checks share one context so that the basis, the center and
    the cohomology spaces are computed once per run.
    """

    def __init__(self, quiver: Union[str, DynkinQuiver], max_degree: Optional[int] = None,
                 cache: Optional[BasisCache] = None):
        self.quiver = parse_selector(quiver) if isinstance(quiver, str) else quiver
        self.max_degree = max_degree
        self.cache = cache

    @cached_property
    def algebra(self) -> PreprojectiveAlgebra:
        return load_algebra(self.quiver, self.max_degree, self.cache)

    @property
    def data(self) -> RootData:
        return self.algebra.data

    @property
    def complete(self) -> bool:
        return self.algebra.basis.complete

    @cached_property
    def frobenius(self) -> FrobeniusForm:
        return FrobeniusForm(self.algebra)

    @cached_property
    def center(self) -> CenterBasis:
        return center_basis(self.algebra, self.frobenius)

    @cached_property
    def complex(self) -> SchofieldComplex:
        return SchofieldComplex(self.algebra, self.frobenius)

    @cached_property
    def cohomology(self) -> HochschildCohomology:
        return HochschildCohomology(self.complex)

    @cached_property
    def named(self) -> NamedBasis:
        return named_basis(self.cohomology, self.center)

    @cached_property
    def products(self) -> CupProducts:
        return CupProducts(self.named)

    @cached_property
    def table(self) -> ProductTable:
        return full_product_table(self.products)
