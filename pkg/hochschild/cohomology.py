import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Any

from tqdm import tqdm

from algebra import linalg
from hochschild.complex import MAX_INDEX, Cochain, CochainSpace, CohomologyError, SchofieldComplex
from utils.logging_utils import progress_enabled

logger = logging.getLogger(__name__)


def predicted_dimensions(data, index: int) -> Dict[int, int]:
    """
    Degreewise dimensions of HH^index predicted from U, K, L and Y.

    Args:
        data: RootData of the quiver
        index: 0 .. 7

    Returns:
        degree -> dimension (nonzero entries only)
    """
    h = data.h
    u = data.center_degrees()
    series: Dict[int, int] = {}

    def bump(degree: int, count: int = 1) -> None:
        if count:
            series[degree] = series.get(degree, 0) + count

    if index == 0:
        for k in u:
            bump(k)
        bump(h - 2, data.n_fixed)
    elif index == 1:
        for k in u:
            bump(k)
    elif index in (2, 3):
        bump(-2, data.r_minus)
    elif index == 4:
        for k in u:
            bump(-4 - k)
    elif index == 5:
        for k in u:
            bump(-4 - k)
        bump(-h - 2, data.dim_y)
    elif index == 6:
        for k in u:
            bump(k - 2 * h)
        bump(-h - 2, data.dim_y)
    elif index == 7:
        for k in u:
            bump(k - 2 * h)
    else:
        raise CohomologyError(f"No prediction for HH^{index}")
    return dict(sorted(series.items()))


class CohomologySpace:
    """
    HH^index in one internal degree as cocycles modulo coboundaries.

    Representatives are echelon cocycles independent of the coboundaries
    until ``set_basis`` installs named ones.
    """

    def __init__(self, complex_: SchofieldComplex, index: int, degree: int):
        self.complex = complex_
        self.index = index
        self.degree = degree
        self.cochains: CochainSpace = complex_.space(index, degree)
        self.boundaries = complex_.image(index, degree)
        self.cocycles = complex_.kernel(index, degree)
        self.boundary_rank = linalg.rank(self.boundaries, self.cochains.dimension) if self.boundaries else 0
        self.dimension = len(self.cocycles) - self.boundary_rank
        self.representatives: List[Cochain] = self._echelon_representatives()
        self.names: List[str] = [f"[{index}:{degree}:{k}]" for k in range(self.dimension)]

    def _echelon_representatives(self) -> List[Cochain]:
        n = self.cochains.dimension
        chosen: List[Dict[int, Fraction]] = []
        current = list(self.boundaries)
        rank = self.boundary_rank
        for vector in self.cocycles:
            if len(chosen) == self.dimension:
                break
            trial = current + [vector]
            new_rank = linalg.rank(trial, n)
            if new_rank > rank:
                chosen.append(vector)
                current = trial
                rank = new_rank
        return [self.cochains.from_vector(v) for v in chosen]

    def is_cocycle(self, cochain: Cochain) -> bool:
        if self.index >= MAX_INDEX:
            return True
        return self.complex.apply(cochain).is_zero()

    def is_coboundary(self, cochain: Cochain) -> bool:
        vector = self.cochains.to_vector(cochain)
        if not vector:
            return True
        if not self.boundaries:
            return False
        return linalg.solve_in_span(self.boundaries, vector, self.cochains.dimension) is not None

    def coordinates(self, cochain: Cochain) -> List[Fraction]:
        """
        Coordinates of the class of a cocycle in the current representatives.

        Raises:
            CohomologyError: If the cochain is not a cocycle or cannot be expressed
        """
        if not self.is_cocycle(cochain):
            error_msg = f"{self.complex.quiver.name}: cochain in C^{self.index}({self.degree}) is not a cocycle"
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        if self.dimension == 0:
            return []
        vector = self.cochains.to_vector(cochain)
        columns = list(self.boundaries) + [self.cochains.to_vector(r) for r in self.representatives]
        solution = linalg.solve_in_span(columns, vector, self.cochains.dimension)
        if solution is None:
            error_msg = f"{self.complex.quiver.name}: projection onto HH^{self.index}({self.degree}) failed"
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        return solution[len(self.boundaries):]

    def project(self, cochain: Cochain) -> Dict[str, Fraction]:
        """The class of a cocycle as a combination of the representative names."""
        coords = self.coordinates(cochain)
        return OrderedDict((name, c) for name, c in zip(self.names, coords) if c != 0)

    def set_basis(self, names: List[str], cochains: List[Cochain]) -> None:
        """
        Install named representatives.

        Raises:
            CohomologyError: If they are not cocycles or not a basis of the cohomology
        """
        if len(names) != self.dimension or len(cochains) != self.dimension:
            error_msg = (f"{self.complex.quiver.name}: HH^{self.index}({self.degree}) has dimension "
                         f"{self.dimension}, got {len(cochains)} named classes ({', '.join(names)})")
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        for name, cochain in zip(names, cochains):
            if not self.is_cocycle(cochain):
                error_msg = f"{self.complex.quiver.name}: {name} is not a cocycle"
                logger.error(error_msg)
                raise CohomologyError(error_msg)
        vectors = list(self.boundaries) + [self.cochains.to_vector(c) for c in cochains]
        if linalg.rank(vectors, self.cochains.dimension) != self.boundary_rank + self.dimension:
            error_msg = (f"{self.complex.quiver.name}: {', '.join(names)} are dependent modulo "
                         f"coboundaries in HH^{self.index}({self.degree})")
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        self.names = list(names)
        self.representatives = list(cochains)

    def to_json(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "degree": self.degree,
            "dimension": self.dimension,
            "basis": [{"name": n, "cochain": c.to_json()} for n, c in zip(self.names, self.representatives)],
        }


class HochschildCohomology:
    """
    Lazily computed HH^i(d) for i = 0 .. 7 over a SchofieldComplex.
    """

    def __init__(self, complex_: SchofieldComplex):
        self.complex = complex_
        self.algebra = complex_.algebra
        self.data = complex_.data
        self._spaces: Dict[Tuple[int, int], CohomologySpace] = {}

    def space(self, index: int, degree: int) -> CohomologySpace:
        key = (index, degree)
        if key not in self._spaces:
            self._spaces[key] = CohomologySpace(self.complex, index, degree)
        return self._spaces[key]

    def degree_range(self, index: int) -> Tuple[int, int]:
        return self.complex.degree_range(index)

    def dimensions(self, index: int) -> Dict[int, int]:
        """Nonzero degreewise dimensions of HH^index."""
        low, high = self.degree_range(index)
        result = {}
        degrees = range(low, high + 1)
        for degree in tqdm(degrees, desc=f"{self.algebra.quiver.name} HH^{index}",
                           disable=not progress_enabled(), leave=False):
            dim = self.space(index, degree).dimension
            if dim:
                result[degree] = dim
        return result

    def check_dimensions(self, indices: Optional[List[int]] = None) -> Dict[int, Dict[int, int]]:
        """
        Compare computed and predicted dimensions.

        Raises:
            CohomologyError: On the first mismatch
        """
        table = {}
        for index in indices if indices is not None else range(7):
            computed = self.dimensions(index)
            predicted = predicted_dimensions(self.data, index)
            if computed != predicted:
                error_msg = (f"{self.algebra.quiver.name}: HH^{index} has dimensions {computed}, "
                             f"predicted {predicted}")
                logger.error(error_msg)
                raise CohomologyError(error_msg)
            table[index] = computed
        logger.info(f"{self.algebra.quiver.name}: HH dimensions agree for indices {sorted(table)}")
        return table

    def check_ranges(self) -> List[str]:
        """Indices whose nonzero degrees leave the tabulated HH^i degree ranges."""
        failures = []
        for index, (low, high) in self.data.degree_ranges().items():
            outside = [d for d in self.dimensions(index) if d < low or d > high]
            if outside:
                failures.append(f"HH^{index}: degrees {outside} outside [{low}, {high}]")
        return failures

    def euler_defects(self) -> List[Tuple[int, int, int]]:
        """
        Degrees where chi(C^0..C^6) - chi(HH^0..HH^6) differs from rank(C^6 -> C^7).

        Returns:
            (degree, difference, rank) for each failing degree
        """
        low = min(self.degree_range(i)[0] for i in range(7))
        high = max(self.degree_range(i)[1] for i in range(7))
        failures = []
        for degree in range(low, high + 1):
            chi_c = sum((-1) ** i * self.complex.space(i, degree).dimension for i in range(7))
            chi_h = sum((-1) ** i * self.space(i, degree).dimension for i in range(7))
            rank = self.complex.rank(6, degree)
            if chi_c - chi_h != rank:
                failures.append((degree, chi_c - chi_h, rank))
        return failures

    def check_periodicity(self) -> Dict[int, int]:
        """
        HH^7 computed on C^6 -> C^7 -> C^8 must equal HH^1 shifted by -2h.

        Raises:
            CohomologyError: If the dimensions differ
        """
        computed = self.dimensions(7)
        shifted = {d - 2 * self.data.h: n for d, n in self.dimensions(1).items()}
        if computed != shifted:
            error_msg = f"{self.algebra.quiver.name}: HH^7 = {computed} but HH^1[-2h] = {shifted}"
            logger.error(error_msg)
            raise CohomologyError(error_msg)
        return computed

    def project(self, cochain: Cochain) -> Dict[str, Fraction]:
        return self.space(cochain.index, cochain.degree).project(cochain)


def hh_space(cohomology: HochschildCohomology, index: int) -> Dict[int, CohomologySpace]:
    """All nonzero degree pieces of HH^index."""
    low, high = cohomology.degree_range(index)
    spaces = OrderedDict()
    for degree in range(low, high + 1):
        space = cohomology.space(index, degree)
        if space.dimension:
            spaces[degree] = space
    return spaces
