import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Any

from algebra import linalg
from algebra.basis import Path
from algebra.element import AlgebraElement
from algebra.frobenius import FrobeniusForm

logger = logging.getLogger(__name__)

# Highest cochain index; C^7 and C^8 carry the periodicity check for HH^7.
MAX_INDEX = 8

Slot = int


class CohomologyError(Exception):
    """Exception raised when the complex or a cohomology computation is inconsistent."""
    pass


def split_index(index: int) -> Tuple[int, int]:
    """i = 3q + r -> (q, r)."""
    return divmod(index, 3)


def value_offset(index: int, h: int) -> int:
    """Value degree minus internal degree for cochains in C^index."""
    q, r = split_index(index)
    return (0, 1, 2)[r] + q * h


class Cochain:
    """
    Element of C^index in one internal degree.

    ``values`` maps a slot to an A-value: vertex slots (index = 0, 2 mod 3)
    hold an element of e_v A e_{nu^q v}, arrow slots (index = 1 mod 3) hold an
    element of e_{src c} A e_{nu^q tgt c}.
    """

    __slots__ = ("algebra", "index", "degree", "values")

    def __init__(self, algebra, index: int, degree: int, values: Optional[Dict[Slot, AlgebraElement]] = None):
        self.algebra = algebra
        self.index = index
        self.degree = degree
        self.values: Dict[Slot, AlgebraElement] = {}
        for slot, value in (values or {}).items():
            if not value.is_zero():
                self.values[slot] = value

    @property
    def arrow_slots(self) -> bool:
        return self.index % 3 == 1

    def value(self, slot: Slot) -> AlgebraElement:
        return self.values.get(slot, self.algebra.zero())

    def is_zero(self) -> bool:
        return not self.values

    def _check_compatible(self, other: "Cochain") -> None:
        if (self.index, self.degree) != (other.index, other.degree):
            raise CohomologyError(f"Cannot combine cochains of C^{self.index}({self.degree}) "
                                  f"and C^{other.index}({other.degree})")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        values = dict(self.values)
        for slot, value in other.values.items():
            values[slot] = values[slot] + value if slot in values else value
        return Cochain(self.algebra, self.index, self.degree, values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __neg__(self) -> "Cochain":
        return Cochain(self.algebra, self.index, self.degree, {s: -v for s, v in self.values.items()})

    def __mul__(self, scalar) -> "Cochain":
        scalar = Fraction(scalar)
        return Cochain(self.algebra, self.index, self.degree, {s: v * scalar for s, v in self.values.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Cochain":
        return self * (1 / Fraction(scalar))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.index, self.degree) == (other.index, other.degree) and self.values == other.values

    def __hash__(self):
        return hash((self.index, self.degree, frozenset(self.values.items())))

    def times_central(self, z: AlgebraElement, degree_shift: int) -> "Cochain":
        """Slotwise product z * value; the internal degree grows by ``degree_shift``."""
        values = {slot: z * value for slot, value in self.values.items()}
        return Cochain(self.algebra, self.index, self.degree + degree_shift, values)

    def slot_label(self, slot: Slot) -> str:
        if self.arrow_slots:
            return self.algebra.quiver.arrows[slot].name
        return f"e{slot}"

    def __repr__(self) -> str:
        return f"Cochain(C^{self.index}({self.degree}), {self})"

    def __str__(self) -> str:
        if not self.values:
            return "0"
        return "; ".join(f"{self.slot_label(slot)}: {self.values[slot]}" for slot in sorted(self.values))

    def to_json(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "degree": self.degree,
            "values": OrderedDict((self.slot_label(slot), self.values[slot].to_json())
                                  for slot in sorted(self.values)),
        }


def cochain_from_json(algebra, payload: Dict[str, Any]) -> Cochain:
    """Inverse of Cochain.to_json."""
    index = int(payload["index"])
    values = {}
    for label, element in payload["values"].items():
        if index % 3 == 1:
            slot = algebra.quiver.arrow_index(label)
        else:
            slot = int(label[1:])
        values[slot] = algebra.element_from_json(element)
    return Cochain(algebra, index, int(payload["degree"]), values)


class CochainSpace:
    """
    Coordinates of C^index(degree): one coordinate per (slot, basis path).
    """

    def __init__(self, algebra, index: int, degree: int):
        self.algebra = algebra
        self.index = index
        self.degree = degree
        self.q, self.r = split_index(index)
        self.value_degree = degree + value_offset(index, algebra.data.h)
        self.slots = self._slots()
        self.coordinates: List[Tuple[Slot, Path]] = []
        if 0 <= self.value_degree <= min(algebra.top, algebra.basis.max_degree):
            for slot in self.slots:
                source, target = self.slot_ends(slot)
                for path in algebra.basis.block(source, target, self.value_degree):
                    self.coordinates.append((slot, path))
        self.position = {coordinate: k for k, coordinate in enumerate(self.coordinates)}

    def _slots(self) -> List[Slot]:
        if self.r == 1:
            return list(range(len(self.algebra.quiver.arrows)))
        return list(self.algebra.quiver.vertices)

    def twist(self, vertex: int) -> int:
        return self.algebra.nu[vertex] if self.q % 2 else vertex

    def slot_ends(self, slot: Slot) -> Tuple[int, int]:
        if self.r == 1:
            arrow = self.algebra.quiver.arrows[slot]
            return arrow.source, self.twist(arrow.target)
        return slot, self.twist(slot)

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def zero(self) -> Cochain:
        return Cochain(self.algebra, self.index, self.degree)

    def unit(self, k: int) -> Cochain:
        slot, path = self.coordinates[k]
        return Cochain(self.algebra, self.index, self.degree, {slot: self.algebra.basis_element(path)})

    def to_vector(self, cochain: Cochain) -> Dict[int, Fraction]:
        """
        Coordinates of a cochain.

        Raises:
            CohomologyError: If a value has a monomial outside its slot's block
        """
        if (cochain.index, cochain.degree) != (self.index, self.degree):
            raise CohomologyError(f"Cochain of C^{cochain.index}({cochain.degree}) "
                                  f"does not live in C^{self.index}({self.degree})")
        vector = {}
        for slot, value in cochain.values.items():
            for path, coeff in value.terms.items():
                k = self.position.get((slot, path))
                if k is None:
                    error_msg = (f"C^{self.index}({self.degree}): value at {cochain.slot_label(slot)} "
                                 f"leaves its block ({self.algebra.basis.path_label(path)})")
                    logger.error(error_msg)
                    raise CohomologyError(error_msg)
                vector[k] = coeff
        return vector

    def from_vector(self, vector: Dict[int, Fraction]) -> Cochain:
        values: Dict[Slot, Dict[Path, Fraction]] = {}
        for k, coeff in vector.items():
            if coeff:
                slot, path = self.coordinates[k]
                values.setdefault(slot, {})[path] = coeff
        return Cochain(self.algebra, self.index, self.degree,
                       {slot: AlgebraElement(self.algebra, terms) for slot, terms in values.items()})


class SchofieldComplex:
    """
    The Hochschild cochain complex obtained from the Schofield resolution.

    For i = 3q + r the twist is eta^q (so nu^q on vertices) and:

    - r = 0 -> 1: (dx)_c = c x_{tgt c} - x_{src c} eta^q(c)
    - r = 1 -> 2: (dx)_v = sum_{src c = v} eps_c (c x_{c*} + x_c eta^q(c*))
    - r = 2 -> 0: (dx)_w = sum_{x_j, src x_j = w} x_j x_{tgt x_j} eta^q(x_j^*)

    where x_j runs over the monomial basis and x_j^* is its Frobenius dual.
    """

    def __init__(self, algebra, frobenius: Optional[FrobeniusForm] = None):
        self.algebra = algebra
        self.quiver = algebra.quiver
        self.data = algebra.data
        self.frobenius = frobenius or FrobeniusForm(algebra)
        self._spaces: Dict[Tuple[int, int], CochainSpace] = {}
        self._matrices: Dict[Tuple[int, int], List[Dict[int, Fraction]]] = {}
        self._casimir: Dict[int, Dict[int, List[Tuple[Path, AlgebraElement, AlgebraElement]]]] = {}
        self._arrows = [algebra.basis_element(Path(a.source, a.target, (i,)))
                        for i, a in enumerate(self.quiver.arrows)]
        self._eta_arrows = [algebra.eta_arrow(i) for i in range(len(self.quiver.arrows))]

    def degree_range(self, index: int) -> Tuple[int, int]:
        """Internal degrees in which C^index can be nonzero."""
        offset = value_offset(index, self.data.h)
        return -offset, self.algebra.top - offset

    def space(self, index: int, degree: int) -> CochainSpace:
        key = (index, degree)
        if key not in self._spaces:
            self._spaces[key] = CochainSpace(self.algebra, index, degree)
        return self._spaces[key]

    def _eta_power(self, a: AlgebraElement, q: int) -> AlgebraElement:
        return self.algebra.nakayama(a) if q % 2 else a

    def _casimir_pairs(self, parity: int) -> Dict[int, List[Tuple[Path, AlgebraElement, AlgebraElement]]]:
        """Per vertex v: (x_j, x_j, eta^parity(x_j^*)) over basis paths x_j ending at v."""
        if parity not in self._casimir:
            table: Dict[int, List[Tuple[Path, AlgebraElement, AlgebraElement]]] = {}
            duals = self.frobenius.dual_basis()
            for path in self.algebra.basis.all_paths():
                table.setdefault(path.target, []).append(
                    (path, self.algebra.basis_element(path), self._eta_power(duals[path], parity)))
            self._casimir[parity] = table
        return self._casimir[parity]

    def apply(self, cochain: Cochain) -> Cochain:
        """
        The coboundary of a cochain.

        Raises:
            CohomologyError: If the index is outside 0 .. MAX_INDEX - 1
        """
        index = cochain.index
        if not 0 <= index < MAX_INDEX:
            raise CohomologyError(f"No differential out of C^{index}")
        q, r = split_index(index)
        algebra = self.algebra
        values: Dict[Slot, AlgebraElement] = {}

        def add(slot: Slot, value: AlgebraElement) -> None:
            if value.is_zero():
                return
            values[slot] = values[slot] + value if slot in values else value

        if r == 0:
            for slot, x in cochain.values.items():
                for c, arrow in enumerate(self.quiver.arrows):
                    if arrow.target == slot:
                        add(c, self._arrows[c] * x)
                    if arrow.source == slot:
                        eta_c = self._eta_arrows[c] if q % 2 else self._arrows[c]
                        add(c, -(x * eta_c))
        elif r == 1:
            for c, x in cochain.values.items():
                arrow = self.quiver.arrows[c]
                partner = self.quiver.star(c)
                # c* contributes eps_{c*} c* x_c at the vertex tgt c
                add(arrow.target, self._arrows[partner] * x * self.quiver.arrows[partner].sign)
                eta_partner = self._eta_arrows[partner] if q % 2 else self._arrows[partner]
                add(arrow.source, x * eta_partner * arrow.sign)
        else:
            pairs = self._casimir_pairs(q % 2)
            for slot, x in cochain.values.items():
                for path, element, dual in pairs.get(slot, []):
                    add(path.source, element * x * dual)
        return Cochain(algebra, index + 1, cochain.degree, values)

    def differential(self, index: int, degree: int) -> List[Dict[int, Fraction]]:
        """
        Matrix of d: C^index(degree) -> C^{index+1}(degree), column by column.

        Returns:
            One sparse column (target coordinates) per source coordinate
        """
        key = (index, degree)
        if key not in self._matrices:
            source = self.space(index, degree)
            target = self.space(index + 1, degree)
            columns = []
            for k in range(source.dimension):
                columns.append(target.to_vector(self.apply(source.unit(k))))
            self._matrices[key] = columns
            logger.debug(f"{self.quiver.name}: d on C^{index}({degree}) is "
                         f"{target.dimension}x{source.dimension}")
        return self._matrices[key]

    def rank(self, index: int, degree: int) -> int:
        if index < 0 or index >= MAX_INDEX:
            return 0
        columns = self.differential(index, degree)
        target = self.space(index + 1, degree)
        return linalg.rank(columns, target.dimension) if columns else 0

    def kernel(self, index: int, degree: int) -> List[Dict[int, Fraction]]:
        """Basis of the cocycles in C^index(degree) as coordinate vectors."""
        source = self.space(index, degree)
        if index >= MAX_INDEX:
            return [{k: Fraction(1)} for k in range(source.dimension)]
        rows = list(linalg.transpose(self.differential(index, degree)).values())
        return linalg.nullspace(rows, source.dimension)

    def image(self, index: int, degree: int) -> List[Dict[int, Fraction]]:
        """Columns spanning the coboundaries in C^index(degree)."""
        if index == 0:
            return []
        return [c for c in self.differential(index - 1, degree) if c]

    def square_defects(self, index: int, degree: int) -> List[int]:
        """Source coordinates k of C^index(degree) with d(d(e_k)) != 0."""
        if index + 1 >= MAX_INDEX:
            return []
        source = self.space(index, degree)
        middle = self.space(index + 1, degree)
        failures = []
        for k in range(source.dimension):
            once = self.apply(source.unit(k))
            if once.is_zero():
                continue
            if not self.apply(middle.from_vector(middle.to_vector(once))).is_zero():
                failures.append(k)
        return failures

    def check_square_zero(self, indices: Optional[List[int]] = None) -> int:
        """
        Verify d o d = 0 on every basis cochain.

        Returns:
            Number of (index, degree) pairs checked

        Raises:
            CohomologyError: On the first failure
        """
        checked = 0
        for index in indices if indices is not None else range(MAX_INDEX - 1):
            low, high = self.degree_range(index)
            for degree in range(low, high + 1):
                failures = self.square_defects(index, degree)
                if failures:
                    space = self.space(index, degree)
                    error_msg = (f"{self.quiver.name}: d o d != 0 on C^{index}({degree}) at "
                                 f"{space.unit(failures[0])}")
                    logger.error(error_msg)
                    raise CohomologyError(error_msg)
                checked += 1
        return checked
