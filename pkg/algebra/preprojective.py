import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Any

from algebra.basis import AlgebraError, Coordinates, GradedBasis, Path
from algebra.element import AlgebraElement
from utils.serialization import parse_rational, SerializationError

logger = logging.getLogger(__name__)

RawPath = Tuple[int, Tuple[int, ...]]


class PreprojectiveAlgebra:
    """
    The preprojective algebra of a Dynkin quiver on top of its GradedBasis.

    Provides normal forms of raw paths, multiplication, the star
    anti-involution and the Nakayama automorphism eta.
    """

    def __init__(self, basis: GradedBasis):
        self.basis = basis
        self.quiver = basis.quiver
        self.data = basis.data
        self.top = basis.top
        self.nu = self.data.nu_map()
        self._product_cache: Dict[Tuple[Path, Path], Coordinates] = {}
        self._eta_arrows = self._build_eta_arrows()
        logger.debug(f"Initialized algebra for {self.quiver.name}")

    def _build_eta_arrows(self) -> Dict[int, Tuple[int, int]]:
        """eta(c) = -eps_c * cbar, where cbar joins nu(src c) to nu(tgt c)."""
        arrow_nu = dict(self.data.arrow_nu)
        table = {}
        for index, arrow in enumerate(self.quiver.arrows):
            image = self.quiver.arrow_index(arrow_nu[arrow.base])
            if arrow.starred:
                image = self.quiver.star(image)
            table[index] = (-arrow.sign, image)
        return table

    # construction helpers

    def element(self, terms: Dict[Path, Any]) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self)

    def vertex(self, v: int) -> AlgebraElement:
        """The idempotent e_v."""
        if v not in self.nu:
            raise AlgebraError(f"{self.quiver.name} has no vertex {v}")
        return AlgebraElement(self, {Path(v, v, ()): 1})

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {Path(v, v, ()): 1 for v in self.quiver.vertices})

    def arrow(self, name: str) -> AlgebraElement:
        index = self.quiver.arrow_index(name)
        arrow = self.quiver.arrows[index]
        return AlgebraElement(self, {Path(arrow.source, arrow.target, (index,)): 1})

    def basis_element(self, path: Path) -> AlgebraElement:
        return AlgebraElement(self, {path: 1})

    # normal forms

    def _right_multiply(self, coords: Coordinates, arrow: int) -> Coordinates:
        result: Dict[Path, Fraction] = defaultdict(Fraction)
        for path, coeff in coords.items():
            if path.degree >= self.top or path.target != self.quiver.arrows[arrow].source:
                continue
            if path.degree >= self.basis.max_degree:
                error_msg = (f"{self.quiver.name}: product of degree {path.degree + 1} lies beyond the "
                             f"partial basis, which stops at degree {self.basis.max_degree}")
                logger.error(error_msg)
                raise AlgebraError(error_msg)
            for image, value in self.basis.right_table[(path, arrow)].items():
                result[image] += coeff * value
        return {p: c for p, c in result.items() if c != 0}

    def reduce_raw(self, source: int, arrows: Sequence[int]) -> Coordinates:
        """
        Coordinates of a raw path starting at ``source``.

        Raises:
            AlgebraError: If two consecutive arrows do not compose
        """
        current = source
        for position, arrow in enumerate(arrows):
            a = self.quiver.arrows[arrow]
            if a.source != current:
                previous = self.quiver.arrows[arrows[position - 1]].name if position else f"e{source}"
                raise AlgebraError(f"Incomposable juxtaposition '{previous} {a.name}'")
            current = a.target
        if len(arrows) > self.top:
            return {}
        if len(arrows) > self.basis.max_degree:
            raise AlgebraError(f"Path of degree {len(arrows)} exceeds the computed degree "
                               f"{self.basis.max_degree} of a partial basis")
        coords: Coordinates = {Path(source, source, ()): Fraction(1)}
        for arrow in arrows:
            coords = self._right_multiply(coords, arrow)
            if not coords:
                break
        return coords

    def path(self, labels: Sequence[str]) -> AlgebraElement:
        """
        Normal form of a single raw path given by labels (arrows or one e<v>).

        Raises:
            AlgebraError: If the labels do not form a composable path
        """
        if not labels:
            raise AlgebraError("Empty path")
        if len(labels) == 1 and labels[0].startswith("e"):
            return self.vertex(int(labels[0][1:]))
        indices = [self.quiver.arrow_index(label) for label in labels]
        source = self.quiver.arrows[indices[0]].source
        return AlgebraElement(self, self.reduce_raw(source, indices))

    def normal_form(self, raw: Iterable[Tuple[Any, Sequence[str]]]) -> AlgebraElement:
        """
        Normal form of a formal combination of raw paths.

        Args:
            raw: Pairs (coefficient, labels)

        Returns:
            The reduced element (zero in degrees above h-2 and on the relation ideal)
        """
        result = self.zero()
        for coeff, labels in raw:
            result = result + self.path(labels) * Fraction(coeff)
        return result

    def relation(self, vertex: int) -> List[Tuple[int, Tuple[int, ...]]]:
        """The relation rho_v as raw signed paths (sign, (c, c*))."""
        return [(self.quiver.arrows[c].sign, (c, self.quiver.star(c)))
                for c in self.quiver.arrows_from(vertex)]

    # multiplication

    def multiply_paths(self, x: Path, y: Path) -> Coordinates:
        if x.target != y.source or x.degree + y.degree > self.top:
            return {}
        if not y.arrows:
            return {x: Fraction(1)}
        key = (x, y)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        prefix = Path(y.source, self.quiver.arrows[y.arrows[-2]].target, y.arrows[:-1]) \
            if y.degree > 1 else Path(y.source, y.source, ())
        result = self._right_multiply(self.multiply_paths(x, prefix), y.arrows[-1])
        self._product_cache[key] = result
        return result

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Product in the algebra; bilinear and degree additive."""
        result: Dict[Path, Fraction] = defaultdict(Fraction)
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                if x.target != y.source:
                    continue
                for z, cz in self.multiply_paths(x, y).items():
                    result[z] += cx * cy * cz
        return AlgebraElement(self, result)

    # involutions

    def star(self, a: AlgebraElement) -> AlgebraElement:
        """Linear anti-automorphism reversing every arrow."""
        result = self.zero()
        for path, coeff in a.terms.items():
            reversed_arrows = tuple(self.quiver.star(c) for c in reversed(path.arrows))
            result = result + AlgebraElement(self, self.reduce_raw(path.target, reversed_arrows)) * coeff
        return result

    def eta_raw(self, source: int, arrows: Sequence[int]) -> Tuple[int, int, Tuple[int, ...]]:
        """Image of a raw path under eta as (sign, source, arrows)."""
        sign = 1
        images = []
        for c in arrows:
            s, image = self._eta_arrows[c]
            sign *= s
            images.append(image)
        return sign, self.nu[source], tuple(images)

    def nakayama(self, a: AlgebraElement) -> AlgebraElement:
        """The Nakayama automorphism: e_i -> e_nu(i), c -> -eps_c cbar."""
        result = self.zero()
        for path, coeff in a.terms.items():
            sign, source, arrows = self.eta_raw(path.source, path.arrows)
            result = result + AlgebraElement(self, self.reduce_raw(source, arrows)) * (sign * coeff)
        return result

    def eta_arrow(self, index: int) -> AlgebraElement:
        """eta applied to a single arrow, as an element."""
        sign, image = self._eta_arrows[index]
        arrow = self.quiver.arrows[image]
        return AlgebraElement(self, {Path(arrow.source, arrow.target, (image,)): sign})

    # serialization

    def element_from_json(self, payload: Dict[str, Any]) -> AlgebraElement:
        """
        Inverse of AlgebraElement.to_json.

        Raises:
            SerializationError: If the payload is malformed
        """
        try:
            raw = [(parse_rational(m["coeff"]), m["path"]) for m in payload["monomials"]]
        except (KeyError, TypeError) as e:
            raise SerializationError(f"Malformed element payload: {str(e)}")
        return self.normal_form(raw)
