from fractions import Fraction
from typing import Dict, Iterator, Optional, Set, Tuple, Any, TYPE_CHECKING

from algebra.basis import Path
from utils.serialization import format_rational

if TYPE_CHECKING:
    from algebra.preprojective import PreprojectiveAlgebra


def _sort_key(path: Path) -> Tuple:
    return (path.degree, path.source, path.target, path.arrows)


class AlgebraElement:
    """
    Exact rational combination of basis paths of a preprojective algebra.

    Zero coefficients are never stored. Arithmetic with another element goes
    through the owning algebra; ints and Fractions act as scalars.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "PreprojectiveAlgebra", terms: Optional[Dict[Path, Any]] = None):
        self.algebra = algebra
        self.terms: Dict[Path, Fraction] = {}
        for path, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                self.terms[path] = coeff

    def __iter__(self) -> Iterator[Tuple[Path, Fraction]]:
        for path in sorted(self.terms, key=_sort_key):
            yield path, self.terms[path]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, path: Path) -> Fraction:
        return self.terms.get(path, Fraction(0))

    def degrees(self) -> Set[int]:
        return {path.degree for path in self.terms}

    def is_homogeneous(self) -> bool:
        """True when all monomials share (degree, source, target)."""
        return len({(p.degree, p.source, p.target) for p in self.terms}) <= 1

    def component(self, source: int, target: int) -> "AlgebraElement":
        """The part e_source * self * e_target."""
        return AlgebraElement(self.algebra, {p: c for p, c in self.terms.items()
                                             if p.source == source and p.target == target})

    def degree_part(self, degree: int) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {p: c for p, c in self.terms.items() if p.degree == degree})

    def _combine(self, other: "AlgebraElement", sign: int) -> "AlgebraElement":
        terms = dict(self.terms)
        for path, coeff in other.terms.items():
            terms[path] = terms.get(path, Fraction(0)) + sign * coeff
        return AlgebraElement(self.algebra, terms)

    def __add__(self, other):
        if isinstance(other, AlgebraElement):
            return self._combine(other, 1)
        if other == 0:
            return self
        return self._combine(self.algebra.one() * Fraction(other), 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, AlgebraElement):
            return self._combine(other, -1)
        return self + (-Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgebraElement(self.algebra, {p: -c for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        scalar = Fraction(other)
        return AlgebraElement(self.algebra, {p: c * scalar for p, c in self.terms.items()})

    def __rmul__(self, other):
        scalar = Fraction(other)
        return AlgebraElement(self.algebra, {p: scalar * c for p, c in self.terms.items()})

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for path, coeff in self:
            label = self.algebra.basis.path_label(path)
            if coeff == 1:
                parts.append(f"+ {label}")
            elif coeff == -1:
                parts.append(f"- {label}")
            else:
                sign = "-" if coeff < 0 else "+"
                parts.append(f"{sign} {abs(coeff)} {label}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> Dict[str, Any]:
        """{monomials: [{coeff: "p/q", path: [labels]}]}"""
        quiver = self.algebra.quiver
        monomials = []
        for path, coeff in self:
            labels = [quiver.arrows[c].name for c in path.arrows] or [f"e{path.source}"]
            monomials.append({"coeff": format_rational(coeff), "path": labels})
        return {"monomials": monomials}
