import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from algebra import linalg
from algebra.basis import Path
from algebra.element import AlgebraElement
from algebra.parser import parse_element

logger = logging.getLogger(__name__)


class FrobeniusError(Exception):
    """Exception raised when the trace cannot be normalised or a Gram block is singular."""
    pass


class FrobeniusForm:
    """
    The Frobenius trace f of a preprojective algebra and its dual bases.

    f vanishes off the top degree h-2. Its values on the one-dimensional top
    blocks e_v A(h-2) e_nu(v) are the solution of the linear system
    f(a y) = f(y eta(a)) (a an arrow, y of degree h-3), normalised by
    f(anchor) = 1 for the quiver's anchor expression.
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self.basis = algebra.basis
        self.quiver = algebra.quiver
        self.top = algebra.top
        if not self.basis.complete:
            error_msg = f"{self.quiver.name}: the Frobenius trace needs the complete basis, not a partial run"
            logger.error(error_msg)
            raise FrobeniusError(error_msg)
        self.top_paths = self._top_paths()
        self.values = self._solve_trace()
        self._duals: Dict[Path, AlgebraElement] = {}

    def _top_paths(self) -> Dict[int, Path]:
        paths = {}
        for v in self.quiver.vertices:
            block = self.basis.block(v, self.algebra.nu[v], self.top)
            if len(block) != 1:
                error_msg = (f"{self.quiver.name}: top block e{v} A e{self.algebra.nu[v]} has dimension "
                             f"{len(block)}, expected 1")
                logger.error(error_msg)
                raise FrobeniusError(error_msg)
            paths[v] = block[0]
        if self.basis.dimension(degree=self.top) != len(paths):
            raise FrobeniusError(f"{self.quiver.name}: top degree is not spanned by the nu-twisted blocks")
        return paths

    def _solve_trace(self) -> Dict[int, Fraction]:
        vertices = list(self.quiver.vertices)
        column = {v: i for i, v in enumerate(vertices)}
        rows = []
        for y in self.basis.by_degree[self.top - 1]:
            for arrow_index in range(len(self.quiver.arrows)):
                arrow = self.quiver.arrows[arrow_index]
                if arrow.target != y.source or y.target != self.algebra.nu[arrow.source]:
                    continue
                left = self.algebra.reduce_raw(arrow.source, (arrow_index,) + y.arrows)
                sign, _, eta_arrows = self.algebra.eta_raw(arrow.source, (arrow_index,))
                right = self.algebra.reduce_raw(y.source, y.arrows + eta_arrows)
                row: Dict[int, Fraction] = {}
                for path, coeff in left.items():
                    row[column[path.source]] = row.get(column[path.source], Fraction(0)) + coeff
                for path, coeff in right.items():
                    row[column[path.source]] = row.get(column[path.source], Fraction(0)) - sign * coeff
                row = {k: v for k, v in row.items() if v != 0}
                if row:
                    rows.append(row)

        kernel = linalg.nullspace(rows, len(vertices))
        if len(kernel) != 1:
            error_msg = f"{self.quiver.name}: Nakayama system has a {len(kernel)}-dimensional solution space, expected 1"
            logger.error(error_msg)
            raise FrobeniusError(error_msg)
        raw = {v: kernel[0].get(column[v], Fraction(0)) for v in vertices}

        anchor = parse_element(self.algebra, self.algebra.data.anchor)
        scale = sum((coeff * raw[path.source] for path, coeff in anchor.terms.items()
                     if path.degree == self.top), Fraction(0))
        if scale == 0:
            error_msg = f"{self.quiver.name}: anchor '{self.algebra.data.anchor}' has zero trace"
            logger.error(error_msg)
            raise FrobeniusError(error_msg)
        values = {v: raw[v] / scale for v in vertices}
        logger.debug(f"{self.quiver.name}: trace on top paths {values}")
        return values

    def trace(self, a: AlgebraElement) -> Fraction:
        """f(a): sum of top-degree coefficients weighted by the top-path values."""
        total = Fraction(0)
        for path, coeff in a.terms.items():
            if path.degree == self.top:
                total += coeff * self.values[path.source]
        return total

    def pair(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        """(x, y) = f(xy)."""
        return self.trace(x * y)

    def omega(self, vertex: int) -> AlgebraElement:
        """The top element of e_v A e_nu(v) with f(omega_v) = 1."""
        path = self.top_paths[vertex]
        return AlgebraElement(self.algebra, {path: 1 / self.values[vertex]})

    def omegas(self) -> Dict[int, AlgebraElement]:
        return {v: self.omega(v) for v in self.quiver.vertices}

    def aliases(self) -> Dict[str, AlgebraElement]:
        """Parser aliases w<v> for omega_v."""
        return {f"w{v}": self.omega(v) for v in self.quiver.vertices}

    def gram_block(self, source: int, target: int, degree: int) -> Tuple[List[Path], List[Path], List[List[Fraction]]]:
        """
        Gram matrix between e_s A(d) e_t and its partner e_t A(h-2-d) e_nu(s).

        Returns:
            (rows basis, columns basis, matrix G with G[i][j] = f(b_i c_j))
        """
        rows = self.basis.block(source, target, degree)
        cols = self.basis.block(target, self.algebra.nu[source], self.top - degree)
        gram = []
        for b in rows:
            row = []
            for c in cols:
                coords = self.algebra.multiply_paths(b, c)
                row.append(sum((v * self.values[p.source] for p, v in coords.items()), Fraction(0)))
            gram.append(row)
        return rows, cols, gram

    def dual_basis(self) -> Dict[Path, AlgebraElement]:
        """
        The dual basis x -> x^* with f(x_i x_j^*) = delta_ij.

        Raises:
            FrobeniusError: If a Gram block is not square or is singular
        """
        if self._duals:
            return self._duals
        for (source, target, degree), _ in sorted(self.basis.blocks.items()):
            rows, cols, gram = self.gram_block(source, target, degree)
            if len(rows) != len(cols):
                error_msg = (f"{self.quiver.name}: pairing e{source}A({degree})e{target} has shape "
                             f"{len(rows)}x{len(cols)}")
                logger.error(error_msg)
                raise FrobeniusError(error_msg)
            try:
                inverse = linalg.inverse(gram)
            except linalg.LinearAlgebraError:
                error_msg = f"{self.quiver.name}: singular Gram block at ({source}, {target}, {degree})"
                logger.error(error_msg)
                raise FrobeniusError(error_msg)
            # x_i^* = sum_k (G^{-1})_{k i} c_k
            for i, b in enumerate(rows):
                terms = {c: inverse[k][i] for k, c in enumerate(cols) if inverse[k][i] != 0}
                self._duals[b] = AlgebraElement(self.algebra, terms)
        logger.debug(f"{self.quiver.name}: dual basis built for {len(self._duals)} paths")
        return self._duals

    def dual(self, path: Path) -> AlgebraElement:
        return self.dual_basis()[path]

    def casimir(self, source: Optional[int] = None) -> List[Tuple[AlgebraElement, AlgebraElement]]:
        """Pairs (x_j, x_j^*) over basis paths x_j (starting at ``source`` if given)."""
        duals = self.dual_basis()
        return [(self.algebra.basis_element(p), duals[p]) for p in self.basis.all_paths()
                if source is None or p.source == source]

    def check_nakayama(self) -> List[Tuple[Path, Path]]:
        """
        Exhaustively test (x, y) = (y, eta(x)) on basis monomials.

        Returns:
            The failing pairs (empty when the identity holds)
        """
        failures = []
        for x in self.basis.all_paths():
            ex = self.algebra.basis_element(x)
            eta_x = self.algebra.nakayama(ex)
            partner = self.basis.block(x.target, self.algebra.nu[x.source], self.top - x.degree)
            for y in partner:
                ey = self.algebra.basis_element(y)
                if self.pair(ex, ey) != self.pair(ey, eta_x):
                    failures.append((x, y))
        return failures
