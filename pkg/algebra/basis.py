import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Any

from tqdm import tqdm

from algebra import linalg
from quiver.dynkin import DynkinQuiver
from quiver.root_data import RootData
from utils.logging_utils import progress_enabled

logger = logging.getLogger(__name__)


class AlgebraError(Exception):
    """Exception raised for invalid paths or an inconsistent algebra construction."""
    pass


class Path(NamedTuple):
    """A path of the double quiver; arrows compose left to right."""
    source: int
    target: int
    arrows: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.arrows)


Coordinates = Dict[Path, Fraction]


class GradedBasis:
    """
    Monomial basis of the preprojective algebra, degree by degree.

    ``right_table[(b, c)]`` holds the normal form of ``b * c`` for every basis
    path ``b`` and arrow ``c`` starting at the end of ``b``; repeated lookups
    reduce any path to basis coordinates.
    """

    def __init__(self, quiver: DynkinQuiver, data: RootData,
                 by_degree: List[List[Path]],
                 right_table: Dict[Tuple[Path, int], Coordinates],
                 complete: bool):
        self.quiver = quiver
        self.data = data
        self.by_degree = by_degree
        self.right_table = right_table
        self.complete = complete
        self.top = data.top_degree

        self.blocks: Dict[Tuple[int, int, int], List[Path]] = defaultdict(list)
        for d, paths in enumerate(by_degree):
            for path in paths:
                self.blocks[(path.source, path.target, d)].append(path)
        self.position = {path: i for paths in self.blocks.values() for i, path in enumerate(paths)}

    @property
    def max_degree(self) -> int:
        return len(self.by_degree) - 1

    def block(self, source: int, target: int, degree: int) -> List[Path]:
        """Ordered basis of e_source A(degree) e_target."""
        return self.blocks.get((source, target, degree), [])

    def dimension(self, source: Optional[int] = None, target: Optional[int] = None,
                  degree: Optional[int] = None) -> int:
        """Dimension of the selected part (None means summed over that index)."""
        total = 0
        for (s, t, d), paths in self.blocks.items():
            if source is not None and s != source:
                continue
            if target is not None and t != target:
                continue
            if degree is not None and d != degree:
                continue
            total += len(paths)
        return total

    def all_paths(self) -> List[Path]:
        return [path for paths in self.by_degree for path in paths]

    def path_label(self, path: Path) -> str:
        """Space-separated arrow labels, or e<v> for a trivial path."""
        if not path.arrows:
            return f"e{path.source}"
        return " ".join(self.quiver.arrows[c].name for c in path.arrows)


def _candidate(path: Path, arrow: int, quiver: DynkinQuiver) -> Path:
    return Path(path.source, quiver.arrows[arrow].target, path.arrows + (arrow,))


def compute_basis(quiver: DynkinQuiver, data: RootData,
                  max_degree: Optional[int] = None) -> GradedBasis:
    """
    Build the monomial basis of the preprojective algebra degree by degree.

    Degree-d candidates are products b*c of a degree d-1 basis path and an
    arrow; the new relations in degree d are p * rho_v for basis paths p of
    degree d-2, where rho_v = sum_{src(c)=v} eps_c c c*. Each (source, target)
    block is row reduced with columns in lexicographic order of arrow
    sequences, and the pivot (lexicographically smallest) candidates are
    eliminated.

    Args:
        quiver: The quiver
        data: Its root data
        max_degree: Stop after this degree (partial run); None means the top degree

    Returns:
        The graded basis with its right-multiplication table

    Raises:
        AlgebraError: If degree h-1 is not zero
    """
    top = data.top_degree
    # A bound at or above the top degree still yields the whole algebra
    limit = top + 1 if max_degree is None or max_degree >= top else max_degree
    by_degree: List[List[Path]] = [[Path(v, v, ()) for v in quiver.vertices]]
    right_table: Dict[Tuple[Path, int], Coordinates] = {}

    degrees = range(1, limit + 1)
    for d in tqdm(degrees, desc=f"Basis of {quiver.name}", disable=not progress_enabled()):
        previous = by_degree[d - 1]
        candidates: Dict[Tuple[int, int], List[Tuple[Path, int]]] = defaultdict(list)
        for b in previous:
            for c in quiver.arrows_from(b.target):
                key = (b.source, quiver.arrows[c].target)
                candidates[key].append((b, c))

        relations: Dict[Tuple[int, int], List[Dict[Tuple[Path, int], Fraction]]] = defaultdict(list)
        if d >= 2:
            for p in by_degree[d - 2]:
                relation: Dict[Tuple[Path, int], Fraction] = defaultdict(Fraction)
                for c in quiver.arrows_from(p.target):
                    sign = quiver.arrows[c].sign
                    c_star = quiver.star(c)
                    for b, coeff in right_table[(p, c)].items():
                        relation[(b, c_star)] += sign * coeff
                relation = {k: v for k, v in relation.items() if v != 0}
                if relation:
                    relations[(p.source, p.target)].append(relation)

        new_basis: List[Path] = []
        for key in sorted(candidates):
            block = sorted(candidates[key], key=lambda bc: bc[0].arrows + (bc[1],))
            column = {bc: j for j, bc in enumerate(block)}
            rows = [{column[bc]: v for bc, v in rel.items()} for rel in relations.get(key, [])]
            reduced, pivots = linalg.rref(rows, len(block))
            pivot_rows = dict(zip(pivots, reduced))
            for j, (b, c) in enumerate(block):
                path = _candidate(b, c, quiver)
                if j not in pivot_rows:
                    new_basis.append(path)
                    right_table[(b, c)] = {path: Fraction(1)}
                    continue
                row = pivot_rows[j]
                right_table[(b, c)] = {
                    _candidate(*block[k], quiver): -value
                    for k, value in row.items() if k != j and value != 0
                }

        new_basis.sort(key=lambda path: (path.arrows, path.source))
        if d == top + 1:
            if new_basis:
                error_msg = f"{quiver.name}: degree {d} = h-1 has {len(new_basis)} basis elements, expected 0"
                logger.error(error_msg)
                raise AlgebraError(error_msg)
            break
        by_degree.append(new_basis)
        logger.debug(f"{quiver.name}: degree {d} has dimension {len(new_basis)}")

    complete = limit == top + 1
    total = sum(len(paths) for paths in by_degree)
    logger.info(f"{quiver.name}: basis through degree {len(by_degree) - 1} has dimension {total}"
                + ("" if complete else " (partial)"))
    return GradedBasis(quiver, data, by_degree, right_table, complete)


def basis_to_json(basis: GradedBasis) -> Dict[str, Any]:
    """Serialize paths and the right-multiplication table."""
    paths = basis.all_paths()
    ids = {path: i for i, path in enumerate(paths)}
    table = []
    for (b, c), coords in basis.right_table.items():
        entry = [[ids[p], f"{v.numerator}/{v.denominator}"] for p, v in coords.items()]
        table.append([ids[b], c, entry])
    return {
        "quiver": basis.quiver.selector,
        "complete": basis.complete,
        "degrees": [[ids[p] for p in level] for level in basis.by_degree],
        "paths": [[p.source, p.target, list(p.arrows)] for p in paths],
        "table": table,
    }


def basis_from_json(payload: Dict[str, Any], quiver: DynkinQuiver, data: RootData) -> GradedBasis:
    """
    Rebuild a GradedBasis from basis_to_json output.

    Raises:
        AlgebraError: If the payload belongs to another quiver or is malformed
    """
    if payload.get("quiver") != quiver.selector:
        raise AlgebraError(f"Cached basis is for {payload.get('quiver')}, not {quiver.selector}")
    try:
        paths = [Path(s, t, tuple(arrows)) for s, t, arrows in payload["paths"]]
        by_degree = [[paths[i] for i in level] for level in payload["degrees"]]
        table = {}
        for b, c, entry in payload["table"]:
            coords = {}
            for p, text in entry:
                numerator, denominator = text.split("/")
                coords[paths[p]] = Fraction(int(numerator), int(denominator))
            table[(paths[b], c)] = coords
    except (KeyError, ValueError, IndexError, TypeError) as e:
        raise AlgebraError(f"Malformed cached basis: {str(e)}")
    return GradedBasis(quiver, data, by_degree, table, bool(payload.get("complete")))
