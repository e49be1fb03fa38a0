import re
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Any

logger = logging.getLogger(__name__)

SUPPORTED_FAMILIES = "D_{n+1} (n >= 3, selectors d4, d5, ...) and E6, E7, E8 (selectors e6, e7, e8)"


class QuiverError(Exception):
    """Exception raised for unsupported quivers or malformed selectors."""
    pass


@dataclass(frozen=True)
class Arrow:
    """An arrow of the double quiver. Starred arrows are the reversed copies."""
    name: str
    source: int
    target: int
    starred: bool

    @property
    def base(self) -> str:
        """Name of the underlying arrow of Q."""
        return self.name.rstrip("*")

    @property
    def sign(self) -> int:
        """+1 for arrows of Q, -1 for arrows of Q*."""
        return -1 if self.starred else 1


@dataclass(frozen=True)
class DynkinQuiver:
    """
    A Dynkin quiver of type D or E together with its double.

    Arrows are stored with the unstarred ones first (in label order) followed by
    their starred partners in the same order, so arrow ``i`` and arrow
    ``i + k`` are stars of each other where ``k`` is the number of arrows of Q.
    """
    family: str
    rank_param: int
    vertices: Tuple[int, ...]
    arrows: Tuple[Arrow, ...]
    _index: Dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({arrow.name: i for i, arrow in enumerate(self.arrows)})

    @property
    def name(self) -> str:
        """Display name, e.g. D5 or E6."""
        if self.family == "D":
            return f"D{self.rank_param + 1}"
        return f"E{self.rank_param}"

    @property
    def selector(self) -> str:
        """CLI selector, e.g. d5 or e6."""
        return self.name.lower()

    @property
    def num_unstarred(self) -> int:
        return len(self.arrows) // 2

    def arrow_index(self, name: str) -> int:
        """
        Look up an arrow by its label.

        Args:
            name: Arrow label such as "a3" or "a3*"

        Returns:
            Index into ``arrows``

        Raises:
            QuiverError: If no arrow has this label
        """
        try:
            return self._index[name]
        except KeyError:
            raise QuiverError(f"{self.name} has no arrow named '{name}'")

    def star(self, index: int) -> int:
        """Index of the star partner of an arrow."""
        k = self.num_unstarred
        return index + k if index < k else index - k

    def arrows_from(self, vertex: int) -> List[int]:
        """Indices of arrows of the double quiver starting at a vertex."""
        return [i for i, arrow in enumerate(self.arrows) if arrow.source == vertex]

    def unstarred_indices(self) -> List[int]:
        return list(range(self.num_unstarred))

    def valence(self, vertex: int) -> int:
        """Number of edges of the underlying graph at a vertex."""
        return len(self.arrows_from(vertex))

    def to_json(self) -> Dict[str, Any]:
        """Quiver descriptor {family, rank, vertices, arrows:[{id, src, dst, star_of}]}."""
        return {
            "family": self.family,
            "rank": self.rank_param,
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [
                {"id": arrow.name, "src": arrow.source, "dst": arrow.target,
                 "star_of": self.arrows[self.star(i)].name}
                for i, arrow in enumerate(self.arrows)
            ],
        }


def _double(labelled: List[Tuple[str, int, int]]) -> Tuple[Arrow, ...]:
    """Add the reversed arrow a* for every arrow a of Q."""
    forward = [Arrow(name, src, dst, False) for name, src, dst in labelled]
    backward = [Arrow(f"{name}*", dst, src, True) for name, src, dst in labelled]
    return tuple(forward + backward)


def _d_arrows(n: int) -> List[Tuple[str, int, int]]:
    # chain a_i : i+1 -> i, then the fork a_{n-1} : n -> n-1, a_n : n+1 -> n-1
    arrows = [(f"a{i}", i + 1, i) for i in range(1, n - 1)]
    arrows.append((f"a{n - 1}", n, n - 1))
    arrows.append((f"a{n}", n + 1, n - 1))
    return arrows


_E_ARROWS = {
    6: [("a1", 1, 2), ("a2", 2, 3), ("a3", 4, 3), ("a4", 5, 4), ("a5", 6, 3)],
    7: [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 4), ("a4", 5, 4), ("a5", 6, 5), ("a6", 7, 4)],
    8: [("a0", 1, 2), ("a1", 2, 3), ("a2", 3, 4), ("a3", 4, 5), ("a4", 6, 5),
        ("a5", 7, 6), ("a6", 8, 5)],
}


def build_quiver(family: str, rank_param: int) -> DynkinQuiver:
    """
    Construct a Dynkin quiver with the fixed labelling and orientation.

    Args:
        family: "D" or "E"
        rank_param: n for D_{n+1} (n >= 3); 6, 7 or 8 for E

    Returns:
        The quiver with its double

    Raises:
        QuiverError: For unsupported families or ranks
    """
    family = str(family).upper()
    if family == "D" and isinstance(rank_param, int) and rank_param >= 3:
        labelled = _d_arrows(rank_param)
        vertices = tuple(range(1, rank_param + 2))
    elif family == "E" and rank_param in _E_ARROWS:
        labelled = _E_ARROWS[rank_param]
        vertices = tuple(range(1, rank_param + 1))
    else:
        error_msg = f"Unsupported quiver ({family}, {rank_param}); supported: {SUPPORTED_FAMILIES}"
        logger.error(error_msg)
        raise QuiverError(error_msg)

    quiver = DynkinQuiver(family, rank_param, vertices, _double(labelled))
    _check_tree(quiver)
    logger.debug(f"Built quiver {quiver.name} with {len(quiver.arrows)} arrows")
    return quiver


def _check_tree(quiver: DynkinQuiver) -> None:
    """The underlying graph must be a tree with one branch vertex of valence 3."""
    edges = quiver.num_unstarred
    if edges != len(quiver.vertices) - 1:
        raise QuiverError(f"{quiver.name}: expected {len(quiver.vertices) - 1} edges, got {edges}")
    valences = sorted(quiver.valence(v) for v in quiver.vertices)
    if valences.count(3) != 1 or max(valences) != 3 or valences.count(1) != 3:
        raise QuiverError(f"{quiver.name}: valences {valences} do not form a D/E diagram")


_SELECTOR_RE = re.compile(r"^\s*([dDeE])\s*_?\s*(\d+)\s*$")


def parse_selector(selector: str) -> DynkinQuiver:
    """
    Parse a CLI selector such as "d5" (D_5, n = 4) or "e7".

    Args:
        selector: Quiver selector string

    Returns:
        The corresponding quiver

    Raises:
        QuiverError: If the selector is malformed or unsupported
    """
    match = _SELECTOR_RE.match(selector or "")
    if not match:
        raise QuiverError(f"Bad quiver selector '{selector}'; supported: {SUPPORTED_FAMILIES}")
    family, size = match.group(1).upper(), int(match.group(2))
    if family == "D":
        return build_quiver("D", size - 1)
    return build_quiver("E", size)


def parse_selectors(text: str) -> List[DynkinQuiver]:
    """Parse a comma-separated selector list like "d6,d7,e6"."""
    return [parse_selector(part) for part in text.split(",") if part.strip()]
