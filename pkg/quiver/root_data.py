import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
import sympy

from quiver.dynkin import DynkinQuiver, QuiverError

logger = logging.getLogger(__name__)

_E_EXPONENTS = {
    6: (1, 4, 5, 7, 8, 11),
    7: (1, 5, 7, 9, 11, 13, 17),
    8: (1, 7, 11, 13, 17, 19, 23, 29),
}

_E_NU = {
    6: {1: 5, 5: 1, 2: 4, 4: 2},
    7: {},
    8: {},
}

# Element fixing the Frobenius trace: f(anchor) = 1.
_E_ANCHORS = {
    6: "a3* a3 (a2* a2 a3* a3)^2",
    7: "(a4* a4 a3* a3)^4",
    8: "(a4* a4 a3* a3)^7",
}

# Vertices indexing the Y-part of HH^5 and HH^6 (the classes phi_0(w_i)).
_E_Y_INDICES = {
    6: (3, 6),
    7: (1, 2, 3, 4, 5, 6),
    8: (1, 2, 3, 4, 5, 6, 7, 8),
}


@dataclass(frozen=True)
class RootData:
    """
    Root-system constants of a Dynkin quiver.

    ``r_plus`` is r - r_minus; the number of nu-fixed vertices is ``n_fixed``
    and is what governs the top-degree part of the center.
    """
    h: int
    exponents: Tuple[int, ...]
    nu: Tuple[Tuple[int, int], ...]
    r_plus: int
    r_minus: int
    fixed: Tuple[int, ...]
    P: np.ndarray = field(compare=False, repr=False)
    C: np.ndarray = field(compare=False, repr=False)
    arrow_nu: Tuple[Tuple[str, str], ...] = field(compare=False, repr=False)
    anchor: str = field(compare=False, repr=False)
    y_indices: Tuple[int, ...] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def n_fixed(self) -> int:
        return len(self.fixed)

    @property
    def top_degree(self) -> int:
        return self.h - 2

    def nu_of(self, vertex: int) -> int:
        return dict(self.nu)[vertex]

    def nu_map(self) -> Dict[int, int]:
        return dict(self.nu)

    def u_exponents(self) -> List[int]:
        """Exponents m_i < h/2 (the generators of U)."""
        return [m for m in self.exponents if 2 * m < self.h]

    def center_degrees(self) -> List[int]:
        """Degrees 2m_i - 2 of the non-top central generators z_k."""
        return [2 * m - 2 for m in self.u_exponents()]

    @property
    def dim_y(self) -> int:
        """dim Y = |F| - #{m_i = h/2}."""
        return self.n_fixed - sum(1 for m in self.exponents if 2 * m == self.h)

    def degree_ranges(self) -> Dict[int, Tuple[int, int]]:
        """Internal degree range of HH^i for i = 0..6."""
        h = self.h
        return {
            0: (0, h - 2),
            1: (0, h - 4),
            2: (-2, -2),
            3: (-2, -2),
            4: (-h, -4),
            5: (-h - 2, -4),
            6: (-2 * h, -h - 2),
        }

    def to_json(self) -> Dict[str, object]:
        return {
            "h": self.h,
            "exponents": list(self.exponents),
            "nu": {str(v): w for v, w in self.nu},
            "r_plus": self.r_plus,
            "r_minus": self.r_minus,
            "F": list(self.fixed),
            "P": self.P.tolist(),
            "C": self.C.tolist(),
        }


def _exponents(quiver: DynkinQuiver) -> Tuple[int, Tuple[int, ...]]:
    if quiver.family == "D":
        n = quiver.rank_param
        return 2 * n, tuple(sorted(list(range(1, 2 * n, 2)) + [n]))
    return _E_EXPONENTS[quiver.rank_param][-1] + 1, _E_EXPONENTS[quiver.rank_param]


def _nu(quiver: DynkinQuiver) -> Dict[int, int]:
    if quiver.family == "D":
        n = quiver.rank_param
        swap = {n: n + 1, n + 1: n} if n % 2 == 0 else {}
    else:
        swap = _E_NU[quiver.rank_param]
    return {v: swap.get(v, v) for v in quiver.vertices}


def _arrow_nu(quiver: DynkinQuiver, nu: Dict[int, int]) -> Dict[str, str]:
    """
    The arrow of Q joining nu(src) to nu(tgt) for each arrow of Q.

    Raises:
        QuiverError: If the orientation is not compatible with nu
    """
    by_ends = {(a.source, a.target): a.name for a in quiver.arrows if not a.starred}
    mapping = {}
    for arrow in quiver.arrows:
        if arrow.starred:
            continue
        image = by_ends.get((nu[arrow.source], nu[arrow.target]))
        if image is None:
            raise QuiverError(f"{quiver.name}: orientation of {arrow.name} is not nu-stable")
        mapping[arrow.name] = image
    return mapping


def _anchor(quiver: DynkinQuiver) -> str:
    if quiver.family == "D":
        n = quiver.rank_param
        stars = " ".join(f"a{i}*" for i in range(1, n))
        plain = " ".join(f"a{i}" for i in range(n - 1, 0, -1))
        return f"{stars} {plain}"
    return _E_ANCHORS[quiver.rank_param]


def _y_indices(quiver: DynkinQuiver) -> Tuple[int, ...]:
    if quiver.family == "D":
        n = quiver.rank_param
        return tuple(range(2, n + 1)) if n % 2 == 1 else tuple(range(2, n))
    return _E_Y_INDICES[quiver.rank_param]


def root_data(quiver: DynkinQuiver) -> RootData:
    """
    Derive the root-system constants of a quiver.

    Args:
        quiver: A quiver from build_quiver

    Returns:
        RootData with h, exponents, nu, P, C, r_plus, r_minus and F

    Raises:
        QuiverError: If the derived data is inconsistent
    """
    h, exponents = _exponents(quiver)
    nu = _nu(quiver)
    r = len(quiver.vertices)
    index = {v: i for i, v in enumerate(quiver.vertices)}

    P = np.zeros((r, r), dtype=np.int64)
    for v, w in nu.items():
        P[index[w], index[v]] = 1

    C = np.zeros((r, r), dtype=np.int64)
    for arrow in quiver.arrows:
        C[index[arrow.source], index[arrow.target]] += 1

    fixed = tuple(v for v in quiver.vertices if nu[v] == v)
    r_minus = (r - len(fixed)) // 2
    data = RootData(
        h=h,
        exponents=exponents,
        nu=tuple(sorted(nu.items())),
        r_plus=r - r_minus,
        r_minus=r_minus,
        fixed=fixed,
        P=P,
        C=C,
        arrow_nu=tuple(sorted(_arrow_nu(quiver, nu).items())),
        anchor=_anchor(quiver),
        y_indices=_y_indices(quiver),
    )
    _validate(quiver, data)
    logger.debug(f"Root data for {quiver.name}: h={h}, exponents={exponents}, F={fixed}")
    return data


def _validate(quiver: DynkinQuiver, data: RootData) -> None:
    r = len(quiver.vertices)
    if len(data.exponents) != r or data.h != max(data.exponents) + 1:
        raise QuiverError(f"{quiver.name}: exponents {data.exponents} inconsistent with h={data.h}")
    if not np.array_equal(data.P @ data.P, np.eye(r, dtype=np.int64)):
        raise QuiverError(f"{quiver.name}: nu is not an involution")
    if not np.array_equal(data.C, data.C.T):
        raise QuiverError(f"{quiver.name}: adjacency matrix of the double quiver is not symmetric")
    valences = [quiver.valence(v) for v in quiver.vertices]
    if list(data.C.sum(axis=1)) != valences:
        raise QuiverError(f"{quiver.name}: row sums of C differ from valences")
    identity = sympy.eye(r)
    P = sympy.Matrix(data.P.tolist())
    if r - (P - identity).rank() != data.r_plus or r - (P + identity).rank() != data.r_minus:
        raise QuiverError(f"{quiver.name}: eigenspace dimensions of P disagree with r_plus/r_minus")
