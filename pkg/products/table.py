import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Set, Tuple

import pandas as pd
from tqdm import tqdm

from hochschild.cohomology import predicted_dimensions
from products.cup import Combination, CupProducts, suffix
from products.kappa import ProductError
from utils.logging_utils import progress_enabled
from utils.serialization import (
    combination_from_json,
    combination_to_json,
    combination_to_text
)

logger = logging.getLogger(__name__)

ZERO_BY_DEGREE = "zero-by-degree"
ZERO_BY_ARGUMENT = "zero-by-paper-argument"
NONZERO = "nonzero-with-formula"

CHAIN_FORMULA = "chain-formula"
ASSOCIATIVITY = "associativity"
DEGREE_ZERO = "degree-zero"
ASSERTED = "paper-asserted"

PROVENANCES = (CHAIN_FORMULA, ASSOCIATIVITY, DEGREE_ZERO, ASSERTED)

NONZERO_PAIRS = {
    (1, 2): "theta_k f_i = [z_k sum_l s-weighted omega_l] in HH^3",
    (1, 4): "theta_k zeta_l = z_k (sum_a a* x_a*) in HH^5",
    (1, 5): "theta_0 eps_j = sum_k (M_beta)_kj phi0(w_k) in HH^6",
    (2, 2): "f_i f_j = (M_alpha)_ij zeta_0",
    (2, 3): "f_i h_j = delta_ij psi_0",
    (5, 5): "eps_i eps_j = -(M_beta)_ij phi4(zeta_0)",
}

ARGUMENTS = {
    (2, 4): "Batalin-Vilkovisky bracket [f_k, zeta_l] must be independent of the period",
    (2, 5): "a zeta_k lies in HH^2 HH^4 = 0, so lambda psi_0 = b (a zeta_k) = 0",
    (4, 5): "c (ab) = (ca) b = 0 for c in HH^2 with HH^2 x HH^3 nondegenerate",
}


def target_degrees(data, index: int) -> Set[int]:
    """Nonzero internal degrees of HH^index, using HH^{6+m} = HH^m[-2h] above 7."""
    if index <= 7:
        return set(predicted_dimensions(data, index))
    return {d - 2 * data.h for d in predicted_dimensions(data, index - 6)}


@dataclass
class Verdict:
    i: int
    j: int
    kind: str
    reason: str

    def to_json(self) -> Dict[str, Any]:
        return {"i": self.i, "j": self.j, "verdict": self.kind, "reason": self.reason}


def degree_forced_zero(data, i: int, j: int) -> bool:
    """True when no pair of nonzero degrees of HH^i and HH^j lands in a nonzero degree of HH^{i+j}."""
    targets = target_degrees(data, i + j)
    left = predicted_dimensions(data, i)
    right = predicted_dimensions(data, j)
    return not any(a + b in targets for a in left for b in right)


def zero_product_verdict(data, i: int, j: int) -> Verdict:
    """
    Classify HH^i x HH^j for 1 <= i <= j <= 5.

    Returns:
        Verdict with kind zero-by-degree, zero-by-paper-argument or nonzero-with-formula
    """
    if not 1 <= i <= j <= 5:
        raise ProductError(f"No verdict for HH^{i} x HH^{j}")
    if degree_forced_zero(data, i, j):
        return Verdict(i, j, ZERO_BY_DEGREE, f"degrees of HH^{i} + HH^{j} miss HH^{i + j}")
    if (i, j) in NONZERO_PAIRS:
        return Verdict(i, j, NONZERO, NONZERO_PAIRS[(i, j)])
    if (i, j) in ARGUMENTS:
        return Verdict(i, j, ZERO_BY_ARGUMENT, ARGUMENTS[(i, j)])
    if i % 2 and j % 2:
        return Verdict(i, j, ZERO_BY_ARGUMENT, "products of two odd classes vanish")
    return Verdict(i, j, ZERO_BY_ARGUMENT, f"HH^{i} x HH^{j} with i + j >= 6 vanishes")


@dataclass
class ProductEntry:
    i: int
    j: int
    left: str
    right: str
    result: Combination
    provenance: str

    def to_json(self) -> Dict[str, Any]:
        return {"i": self.i, "j": self.j, "left": self.left, "right": self.right,
                "result": combination_to_json(self.result), "provenance": self.provenance}

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "ProductEntry":
        return cls(int(payload["i"]), int(payload["j"]), payload["left"], payload["right"],
                   combination_from_json(payload["result"]), payload["provenance"])


@dataclass
class ProductTable:
    """Cup products on the named basis keyed by (left, right)."""
    quiver: str
    entries: Dict[Tuple[str, str], ProductEntry] = field(default_factory=OrderedDict)
    verdicts: List[Verdict] = field(default_factory=list)
    checks: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, entry: ProductEntry) -> None:
        self.entries[(entry.left, entry.right)] = entry

    def get(self, left: str, right: str) -> Optional[Combination]:
        entry = self.entries.get((left, right))
        return entry.result if entry else None

    def __len__(self) -> int:
        return len(self.entries)

    def nonzero(self) -> List[ProductEntry]:
        return [e for e in self.entries.values() if e.result]

    def to_frame(self) -> pd.DataFrame:
        rows = [{"i": e.i, "j": e.j, "left": e.left, "right": e.right,
                 "result": combination_to_text(e.result), "provenance": e.provenance}
                for e in self.entries.values()]
        return pd.DataFrame(rows, columns=["i", "j", "left", "right", "result", "provenance"])

    def to_json(self) -> Dict[str, Any]:
        return {
            "quiver": self.quiver,
            "products": [e.to_json() for e in self.entries.values()],
            "verdicts": [v.to_json() for v in self.verdicts],
            "checks": self.checks,
        }

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "ProductTable":
        table = cls(payload["quiver"])
        for item in payload["products"]:
            table.add(ProductEntry.from_json(item))
        table.verdicts = [Verdict(v["i"], v["j"], v["verdict"], v["reason"]) for v in payload.get("verdicts", [])]
        table.checks = payload.get("checks", [])
        return table


def name_degree(products: CupProducts, name: str) -> int:
    """Internal degree of a named class, including periodicity names phi<m>(x) for m >= 1."""
    if name in products.named:
        return products.named[name].degree
    if name.startswith("phi") and "(" in name:
        return products.named[name[name.index("(") + 1:-1]].degree - 2 * products.data.h
    raise ProductError(f"Unknown class name '{name}'")


def shift(combination: Combination, m: int) -> Combination:
    """phi_m applied to every name of a combination in HH^m."""
    if m == 0:
        return OrderedDict(combination)
    return OrderedDict((f"phi{m}({name})", c) for name, c in combination.items())


class ProductTableBuilder:
    """Fills the product table block by block."""

    def __init__(self, products: CupProducts):
        self.products = products
        self.named = products.named
        self.data = products.data

    def _evaluate(self, i: int, j: int, left: str, right: str) -> Tuple[Combination, str]:
        p = self.products
        degree = self.named[left].degree + self.named[right].degree
        if degree not in target_degrees(self.data, i + j):
            return OrderedDict(), DEGREE_ZERO
        if i == 0:
            return p.cup_hh0(left, right), CHAIN_FORMULA
        if (i, j) == (1, 2):
            return p.theta_times_f(suffix(left, "theta"), suffix(right, "f")), CHAIN_FORMULA
        if (i, j) == (1, 4):
            return p.theta_times_zeta(suffix(left, "theta"), suffix(right, "zeta")), CHAIN_FORMULA
        if (i, j) == (1, 5) and right.startswith("eps"):
            return p.theta_times_eps(suffix(left, "theta"), suffix(right, "eps")), CHAIN_FORMULA
        if (i, j) == (2, 2):
            return p.f_times_f(suffix(left, "f"), suffix(right, "f")), ASSOCIATIVITY
        if (i, j) == (2, 3):
            return p.f_times_h(suffix(left, "f"), suffix(right, "h")), CHAIN_FORMULA
        if (i, j) == (5, 5) and left.startswith("eps") and right.startswith("eps"):
            return p.eps_times_eps(suffix(left, "eps"), suffix(right, "eps")), ASSOCIATIVITY
        if (i, j) in NONZERO_PAIRS:
            error_msg = f"{p.quiver.name}: no formula for {left} {right} in HH^{i + j}({degree})"
            logger.error(error_msg)
            raise ProductError(error_msg)
        return OrderedDict(), ASSERTED

    def _pairs(self) -> List[Tuple[int, int, str, str]]:
        pairs = []
        for i in range(6):
            for j in range(i, 7 if i == 0 else 6):
                for left in self.named.names(index=i):
                    for right in self.named.names(index=j):
                        pairs.append((i, j, left, right))
        return pairs

    def build(self) -> ProductTable:
        """
        Evaluate every product 0 <= i <= j <= 5 and the phi_0(z) x HH^j rows.

        Raises:
            ProductError: If a structural check fails
        """
        table = ProductTable(self.products.quiver.name)
        pairs = self._pairs()
        for i, j, left, right in tqdm(pairs, desc=f"{table.quiver} products", disable=not progress_enabled()):
            result, provenance = self._evaluate(i, j, left, right)
            table.add(ProductEntry(i, j, left, right, result, provenance))

        for left in self.named.names(index=6):
            central = left[len("phi0("):-1]
            for j in range(1, 6):
                for right in self.named.names(index=j):
                    degree = self.named[left].degree + self.named[right].degree
                    if degree not in target_degrees(self.data, 6 + j):
                        table.add(ProductEntry(6, j, left, right, OrderedDict(), DEGREE_ZERO))
                        continue
                    result = shift(self.products.cup_hh0(central, right), j)
                    table.add(ProductEntry(6, j, left, right, result, CHAIN_FORMULA))

        table.verdicts = [zero_product_verdict(self.data, i, j) for i in range(1, 6) for j in range(i, 6)]
        table.checks = self.products.associativity_reports()
        check_degrees(self.products, table)
        check_commutativity(self.products, table)
        check_verdicts(table)
        logger.info(f"{table.quiver}: {len(table)} products, {len(table.nonzero())} nonzero")
        return table


def check_degrees(products: CupProducts, table: ProductTable) -> None:
    """
    Internal degrees add on every nonzero entry.

    Raises:
        ProductError: On the first violation
    """
    for entry in table.nonzero():
        expected = name_degree(products, entry.left) + name_degree(products, entry.right)
        for name in entry.result:
            if name_degree(products, name) != expected:
                error_msg = (f"{table.quiver}: {entry.left} {entry.right} has term {name} of degree "
                             f"{name_degree(products, name)}, expected {expected}")
                logger.error(error_msg)
                raise ProductError(error_msg)


def check_commutativity(products: CupProducts, table: ProductTable) -> None:
    """
    entry(a, b) = (-1)^{|a||b|} entry(b, a) wherever both orders are present,
    and z x = x z for central z.

    Raises:
        ProductError: On the first violation
    """
    for (left, right), entry in table.entries.items():
        other = table.entries.get((right, left))
        if other is None or left == right:
            continue
        sign = -1 if entry.i % 2 and entry.j % 2 else 1
        expected = OrderedDict((n, c * sign) for n, c in other.result.items())
        if dict(entry.result) != dict(expected):
            error_msg = f"{table.quiver}: {left} {right} = {entry.result} but {right} {left} = {other.result}"
            logger.error(error_msg)
            raise ProductError(error_msg)
    for z in products.named.names(index=0):
        for x in products.named.names():
            if products.named[x].index == 0 or (z, x) not in table.entries:
                continue
            if table.entries[(z, x)].provenance == DEGREE_ZERO:
                continue
            right = products.cup_hh0_right(x, z)
            if dict(right) != dict(table.entries[(z, x)].result):
                error_msg = f"{table.quiver}: {z} {x} = {table.entries[(z, x)].result} but {x} {z} = {right}"
                logger.error(error_msg)
                raise ProductError(error_msg)


def check_verdicts(table: ProductTable) -> None:
    """
    Every block classified as zero carries only zero entries.

    Raises:
        ProductError: If a zero verdict meets a nonzero entry
    """
    zero = {(v.i, v.j) for v in table.verdicts if v.kind != NONZERO}
    for entry in table.nonzero():
        if (entry.i, entry.j) in zero:
            error_msg = f"{table.quiver}: HH^{entry.i} x HH^{entry.j} is classified zero but {entry.left} {entry.right} = {entry.result}"
            logger.error(error_msg)
            raise ProductError(error_msg)


def full_product_table(products: CupProducts) -> ProductTable:
    return ProductTableBuilder(products).build()

