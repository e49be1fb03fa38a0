"""
Closed expressions for the named cohomology classes.

ζ lists are written in tensor notation: a term ``(coeff, "c", "X")`` stands
for coeff * c ⊗ X. As a cochain in C^4 this is the value eps_c X on the
arrow slot c*.
"""

import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from algebra.element import AlgebraElement
from algebra.parser import parse_element
from hochschild.complex import Cochain, CohomologyError, value_offset
from quiver.dynkin import DynkinQuiver

logger = logging.getLogger(__name__)

TensorTerm = Tuple[Fraction, str, str]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _scaled(scale: Fraction, terms: List[Tuple[int, str, str]]) -> List[TensorTerm]:
    return [(scale * sign, arrow, text) for sign, arrow, text in terms]


def _e7_zeta8() -> List[Tuple[int, str, str]]:
    return [
        (1, "a4*", "a4 a3* a3 a4* a4 a3* a3"),
        (1, "a4", "a3* a3 a4* a4 a3* a3 a4*"),
        (-1, "a3*", "a3 a4* a4 a3* a3 a4* a4"),
        (-1, "a3", "a4* a4 a3* a3 a4* a4 a3*"),
    ]


def _e7_zeta12() -> List[Tuple[int, str, str]]:
    return [
        (1, "a4*", "a4 a3* a3"),
        (1, "a4", "a3* a3 a4*"),
        (-1, "a3*", "a3 a4* a4"),
        (-1, "a3", "a4* a4 a3*"),
    ]


def _e_zeta0(power: int) -> List[Tuple[int, str, str]]:
    return [
        (1, "a4*", f"a4 a3* a3 (a4* a4 a3* a3)^{power}"),
        (1, "a4", f"a3* a3 a4* (a4 a3* a3 a4*)^{power}"),
    ]


ZETA_E = {
    6: OrderedDict([
        ("zeta0", _scaled(Fraction(1), [
            (1, "a3*", "a3 (a2* a2 a3* a3)^2"),
            (1, "a3", "a2* (a2 a3* a3 a2*)^2"),
        ])),
        ("zeta6", _scaled(QUARTER, [
            (-1, "a3*", "a3 a2* a2"),
            (-1, "a3", "a2* a2 a2*"),
            (1, "a2*", "a2 a2* a2"),
            (1, "a2", "a2* a2 a3*"),
            (-1, "a2*", "a2 a3* a3"),
            (-1, "a2", "a3* a3 a3*"),
            (1, "a3*", "a3 a3* a3"),
            (1, "a3", "a3* a3 a2*"),
        ])),
        ("zeta8", _scaled(HALF, [
            (1, "a3*", "a3"),
            (1, "a3", "a2*"),
            (-1, "a2*", "a2"),
            (-1, "a2", "a3*"),
        ])),
    ]),
    7: OrderedDict([
        ("zeta0", _scaled(Fraction(1), _e_zeta0(3))),
        ("zeta8", _scaled(HALF, _e7_zeta8())),
        ("zeta12", _scaled(HALF, _e7_zeta12())),
    ]),
    8: OrderedDict([
        ("zeta0", _scaled(Fraction(1), _e_zeta0(6))),
        ("zeta12", _scaled(HALF, _e_zeta0(3) + [
            (-1, "a3*", "a3 a4* a4 (a3* a3 a4* a4)^3"),
            (-1, "a3", "a4* a4 a3* (a3 a4* a4 a3*)^3"),
        ])),
        ("zeta20", _scaled(HALF, _e7_zeta8())),
        ("zeta24", _scaled(HALF, _e7_zeta12())),
    ]),
}

PSI_E = {
    6: OrderedDict([
        ("psi0", "a3* a3 (a2* a2 a3* a3)^2"),
        ("psi6", "-a3* a3 a2* a2"),
        ("psi8", "a3* a3 - a2* a2"),
    ]),
    7: OrderedDict([
        ("psi0", "(a4* a4 a3* a3)^4"),
        ("psi8", "(a4* a4 a3* a3)^2"),
        ("psi12", "a4* a4 a3* a3"),
    ]),
    8: OrderedDict([
        ("psi0", "(a4* a4 a3* a3)^7"),
        ("psi12", "(a4* a4 a3* a3)^4"),
        ("psi20", "(a4* a4 a3* a3)^2"),
        ("psi24", "a4* a4 a3* a3"),
    ]),
}

EPS_E = {
    6: {3: {3: 1}, 6: {6: 1}},
    7: {1: {1: 1, 7: 1}, 2: {2: 1}, 3: {3: 1, 7: 1}, 4: {4: 1}, 5: {5: 1}, 6: {6: 1}},
    8: {i: {i: 1} for i in range(1, 9)},
}

# Relations among the classes [omega_v] in HH^6(-h-2).
HH6_RELATIONS_E = {
    6: [],
    7: [{1: 1, 3: 1, 7: -1}],
    8: [],
}


def _power(word: str, exponent: int) -> str:
    return f"({word})^{exponent}" if exponent else ""


def _d_zeta(n: int, j: int) -> List[TensorTerm]:
    p, q = f"a{n - 1}", f"a{n}"
    if n % 2 == 1:
        e = (n - 3) // 2 - j
        terms = [
            (1, f"{p}*", f"{p} {q}* {q} " + _power(f"{p}* {p} {q}* {q}", e)),
            (1, p, f"{q}* {q} {p}* " + _power(f"{p} {q}* {q} {p}*", e)),
        ]
        if j:
            terms += [
                (-1, f"{q}*", f"{q} {p}* {p} " + _power(f"{q}* {q} {p}* {p}", e)),
                (-1, q, f"{p}* {p} {q}* " + _power(f"{q} {p}* {p} {q}*", e)),
            ]
    else:
        e = (n - 2) // 2 - j
        terms = [
            (1, f"{p}*", f"{p} " + _power(f"{q}* {q} {p}* {p}", e)),
            (1, p, f"{q}* " + _power(f"{q} {p}* {p} {q}*", e)),
        ]
        if j:
            terms += [
                (-1, f"{q}*", f"{q} " + _power(f"{p}* {p} {q}* {q}", e)),
                (-1, q, f"{p}* " + _power(f"{p} {q}* {q} {p}*", e)),
            ]
    return _scaled(HALF if j else Fraction(1), [(s, c, x.strip()) for s, c, x in terms])


def _d_psi(n: int, j: int) -> str:
    p, q = f"a{n - 1}", f"a{n}"
    if n % 2 == 1:
        return f"({p}* {p} {q}* {q})^{(n - 1) // 2 - j}"
    return f"{p}* {p} " + _power(f"{q}* {q} {p}* {p}", (n - 2) // 2 - j)


def _d_count(n: int) -> int:
    """Number of generators z_{4j}, i.e. exponents m < n."""
    return n // 2


def zeta_terms(quiver: DynkinQuiver) -> Dict[str, List[TensorTerm]]:
    """Tensor-notation representatives keyed by zeta<k>."""
    if quiver.family == "E":
        return OrderedDict(ZETA_E[quiver.rank_param])
    n = quiver.rank_param
    return OrderedDict((f"zeta{4 * j}", _d_zeta(n, j)) for j in range(_d_count(n)))


def psi_expressions(quiver: DynkinQuiver) -> Dict[str, str]:
    """Vertex-slot representatives of psi<k> as one algebra expression."""
    if quiver.family == "E":
        return OrderedDict(PSI_E[quiver.rank_param])
    n = quiver.rank_param
    return OrderedDict((f"psi{4 * j}", _d_psi(n, j).strip()) for j in range(_d_count(n)))


def eps_vectors(quiver: DynkinQuiver) -> Dict[int, Dict[int, int]]:
    """epsilon_i as idempotent combinations sum lambda_v e_v, keyed by i."""
    if quiver.family == "E":
        return {i: dict(v) for i, v in EPS_E[quiver.rank_param].items()}
    n = quiver.rank_param
    vectors = {}
    last = n if n % 2 == 1 else n - 1
    for i in range(2, last + 1):
        if i % 2 == 0:
            vectors[i] = {i: 1}
        else:
            vectors[i] = {i: 1, 1: -1}
    if n % 2 == 1:
        vectors[n] = {n: 1, n + 1: 1, 1: -1}
    return vectors


def hh6_relations(quiver: DynkinQuiver) -> List[Dict[int, int]]:
    """Listed relations among the [omega_v] spanning HH^6(-h-2)."""
    if quiver.family == "E":
        return [dict(r) for r in HH6_RELATIONS_E[quiver.rank_param]]
    n = quiver.rank_param
    if n % 2 == 1:
        return [{i: 1 for i in range(1, n - 1, 2)}, {n: 1, n + 1: -1}]
    return [{i: 1 for i in range(1, n, 2)}]


def tensor_cochain(algebra, terms: List[TensorTerm]) -> Cochain:
    """
    The C^4 cochain of a tensor-notation list.

    Raises:
        ParseError: If an expression does not parse
        CohomologyError: If the terms are not homogeneous or leave their slot
    """
    quiver = algebra.quiver
    values: Dict[int, AlgebraElement] = {}
    degrees = set()
    for coeff, label, text in terms:
        c = quiver.arrow_index(label)
        slot = quiver.star(c)
        x = parse_element(algebra, text) * (coeff * quiver.arrows[c].sign)
        degrees |= x.degrees()
        arrow = quiver.arrows[slot]
        if x.component(arrow.source, algebra.nu[arrow.target]) != x:
            raise CohomologyError(f"'{label} ⊗ {text}' does not live in its slot {arrow.name}")
        values[slot] = values[slot] + x if slot in values else x
    if len(degrees) != 1:
        raise CohomologyError(f"Tensor expression has mixed degrees {sorted(degrees)}")
    degree = degrees.pop() - value_offset(4, algebra.data.h)
    return Cochain(algebra, 4, degree, values)


def vertex_cochain(algebra, index: int, element: AlgebraElement,
                   degree: Optional[int] = None) -> Cochain:
    """
    Split an element over vertex slots: slot v holds e_v * element.

    Args:
        algebra: The algebra
        index: Cochain index (0 or 2 mod 3)
        element: Homogeneous element
        degree: Internal degree (inferred from the element when None)

    Raises:
        CohomologyError: If the degree cannot be inferred
    """
    if degree is None:
        degrees = element.degrees()
        if len(degrees) != 1:
            raise CohomologyError(f"Cannot infer the degree of '{element}'")
        degree = degrees.pop() - value_offset(index, algebra.data.h)
    values = {}
    for v in algebra.quiver.vertices:
        part = AlgebraElement(algebra, {p: c for p, c in element.terms.items() if p.source == v})
        if part:
            values[v] = part
    return Cochain(algebra, index, degree, values)


def idempotent_cochain(algebra, index: int, coeffs: Dict[int, int]) -> Cochain:
    """sum lambda_v e_v as a vertex cochain of value degree 0."""
    element = algebra.zero()
    for v, c in coeffs.items():
        element = element + algebra.vertex(v) * c
    return vertex_cochain(algebra, index, element, -value_offset(index, algebra.data.h))
