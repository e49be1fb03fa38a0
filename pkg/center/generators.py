"""
Closed expressions for the central generators z_k.

``x<i>`` abbreviates ``a<i>* a<i>``; names such as ``z12`` refer to the
already-matched generator of that degree.
"""

import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Any, Dict, List, Optional

from algebra.parser import ParseError, parse_element
from center.center import CenterBasis, CenterError, commutator_defects
from quiver.dynkin import DynkinQuiver
from utils.serialization import format_rational

logger = logging.getLogger(__name__)

E_GENERATORS = {
    6: OrderedDict([
        ("z6", "a1 a2 x3 a2* a1* - a2 x3^2 a2* - x5 x3 x5 + a3 x2^2 a3* - a4 a3 x2 a3* a4*"),
        ("z8", "-a2 x5 x3 x5 a2* - x5 x3^2 x5 - a3 x5 x2 x5 a3*"),
    ]),
    7: OrderedDict([
        ("z8", "-a1 a2 a3 x6 a3* a2* a1* - a2 a3 x4^2 a3* a2* - a3 x6 x4 x6 a3* - x4 x3^2 x4 "
               "- a4 x4 x6 x4 a4* + a6 x4 x6 x4 a6*"),
        ("z12", "-a3 x4 x6 x4 x6 x4 a3* - x4 x6 x4^2 x6 x4 + a4 x6 x4 x6 x4 x6 a4* "
                "+ a6 x4 x6 x4 x6 x4 a6*"),
    ]),
    8: OrderedDict([
        ("z12", "a1 a2 a3 x6 x4 x6 a3* a2* a1* + a2 a3 x4 x3^2 x4 a3* a2* + a3 (x4 x6)^2 x4 a3* "
                "+ (x3 x4 x3)^2 - a4 (x6 x4)^2 x6 a4* + a5 a4 x6 x4^2 x6 a4* a5* - a6 (x4 x6)^2 x4 a6*"),
        ("z20", "-a1 a2 a3 x4^2 x3^3 x4^2 a3* a2* a1* - a2 a3 (x6 x4)^2 (x4 x6)^2 a3* a2* "
                "+ a3 (x6 x4)^4 x6 a3* - (x4 x6)^5 + (x6 x4^2)^3 x6 - (x6 x4)^5 "
                "- a4 (x4 x6 x4)^3 a4* - a6 (x4 x6)^4 x4 a6*"),
        ("z24", "z12^2"),
    ]),
}

# Top-degree identities: expression -> its value in the w<v> basis.
E_TOP_IDENTITIES = {
    7: [("z8^2", {"w1": 1, "w3": 1, "w7": -1})],
    8: [("x4 x3 z12^2", {"w5": 1})],
}


def _word(labels: List[str], vertex: int) -> str:
    return " ".join(labels) if labels else f"e{vertex}"


def d_series_terms(n: int, j: int) -> Dict[str, str]:
    """
    The four families of loops building z_{4j} for D_{n+1}.

    Returns:
        {"b": ..., "c": ..., "d": ..., "d'": ...} as parser expressions
    """
    def b(i: int, length: int) -> str:
        up = [f"a{k}*" for k in range(i, i + length)]
        return _word(up + [f"a{k}" for k in reversed(range(i, i + length))], i)

    def c(i: int, power: int) -> str:
        up = [f"a{k}*" for k in range(i, n - 1)]
        down = [f"a{k}" for k in reversed(range(i, n - 1))]
        return _word(up + [f"a{n - 2}", f"a{n - 2}*"] * power + down, i)

    def d(power: int) -> str:
        return _word([f"a{n - 1}", f"a{n}*", f"a{n}", f"a{n - 1}*"] * power, n)

    def d_prime(power: int) -> str:
        return _word([f"a{n}", f"a{n - 1}*", f"a{n - 1}", f"a{n}*"] * power, n + 1)

    return {
        "b": " + ".join(b(i, 2 * j) for i in range(2 * j + 1, n - 2 * j)),
        "c": " + ".join(c(n - 1 - i, 2 * j - i) for i in range(0, 2 * j)),
        "d": d(j),
        "d'": d_prime(j),
    }


def d_series_expression(n: int, j: int) -> str:
    """z_{4j} = sum b_{i,2j} + sum c_{n-1-i,2j-i} + d_j + d'_j."""
    return " + ".join(part for part in d_series_terms(n, j).values() if part)


def d_boundary_expression(n: int) -> Optional[str]:
    """d_{(n-1)/2} + d'_{(n-1)/2}, the value of z_{4j} z_{4k} at j + k = (n-1)/2 (n odd)."""
    if n % 2 == 0:
        return None
    terms = d_series_terms(n, (n - 1) // 2)
    return terms["d"] + " + " + terms["d'"]


def closed_generators(quiver: DynkinQuiver) -> Dict[str, str]:
    """Closed expressions keyed by generator name."""
    if quiver.family == "E":
        return OrderedDict(E_GENERATORS[quiver.rank_param])
    n = quiver.rank_param
    result = OrderedDict()
    j = 1
    while 4 * j < 2 * n - 2:
        result[f"z{4 * j}"] = d_series_expression(n, j)
        j += 1
    return result


def match_closed_generators(center: CenterBasis, strict: bool = True,
                            rescale: bool = False) -> List[Dict[str, Any]]:
    """
    Verify each closed expression and compare it with the computed generator.

    Args:
        center: Computed center
        strict: Raise on the first failure instead of reporting it
        rescale: Replace the computed generator by the expression when they agree up to a scalar

    Returns:
        One report per expression: {name, degree, expression, status, scalar}

    Raises:
        CenterError: In strict mode, for an expression that fails to parse, is
            not central or is not a multiple of the computed generator
    """
    algebra = center.algebra
    reports = []
    for name, text in closed_generators(algebra.quiver).items():
        report = {"name": name, "expression": text, "degree": None, "status": "differs", "scalar": None}
        try:
            element = parse_element(algebra, text, center.aliases())
        except ParseError as e:
            report["status"] = f"parse error: {e}"
            reports.append(report)
            if strict:
                raise CenterError(f"{name}: {e}")
            continue
        degrees = sorted(element.degrees())
        report["degree"] = degrees[0] if len(degrees) == 1 else degrees
        defects = commutator_defects(algebra, element)
        if defects:
            report["status"] = f"not central (fails against {', '.join(defects)})"
        elif name in center:
            computed = center[name]
            scalar = _scalar_multiple(element, computed)
            if scalar is not None:
                report["status"] = "match"
                report["scalar"] = format_rational(scalar)
                if rescale:
                    center.replace(name, element)
        if report["status"] != "match":
            logger.warning(f"{algebra.quiver.name}: {name} {report['status']}")
            if strict:
                error_msg = f"{algebra.quiver.name}: closed expression for {name} {report['status']}"
                logger.error(error_msg)
                raise CenterError(error_msg)
        reports.append(report)
    center.match_reports = reports
    return reports


def _scalar_multiple(element, computed):
    """lambda with element = lambda * computed, or None."""
    if computed.is_zero():
        return None
    path, coeff = next(iter(computed))
    scalar = element.coefficient(path) / coeff
    if scalar == 0 or element != computed * scalar:
        return None
    return scalar


def top_identities(center: CenterBasis) -> List[Dict[str, Any]]:
    """
    Evaluate the known top-degree identities.

    For E7 and E8 the expected value is a combination of w<v>. For D_{n+1}
    with n odd every product z_{4j} z_{4k} with j + k = (n-1)/2 must equal
    d_{(n-1)/2} + d'_{(n-1)/2} = w_n - w_{n+1}; with z_0 the unit this includes
    the boundary element itself, which is the only identity for D4.

    Returns:
        Reports {expression, expected, computed, status}
    """
    algebra = center.algebra
    quiver = algebra.quiver
    reports = []
    if quiver.family == "E":
        for text, expected in E_TOP_IDENTITIES.get(quiver.rank_param, []):
            computed = center.coordinates(parse_element(algebra, text, center.aliases()))
            reports.append({
                "expression": text,
                "expected": {k: format_rational(v) for k, v in expected.items()},
                "computed": {k: format_rational(v) for k, v in computed.items()},
                "status": "match" if computed == expected else "differs",
            })
        return reports

    n = quiver.rank_param
    boundary = d_boundary_expression(n)
    if boundary is None:
        return reports
    target = parse_element(algebra, boundary)
    expected = {f"w{n}": Fraction(1), f"w{n + 1}": Fraction(-1)}
    half = (n - 1) // 2

    # z0 is the unit, so the pair (0, half) is the boundary element itself
    products = [(boundary, target)]
    for j in range(1, half // 2 + 1):
        left, right = f"z{4 * j}", f"z{4 * (half - j)}"
        if left not in center or right not in center:
            continue
        text = f"{left} {right}"
        products.append((text, parse_element(algebra, text, center.aliases())))

    for text, product in products:
        computed = center.coordinates(product)
        reports.append({
            "expression": text,
            "expected": {k: format_rational(v) for k, v in expected.items()},
            "computed": {k: format_rational(v) for k, v in computed.items()},
            "status": "match" if product == target and computed == expected else "differs",
        })
    return reports
