import logging
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence

logger = logging.getLogger(__name__)


class SerializationError(Exception):
    """Exception raised for malformed serialized artifacts."""
    pass


def format_rational(value: Any) -> str:
    """
    Render an exact rational as a "p/q" string (always with a denominator).

    Args:
        value: int, Fraction or anything Fraction accepts exactly

    Returns:
        The "p/q" string
    """
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse a "p/q" (or plain integer) string.

    Args:
        text: String to parse

    Returns:
        The exact rational

    Raises:
        SerializationError: If the string is not a rational literal
    """
    if not isinstance(text, str):
        raise SerializationError(f"Expected a 'p/q' string, got {type(text).__name__}")
    try:
        numerator, _, denominator = text.strip().partition("/")
        if not denominator:
            return Fraction(int(numerator))
        return Fraction(int(numerator), int(denominator))
    except (ValueError, ZeroDivisionError) as e:
        error_msg = f"Invalid rational literal '{text}': {str(e)}"
        logger.error(error_msg)
        raise SerializationError(error_msg)


def matrix_to_json(rows: Sequence[Sequence[Any]]) -> List[List[str]]:
    """Serialize a rational matrix given as a list of rows."""
    return [[format_rational(entry) for entry in row] for row in rows]


def matrix_from_json(data: Any) -> List[List[Fraction]]:
    """
    Deserialize a rational matrix.

    Args:
        data: List of rows of "p/q" strings

    Returns:
        List of rows of Fractions

    Raises:
        SerializationError: If the payload is not a rectangular list of lists
    """
    if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
        raise SerializationError("Matrix payload must be a list of rows")
    widths = {len(row) for row in data}
    if len(widths) > 1:
        raise SerializationError(f"Ragged matrix payload with row widths {sorted(widths)}")
    return [[parse_rational(entry) for entry in row] for row in data]


def combination_to_json(combination: Mapping[str, Fraction]) -> List[Dict[str, str]]:
    """Serialize a linear combination of named elements, keeping its order."""
    return [{"name": name, "coeff": format_rational(coeff)}
            for name, coeff in combination.items() if coeff != 0]


def combination_from_json(data: Any) -> Dict[str, Fraction]:
    """
    Deserialize a linear combination of named elements.

    Args:
        data: List of {"name", "coeff"} objects

    Returns:
        Ordered mapping name -> coefficient

    Raises:
        SerializationError: If an entry is malformed
    """
    if not isinstance(data, list):
        raise SerializationError("Combination payload must be a list")
    result: Dict[str, Fraction] = {}
    for entry in data:
        if not isinstance(entry, dict) or "name" not in entry or "coeff" not in entry:
            raise SerializationError(f"Malformed combination entry: {entry!r}")
        result[entry["name"]] = result.get(entry["name"], Fraction(0)) + parse_rational(entry["coeff"])
    return {name: coeff for name, coeff in result.items() if coeff != 0}


def combination_to_text(combination: Mapping[str, Fraction]) -> str:
    """
    Human-readable form of a combination, e.g. "-8*h1 - 4*h2".

    Args:
        combination: Ordered mapping name -> coefficient

    Returns:
        The rendered string ("0" for the empty combination)
    """
    parts = []
    for name, coeff in combination.items():
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        term = name if magnitude == 1 else f"{magnitude}*{name}"
        parts.append((sign, term))
    if not parts:
        return "0"
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text
