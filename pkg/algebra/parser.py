"""
Parser for algebra elements written in path notation.

Grammar (whitespace is insignificant, juxtaposition is the product)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor factor*
    factor := primary ['^' INT]
    primary:= NUMBER | NAME | '(' expr ')'
    NAME   := e<v> | a<i> | a<i>* | x<i> | w<v> | any alias

``x<i>`` stands for ``a<i>* a<i>``. ``w<v>`` and other aliases are looked up in
the alias table handed to ``parse_element``.
"""

import re
import logging
from fractions import Fraction
from typing import Dict, Optional

from algebra.basis import AlgebraError
from algebra.element import AlgebraElement
from quiver.dynkin import QuiverError

logger = logging.getLogger(__name__)

NUMBER = re.compile(r"\d+(?:/\d+)?")
NAME = re.compile(r"[A-Za-z]+\d+\*?")
SYMBOL = re.compile(r"[-+()^]")
INTEGER = re.compile(r"\d+")
SPACES = re.compile(r"\s*")


class ParseError(Exception):
    """Exception raised for lexical, syntax or composability errors in an expression."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class _Tracker:
    """Cursor over the input string."""

    def __init__(self, text: str):
        self.text = text.replace("−", "-").replace("·", " ")
        self.pos = 0

    def skip(self) -> None:
        self.pos = SPACES.match(self.text, self.pos).end()

    def match(self, pattern: re.Pattern) -> Optional[str]:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group(0)

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos:self.pos + 1]

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


class ElementParser:
    """
    Recursive-descent parser producing normal-formed AlgebraElements.

    Args:
        algebra: The PreprojectiveAlgebra the names refer to
        aliases: Extra names (e.g. "w3" for omega_3, "z6") mapped to elements
    """

    def __init__(self, algebra, aliases: Optional[Dict[str, AlgebraElement]] = None):
        self.algebra = algebra
        self.aliases = dict(aliases or {})

    def parse(self, text: str) -> AlgebraElement:
        if not isinstance(text, str) or not text.strip():
            raise ParseError("Empty expression", 0)
        tracker = _Tracker(text)
        result = self._expr(tracker)
        if not tracker.at_end():
            raise ParseError(f"Unexpected character '{tracker.peek()}'", tracker.pos)
        if isinstance(result, Fraction):
            return self.algebra.one() * result
        return result

    def _expr(self, t: _Tracker) -> AlgebraElement:
        sign = 1
        if t.peek() in ("+", "-"):
            sign = -1 if t.match(SYMBOL) == "-" else 1
        result = self._term(t) * sign
        while t.peek() in ("+", "-"):
            op = t.match(SYMBOL)
            term = self._term(t)
            result = result + term if op == "+" else result - term
        return result

    def _term(self, t: _Tracker) -> AlgebraElement:
        start = t.pos
        value = self._factor(t)
        while t.peek() and t.peek() not in "+-)":
            position = t.pos
            right = self._factor(t)
            value = self._product(value, right, position)
        if value is None:
            raise ParseError("Term without an algebra element", start)
        return value

    def _product(self, left, right, position: int):
        if left is None:
            return right
        if isinstance(left, Fraction):
            return right * left if isinstance(right, AlgebraElement) else left * right
        if isinstance(right, Fraction):
            return left * right
        if left and right and not any(x.target == y.source for x in left.terms for y in right.terms):
            raise ParseError(f"Incomposable product '{left}' * '{right}'", position)
        return left * right

    def _factor(self, t: _Tracker):
        position = t.pos
        value = self._primary(t)
        if t.peek() == "^":
            t.match(SYMBOL)
            exponent = t.match(INTEGER)
            if exponent is None:
                raise ParseError("Expected an integer exponent after '^'", t.pos)
            power = int(exponent)
            if isinstance(value, Fraction):
                return value ** power
            if power == 0:
                return self.algebra.one()
            result = value
            for _ in range(power - 1):
                result = self._product(result, value, position)
            return result
        return value

    def _primary(self, t: _Tracker):
        t.skip()
        position = t.pos
        number = t.match(NUMBER)
        if number is not None:
            return Fraction(number)
        if t.peek() == "(":
            t.match(SYMBOL)
            inner = self._expr(t)
            if t.peek() != ")":
                raise ParseError("Missing ')'", t.pos)
            t.match(SYMBOL)
            return inner
        name = t.match(NAME)
        if name is None:
            found = t.peek() or "end of input"
            raise ParseError(f"Unexpected '{found}'", position)
        return self._name(name, position)

    def _name(self, name: str, position: int) -> AlgebraElement:
        if name in self.aliases:
            return self.aliases[name]
        try:
            if name.startswith("x") and name[1:].isdigit():
                arrow = f"a{name[1:]}"
                return self.algebra.path([f"{arrow}*", arrow])
            if name.startswith("e") and name[1:].isdigit():
                return self.algebra.vertex(int(name[1:]))
            if name.startswith("a"):
                return self.algebra.arrow(name)
        except (AlgebraError, QuiverError) as e:
            raise ParseError(str(e), position)
        raise ParseError(f"Unknown name '{name}'", position)


def parse_element(algebra, text: str, aliases: Optional[Dict[str, AlgebraElement]] = None) -> AlgebraElement:
    """
    Parse and normal-form an expression such as "a3* a3 (a2* a2 a3* a3)^2".

    Args:
        algebra: The PreprojectiveAlgebra
        text: Expression text
        aliases: Optional alias table (w<v>, z<k>, ...)

    Returns:
        The parsed element

    Raises:
        ParseError: On lexical or syntax errors and incomposable products
    """
    return ElementParser(algebra, aliases).parse(text)
