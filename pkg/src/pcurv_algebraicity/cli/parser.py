"""Rational-function expressions in one variable.

Grammar (implicit multiplication allowed between juxtaposed factors):

    input  := expr | expr ";" expr
    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary | unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := NUMBER | VARIABLE | "(" expr ")"

"^" binds tighter than unary minus, so -x^2 is -(x^2).
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from ..arith.polynomials import RatPoly, add, degree, divmod_q, format_poly, mul, poly_gcd_q, power, to_fractions
from ..errors import ExpressionSyntaxError, ZeroDenominatorError

logger = logging.getLogger(__name__)

SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
REPLACEMENTS = {"−": "-", "–": "-", "·": "*", "×": "*", "÷": "/"}
TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^();]))")


@dataclass(frozen=True)
class ParsedInput:
    a_raw: RatPoly
    b_raw: RatPoly
    source_text: str


def normalize_text(text: str) -> str:
    """Replace typographic operators by ASCII and superscript digits by ^n."""
    for old, new in REPLACEMENTS.items():
        text = text.replace(old, new)
    return re.sub(r"[⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group().translate(SUPERSCRIPTS), text)


def _reduce(num: RatPoly, den: RatPoly) -> tuple[RatPoly, RatPoly]:
    if not num:
        return (), (Fraction(1),)
    g = poly_gcd_q(num, den)
    if degree(g) > 0:
        num, den = divmod_q(num, g)[0], divmod_q(den, g)[0]
    lc = den[-1]
    return tuple(c / lc for c in num), tuple(c / lc for c in den)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = TOKEN.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variable: str):
        self.text = text
        self.variable = variable
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def _error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self._peek()[2], self.text)

    def _accept(self, op: str) -> bool:
        kind, value, _ = self._peek()
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            raise self._error(f"expected {op!r}")

    def parse_input(self) -> tuple[RatPoly, RatPoly]:
        num, den = self.expr()
        if self._accept(";"):
            num2, den2 = self.expr()
            if not num2:
                raise ZeroDenominatorError("denominator of the pair form is zero")
            num, den = _reduce(mul(num, den2), mul(den, num2))
        if self._peek()[0] != "end":
            raise self._error("unexpected token")
        return num, den

    def expr(self) -> tuple[RatPoly, RatPoly]:
        left = self.term()
        while True:
            if self._accept("+"):
                sign = 1
            elif self._accept("-"):
                sign = -1
            else:
                return left
            rn, rd = self.term()
            if sign < 0:
                rn = tuple(-c for c in rn)
            left = _reduce(add(mul(left[0], rd), mul(rn, left[1])), mul(left[1], rd))

    def _starts_factor(self) -> bool:
        kind, value, _ = self._peek()
        return kind in ("num", "name") or (kind == "op" and value == "(")

    def term(self) -> tuple[RatPoly, RatPoly]:
        num, den = self.unary()
        while True:
            if self._accept("*") or self._starts_factor():
                rn, rd = self.unary()
                num, den = _reduce(mul(num, rn), mul(den, rd))
            elif self._accept("/"):
                pos = self._peek()[2]
                rn, rd = self.unary()
                if not rn:
                    raise ZeroDenominatorError(f"division by zero at position {pos}")
                num, den = _reduce(mul(num, rd), mul(den, rn))
            else:
                return num, den

    def unary(self) -> tuple[RatPoly, RatPoly]:
        if self._accept("-"):
            num, den = self.unary()
            return tuple(-c for c in num), den
        if self._accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> tuple[RatPoly, RatPoly]:
        num, den = self.atom()
        if self._accept("^"):
            kind, value, _ = self._peek()
            if kind != "num" or not value.isdigit():
                raise self._error("exponent must be a nonnegative integer")
            self.i += 1
            e = int(value)
            num, den = power(num, e), power(den, e)
        return num, den

    def atom(self) -> tuple[RatPoly, RatPoly]:
        kind, value, _ = self._peek()
        one = (Fraction(1),)
        if kind == "num":
            self.i += 1
            return to_fractions((Fraction(value),)), one
        if kind == "name":
            if value != self.variable:
                raise self._error(f"unknown variable {value!r}, expected {self.variable!r}")
            self.i += 1
            return (Fraction(0), Fraction(1)), one
        if self._accept("("):
            inner = self.expr()
            self._expect(")")
            return inner
        raise self._error("expected a number, a variable or '('")


def parse_ratfun(text: str, variable: str = "x") -> ParsedInput:
    """Parse text into a numerator/denominator pair over Q, in lowest terms with a monic denominator."""
    normalized = normalize_text(text)
    a, b = _Parser(normalized, variable).parse_input()
    logger.debug(f"Parsed {text!r} as ({format_poly(a, variable)}) / ({format_poly(b, variable)})")
    return ParsedInput(a_raw=a, b_raw=b, source_text=text)


def parse_poly(text: str, variable: str = "x") -> RatPoly:
    """Parse a polynomial expression; a nonconstant denominator is an error."""
    parsed = parse_ratfun(text, variable)
    if degree(parsed.b_raw) > 0:
        raise ExpressionSyntaxError("expected a polynomial", 0, normalize_text(text))
    return tuple(c / parsed.b_raw[0] for c in parsed.a_raw)


def format_ratfun(a: RatPoly, b: RatPoly, variable: str = "x") -> str:
    """Expression that parse_ratfun reads back as a / b."""
    if degree(b) == 0 and b[0] == 1:
        return format_poly(a, variable)
    return f"({format_poly(a, variable)}) / ({format_poly(b, variable)})"
