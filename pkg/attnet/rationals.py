"""Exact rational parsing and rendering.

Input grammar: ``p/q``, an integer, or a finite decimal literal. Repeating
decimals and exponents are rejected so that every accepted string has
exactly one rational meaning.
"""

import re
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from attnet.constants import DEFAULT_SIGNIFICANT_DIGITS
from attnet.exceptions import InvalidInputError

_RATIONAL_PATTERN = re.compile(
    r"""
    ^(?P<sign>[+-]?)
    (?:
        (?P<num>\d+)/(?P<den>\d+)        # p/q
      | (?P<int>\d+)(?:\.(?P<frac>\d+))? # integer or finite decimal
      | \.(?P<bare>\d+)                  # .25
    )$
    """,
    re.VERBOSE,
)


def parse_rational(text: str, field: str = "value", allow_negative: bool = False) -> Fraction:
    """Parse a rational literal exactly.

    Args:
        text: The literal, e.g. "1/2", "3", "0.125"
        field: Field name used in error messages
        allow_negative: Whether a leading minus sign is accepted

    Returns:
        The exact Fraction

    Raises:
        InvalidInputError: On malformed literals, zero denominators or
            (unless allowed) negative values
    """
    match = _RATIONAL_PATTERN.match(text.strip())
    if match is None:
        raise InvalidInputError(
            f"{field} must be p/q, an integer or a finite decimal, got {text!r}",
            field=field,
            value=text,
        )

    if match["num"] is not None:
        if int(match["den"]) == 0:
            raise InvalidInputError(f"{field} has a zero denominator: {text!r}", field=field, value=text)
        value = Fraction(int(match["num"]), int(match["den"]))
    elif match["int"] is not None:
        digits = match["frac"] or ""
        value = Fraction(int(match["int"] + digits), 10 ** len(digits))
    else:
        digits = match["bare"]
        value = Fraction(int(digits), 10 ** len(digits))

    if match["sign"] == "-":
        value = -value
    if value < 0 and not allow_negative:
        raise InvalidInputError(f"{field} must be nonnegative, got {text!r}", field=field, value=text)
    return value


def format_exact(value: Fraction | int) -> str:
    """Render a rational canonically: "p" or "p/q" in lowest terms, q > 0."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction | int, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    """Render a rational as a decimal with ``digits`` significant digits.

    Rounding is round-half-even. Trailing zeros produced by the division are
    kept only when they are significant to the exact quotient.
    """
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return format(quotient, "f")


def format_value(value: Fraction | int, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    """Render in exact or decimal mode."""
    return format_exact(value) if exact else format_decimal(value, digits)


def as_delta(delta: Fraction | int) -> Fraction:
    """Coerce an attenuation factor to a Fraction, rejecting negatives.

    Raises:
        InvalidInputError: If delta < 0
    """
    delta = Fraction(delta)
    if delta < 0:
        raise InvalidInputError(f"delta must be >= 0, got {delta}", field="delta", value=delta)
    return delta
