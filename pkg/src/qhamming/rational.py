"""Parsing and rendering of exact rational scalars.

The wire format is a "rational string": either a plain (optionally
signed) integer like ``"7"`` or a quotient like ``"256/109"``.  Parsing
and printing round-trip exactly; printing always canonicalizes to
lowest terms with a positive denominator.
"""
from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .exceptions import SchemaError

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string into a ``Fraction``."""
    if not isinstance(text, str):
        raise SchemaError(f"expected a rational string, got {type(text).__name__}")
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise SchemaError(f"not a rational string: {text!r}")
    if "/" in s:
        num, _, den = s.partition("/")
        if int(den) == 0:
            raise SchemaError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(value) -> str:
    """Canonical rational string: ``"p/q"``, or ``"p"`` when q == 1."""
    return str(Fraction(value))


def approx_decimal(value, digits: int = 12) -> str:
    """Decimal rendering with ``digits`` significant figures.

    Display-only; never used in computations.  Uses integer-backed
    decimal arithmetic so arbitrarily large numerators cannot overflow.
    """
    frac = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(frac.numerator) / Decimal(frac.denominator))
