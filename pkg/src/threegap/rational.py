"""Exact rational input parsing.

Every scalar in this package is a `fractions.Fraction`, which already
guarantees canonical form: positive denominator, numerator and denominator
coprime.  The helpers here turn user-facing text into such fractions
without ever routing through binary floating point.
"""
from __future__ import annotations

import re
from fractions import Fraction

_DECIMAL = re.compile(r"[+-]?[0-9]+(?:\.[0-9]+)?")


def rational_from_decimal(text: str) -> Fraction:
    """Parse a finite decimal literal ("0.375", "-2", "1.20") exactly.

    The literal is read digit by digit, so "0.3" is exactly 3/10 and never
    the nearest double.
    """
    s = text.strip()
    if not _DECIMAL.fullmatch(s):
        raise ValueError(f"not a finite decimal literal: {text!r}")
    return Fraction(s)


def parse_rational(text: str) -> Fraction:
    """Parse either a "p/q" string or a finite decimal into an exact rational."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            return Fraction(int(num.strip()), int(den.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a valid rational: {text!r}") from exc
    return rational_from_decimal(s)
