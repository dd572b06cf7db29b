"""Exact rational scalars and their canonical string form.

Every number in this package is an exact rational; no float ever enters a
computation.  ``Q`` is gmpy2's mpq when available (markedly faster for row
reduction) and otherwise the stdlib Fraction.  Both keep values in lowest
terms with a positive denominator, which is the canonical form assumed by
serialisation and by subspace equality.
"""

from __future__ import annotations

import re

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)

# ASCII minus only; a leading unicode minus is normalised before matching.
_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class ScalarParseError(ValueError):
    """Raised for a string that is not an exact rational literal."""


def parse_scalar(text: str) -> Q:
    """Parse a canonical rational literal such as ``3``, ``-1/2``.

    Decimal points are rejected on purpose: files must stay exact.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"rational literal must be a string, got {text!r}")
    cleaned = text.strip().replace("−", "-")
    match = _RATIONAL_RE.match(cleaned)
    if match is None:
        raise ScalarParseError(f"not an exact rational literal: {text!r}")
    num = int(match.group(1))
    den_text = match.group(2)
    if den_text is None:
        return Q(num)
    den = int(den_text)
    if den == 0:
        raise ScalarParseError(f"zero denominator in rational literal: {text!r}")
    return Q(num, den)


def format_scalar(value) -> str:
    """Canonical string form: lowest terms, minus sign on the numerator."""
    q = Q(value)
    num = q.numerator
    den = q.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
