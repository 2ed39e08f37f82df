"""Exact rational scalars.

All arithmetic in this package is exact. gmpy2's ``mpq`` is used when
available (a large constant-factor win on elimination-heavy paths) with
``fractions.Fraction`` as a drop-in fallback; both are hashable, reduce to
lowest terms, and interoperate with Python ints, and nothing downstream
depends on which one is active.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)


def rational(value) -> "Q":
    """Coerce an int, string, Fraction, or rational to the scalar type."""
    return Q(value)


def parse_rational(text: str) -> "Q":
    """Parse ``"p"`` or ``"p/q"`` into an exact rational.

    Raises ValueError for malformed input, including a zero denominator.
    """
    try:
        return Q(text.strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


def format_rational(value) -> str:
    """Render as ``"p"`` or ``"p/q"`` in lowest terms with positive q."""
    return str(value)
