"""Decimal rounding helpers used by table rendering and the f0 rule.

Python's built-in round() resolves ties to the even digit, which turns
50.5 into 50. The published tables (and the reference-frequency rule)
resolve ties away from zero, so all user-facing rounding goes through
these helpers instead.
"""

from decimal import ROUND_HALF_UP, Decimal


def round_half_away(value: float, decimals: int = 0) -> float:
    """Round to ``decimals`` places with ties going away from zero."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def format_fixed(value: float, decimals: int) -> str:
    """Format with a fixed number of decimals, ties away from zero.

    A value that rounds to zero is printed unsigned, never "-0.0".
    """
    quantum = Decimal(1).scaleb(-decimals)
    quantized = Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP)
    if quantized == 0:
        quantized = abs(quantized)
    return f"{quantized:.{decimals}f}"
