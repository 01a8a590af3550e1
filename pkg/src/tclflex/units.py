"""Unit conversion and fixed-decimal report formatting.

Everything internal is kW / kWh; MW / MWh appear only at report
boundaries, formatted with exactly two fractional digits and ties
rounded half-away-from-zero.
"""

from decimal import Decimal, ROUND_HALF_UP

KW_PER_MW = 1000.0


def kw_to_mw(value_kw: float) -> float:
    return value_kw / KW_PER_MW


def format_2dp(value: float) -> str:
    """Format with two fractional digits, ties away from zero."""
    q = Decimal(repr(float(value))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    if q == 0:  # avoid the confusing "-0.00"
        q = abs(q)
    return str(q)


def format_mw(value_kw: float) -> str:
    """kW quantity rendered as MW with the 2-decimal report convention."""
    return format_2dp(kw_to_mw(value_kw))
