"""Utility functions shared across the verifier."""

# Standard Library
import sys
import math
from decimal import ROUND_HALF_UP, Decimal

# Third Party
from aws_lambda_powertools import Logger


def get_logger(service: str) -> Logger:
    """Create a structured logger bound to the diagnostic stream.

    Parameters
    ----------
    service : str
        Service name stamped on every record, conventionally the dotted
        module path.

    Returns
    -------
    Logger
        A powertools logger writing JSON records to stderr, leaving stdout
        free for the JSON documents the CLI prints.
    """
    return Logger(service=service, stream=sys.stderr)


def round_half_away(value: float, places: int) -> float:
    """Round to ``places`` decimals, halves rounded away from zero.

    Parameters
    ----------
    value : float
        Finite value to round.
    places : int
        Number of decimal places to keep.

    Returns
    -------
    float
        The rounded value.
    """
    quantum = Decimal(1).scaleb(-places)
    # ROUND_HALF_UP in decimal rounds halves away from zero
    return float(Decimal(repr(value)).quantize(quantum, ROUND_HALF_UP))


def relative_slack(slack: float, *scale_values: float) -> float:
    """Scale a signed slack by the magnitude of the compared quantities.

    Parameters
    ----------
    slack : float
        Signed gap, positive when the inequality holds. May be infinite.
    *scale_values : float
        The quantities that were compared; infinite values are ignored.

    Returns
    -------
    float
        ``slack / max(|v|)`` over finite scale values, or ``slack`` itself
        when every finite scale value is zero.
    """
    if math.isinf(slack):
        return slack
    finite = [abs(v) for v in scale_values if math.isfinite(v)]
    scale = max(finite, default=0.0)
    if scale == 0.0:
        return slack
    return slack / scale
