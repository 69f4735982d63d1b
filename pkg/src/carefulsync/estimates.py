"""Numeric estimates around the race cost: growth roots and bracketing bounds."""

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, log, log2

from . import pawnrace


@dataclass(frozen=True)
class PhiRoot:
    """The unique real root > 1 of x^(c+1) - x - 1, with its residual."""

    c: int
    value: float
    residual: float

    def __post_init__(self):
        if not 1.0 < self.value <= 2.0:
            raise ValueError("root outside (1, 2]")
        if self.residual > 1e-12:
            raise ValueError("residual too large")


def _char(c: int, x: float) -> float:
    return x ** (c + 1) - x - 1.0


@lru_cache(maxsize=None)
def phi(c: int) -> PhiRoot:
    """Growth rate of the split sequence: root of x^(c+1) = x + 1 in (1, 2].

    Bisection to 1e-13 followed by a few Newton steps; strictly decreasing
    in c and approaching 1.
    """
    if c < 1:
        raise ValueError("cost parameter must be >= 1")
    lo, hi = 1.0, 2.0
    while hi - lo > 1e-13:
        mid = (lo + hi) / 2
        if _char(c, mid) < 0:
            lo = mid
        else:
            hi = mid
    x = (lo + hi) / 2
    for _ in range(4):
        derivative = (c + 1) * x**c - 1.0
        x -= _char(c, x) / derivative
    return PhiRoot(c=c, value=x, residual=abs(_char(c, x)))


def f_bounds(n: int, c: int) -> tuple[float, float, float, float]:
    """Two bracketing pairs for the race cost.

    The tight pair is n ln(n)/ln(phi_c) -3cn and +(c+1)n (strict bounds);
    the simple pair is c n log2(n) and (c + 1/2) n ceil(log2 n) (inclusive).
    """
    if n < 1 or c < 1:
        raise ValueError("need n >= 1 and c >= 1")
    log_phi = log(phi(c).value)
    center = n * log(n) / log_phi
    tight_lower = center - 3 * c * n
    tight_upper = center + (c + 1) * n
    simple_lower = c * n * log2(n)
    simple_upper = (c + 0.5) * n * ceil(log2(n)) if n > 1 else 0.0
    return tight_lower, tight_upper, simple_lower, simple_upper


def f_leading_estimate(k: int, c: int) -> float:
    """Leading-term estimate of the race cost at sequence points n = p_c(k).

    Valid only on the sequence itself (linear interpolation in between is
    biased upward); the error is o(n).
    """
    if c < 1:
        raise ValueError("cost parameter must be >= 1")
    n = pawnrace.sequences(c, k)[0]
    if n < 10:
        raise ValueError(f"estimate needs p_c(k) >= 10, got {n}")
    x = phi(c).value
    log_phi = log(x)
    constant = log((x + 1) * (c * x + c + 1) * (x - 1)) / log_phi
    return (log(n) / log_phi + constant - 2 - 1 / (x - 1)) * n
