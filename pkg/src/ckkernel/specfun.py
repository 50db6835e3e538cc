"""Special functions with explicit error contracts.

Bessel J of half-integer order via the ascending power series (small
arguments only, which is all the kernel series ever needs), the classical
power envelope |J_nu(x)| <= (x/2)^nu / Gamma(nu+1), log-gamma, and the
upper incomplete gamma function used by the completed-L sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PrecisionError
from .ntheory import ValueWithError

__all__ = [
    "HalfIntOrder",
    "bessel_j",
    "bessel_envelope",
    "bessel_envelope_weight_form",
    "log_gamma",
    "upper_incomplete_gamma",
]

_EPS = 2.220446049250313e-16
# Largest argument the ascending-series contract covers.  Beyond this the
# partial sums grow enough that the float-cancellation budget is no longer
# comfortably below the certified tail bounds.
MAX_SERIES_ARG = 16.0


@dataclass(frozen=True)
class HalfIntOrder:
    """A half-integer Bessel order nu = twice_nu / 2 with twice_nu odd."""

    twice_nu: int

    def __post_init__(self):
        if self.twice_nu < 1 or self.twice_nu % 2 == 0:
            raise DomainError(f"twice_nu must be odd and >= 1, got {self.twice_nu}")

    @property
    def nu(self) -> float:
        return self.twice_nu / 2.0

    @classmethod
    def for_weight(cls, k: int) -> "HalfIntOrder":
        """The order (k-1)/2 attached to an even weight k."""
        return cls(k - 1)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def bessel_envelope(nu: HalfIntOrder, x: float) -> float:
    """The classical bound (x/2)^nu / Gamma(nu + 1) on |J_nu(x)|, x >= 0."""
    if x < 0:
        raise DomainError(f"bessel_envelope requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    v = nu.nu
    return math.exp(v * math.log(x / 2.0) - math.lgamma(v + 1.0))


def bessel_envelope_weight_form(k: int, x: float) -> float:
    """The same envelope at order (k-1)/2, written through the half-integer
    Gamma values: sqrt(2/pi) * ((k/2)! / k!) * 2^(k/2) * x^((k-1)/2)."""
    if x < 0:
        raise DomainError("x must be >= 0")
    if x == 0.0:
        return 0.0
    lg = (
        0.5 * math.log(2.0 / math.pi)
        + math.lgamma(k / 2 + 1.0)
        - math.lgamma(k + 1.0)
        + (k / 2) * math.log(2.0)
        + ((k - 1) / 2) * math.log(x)
    )
    return math.exp(lg)


def bessel_j(nu: HalfIntOrder, x: float) -> ValueWithError:
    """J_nu(x) by the ascending series, with a certified truncation bound.

    sum_{j>=0} (-1)^j (x/2)^(nu+2j) / (j! Gamma(nu+j+1)).  The series is
    alternating; once the term ratio drops below 1 it is also decreasing,
    so the first omitted term bounds the tail.  Truncation stops only in
    that regime, which every x <= MAX_SERIES_ARG reaches quickly.
    """
    if x <= 0:
        raise DomainError(f"bessel_j requires x > 0, got {x}")
    if x > MAX_SERIES_ARG:
        raise DomainError(
            f"bessel_j ascending-series contract covers x <= {MAX_SERIES_ARG}, got {x}"
        )
    v = nu.nu
    half = x / 2.0
    q = half * half
    lg0 = v * math.log(half) - math.lgamma(v + 1.0)
    term = math.exp(lg0)
    # the leading term's exp argument carries ~|lg0| ulps of rounding
    lead_err = abs(lg0) * _EPS * term
    total = term
    max_abs = abs(term)
    j = 0
    while True:
        ratio = q / ((j + 1) * (v + j + 1))
        next_term = -term * ratio
        if ratio < 1.0 and abs(next_term) <= 1e-18 * abs(total) + 5e-324:
            tail = abs(next_term)
            break
        term = next_term
        total += term
        max_abs = max(max_abs, abs(term), abs(total))
        j += 1
        if j > 500:
            raise PrecisionError("bessel_j series failed to converge")
    float_err = (j + 2) * _EPS * max_abs + lead_err
    return ValueWithError(total, tail + float_err)


def _upper_gamma_cf(s: float, x: float) -> tuple[float, float]:
    """Gamma(s, x) by the Lentz continued fraction, for x >= s + 1.

    Returns (value, abs_err).
    """
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, 400):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    else:
        raise PrecisionError("incomplete-gamma continued fraction failed to converge")
    slx = s * math.log(x)
    lg = slx - x
    value = math.exp(lg) * h if lg > -745 else 0.0
    # the exp argument carries ~(|s ln x| + x) ulps of rounding
    return value, (20.0 + abs(slx) + x) * _EPS * abs(value) + 5e-324


def _lower_gamma_series(s: float, x: float) -> tuple[float, float]:
    """gamma(s, x) (lower) by the ascending series, for x < s + 1."""
    term = 1.0 / s
    terms = [term]
    k = 1
    while True:
        term *= x / (s + k)
        terms.append(term)
        if term < 1e-17 * terms[0]:
            break
        k += 1
        if k > 10_000:
            raise PrecisionError("lower incomplete-gamma series failed to converge")
    slx = s * math.log(x)
    value = math.exp(slx - x) * math.fsum(terms)
    return value, (8.0 + abs(slx) + x) * _EPS * abs(value)


def upper_incomplete_gamma(s: float, x: float) -> ValueWithError:
    """Gamma(s, x) = integral_x^inf t^(s-1) e^-t dt, for 0 < s <= 60, x > 0."""
    if not (s > 0 and x > 0):
        raise DomainError("upper_incomplete_gamma requires s > 0 and x > 0")
    if s > 60:
        raise DomainError(f"upper_incomplete_gamma contract covers s <= 60, got {s}")
    if x >= s + 1.0:
        value, err = _upper_gamma_cf(s, x)
        return ValueWithError(value, err)
    lower, lerr = _lower_gamma_series(s, x)
    full = math.exp(math.lgamma(s))
    value = full - lower
    # cancellation is mild here (x < s+1 keeps lower/full away from 1), but
    # exponentiating lgamma(s) carries ~|lgamma(s)| ulps of rounding
    err = lerr + (4.0 + abs(math.lgamma(s))) * _EPS * full
    return ValueWithError(value, err)
