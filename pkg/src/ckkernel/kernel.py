"""The Cohen-Kohnen kernel coefficient engine.

Evaluates the normalized bracket

    rho_k(n) = 1 + (-1)^(k/4) sqrt(2 pi) sum_m gamma_n(m) sqrt(n pi / m) J_{(k-1)/2}(n pi / m)

with a certified truncation tail, the sign/log form of the constant c_k,
the per-weight and global deviation bounds, and the non-vanishing
certificate for r_k(1).  The coefficient itself is reported through its
log-prefactor so large weights never underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PrecisionError
from .ntheory import ValueWithError, divisor_count, gamma_sum, zeta, zeta_even
from .specfun import (
    MAX_SERIES_ARG,
    HalfIntOrder,
    bessel_envelope,
    bessel_j,
)

__all__ = [
    "SignedLog",
    "KernelCoefficient",
    "Certificate",
    "c_k",
    "r_k",
    "series_tail_bound",
    "per_k_bound",
    "global_bound",
    "certify",
]

_EPS = 2.220446049250313e-16


def _check_weight(k: int) -> None:
    if k % 4 != 0 or k < 12:
        raise DomainError(f"weight must satisfy k ≡ 0 (mod 4) and k >= 12, got {k}")


@dataclass(frozen=True)
class SignedLog:
    """A nonzero real stored as sign and natural log of its magnitude."""

    sign: int
    log_mag: float

    @property
    def value(self) -> float:
        return self.sign * math.exp(self.log_mag)


@dataclass(frozen=True)
class KernelCoefficient:
    """r_k(n) together with its normalized bracket and truncation data."""

    k: int
    n: int
    rho: ValueWithError
    log_prefactor: float  # ln[(8 pi)^(k/2-1) / (4 (k-2)!) * n^(k/2-1)]
    value: ValueWithError  # r_k(n) = exp(log_prefactor) * rho
    terms_used: int


@dataclass(frozen=True)
class Certificate:
    """Per-weight non-vanishing verdict for r_k(1)."""

    k: int
    rho: ValueWithError
    per_k_bound: float
    global_bound: float
    nonvanishing: bool
    sign: int  # +1 / -1, 0 when undetermined


def c_k(k: int) -> SignedLog:
    """The constant (-1)^(k/4) (8 pi)^(k/2-1) (k/2-1)! / (k-2)! in sign-log form."""
    _check_weight(k)
    sign = -1 if (k // 4) % 2 else 1
    log_mag = (k / 2 - 1) * math.log(8 * math.pi) + math.lgamma(k / 2) - math.lgamma(k - 1)
    return SignedLog(sign, log_mag)


def series_tail_bound(k: int, n: int, m_stop: int) -> float:
    """Certified bound on sqrt(2 pi) |sum_{m > m_stop} gamma_n(m) sqrt(n pi/m) J(n pi/m)|.

    Each term is at most d(m) sqrt(n pi/m) * envelope((k-1)/2, n pi/m)
    = A * d(m) * m^(-k/2) with A = sqrt(n pi) (n pi/2)^((k-1)/2) / Gamma((k+1)/2).
    With d(m) <= 2 sqrt(m) the tail is bounded by the integral
    2 A * m_stop^((3-k)/2) * 2/(k-3).
    """
    log_a = (
        0.5 * math.log(n * math.pi)
        + (k - 1) / 2 * math.log(n * math.pi / 2.0)
        - math.lgamma((k + 1) / 2)
    )
    log_tail = (
        0.5 * math.log(2 * math.pi)
        + log_a
        + math.log(4.0 / (k - 3))
        + (3 - k) / 2 * math.log(m_stop)
    )
    return math.exp(log_tail)


def r_k(k: int, n: int, eps: float = 1e-10) -> KernelCoefficient:
    """The kernel Fourier coefficient r_k(n) with certified absolute error on rho.

    The m-series is truncated once the certified tail drops below eps/2;
    per-term Bessel error plus float accumulation is kept below eps/2.
    """
    _check_weight(k)
    if k > 40:
        raise DomainError(f"weights above 40 are out of certified scope, got {k}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not eps >= 1e-14:
        raise PrecisionError(f"eps below 1e-14 is not achievable in double precision")
    if n * math.pi > MAX_SERIES_ARG:
        raise PrecisionError(
            f"n = {n} puts the Bessel argument past the ascending-series contract"
        )
    nu = HalfIntOrder.for_weight(k)
    sqrt_2pi = math.sqrt(2 * math.pi)
    sign = -1 if (k // 4) % 2 else 1

    m_stop = 8
    while series_tail_bound(k, n, m_stop) >= eps / 2 and m_stop < 1 << 22:
        m_stop *= 2
    tail = series_tail_bound(k, n, m_stop)
    if tail >= eps / 2:
        raise PrecisionError("could not reach the requested tail bound")

    series = 0.0
    bessel_err = 0.0
    abs_acc = 0.0
    for m in range(1, m_stop + 1):
        g = gamma_sum(n, m)
        x = n * math.pi / m
        j = bessel_j(nu, x)
        w = math.sqrt(n * math.pi / m)
        series += g * w * j.value
        bessel_err += abs(g) * w * j.abs_err
        abs_acc += abs(g) * w * abs(j.value)

    deviation = sign * sqrt_2pi * series
    float_err = (m_stop + 4) * _EPS * (sqrt_2pi * abs_acc + 1.0)
    rho_err = sqrt_2pi * bessel_err + tail + float_err
    rho = ValueWithError(1.0 + deviation, rho_err)

    log_pref = (
        (k / 2 - 1) * math.log(8 * math.pi)
        - math.log(4.0)
        - math.lgamma(k - 1)
        + (k / 2 - 1) * math.log(n)
    )
    pref = math.exp(log_pref)
    value = ValueWithError(pref * rho.value, pref * rho.abs_err + 4 * _EPS * pref * abs(rho.value))
    return KernelCoefficient(k=k, n=n, rho=rho, log_prefactor=log_pref,
                             value=value, terms_used=m_stop)


def per_k_bound(k: int) -> float:
    """2 (2 pi)^(k/2) ((k/2)! / k!) zeta(k/2)^2: the weight-k deviation bound."""
    _check_weight(k)
    z = zeta(k / 2)
    z_hi = z.value + z.abs_err  # keep it a valid upper bound
    log_val = (
        math.log(2.0)
        + (k / 2) * math.log(2 * math.pi)
        + math.lgamma(k / 2 + 1)
        - math.lgamma(k + 1)
        + 2 * math.log(z_hi)
    )
    return math.exp(log_val)


def global_bound() -> float:
    """2 (2 pi / 7) (2 pi / 8)^5 zeta(6)^2, the weight-uniform deviation bound (< 1)."""
    z6 = zeta_even(6)  # pi^6 / 945
    return 2.0 * (2 * math.pi / 7.0) * (2 * math.pi / 8.0) ** 5 * z6 * z6


def certify(k: int, eps: float = 1e-10) -> Certificate:
    """Certify that the bracket rho_k(1) (hence r_k(1), hence L(f_k, k/2)) is nonzero."""
    coeff = r_k(k, 1, eps)
    rho = coeff.rho
    bound = per_k_bound(k)
    if rho.value < 1.0 - bound - rho.abs_err:
        raise PrecisionError(
            f"rho fell below the certified window 1 - per_k_bound for k={k}; "
            "this contradicts the deviation bound"
        )
    nonvanishing = rho.excludes_zero()
    sign = 0
    if nonvanishing:
        sign = 1 if rho.value > 0 else -1
    return Certificate(
        k=k,
        rho=rho,
        per_k_bound=bound,
        global_bound=global_bound(),
        nonvanishing=nonvanishing,
        sign=sign,
    )
