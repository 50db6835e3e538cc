"""Petersson inner products by quadrature over the fundamental domain.

The domain {|x| <= 1/2, |tau| >= 1} is split into the box
[-1/2, 1/2] x [1, y_cutoff] and the arc strip between |tau| = 1 and y = 1,
each handled by tensor-product Gauss-Legendre nodes.  The measure is the
unnormalized y^k dx dy / y^2; no volume factor is applied, and the
triangle check reports whatever ratio that convention produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PrecisionError
from .kernel import r_k
from .lfunction import central_values
from .ntheory import ValueWithError, divisor_count
from .qexpansion import Eigenform
from .specfun import upper_incomplete_gamma

__all__ = [
    "QuadratureSpec",
    "default_spec",
    "petersson_inner",
    "petersson_norm_sq",
    "TriangleCheck",
    "triangle_check",
]

_MIN_Y = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class QuadratureSpec:
    """Node counts and cusp-truncation height for fundamental-domain quadrature."""

    x_nodes: int = 40
    y_nodes: int = 48
    y_cutoff: float = 6.0

    def __post_init__(self):
        if self.x_nodes < 8 or self.y_nodes < 8:
            raise DomainError("x_nodes and y_nodes must be >= 8")
        if self.y_cutoff < 3.0:
            raise DomainError("y_cutoff must be >= 3")


def default_spec(k: int) -> QuadratureSpec:
    """A spec whose cutoff pushes the y^(k-2) e^(-4 pi y) tail below ~1e-10."""
    return QuadratureSpec(x_nodes=40, y_nodes=48, y_cutoff=max(6.0, 0.35 * k))


def _series_truncation(f: Eigenform, y: float) -> float:
    """Bound on |sum_{n > N} a_n q^n| at height y, via |a_n| <= C d(n) n^((k-1)/2)."""
    k = f.weight
    c = 0.0
    for n in range(1, f.n_coeffs + 1):
        c = max(c, abs(f.coefficient(n)) / (divisor_count(n) * n ** ((k - 1) / 2)))
    c *= 2.0
    n0 = f.n_coeffs + 1
    log_t0 = math.log(c + 5e-324) + ((k + 1) / 2) * math.log(n0) - 2.0 * math.pi * y * n0
    ratio = ((n0 + 1) / n0) ** ((k + 1) / 2) * math.exp(-2.0 * math.pi * y)
    if ratio >= 1.0:
        raise PrecisionError("q-series does not decay at the requested height")
    t0 = math.exp(log_t0) if log_t0 > -745 else 0.0
    return t0 / (1.0 - ratio)


def _eval_grid(f: Eigenform, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """f(x + iy) on matching-shape arrays by Horner summation of the q-series."""
    q = np.exp(2j * np.pi * x - 2.0 * np.pi * y)
    acc = np.full(q.shape, f.a[-1], dtype=complex)
    for n in range(f.n_coeffs - 1, 0, -1):
        acc = acc * q + f.a[n - 1]
    return acc * q


def _quadrature_value(f: Eigenform, g: Eigenform, k: int, spec: QuadratureSpec) -> complex:
    xn, xw = np.polynomial.legendre.leggauss(spec.x_nodes)
    yn, yw = np.polynomial.legendre.leggauss(spec.y_nodes)
    xs = 0.5 * xn  # [-1/2, 1/2]
    xws = 0.5 * xw

    # box [-1/2, 1/2] x [1, y_cutoff]
    half = 0.5 * (spec.y_cutoff - 1.0)
    ys = 1.0 + half * (yn + 1.0)
    yws = half * yw
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    vals = _eval_grid(f, gx, gy) * np.conj(_eval_grid(g, gx, gy)) * gy ** (k - 2)
    box = np.einsum("i,j,ij->", xws, yws, vals)

    # arc strip: y from sqrt(1 - x^2) to 1, per x node
    lo = np.sqrt(1.0 - xs**2)
    halfs = 0.5 * (1.0 - lo)  # (nx,)
    ya = lo[:, None] + halfs[:, None] * (yn[None, :] + 1.0)  # (nx, ny)
    wa = halfs[:, None] * yw[None, :]
    xa = np.broadcast_to(xs[:, None], ya.shape)
    vals = _eval_grid(f, xa, ya) * np.conj(_eval_grid(g, xa, ya)) * ya ** (k - 2)
    arc = np.einsum("i,ij,ij->", xws, wa, vals)
    return box + arc


def _cusp_tail(f: Eigenform, g: Eigenform, k: int, y0: float) -> float:
    """Certified bound on the integral above y = y0."""
    sf = sum(abs(a) * math.exp(-2.0 * math.pi * (n - 1) * y0) for n, a in enumerate(f.a, 1))
    sg = sum(abs(a) * math.exp(-2.0 * math.pi * (n - 1) * y0) for n, a in enumerate(g.a, 1))
    gi = upper_incomplete_gamma(k - 1, 4.0 * math.pi * y0)
    return sf * sg * (4.0 * math.pi) ** (1 - k) * (gi.value + gi.abs_err)


def petersson_inner(
    f: Eigenform, g: Eigenform, spec: QuadratureSpec | None = None
) -> ValueWithError:
    """(f, g) over the fundamental domain, unnormalized measure."""
    if f.weight != g.weight:
        raise DomainError("inner product requires equal weights")
    k = f.weight
    spec = spec or default_spec(k)

    trunc_f = _series_truncation(f, _MIN_Y)
    trunc_g = _series_truncation(g, _MIN_Y)
    fmax = sum(abs(a) * math.exp(-2.0 * math.pi * n * _MIN_Y) for n, a in enumerate(f.a, 1))
    gmax = sum(abs(a) * math.exp(-2.0 * math.pi * n * _MIN_Y) for n, a in enumerate(g.a, 1))
    if trunc_f > 1e-12 * max(1.0, fmax) or trunc_g > 1e-12 * max(1.0, gmax):
        raise PrecisionError("not enough coefficients for the q-decay requirement")
    # area of F below the cutoff is < 1; y^(k-2) peaks inside the box
    trunc_err = (trunc_f * gmax + trunc_g * fmax + trunc_f * trunc_g) * (
        spec.y_cutoff ** (k - 2) + 1.0
    )

    full = _quadrature_value(f, g, k, spec)
    coarse_spec = QuadratureSpec(
        x_nodes=max(8, (2 * spec.x_nodes) // 3),
        y_nodes=max(8, (2 * spec.y_nodes) // 3),
        y_cutoff=spec.y_cutoff,
    )
    coarse = _quadrature_value(f, g, k, coarse_spec)
    quad_err = 2.0 * float(abs(full - coarse))

    tail = _cusp_tail(f, g, k, spec.y_cutoff)
    value = float(full.real)
    err = quad_err + tail + trunc_err + float(abs(full.imag)) + 1e-15 * abs(value)
    return ValueWithError(value, err)


def petersson_norm_sq(f: Eigenform, spec: QuadratureSpec | None = None) -> ValueWithError:
    """The squared Petersson norm of f."""
    return petersson_inner(f, f, spec)


@dataclass(frozen=True)
class TriangleCheck:
    """Kernel coefficient vs. spectral sum for r_k(1), with their ratio."""

    k: int
    lhs: ValueWithError  # r_k(1) from the kernel series
    rhs: ValueWithError  # sum over eigenforms of L(f, k/2) / ||f||^2
    ratio: float


def triangle_check(k: int, eps: float = 1e-10, spec: QuadratureSpec | None = None) -> TriangleCheck:
    """Compare r_k(1) against sum_f L(f, k/2) / ||f||^2.

    Both sides are carried with explicit error bounds.  The ratio is
    reported as measured; no normalization constant is absorbed.
    """
    if k % 4 != 0 or not (12 <= k <= 28):
        raise DomainError(f"triangle_check covers k ≡ 0 (mod 4), 12 <= k <= 28, got {k}")
    lhs = r_k(k, 1, eps).value
    rhs_val = 0.0
    rhs_err = 0.0
    for f, lv in central_values(k, eps):
        norm = petersson_norm_sq(f, spec)
        rhs_val += lv.value / norm.value
        rhs_err += (
            lv.abs_err / abs(norm.value)
            + abs(lv.value) * norm.abs_err / norm.value**2
        )
    rhs = ValueWithError(rhs_val, rhs_err)
    return TriangleCheck(k=k, lhs=lhs, rhs=rhs, ratio=lhs.value / rhs.value)
