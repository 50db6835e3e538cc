"""Exact truncated q-series arithmetic and Hecke eigenform extraction.

All series carry exact rational coefficients; floating conversion happens
only when eigenforms are assembled at the end.  Products truncate to the
minimum precision of their operands, never silently beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import DomainError, PrecisionError, UnsupportedError
from .ntheory import bernoulli

__all__ = [
    "QExpansion",
    "Eigenform",
    "eisenstein",
    "delta",
    "dim_cusp",
    "miller_basis",
    "hecke_matrix",
    "eigenforms",
]


@dataclass(frozen=True)
class QExpansion:
    """A truncated power series in q with exact rational coefficients."""

    weight: int
    prec: int
    coeffs: tuple[Fraction, ...]  # coefficient of q^i at index i

    def __post_init__(self):
        if self.prec < 1 or len(self.coeffs) != self.prec:
            raise ValueError("coeffs length must equal prec >= 1")

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __add__(self, other: "QExpansion") -> "QExpansion":
        if self.weight != other.weight:
            raise DomainError("cannot add q-expansions of different weights")
        n = min(self.prec, other.prec)
        return QExpansion(
            self.weight, n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n))
        )

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "QExpansion":
        c = Fraction(c)
        return QExpansion(self.weight, self.prec, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "QExpansion") -> "QExpansion":
        n = min(self.prec, other.prec)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QExpansion(self.weight + other.weight, n, tuple(out))

    def pow(self, e: int) -> "QExpansion":
        if e < 0:
            raise DomainError("negative powers are not supported")
        result = QExpansion(0, self.prec, (Fraction(1),) + (Fraction(0),) * (self.prec - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_cusp(self) -> bool:
        return self.coeffs[0] == 0


@dataclass(frozen=True)
class Eigenform:
    """A normalized Hecke eigenform: weight plus Fourier coefficients a_1..a_N."""

    weight: int
    a: tuple[float, ...]  # a[i] is a_{i+1}; a[0] == 1.0
    coefficient_field_degree: int

    def __post_init__(self):
        if not self.a or self.a[0] != 1.0:
            raise ValueError("eigenform must be normalized with a_1 = 1")

    def coefficient(self, n: int) -> float:
        """a_n for 1 <= n <= len(a)."""
        return self.a[n - 1]

    @property
    def n_coeffs(self) -> int:
        return len(self.a)


def _sigma(j: int, n: int) -> int:
    return sum(d**j for d in range(1, n + 1) if n % d == 0)


def eisenstein(k: int, prec: int) -> QExpansion:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, exact."""
    if k < 4 or k % 2:
        raise DomainError(f"eisenstein requires even k >= 4, got {k}")
    if prec < 1:
        raise DomainError("prec must be >= 1")
    c = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [c * _sigma(k - 1, n) for n in range(1, prec)]
    return QExpansion(k, prec, tuple(coeffs))


def delta(prec: int) -> QExpansion:
    """The discriminant cusp form (E4^3 - E6^2)/1728, weight 12."""
    if prec < 1:
        raise DomainError("prec must be >= 1")
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    return (e4.pow(3) - e6.pow(2)).scale(Fraction(1, 1728))


def dim_cusp(k: int) -> int:
    """dim S_k(Gamma(1)) for even k >= 0, by the classical formula."""
    if k < 0 or k % 2:
        raise DomainError(f"dim_cusp requires even k >= 0, got {k}")
    if k < 4:
        return 0
    dim_m = k // 12 + (0 if k % 12 == 2 else 1)
    return dim_m - 1


def _monomial_basis(k: int, prec: int) -> list[QExpansion]:
    """All monomials E4^a E6^b Delta^c of weight k; they span M_k."""
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    dl = delta(prec)
    out = []
    for c in range(k // 12 + 1):
        rem = k - 12 * c
        for b in range(rem // 6 + 1):
            rem2 = rem - 6 * b
            if rem2 % 4 == 0:
                out.append(e4.pow(rem2 // 4) * e6.pow(b) * dl.pow(c))
    return out


def _echelonize(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row-echelon form over the rationals."""
    rows = [row[:] for row in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows[:r]


def miller_basis(k: int, prec: int) -> list[QExpansion]:
    """The echelonized basis g_1..g_d of S_k with g_i = q^i + O(q^(d+1))."""
    if k < 4 or k % 2:
        raise DomainError(f"miller_basis requires even k >= 4, got {k}")
    d = dim_cusp(k)
    if d == 0:
        return []
    if prec <= d:
        raise PrecisionError(f"miller_basis needs prec > dim S_k = {d}, got {prec}")
    rows = [list(m.coeffs) for m in _monomial_basis(k, prec)]
    reduced = _echelonize(rows)
    basis = [row for row in reduced if row[0] == 0]
    if len(basis) != d:
        raise UnsupportedError("echelon reduction did not produce dim S_k cusp rows")
    return [QExpansion(k, prec, tuple(row)) for row in basis]


def hecke_coefficients(f: QExpansion, n: int, out_prec: int) -> list[Fraction]:
    """Coefficients 0..out_prec-1 of T_n f, weight-k level-1 action."""
    k = f.weight
    out = [Fraction(0)] * out_prec
    for m in range(1, out_prec):
        acc = Fraction(0)
        for d in range(1, math.gcd(n, m) + 1):
            if n % d or m % d:
                continue
            idx = n * m // (d * d)
            if idx >= f.prec:
                raise PrecisionError(
                    f"T_{n} needs coefficient {idx} but prec is only {f.prec}"
                )
            acc += Fraction(d) ** (k - 1) * f.coeffs[idx]
        out[m] = acc
    return out


def hecke_matrix(k: int, n: int, prec: int | None = None) -> list[list[Fraction]]:
    """The matrix of T_n on the Miller basis of S_k; column i holds T_n g_i.

    Exact rational entries.  prec defaults to the minimum n*d + 1 the
    computation needs and is rejected when too small.
    """
    if n < 2:
        raise DomainError("hecke_matrix requires n >= 2")
    d = dim_cusp(k)
    if d == 0:
        return []
    needed = n * d + 1
    if prec is None:
        prec = needed
    if prec < needed:
        raise PrecisionError(f"hecke_matrix(k={k}, n={n}) needs prec >= {needed}")
    basis = miller_basis(k, prec)
    mat = [[Fraction(0)] * d for _ in range(d)]
    for i, g in enumerate(basis):
        tg = hecke_coefficients(g, n, d + 1)
        # echelon basis: T_n g_i = sum_j tg[j] g_j exactly
        for j in range(1, d + 1):
            mat[j - 1][i] = tg[j]
    return mat


def _char_poly(mat: list[list[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial det(xI - A), monic, by Faddeev-LeVerrier.

    Returned as coefficients [c_0, ..., c_d] with c_d = 1.
    """
    d = len(mat)
    ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    m_prev = [row[:] for row in ident]
    for i in range(1, d + 1):
        am = [
            [sum(mat[r][t] * m_prev[t][c] for t in range(d)) for c in range(d)]
            for r in range(d)
        ]
        tr = sum(am[r][r] for r in range(d))
        c = -tr / i
        coeffs[d - i] = c
        m_prev = [[am[r][cc] + (c if r == cc else 0) for cc in range(d)] for r in range(d)]
    return coeffs


def hecke_char_poly(k: int, n: int = 2) -> list[Fraction]:
    """Characteristic polynomial of T_n on S_k, coefficients low to high."""
    return _char_poly(hecke_matrix(k, n)) if dim_cusp(k) else [Fraction(1)]


def eigenforms(k: int, n_coeffs: int = 60) -> list[Eigenform]:
    """All normalized Hecke eigenforms of weight k, with n_coeffs coefficients.

    Obtained by diagonalizing T_2 on the Miller basis; eigenvalue roots are
    extracted in high-precision reals and the eigen-combination is read off
    the exact basis.  Forms are ordered by increasing a_2.
    """
    if k < 12 or k % 2:
        raise DomainError(f"eigenforms requires even k >= 12, got {k}")
    d = dim_cusp(k)
    if d == 0:
        return []
    prec = max(n_coeffs + 1, 2 * d + 1)
    basis = miller_basis(k, prec)
    if d == 1:
        g = basis[0]
        return [
            Eigenform(k, tuple(float(g.coeffs[n]) for n in range(1, n_coeffs + 1)), 1)
        ]
    t2 = hecke_matrix(k, 2)
    poly = _char_poly(t2)

    with mp.workdps(60):
        roots = mp.polyroots([mp.mpf(c.numerator) / c.denominator for c in reversed(poly)],
                             maxsteps=200, extraprec=120)
        roots = sorted(roots, key=lambda r: mp.re(r))
        scale = max(abs(r) for r in roots) + 1
        for r in roots:
            if abs(mp.im(r)) > 1e-30 * scale:
                raise UnsupportedError("complex T_2 eigenvalue encountered")
        roots = [mp.re(r) for r in roots]
        for i in range(1, d):
            if abs(roots[i] - roots[i - 1]) < 1e-20 * scale:
                raise UnsupportedError("repeated T_2 eigenvalues are not supported")

        forms = []
        for lam in roots:
            # Solve (T2 - lam) w = 0 with w_1 = 1: rows 2..d determine w_2..w_d,
            # since a_1 of sum w_i g_i is w_1 by the echelon property.
            sub = mp.matrix(d - 1, d - 1)
            rhs = mp.matrix(d - 1, 1)
            for r in range(1, d):
                for c in range(1, d):
                    v = mp.mpf(t2[r][c].numerator) / t2[r][c].denominator
                    sub[r - 1, c - 1] = v - (lam if r == c else 0)
                rhs[r - 1] = -(mp.mpf(t2[r][0].numerator) / t2[r][0].denominator)
            w = mp.lu_solve(sub, rhs)
            weights = [mp.mpf(1)] + [w[i] for i in range(d - 1)]
            a = []
            for n in range(1, n_coeffs + 1):
                acc = mp.mpf(0)
                for i, g in enumerate(basis):
                    c = g.coeffs[n]
                    if c:
                        acc += weights[i] * mp.mpf(c.numerator) / c.denominator
                a.append(float(acc))
            forms.append(Eigenform(k, tuple(a), d))
    forms.sort(key=lambda f: f.coefficient(2))
    return forms
