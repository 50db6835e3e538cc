import math
from fractions import Fraction

import pytest

from ckkernel.errors import DomainError, PrecisionError
from ckkernel.ntheory import divisor_count
from ckkernel.qexpansion import (
    QExpansion,
    delta,
    dim_cusp,
    eigenforms,
    eisenstein,
    hecke_char_poly,
    hecke_matrix,
    miller_basis,
)


def eta24_coefficients(prec: int) -> list[Fraction]:
    """Independent oracle for Delta: q * prod_n (1 - q^n)^24."""
    coef = [Fraction(0)] * prec
    coef[0] = Fraction(1)
    for n in range(1, prec):
        for _ in range(24):
            new = coef[:]
            for i in range(n, prec):
                new[i] -= coef[i - n]
            coef = new
    return [Fraction(0)] + coef[: prec - 1]


def sigma(j: int, n: int) -> int:
    return sum(d**j for d in range(1, n + 1) if n % d == 0)


class TestEisenstein:
    def test_e4(self):
        e4 = eisenstein(4, 3)
        assert list(e4.coeffs) == [1, 240, 2160]

    def test_e6(self):
        e6 = eisenstein(6, 2)
        assert list(e6.coeffs) == [1, -504]

    def test_truncation_to_constant(self):
        assert list(eisenstein(4, 1).coeffs) == [1]

    def test_domain(self):
        with pytest.raises(DomainError):
            eisenstein(3, 5)
        with pytest.raises(DomainError):
            eisenstein(2, 5)


class TestDelta:
    def test_first_tau_values(self):
        d = delta(6)
        assert list(d.coeffs) == [0, 1, -24, 252, -1472, 4830]

    def test_is_cusp_form(self):
        assert delta(3).is_cusp()

    def test_eta_product_oracle(self):
        prec = 40
        assert list(delta(prec).coeffs) == eta24_coefficients(prec)

    def test_ramanujan_congruence(self):
        d = delta(31)
        for n in range(1, 31):
            assert (d[n] - sigma(11, n)) % 691 == 0


class TestDimCusp:
    def test_known_values(self):
        assert dim_cusp(12) == 1
        assert dim_cusp(24) == 2
        assert dim_cusp(10) == 0
        assert dim_cusp(14) == 0  # 14 ≡ 2 (mod 12): only the Eisenstein series

    def test_matches_miller_basis_length(self):
        for k in range(4, 61, 2):
            d = dim_cusp(k)
            assert len(miller_basis(k, d + 2)) == d

    def test_odd_rejected(self):
        with pytest.raises(DomainError):
            dim_cusp(13)


class TestMillerBasis:
    def test_weight_12(self):
        (g,) = miller_basis(12, 8)
        assert list(g.coeffs) == list(delta(8).coeffs)

    def test_weight_24_echelon(self):
        g1, g2 = miller_basis(24, 6)
        assert (g1[0], g1[1], g1[2]) == (0, 1, 0)
        assert (g2[0], g2[1], g2[2]) == (0, 0, 1)

    def test_echelon_property_larger_weights(self):
        for k in (28, 36, 40):
            basis = miller_basis(k, dim_cusp(k) + 3)
            for i, g in enumerate(basis, 1):
                for j in range(1, len(basis) + 1):
                    assert g[j] == (1 if i == j else 0)

    def test_insufficient_prec_rejected(self):
        with pytest.raises(PrecisionError):
            miller_basis(24, 2)


class TestHeckeMatrix:
    def test_t2_on_delta(self):
        assert hecke_matrix(12, 2) == [[Fraction(-24)]]

    def test_t6_multiplicativity(self):
        assert hecke_matrix(12, 6) == [[Fraction(-6048)]]
        assert Fraction(-6048) == Fraction(-24) * Fraction(252)

    def test_s24_char_poly(self):
        mat = hecke_matrix(24, 2)
        assert mat[0][0] + mat[1][1] == 1080
        assert hecke_char_poly(24) == [Fraction(-20468736), Fraction(-1080), Fraction(1)]

    def test_insufficient_prec_rejected(self):
        with pytest.raises(PrecisionError):
            hecke_matrix(24, 2, prec=3)

    def test_commutativity(self):
        for k in (24, 28, 36):
            t2 = hecke_matrix(k, 2)
            t3 = hecke_matrix(k, 3)
            d = len(t2)
            prod = lambda a, b: [
                [sum(a[i][t] * b[t][j] for t in range(d)) for j in range(d)]
                for i in range(d)
            ]
            assert prod(t2, t3) == prod(t3, t2)


class TestEigenforms:
    def test_delta_coefficients(self):
        (f,) = eigenforms(12, 5)
        assert f.a == (1.0, -24.0, 252.0, -1472.0, 4830.0)
        assert f.coefficient_field_degree == 1

    def test_weight_24_eigenvalues(self):
        f1, f2 = eigenforms(24, 10)
        r = 12 * math.sqrt(144169)
        assert f1.coefficient(2) == pytest.approx(540 - r, rel=1e-12)
        assert f2.coefficient(2) == pytest.approx(540 + r, rel=1e-12)

    def test_hecke_relation_at_two(self):
        for k in (12, 16, 24, 28, 36, 40):
            for f in eigenforms(k, 10):
                lhs = f.coefficient(4)
                rhs = f.coefficient(2) ** 2 - 2 ** (k - 1)
                assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_prime_square_recursion(self):
        for k in (24, 36):
            for f in eigenforms(k, 30):
                for p in (2, 3, 5):
                    lhs = f.coefficient(p * p)
                    rhs = f.coefficient(p) ** 2 - p ** (k - 1)
                    assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_multiplicativity(self):
        for f in eigenforms(28, 40):
            for m, n in ((2, 3), (3, 4), (2, 9), (5, 7), (4, 9)):
                assert f.coefficient(m * n) == pytest.approx(
                    f.coefficient(m) * f.coefficient(n), rel=1e-9
                )

    def test_count_matches_dimension(self):
        for k in (12, 14, 24, 36, 40):
            if dim_cusp(k) == 0:
                assert eigenforms(k, 10) == [] if k >= 12 else True
            else:
                assert len(eigenforms(k, 10)) == dim_cusp(k)

    def test_deligne_bound_holds_empirically(self):
        for f in eigenforms(24, 60):
            for n in range(1, 61):
                assert abs(f.coefficient(n)) <= 1.000001 * divisor_count(n) * n ** (
                    (f.weight - 1) / 2
                )
